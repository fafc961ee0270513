#pragma once

#include <complex>
#include <string>

#include "json.hpp"
#include "stabgem/entanglement.hpp"

namespace stabgem {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

ordered_json to_json(const Pauli& p);
ordered_json to_json(std::complex<double> z);
ordered_json region_json(const BitVec& region);
ordered_json to_json(const MeshSpec& m);
ordered_json to_json(const MeshLogicalReport& r);
ordered_json to_json(const BraidingTriple& t);
ordered_json to_json(const ExchangeTriple& t);
ordered_json to_json(const GemCertificate& c);
ordered_json to_json(const SequentialResult& r);
ordered_json to_json(const E0Bruteforce& r);
ordered_json to_json(const AscentResult& r);
ordered_json to_json(const CircuitAscentResult& r);
ordered_json to_json(const SyndromeDistribution& d);

// json | csv (flattened scalars, arrays reported by length) | md
std::string render_report(const ordered_json& body, const std::string& format);

// empty out_path writes to stdout; reports carry no timestamps so identical
// runs produce identical bytes
void emit_report(const ordered_json& body, const std::string& format, const std::string& out_path);

}  // namespace stabgem
