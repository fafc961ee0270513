#include "stabgem/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "stabgem/errors.hpp"

namespace stabgem {

ordered_json to_json(const Pauli& p) { return p.str(); }

ordered_json to_json(std::complex<double> z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json region_json(const BitVec& region) {
  ordered_json arr = ordered_json::array();
  for (std::uint32_t q : region.ones()) arr.push_back(q);
  return arr;
}

ordered_json to_json(const MeshSpec& m) {
  return ordered_json{{"ox", m.ox}, {"oy", m.oy}, {"hole", m.hole}, {"band", m.band}};
}

ordered_json to_json(const MeshLogicalReport& r) {
  ordered_json squares = ordered_json::array();
  for (std::size_t i = 0; i < r.squares.size(); ++i) {
    const CrossSquare& s = r.squares[i];
    squares.push_back(ordered_json{{"u0", s.u0},
                                   {"v0", s.v0},
                                   {"band", s.band},
                                   {"kind", s.kind},
                                   {"col", s.col},
                                   {"row", s.row},
                                   {"anticommutes", (bool)r.square_anticommutes[i]}});
  }
  return ordered_json{{"l1", to_json(r.l1)},
                      {"l2", to_json(r.l2)},
                      {"mesh1", to_json(r.spec1)},
                      {"mesh2", to_json(r.spec2)},
                      {"squares", squares},
                      {"crossing", ordered_json{{"u0", r.Q.u0}, {"v0", r.Q.v0}, {"band", r.Q.band},
                                                {"kind", r.Q.kind}}},
                      {"crossing_region", region_json(r.q_region)}};
}

ordered_json to_json(const BraidingTriple& t) {
  ordered_json prov = ordered_json::array();
  for (const std::string& s : t.provenance) prov.push_back(s);
  return ordered_json{{"gamma1", to_json(t.gamma1)},
                      {"gamma2", to_json(t.gamma2)},
                      {"gamma2_prime", to_json(t.gamma2p)},
                      {"crossing_region", region_json(t.q_region)},
                      {"up_region", region_json(t.qup_region)},
                      {"up_prime_region", region_json(t.qup_prime_region)},
                      {"reflected", t.reflected},
                      {"provenance", prov}};
}

ordered_json to_json(const ExchangeTriple& t) {
  return ordered_json{{"m1", to_json(t.m1)},
                      {"m2", to_json(t.m2)},
                      {"m3", to_json(t.m3)},
                      {"junction", t.junction},
                      {"endpoint_a", region_json(t.endpoint_a)},
                      {"endpoint_b", region_json(t.endpoint_b)},
                      {"endpoint_c", region_json(t.endpoint_c)},
                      {"endpoint_d", region_json(t.endpoint_d)}};
}

ordered_json to_json(const GemCertificate& c) {
  ordered_json patches = ordered_json::array();
  for (const BitVec& p : c.patches) patches.push_back(region_json(p));
  ordered_json witnesses = ordered_json::array();
  for (const PatchWitness& w : c.witnesses) {
    ordered_json opens = ordered_json::array();
    for (const Pauli& o : w.opens) opens.push_back(to_json(o));
    witnesses.push_back(ordered_json{{"patch", w.patch_index},
                                     {"loop", to_json(w.loop)},
                                     {"opens", opens},
                                     {"phase", to_json(w.phase)}});
  }
  ordered_json prov = ordered_json::array();
  for (const std::string& s : c.provenance) prov.push_back(s);
  ordered_json out{{"t", c.t},
                   {"epsilon", c.epsilon},
                   {"epsilon_prime", c.epsilon_prime},
                   {"m", c.m},
                   {"bound_bits", c.bound_bits},
                   {"alpha_effective", c.alpha_effective},
                   {"patches", patches},
                   {"witnesses", witnesses},
                   {"provenance", prov}};
  if (c.m_target > 0.0) out["m_target"] = c.m_target;
  return out;
}

ordered_json to_json(const SequentialResult& r) {
  return ordered_json{{"product", r.product},
                      {"patch_fidelity", r.patch_fidelity},
                      {"step_probs", r.step_probs}};
}

ordered_json to_json(const E0Bruteforce& r) {
  return ordered_json{{"bits", r.bits},
                      {"overlap", r.overlap},
                      {"letters", r.letters},
                      {"signs", r.signs}};
}

ordered_json to_json(const AscentResult& r) {
  ordered_json witness = ordered_json::array();
  for (const auto& site : r.witness)
    witness.push_back(ordered_json::array({to_json(site[0]), to_json(site[1])}));
  return ordered_json{{"bits", r.bits},
                      {"best_overlap", r.best_overlap},
                      {"restart_overlaps", r.restart_overlaps},
                      {"witness", witness}};
}

ordered_json to_json(const CircuitAscentResult& r) {
  ordered_json layers = ordered_json::array();
  for (const auto& layer : r.layers) {
    ordered_json gates = ordered_json::array();
    for (const NumericGate& g : layer) {
      ordered_json u = ordered_json::array();
      for (const auto& entry : g.u) u.push_back(to_json(entry));
      gates.push_back(ordered_json{{"a", g.a}, {"b", g.b}, {"u", u}});
    }
    layers.push_back(gates);
  }
  return ordered_json{
      {"t", r.t}, {"bits", r.bits}, {"overlap", r.overlap}, {"layers", layers}};
}

ordered_json to_json(const SyndromeDistribution& d) {
  ordered_json support = ordered_json::array();
  for (const auto& [pattern, prob] : d.support) {
    std::string key;
    for (int s : pattern) key += s ? '-' : '+';
    support.push_back(ordered_json{{"pattern", key}, {"prob", prob}});
  }
  return ordered_json{{"support", support}, {"all_plus_mass", d.all_plus_mass}};
}

namespace {

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    out.push_back({prefix + ".count", std::to_string(j.size())});
  } else {
    out.push_back({prefix, j.dump()});
  }
}

std::string render_csv(const ordered_json& body) {
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(body, "", cells);
  std::ostringstream hdr, row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) {
      hdr << ",";
      row << ",";
    }
    hdr << cells[i].first;
    std::string v = cells[i].second;
    // commas inside string leaves would break the row; dump() already quotes
    // strings, so only bare scalars are left as-is
    row << v;
  }
  return hdr.str() + "\n" + row.str() + "\n";
}

std::string render_md(const ordered_json& body) {
  std::ostringstream os;
  os << "# stabgem report\n";
  for (const auto& [k, v] : body.items()) {
    os << "\n## " << k << "\n\n";
    if (v.is_primitive())
      os << v.dump() << "\n";
    else
      os << "```json\n" << v.dump(2) << "\n```\n";
  }
  return os.str();
}

}  // namespace

std::string render_report(const ordered_json& body, const std::string& format) {
  if (format == "json") return body.dump(2) + "\n";
  if (format == "csv") return render_csv(body);
  if (format == "md") return render_md(body);
  throw ConfigError("unknown report format '" + format + "', expected json, csv or md");
}

void emit_report(const ordered_json& body, const std::string& format,
                 const std::string& out_path) {
  std::string text = render_report(body, format);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot open output file " + out_path);
  f << text;
}

}  // namespace stabgem
