#include "stabgem/codes.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <utility>

#include "json.hpp"
#include "stabgem/errors.hpp"

namespace stabgem {

using ordered_json = nlohmann::ordered_json;

double MixedStabilizerState::purity() const {
  return std::ldexp(1.0, (int)group.rank() - (int)group.n());
}

namespace {

double support_diameter(const Layout& lay, const Pauli& p) {
  auto s = p.support();
  double best = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) best = std::max(best, lay.dist(s[i], s[j]));
  return best;
}

}  // namespace

StabilizerCode finish_code(std::string name, std::size_t n, std::vector<Pauli> gens, Layout lay) {
  if (lay.size() != n) throw ConfigError("layout size does not match qubit count");
  StabilizerCode c;
  c.n = n;
  c.name = std::move(name);
  c.generators = std::move(gens);
  c.layout = std::move(lay);
  c.group = PauliGroup::from_generators(c.generators, true, true);
  c.params.k = n - c.group.rank();
  for (const Pauli& g : c.generators)
    c.params.w = std::max(c.params.w, support_diameter(c.layout, g));
  return c;
}

StabilizerCode make_toric(long L) {
  if (L < 2) throw ConfigError("toric code needs L >= 2");
  std::size_t n = (std::size_t)(2 * L * L);
  auto hid = [&](long i, long j) {
    return (std::size_t)(((j % L + L) % L) * L + ((i % L + L) % L));
  };
  auto vid = [&](long i, long j) { return (std::size_t)(L * L) + hid(i, j); };

  Layout lay;
  lay.pos.resize(n);
  lay.period_x = lay.period_y = 2.0 * (double)L;
  for (long j = 0; j < L; ++j)
    for (long i = 0; i < L; ++i) {
      lay.pos[hid(i, j)] = {2.0 * i + 1.0, 2.0 * j};
      lay.pos[vid(i, j)] = {2.0 * i, 2.0 * j + 1.0};
    }

  std::vector<Pauli> gens;
  gens.reserve(n);
  for (long j = 0; j < L; ++j)
    for (long i = 0; i < L; ++i) {
      Pauli star(n);
      star.xbits().set(hid(i, j));
      star.xbits().set(hid(i - 1, j));
      star.xbits().set(vid(i, j));
      star.xbits().set(vid(i, j - 1));
      gens.push_back(star);
    }
  for (long j = 0; j < L; ++j)
    for (long i = 0; i < L; ++i) {
      // plaquette with lower-left vertex (2i,2j), center (2i+1,2j+1)
      Pauli plaq(n);
      plaq.zbits().set(hid(i, j));
      plaq.zbits().set(hid(i, j + 1));
      plaq.zbits().set(vid(i, j));
      plaq.zbits().set(vid(i + 1, j));
      gens.push_back(plaq);
    }
  StabilizerCode c = finish_code("toric", n, std::move(gens), std::move(lay));
  c.params.d = L;
  c.params.d_provenance = "family";
  return c;
}

StabilizerCode make_honeycomb_fermion(long Lx, long Ly) {
  if (Lx < 2 || Ly < 2 || Lx % 2 || Ly % 2)
    throw ConfigError("honeycomb needs even torus dimensions, both >= 2");
  std::size_t n = (std::size_t)(Lx * Ly);
  auto qid = [&](long x, long y) {
    return (std::size_t)(((y % Ly + Ly) % Ly) * Lx + ((x % Lx + Lx) % Lx));
  };

  Layout lay;
  lay.pos.resize(n);
  lay.period_x = 2.0 * (double)Lx;
  lay.period_y = 2.0 * (double)Ly;
  for (long y = 0; y < Ly; ++y)
    for (long x = 0; x < Lx; ++x) lay.pos[qid(x, y)] = {2.0 * x, 2.0 * y};

  /* One generator per brick.  A brick anchored at (x0,y), with (x0+y) even,
   * has rungs on its left and right columns; the six letters are fixed by the
   * requirement that the generator equals the product of its boundary
   * two-body link operators. */
  std::vector<Pauli> gens;
  gens.reserve(n / 2);
  for (long y = 0; y < Ly; ++y)
    for (long x0 = (y % 2 == 0) ? 0 : 1; x0 < Lx; x0 += 2) {
      Pauli hex(n);
      hex.set_letter(qid(x0, y), 'Y');
      hex.set_letter(qid(x0 + 1, y), 'Z');
      hex.set_letter(qid(x0 + 2, y), 'X');
      hex.set_letter(qid(x0, y + 1), 'X');
      hex.set_letter(qid(x0 + 1, y + 1), 'Z');
      hex.set_letter(qid(x0 + 2, y + 1), 'Y');
      hex.set_phase_exp((std::uint8_t)(hex.xbits().and_count(hex.zbits()) & 3));
      gens.push_back(hex);
    }
  StabilizerCode c = finish_code("honeycomb", n, std::move(gens), std::move(lay));
  c.params.d = 2;
  c.params.d_provenance = "family";
  return c;
}

StabilizerCode make_ghz_state(std::size_t n) {
  if (n < 2) throw ConfigError("ghz needs n >= 2");
  Layout lay;
  lay.pos.resize(n);
  for (std::size_t q = 0; q < n; ++q) lay.pos[q] = {2.0 * (double)q, 0.0};

  std::vector<Pauli> gens;
  for (std::size_t q = 0; q + 1 < n; ++q) {
    Pauli zz(n);
    zz.zbits().set(q);
    zz.zbits().set(q + 1);
    gens.push_back(zz);
  }
  Pauli xall(n);
  for (std::size_t q = 0; q < n; ++q) xall.xbits().set(q);
  gens.push_back(xall);
  return finish_code("ghz", n, std::move(gens), std::move(lay));
}

MixedStabilizerState symmetric_mixed_state(const StabilizerCode& code) {
  return MixedStabilizerState{code.group};
}

MixedStabilizerState code_state(const StabilizerCode& code, std::uint64_t seed) {
  std::size_t n = code.n;
  std::size_t r = code.group.rank();

  // words commuting with every row: right nullspace of the [z|x] matrix,
  // taken via the transpose
  std::vector<BitVec> cols(2 * n, BitVec(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Pauli& g = code.group.rows()[i];
    for (std::uint32_t b : g.zbits().ones()) cols[b].set(i);
    for (std::uint32_t b : g.xbits().ones()) cols[n + b].set(i);
  }
  std::vector<BitVec> central = gf2_left_nullspace(cols);

  std::mt19937_64 rng(seed);
  std::vector<Pauli> ext = code.group.rows();
  std::vector<BitVec> words;  // echelon of the words already in ext
  words.reserve(n);
  auto word_of = [&](const Pauli& p) {
    BitVec w(2 * n);
    for (std::uint32_t b : p.xbits().ones()) w.set(b);
    for (std::uint32_t b : p.zbits().ones()) w.set(n + b);
    return w;
  };
  // words stays sorted by ascending lowest set bit, so one pass reduces fully
  auto reduce_word = [&](BitVec w) {
    for (const BitVec& e : words) {
      if (w.none()) break;
      if (w.test(e.find_first())) w ^= e;
    }
    return w;
  };
  auto add_word = [&](const BitVec& w) {
    BitVec red = reduce_word(w);
    if (red.none()) throw Error("dependent word in code word completion");  // cannot happen
    std::size_t pv = red.find_first();
    auto it = words.begin();
    while (it != words.end() && it->find_first() < pv) ++it;
    words.insert(it, std::move(red));
  };
  for (const Pauli& g : ext) add_word(word_of(g));

  for (const BitVec& v : central) {
    if (ext.size() == n) break;
    Pauli cand(n);
    for (std::size_t q = 0; q < n; ++q) {
      if (v.test(q)) cand.xbits().set(q);
      if (v.test(n + q)) cand.zbits().set(q);
    }
    cand.set_phase_exp((std::uint8_t)(cand.xbits().and_count(cand.zbits()) & 3));
    if (reduce_word(word_of(cand)).none()) continue;
    bool ok = true;
    for (std::size_t i = r; i < ext.size() && ok; ++i) ok = cand.commutes(ext[i]);
    if (!ok) continue;
    if (seed != 0 && (rng() & 1)) cand.set_phase_exp((std::uint8_t)((cand.phase_exp() + 2) & 3));
    add_word(word_of(cand));
    ext.push_back(cand);
  }
  if (ext.size() != n)
    throw Error("code word completion fell short of full rank");  // cannot happen
  return MixedStabilizerState{PauliGroup::from_generators(ext, true, true)};
}

namespace {

void fail_load(const std::string& path, const std::string& what) {
  throw InputError("code file " + path + ": " + what);
}

}  // namespace

StabilizerCode load_code(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open code file " + path);
  ordered_json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    fail_load(path, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail_load(path, "top level must be an object");
  if (j.value("version", 0) != 1) fail_load(path, "unsupported version");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) fail_load(path, "missing qubit count");
  std::size_t n = j["n"].get<std::size_t>();
  if (n == 0) fail_load(path, "qubit count must be positive");

  Layout lay;
  lay.pos.assign(n, Vec2{});
  if (!j.contains("qubits") || !j["qubits"].is_array() || j["qubits"].size() != n)
    fail_load(path, "qubits must list exactly n entries");
  std::vector<char> seen(n, 0);
  for (const auto& q : j["qubits"]) {
    if (!q.contains("id") || !q["id"].is_number_unsigned()) fail_load(path, "qubit without id");
    std::size_t id = q["id"].get<std::size_t>();
    if (id >= n) fail_load(path, "qubit id " + std::to_string(id) + " out of range");
    if (seen[id]) fail_load(path, "duplicate qubit id " + std::to_string(id));
    seen[id] = 1;
    lay.pos[id] = {q.value("x", 0.0), q.value("y", 0.0)};
  }
  if (j.contains("periods") && !j["periods"].is_null()) {
    if (!j["periods"].is_array() || j["periods"].size() != 2)
      fail_load(path, "periods must be null or [px, py]");
    lay.period_x = j["periods"][0].get<double>();
    lay.period_y = j["periods"][1].get<double>();
    if (lay.period_x < 0 || lay.period_y < 0) fail_load(path, "periods must be nonnegative");
  }

  if (!j.contains("generators") || !j["generators"].is_array())
    fail_load(path, "missing generators");
  std::vector<Pauli> gens;
  gens.reserve(j["generators"].size());
  for (std::size_t gi = 0; gi < j["generators"].size(); ++gi) {
    const auto& e = j["generators"][gi];
    std::string word = e.value("pauli", "");
    std::string sign = e.value("sign", "+1");
    if (word.size() != n)
      fail_load(path, "generator " + std::to_string(gi) + " has wrong string length");
    if (sign != "+1" && sign != "-1")
      fail_load(path, "generator " + std::to_string(gi) + " has sign other than +1/-1");
    try {
      gens.push_back(Pauli::from_letters(word, sign == "+1" ? 1 : -1));
    } catch (const std::exception& e2) {
      fail_load(path, "generator " + std::to_string(gi) + ": " + e2.what());
    }
  }
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (gens[a].anticommutes(gens[b]))
        fail_load(path, "generators " + std::to_string(a) + " and " + std::to_string(b) +
                            " anticommute");

  std::string name = "file";
  std::optional<long> d;
  std::string dprov;
  if (j.contains("metadata") && j["metadata"].is_object()) {
    const auto& m = j["metadata"];
    name = m.value("name", name);
    if (m.contains("d") && m["d"].is_number_integer()) {
      d = m["d"].get<long>();
      dprov = m.value("d_provenance", "declared");
    }
  }
  StabilizerCode c = finish_code(name, n, std::move(gens), std::move(lay));
  c.params.d = d;
  c.params.d_provenance = dprov;
  return c;
}

void save_code(const StabilizerCode& code, const std::string& path) {
  ordered_json j;
  j["version"] = 1;
  j["n"] = code.n;
  ordered_json qs = ordered_json::array();
  for (std::size_t q = 0; q < code.n; ++q)
    qs.push_back({{"id", q}, {"x", code.layout.pos[q].x}, {"y", code.layout.pos[q].y}});
  j["qubits"] = std::move(qs);
  if (code.layout.periodic())
    j["periods"] = {code.layout.period_x, code.layout.period_y};
  else
    j["periods"] = nullptr;
  ordered_json gs = ordered_json::array();
  for (const Pauli& g : code.generators) {
    if (!g.is_hermitian()) throw InputError("generator is not a signed letter word");
    std::string s = g.str();  // "+LETTERS" or "-LETTERS" for Hermitian words
    gs.push_back({{"pauli", s.substr(1)}, {"sign", g.sign() == 1 ? "+1" : "-1"}});
  }
  j["generators"] = std::move(gs);
  ordered_json meta;
  meta["name"] = code.name;
  if (code.params.d) {
    meta["d"] = *code.params.d;
    meta["d_provenance"] = code.params.d_provenance;
  }
  j["metadata"] = std::move(meta);

  std::ofstream f(path);
  if (!f) throw InputError("cannot write code file " + path);
  f << j.dump(2) << "\n";
}

}  // namespace stabgem
