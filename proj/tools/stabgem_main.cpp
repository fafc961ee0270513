/* Command line front end.  Each subcommand assembles one JSON report body,
 * stamps provenance (tool, version, argv, seed, jobs, kernel variant) and
 * hands it to emit_report.  Reports carry no timestamps, so the same flags
 * and seed always produce the same bytes.
 *
 * Exit codes: 0 success; 2 input, config or capability errors; 3 when a
 * construction, feasibility or certificate check fails; 1 for internal
 * invariant violations (bugs). */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stabgem/clifford.hpp"
#include "stabgem/codes.hpp"
#include "stabgem/entanglement.hpp"
#include "stabgem/errors.hpp"
#include "stabgem/kernels.hpp"
#include "stabgem/logical.hpp"
#include "stabgem/oracle.hpp"
#include "stabgem/report.hpp"
#include "stabgem/statistics.hpp"
#include "stabgem/synthesis.hpp"

using namespace stabgem;

namespace {

struct GlobalOpts {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  int jobs = 1;  // echoed in provenance; evaluation is single threaded
  std::string argv_line;
};

struct CodeOpts {
  std::string family;
  std::string in_path;
  long L = 0;
  long Lx = 0, Ly = 0;
  long n = 0;
};

void add_code_opts(CLI::App* cmd, CodeOpts& c) {
  cmd->add_option("--code", c.family, "built-in family: toric | honeycomb | ghz");
  cmd->add_option("--in", c.in_path, "code description file (overrides --code)");
  cmd->add_option("--L", c.L, "toric linear size");
  cmd->add_option("--Lx", c.Lx, "honeycomb width in vertices (even)");
  cmd->add_option("--Ly", c.Ly, "honeycomb height in vertices (even)");
  cmd->add_option("--n", c.n, "ghz qubit count");
}

StabilizerCode make_code(const CodeOpts& c) {
  if (!c.in_path.empty()) return load_code(c.in_path);
  if (c.family == "toric") {
    if (c.L <= 0) throw ConfigError("toric needs --L");
    return make_toric(c.L);
  }
  if (c.family == "honeycomb") {
    if (c.Lx <= 0 || c.Ly <= 0) throw ConfigError("honeycomb needs --Lx and --Ly");
    return make_honeycomb_fermion(c.Lx, c.Ly);
  }
  if (c.family == "ghz") {
    if (c.n <= 0) throw ConfigError("ghz needs --n");
    return make_ghz_state((std::size_t)c.n);
  }
  if (c.family.empty())
    throw ConfigError("pick a code with --in FILE or --code toric|honeycomb|ghz");
  throw ConfigError("unknown code family '" + c.family + "'");
}

ordered_json code_opts_json(const CodeOpts& c) {
  ordered_json j;
  if (!c.in_path.empty()) {
    j["in"] = c.in_path;
    return j;
  }
  j["code"] = c.family;
  if (c.L) j["L"] = c.L;
  if (c.Lx) j["Lx"] = c.Lx;
  if (c.Ly) j["Ly"] = c.Ly;
  if (c.n) j["n"] = c.n;
  return j;
}

ordered_json code_summary(const StabilizerCode& code) {
  ordered_json j;
  j["name"] = code.name;
  j["n"] = code.n;
  j["k"] = code.params.k;
  if (code.params.d)
    j["d"] = *code.params.d;
  else
    j["d"] = nullptr;
  j["d_provenance"] = code.params.d_provenance;
  j["w"] = code.params.w;
  j["generators"] = code.generators.size();
  j["rank"] = code.group.rank();
  j["period_x"] = code.layout.period_x;
  j["period_y"] = code.layout.period_y;
  return j;
}

ordered_json make_body(const GlobalOpts& g, const std::string& command, ordered_json params) {
  ordered_json body;
  body["command"] = command;
  ordered_json prov;
  prov["tool"] = "stabgem";
  prov["version"] = kToolVersion;
  prov["argv"] = g.argv_line;
  prov["seed"] = g.seed;
  prov["jobs"] = g.jobs;
  prov["kernels"] = kern::active().name;
  prov["params"] = std::move(params);
  body["provenance"] = std::move(prov);
  return body;
}

void emit(const GlobalOpts& g, const ordered_json& body) { emit_report(body, g.format, g.out); }

MixedStabilizerState zero_product_state(std::size_t n) {
  std::vector<Pauli> gens;
  gens.reserve(n);
  for (std::size_t q = 0; q < n; ++q) gens.push_back(Pauli::single(n, q, 'Z'));
  return MixedStabilizerState{PauliGroup::from_generators(gens, true, true)};
}

MixedStabilizerState random_product_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  static const char letters[3] = {'X', 'Y', 'Z'};
  std::vector<Pauli> gens;
  gens.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    Pauli p = Pauli::single(n, q, letters[rng() % 3]);
    if (rng() & 1) p.set_phase_exp((std::uint8_t)(p.phase_exp() + 2));
    gens.push_back(p);
  }
  return MixedStabilizerState{PauliGroup::from_generators(gens, true, true)};
}

MixedStabilizerState pick_state(const StabilizerCode& code, const std::string& kind,
                                std::uint64_t seed) {
  if (kind == "codeword") return code_state(code, seed);
  if (kind == "mixed") return symmetric_mixed_state(code);
  if (kind == "zero") return zero_product_state(code.n);
  throw ConfigError("unknown --state '" + kind + "' (codeword | mixed | zero)");
}

Vec2 layout_center(const Layout& lay) {
  if (lay.periodic()) return {lay.period_x / 2.0, lay.period_y / 2.0};
  Vec2 lo = lay.pos.empty() ? Vec2{} : lay.pos[0], hi = lo;
  for (const Vec2& p : lay.pos) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {(lo.x + hi.x) / 2.0, (lo.y + hi.y) / 2.0};
}

// -------- subcommand bodies --------

void run_code_build(const GlobalOpts& g, const CodeOpts& co) {
  if (g.out.empty()) throw ConfigError("code build writes a file; pass --out FILE");
  StabilizerCode code = make_code(co);
  save_code(code, g.out);
}

void run_code_info(const GlobalOpts& g, const CodeOpts& co) {
  StabilizerCode code = make_code(co);
  ordered_json body = make_body(g, "code info", code_opts_json(co));
  body["code"] = code_summary(code);
  emit(g, body);
}

void run_code_check(const GlobalOpts& g, const CodeOpts& co) {
  // construction already verifies commutation, sign consistency and layout
  // coverage; reaching the report means the description is usable
  StabilizerCode code = make_code(co);
  ordered_json body = make_body(g, "code check", code_opts_json(co));
  body["ok"] = true;
  body["code"] = code_summary(code);
  emit(g, body);
}

void run_distance(const GlobalOpts& g, const CodeOpts& co, long max_weight) {
  StabilizerCode code = make_code(co);
  ordered_json params = code_opts_json(co);
  params["max_weight"] = max_weight;
  ordered_json body = make_body(g, "analyze distance", std::move(params));
  std::optional<long> d = distance_bruteforce(code, max_weight);
  body["max_weight"] = max_weight;
  if (d)
    body["distance"] = *d;
  else
    body["distance"] = nullptr;
  if (code.params.d) body["declared_d"] = *code.params.d;
  emit(g, body);
}

void run_correctable(const GlobalOpts& g, const CodeOpts& co, const std::vector<double>& disk,
                     const std::vector<double>& rect) {
  StabilizerCode code = make_code(co);
  if (disk.empty() == rect.empty())
    throw ConfigError("pass exactly one of --disk CX CY R or --rect X Y W H");
  BitVec region = disk.empty()
                      ? rect_region(code.layout, {rect[0], rect[1]}, {rect[2], rect[3]})
                      : disk_region(code.layout, {disk[0], disk[1]}, disk[2]);
  ordered_json params = code_opts_json(co);
  if (!disk.empty()) params["disk"] = disk;
  if (!rect.empty()) params["rect"] = rect;
  ordered_json body = make_body(g, "analyze correctable", std::move(params));
  body["region"] = region_json(region);
  body["region_size"] = region.count();
  body["correctable"] = is_correctable(code, region);
  emit(g, body);
}

void run_mesh(const GlobalOpts& g, const CodeOpts& co, long t) {
  StabilizerCode code = make_code(co);
  auto [m1, m2] = default_mesh_specs(code, t);
  MeshLogicalReport rep = mesh_logicals(code, m1, m2);
  ordered_json params = code_opts_json(co);
  params["t"] = t;
  ordered_json body = make_body(g, "analyze mesh", std::move(params));
  body["t"] = t;
  body["mesh"] = to_json(rep);
  emit(g, body);
}

void run_braiding(const GlobalOpts& g, const CodeOpts& co, long t) {
  StabilizerCode code = make_code(co);
  auto [m1, m2] = default_mesh_specs(code, t);
  MeshLogicalReport rep = mesh_logicals(code, m1, m2);
  DeformedSpecs def = default_deformed_specs(code, rep);
  BraidingTriple triple = build_braiding_triple(code, rep, def);
  MixedStabilizerState state{code.group};
  ordered_json params = code_opts_json(co);
  params["t"] = t;
  ordered_json body = make_body(g, "analyze braiding", std::move(params));
  body["t"] = t;
  body["mesh"] = to_json(rep);
  body["deformed"] = {{"b1p", to_json(def.b1p)},
                      {"b2p_up", to_json(def.b2p_up)},
                      {"b2p_down", to_json(def.b2p_down)}};
  body["triple"] = to_json(triple);
  body["phase_gamma2"] = to_json(braiding_phase(state, triple.gamma2, triple.gamma1));
  body["phase_gamma2p"] = to_json(braiding_phase(state, triple.gamma2p, triple.gamma1));
  emit(g, body);
}

void run_exchange(const GlobalOpts& g, const CodeOpts& co, const std::vector<double>& near) {
  StabilizerCode code = make_code(co);
  Vec2 at = near.empty() ? layout_center(code.layout) : Vec2{near[0], near[1]};
  ExchangeTriple triple = canonical_exchange_triple(code, at);
  MixedStabilizerState state{code.group};
  ordered_json params = code_opts_json(co);
  params["near"] = {at.x, at.y};
  ordered_json body = make_body(g, "analyze exchange", std::move(params));
  body["triple"] = to_json(triple);
  body["phase"] = to_json(exchange_phase(state, triple));
  emit(g, body);
}

void run_e0(const GlobalOpts& g, const CodeOpts& co, const std::string& state_kind,
            bool oracle_check) {
  StabilizerCode code = make_code(co);
  MixedStabilizerState state = pick_state(code, state_kind, g.seed);
  E0Bruteforce best = e0_product_pauli_bruteforce(state);
  ordered_json params = code_opts_json(co);
  params["state"] = state_kind;
  ordered_json body = make_body(g, "gem e0", std::move(params));
  body["e0"] = to_json(best);
  if (oracle_check) {
    // rebuild the winning product state as its own stabilizer group and
    // compare overlaps through the dense simulator
    std::vector<Pauli> gens;
    for (std::size_t q = 0; q < code.n; ++q) {
      Pauli p = Pauli::single(code.n, q, best.letters[q]);
      if (best.signs[q] == '-') p.set_phase_exp((std::uint8_t)(p.phase_exp() + 2));
      gens.push_back(p);
    }
    PauliGroup wg = PauliGroup::from_generators(gens, true, true);
    DenseState w = DenseState::from_stabilizer(wg);
    double dense;
    if (state.pure()) {
      std::complex<double> ov = DenseState::from_stabilizer(state.group).inner(w);
      dense = std::norm(ov);
    } else {
      dense = DenseMatrix::from_stabilizer(state.group).fidelity(DenseMatrix::pure(w));
    }
    body["oracle"] = {{"dense_overlap", dense}, {"deviation", std::abs(dense - best.overlap)}};
  }
  emit(g, body);
}

void run_ascend(const GlobalOpts& g, const CodeOpts& co, const std::string& state_kind, int t,
                int restarts, int iters, int sweeps, double tol) {
  StabilizerCode code = make_code(co);
  MixedStabilizerState state = pick_state(code, state_kind, g.seed);
  DenseState psi = DenseState::from_stabilizer(state.group);
  ordered_json params = code_opts_json(co);
  params["state"] = state_kind;
  if (t >= 0) {
    params["t"] = t;
    params["restarts"] = restarts < 0 ? 4 : restarts;
    params["sweeps"] = sweeps;
    ordered_json body = make_body(g, "gem ascend", std::move(params));
    CircuitAscentResult r =
        et_upper_via_circuit_ascent(psi, t, g.seed, restarts < 0 ? 4 : restarts, sweeps);
    body["circuit_ascent"] = to_json(r);
    emit(g, body);
  } else {
    params["restarts"] = restarts < 0 ? 24 : restarts;
    params["iters"] = iters;
    params["tol"] = tol;
    ordered_json body = make_body(g, "gem ascend", std::move(params));
    AscentResult r = e0_alternating_ascent(psi, restarts < 0 ? 24 : restarts, iters, tol, g.seed);
    body["ascent"] = to_json(r);
    emit(g, body);
  }
}

void run_certify(const GlobalOpts& g, const CodeOpts& co, long t, long patch, long gap,
                 double eps_prime, long dress_depth, double radius) {
  StabilizerCode code = make_code(co);
  PatchCertificateOptions opt;
  if (patch > 0) opt.patch = patch;
  if (gap > 0) opt.gap = gap;
  opt.epsilon_prime = eps_prime;
  std::optional<CliffordCircuit> circ;
  if (dress_depth > 0)
    circ = brick_wall_random(code.layout, (std::size_t)dress_depth, g.seed, radius);
  ordered_json params = code_opts_json(co);
  params["t"] = t;
  if (patch > 0) params["patch"] = patch;
  if (gap > 0) params["gap"] = gap;
  params["epsilon_prime"] = eps_prime;
  params["dress_depth"] = dress_depth;
  if (dress_depth > 0) params["locality_radius"] = radius;
  ordered_json body = make_body(g, "gem certify", std::move(params));
  GemCertificate cert = patch_certificate_toric(code, (int)t, circ ? &*circ : nullptr, opt);
  body["certificate"] = to_json(cert);
  emit(g, body);
}

void run_theorem2(const GlobalOpts& g, const CodeOpts& co, long t, double d0, double eps_prime) {
  StabilizerCode code = make_code(co);
  ordered_json params = code_opts_json(co);
  params["t"] = t;
  params["d0_constant"] = d0;
  params["epsilon_prime"] = eps_prime;
  ordered_json body = make_body(g, "gem theorem2", std::move(params));
  GemCertificate cert = theorem2_certificate(code, (int)t, d0, eps_prime);
  body["certificate"] = to_json(cert);
  emit(g, body);
}

void run_sequential(const GlobalOpts& g, const CodeOpts& co, long t, long patch, long gap,
                    const std::string& state_kind, bool no_witnesses, double eps_prime) {
  StabilizerCode code = make_code(co);
  long p = patch > 0 ? patch : 8 * (t + 1);
  long gp = gap > 0 ? gap : 2 * (t + 1);
  PatchGrid grid = partition_into_patches(code.layout, p, gp);
  if (grid.patches.empty())
    throw FeasibilityError("no patch of side " + std::to_string(p) + " fits the layout");
  MixedStabilizerState state = pick_state(code, state_kind, g.seed);
  std::vector<ExchangeTriple> witnesses;
  if (!no_witnesses) {
    witnesses.reserve(grid.patches.size());
    for (const Vec2& o : grid.origins)
      witnesses.push_back(
          canonical_exchange_triple(code, {o.x + p / 2.0, o.y + p / 2.0}));
  }
  ordered_json params = code_opts_json(co);
  params["t"] = t;
  params["patch"] = p;
  params["gap"] = gp;
  params["state"] = state_kind;
  params["witnesses"] = !no_witnesses;
  params["epsilon_prime"] = eps_prime;
  ordered_json body = make_body(g, "gem sequential", std::move(params));
  SequentialResult r = sequential_projection_bound(state, grid.patches, witnesses, eps_prime);
  body["patches"] = grid.patches.size();
  body["sequential"] = to_json(r);
  if (r.product > 0.0)
    body["bits"] = -std::log2(r.product);
  else
    body["bits"] = nullptr;
  emit(g, body);
}

void run_mixed_bound(const GlobalOpts& g, const CodeOpts& co, const std::string& sigma_kind,
                     int count, bool syndromes) {
  StabilizerCode code = make_code(co);
  MixedStabilizerState rho = symmetric_mixed_state(code);
  ordered_json params = code_opts_json(co);
  params["sigma"] = sigma_kind;
  params["count"] = count;
  ordered_json body = make_body(g, "gem mixed-bound", std::move(params));
  ordered_json values = ordered_json::array();
  ordered_json all_plus = ordered_json::array();
  double sum = 0.0;
  for (int i = 0; i < count; ++i) {
    MixedStabilizerState sigma = sigma_kind == "random"
                                     ? random_product_state(code.n, g.seed + (std::uint64_t)i)
                                     : pick_state(code, sigma_kind, g.seed + (std::uint64_t)i);
    double v = mixed_gem_syndrome_bound(rho, sigma, &code);
    values.push_back(v);
    sum += v;
    if (syndromes) all_plus.push_back(syndrome_distribution(sigma, code).all_plus_mass);
  }
  body["values"] = values;
  if (count == 1) body["value"] = values[0];
  body["mean"] = sum / count;
  if (syndromes) body["syndrome_all_plus_mass"] = all_plus;
  emit(g, body);
}

void run_crosscheck(const GlobalOpts& g, long n, int count) {
  if (n < 1 || n > 12) throw CapabilityError("oracle crosscheck handles 1 <= n <= 12 qubits");
  // random low-depth stabilizer states on a line; every fast quantity is
  // recomputed through the dense simulator
  Layout line;
  for (long q = 0; q < n; ++q) line.pos.push_back({2.0 * q, 0.0});
  std::mt19937_64 rng(g.seed);
  double dev_expect = 0.0, dev_rdm = 0.0, dev_overlap = 0.0;
  for (int it = 0; it < count; ++it) {
    std::vector<Pauli> zs;
    for (long q = 0; q < n; ++q) {
      Pauli p = Pauli::single((std::size_t)n, (std::size_t)q, 'Z');
      if (rng() & 1) p.set_phase_exp((std::uint8_t)(p.phase_exp() + 2));
      zs.push_back(p);
    }
    CliffordCircuit circ = brick_wall_random(line, 3, rng(), 2.1);
    MixedStabilizerState state =
        dress(circ, MixedStabilizerState{PauliGroup::from_generators(zs, true, true)});
    DenseState psi = DenseState::from_stabilizer(state.group);

    // signed word expectation
    std::string letters;
    for (long q = 0; q < n; ++q) letters.push_back("IXZY"[rng() % 4]);
    Pauli word = Pauli::from_letters(letters, (rng() & 1) ? 1 : -1);
    std::complex<double> fast = pauli_expectation(state, word);
    dev_expect = std::max(dev_expect, std::abs(fast - psi.expectation(word)));

    // reduced-state fidelity with |0..0>
    BitVec region((std::size_t)n);
    for (long q = 0; q < n; ++q)
      if (rng() & 1) region.set((std::size_t)q);
    double frdm = rdm_zero_fidelity(state, region);
    DenseMatrix red = reduced_density(psi, region);
    DenseState zero_r(region.count(), 0);
    double drdm = red.fidelity(DenseMatrix::pure(zero_r));
    dev_rdm = std::max(dev_rdm, std::abs(frdm - drdm));

    // squared overlap with an independent product state
    MixedStabilizerState sigma = random_product_state((std::size_t)n, rng());
    double fov = mixed_gem_syndrome_bound(state, sigma);
    double dov = std::norm(psi.inner(DenseState::from_stabilizer(sigma.group)));
    dev_overlap = std::max(dev_overlap, std::abs(fov - dov));
  }
  ordered_json params;
  params["n"] = n;
  params["count"] = count;
  ordered_json body = make_body(g, "oracle crosscheck", std::move(params));
  body["n"] = n;
  body["count"] = count;
  body["max_deviation"] = std::max({dev_expect, dev_rdm, dev_overlap});
  body["categories"] = {{"expectation", dev_expect},
                        {"rdm_zero_fidelity", dev_rdm},
                        {"overlap", dev_overlap}};
  emit(g, body);
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  for (int i = 0; i < argc; ++i) {
    if (i) g.argv_line += ' ';
    g.argv_line += argv[i];
  }
  if (const char* env = std::getenv("STABGEM_JOBS")) g.jobs = std::max(1, std::atoi(env));

  CLI::App app{"stabilizer code entanglement auditor"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "report format: json | csv | md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--out", g.out, "write the report (or built code file) here instead of stdout");
  app.add_option("--seed", g.seed, "seed for every randomized step");
  app.add_option("--jobs", g.jobs, "worker count, echoed in the report");

  CodeOpts co;
  auto* code_cmd = app.add_subcommand("code", "build and inspect code descriptions");
  auto* analyze_cmd = app.add_subcommand("analyze", "logical structure and statistics");
  auto* gem_cmd = app.add_subcommand("gem", "entanglement bounds and certificates");
  auto* oracle_cmd = app.add_subcommand("oracle", "dense simulator cross checks");
  for (CLI::App* c : {code_cmd, analyze_cmd, gem_cmd, oracle_cmd}) {
    c->require_subcommand(1);
    c->fallthrough();
  }

  auto* build = code_cmd->add_subcommand("build", "write a code description file to --out");
  auto* info = code_cmd->add_subcommand("info", "summarize a code");
  auto* check = code_cmd->add_subcommand("check", "validate a code description");
  for (CLI::App* c : {build, info, check}) {
    add_code_opts(c, co);
    c->fallthrough();
  }
  build->callback([&] { run_code_build(g, co); });
  info->callback([&] { run_code_info(g, co); });
  check->callback([&] { run_code_check(g, co); });

  long max_weight = 6;
  auto* dist = analyze_cmd->add_subcommand("distance", "exhaustive small-weight distance search");
  dist->add_option("--max-weight", max_weight, "largest weight class to enumerate");
  dist->callback([&] { run_distance(g, co, max_weight); });

  std::vector<double> disk_vals, rect_vals;
  auto* corr = analyze_cmd->add_subcommand("correctable", "test a region for correctability");
  corr->add_option("--disk", disk_vals, "center x, center y, radius")->expected(3);
  corr->add_option("--rect", rect_vals, "origin x, origin y, width, height")->expected(4);
  corr->callback([&] { run_correctable(g, co, disk_vals, rect_vals); });

  long t_flag = 0;
  auto* mesh = analyze_cmd->add_subcommand("mesh", "clean logicals into the default mesh pair");
  mesh->callback([&] { run_mesh(g, co, t_flag); });

  auto* braid = analyze_cmd->add_subcommand("braiding", "synthesize and test a braiding triple");
  braid->callback([&] { run_braiding(g, co, t_flag); });

  std::vector<double> near_vals;
  auto* exch = analyze_cmd->add_subcommand("exchange", "canonical T-junction exchange phase");
  exch->add_option("--near", near_vals, "junction search point x, y")->expected(2);
  exch->callback([&] { run_exchange(g, co, near_vals); });

  std::string state_kind = "codeword";
  bool oracle_check = false;
  auto* e0 = gem_cmd->add_subcommand("e0", "exhaustive product-basis overlap");
  e0->add_flag("--oracle-check", oracle_check, "recompute the best overlap densely");
  e0->callback([&] { run_e0(g, co, state_kind, oracle_check); });

  int asc_t = -1, asc_restarts = -1, asc_iters = 200, asc_sweeps = 60;
  double asc_tol = 1e-12;
  auto* ascend = gem_cmd->add_subcommand("ascend", "variational overlap ascent");
  ascend->add_option("--t", asc_t, "circuit depth; omit for product-state see-saw");
  ascend->add_option("--restarts", asc_restarts, "random restarts");
  ascend->add_option("--iters", asc_iters, "see-saw iterations per restart");
  ascend->add_option("--sweeps", asc_sweeps, "gate sweeps per restart (circuit mode)");
  ascend->add_option("--tol", asc_tol, "see-saw convergence tolerance");
  ascend->callback([&] {
    run_ascend(g, co, state_kind, asc_t, asc_restarts, asc_iters, asc_sweeps, asc_tol);
  });

  long patch_flag = 0, gap_flag = 0, dress_depth = 0;
  double eps_prime = 0.01, radius = 1.5;
  auto* certify = gem_cmd->add_subcommand("certify", "patch braiding certificate");
  certify->add_option("--patch", patch_flag, "patch side (default 8(t+1))");
  certify->add_option("--gap", gap_flag, "gap between patches (default 2(t+1))");
  certify->add_option("--epsilon-prime", eps_prime, "per-patch fidelity gap");
  certify->add_option("--dress-depth", dress_depth, "random local circuit depth to dress with");
  certify->add_option("--locality-radius", radius, "gate locality radius for the dressing");
  certify->callback(
      [&] { run_certify(g, co, t_flag, patch_flag, gap_flag, eps_prime, dress_depth, radius); });

  double d0_constant = 1.0;
  auto* thm2 = gem_cmd->add_subcommand("theorem2", "mesh-family distance-squared certificate");
  thm2->add_option("--d0-constant", d0_constant, "required d > c0 (w+t)^2 prefactor");
  thm2->add_option("--epsilon-prime", eps_prime, "per-patch fidelity gap");
  thm2->callback([&] { run_theorem2(g, co, t_flag, d0_constant, eps_prime); });

  bool no_witnesses = false;
  auto* seq = gem_cmd->add_subcommand("sequential", "qubit-by-qubit projection bound");
  seq->add_option("--patch", patch_flag, "patch side (default 8(t+1))");
  seq->add_option("--gap", gap_flag, "gap between patches (default 2(t+1))");
  seq->add_flag("--no-witnesses", no_witnesses, "skip per-patch exchange witnesses");
  seq->add_option("--epsilon-prime", eps_prime, "per-patch fidelity gap");
  seq->callback([&] {
    run_sequential(g, co, t_flag, patch_flag, gap_flag, state_kind, no_witnesses, eps_prime);
  });

  std::string sigma_kind = "zero";
  int sigma_count = 1;
  bool syndromes = false;
  auto* mixed = gem_cmd->add_subcommand("mixed-bound", "syndrome bound on mixed-state fidelity");
  mixed->add_option("--sigma", sigma_kind, "comparison state: zero | random | codeword | mixed");
  mixed->add_option("--count", sigma_count, "number of seeded comparison states");
  mixed->add_flag("--syndromes", syndromes, "also enumerate the syndrome distribution");
  mixed->callback([&] { run_mixed_bound(g, co, sigma_kind, sigma_count, syndromes); });

  long cc_n = 6;
  int cc_count = 200;
  auto* crosscheck = oracle_cmd->add_subcommand("crosscheck", "fast paths vs dense simulator");
  crosscheck->add_option("--n", cc_n, "qubit count (dense, keep small)");
  crosscheck->add_option("--count", cc_count, "random cases");
  crosscheck->callback([&] { run_crosscheck(g, cc_n, cc_count); });

  // shared numeric flags that several subcommands read
  for (CLI::App* c : {mesh, braid, certify, thm2, seq}) c->add_option("--t", t_flag, "circuit depth budget");
  for (CLI::App* c : {dist, corr, mesh, braid, exch, e0, ascend, certify, thm2, seq, mixed}) {
    add_code_opts(c, co);
    c->fallthrough();
  }
  for (CLI::App* c : {e0, ascend, seq})
    c->add_option("--state", state_kind, "codeword | mixed | zero");
  crosscheck->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return 3;
  } catch (const FeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const CertificateError& e) {
    std::cerr << "certificate failed: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
