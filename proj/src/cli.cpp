#include "qmp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qmp/catalog.hpp"
#include "qmp/chamber.hpp"
#include "qmp/error.hpp"
#include "qmp/fermi.hpp"
#include "qmp/hull.hpp"
#include "qmp/plethysm.hpp"
#include "qmp/schubert.hpp"
#include "qmp/system.hpp"
#include "qmp/tensor.hpp"
#include "qmp/verify.hpp"

namespace qmp {
namespace {

using json = nlohmann::json;

constexpr int kFormatVersion = 1;

std::string schema(const std::string& name) { return "qmp." + name + "/1"; }

void emit(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

json rational_list(const QVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

json int_list(const ZVector& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(to_int64(z));
  return a;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::kInvalidArgument, "not a real number: '" + item + "'");
    }
  }
  if (v.empty()) fail(ErrorCode::kInvalidArgument, "empty number list");
  return v;
}

json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return json::parse(in);
    std::ifstream f(path);
    if (!f) fail(ErrorCode::kInvalidArgument, "cannot open " + path);
    return json::parse(f);
  } catch (const json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

Complex complex_of(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::kInvalidArgument, "complex entries are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

struct LoadedState {
  SystemDescriptor system;
  bool pure = true;
  CVector amplitudes;
  CMatrix matrix;
};

std::size_t state_dimension(const SystemDescriptor& s) {
  if (s.kind == SystemKind::kTensor) return total_dim(s.dims);
  if (s.kind == SystemKind::kFermion) return binomial(s.r, s.n);
  fail(ErrorCode::kUnsupported, "state files describe tensor or fermionic systems");
}

LoadedState load_state(const json& j) {
  LoadedState st;
  try {
    if (j.value("format_version", 0) != kFormatVersion) {
      fail(ErrorCode::kInvalidArgument, "unsupported state file format_version");
    }
    st.system = SystemDescriptor::parse(j.at("system").get<std::string>());
    const std::string kind = j.value("kind", "pure");
    const std::size_t d = state_dimension(st.system);
    if (kind == "pure") {
      const auto& amps = j.at("amplitudes");
      if (amps.size() != d) fail(ErrorCode::kDimensionMismatch, "amplitude count does not match the system");
      st.amplitudes = CVector(d);
      for (std::size_t i = 0; i < d; ++i) st.amplitudes[i] = complex_of(amps[i]);
      if (std::abs(st.amplitudes.squaredNorm() - 1.0) > 1e-8) {
        fail(ErrorCode::kInvalidArgument, "pure state is not normalized");
      }
    } else if (kind == "mixed") {
      st.pure = false;
      const auto& rows = j.at("matrix");
      if (rows.size() != d) fail(ErrorCode::kDimensionMismatch, "matrix size does not match the system");
      st.matrix = CMatrix(d, d);
      for (std::size_t r = 0; r < d; ++r) {
        if (rows[r].size() != d) fail(ErrorCode::kDimensionMismatch, "matrix row has the wrong length");
        for (std::size_t c = 0; c < d; ++c) st.matrix(r, c) = complex_of(rows[r][c]);
      }
    } else {
      fail(ErrorCode::kInvalidArgument, "state kind must be pure or mixed");
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("malformed state file: ") + e.what());
  }
  return st;
}

json state_file(const PureState& psi, const SystemDescriptor& sys, std::uint64_t seed) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) amps.push_back(complex_json(psi.amplitudes[i]));
  return json{{"format_version", kFormatVersion},
              {"system", sys.to_string()},
              {"kind", "pure"},
              {"amplitudes", amps},
              {"seed", seed}};
}

json reduce_state(const LoadedState& st) {
  json marginals = json::array();
  std::vector<double> joint;
  const auto& sys = st.system;
  if (sys.kind == SystemKind::kTensor) {
    if (st.pure) {
      const auto psi = make_pure(st.amplitudes, sys.dims);
      for (const auto& m : marginal_spectra(psi)) marginals.push_back(m);
      joint.assign(psi.amplitudes.size(), 0.0);
      joint[0] = 1.0;
    } else {
      const auto rho = make_density(st.matrix, sys.dims);
      for (std::size_t k = 0; k < sys.dims.size(); ++k) {
        marginals.push_back(spectrum(partial_trace(rho, {static_cast<int>(k)})).values);
      }
      joint = spectrum(rho).values;
    }
  } else {
    const FermionBasis basis(sys.r, sys.n);
    if (st.pure) {
      marginals.push_back(spectrum(one_rdm(FermionState{basis, st.amplitudes})).values);
      joint.assign(basis.size(), 0.0);
      joint[0] = 1.0;
    } else {
      const auto rho = make_density(st.matrix, {static_cast<int>(basis.size())});
      marginals.push_back(spectrum(one_rdm(basis, rho.entries)).values);
      joint = spectrum(rho).values;
    }
  }
  return json{{"schema", schema("reduce")},
              {"system", sys.to_string()},
              {"marginals", marginals},
              {"joint", joint}};
}

json report_json(const CampaignReport& r) {
  json j{{"schema", schema("verify")},   {"family", r.family},
         {"system", r.system},           {"trials", r.trials},
         {"seed", r.seed},               {"min_slack", r.min_slack},
         {"violations", r.violations},   {"wall_seconds", r.wall_seconds}};
  j["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
  return j;
}

json record_json(const GeneratedInequality& g) {
  json lhs = json::array();
  for (const auto& s : g.record.lhs) lhs.push_back(s);
  json spectra = json::array();
  for (const auto& s : g.test_spectra) spectra.push_back(rational_list(s));
  json perms = json::array();
  for (const auto& p : g.perms) perms.push_back(p.to_string());
  return json{{"schema", schema("inequality")},
              {"lhs", lhs},
              {"rhs", g.record.rhs},
              {"bound", g.record.bound},
              {"relation", "<="},
              {"coefficient", g.coefficient},
              {"w", g.w.to_string()},
              {"perms", perms},
              {"test_spectra", spectra}};
}

// Orders of the chambers adjacent to a point given in arrangement coordinates.
std::vector<std::vector<int>> orders_for_point(const Arrangement& arr, const QVector& t,
                                               const std::vector<Chamber>& chambers) {
  if (static_cast<int>(t.size()) != arr.dim) {
    fail(ErrorCode::kDimensionMismatch, "edge needs " + std::to_string(arr.dim) + " coordinates");
  }
  for (const auto& row : arr.cone_rows) {
    if (dot(to_q(row), t) < 0) fail(ErrorCode::kInvalidArgument, "edge lies outside the test-spectrum cone");
  }
  auto orders = orders_at_edge(arr, chambers, make_ray(t));
  if (orders.empty()) {
    try {
      orders.push_back(joint_order(arr.layout, values_at(arr, t)));
    } catch (const Error&) {
      fail(ErrorCode::kWallOfCubicle, "point is neither an extremal edge nor a chamber interior point");
    }
  }
  return orders;
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int run_reduce(Context& c, const std::string& path) {
  emit(c.out, reduce_state(load_state(read_json(path, c.in))));
  return 0;
}

int run_check(Context& c, const std::string& family, const std::vector<std::string>& spectra,
              const std::string& joint, const std::string& input, bool particle_hole,
              int particles, double tolerance) {
  SpectraBundle sp;
  if (!input.empty()) {
    const json j = read_json(input, c.in);
    try {
      sp.marginals = j.at("marginals").get<std::vector<std::vector<double>>>();
      if (j.contains("joint")) {
        sp.joint = j.at("joint").get<std::vector<double>>();
      }
    } catch (const json::exception& e) {
      fail(ErrorCode::kInvalidArgument, std::string("malformed spectra record: ") + e.what());
    }
  }
  for (const auto& s : spectra) sp.marginals.push_back(parse_reals(s));
  if (!joint.empty()) sp.joint = parse_reals(joint);
  if (sp.marginals.empty()) fail(ErrorCode::kInvalidArgument, "no spectra given");

  CheckOptions opt;
  opt.tolerance = tolerance;
  opt.particle_hole = particle_hole;
  if (particles > 0) opt.particles = particles;
  const auto rep = check_family(family, sp, opt);
  for (const auto& t : rep.transformations) {
    if (t.rfind("sorted", 0) == 0) emit(c.out, json{{"schema", schema("warning")}, {"message", t}});
  }
  json violated = json::array();
  for (auto k : rep.violated) violated.push_back(k + 1);
  emit(c.out, json{{"schema", schema("check")},
                   {"family", rep.family},
                   {"satisfied", rep.satisfied},
                   {"worst_slack", rep.worst_slack},
                   {"violated", violated},
                   {"evaluated", rep.evaluated},
                   {"transformations", rep.transformations}});
  return rep.satisfied ? 0 : 1;
}

int run_coeff(Context& c, const std::string& a, const std::string& b, const std::string& u,
              const std::string& v, const std::string& w, int fermi_n, const std::string& system,
              const std::string& edge) {
  const Permutation pw = Permutation::parse(w);
  if (!system.empty()) {
    const auto sys = SystemDescriptor::parse(system);
    const auto arr = cubicle_arrangement(sys);
    const auto chambers = enumerate_chambers(arr);
    const auto t = parse_rational_list(edge);
    std::vector<Permutation> us;
    if (sys.kind == SystemKind::kFermion) {
      us.push_back(Permutation::parse(v.empty() ? u : v));
    } else {
      if (sys.dims.size() != 2) fail(ErrorCode::kUnsupported, "coeff takes two-component tensor formats");
      us = {Permutation::parse(u), Permutation::parse(v)};
    }
    for (const auto& order : orders_for_point(arr, t, chambers)) {
      const auto coeff = coefficient(arr.layout, us, pw, order);
      emit(c.out, json{{"schema", schema("coeff")},
                       {"system", sys.to_string()},
                       {"edge", rational_list(t)},
                       {"order", order},
                       {"coefficient", coeff}});
    }
    return 0;
  }
  const QVector qa = parse_rational_list(a);
  if (fermi_n > 0) {
    const auto order = subset_sum_order(qa, fermi_n);
    const auto coeff = coeff_fermi(Permutation::parse(v), pw, order);
    emit(c.out, json{{"schema", schema("coeff")}, {"order", order}, {"coefficient", coeff}});
    return 0;
  }
  const QVector qb = parse_rational_list(b);
  const auto order = sum_order(qa, qb);
  const auto coeff = coeff_two(Permutation::parse(u), Permutation::parse(v), pw, order);
  json jo = json::array();
  for (auto [i, j] : order) jo.push_back(json::array({i, j}));
  emit(c.out, json{{"schema", schema("coeff")}, {"order", jo}, {"coefficient", coeff}});
  return 0;
}

int run_edges(Context& c, const std::string& system, bool no_symmetry, int cap) {
  const auto sys = SystemDescriptor::parse(system);
  const bool sym = sys.is_qubit_array() && !no_symmetry;
  const auto arr = cubicle_arrangement(sys, sym);
  const auto chambers = enumerate_chambers(arr, cap);
  auto edges = extremal_edges(chambers);
  json rays = json::array();
  for (const auto& r : edges) rays.push_back(int_list(r.direction));
  emit(c.out, json{{"schema", schema("edges")},
                   {"system", sys.to_string()},
                   {"symmetry_reduced", sym},
                   {"variables", arr.dim},
                   {"hyperplanes", arr.hyperplanes.size()},
                   {"chambers", chambers.size()},
                   {"count", edges.size()},
                   {"rays", rays}});
  return 0;
}

int run_generate(Context& c, const std::string& system, const std::string& edge,
                 const std::string& filter, int max_length) {
  const auto sys = SystemDescriptor::parse(system);
  const auto arr = cubicle_arrangement(sys);
  const auto chambers = enumerate_chambers(arr);
  const auto t = parse_rational_list(edge);
  const auto orders = orders_for_point(arr, t, chambers);
  const auto f = parse_filter(filter);
  std::vector<GeneratedInequality> gens;
  if (sys.is_qubit_array()) {
    gens = generate_qubit_array(t, orders, f);
  } else {
    GenerateOptions opt;
    opt.max_length = max_length;
    opt.filter = f;
    gens = generate_all(arr.layout, component_spectra(arr, t), orders, opt);
  }
  for (const auto& g : gens) emit(c.out, record_json(g));
  emit(c.out, json{{"schema", schema("generate")},
                   {"system", sys.to_string()},
                   {"edge", rational_list(t)},
                   {"filter", to_string(f)},
                   {"orders", orders.size()},
                   {"count", gens.size()}});
  return 0;
}

int run_plethysm(Context& c, int r, int n, int m) {
  const auto d = decompose(r, n, m);
  json comps = json::array();
  Integer total = 0;
  for (const auto& [lambda, mult] : d.multiplicities) {
    const Integer dim = weyl_dimension(lambda, r);
    total += dim * mult;
    comps.push_back(json{{"lambda", lambda.rows()}, {"multiplicity", mult}, {"dimension", dim.get_str()}});
  }
  const Integer expected = symmetric_power_dimension(r, n, m);
  emit(c.out, json{{"schema", schema("plethysm")},
                   {"r", r},
                   {"n", n},
                   {"m", m},
                   {"components", comps},
                   {"total_dimension", expected.get_str()},
                   {"dimension_check", total == expected}});
  return total == expected ? 0 : 1;
}

int run_hull(Context& c, int r, int n, int max_m, int cap) {
  const auto approx = inner_approximation(r, n, max_m, cap);
  json facets = json::array();
  for (std::size_t k = 0; k < approx.hull.facets.size(); ++k) {
    const auto& f = approx.hull.facets[k];
    facets.push_back(json{{"normal", int_list(f.normal)}, {"rhs", to_string(f.rhs)}, {"fits", bool(approx.fits[k])}});
  }
  json eqs = json::array();
  for (const auto& e : approx.hull.equalities) {
    eqs.push_back(json{{"normal", int_list(e.normal)}, {"rhs", to_string(e.rhs)}});
  }
  json points = json::array();
  for (const auto& p : approx.points) points.push_back(rational_list(p));
  emit(c.out, json{{"schema", schema("hull")},
                   {"r", r},
                   {"n", n},
                   {"M", max_m},
                   {"points", points},
                   {"dimension", approx.hull.dimension},
                   {"facets", facets},
                   {"equalities", eqs}});
  return 0;
}

int run_verify(Context& c, const std::string& family, const std::string& system, std::size_t trials,
               std::uint64_t seed, unsigned jobs, double tolerance, const std::string& joint) {
  CampaignOptions opt;
  opt.tolerance = tolerance;
  opt.jobs = jobs;
  if (!joint.empty()) opt.joint_spectrum = parse_reals(joint);
  const auto rep = mc_verify(family, SystemDescriptor::parse(system), trials, seed, opt);
  emit(c.out, report_json(rep));
  return rep.violations == 0 ? 0 : 1;
}

int run_equiv(Context& c, const std::string& pair, std::size_t samples, std::uint64_t seed,
              unsigned jobs) {
  const auto comma = pair.find(',');
  if (comma == std::string::npos) fail(ErrorCode::kInvalidArgument, "--pair takes A,B");
  const auto rep = equivalence_campaign(pair.substr(0, comma), pair.substr(comma + 1), samples, seed, jobs);
  json j{{"schema", schema("equiv")},     {"family_a", rep.family_a},
         {"family_b", rep.family_b},       {"samples", rep.samples},
         {"seed", rep.seed},               {"disagreements", rep.disagreements},
         {"satisfied_a", rep.satisfied_a}};
  j["first_disagreement"] = rep.first_disagreement.empty() ? json(nullptr) : json(rep.first_disagreement);
  emit(c.out, j);
  return rep.disagreements == 0 ? 0 : 1;
}

int run_witness(Context& c, const std::string& system, const std::vector<std::string>& targets,
                const std::string& minimal, std::uint64_t seed, int restarts, int iters,
                const std::string& out_path) {
  const auto sys = SystemDescriptor::parse(system);
  if (sys.kind != SystemKind::kTensor) fail(ErrorCode::kUnsupported, "witness search takes tensor formats");
  std::vector<std::vector<double>> t;
  for (const auto& s : targets) t.push_back(parse_reals(s));
  if (!minimal.empty()) {
    if (!sys.is_qubit_array()) fail(ErrorCode::kInvalidArgument, "--min-eigenvalues needs qubits");
    for (double x : parse_reals(minimal)) {
      if (x < 0 || x > 0.5) fail(ErrorCode::kInvalidSpectrum, "qubit minimal eigenvalues lie in [0, 1/2]");
      t.push_back({1.0 - x, x});
    }
  }
  WitnessOptions opt;
  opt.restarts = restarts;
  opt.iterations = iters;
  const auto res = witness_search(t, sys.dims, seed, opt);
  json j{{"schema", schema("witness")},
         {"system", sys.to_string()},
         {"success", res.success},
         {"residual", res.residual},
         {"restarts_used", res.restarts_used},
         {"achieved", res.achieved},
         {"seed", seed}};
  if (res.success) {
    const json sf = state_file(res.state, sys, seed);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) fail(ErrorCode::kInvalidArgument, "cannot write " + out_path);
      f << sf.dump(1) << '\n';
      j["state_file"] = out_path;
    } else {
      j["state"] = sf;
    }
  }
  emit(c.out, j);
  return res.success ? 0 : 1;
}

int run_families(Context& c) {
  for (const auto& id : family_ids()) {
    json j{{"schema", schema("family")}, {"id", id}};
    if (id == "POLYGON" || id == "BASIC" || id == "PAULI" || id == "TWO_PARTICLE_PURE") {
      j["size_dependent"] = true;
    } else {
      const auto f = instantiate_family(id);
      j["system"] = f.system;
      j["records"] = f.records.size();
      j["status"] = f.status;
      if (f.declared_count) j["declared_count"] = f.declared_count;
    }
    emit(c.out, j);
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Quantum marginal toolkit: spectra, inequalities, Schubert coefficients, geometry"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  const unsigned env_jobs = default_jobs();

  std::string state_path = "-";
  auto* reduce = app.add_subcommand("reduce", "Marginal spectra of a state file");
  reduce->add_option("--state", state_path, "State file (JSON) or - for stdin");

  std::string family, joint, input;
  std::vector<std::string> spectra;
  bool particle_hole = false;
  int particles = 0;
  double tolerance = 1e-10;
  auto* check = app.add_subcommand("check", "Check spectra against a catalogued family");
  check->add_option("--family", family, "Family identifier")->required();
  check->add_option("--spectrum", spectra, "Marginal spectrum (comma separated); repeat per subsystem");
  check->add_option("--joint", joint, "Joint spectrum");
  check->add_option("--input", input, "Spectra record from reduce (file or -)");
  check->add_flag("--particle-hole", particle_hole, "Evaluate on the particle-hole dual");
  check->add_option("--particles", particles, "Particle number when not inferable");
  check->add_option("--tolerance", tolerance, "Violation tolerance");

  std::string ca, cb, cu = "1", cv = "1", cw, csystem, cedge;
  int cfermi = 0;
  auto* coeff = app.add_subcommand("coeff", "Schubert coefficient of a permutation triple");
  coeff->add_option("-a", ca, "Test spectrum a (rationals)");
  coeff->add_option("-b", cb, "Test spectrum b (rationals)");
  coeff->add_option("-u", cu, "Permutation u (one-line)");
  coeff->add_option("-v", cv, "Permutation v (one-line)");
  coeff->add_option("-w", cw, "Permutation w (one-line)")->required();
  coeff->add_option("--fermi", cfermi, "Particle number for the fermionic coefficient");
  coeff->add_option("--system", csystem, "System whose arrangement coordinates --edge uses");
  coeff->add_option("--edge", cedge, "Point in arrangement coordinates");

  std::string esystem;
  bool no_symmetry = false;
  int ecap = kDefaultChamberCap;
  auto* edges = app.add_subcommand("edges", "Extremal edges of the cubicle arrangement");
  edges->add_option("--system", esystem, "System descriptor")->required();
  edges->add_flag("--no-symmetry", no_symmetry, "Do not reduce qubit arrays by site permutations");
  edges->add_option("--cap", ecap, "Maximum number of variables");

  std::string gsystem, gedge, gfilter = "unit";
  int gmax = 6;
  auto* generate = app.add_subcommand("generate", "Inequalities attached to an edge");
  generate->add_option("--system", gsystem, "System descriptor")->required();
  generate->add_option("--edge", gedge, "Edge in arrangement coordinates")->required();
  generate->add_option("--filter", gfilter, "Coefficient filter: unit, odd or nonzero");
  generate->add_option("--max-length", gmax, "Maximum length of w");

  int pr = 0, pn = 0, pm = 0;
  auto* pleth = app.add_subcommand("plethysm", "Decompose S^m(wedge^n C^r)");
  pleth->add_option("-r", pr, "Orbitals")->required();
  pleth->add_option("-n", pn, "Particles")->required();
  pleth->add_option("-m", pm, "Symmetric power")->required();

  int hr = 0, hn = 0, hm = 0, hcap = kDefaultHullCap;
  auto* hull = app.add_subcommand("hull", "Inner approximation from occurring spectra");
  hull->add_option("-r", hr, "Orbitals")->required();
  hull->add_option("-n", hn, "Particles")->required();
  hull->add_option("-M", hm, "Largest symmetric power")->required();
  hull->add_option("--cap", hcap, "Maximum hull dimension");

  std::string vfamily, vsystem, vjoint;
  std::size_t vtrials = 1000;
  std::uint64_t vseed = 0;
  unsigned vjobs = env_jobs;
  double vtol = 1e-10;
  auto* verify = app.add_subcommand("verify", "Monte-Carlo soundness campaign");
  verify->add_option("--family", vfamily, "Family identifier")->required();
  verify->add_option("--system", vsystem, "System descriptor")->required();
  verify->add_option("--trials", vtrials, "Number of sampled states");
  verify->add_option("--seed", vseed, "Campaign seed")->required();
  verify->add_option("--jobs", vjobs, "Worker threads (default from QMP_JOBS)");
  verify->add_option("--tolerance", vtol, "Violation tolerance");
  verify->add_option("--joint-spectrum", vjoint, "Fixed joint spectrum for mixed systems");

  std::string pair;
  std::size_t esamples = 100000;
  std::uint64_t eseed = 0;
  unsigned ejobs = env_jobs;
  auto* equiv = app.add_subcommand("equiv", "Compare two families on random points");
  equiv->add_option("--pair", pair, "Family pair A,B")->required();
  equiv->add_option("--samples", esamples, "Number of points");
  equiv->add_option("--seed", eseed, "Seed")->required();
  equiv->add_option("--jobs", ejobs, "Worker threads (default from QMP_JOBS)");

  std::string wsystem, wminimal, wout;
  std::vector<std::string> wtargets;
  std::uint64_t wseed = 0;
  int wrestarts = 20, witers = 400;
  auto* witness = app.add_subcommand("witness", "Search for a pure state with given marginals");
  witness->add_option("--system", wsystem, "Tensor system descriptor")->required();
  witness->add_option("--target", wtargets, "Target spectrum per factor (repeat)");
  witness->add_option("--min-eigenvalues", wminimal, "Qubit arrays: minimal eigenvalue per site");
  witness->add_option("--seed", wseed, "Seed")->required();
  witness->add_option("--restarts", wrestarts, "Random restarts");
  witness->add_option("--iters", witers, "Iterations per restart");
  witness->add_option("--out", wout, "Write the state file here on success");

  auto* families = app.add_subcommand("families", "List catalogued families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(out, json{{"schema", schema("error")}, {"code", "usage"}, {"message", e.what()}});
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*reduce) return run_reduce(ctx, state_path);
    if (*check) return run_check(ctx, family, spectra, joint, input, particle_hole, particles, tolerance);
    if (*coeff) return run_coeff(ctx, ca, cb, cu, cv, cw, cfermi, csystem, cedge);
    if (*edges) return run_edges(ctx, esystem, no_symmetry, ecap);
    if (*generate) return run_generate(ctx, gsystem, gedge, gfilter, gmax);
    if (*pleth) return run_plethysm(ctx, pr, pn, pm);
    if (*hull) return run_hull(ctx, hr, hn, hm, hcap);
    if (*verify) return run_verify(ctx, vfamily, vsystem, vtrials, vseed, vjobs, vtol, vjoint);
    if (*equiv) return run_equiv(ctx, pair, esamples, eseed, ejobs);
    if (*witness) return run_witness(ctx, wsystem, wtargets, wminimal, wseed, wrestarts, witers, wout);
    if (*families) return run_families(ctx);
  } catch (const Error& e) {
    emit(out, json{{"schema", schema("error")},
                   {"code", std::string(error_code_name(e.code()))},
                   {"message", e.what()}});
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    emit(out, json{{"schema", schema("error")}, {"code", "invalid-input"}, {"message", e.what()}});
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  std::vector<const char*> argv{"qmp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace qmp
