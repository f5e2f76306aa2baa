#include "qmp/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "qmp/error.hpp"
#include "qmp/rng.hpp"
#include "qmp/spectrum_lab.hpp"

namespace qmp {
namespace {

constexpr double kDegeneracyTol = 1e-8;

bool all_qubits(const SystemDescriptor& s) { return s.is_qubit_array(); }

Family base(const std::string& id, const std::string& system, std::vector<int> ranks,
            int joint_rank, std::vector<InequalityRecord> records) {
  Family f;
  f.id = id;
  f.system = system;
  f.ranks = std::move(ranks);
  f.joint_rank = joint_rank;
  f.records = std::move(records);
  f.declared_count = f.records.size();
  return f;
}

Family fermionic(Family f, int n) {
  f.fermionic = true;
  f.marginal_trace = n;
  return f;
}

int round_trace(const std::vector<double>& v) {
  return static_cast<int>(std::lround(std::accumulate(v.begin(), v.end(), 0.0)));
}

}  // namespace

const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids = {
      "POLYGON", "BRAVYI_2Q", "FRANZ_3QUTRIT", "BASIC",  "THREE_QUBIT_MIXED", "PAULI",
      "TWO_PARTICLE_PURE", "BD6", "F7_BD", "F7_LIST", "F8_31", "F84_14", "F84_ABS",
      "W2H4_MIXED", "CHSH_16", "W2H5"};
  return ids;
}

Family instantiate_family(const std::string& id, const SystemDescriptor& sys) {
  using namespace tables;
  if (id == "POLYGON") {
    if (!all_qubits(sys) || sys.dims.size() < 2) {
      fail(ErrorCode::kIncompatibleSystems, "POLYGON needs an array of at least two qubits");
    }
    const int n = static_cast<int>(sys.dims.size());
    return base(id, sys.to_string(), std::vector<int>(n, 2), 0, polygon(n));
  }
  if (id == "BASIC") {
    if (sys.kind != SystemKind::kTensor || sys.dims.size() < 2) {
      fail(ErrorCode::kIncompatibleSystems, "BASIC needs a tensor format with two or more factors");
    }
    int total = 1;
    for (int d : sys.dims) total *= d;
    return base(id, sys.to_string(), sys.dims, total, basic(sys.dims));
  }
  if (id == "PAULI") {
    if (sys.kind != SystemKind::kFermion) fail(ErrorCode::kIncompatibleSystems, "PAULI is fermionic");
    auto f = fermionic(base(id, sys.to_string(), {sys.r}, 0, pauli(sys.r)), sys.n);
    return f;
  }
  if (id == "TWO_PARTICLE_PURE") {
    if (sys.kind != SystemKind::kFermion || sys.n != 2) {
      fail(ErrorCode::kIncompatibleSystems, "TWO_PARTICLE_PURE needs a two-fermion system");
    }
    auto f = fermionic(base(id, sys.to_string(), {sys.r}, 0, {}), 2);
    f.kind = CheckKind::kEvenDegeneracy;
    return f;
  }
  return instantiate_family(id);
}

Family instantiate_family(const std::string& id) {
  using namespace tables;
  if (id == "BRAVYI_2Q") return base(id, "tensor:2x2:mixed", {2, 2}, 4, bravyi());
  if (id == "FRANZ_3QUTRIT") {
    auto f = base(id, "tensor:3x3x3:pure", {3, 3, 3}, 0, franz());
    f.listed_order = SpectrumOrder::kIncreasing;
    return f;
  }
  if (id == "THREE_QUBIT_MIXED") {
    auto f = base(id, "qubits:3:mixed", {2, 2, 2}, 8, three_qubit_mixed());
    f.sort_sites_by_gap = true;
    f.status = "as tabulated";
    return f;
  }
  if (id == "BD6") return fermionic(base(id, "fermi:6,3:pure", {6}, 0, bd6()), 3);
  if (id == "F7_BD") return fermionic(base(id, "fermi:7,3:pure", {7}, 0, f7_bd()), 3);
  if (id == "F7_LIST") return fermionic(base(id, "fermi:7,3:pure", {7}, 0, f7_list()), 3);
  if (id == "F8_31") return fermionic(base(id, "fermi:8,3:pure", {8}, 0, f8_31()), 3);
  if (id == "F84_14") return fermionic(base(id, "fermi:8,4:pure", {8}, 0, f84_14()), 4);
  if (id == "F84_ABS") return fermionic(base(id, "fermi:8,4:pure", {8}, 0, f84_abs()), 4);
  if (id == "W2H4_MIXED") {
    // Both spectra carry the same trace; trace one is used.
    auto f = fermionic(base(id, "fermi:4,2:mixed", {4}, 6, w2h4_mixed()), 1);
    return f;
  }
  if (id == "W2H5") {
    auto f = fermionic(base(id, "fermi:5,2:mixed", {5}, 10, {}), 1);
    f.kind = CheckKind::kMetadataOnly;
    f.declared_count = 460;
    f.status = "count only";
    return f;
  }
  if (id == "CHSH_16") {
    auto f = base(id, "bell:2222", {4}, 0, chsh16());
    f.spectral = false;
    return f;
  }
  if (id == "POLYGON" || id == "BASIC" || id == "PAULI" || id == "TWO_PARTICLE_PURE") {
    fail(ErrorCode::kInvalidArgument, id + " depends on the system size");
  }
  fail(ErrorCode::kUnknownFamily, "unknown family: " + id);
}

std::vector<FamilyMatch> applicable_families(const SystemDescriptor& s) {
  std::vector<FamilyMatch> out;
  const bool pure = s.purity == Purity::kPure;
  if (s.kind == SystemKind::kBell) return {{"CHSH_16", false}};
  if (s.kind == SystemKind::kTensor) {
    if (s.dims.empty()) fail(ErrorCode::kUnknownDescriptor, "empty tensor format");
    if (all_qubits(s) && s.dims.size() >= 2 && pure) out.push_back({"POLYGON", false});
    if (s.dims == std::vector<int>{2, 2}) out.push_back({"BRAVYI_2Q", false});
    if (s.dims == std::vector<int>{3, 3, 3} && pure) out.push_back({"FRANZ_3QUTRIT", false});
    if (s.dims.size() >= 2) out.push_back({"BASIC", false});
    if (s.dims == std::vector<int>{2, 2, 2}) out.push_back({"THREE_QUBIT_MIXED", false});
    return out;
  }
  const int r = s.r, n = s.n;
  auto fixed = [&](int fr, int fn, const std::string& id, bool needs_pure) {
    if (needs_pure && !pure) return;
    if (!needs_pure && pure) return;
    if (r == fr && n == fn) out.push_back({id, false});
    else if (r == fr && n == fr - fn) out.push_back({id, true});
  };
  out.push_back({"PAULI", false});
  if (pure && n == 2) out.push_back({"TWO_PARTICLE_PURE", false});
  else if (pure && n == r - 2) out.push_back({"TWO_PARTICLE_PURE", true});
  fixed(6, 3, "BD6", true);
  fixed(7, 3, "F7_BD", true);
  fixed(7, 3, "F7_LIST", true);
  fixed(8, 3, "F8_31", true);
  fixed(8, 4, "F84_14", true);
  fixed(8, 4, "F84_ABS", true);
  fixed(4, 2, "W2H4_MIXED", false);
  fixed(5, 2, "W2H5", false);
  return out;
}

double record_slack(const InequalityRecord& rec, const SpectraBundle& sp) {
  double lhs = 0;
  for (std::size_t s = 0; s < rec.lhs.size(); ++s) {
    for (std::size_t i = 0; i < rec.lhs[s].size(); ++i) {
      lhs += static_cast<double>(rec.lhs[s][i]) * sp.marginals[s][i];
    }
  }
  double rhs = static_cast<double>(rec.bound);
  for (std::size_t i = 0; i < rec.rhs.size(); ++i) {
    rhs += static_cast<double>(rec.rhs[i]) * sp.joint[i];
  }
  return rec.relation == Relation::kEqual ? -std::abs(rhs - lhs) : rhs - lhs;
}

double degeneracy_defect(const std::vector<double>& v) {
  double worst = 0;
  std::size_t i = 0;
  for (; i + 1 < v.size(); i += 2) worst = std::max(worst, std::abs(v[i] - v[i + 1]));
  if (i < v.size()) worst = std::max(worst, std::abs(v[i]));
  return worst;
}

namespace {

void canonicalize(std::vector<double>& v, double trace, const std::string& label,
                  std::vector<std::string>& log) {
  if (!sort_nonincreasing(v)) log.push_back("sorted " + label + " nonincreasing");
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  if (s == 0.0) fail(ErrorCode::kInvalidSpectrum, label + " has zero trace");
  if (std::abs(s - trace) > 1e-12 * std::max(1.0, trace)) {
    for (double& x : v) x *= trace / s;
    log.push_back("renormalized " + label + " to trace " + std::to_string(trace));
  }
}

}  // namespace

CheckReport check_family(const Family& fam, const SpectraBundle& input,
                         const CheckOptions& opt) {
  if (fam.kind == CheckKind::kMetadataOnly) {
    fail(ErrorCode::kUnsupported, fam.id + " is recorded as a count only");
  }
  CheckReport rep;
  rep.family = fam.id;
  SpectraBundle sp = input;
  if (sp.marginals.size() != fam.ranks.size()) {
    fail(ErrorCode::kRankMismatch, fam.id + ": wrong number of marginal spectra");
  }
  for (std::size_t s = 0; s < fam.ranks.size(); ++s) {
    if (static_cast<int>(sp.marginals[s].size()) != fam.ranks[s]) {
      fail(ErrorCode::kRankMismatch, fam.id + ": marginal " + std::to_string(s + 1) +
                                         " has the wrong length");
    }
  }
  if (fam.joint_rank > 0) {
    if (sp.joint.empty()) {
      sp.joint.assign(fam.joint_rank, 0.0);
      sp.joint[0] = fam.joint_trace;
      rep.transformations.push_back("joint spectrum assumed pure");
    } else if (static_cast<int>(sp.joint.size()) != fam.joint_rank) {
      fail(ErrorCode::kRankMismatch, fam.id + ": joint spectrum has the wrong length");
    }
  }
  if (!fam.spectral) {
    for (double x : sp.marginals[0]) {
      if (x < -1 - 1e-12 || x > 1 + 1e-12) {
        fail(ErrorCode::kInvalidArgument, "correlations must lie in [-1, 1]");
      }
    }
  } else {
    if (opt.particle_hole) {
      if (!fam.fermionic) fail(ErrorCode::kIncompatibleSystems, "particle-hole needs a fermionic family");
      const int r = fam.ranks[0];
      auto& v = sp.marginals[0];
      canonicalize(v, r - fam.marginal_trace, "dual spectrum", rep.transformations);
      for (double& x : v) x = std::clamp(x, 0.0, 1.0);
      v = particle_hole(Spectrum{v, r - fam.marginal_trace}, r).values;
      rep.transformations.push_back("applied particle-hole map");
    }
    for (std::size_t s = 0; s < sp.marginals.size(); ++s) {
      canonicalize(sp.marginals[s], fam.marginal_trace, "marginal " + std::to_string(s + 1),
                   rep.transformations);
    }
    if (fam.joint_rank > 0) canonicalize(sp.joint, fam.joint_trace, "joint", rep.transformations);
    if (fam.sort_sites_by_gap) {
      std::vector<std::size_t> order(sp.marginals.size());
      std::iota(order.begin(), order.end(), 0);
      auto gap = [&](std::size_t s) { return sp.marginals[s][0] - sp.marginals[s][1]; };
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return gap(a) < gap(b); });
      if (!std::is_sorted(order.begin(), order.end())) {
        std::vector<std::vector<double>> m;
        std::string note = "reordered sites by increasing gap:";
        for (auto s : order) {
          m.push_back(sp.marginals[s]);
          note += " " + std::to_string(s + 1);
        }
        sp.marginals = std::move(m);
        rep.transformations.push_back(note);
      }
    }
  }
  if (fam.kind == CheckKind::kEvenDegeneracy) {
    const double tol = std::max(opt.tolerance, kDegeneracyTol);
    rep.worst_slack = -degeneracy_defect(sp.marginals[0]);
    rep.evaluated = 1;
    rep.satisfied = rep.worst_slack >= -tol;
    if (!rep.satisfied) rep.violated.push_back(0);
    return rep;
  }
  rep.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < fam.records.size(); ++k) {
    const double s = record_slack(fam.records[k], sp);
    rep.worst_slack = std::min(rep.worst_slack, s);
    if (s < -opt.tolerance) rep.violated.push_back(k);
  }
  if (fam.records.empty()) rep.worst_slack = 0;
  rep.evaluated = fam.records.size();
  rep.satisfied = rep.violated.empty();
  return rep;
}

CheckReport check_family(const std::string& id, const SpectraBundle& sp,
                         const CheckOptions& opt) {
  if (id == "POLYGON") {
    return check_family(
        instantiate_family(id, SystemDescriptor::tensor(std::vector<int>(sp.marginals.size(), 2))),
        sp, opt);
  }
  if (id == "BASIC") {
    std::vector<int> dims;
    for (const auto& m : sp.marginals) dims.push_back(static_cast<int>(m.size()));
    return check_family(instantiate_family(id, SystemDescriptor::tensor(dims, Purity::kMixed)),
                        sp, opt);
  }
  if (id == "PAULI" || id == "TWO_PARTICLE_PURE") {
    if (sp.marginals.size() != 1) fail(ErrorCode::kRankMismatch, id + " takes one spectrum");
    const int r = static_cast<int>(sp.marginals[0].size());
    int n = opt.particles ? *opt.particles : round_trace(sp.marginals[0]);
    if (opt.particle_hole && !opt.particles) n = r - n;
    if (id == "TWO_PARTICLE_PURE") n = 2;
    if (n <= 0 || n >= r) fail(ErrorCode::kInvalidSpectrum, "cannot infer particle number");
    return check_family(instantiate_family(id, SystemDescriptor::fermion(r, n)), sp, opt);
  }
  return check_family(instantiate_family(id), sp, opt);
}

CheckReport check_chsh(const std::vector<double>& e, double tolerance) {
  if (e.size() != 4) fail(ErrorCode::kRankMismatch, "CHSH needs four correlations");
  CheckOptions opt;
  opt.tolerance = tolerance;
  return check_family(instantiate_family("CHSH_16"), SpectraBundle{{e}, {}}, opt);
}

std::vector<double> sample_sorted_point(int r, double trace, bool pauli_box,
                                        std::uint64_t seed) {
  CounterRng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  const int mode = static_cast<int>(rng() % 3);
  const int whole = static_cast<int>(std::lround(trace));
  const bool integral = std::abs(trace - whole) < 1e-12 && whole > 0 && whole < r;
  std::vector<double> v(r);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    if (mode == 2 && pauli_box && integral) {
      // Mixture of a few 0/1 occupation vectors, then a small perturbation.
      std::fill(v.begin(), v.end(), 0.0);
      const int parts = 1 + static_cast<int>(rng() % 3);
      std::vector<double> w(parts);
      for (double& x : w) x = gamma(rng);
      const double ws = std::accumulate(w.begin(), w.end(), 0.0);
      for (int p = 0; p < parts; ++p) {
        std::vector<int> idx(r);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int k = 0; k < whole; ++k) v[idx[k]] += w[p] / ws;
      }
      for (double& x : v) x += 0.05 * (unif(rng) - 0.5);
    } else if (mode == 1) {
      for (double& x : v) x = unif(rng);
    } else {
      for (double& x : v) x = gamma(rng);
    }
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    if (s <= 0) continue;
    bool ok = true;
    for (double& x : v) {
      x *= trace / s;
      if (x < 0 || (pauli_box && x > 1)) ok = false;
    }
    if (!ok) continue;
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }
  fail(ErrorCode::kInternal, "sampler failed to produce a point");
}

EquivalenceReport check_equivalence(const std::string& a, const std::string& b,
                                    std::size_t samples, std::uint64_t seed, unsigned jobs) {
  const Family fa = instantiate_family(a);
  const Family fb = instantiate_family(b);
  if (fa.kind != CheckKind::kLinear || fb.kind != CheckKind::kLinear || fa.ranks != fb.ranks ||
      fa.joint_rank != fb.joint_rank || fa.marginal_trace != fb.marginal_trace ||
      fa.fermionic != fb.fermionic || fa.spectral != fb.spectral || !fa.spectral) {
    fail(ErrorCode::kIncompatibleSystems, a + " and " + b + " do not share a system");
  }
  EquivalenceReport rep;
  rep.family_a = a;
  rep.family_b = b;
  rep.samples = samples;
  rep.seed = seed;
  jobs = std::max(1u, jobs);
  struct Partial {
    std::size_t dis = 0, sat = 0, first = SIZE_MAX;
    std::vector<double> point;
  };
  std::vector<Partial> parts(jobs);
  CheckOptions opt;
  opt.tolerance = 1e-12;
  auto work = [&](unsigned j) {
    Partial& p = parts[j];
    for (std::size_t i = j; i < samples; i += jobs) {
      const std::uint64_t s = derive_seed(seed, i);
      SpectraBundle sp;
      for (std::size_t m = 0; m < fa.ranks.size(); ++m) {
        sp.marginals.push_back(
            sample_sorted_point(fa.ranks[m], fa.marginal_trace, fa.fermionic, derive_seed(s, m)));
      }
      if (fa.joint_rank > 0) {
        sp.joint = sample_sorted_point(fa.joint_rank, fa.joint_trace, false,
                                       derive_seed(s, fa.ranks.size()));
      }
      const bool ra = check_family(fa, sp, opt).satisfied;
      const bool rb = check_family(fb, sp, opt).satisfied;
      if (ra) ++p.sat;
      if (ra != rb) {
        ++p.dis;
        if (i < p.first) {
          p.first = i;
          p.point = sp.marginals[0];
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(work, j);
  work(0);
  for (auto& t : threads) t.join();
  std::size_t first = SIZE_MAX;
  for (const auto& p : parts) {
    rep.disagreements += p.dis;
    rep.satisfied_a += p.sat;
    if (p.first < first) {
      first = p.first;
      rep.first_disagreement = p.point;
    }
  }
  return rep;
}

}  // namespace qmp
