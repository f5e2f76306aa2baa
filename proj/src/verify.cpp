#include "qmp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

#include "qmp/error.hpp"
#include "qmp/fermi.hpp"
#include "qmp/rng.hpp"

namespace qmp {
namespace {

struct Partial {
  double min_slack = std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  std::optional<std::size_t> first;
};

// Runs body(t) for t in [0, n) on `jobs` contiguous blocks.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t lo = n * w / jobs, hi = n * (w + 1) / jobs;
    pool.emplace_back([&, lo, hi, w] {
      try {
        body(lo, hi, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<double> random_spectrum(std::size_t d, CounterRng& rng) {
  std::uniform_real_distribution<double> unif(0.1, 2.0);
  std::gamma_distribution<double> gamma(unif(rng), 1.0);
  std::vector<double> v(d);
  double s = 0;
  for (auto& x : v) s += (x = gamma(rng));
  for (auto& x : v) x /= s;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<double> normalized_sorted(std::vector<double> v) {
  double s = 0;
  for (double x : v) {
    if (x < 0) fail(ErrorCode::kInvalidSpectrum, "joint spectrum must be nonnegative");
    s += x;
  }
  if (s <= 0) fail(ErrorCode::kInvalidSpectrum, "joint spectrum must have positive trace");
  for (auto& x : v) x /= s;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Applies the site operator g (d_k x d_k) to factor k of a state vector.
CVector apply_on_site(const CVector& psi, const Dims& dims, int k, const CMatrix& g) {
  std::size_t inner = 1;
  for (std::size_t s = k + 1; s < dims.size(); ++s) inner *= dims[s];
  const std::size_t dk = dims[k];
  const std::size_t outer = psi.size() / (dk * inner);
  CVector out = CVector::Zero(psi.size());
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t a = 0; a < dk; ++a) {
      for (std::size_t b = 0; b < dk; ++b) {
        const Complex c = g(a, b);
        if (c == Complex(0)) continue;
        const std::size_t ra = (o * dk + a) * inner, rb = (o * dk + b) * inner;
        for (std::size_t i = 0; i < inner; ++i) out[ra + i] += c * psi[rb + i];
      }
    }
  }
  return out;
}

struct Objective {
  double value = 0;
  CVector gradient;
  std::vector<std::vector<double>> spectra;
};

Objective evaluate(const CVector& psi, const Dims& dims,
                   const std::vector<std::vector<double>>& targets, bool with_gradient) {
  Objective obj;
  const PureState state{psi, dims};
  if (with_gradient) obj.gradient = CVector::Zero(psi.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const auto rho = partial_trace(state, {static_cast<int>(k)});
    const auto es = hermitian_eigensystem(rho.entries);
    obj.spectra.push_back(es.values);
    CMatrix g = CMatrix::Zero(dims[k], dims[k]);
    for (int j = 0; j < dims[k]; ++j) {
      const double diff = es.values[j] - targets[k][j];
      obj.value += diff * diff;
      if (with_gradient) g += 2.0 * diff * es.vectors.col(j) * es.vectors.col(j).adjoint();
    }
    if (with_gradient) obj.gradient += 2.0 * apply_on_site(psi, dims, static_cast<int>(k), g);
  }
  return obj;
}

}  // namespace

bool same_outcome(const CampaignReport& a, const CampaignReport& b) {
  return a.family == b.family && a.system == b.system && a.trials == b.trials &&
         a.seed == b.seed && a.min_slack == b.min_slack && a.violations == b.violations &&
         a.first_violation == b.first_violation;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("QMP_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

SpectraBundle sample_spectra(const SystemDescriptor& sys, std::uint64_t seed,
                             const std::optional<std::vector<double>>& joint_spectrum) {
  CounterRng rng(seed);
  SpectraBundle out;
  const bool pure = sys.purity == Purity::kPure;
  if (sys.kind == SystemKind::kTensor) {
    const auto d = static_cast<int>(total_dim(sys.dims));
    if (pure) {
      const auto psi = haar_pure(sys.dims, derive_seed(seed, 1));
      out.marginals = marginal_spectra(psi);
      out.joint.assign(d, 0.0);
      out.joint[0] = 1.0;
      return out;
    }
    out.joint = joint_spectrum ? normalized_sorted(*joint_spectrum) : random_spectrum(d, rng);
    if (static_cast<int>(out.joint.size()) != d) {
      fail(ErrorCode::kDimensionMismatch, "joint spectrum length does not match the system");
    }
    const auto rho = random_mixed_with_spectrum(Spectrum{out.joint, 1.0}, sys.dims,
                                                derive_seed(seed, 2));
    for (std::size_t k = 0; k < sys.dims.size(); ++k) {
      out.marginals.push_back(spectrum(partial_trace(rho, {static_cast<int>(k)})).values);
    }
    return out;
  }
  if (sys.kind == SystemKind::kFermion) {
    const FermionBasis basis(sys.r, sys.n);
    const int d = static_cast<int>(basis.size());
    if (pure) {
      const auto psi = haar_fermion(sys.r, sys.n, derive_seed(seed, 1));
      out.marginals.push_back(spectrum(one_rdm(psi)).values);
      out.joint.assign(d, 0.0);
      out.joint[0] = 1.0;
      return out;
    }
    out.joint = joint_spectrum ? normalized_sorted(*joint_spectrum) : random_spectrum(d, rng);
    if (static_cast<int>(out.joint.size()) != d) {
      fail(ErrorCode::kDimensionMismatch, "joint spectrum length does not match the system");
    }
    const CMatrix u = haar_unitary(d, derive_seed(seed, 2));
    Eigen::VectorXd nu(d);
    for (int i = 0; i < d; ++i) nu[i] = out.joint[i];
    const CMatrix rho = u * nu.cast<Complex>().asDiagonal() * u.adjoint();
    out.marginals.push_back(spectrum(one_rdm(basis, rho)).values);
    return out;
  }
  // Bell scenario: convex mixture of the 16 local deterministic strategies.
  std::gamma_distribution<double> gamma(0.5, 1.0);
  std::vector<double> w(16);
  double s = 0;
  for (auto& x : w) s += (x = gamma(rng));
  std::vector<double> e(4, 0.0);
  for (int k = 0; k < 16; ++k) {
    const int a1 = (k & 1) ? -1 : 1, a2 = (k & 2) ? -1 : 1;
    const int b1 = (k & 4) ? -1 : 1, b2 = (k & 8) ? -1 : 1;
    const double p = w[k] / s;
    e[0] += p * a1 * b1;
    e[1] += p * a1 * b2;
    e[2] += p * a2 * b1;
    e[3] += p * a2 * b2;
  }
  for (auto& x : e) x = std::clamp(x, -1.0, 1.0);
  out.marginals.push_back(e);
  return out;
}

CampaignReport mc_verify(const std::string& family, const SystemDescriptor& system,
                         std::size_t trials, std::uint64_t seed, const CampaignOptions& options) {
  const auto matches = applicable_families(system);
  auto it = std::find_if(matches.begin(), matches.end(),
                         [&](const FamilyMatch& m) { return m.id == family; });
  if (it == matches.end()) {
    fail(ErrorCode::kIncompatibleSystems, family + " does not apply to " + system.to_string());
  }
  Family fam;
  if (family == "POLYGON" || family == "BASIC") {
    fam = instantiate_family(family, system);
  } else if (family == "PAULI" || family == "TWO_PARTICLE_PURE") {
    const int n = it->via_particle_hole ? system.r - system.n : system.n;
    fam = instantiate_family(family, SystemDescriptor::fermion(system.r, n, system.purity));
  } else {
    fam = instantiate_family(family);
  }
  return mc_verify(fam, system, trials, seed, options, it->via_particle_hole);
}

CampaignReport mc_verify(const Family& fam, const SystemDescriptor& system, std::size_t trials,
                         std::uint64_t seed, const CampaignOptions& options, bool particle_hole) {
  const auto start = std::chrono::steady_clock::now();
  CheckOptions copt;
  copt.tolerance = options.tolerance;
  copt.particle_hole = particle_hole;
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<Partial> parts(jobs);
  parallel_for(trials, jobs, [&](std::size_t lo, std::size_t hi, unsigned w) {
    Partial& p = parts[w];
    for (std::size_t t = lo; t < hi; ++t) {
      auto sp = sample_spectra(system, derive_seed(seed, t), options.joint_spectrum);
      if (fam.joint_rank == 0) sp.joint.clear();
      const auto rep = check_family(fam, sp, copt);
      p.min_slack = std::min(p.min_slack, rep.worst_slack);
      if (rep.worst_slack < -options.tolerance) {
        ++p.violations;
        if (!p.first) p.first = t;
      }
    }
  });
  CampaignReport r;
  r.family = fam.id;
  r.system = system.to_string();
  r.trials = trials;
  r.seed = seed;
  r.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& p : parts) {
    r.min_slack = std::min(r.min_slack, p.min_slack);
    r.violations += p.violations;
    if (p.first && (!r.first_violation || *p.first < *r.first_violation)) r.first_violation = p.first;
  }
  if (trials == 0) r.min_slack = 0;
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CampaignReport verify_spectra(const Family& fam, const std::vector<SpectraBundle>& inputs,
                              double tolerance) {
  CampaignReport r;
  r.family = fam.id;
  r.system = fam.system;
  r.trials = inputs.size();
  r.min_slack = inputs.empty() ? 0 : std::numeric_limits<double>::infinity();
  CheckOptions copt;
  copt.tolerance = tolerance;
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    const auto rep = check_family(fam, inputs[t], copt);
    r.min_slack = std::min(r.min_slack, rep.worst_slack);
    if (rep.worst_slack < -tolerance) {
      ++r.violations;
      if (!r.first_violation) r.first_violation = t;
    }
  }
  return r;
}

std::vector<std::vector<double>> marginal_spectra(const PureState& psi) {
  std::vector<std::vector<double>> out;
  for (std::size_t k = 0; k < psi.dims.size(); ++k) {
    out.push_back(spectrum(partial_trace(psi, {static_cast<int>(k)})).values);
  }
  return out;
}

WitnessResult witness_search(const std::vector<std::vector<double>>& targets_in, const Dims& dims,
                             std::uint64_t seed, const WitnessOptions& options) {
  if (targets_in.size() != dims.size()) {
    fail(ErrorCode::kDimensionMismatch, "one target spectrum per factor is required");
  }
  std::vector<std::vector<double>> targets = targets_in;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (static_cast<int>(targets[k].size()) != dims[k]) {
      fail(ErrorCode::kDimensionMismatch, "target length does not match the factor dimension");
    }
    targets[k] = normalized_sorted(targets[k]);
  }
  WitnessResult best;
  best.residual = std::numeric_limits<double>::infinity();
  const double goal = options.target_residual * options.target_residual;
  for (int restart = 0; restart < options.restarts; ++restart) {
    CVector psi = haar_pure(dims, derive_seed(seed, restart)).amplitudes;
    Objective obj = evaluate(psi, dims, targets, true);
    double step = 0.5;
    for (int it = 0; it < options.iterations && obj.value >= goal; ++it) {
      // Riemannian gradient on the unit sphere (real inner product).
      CVector g = obj.gradient;
      const Complex overlap = psi.dot(g);  // <psi, g>
      g -= overlap.real() * psi;
      const double gnorm2 = g.squaredNorm();
      if (gnorm2 < 1e-30) break;
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        CVector trial = psi - step * g;
        trial.normalize();
        const Objective t = evaluate(trial, dims, targets, false);
        if (t.value <= obj.value - 1e-4 * step * gnorm2) {
          psi = trial;
          obj = evaluate(psi, dims, targets, true);
          step = std::min(step * 2.0, 8.0);
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    const double residual = std::sqrt(obj.value);
    if (residual < best.residual) {
      best.residual = residual;
      best.state = PureState{psi, dims};
      best.achieved = obj.spectra;
    }
    best.restarts_used = restart + 1;
    if (obj.value < goal) {
      best.success = true;
      break;
    }
  }
  return best;
}

IsospectralityReport isospectrality_campaign(const std::vector<Dims>& formats, std::size_t trials,
                                             std::uint64_t seed, unsigned jobs) {
  IsospectralityReport rep;
  rep.formats = formats;
  rep.trials = trials;
  rep.seed = seed;
  for (std::size_t f = 0; f < formats.size(); ++f) {
    const Dims& dims = formats[f];
    if (dims.size() != 2) fail(ErrorCode::kInvalidArgument, "isospectrality needs bipartite formats");
    std::vector<double> worst(std::max(1u, jobs), 0.0);
    parallel_for(trials, jobs, [&](std::size_t lo, std::size_t hi, unsigned w) {
      for (std::size_t t = lo; t < hi; ++t) {
        const auto psi = haar_pure(dims, derive_seed(derive_seed(seed, f), t));
        const auto a = spectrum(partial_trace(psi, {0})).values;
        const auto b = spectrum(partial_trace(psi, {1})).values;
        const std::size_t k = std::min(a.size(), b.size());
        double d = 0;
        for (std::size_t i = 0; i < k; ++i) d = std::max(d, std::abs(a[i] - b[i]));
        // Entries beyond the smaller rank must vanish.
        for (std::size_t i = k; i < a.size(); ++i) d = std::max(d, std::abs(a[i]));
        for (std::size_t i = k; i < b.size(); ++i) d = std::max(d, std::abs(b[i]));
        worst[w] = std::max(worst[w], d);
      }
    });
    const double m = *std::max_element(worst.begin(), worst.end());
    rep.max_discrepancy.push_back(m);
    rep.overall = std::max(rep.overall, m);
  }
  return rep;
}

EquivalenceReport equivalence_campaign(const std::string& a, const std::string& b,
                                       std::size_t samples, std::uint64_t seed, unsigned jobs) {
  return check_equivalence(a, b, samples, seed, jobs);
}

}  // namespace qmp
