#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmp/catalog.hpp"
#include "qmp/system.hpp"
#include "qmp/tensor.hpp"

namespace qmp {

struct CampaignReport {
  std::string family;
  std::string system;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double min_slack = 0;
  std::size_t violations = 0;
  std::optional<std::size_t> first_violation;  // trial index
  double wall_seconds = 0;                       // not part of the deterministic content
};

/// Deterministic content equality (ignores wall time).
bool same_outcome(const CampaignReport& a, const CampaignReport& b);

struct CampaignOptions {
  double tolerance = 1e-10;
  unsigned jobs = 1;
  /// Mixed systems: fixed joint spectrum (sorted, any trace). When absent a
  /// random spectrum is drawn per trial.
  std::optional<std::vector<double>> joint_spectrum;
};

/// Samples states of `system` (Haar pure, random unitary orbit of a joint
/// spectrum for mixed systems, local hidden-variable correlations for Bell
/// scenarios), reduces them and checks the family. Trial t uses the seed
/// derive_seed(seed, t), so reports do not depend on the number of workers.
CampaignReport mc_verify(const std::string& family, const SystemDescriptor& system,
                         std::size_t trials, std::uint64_t seed,
                         const CampaignOptions& options = {});
CampaignReport mc_verify(const Family& family, const SystemDescriptor& system,
                         std::size_t trials, std::uint64_t seed,
                         const CampaignOptions& options = {}, bool particle_hole = false);

/// Same bookkeeping over given spectra (used for planted violations).
CampaignReport verify_spectra(const Family& family, const std::vector<SpectraBundle>& inputs,
                              double tolerance = 1e-10);

/// One sampled instance of the system, reduced to spectra.
SpectraBundle sample_spectra(const SystemDescriptor& system, std::uint64_t seed,
                             const std::optional<std::vector<double>>& joint_spectrum = {});

struct WitnessOptions {
  int restarts = 20;
  int iterations = 400;
  double target_residual = 1e-3;
};

struct WitnessResult {
  bool success = false;
  double residual = 0;  // sqrt of the summed squared spectrum distances
  int restarts_used = 0;
  PureState state;
  std::vector<std::vector<double>> achieved;
};

/// Local search for a pure state with the given sorted marginal spectra.
/// Never certifies infeasibility; failure only reports the best residual.
WitnessResult witness_search(const std::vector<std::vector<double>>& targets, const Dims& dims,
                             std::uint64_t seed, const WitnessOptions& options = {});

/// Marginal spectra (one per factor) of a pure state, sorted nonincreasing.
std::vector<std::vector<double>> marginal_spectra(const PureState& psi);

struct IsospectralityReport {
  std::vector<Dims> formats;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> max_discrepancy;  // per format
  double overall = 0;
};

/// Sorted nonzero spectra of both halves of Haar pure bipartite states.
IsospectralityReport isospectrality_campaign(const std::vector<Dims>& formats,
                                             std::size_t trials, std::uint64_t seed,
                                             unsigned jobs = 1);

EquivalenceReport equivalence_campaign(const std::string& a, const std::string& b,
                                       std::size_t samples, std::uint64_t seed,
                                       unsigned jobs = 1);

/// QMP_JOBS if set and positive, otherwise 1.
unsigned default_jobs();

}  // namespace qmp
