#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmp/system.hpp"

namespace qmp {

enum class Relation { kLessEqual, kEqual };
enum class SpectrumOrder { kDecreasing, kIncreasing };

/// sum_s lhs[s] . lambda^s  (<= or =)  rhs . joint + bound
/// Coefficients always refer to spectra sorted nonincreasing.
struct InequalityRecord {
  std::vector<std::vector<std::int64_t>> lhs;
  std::vector<std::int64_t> rhs;
  std::int64_t bound = 0;
  Relation relation = Relation::kLessEqual;
  std::string family;
  std::string note;

  friend bool operator==(const InequalityRecord& a, const InequalityRecord& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs && a.bound == b.bound && a.relation == b.relation;
  }
};

enum class CheckKind { kLinear, kEvenDegeneracy, kMetadataOnly };

struct Family {
  std::string id;
  std::string system;           // human-readable system description
  std::vector<int> ranks;       // marginal spectrum lengths
  int joint_rank = 0;           // 0 when no joint spectrum enters
  double marginal_trace = 1.0;  // normalization of marginal spectra
  double joint_trace = 1.0;
  bool spectral = true;         // false for correlation vectors (no sorting)
  bool fermionic = false;
  SpectrumOrder listed_order = SpectrumOrder::kDecreasing;
  bool sort_sites_by_gap = false;  // order qubit sites so lambda_1 - lambda_2 increases
  CheckKind kind = CheckKind::kLinear;
  std::size_t declared_count = 0;
  std::string status = "complete";  // or "as tabulated"
  std::vector<InequalityRecord> records;
};

struct SpectraBundle {
  std::vector<std::vector<double>> marginals;
  std::vector<double> joint;
};

struct CheckOptions {
  double tolerance = 1e-10;
  bool particle_hole = false;         // evaluate the dual system's family on 1 - lambda
  std::optional<int> particles;       // fermionic particle number if not inferable
};

struct CheckReport {
  std::string family;
  bool satisfied = true;
  double worst_slack = 0;
  std::vector<std::size_t> violated;
  std::vector<std::string> transformations;
  std::size_t evaluated = 0;
};

struct FamilyMatch {
  std::string id;
  bool via_particle_hole = false;
  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

/// Stable identifiers of all registered families, in registry order.
const std::vector<std::string>& family_ids();

/// Family table instantiated for a system. Size-dependent families (POLYGON,
/// BASIC, PAULI, TWO_PARTICLE_PURE) need the system; fixed ones ignore it.
Family instantiate_family(const std::string& id, const SystemDescriptor& system);
Family instantiate_family(const std::string& id);  // fixed-size families only

std::vector<FamilyMatch> applicable_families(const SystemDescriptor& system);

CheckReport check_family(const std::string& id, const SpectraBundle& spectra,
                         const CheckOptions& options = {});
CheckReport check_family(const Family& family, const SpectraBundle& spectra,
                         const CheckOptions& options = {});

/// Evaluate records on already canonical spectra (no sorting or scaling).
double record_slack(const InequalityRecord& rec, const SpectraBundle& spectra);

/// Correlations ordered (E11, E12, E21, E22) with E_ij = <a_i b_j>.
CheckReport check_chsh(const std::vector<double>& correlations, double tolerance = 1e-10);

struct EquivalenceReport {
  std::string family_a, family_b;
  std::size_t samples = 0;
  std::size_t disagreements = 0;
  std::size_t satisfied_a = 0;  // how many samples satisfied family a (coverage)
  std::uint64_t seed = 0;
  std::vector<double> first_disagreement;
};

/// Dual evaluation on random sorted, normalized points of the shared system.
EquivalenceReport check_equivalence(const std::string& a, const std::string& b,
                                    std::size_t samples, std::uint64_t seed,
                                    unsigned jobs = 1);

/// Sorted spectrum sample used by the equivalence runs (inside [0,1]^r for
/// fermionic systems).
std::vector<double> sample_sorted_point(int r, double trace, bool pauli_box,
                                        std::uint64_t seed);

/// Greedy even-degeneracy pairing of sorted eigenvalues. Returns the largest
/// mismatch (0 when perfectly paired).
double degeneracy_defect(const std::vector<double>& sorted_desc);

namespace tables {
std::vector<InequalityRecord> bravyi();
std::vector<InequalityRecord> franz_base();  // 7 records for the identity permutation
std::vector<InequalityRecord> franz();          // all permutations, deduplicated
std::vector<InequalityRecord> three_qubit_mixed();
std::vector<InequalityRecord> bd6();
std::vector<InequalityRecord> f7_bd();
std::vector<InequalityRecord> f7_list();
std::vector<InequalityRecord> f8_31();
std::vector<int> f8_31_groups();
std::vector<InequalityRecord> f84_14();
std::vector<InequalityRecord> f84_abs();
std::vector<std::vector<std::int64_t>> f84_abs_forms();
std::vector<InequalityRecord> w2h4_mixed();
std::vector<InequalityRecord> chsh16();
std::vector<InequalityRecord> polygon(int qubits);
std::vector<InequalityRecord> basic(const std::vector<int>& dims);
std::vector<InequalityRecord> pauli(int r);
}  // namespace tables

}  // namespace qmp
