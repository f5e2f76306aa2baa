#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmp/catalog.hpp"
#include "qmp/exact.hpp"
#include "qmp/permutation.hpp"
#include "qmp/polynomial.hpp"

namespace qmp {

/// Largest support (number of moved letters) accepted by schubert_poly.
inline constexpr int kMaxSchubertSupport = 10;

/// S_w = d_{w^-1 w0}(x1^{m-1} x2^{m-2} ... x_{m-1}) computed in S_m with m the
/// support size of w. Results are cached (thread-safe).
IntPolynomial schubert_poly(const Permutation& w);

/// Same polynomial computed along an explicit reduced word of w^-1 w0 in S_n,
/// n = w.size(). Used to check reduced-word independence.
IntPolynomial schubert_poly_from_word(const Permutation& w, const std::vector<int>& word);

/// Monomial expansion by the Billey-Jockusch-Stanley compatible-sequence formula.
IntPolynomial schubert_poly_bjs(const Permutation& w);

/// Structure of the joint sum sequence. Component test spectra are stored
/// consecutively in one value vector; each joint entry sums the listed
/// (0-based, global) value indices.
struct JointLayout {
  std::vector<int> component_sizes;
  std::vector<std::vector<int>> entries;

  int num_values() const;
  int offset(int component) const;
  /// Tensor product d1 x d2 x ...: entries in row-major order, first factor slowest.
  static JointLayout tensor(const std::vector<int>& dims);
  /// One component of size r; entries are the n-subsets in lexicographic order.
  static JointLayout fermion(int r, int n);
};

/// Entry sums for the concatenated component values.
QVector joint_sums(const JointLayout& layout, const QVector& values);

/// Entry indices sorted by decreasing sum. Exact; a tie raises kWallOfCubicle.
std::vector<int> joint_order(const JointLayout& layout, const QVector& values);

/// True when the sums at `values` are nonincreasing along `order` (ties allowed).
bool order_compatible(const JointLayout& layout, const QVector& values,
                      const std::vector<int>& order);

/// Position k -> pair (i, j) (1-based) with the k-th largest sum a_i + b_j.
std::vector<std::pair<int, int>> sum_order(const QVector& a, const QVector& b);

/// Position k -> n-subset (1-based, ascending) with the k-th largest sum of a.
std::vector<std::vector<int>> subset_sum_order(const QVector& a, int n);

/// Coefficient d_{u_1} ... d_{u_s} S_w(y) with y_k replaced by the sum of the
/// variables in the k-th entry of `order`. Zero when the degrees differ.
std::int64_t coefficient(const JointLayout& layout, const std::vector<Permutation>& us,
                         const Permutation& w, const std::vector<int>& order);

std::int64_t coeff_two(const Permutation& u, const Permutation& v, const Permutation& w,
                       const std::vector<std::pair<int, int>>& order);
std::int64_t coeff_fermi(const Permutation& v, const Permutation& w,
                         const std::vector<std::vector<int>>& order);

enum class CoefficientFilter { kUnit, kOdd, kNonzero };
bool passes(CoefficientFilter filter, std::int64_t c);
std::string to_string(CoefficientFilter filter);
CoefficientFilter parse_filter(const std::string& text);

struct GeneratedInequality {
  InequalityRecord record;
  std::vector<QVector> test_spectra;  // per component
  std::vector<Permutation> perms;     // per component
  Permutation w;
  std::int64_t coefficient = 0;
};

/// Builds sum_s sum_i a^s_i lambda^s_{u_s(i)} <= sum_k (sorted sums)_k lambda_{w(k)},
/// scaled to integers. When `order` is empty the strict order at the test
/// spectra is used. Throws kZeroCoefficient when the coefficient vanishes.
GeneratedInequality generate(const JointLayout& layout, const std::vector<QVector>& spectra,
                             const std::vector<Permutation>& us, const Permutation& w,
                             const std::vector<int>& order = {});

GeneratedInequality generate_inequality(const QVector& a, const QVector& b,
                                        const Permutation& u, const Permutation& v,
                                        const Permutation& w,
                                        const std::vector<int>& order = {});
GeneratedInequality generate_fermi_inequality(const QVector& a, int n, const Permutation& v,
                                              const Permutation& w,
                                              const std::vector<int>& order = {});

struct GenerateOptions {
  int max_length = 6;
  CoefficientFilter filter = CoefficientFilter::kUnit;
};

/// All triples (us, w) with l(w) = sum l(u_s) <= max_length whose coefficient
/// passes the filter under at least one of the given orders. Deterministic.
std::vector<GeneratedInequality> generate_all(const JointLayout& layout,
                                              const std::vector<QVector>& spectra,
                                              const std::vector<std::vector<int>>& orders,
                                              const GenerateOptions& options = {});

/// Qubit array basic inequality at per-site values a (a_i >= 0, nondecreasing),
/// plus the single-site sign flips combined with an odd adjacent transposition
/// of the joint side. Candidates are kept when their coefficient passes the
/// filter under one of `orders` (joint entries in row-major order) and are then
/// pruned by dominance among records with equal right-hand sides.
std::vector<GeneratedInequality> generate_qubit_array(
    const QVector& a, const std::vector<std::vector<int>>& orders,
    CoefficientFilter filter = CoefficientFilter::kUnit);

/// Joint-side index tuple (1-based per component) of a row-major entry.
std::vector<int> entry_tuple(const std::vector<int>& dims, int entry);

}  // namespace qmp
