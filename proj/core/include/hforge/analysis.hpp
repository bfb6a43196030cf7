#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hforge/core.hpp"
#include "hforge/orbits.hpp"

/// Numerical invariants of Hadamard matrices: the defect, Butson class,
/// Haagerup-style phase fingerprint, an explicit equivalence search, and the
/// order-3 Hadamard submatrix detector.
namespace hforge::analysis {

/// Outcome of a defect computation. The defect is the dimension of the space
/// of first-order entrywise phase perturbations preserving unitarity, minus
/// the 2n-1 trivially-enphasing directions:
///   defect = n^2 - rank - (2n - 1).
/// Rank decisions are audited: if the singular spectrum has no clear gap at
/// the cut (ratio below 10), reliable is false.
struct DefectReport {
  std::size_t n = 0;
  std::size_t rank = 0;
  long defect = 0;
  std::vector<double> singular_values;  // descending
  double tolerance_used = 0.0;
  double gap_ratio = 0.0;  // smallest kept / largest dropped
  bool reliable = true;
};

struct EquivalenceWitness {
  // replayed as A(i,j) = d1[row[i]] * B(row[i], col[j]) * d2[col[j]]
  std::vector<int> row, col;
  std::vector<cplx> d1, d2;
};

enum class EquivalenceTag { Equivalent, Inequivalent, Unknown };

struct EquivalenceVerdict {
  EquivalenceTag tag = EquivalenceTag::Unknown;
  std::optional<EquivalenceWitness> witness;
  /// For Inequivalent: the first separating invariant ("defect",
  /// "butson-class", "fingerprint") or "exhaustive-search". For Equivalent:
  /// "search". For Unknown: "budget-exhausted".
  std::string reason;
};

/// Canonical multiset of the 2x2 generalized-minor phase products
/// H(i,j) H(k,l) conj(H(i,l)) conj(H(k,j)) over i<k, j<l, sorted and rounded
/// to 1e-9. Invariant under Hadamard equivalence.
struct HaagerupFingerprint {
  std::vector<cplx> products;
  friend bool operator==(const HaagerupFingerprint&, const HaagerupFingerprint&) = default;
};

/// Defect of a Hadamard (or scaled-unitary) matrix. Builds the real linear
/// system of all row-pair unitarity derivatives in the n^2 phase unknowns and
/// takes its numerical rank from singular values at threshold tol * sigma_max.
/// Throws std::invalid_argument unless H^dag H is a multiple of I within 1e-6.
DefectReport defect(const Matrix& h, double tol = kRankTol);

/// Smallest q <= q_max such that every entry is within 1e-9 of a q-th root of
/// unity; nullopt when there is none.
std::optional<long> butson_class(const Matrix& h, long q_max);

HaagerupFingerprint haagerup_fingerprint(const Matrix& h);

/// Decides Hadamard equivalence A = P1 D1 B D2 P2. Cheap invariants (defect,
/// Butson class, fingerprint) are compared first; on full agreement an
/// explicit witness is searched by backtracking over dephasing pivots and row
/// assignments. Unknown is returned only on node-budget exhaustion.
EquivalenceVerdict equivalent(const Matrix& a, const Matrix& b,
                              long long node_budget = 10'000'000);

/// Replays a witness: the matrix P1 D1 B D2 P2 it encodes.
Matrix apply_witness(const Matrix& b, const EquivalenceWitness& w);

/// All 3x3 submatrices (row triple, column triple) whose three rows are
/// pairwise orthogonal within tol; for unimodular entries these are exactly
/// the enphased order-3 Hadamard submatrices. Output is lexicographic.
std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> h3_submatrix_scan(
    const Matrix& h, double tol = kDefaultTol);

/// Defect of the order-9 Fourier-orbit matrix with all four enphasing
/// parameters restricted to sixth roots of unity {+-1, +-w3, +-w3^2}.
long fourier_butson_defect(const orbits::FourierParams& fp);

}  // namespace hforge::analysis
