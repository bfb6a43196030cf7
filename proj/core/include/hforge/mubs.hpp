#pragma once

#include <array>
#include <string>
#include <vector>

#include "hforge/core.hpp"
#include "hforge/orbits.hpp"

/// The complete set of 10 mutually unbiased bases of C^9, in its two unitary
/// presentations (the B set and the BCCB-shaped M set), with verification,
/// the closed multiplication table of the M matrices, and their BCCB
/// parameter identification.
namespace hforge::mubs {

/// Ordered list of bases; each matrix is unitary with the basis vectors as
/// columns (scaling baked in, so unbiasedness reads directly off Bi^dag Bj).
struct MubSet {
  std::vector<Matrix> bases;
  std::vector<std::string> labels;
};

struct MubReport {
  double max_unitarity_error = 0.0;
  double max_unbiasedness_error = 0.0;
  double tolerance_used = 0.0;
  bool pass = false;
};

/// The nine diagonal unitaries D1..D9 (entries in {1, w3, w3^2}, D1 = I) that
/// enphase the Fourier tensor square into the complete MUB set.
std::vector<Matrix> d_table();

/// B0 = I, Bi = (1/3) Di (F3 (x) F3).
MubSet build_b_set();

/// M0 = (1/3)(F3 (x) F3)^dag, M1 = I,
/// Mi = (1/9)(F3 (x) F3)^dag Di (F3 (x) F3) for i = 2..9.
/// For i >= 2 the 3*Mi are symmetric BCCB Hadamard matrices.
MubSet build_m_set();

/// Checks every basis for unitarity and every pair i<j for unbiasedness
/// (all entries of Bi^dag Bj of modulus 1/3 within tol).
MubReport verify_mub(const MubSet& s, double tol = 1e-10);

/// The 9x9 table of indices k with Mi^dag Mj = M_k (M1 playing the role of I),
/// for i, j in 1..9. Entry (i-1, j-1) = k. Throws if some product matches no
/// M_k, which would falsify the closure of the set.
std::array<std::array<int, 9>, 9> m_multiplication_table();

/// Mi^3 = I, pairwise commutation, and the dagger pairing
/// M3 = M2^dag, M7 = M4^dag, M8 = M6^dag, M9 = M5^dag, all within 1e-10.
bool m_set_algebra_check();

/// Sign s and BCCB parameters with s * 3 * Mi = bc9_matrix(params) entrywise
/// within 1e-10, for i in 2..9. The sign is -1 exactly for i in {4,6,7,8}.
std::pair<int, orbits::Bc9Params> m_to_bc9_params(int i);

}  // namespace hforge::mubs
