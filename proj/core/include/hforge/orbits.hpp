#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hforge/core.hpp"

/// Parametrized Hadamard families of orders 4 and 9: the symmetric BCCB form,
/// its eigenvalues and Hadamard classification, the zeta parametrization of
/// the two-parameter orbit, the two affine suborbits, the Fourier and Backelin
/// orbits, and the named special matrices.
namespace hforge::orbits {

/// The quadruple (x,y,u,w) of unimodular scalars filling the symmetric BCCB
/// pattern: diagonal 1, x on the block diagonals, (y,u,w) cycling through the
/// off-diagonal blocks.
struct Bc9Params {
  Unimodular x, y, u, w;

  /// x+y+u+w, recomputed on every call.
  cplx sigma() const { return x.value() + y.value() + u.value() + w.value(); }
};

/// A point of the two-parameter orbit: zeta = 2(x+y)-1 = -2(u+w)+1, plus the
/// two square-root branch signs selecting x<->y and u<->w.
struct ZetaPoint {
  cplx zeta;
  int branch_xy = +1;
  int branch_uw = +1;
};

/// Enphasing exponents of the order-9 Fourier orbit representative:
/// Delta1 = diag(1,x1,x2), Delta2 = diag(1,x3,x4).
struct FourierParams {
  Unimodular x1, x2, x3, x4;
};

/// The circulant Backelin orbit circ(1, u, v, 1, w3*u, w3^2*v, 1, w3^2*u, w3*v).
struct BackelinParams {
  Unimodular u, v;
};

enum class Bc9Class { SigmaOne, SigmaMinusTwo, NotHadamard };

/// The 9x9 symmetric BCCB matrix with blocks A = circ(1,x,x), B = circ(y,u,w).
/// Diagonal entries are exactly 1 and the matrix equals its transpose bit-exactly.
Matrix bc9_matrix(const Bc9Params& p);

/// Eigenvalues in the fixed diagonalization order:
/// (1+2s, 1-s+3y, 1-s+3y, 1-s+3x, 1-s+3w, 1-s+3u, 1-s+3x, 1-s+3u, 1-s+3w)
/// with s = x+y+u+w. Matches the diagonal of (1/9)(F3 (x) F3) H (F3 (x) F3)^dag.
std::vector<cplx> bc9_eigenvalues(const Bc9Params& p);

/// SigmaOne iff |sigma-1| <= tol; SigmaMinusTwo iff two of (x,y,u,w) are
/// within tol of w3 and the other two within tol of w3^2; NotHadamard otherwise.
/// The two Hadamard branches are exactly the quadruples whose BCCB matrix is
/// Hadamard.
Bc9Class classify_bc9(const Bc9Params& p, double tol = kDefaultTol);

/// Inverse of params_to_zeta on the lens |1+zeta| <= 4, |1-zeta| <= 4.
/// Branch signs pick the conjugate pair assignments. A square-root term whose
/// radicand is within 1e-12 of zero is clamped to zero, so boundary points are
/// admitted. Throws OutOfDomainError outside the lens and DegeneratePointError
/// at zeta = +1/-1 (where a one-parameter family hides in the limit).
Bc9Params zeta_to_params(const ZetaPoint& z);

/// 2(x+y)-1 for sigma = 1 quadruples. Throws std::invalid_argument when
/// |sigma-1| > tol (the map is only defined on that branch).
cplx params_to_zeta(const Bc9Params& p, double tol = kDefaultTol);

/// Affine suborbit A: bc9_matrix(mu, -mu, -w3, -w3^2). Generic defect 2.
Matrix bc9a(const Unimodular& mu);

/// Affine suborbit B: bc9_matrix(1, xi, w3*xi, w3^2*xi). Generic defect 10;
/// lies in the Fourier orbit for every xi.
Matrix bc9b(const Unimodular& xi);

/// The order-9 Fourier-orbit representative: 3x3 blocks
/// [F3, D1 F3, D2 F3; F3, w D1 F3, w^2 D2 F3; F3, w^2 D1 F3, w D2 F3].
Matrix fourier9(const FourierParams& fp);

/// The circulant Backelin matrix; Hadamard for every unimodular (u,v).
Matrix backelin(const BackelinParams& bp);

/// Catalog of named matrices:
///   F2, C2, F3, C3, F4 (takes the parameter t, see special_f4), C3xC3, F3xF3,
///   BC9AcapB, BC9Ab, BC9Ab_dagger, W9A_point, B9_0_point.
/// Throws std::invalid_argument for unknown names.
Matrix special(const std::string& name);

/// Order-4 circulant Hadamard circ(1, t, -1, t), Hadamard for every
/// unimodular t. The default t is the principal square root of 1/x at x = i.
Matrix special_f4(const Unimodular& t);
Unimodular special_f4_default_t();

/// Row/column permutation pair undoing a permutation of (x,y,u,w):
/// with q = perm applied to p, bc9_matrix(q)(i,j) = bc9_matrix(p)(row[i], col[j])
/// entrywise within 1e-12. perm maps positions (0,1,2,3) = (x,y,u,w) so that
/// q.x = p[perm[0]], etc. A witness always exists; found by backtracking.
std::pair<std::vector<int>, std::vector<int>> param_permutation_witness(
    const Bc9Params& p, const std::array<int, 4>& perm);

/// Quadruple after position permutation (helper for the witness search).
Bc9Params permute_params(const Bc9Params& p, const std::array<int, 4>& perm);

}  // namespace hforge::orbits
