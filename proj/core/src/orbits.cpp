#include "hforge/orbits.hpp"

#include <cmath>
#include <limits>

#include "permmatch.hpp"

namespace hforge::orbits {

namespace {

const cplx kOmega = root_of_unity(3, 1).value();
const cplx kOmega2 = root_of_unity(3, 2).value();

constexpr double kBoundaryClamp = 1e-12;

}  // namespace

Matrix bc9_matrix(const Bc9Params& p) {
  const cplx one(1.0, 0.0);
  const cplx x = p.x.value();
  const cplx b[3] = {p.y.value(), p.u.value(), p.w.value()};  // circ(y,u,w)
  Matrix h(9);
  for (int bi = 0; bi < 3; ++bi)
    for (int bj = 0; bj < 3; ++bj) {
      int d = (bj - bi + 3) % 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          cplx v;
          if (d == 0)
            v = (i == j) ? one : x;
          else if (d == 1)
            v = b[(j - i + 3) % 3];
          else
            v = b[(i - j + 3) % 3];  // transpose of circ(y,u,w)
          h(3 * bi + i, 3 * bj + j) = v;
        }
    }
  return h;
}

std::vector<cplx> bc9_eigenvalues(const Bc9Params& p) {
  cplx s = p.sigma();
  cplx x = p.x.value(), y = p.y.value(), u = p.u.value(), w = p.w.value();
  cplx c = 1.0 - s;
  return {1.0 + 2.0 * s, c + 3.0 * y, c + 3.0 * y, c + 3.0 * x, c + 3.0 * w,
          c + 3.0 * u,   c + 3.0 * x, c + 3.0 * u, c + 3.0 * w};
}

Bc9Class classify_bc9(const Bc9Params& p, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("classify_bc9: tol must be positive");
  if (std::abs(p.sigma() - cplx(1.0, 0.0)) <= tol) return Bc9Class::SigmaOne;
  int n_omega = 0, n_omega2 = 0;
  for (cplx v : {p.x.value(), p.y.value(), p.u.value(), p.w.value()}) {
    if (std::abs(v - kOmega) <= tol) ++n_omega;
    if (std::abs(v - kOmega2) <= tol) ++n_omega2;
  }
  if (n_omega == 2 && n_omega2 == 2) return Bc9Class::SigmaMinusTwo;
  return Bc9Class::NotHadamard;
}

namespace {

std::pair<cplx, cplx> conjugate_pair(cplx half_sum_times_two, int branch) {
  // splits c = z1 + z2 with |z1| = |z2| = 1:
  // z = (c/4*2)... here the argument is (1 +/- zeta), and z1,z2 = c/4*(1 +/- i*sqrt(16/|c|^2 - 1))
  double m2 = std::norm(half_sum_times_two);
  double radicand = 16.0 / m2 - 1.0;
  if (radicand < -kBoundaryClamp)
    throw OutOfDomainError("zeta_to_params: zeta outside the lens |1+z|<=4, |1-z|<=4");
  if (radicand < kBoundaryClamp) radicand = 0.0;
  cplx root(0.0, std::sqrt(radicand));
  cplx base = 0.25 * half_sum_times_two;
  if (branch > 0) return {base * (1.0 + root), base * (1.0 - root)};
  return {base * (1.0 - root), base * (1.0 + root)};
}

}  // namespace

Bc9Params zeta_to_params(const ZetaPoint& z) {
  if (z.branch_xy != 1 && z.branch_xy != -1)
    throw std::invalid_argument("zeta_to_params: branch_xy must be +1 or -1");
  if (z.branch_uw != 1 && z.branch_uw != -1)
    throw std::invalid_argument("zeta_to_params: branch_uw must be +1 or -1");
  cplx zp = 1.0 + z.zeta;
  cplx zm = 1.0 - z.zeta;
  if (std::abs(zp) < 1e-14 || std::abs(zm) < 1e-14)
    throw DegeneratePointError(
        "zeta_to_params: zeta = +1/-1 is a parametrization artifact; "
        "the one-parameter family there is reachable through bc9a");
  auto [x, y] = conjugate_pair(zp, z.branch_xy);
  auto [u, w] = conjugate_pair(zm, z.branch_uw);
  return Bc9Params{Unimodular(x), Unimodular(y), Unimodular(u), Unimodular(w)};
}

cplx params_to_zeta(const Bc9Params& p, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("params_to_zeta: tol must be positive");
  if (std::abs(p.sigma() - cplx(1.0, 0.0)) > tol)
    throw std::invalid_argument("params_to_zeta: requires x+y+u+w = 1");
  // 2(x+y)-1 and -2(u+w)+1 agree up to 2|sigma-1|
  return 2.0 * (p.x.value() + p.y.value()) - 1.0;
}

Matrix bc9a(const Unimodular& mu) {
  return bc9_matrix(Bc9Params{mu, -mu, Unimodular(-kOmega), Unimodular(-kOmega2)});
}

Matrix bc9b(const Unimodular& xi) {
  return bc9_matrix(Bc9Params{Unimodular(cplx(1.0, 0.0)), xi,
                              Unimodular(kOmega * xi.value()),
                              Unimodular(kOmega2 * xi.value())});
}

Matrix fourier9(const FourierParams& fp) {
  Matrix f3 = fourier(3);
  const cplx d[3][3] = {{1.0, 1.0, 1.0},
                        {1.0, fp.x1.value(), fp.x2.value()},
                        {1.0, fp.x3.value(), fp.x4.value()}};
  Matrix h(9);
  for (int bi = 0; bi < 3; ++bi)
    for (int bj = 0; bj < 3; ++bj) {
      cplx m = f3(bi, bj);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          h(3 * bi + i, 3 * bj + j) = m * d[bj][i] * f3(i, j);
    }
  return h;
}

Matrix backelin(const BackelinParams& bp) {
  cplx u = bp.u.value(), v = bp.v.value();
  return circulant({1.0, u, v, 1.0, kOmega * u, kOmega2 * v, 1.0, kOmega2 * u, kOmega * v});
}

Unimodular special_f4_default_t() {
  // t^2 x = 1 at x = i: principal square root of -i
  return Unimodular(cplx(M_SQRT1_2, -M_SQRT1_2));
}

Matrix special_f4(const Unimodular& t) {
  return circulant({1.0, t.value(), -1.0, t.value()});
}

Matrix special(const std::string& name) {
  if (name == "F2") return fourier(2);
  if (name == "C2") return circulant({cplx(1.0, 0.0), cplx(0.0, 1.0)});
  if (name == "F3") return fourier(3);
  if (name == "C3") return circulant({1.0, kOmega, kOmega});
  if (name == "F4") return special_f4(special_f4_default_t());
  if (name == "C3xC3") {
    Matrix c3 = special("C3");
    return kron(c3, c3);
  }
  if (name == "F3xF3") {
    Matrix f3 = fourier(3);
    return kron(f3, f3);
  }
  if (name == "BC9AcapB")
    return bc9_matrix(Bc9Params{Unimodular(cplx(1.0, 0.0)), Unimodular(cplx(-1.0, 0.0)),
                                Unimodular(-kOmega), Unimodular(-kOmega2)});
  if (name == "BC9Ab")
    return bc9_matrix(Bc9Params{Unimodular(kOmega), Unimodular(-kOmega2),
                                Unimodular(-kOmega), Unimodular(-kOmega)});
  if (name == "BC9Ab_dagger")
    return bc9_matrix(Bc9Params{Unimodular(kOmega2), Unimodular(-kOmega),
                                Unimodular(-kOmega2), Unimodular(-kOmega2)});
  if (name == "W9A_point") {
    cplx tau(0.25, std::sqrt(15.0) / 4.0);
    return bc9_matrix(
        Bc9Params{Unimodular(tau), Unimodular(std::conj(tau)), Unimodular(tau),
                  Unimodular(std::conj(tau))});
  }
  if (name == "B9_0_point") {
    return bc9_matrix(Bc9Params{root_of_unity(10, 1), root_of_unity(10, 3),
                                root_of_unity(10, 7), root_of_unity(10, 9)});
  }
  throw std::invalid_argument("special: unknown matrix name '" + name + "'");
}

Bc9Params permute_params(const Bc9Params& p, const std::array<int, 4>& perm) {
  const Unimodular vals[4] = {p.x, p.y, p.u, p.w};
  for (int k : perm)
    if (k < 0 || k > 3) throw std::invalid_argument("permute_params: bad permutation");
  return Bc9Params{vals[perm[0]], vals[perm[1]], vals[perm[2]], vals[perm[3]]};
}

std::pair<std::vector<int>, std::vector<int>> param_permutation_witness(
    const Bc9Params& p, const std::array<int, 4>& perm) {
  Matrix source = bc9_matrix(p);
  Matrix target = bc9_matrix(permute_params(p, perm));
  detail::PermMatcher matcher(target, source, 1e-12);
  long long budget = std::numeric_limits<long long>::max();
  auto match = matcher.run(budget);
  if (!match)
    throw std::runtime_error("param_permutation_witness: no witness found");  // unreachable
  return {match->row, match->col};
}

}  // namespace hforge::orbits
