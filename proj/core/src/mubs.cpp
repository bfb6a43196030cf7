#include "hforge/mubs.hpp"

#include <cmath>

namespace hforge::mubs {

namespace {

// exponents of w3 along the diagonals of D1..D9
constexpr int kDiagExp[9][9] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0},  // D1
    {0, 2, 2, 0, 1, 0, 0, 0, 1},  // D2
    {0, 1, 1, 0, 2, 0, 0, 0, 2},  // D3 = D2^dag
    {0, 1, 1, 1, 2, 2, 1, 2, 2},  // D4
    {0, 0, 0, 1, 0, 2, 1, 2, 0},  // D5
    {0, 2, 2, 1, 1, 2, 1, 2, 1},  // D6
    {0, 2, 2, 2, 1, 1, 2, 1, 1},  // D7 = D4^dag
    {0, 1, 1, 2, 2, 1, 2, 1, 2},  // D8 = D6^dag
    {0, 0, 0, 2, 0, 1, 2, 1, 0},  // D9 = D5^dag
};

Matrix fourier_tensor_square() {
  Matrix f3 = fourier(3);
  return kron(f3, f3);
}

const std::vector<Matrix>& m_matrices() {
  static const std::vector<Matrix> ms = [] {
    Matrix ff = fourier_tensor_square();
    Matrix ffd = ff.adjoint();
    std::vector<Matrix> out;
    out.push_back(Matrix::identity(9));  // M1
    std::vector<Matrix> ds = d_table();
    for (int i = 2; i <= 9; ++i)
      out.push_back(cplx(1.0 / 9.0, 0.0) * (ffd * ds[i - 1] * ff));
    return out;
  }();
  return ms;
}

}  // namespace

std::vector<Matrix> d_table() {
  cplx w3[3] = {cplx(1.0, 0.0), root_of_unity(3, 1), root_of_unity(3, 2)};
  std::vector<Matrix> out;
  out.reserve(9);
  for (int i = 0; i < 9; ++i) {
    Matrix d(9);
    for (int k = 0; k < 9; ++k) d(k, k) = w3[kDiagExp[i][k]];
    out.push_back(d);
  }
  return out;
}

MubSet build_b_set() {
  MubSet s;
  Matrix ff = fourier_tensor_square();
  s.bases.push_back(Matrix::identity(9));
  s.labels.push_back("B0");
  std::vector<Matrix> ds = d_table();
  for (int i = 1; i <= 9; ++i) {
    s.bases.push_back(cplx(1.0 / 3.0, 0.0) * (ds[i - 1] * ff));
    s.labels.push_back("B" + std::to_string(i));
  }
  return s;
}

MubSet build_m_set() {
  MubSet s;
  s.bases.push_back(cplx(1.0 / 3.0, 0.0) * fourier_tensor_square().adjoint());
  s.labels.push_back("M0");
  const std::vector<Matrix>& ms = m_matrices();
  for (int i = 1; i <= 9; ++i) {
    s.bases.push_back(ms[i - 1]);
    s.labels.push_back("M" + std::to_string(i));
  }
  return s;
}

MubReport verify_mub(const MubSet& s, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("verify_mub: tol must be positive");
  MubReport rep;
  rep.tolerance_used = tol;
  std::size_t nb = s.bases.size();
  for (const Matrix& b : s.bases) {
    Matrix g = b.adjoint() * b;
    rep.max_unitarity_error =
        std::max(rep.max_unitarity_error, max_abs_diff(g, Matrix::identity(b.size())));
  }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      Matrix g = s.bases[i].adjoint() * s.bases[j];
      double target = 1.0 / std::sqrt(static_cast<double>(g.size()));
      for (const cplx& z : g.data())
        rep.max_unbiasedness_error =
            std::max(rep.max_unbiasedness_error, std::abs(std::abs(z) - target));
    }
  rep.pass = rep.max_unitarity_error <= tol && rep.max_unbiasedness_error <= tol;
  return rep;
}

std::array<std::array<int, 9>, 9> m_multiplication_table() {
  const std::vector<Matrix>& ms = m_matrices();
  std::array<std::array<int, 9>, 9> table{};
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) {
      Matrix prod = ms[i - 1].adjoint() * ms[j - 1];
      int found = 0;
      for (int k = 1; k <= 9; ++k)
        if (max_abs_diff(prod, ms[k - 1]) <= 1e-10) {
          found = k;
          break;
        }
      if (found == 0)
        throw std::runtime_error("m_multiplication_table: product M" + std::to_string(i) +
                                 "^dag M" + std::to_string(j) + " matches no M_k");
      table[i - 1][j - 1] = found;
    }
  return table;
}

bool m_set_algebra_check() {
  const std::vector<Matrix>& ms = m_matrices();
  Matrix id = Matrix::identity(9);
  for (const Matrix& m : ms)
    if (max_abs_diff(m * m * m, id) > 1e-10) return false;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (max_abs_diff(ms[i] * ms[j], ms[j] * ms[i]) > 1e-10) return false;
  const std::pair<int, int> dagger_pairs[] = {{3, 2}, {7, 4}, {8, 6}, {9, 5}};
  for (auto [a, b] : dagger_pairs)
    if (max_abs_diff(ms[a - 1], ms[b - 1].adjoint()) > 1e-10) return false;
  return true;
}

std::pair<int, orbits::Bc9Params> m_to_bc9_params(int i) {
  if (i < 2 || i > 9) throw std::invalid_argument("m_to_bc9_params: i must be in 2..9");
  Matrix m3 = cplx(3.0, 0.0) * m_matrices()[i - 1];
  int sign = std::abs(m3(0, 0) - cplx(1.0, 0.0)) <= 1e-10 ? +1 : -1;
  if (sign < 0) m3 = cplx(-1.0, 0.0) * m3;
  // in the BCCB pattern the first row reads (1, x, x, y, u, w, y, w, u)
  orbits::Bc9Params p{Unimodular(m3(0, 1)), Unimodular(m3(0, 3)), Unimodular(m3(0, 4)),
                      Unimodular(m3(0, 5))};
  if (max_abs_diff(m3, orbits::bc9_matrix(p)) > 1e-10)
    throw std::runtime_error("m_to_bc9_params: M" + std::to_string(i) +
                             " is not of the BCCB form");
  return {sign, p};
}

}  // namespace hforge::mubs
