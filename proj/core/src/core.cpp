#include "hforge/core.hpp"

#include <algorithm>
#include <cmath>

namespace hforge {

Unimodular root_of_unity(long q, long k) {
  if (q < 1) throw std::invalid_argument("root_of_unity: q must be >= 1");
  long km = ((k % q) + q) % q;
  // quarter turns come up constantly (F2, C2, F4); keep them exact
  if (km == 0) return Unimodular(cplx(1.0, 0.0));
  if (4 * km == q) return Unimodular(cplx(0.0, 1.0));
  if (2 * km == q) return Unimodular(cplx(-1.0, 0.0));
  if (4 * km == 3 * q) return Unimodular(cplx(0.0, -1.0));
  double angle = 2.0 * M_PI * (static_cast<double>(km) / static_cast<double>(q));
  return Unimodular(std::polar(1.0, angle));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conjugate() const {
  Matrix r(n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) r.a_[i] = std::conj(a_[i]);
  return r;
}

Matrix Matrix::adjoint() const { return conjugate().transpose(); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Matrix product: size mismatch");
  Matrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(cplx s, const Matrix& a) {
  Matrix r = a;
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) r(i, j) *= s;
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Matrix sum: size mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < a.n_ * a.n_; ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Matrix difference: size mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < a.n_ * a.n_; ++i) r.a_[i] -= b.a_[i];
  return r;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const cplx& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return a.size() == b.size() && max_abs_diff(a, b) <= tol;
}

Matrix fourier(std::size_t n) {
  if (n < 1) throw std::invalid_argument("fourier: n must be >= 1");
  Matrix f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      f(i, j) = root_of_unity(static_cast<long>(n), static_cast<long>(i * j));
  return f;
}

Matrix circulant(const std::vector<cplx>& first_row) {
  if (first_row.empty()) throw std::invalid_argument("circulant: empty first row");
  std::size_t n = first_row.size();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = first_row[(j + n - i) % n];
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  std::size_t na = a.size(), nb = b.size();
  Matrix r(na * nb);
  for (std::size_t ia = 0; ia < na; ++ia)
    for (std::size_t ja = 0; ja < na; ++ja) {
      cplx s = a(ia, ja);
      for (std::size_t ib = 0; ib < nb; ++ib)
        for (std::size_t jb = 0; jb < nb; ++jb)
          r(ia * nb + ib, ja * nb + jb) = s * b(ib, jb);
    }
  return r;
}

namespace {

bool is_circulant(const Matrix& m, double tol) {
  std::size_t n = m.size();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(m(i, j) - m(0, (j + n - i) % n)) > tol) return false;
  return true;
}

}  // namespace

Matrix bccb(const std::vector<Matrix>& first_block_row, double tol) {
  if (first_block_row.empty()) throw std::invalid_argument("bccb: empty block row");
  std::size_t n1 = first_block_row.size();
  std::size_t n2 = first_block_row[0].size();
  for (const Matrix& blk : first_block_row) {
    if (blk.size() != n2) throw std::invalid_argument("bccb: blocks must share one size");
    if (!is_circulant(blk, tol)) throw std::invalid_argument("bccb: block is not circulant");
  }
  Matrix h(n1 * n2);
  for (std::size_t bi = 0; bi < n1; ++bi)
    for (std::size_t bj = 0; bj < n1; ++bj) {
      const Matrix& blk = first_block_row[(bj + n1 - bi) % n1];
      for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) h(bi * n2 + i, bj * n2 + j) = blk(i, j);
    }
  return h;
}

Matrix dephase(const Matrix& h) {
  std::size_t n = h.size();
  if (n == 0) throw std::invalid_argument("dephase: empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (h(i, 0) == cplx(0.0, 0.0) || h(0, i) == cplx(0.0, 0.0))
      throw std::invalid_argument("dephase: zero entry in first row or column");
  Matrix r(n);
  for (std::size_t j = 0; j < n; ++j) r(0, j) = 1.0;
  for (std::size_t i = 0; i < n; ++i) r(i, 0) = 1.0;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      r(i, j) = (h(i, j) * h(0, 0)) / (h(i, 0) * h(0, j));
  return r;
}

bool is_hadamard(const Matrix& h, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("is_hadamard: tol must be positive");
  std::size_t n = h.size();
  if (n == 0) return false;
  for (const cplx& z : h.data())
    if (std::abs(std::abs(z) - 1.0) > tol) return false;
  double dn = static_cast<double>(n);
  // ||H^dag H - n I||_max without forming the adjoint
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      cplx s(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) s += std::conj(h(k, a)) * h(k, b);
      if (a == b) s -= dn;
      if (std::abs(s) > dn * tol) return false;
    }
  return true;
}

long smallest_root_order(const Matrix& h, long q_max, double tol) {
  for (long q = 1; q <= q_max; ++q) {
    bool all = true;
    for (const cplx& z : h.data()) {
      double turns = std::arg(z) / (2.0 * M_PI) * static_cast<double>(q);
      long k = std::lround(turns);
      if (std::abs(z - root_of_unity(q, k).value()) > tol) {
        all = false;
        break;
      }
    }
    if (all) return q;
  }
  return 0;
}

}  // namespace hforge
