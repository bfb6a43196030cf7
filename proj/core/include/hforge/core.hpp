#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

/// Dense complex matrices of small order and the structured constructors
/// (Fourier, circulant, Kronecker, block circulant with circulant blocks)
/// used throughout hforge. Everything is a value; all functions are pure.
namespace hforge {

using cplx = std::complex<double>;

/// Default tolerance for Hadamard / unimodularity checks. Entries are built
/// from exact roots of unity or closed-form radicals, so 1e-9 leaves several
/// digits of headroom above double-precision noise.
inline constexpr double kDefaultTol = 1e-9;

/// Relative singular-value threshold for numerical rank decisions.
inline constexpr double kRankTol = 1e-8;

/// Construction tolerance for unit-modulus scalars.
inline constexpr double kUnimodularTol = 1e-12;

/// Requested point lies outside the admissible parameter domain.
class OutOfDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The map is singular at the requested point (a parametrization artifact,
/// not a missing matrix).
class DegeneratePointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical rank decision had no clear spectral gap where one was required.
class UnreliableRankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A complex scalar of modulus 1, validated at construction.
class Unimodular {
 public:
  Unimodular() : v_(1.0, 0.0) {}
  explicit Unimodular(cplx v) : v_(v) {
    if (std::abs(std::abs(v) - 1.0) > kUnimodularTol)
      throw std::invalid_argument("Unimodular: |value| deviates from 1 by more than 1e-12");
  }

  cplx value() const { return v_; }
  operator cplx() const { return v_; }

  Unimodular conj() const { return Unimodular(std::conj(v_)); }
  Unimodular operator-() const { return Unimodular(-v_); }
  friend Unimodular operator*(Unimodular a, Unimodular b) { return Unimodular(a.v_ * b.v_); }

 private:
  cplx v_;
};

/// exp(2*pi*i*k/q) with k reduced mod q. Throws std::invalid_argument for q < 1.
Unimodular root_of_unity(long q, long k);

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, cplx fill = cplx(0.0, 0.0)) : n_(n), a_(n * n, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  const std::vector<cplx>& data() const { return a_; }

  Matrix transpose() const;
  Matrix conjugate() const;
  Matrix adjoint() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(cplx s, const Matrix& a);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

/// max_ij |A_ij|
double max_abs(const Matrix& a);
/// max_ij |A_ij - B_ij|; matrices must have equal size.
double max_abs_diff(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, double tol);

/// n x n Fourier matrix, entries omega_n^(i*j) with 0-based i, j.
Matrix fourier(std::size_t n);

/// Circulant matrix from its first row: entry (i,j) = row[(j-i) mod n].
/// Each row is the previous one shifted one step to the right.
Matrix circulant(const std::vector<cplx>& first_row);

/// Kronecker product; block (i,j) of the result is A(i,j)*B.
Matrix kron(const Matrix& a, const Matrix& b);

/// Block circulant matrix built from its first block row. Every block must be
/// square, of one common size, and circulant within tol.
Matrix bccb(const std::vector<Matrix>& first_block_row, double tol = kDefaultTol);

/// Equivalent matrix D1*H*D2 whose first row and first column are exactly 1
/// (entry (0,0) is divided out first). Throws on zero pivot entries.
Matrix dephase(const Matrix& h);

/// True iff every |H_ij| is within tol of 1 and ||H^dag H - n I||_max <= n*tol.
bool is_hadamard(const Matrix& h, double tol = kDefaultTol);

/// Smallest q <= q_max such that every entry is within tol of a q-th root of
/// unity, or 0 if there is none.
long smallest_root_order(const Matrix& h, long q_max, double tol);

}  // namespace hforge
