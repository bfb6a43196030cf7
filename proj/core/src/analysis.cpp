#include "hforge/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <lapacke.h>

#include "permmatch.hpp"

namespace hforge::analysis {

namespace {

constexpr double kUnitaryPreTol = 1e-6;
constexpr double kWitnessTol = 1e-10;
constexpr double kFingerprintGrid = 1e-9;
constexpr double kGapAudit = 10.0;

// H^dag H must equal c*I; returns c or -1.
double scaled_unitary_constant(const Matrix& h) {
  std::size_t n = h.size();
  double c = 0.0;
  for (const cplx& z : h.data()) c += std::norm(z);
  c /= static_cast<double>(n);
  if (c <= 0.0) return -1.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      cplx s(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) s += std::conj(h(k, a)) * h(k, b);
      if (a == b) s -= c;
      if (std::abs(s) > 3.0 * kUnitaryPreTol * c) return -1.0;
    }
  return c;
}

}  // namespace

DefectReport defect(const Matrix& h, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("defect: tol must be positive");
  std::size_t n = h.size();
  if (n == 0) throw std::invalid_argument("defect: empty matrix");
  if (scaled_unitary_constant(h) < 0.0)
    throw std::invalid_argument("defect: input is not unitary (after scaling) within 1e-6");

  DefectReport rep;
  rep.n = n;
  rep.tolerance_used = tol;
  if (n == 1) {
    rep.rank = 0;
    rep.defect = 0;
    rep.gap_ratio = std::numeric_limits<double>::infinity();
    return rep;
  }

  // One complex equation per row pair a<b, split into real and imaginary
  // parts: sum_k conj(H_ka) H_kb (R_kb - R_ka) = 0, unknowns R in R^{n^2}.
  const std::size_t n_eq = n * (n - 1);
  const std::size_t n_unk = n * n;
  std::vector<double> sys(n_eq * n_unk, 0.0);  // row-major
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        cplx t = std::conj(h(k, a)) * h(k, b);
        std::size_t col_b = k * n + b;
        std::size_t col_a = k * n + a;
        sys[row * n_unk + col_b] += t.real();
        sys[row * n_unk + col_a] -= t.real();
        sys[(row + 1) * n_unk + col_b] += t.imag();
        sys[(row + 1) * n_unk + col_a] -= t.imag();
      }
      row += 2;
    }

  // Singular values only; the row-major equations buffer doubles as the
  // column-major transpose, which has the same singular spectrum.
  rep.singular_values.assign(std::min(n_eq, n_unk), 0.0);
  lapack_int info = LAPACKE_dgesdd(
      LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(n_unk),
      static_cast<lapack_int>(n_eq), sys.data(), static_cast<lapack_int>(n_unk),
      rep.singular_values.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("defect: SVD did not converge");
  double smax = rep.singular_values.empty() ? 0.0 : rep.singular_values.front();
  double thresh = tol * smax;
  std::size_t rank = 0;
  while (rank < rep.singular_values.size() && rep.singular_values[rank] > thresh) ++rank;
  rep.rank = rank;
  rep.defect = static_cast<long>(n * n) - static_cast<long>(rank) -
               (2 * static_cast<long>(n) - 1);
  if (rank == 0 || rank == rep.singular_values.size()) {
    rep.gap_ratio = std::numeric_limits<double>::infinity();
  } else {
    double dropped = rep.singular_values[rank];
    rep.gap_ratio = dropped > 0.0 ? rep.singular_values[rank - 1] / dropped
                                  : std::numeric_limits<double>::infinity();
  }
  rep.reliable = rep.gap_ratio >= kGapAudit;
  return rep;
}

std::optional<long> butson_class(const Matrix& h, long q_max) {
  if (q_max < 1) throw std::invalid_argument("butson_class: q_max must be >= 1");
  long q = smallest_root_order(h, q_max, kDefaultTol);
  if (q == 0) return std::nullopt;
  return q;
}

HaagerupFingerprint haagerup_fingerprint(const Matrix& h) {
  std::size_t n = h.size();
  for (const cplx& z : h.data())
    if (z == cplx(0.0, 0.0))
      throw std::invalid_argument("haagerup_fingerprint: zero entry");
  HaagerupFingerprint fp;
  fp.products.reserve(n * (n - 1) * n * (n - 1) / 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l) {
          cplx prod = h(i, j) * h(k, l) * std::conj(h(i, l)) * std::conj(h(k, j));
          // a row or column transposition conjugates the product, so the
          // conjugation orbit is what is actually invariant
          double im = std::round(std::abs(prod.imag()) / kFingerprintGrid) * kFingerprintGrid;
          fp.products.emplace_back(std::round(prod.real() / kFingerprintGrid) * kFingerprintGrid,
                                   im);
        }
  std::sort(fp.products.begin(), fp.products.end(), [](const cplx& a, const cplx& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return fp;
}

Matrix apply_witness(const Matrix& b, const EquivalenceWitness& w) {
  std::size_t n = b.size();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r(i, j) = w.d1[w.row[i]] * b(w.row[i], w.col[j]) * w.d2[w.col[j]];
  return r;
}

namespace {

// generalized dephasing with pivot (r,c): row r and column c become all ones
Matrix dephase_at(const Matrix& h, std::size_t r, std::size_t c) {
  std::size_t n = h.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = (h(i, j) * h(r, c)) / (h(i, c) * h(r, j));
  return out;
}

std::optional<EquivalenceWitness> search_witness(const Matrix& a, const Matrix& b,
                                                 long long& budget, bool& exhausted) {
  std::size_t n = a.size();
  Matrix a0 = dephase_at(a, 0, 0);
  for (std::size_t r = 0; r < n && !exhausted; ++r)
    for (std::size_t c = 0; c < n && !exhausted; ++c) {
      Matrix bp = dephase_at(b, r, c);
      detail::PermMatcher matcher(a0, bp, 1e-9);
      auto match = matcher.run(budget, static_cast<int>(r), static_cast<int>(c));
      if (matcher.exhausted()) exhausted = true;
      if (!match) continue;
      EquivalenceWitness w;
      w.row = match->row;
      w.col = match->col;
      w.d1.assign(n, cplx(1.0, 0.0));
      w.d2.assign(n, cplx(1.0, 0.0));
      // solve A(i,j) = d1[row[i]] B(row[i],col[j]) d2[col[j]] with d2[col[0]] = 1
      for (std::size_t i = 0; i < n; ++i) {
        cplx d = a(i, 0) / b(w.row[i], w.col[0]);
        w.d1[w.row[i]] = d / std::abs(d);
      }
      for (std::size_t j = 0; j < n; ++j) {
        cplx d = a(0, j) / (w.d1[w.row[0]] * b(w.row[0], w.col[j]));
        w.d2[w.col[j]] = d / std::abs(d);
      }
      if (max_abs_diff(a, apply_witness(b, w)) <= kWitnessTol) return w;
    }
  return std::nullopt;
}

}  // namespace

EquivalenceVerdict equivalent(const Matrix& a, const Matrix& b, long long node_budget) {
  if (a.size() != b.size())
    throw std::invalid_argument("equivalent: matrices must have the same size");
  for (const cplx& z : a.data())
    if (std::abs(std::abs(z) - 1.0) > kDefaultTol)
      throw std::invalid_argument("equivalent: entries must be unimodular");
  for (const cplx& z : b.data())
    if (std::abs(std::abs(z) - 1.0) > kDefaultTol)
      throw std::invalid_argument("equivalent: entries must be unimodular");

  EquivalenceVerdict v;
  DefectReport da = defect(a), db = defect(b);
  if (da.defect != db.defect) {
    v.tag = EquivalenceTag::Inequivalent;
    v.reason = "defect";
    return v;
  }
  // raw entries are not equivalence-stable (enphasing moves them off the
  // roots of unity); the dephased form's root order is, since its entries
  // generate the pivot-independent group of entry quadruple ratios
  auto qa = butson_class(dephase(a), 36), qb = butson_class(dephase(b), 36);
  if (qa != qb) {
    v.tag = EquivalenceTag::Inequivalent;
    v.reason = "butson-class";
    return v;
  }
  if (!(haagerup_fingerprint(a) == haagerup_fingerprint(b))) {
    v.tag = EquivalenceTag::Inequivalent;
    v.reason = "fingerprint";
    return v;
  }

  long long budget = node_budget;
  bool exhausted = false;
  auto w = search_witness(a, b, budget, exhausted);
  if (w) {
    v.tag = EquivalenceTag::Equivalent;
    v.witness = std::move(*w);
    v.reason = "search";
  } else if (exhausted) {
    v.tag = EquivalenceTag::Unknown;
    v.reason = "budget-exhausted";
  } else {
    v.tag = EquivalenceTag::Inequivalent;
    v.reason = "exhaustive-search";
  }
  return v;
}

std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> h3_submatrix_scan(
    const Matrix& h, double tol) {
  std::size_t n = h.size();
  if (n < 3) throw std::invalid_argument("h3_submatrix_scan: order must be >= 3");
  for (const cplx& z : h.data())
    if (std::abs(std::abs(z) - 1.0) > kDefaultTol)
      throw std::invalid_argument("h3_submatrix_scan: entries must be unimodular");
  std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> hits;
  int ni = static_cast<int>(n);
  for (int r0 = 0; r0 < ni; ++r0)
    for (int r1 = r0 + 1; r1 < ni; ++r1)
      for (int r2 = r1 + 1; r2 < ni; ++r2) {
        const int rows[3] = {r0, r1, r2};
        for (int c0 = 0; c0 < ni; ++c0)
          for (int c1 = c0 + 1; c1 < ni; ++c1)
            for (int c2 = c1 + 1; c2 < ni; ++c2) {
              const int cols[3] = {c0, c1, c2};
              bool ortho = true;
              for (int p = 0; p < 3 && ortho; ++p)
                for (int q = p + 1; q < 3 && ortho; ++q) {
                  cplx ip(0.0, 0.0);
                  for (int cc = 0; cc < 3; ++cc)
                    ip += std::conj(h(rows[p], cols[cc])) * h(rows[q], cols[cc]);
                  if (std::abs(ip) > tol) ortho = false;
                }
              if (ortho)
                hits.push_back({{r0, r1, r2}, {c0, c1, c2}});
            }
      }
  return hits;
}

long fourier_butson_defect(const orbits::FourierParams& fp) {
  for (const Unimodular& x : {fp.x1, fp.x2, fp.x3, fp.x4}) {
    double turns = std::arg(x.value()) / (2.0 * M_PI) * 6.0;
    long k = std::lround(turns);
    if (std::abs(x.value() - root_of_unity(6, k).value()) > kDefaultTol)
      throw std::invalid_argument(
          "fourier_butson_defect: parameters must be sixth roots of unity");
  }
  return defect(orbits::fourier9(fp)).defect;
}

}  // namespace hforge::analysis
