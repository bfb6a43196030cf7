#include "hforge/scan.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "hforge/analysis.hpp"

namespace hforge::scan {

namespace {

constexpr double kLensSlack = 1e-12;

bool in_lens(const cplx& z) {
  return std::abs(1.0 + z) <= 4.0 + kLensSlack && std::abs(1.0 - z) <= 4.0 + kLensSlack;
}

bool degenerate(const cplx& z) {
  return std::abs(z - cplx(1.0, 0.0)) < kLensSlack || std::abs(z + cplx(1.0, 0.0)) < kLensSlack;
}

void validate(const GridSpec& g) {
  if (!(g.re_min < g.re_max) || !(g.im_min < g.im_max))
    throw std::invalid_argument("zeta_defect_scan: empty grid range");
  if (g.resolution < 2) throw std::invalid_argument("zeta_defect_scan: resolution must be >= 2");
  if (g.tol <= 0.0) throw std::invalid_argument("zeta_defect_scan: tol must be positive");
  if (g.branches.empty()) throw std::invalid_argument("zeta_defect_scan: no branches requested");
  for (auto [bx, bu] : g.branches)
    if ((bx != 1 && bx != -1) || (bu != 1 && bu != -1))
      throw std::invalid_argument("zeta_defect_scan: branch signs must be +1 or -1");
}

std::vector<ScanRecord> scan_row(const GridSpec& g, std::size_t row) {
  std::vector<ScanRecord> out;
  double im = g.im_min + (g.im_max - g.im_min) * static_cast<double>(row) /
                             static_cast<double>(g.resolution - 1);
  for (std::size_t c = 0; c < g.resolution; ++c) {
    double re = g.re_min + (g.re_max - g.re_min) * static_cast<double>(c) /
                               static_cast<double>(g.resolution - 1);
    cplx z(re, im);
    if (!in_lens(z) || degenerate(z)) continue;
    for (auto [bx, bu] : g.branches) {
      orbits::Bc9Params p = orbits::zeta_to_params({z, bx, bu});
      analysis::DefectReport rep = analysis::defect(orbits::bc9_matrix(p), g.tol);
      out.push_back({z, {bx, bu}, rep.defect, rep.reliable});
    }
  }
  return out;
}

}  // namespace

std::vector<ScanRecord> zeta_defect_scan(const GridSpec& g, unsigned threads) {
  validate(g);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(g.resolution));

  std::vector<std::vector<ScanRecord>> rows(g.resolution);
  if (threads <= 1) {
    for (std::size_t r = 0; r < g.resolution; ++r) rows[r] = scan_row(g, r);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() {
        try {
          for (std::size_t r = t; r < g.resolution; r += threads) rows[r] = scan_row(g, r);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<ScanRecord> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

void scan_to_csv(const std::vector<ScanRecord>& records, std::ostream& out) {
  out << "re_zeta,im_zeta,branch_xy,branch_uw,defect,reliable\n";
  char buf[64];
  for (const ScanRecord& r : records) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g", r.zeta.real(), r.zeta.imag());
    out << buf << ',' << r.branch.first << ',' << r.branch.second << ',' << r.defect
        << ',' << (r.reliable ? 1 : 0) << '\n';
  }
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
  std::ostringstream ss;
  scan_to_csv(records, ss);
  return ss.str();
}

std::vector<cplx> defect_mask(const std::vector<ScanRecord>& records, long min_defect) {
  std::vector<cplx> mask;
  for (const ScanRecord& r : records)
    if (r.defect >= min_defect) mask.push_back(r.zeta);
  return mask;
}

CensusResult fourier_butson_census() {
  CensusResult result;
  cplx sixth[6];
  for (long k = 0; k < 6; ++k) sixth[k] = root_of_unity(6, k);
  for (int k1 = 0; k1 < 6; ++k1)
    for (int k2 = 0; k2 < 6; ++k2)
      for (int k3 = 0; k3 < 6; ++k3)
        for (int k4 = 0; k4 < 6; ++k4) {
          orbits::FourierParams fp{Unimodular(sixth[k1]), Unimodular(sixth[k2]),
                                   Unimodular(sixth[k3]), Unimodular(sixth[k4])};
          analysis::DefectReport rep = analysis::defect(orbits::fourier9(fp));
          if (!rep.reliable) {
            std::ostringstream msg;
            msg << "fourier_butson_census: unreliable rank at quadruple (" << k1 << ','
                << k2 << ',' << k3 << ',' << k4 << "), gap ratio " << rep.gap_ratio;
            throw UnreliableRankError(msg.str());
          }
          ++result.histogram[rep.defect];
          ++result.total;
        }
  return result;
}

std::string census_to_json(const CensusResult& c) {
  std::ostringstream out;
  out << "{\"total\": " << c.total << ", \"histogram\": {";
  bool first = true;
  for (auto [d, count] : c.histogram) {
    out << (first ? "" : ", ") << '"' << d << "\": " << count;
    first = false;
  }
  out << "}}";
  return out.str();
}

int backelin_family_exponent(int n) {
  if (n < 0 || n > 2) throw std::invalid_argument("backelin family index must be 0, 1 or 2");
  return (8 - 3 * n) % 9;
}

std::vector<std::pair<orbits::BackelinParams, long>> backelin_suborbit_samples(
    int n, BackelinFamily family, int count, unsigned long seed) {
  if (count < 1) throw std::invalid_argument("backelin_suborbit_samples: count must be >= 1");
  cplx rot = root_of_unity(9, backelin_family_exponent(n));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<std::pair<orbits::BackelinParams, long>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    cplx free = std::polar(1.0, angle(rng));
    cplx u, v;
    switch (family) {
      case BackelinFamily::VFromUSquared:
        u = free;
        v = rot * u * u;
        break;
      case BackelinFamily::UFromVSquared:
        v = free;
        u = rot * v * v;
        break;
      case BackelinFamily::Product:
        u = free;
        v = rot * std::conj(u);
        break;
    }
    orbits::BackelinParams bp{Unimodular(u), Unimodular(v)};
    out.emplace_back(bp, analysis::defect(orbits::backelin(bp)).defect);
  }
  return out;
}

namespace {

// locus as a linear constraint alpha*a + beta*b = e (mod 9) on the ninth-root
// exponents (a, b) of (u, v)
struct Locus {
  int alpha, beta, e;
};

std::vector<Locus> all_loci() {
  std::vector<Locus> loci;
  for (int n = 0; n < 3; ++n) {
    int e = backelin_family_exponent(n);
    loci.push_back({-2, 1, e});  // v = w9^e u^2
    loci.push_back({1, -2, e});  // u = w9^e v^2
    loci.push_back({1, 1, e});   // u v = w9^e
  }
  return loci;
}

bool on_locus(const Locus& l, int a, int b) {
  return ((l.alpha * a + l.beta * b - l.e) % 9 + 9) % 9 == 0;
}

}  // namespace

std::vector<BackelinIntersection> backelin_intersections() {
  std::vector<Locus> loci = all_loci();
  std::set<std::pair<int, int>> points;
  for (std::size_t i = 0; i < loci.size(); ++i)
    for (std::size_t j = i + 1; j < loci.size(); ++j)
      for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
          if (on_locus(loci[i], a, b) && on_locus(loci[j], a, b)) points.insert({a, b});
  if (points.size() != 27)
    throw std::runtime_error("backelin_intersections: expected 27 pairwise intersection points, got " +
                             std::to_string(points.size()));
  std::vector<BackelinIntersection> out;
  out.reserve(points.size());
  for (auto [a, b] : points) {
    BackelinIntersection pt;
    pt.u_exp = a;
    pt.v_exp = b;
    pt.params = orbits::BackelinParams{root_of_unity(9, a), root_of_unity(9, b)};
    pt.defect = analysis::defect(orbits::backelin(pt.params)).defect;
    out.push_back(pt);
  }
  return out;
}

}  // namespace hforge::scan
