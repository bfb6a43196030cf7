#include <doctest.h>

#include <map>
#include <set>

#include "hforge/analysis.hpp"
#include "hforge/scan.hpp"
#include "test_util.hpp"

using namespace hforge;
using namespace hforge::scan;

TEST_CASE("zeta scan on a coarse grid") {
  GridSpec g;
  g.resolution = 41;
  std::vector<ScanRecord> recs = zeta_defect_scan(g);
  REQUIRE_FALSE(recs.empty());

  SUBCASE("deterministic output") {
    CHECK(scan_to_csv(recs) == scan_to_csv(zeta_defect_scan(g)));
    CHECK(scan_to_csv(recs) == scan_to_csv(zeta_defect_scan(g, 1)));
  }

  SUBCASE("records only inside the lens, off the degenerate points") {
    for (const ScanRecord& r : recs) {
      CHECK(std::abs(1.0 + r.zeta) <= 4.0 + 1e-9);
      CHECK(std::abs(1.0 - r.zeta) <= 4.0 + 1e-9);
      CHECK(std::abs(r.zeta - cplx(1.0, 0.0)) > 1e-12);
      CHECK(std::abs(r.zeta + cplx(1.0, 0.0)) > 1e-12);
    }
  }

  SUBCASE("row-major order") {
    for (std::size_t k = 1; k < recs.size(); ++k) {
      bool later_row = recs[k].zeta.imag() > recs[k - 1].zeta.imag() + 1e-12;
      bool same_row = std::abs(recs[k].zeta.imag() - recs[k - 1].zeta.imag()) <= 1e-12;
      CHECK((later_row || (same_row && recs[k].zeta.real() >= recs[k - 1].zeta.real())));
    }
  }

  SUBCASE("mirror symmetry of the defect map") {
    std::map<std::pair<long, long>, long> by_cell;
    auto key = [&](const cplx& z) {
      return std::make_pair(std::lround(z.real() * 1e6), std::lround(z.imag() * 1e6));
    };
    for (const ScanRecord& r : recs) by_cell[key(r.zeta)] = r.defect;
    for (const ScanRecord& r : recs) {
      auto conj_it = by_cell.find(key(std::conj(r.zeta)));
      REQUIRE(conj_it != by_cell.end());
      CHECK(conj_it->second == r.defect);
      auto neg_it = by_cell.find(key(-r.zeta));
      REQUIRE(neg_it != by_cell.end());
      CHECK(neg_it->second == r.defect);
    }
  }

  SUBCASE("csv shape") {
    std::string csv = scan_to_csv(recs);
    CHECK(csv.rfind("re_zeta,im_zeta,branch_xy,branch_uw,defect,reliable\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(recs.size()) + 1);
  }
}

TEST_CASE("branch symmetry") {
  GridSpec g;
  g.resolution = 5;
  g.re_min = -2.0;
  g.re_max = 2.0;
  g.im_min = -2.0;
  g.im_max = 2.0;
  g.branches = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
  std::vector<ScanRecord> recs = zeta_defect_scan(g);
  std::map<std::pair<long, long>, std::set<long>> defects;
  for (const ScanRecord& r : recs)
    defects[{std::lround(r.zeta.real() * 1e6), std::lround(r.zeta.imag() * 1e6)}]
        .insert(r.defect);
  for (const auto& [cell, ds] : defects) CHECK(ds.size() == 1);
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.resolution = 1;
  CHECK_THROWS_AS(zeta_defect_scan(g), std::invalid_argument);
  g.resolution = 4;
  g.re_min = 2.0;
  g.re_max = -2.0;
  CHECK_THROWS_AS(zeta_defect_scan(g), std::invalid_argument);
  g = GridSpec{};
  g.branches = {{0, 1}};
  CHECK_THROWS_AS(zeta_defect_scan(g), std::invalid_argument);
}

TEST_CASE("fourier butson census spot checks") {
  // full 6^4 histogram is asserted by the acceptance suite; here a sample
  auto sixth = [](long k) { return Unimodular(root_of_unity(6, k).value()); };
  CHECK(analysis::fourier_butson_defect({sixth(0), sixth(0), sixth(0), sixth(0)}) == 16);
  CHECK(analysis::fourier_butson_defect({sixth(3), sixth(0), sixth(0), sixth(3)}) == 12);
  CHECK(analysis::fourier_butson_defect({sixth(1), sixth(0), sixth(0), sixth(0)}) == 4);
}

TEST_CASE("census json formatting") {
  CensusResult c;
  c.total = 1296;
  c.histogram = {{4, 864}, {8, 243}, {12, 162}, {16, 27}};
  CHECK(census_to_json(c) ==
        "{\"total\": 1296, \"histogram\": {\"4\": 864, \"8\": 243, \"12\": 162, \"16\": 27}}");
}

TEST_CASE("backelin suborbits") {
  SUBCASE("family exponents") {
    CHECK(backelin_family_exponent(0) == 8);
    CHECK(backelin_family_exponent(1) == 5);
    CHECK(backelin_family_exponent(2) == 2);
    CHECK_THROWS_AS(backelin_family_exponent(3), std::invalid_argument);
  }

  SUBCASE("defect 6 along each family") {
    for (int n = 0; n < 3; ++n)
      for (BackelinFamily fam : {BackelinFamily::VFromUSquared,
                                 BackelinFamily::UFromVSquared, BackelinFamily::Product}) {
        auto samples = backelin_suborbit_samples(n, fam, 2, 1234 + n);
        for (const auto& [bp, d] : samples) CHECK(d == 6);
      }
  }

  SUBCASE("constraint actually holds on the samples") {
    auto samples = backelin_suborbit_samples(1, BackelinFamily::VFromUSquared, 3);
    cplx rot = root_of_unity(9, 5).value();
    for (const auto& [bp, d] : samples)
      CHECK(std::abs(bp.v.value() - rot * bp.u.value() * bp.u.value()) <= 1e-12);
    samples = backelin_suborbit_samples(0, BackelinFamily::Product, 3);
    rot = root_of_unity(9, 8).value();
    for (const auto& [bp, d] : samples)
      CHECK(std::abs(bp.u.value() * bp.v.value() - rot) <= 1e-12);
  }

  SUBCASE("generic points off every locus have defect 4") {
    std::mt19937_64 g(67);
    for (int rep = 0; rep < 3; ++rep) {
      orbits::BackelinParams bp{testutil::random_unimodular(g),
                                testutil::random_unimodular(g)};
      CHECK(analysis::defect(orbits::backelin(bp)).defect == 4);
    }
  }
}

TEST_CASE("backelin intersections") {
  std::vector<BackelinIntersection> pts = backelin_intersections();
  REQUIRE(pts.size() == 27);
  for (const BackelinIntersection& p : pts) CHECK(p.defect == 10);

  SUBCASE("the points are the ninth-root pairs with exponent sum 2 mod 3") {
    std::set<std::pair<int, int>> got;
    for (const BackelinIntersection& p : pts) got.insert({p.u_exp, p.v_exp});
    std::set<std::pair<int, int>> expect;
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 9; ++b)
        if ((a + b) % 3 == 2) expect.insert({a, b});
    CHECK(got == expect);
  }

  SUBCASE("every point lies on one locus of each family") {
    for (const BackelinIntersection& p : pts) {
      bool on_a = false, on_b = false, on_c = false;
      for (int n = 0; n < 3; ++n) {
        int e = backelin_family_exponent(n);
        if (((p.v_exp - 2 * p.u_exp - e) % 9 + 9) % 9 == 0) on_a = true;
        if (((p.u_exp - 2 * p.v_exp - e) % 9 + 9) % 9 == 0) on_b = true;
        if (((p.u_exp + p.v_exp - e) % 9 + 9) % 9 == 0) on_c = true;
      }
      CHECK(on_a);
      CHECK(on_b);
      CHECK(on_c);
    }
  }

  SUBCASE("ordering and a known member") {
    CHECK(pts.front().u_exp == 0);
    CHECK(pts.front().v_exp == 2);
    bool found = false;  // (w9, w9) solves v = w9^8 u^2 and u = w9^8 v^2
    for (const BackelinIntersection& p : pts)
      if (p.u_exp == 1 && p.v_exp == 1) found = true;
    CHECK(found);
  }
}
