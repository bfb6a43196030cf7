#include <doctest.h>

#include <sstream>

#include "hforge/core.hpp"
#include "hforge/io.hpp"
#include "hforge/orbits.hpp"
#include "test_util.hpp"

using namespace hforge;
using testutil::random_phase;

namespace {
const cplx kW3 = root_of_unity(3, 1).value();
const cplx kW3sq = root_of_unity(3, 2).value();
}  // namespace

TEST_CASE("root_of_unity basics") {
  CHECK(root_of_unity(1, 0).value() == cplx(1.0, 0.0));
  CHECK(std::abs(root_of_unity(3, 1).value() - cplx(-0.5, std::sqrt(3.0) / 2.0)) < 1e-15);
  CHECK(std::abs(root_of_unity(9, 3).value() - kW3) < 1e-15);
  CHECK(root_of_unity(4, 1).value() == cplx(0.0, 1.0));
  CHECK(root_of_unity(6, 9).value() == cplx(-1.0, 0.0));  // k reduced mod q
  CHECK(std::abs(root_of_unity(5, -1).value() - root_of_unity(5, 4).value()) == 0.0);
  CHECK_THROWS_AS(root_of_unity(0, 1), std::invalid_argument);
}

TEST_CASE("fourier matrices") {
  Matrix f2 = fourier(2);
  CHECK(f2(0, 0) == cplx(1.0, 0.0));
  CHECK(f2(0, 1) == cplx(1.0, 0.0));
  CHECK(f2(1, 0) == cplx(1.0, 0.0));
  CHECK(f2(1, 1) == cplx(-1.0, 0.0));

  Matrix f1 = fourier(1);
  CHECK(f1.size() == 1);
  CHECK(f1(0, 0) == cplx(1.0, 0.0));

  Matrix f3 = fourier(3);
  CHECK(std::abs(f3(1, 0) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(f3(1, 1) - kW3) < 1e-15);
  CHECK(std::abs(f3(1, 2) - kW3sq) < 1e-15);

  SUBCASE("unitarity up to order 12") {
    for (std::size_t n = 1; n <= 12; ++n) {
      Matrix f = fourier(n);
      Matrix g = f.adjoint() * f;
      CHECK(max_abs_diff(g, cplx(double(n), 0.0) * Matrix::identity(n)) <= 1e-12);
    }
  }
}

TEST_CASE("circulant construction") {
  Matrix c2 = circulant({cplx(1.0, 0.0), cplx(0.0, 1.0)});
  CHECK(c2(0, 0) == cplx(1.0, 0.0));
  CHECK(c2(0, 1) == cplx(0.0, 1.0));
  CHECK(c2(1, 0) == cplx(0.0, 1.0));
  CHECK(c2(1, 1) == cplx(1.0, 0.0));

  Matrix c3 = circulant({1.0, kW3, kW3});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(c3(i, j) == (i == j ? cplx(1.0, 0.0) : kW3));

  Matrix one = circulant({cplx(5.0, 0.0)});
  CHECK(one.size() == 1);
  CHECK(one(0, 0) == cplx(5.0, 0.0));

  CHECK_THROWS_AS(circulant({}), std::invalid_argument);

  SUBCASE("same-size circulants commute") {
    std::mt19937_64 g(101);
    for (std::size_t n : {2, 3, 5, 9}) {
      std::vector<cplx> ra(n), rb(n);
      for (auto& z : ra) z = random_phase(g);
      for (auto& z : rb) z = random_phase(g);
      Matrix a = circulant(ra), b = circulant(rb);
      CHECK(max_abs_diff(a * b, b * a) <= 1e-12);
    }
  }
}

TEST_CASE("kron") {
  std::mt19937_64 g(55);
  Matrix b(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = random_phase(g);
  CHECK(max_abs_diff(kron(Matrix::identity(1), b), b) == 0.0);

  SUBCASE("C3 x C3 block structure") {
    Matrix c3 = circulant({1.0, kW3, kW3});
    Matrix k = kron(c3, c3);
    // block (0,1) is w3*C3, diagonal blocks are C3
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(k(i, j) - c3(i, j)) < 1e-15);
        CHECK(std::abs(k(i, 3 + j) - kW3 * c3(i, j)) < 1e-15);
      }
    CHECK(max_abs_diff(k, bccb({c3, kW3 * c3, kW3 * c3})) < 1e-15);
  }

  SUBCASE("entrywise against the index formula") {
    Matrix f3 = fourier(3);
    Matrix k = kron(f3, f3);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        CHECK(std::abs(k(i, j) - f3(i / 3, j / 3) * f3(i % 3, j % 3)) == 0.0);
  }

  SUBCASE("mixed product rule on random 3x3") {
    Matrix a(3), b2(3), c(3), d(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a(i, j) = random_phase(g);
        b2(i, j) = random_phase(g);
        c(i, j) = random_phase(g);
        d(i, j) = random_phase(g);
      }
    CHECK(max_abs_diff(kron(a, b2) * kron(c, d), kron(a * c, b2 * d)) <= 1e-12);
  }
}

TEST_CASE("bccb") {
  std::mt19937_64 g(7);
  cplx x = random_phase(g), y = random_phase(g), u = random_phase(g), w = random_phase(g);
  Matrix a = circulant({1.0, x, x});
  Matrix b = circulant({y, u, w});

  SUBCASE("first block row (A, B, B^T) fills the 9x9 pattern") {
    Matrix h = bccb({a, b, b.transpose()});
    // indices into (1, x, y, u, w)
    const int pat[9][9] = {
        {0, 1, 1, 2, 3, 4, 2, 4, 3}, {1, 0, 1, 4, 2, 3, 3, 2, 4},
        {1, 1, 0, 3, 4, 2, 4, 3, 2}, {2, 4, 3, 0, 1, 1, 2, 3, 4},
        {3, 2, 4, 1, 0, 1, 4, 2, 3}, {4, 3, 2, 1, 1, 0, 3, 4, 2},
        {2, 3, 4, 2, 4, 3, 0, 1, 1}, {4, 2, 3, 3, 2, 4, 1, 0, 1},
        {3, 4, 2, 4, 3, 2, 1, 1, 0}};
    const cplx vals[5] = {cplx(1.0, 0.0), x, y, u, w};
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) CHECK(h(i, j) == vals[pat[i][j]]);
  }

  SUBCASE("single circulant block is returned unchanged") {
    Matrix m = circulant({y, u, w});
    CHECK(max_abs_diff(bccb({m}), m) == 0.0);
  }

  SUBCASE("non-circulant block rejected") {
    Matrix bad(3);
    bad(0, 0) = 1.0;
    bad(1, 1) = 2.0;
    CHECK_THROWS_AS(bccb({bad}), std::invalid_argument);
  }
}

TEST_CASE("dephase") {
  Matrix f3 = fourier(3);
  CHECK(max_abs_diff(dephase(f3), f3) == 0.0);

  SUBCASE("C3 dephases to F3") {
    Matrix c3 = circulant({1.0, kW3, kW3});
    CHECK(max_abs_diff(dephase(c3), f3) <= 1e-12);
  }

  SUBCASE("global phase cancels") {
    std::mt19937_64 g(13);
    Matrix h(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h(i, j) = random_phase(g);
    cplx c = random_phase(g);
    CHECK(max_abs_diff(dephase(c * h), dephase(h)) <= 1e-12);
  }

  SUBCASE("first row and column exactly one") {
    std::mt19937_64 g(14);
    Matrix h(5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) h(i, j) = random_phase(g);
    Matrix d = dephase(h);
    for (int i = 0; i < 5; ++i) {
      CHECK(d(i, 0) == cplx(1.0, 0.0));
      CHECK(d(0, i) == cplx(1.0, 0.0));
    }
  }

  SUBCASE("zero pivot rejected") {
    Matrix h = Matrix::identity(2);  // off-diagonal zeros sit in row/column 0
    CHECK_THROWS_AS(dephase(h), std::invalid_argument);
  }
}

TEST_CASE("is_hadamard") {
  CHECK(is_hadamard(fourier(9), 1e-9));
  Matrix ones(2, cplx(1.0, 0.0));
  CHECK_FALSE(is_hadamard(ones, 1e-9));
  CHECK_THROWS_AS(is_hadamard(ones, 0.0), std::invalid_argument);

  using orbits::Bc9Params;
  Bc9Params p{Unimodular(cplx(1.0, 0.0)), Unimodular(cplx(1.0, 0.0)),
              Unimodular(kW3), Unimodular(kW3sq)};
  CHECK(is_hadamard(orbits::bc9_matrix(p), 1e-9));

  SUBCASE("invariant under equivalence transforms") {
    std::mt19937_64 g(21);
    Matrix f9 = fourier(9);
    for (int rep = 0; rep < 5; ++rep)
      CHECK(is_hadamard(testutil::random_equivalent(f9, g), 1e-9));
    Matrix bad(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) bad(i, j) = random_phase(g);
    bool before = is_hadamard(bad, 1e-9);
    CHECK(is_hadamard(testutil::random_equivalent(bad, g), 1e-9) == before);
  }
}

TEST_CASE("unimodular validation") {
  CHECK_THROWS_AS(Unimodular(cplx(1.0, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(Unimodular(cplx(0.0, 0.0)), std::invalid_argument);
  CHECK_NOTHROW(Unimodular(cplx(0.0, -1.0)));
}

TEST_CASE("matrix json io") {
  SUBCASE("phase form round trip is exact") {
    Matrix f9 = fourier(9);
    std::string text = matrix_to_json(f9);
    CHECK(text.find("log_entries") != std::string::npos);
    CHECK(text.find("\"q\": 9") != std::string::npos);
    Matrix back = matrix_from_json(text);
    CHECK(max_abs_diff(back, f9) == 0.0);
  }

  SUBCASE("rectangular round trip is bit exact") {
    std::mt19937_64 g(3);
    Matrix h(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h(i, j) = random_phase(g);
    std::string text = matrix_to_json(h);
    CHECK(text.find("entries") != std::string::npos);
    CHECK(text.find("log_entries") == std::string::npos);
    Matrix back = matrix_from_json(text);
    CHECK(back == h);
  }

  SUBCASE("W9A point is not a root-of-unity matrix") {
    std::string text = matrix_to_json(orbits::special("W9A_point"));
    CHECK(text.find("log_entries") == std::string::npos);
  }

  SUBCASE("malformed input") {
    CHECK_THROWS_AS(matrix_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{\"n\": 2}"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{\"n\": 2, \"log_entries\": [[0,0],[0,0]]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        matrix_from_json("{\"n\": 2, \"q\": 4, \"log_entries\": [[0,5],[0,0]]}"),
        std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{\"n\": 2, \"entries\": [[[1,0]],[[1,0]]]}"),
                    std::invalid_argument);
  }
}

TEST_CASE("smallest_root_order") {
  CHECK(smallest_root_order(fourier(2), 24, 1e-12) == 2);
  CHECK(smallest_root_order(fourier(9), 24, 1e-12) == 9);
  CHECK(smallest_root_order(orbits::special("BC9AcapB"), 24, 1e-12) == 6);
  CHECK(smallest_root_order(orbits::special("W9A_point"), 36, 1e-9) == 0);
}
