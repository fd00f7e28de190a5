#include "fproot/exactlin.hpp"

#include "doctest.h"

#include <random>

using namespace fproot;

namespace {

// Determinant by cofactor expansion; independent of the elimination code.
Rational det_cofactor(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Rational term = m(0, c) * det_cofactor(minor);
    d += (c % 2 == 0) ? term : Rational(-term);
  }
  return d;
}

// Rank as the size of the largest nonvanishing minor.
std::size_t minor_rank(const RatMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        RatMatrix sub(k, k);
        std::size_t i = 0;
        for (std::size_t a = 0; a < r; ++a) {
          if (!rs[a]) continue;
          std::size_t j = 0;
          for (std::size_t b = 0; b < c; ++b)
            if (cs[b]) sub(i, j++) = m(a, b);
          ++i;
        }
        if (det_cofactor(sub) != 0) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, bool sparse) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (sparse && rng() % 3 != 0) continue;
      m(i, j) = Rational(d(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/5")) == "0");
  CHECK(to_string(parse_rational(" 7 ")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rank agrees with the largest nonvanishing minor") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const RatMatrix m = random_matrix(rng, r, c, t % 2 == 0);
    CHECK(rank(m) == minor_rank(m));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank of a product of rank-one factors") {
  const RatMatrix u{{1}, {2}, {Rational(1, 3)}};
  const RatMatrix v{{4, -1, 0, 2}};
  CHECK(rank(u * v) == 1);
  CHECK(rank(RatMatrix::identity(5)) == 5);
  CHECK(rank(RatMatrix::zero(3, 2)) == 0);
}

TEST_CASE("nullspace vectors satisfy the system and fill the complement of the rank") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const RatMatrix m = random_matrix(rng, r, c, true);
    const auto ns = nullspace_basis(m);
    CHECK(ns.size() + rank(m) == c);
    for (const auto& v : ns) {
      const RatVector img = m * v;
      for (const auto& x : img) CHECK(x == 0);
    }
    CHECK(rank(rows_to_matrix(ns, c)) == ns.size());
  }
}

TEST_CASE("rref is idempotent with unit pivot columns") {
  std::mt19937_64 rng(8);
  const RatMatrix m = random_matrix(rng, 4, 6, false);
  const RowEchelon e = rref(m);
  CHECK(rref(e.reduced).reduced == e.reduced);
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t r = 0; r < e.reduced.rows(); ++r)
      CHECK(e.reduced(r, e.pivots[i]) == (r == i ? 1 : 0));
  const auto fc = free_columns(e, m.cols());
  CHECK(fc.size() + e.rank() == m.cols());
}

TEST_CASE("solve returns a solution exactly when one exists") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const RatMatrix m = random_matrix(rng, 3, 4, true);
    RatVector x(4);
    for (auto& e : x) e = Rational(static_cast<int>(rng() % 7) - 3);
    const RatVector b = m * x;
    const auto s = solve(m, b);
    REQUIRE(s.has_value());
    CHECK(m * *s == b);
  }
  const RatMatrix singular{{1, 1}, {2, 2}};
  CHECK_FALSE(solve(singular, RatVector{1, 3}).has_value());
  CHECK(solve(singular, RatVector{1, 2}).has_value());
}

TEST_CASE("matrix algebra") {
  const RatMatrix a{{1, 2}, {3, 4}};
  const RatMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == RatMatrix{{2, 1}, {4, 3}});
  CHECK(a + b - b == a);
  CHECK(a.transpose() == RatMatrix{{1, 3}, {2, 4}});
  const RatMatrix bd = block_diagonal({a, RatMatrix{{5}}});
  CHECK(bd.rows() == 3);
  CHECK(bd(2, 2) == 5);
  CHECK(bd(0, 2) == 0);
  CHECK(det_cofactor(bd) == -10);
  CHECK_THROWS(a * RatMatrix(3, 1));
}
