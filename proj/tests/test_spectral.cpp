#include "fproot/digraph.hpp"
#include "fproot/spectral.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace fproot;

namespace {

CountMatrix random_counts(std::mt19937_64& rng, std::size_t n, int max_entry, double density) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  CountMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (u(rng) < density) m(i, j) = static_cast<std::int64_t>(rng() % static_cast<unsigned>(max_entry + 1));
  return m;
}

// Collatz-Wielandt bracket min_i (Ax)_i/x_i <= rho <= max_i (Ax)_i/x_i for
// a positive vector x, refined by power iteration on A + I. Requires A
// irreducible so that A + I is primitive and the bracket closes.
std::pair<double, double> collatz_wielandt(const CountMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> x(n, 1.0), y(n);
  for (int it = 0; it < 5000; ++it) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = x[i];
      for (std::size_t j = 0; j < n; ++j) y[i] += static_cast<double>(m(i, j)) * x[j];
      s = std::max(s, y[i]);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / s;
  }
  double lo = 1e300, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ax = 0.0;
    for (std::size_t j = 0; j < n; ++j) ax += static_cast<double>(m(i, j)) * x[j];
    lo = std::min(lo, ax / x[i]);
    hi = std::max(hi, ax / x[i]);
  }
  return {lo, hi};
}

ExtendedMatrix ext_from(std::initializer_list<std::initializer_list<const char*>> rows) {
  ExtendedMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const char* e : r) {
      const std::string s(e);
      m(i, j++) = s == "inf" ? ExtendedEntry::pos_inf()
                  : s == "-inf" ? ExtendedEntry::neg_inf()
                                : ExtendedEntry::finite(parse_rational(s));
    }
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("strongly connected components come out sinks first") {
  const Digraph g{{1}, {2}, {0, 3}, {4}, {3}, {}};
  const auto s = strongly_connected_components(g);
  CHECK(s.component[0] == s.component[1]);
  CHECK(s.component[1] == s.component[2]);
  CHECK(s.component[3] == s.component[4]);
  CHECK(s.component[5] != s.component[0]);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (auto v : g[u]) CHECK(s.component[u] >= s.component[v]);
  CHECK(s.cyclic[s.component[0]]);
  CHECK_FALSE(s.cyclic[s.component[5]]);
  const auto loop = strongly_connected_components(Digraph{{0}});
  CHECK(loop.cyclic[0]);
}

TEST_CASE("small Perron roots are certified exactly") {
  const SpectralValue a = rho(CountMatrix{{0, 2}, {1, 0}});
  CHECK(a.certified);
  CHECK(a.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  REQUIRE(a.bracket.has_value());
  CHECK(a.bracket->first * a.bracket->first < 2);
  CHECK(a.bracket->second * a.bracket->second > 2);

  const SpectralValue b = rho(CountMatrix{{1, 1}, {1, 0}});
  CHECK(b.value == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));

  const SpectralValue c = rho(CountMatrix{{2, 0}, {5, 3}});
  REQUIRE(c.exact.has_value());
  CHECK(*c.exact == 3);

  const SpectralValue z = rho(CountMatrix{{0, 4}, {0, 0}});
  REQUIRE(z.exact.has_value());
  CHECK(*z.exact == 0);
  CHECK(rho(CountMatrix(0)).value == 0.0);
}

TEST_CASE("rho lies in the Collatz-Wielandt bracket of irreducible matrices") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + rng() % 7;
    CountMatrix m = random_counts(rng, n, 3, 0.4);
    for (std::size_t i = 0; i < n; ++i) m(i, (i + 1) % n) += 1;
    const auto [lo, hi] = collatz_wielandt(m);
    REQUIRE(hi - lo < 1e-6);
    const double r = rho(m).value;
    CHECK(r >= lo - 1e-9);
    CHECK(r <= hi + 1e-9);
  }
}

TEST_CASE("characteristic polynomial and root isolation") {
  using namespace charpoly;
  const RatMatrix m{{0, 2}, {1, 0}};
  const auto p = characteristic_polynomial(m);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == -2);
  CHECK(p[1] == 0);
  CHECK(p[2] == 1);
  CHECK(evaluate(p, 2) == 2);
  CHECK(count_roots(p, -2, 2) == 2);
  CHECK(count_roots(p, 0, 2) == 1);
  // (x-1)^2 (x+2) has square-free part (x-1)(x+2)
  const std::vector<Rational> q{2, -3, 0, 1};
  CHECK(square_free_part(q).size() == 3);
}

TEST_CASE("rho is monotone in every entry") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 6;
    CountMatrix a = random_counts(rng, n, 3, 0.5);
    CountMatrix b = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3 == 0) b(i, j) += static_cast<std::int64_t>(rng() % 3);
    CHECK(rho(a).value <= rho(b).value + numeric_tolerance);
  }
}

TEST_CASE("rho grows with slope at most one along a diagonal entry") {
  // d rho / d a_ii lies in [0, 1] (it is the product of the Perron vectors).
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 4;
    CountMatrix a = random_counts(rng, n, 2, 0.6);
    const std::size_t k = rng() % n;
    const double r0 = rho(a).value;
    a(k, k) += 1;
    const double r1 = rho(a).value;
    CHECK(r1 - r0 >= -1e-9);
    CHECK(r1 - r0 <= 1.0 + 1e-9);
  }
}

TEST_CASE("rho is invariant under transpose and simultaneous permutation") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const CountMatrix a = random_counts(rng, n, 3, 0.5);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const CountMatrix p = a.principal_submatrix(perm);
    CHECK(rho(a).value == doctest::Approx(rho(a.transpose()).value).epsilon(1e-12));
    CHECK(rho(a).value == doctest::Approx(rho(p).value).epsilon(1e-12));
  }
}

TEST_CASE("block lower triangular matrices take the max over diagonal blocks") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    std::vector<RatMatrix> blocks;
    std::size_t total = 0;
    const std::size_t nb = 1 + rng() % 3;
    for (std::size_t b = 0; b < nb; ++b) {
      const std::size_t n = 1 + rng() % 3;
      blocks.push_back(random_counts(rng, n, 3, 0.6).to_rational());
      total += n;
    }
    RatMatrix full(total, total);
    std::size_t off = 0;
    double best = 0.0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) full(off + i, off + j) = b(i, j);
      for (std::size_t i = off + b.rows(); i < total; ++i)
        for (std::size_t j = off; j < off + b.rows(); ++j) full(i, j) = static_cast<long>(rng() % 4);
      best = std::max(best, rho(b).value);
      off += b.rows();
    }
    CHECK(rho_block_lower_triangular(blocks).value == doctest::Approx(best).epsilon(1e-12));
    CHECK(rho(full).value == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("extended radius with infinite entries") {
  const SpectralValue a = rho_extended(ext_from({{"1", "-inf"}, {"0", "2"}}));
  CHECK(a.certified);
  REQUIRE(a.exact.has_value());
  CHECK(*a.exact == 2);

  const SpectralValue b = rho_extended(ext_from({{"0", "inf"}, {"1", "0"}}));
  CHECK(b.infinite);

  const SpectralValue c = rho_extended(ext_from({{"0", "inf"}, {"0", "0"}}));
  CHECK_FALSE(c.infinite);
  CHECK(c.value == 0.0);

  const SpectralValue d = rho_extended(ext_from({{"inf"}}));
  CHECK(d.infinite);

  // A finite matrix goes through the ordinary path.
  const SpectralValue e = rho_extended(ext_from({{"0", "2"}, {"1", "0"}}));
  CHECK(e.value == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("negative entries are rejected by rho") {
  CHECK_THROWS_AS(rho(RatMatrix{{1, -1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(rho(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("Z+-ring dimension and numeric radius") {
  CHECK(zplus_fpdim(CountMatrix{{0, 1}, {1, 1}}).value == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  CHECK(numeric_spectral_radius({0, -1, 1, 0}, 2) == doctest::Approx(1.0));
}
