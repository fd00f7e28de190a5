#include "fproot/fpcore.hpp"

#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <random>

using namespace fproot;

namespace {

CountMatrix random_hom(std::mt19937_64& rng, std::size_t n) {
  CountMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = rng() % 6 == 0 ? 2 : 1;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng() % 3 == 0) h(i, j) = 1;
  }
  return h;
}

Assignment random_sigma(std::mt19937_64& rng, std::size_t n) {
  Assignment a{"s", CountMatrix(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.values(i, j) = static_cast<std::int64_t>(rng() % 3);
  return a;
}

std::vector<std::size_t> members_of(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask >> i; ++i)
    if (mask >> i & 1U) out.push_back(i);
  return out;
}

bool brute_is_brick_set(const CountMatrix& h, const std::vector<std::size_t>& s) {
  for (auto i : s)
    for (auto j : s)
      if (h(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("brick set verification reports the first offending pair") {
  const CountMatrix h{{1, 0, 1}, {0, 1, 0}, {0, 0, 2}};
  CHECK(std::holds_alternative<BrickSet>(verify_brick_set({0, 1}, h)));
  const auto bad = verify_brick_set({0, 2}, h);
  REQUIRE(std::holds_alternative<BrickSetViolation>(bad));
  CHECK(std::get<BrickSetViolation>(bad).dim == 1);
  CHECK(std::holds_alternative<BrickSetViolation>(verify_brick_set({2}, h)));
}

TEST_CASE("brick set enumeration matches subset brute force") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const CountMatrix h = random_hom(rng, n);
    for (std::size_t size = 1; size <= 4; ++size) {
      std::vector<std::vector<std::size_t>> seen;
      const auto res = for_each_brick_set(h, size, 0, [&](const auto& s) { seen.push_back(s); });
      std::vector<std::vector<std::size_t>> expect;
      for (unsigned mask = 1; mask < (1U << n); ++mask) {
        const auto s = members_of(mask);
        if (s.size() == size && brute_is_brick_set(h, s)) expect.push_back(s);
      }
      std::sort(expect.begin(), expect.end());
      CHECK(seen == expect);
      CHECK(res.visited == expect.size());
      CHECK_FALSE(res.exhausted);
    }
  }
}

TEST_CASE("enumeration cap stops early and says so") {
  const CountMatrix h{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  std::size_t count = 0;
  const auto res = for_each_brick_set(h, 2, 3, [&](const auto&) { ++count; });
  CHECK(count == 3);
  CHECK(res.exhausted);
  const auto full = for_each_brick_set(h, 2, 6, [](const auto&) {});
  CHECK(full.visited == 6);
  CHECK_FALSE(full.exhausted);
}

TEST_CASE("fpdim_n is the maximum over all brick sets") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const CountMatrix h = random_hom(rng, n);
    const Assignment s = random_sigma(rng, n);
    for (std::size_t size = 1; size <= 3; ++size) {
      double best = 0.0;
      for (unsigned mask = 1; mask < (1U << n); ++mask) {
        const auto m = members_of(mask);
        if (m.size() == size && brute_is_brick_set(h, m))
          best = std::max(best, rho(s.values.principal_submatrix(m)).value);
      }
      const FpCell c = fpdim_n(size, h, s);
      CHECK(c.value.value == doctest::Approx(best).epsilon(1e-12));
      if (!c.witness.empty()) {
        CHECK(brute_is_brick_set(h, c.witness));
        CHECK(rho(adjacency_of(c.witness, s)).value == doctest::Approx(c.value.value));
      }
    }
  }
}

TEST_CASE("scans are deterministic across thread counts") {
  std::mt19937_64 rng(47);
  const CountMatrix h = random_hom(rng, 14);
  const Assignment s = random_sigma(rng, 14);
  setenv("FPROOT_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  const FpCell a = fpdim_n(3, h, s);
  setenv("FPROOT_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  const FpCell b = fpdim_n(3, h, s);
  unsetenv("FPROOT_THREADS");
  CHECK(a.witness == b.witness);
  CHECK(a.value.value == b.value.value);
  CHECK(a.sets_scanned == b.sets_scanned);
}

TEST_CASE("stabilization index") {
  CHECK(stabilization_index({1.0, 1.5, 1.5}, 1.5) == 2);
  CHECK(stabilization_index({2.0, 1.0, 1.0}, 2.0) == 1);
  CHECK(stabilization_index({1.0, 1.0, 1.2}, 1.2) == 3);
  CHECK_FALSE(stabilization_index({1.0, 1.0}, 2.0).has_value());
  CHECK_FALSE(stabilization_index({}, 0.0).has_value());
}

TEST_CASE("growth analysis of model sequences") {
  std::vector<double> poly, expo, flat, zero, sqrt2;
  for (int n = 1; n <= 200; ++n) poly.push_back(std::floor(std::pow(n, 1.5)));
  for (int n = 1; n <= 60; ++n) expo.push_back(std::floor(std::pow(1.3, n)));
  for (int n = 1; n <= 20; ++n) {
    flat.push_back(3.0);
    zero.push_back(n < 3 ? 1.0 : 0.0);
    sqrt2.push_back(std::pow(std::sqrt(2.0), n));
  }
  const GrowthEstimate p = growth_analyze(poly);
  CHECK(p.kind == GrowthEstimate::Kind::polynomial);
  CHECK(p.fpg == doctest::Approx(1.5).epsilon(0.05));
  const GrowthEstimate e = growth_analyze(expo);
  CHECK(e.kind == GrowthEstimate::Kind::exponential);
  CHECK(e.fpv == doctest::Approx(1.3).epsilon(0.02));
  CHECK(growth_analyze(flat).kind == GrowthEstimate::Kind::bounded);
  CHECK(growth_analyze(zero).kind == GrowthEstimate::Kind::vanishing);
  CHECK(growth_analyze(sqrt2).fpv == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(growth_analyze({1, 2, 3}), std::invalid_argument);
  CHECK(to_string(GrowthEstimate::Kind::exponential) == "exponential");
}

TEST_CASE("genus matrices have Perron root n(g-1)+1") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::int64_t g = 1; g <= 4; ++g)
      CHECK(rho(genus_matrix(n, g)).value ==
            doctest::Approx(static_cast<double>(n) * static_cast<double>(g - 1) + 1).epsilon(1e-12));
  CHECK_THROWS_AS(genus_matrix(2, 0), std::invalid_argument);
}

TEST_CASE("graded shift category on a small window") {
  const HomTableCategory c = graded_shift_category(-6, 6);
  CHECK(c.size() == 13);
  CHECK(c.homdim(2, 2) == 1);
  CHECK(c.homdim(2, 3) == 1);
  CHECK(c.homdim(3, 2) == 0);
  CHECK(c.homdim(2, 4) == 0);
  const FpReport r = homtable_fp(c, 1, {-2, -1, 0, 1, 2, 3}, {3, 0});
  for (std::size_t n = 1; n <= 3; ++n)
    for (int p : {-2, -1, 0, 1, 2, 3}) {
      const double expect = (p == 0 || p == 1) ? 1.0 : 0.0;
      CHECK(r.cell(n, p).value.value == doctest::Approx(expect));
    }
  CHECK(r.fpgldim == 1);
}

TEST_CASE("E1 quiver and the quiver bound") {
  const CountMatrix ext1{{0, 2}, {1, 0}};
  const Quiver q = e1_quiver({"S1", "S2"}, ext1);
  CHECK(adjacency(q) == ext1);
  const CountMatrix hom{{1, 0}, {0, 1}};
  const QuiverBoundReport b = quiver_bound_check(hom, Assignment{"E1", ext1}, 2);
  CHECK(b.pass);
  CHECK(b.category_side.value == doctest::Approx(std::sqrt(2.0)));
  CHECK(b.quiver_side.value == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("report over a two-object category") {
  const CountMatrix hom{{1, 0}, {0, 1}};
  std::vector<std::pair<int, Assignment>> powers;
  for (int m = 1; m <= 6; ++m) {
    const std::int64_t big = std::int64_t{1} << ((m + 1) / 2);
    const std::int64_t small = std::int64_t{1} << (m / 2);
    powers.emplace_back(m, m % 2 ? Assignment{"E", CountMatrix{{0, big}, {small, 0}}}
                                 : Assignment{"E", CountMatrix{{small, 0}, {0, big}}});
  }
  const FpReport r = fp_report({"S1", "S2"}, hom, powers, {2, 0});
  REQUIRE(r.fpdim.has_value());
  CHECK(r.fpdim->value == doctest::Approx(std::sqrt(2.0)));
  CHECK(r.stabilization_index == 2);
  CHECK(r.fpdim_witness == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(r.exhausted);
  REQUIRE(r.growth.has_value());
  CHECK(r.growth->kind == GrowthEstimate::Kind::exponential);
  CHECK(r.fpgldim == 6);

  const FpReport capped = fp_report({"S1", "S2"}, hom, powers, {2, 1});
  CHECK(capped.exhausted);
}

TEST_CASE("complexity of small algebras") {
  const ComplexityReport hereditary =
      complexity_estimate(share(fixtures::path_algebra(dynkin_quiver({DynkinFamily::A, false, 3}))), 6);
  CHECK(hereditary.cx == 0.0);
  CHECK_FALSE(hereditary.infinite);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(hereditary.ext_dims[n - 1] == 0);

  const ComplexityReport dual = complexity_estimate(share(fixtures::truncated_polynomial(2)), 8);
  for (auto d : dual.ext_dims) CHECK(d == 1);
  CHECK(dual.cx == doctest::Approx(1.0));
  CHECK(dual.agc_holds);

  const ComplexityReport g = complexity_estimate(share(fixtures::g2_algebra()), 10);
  CHECK(g.infinite);
  CHECK(g.agc_holds);
  CHECK(g.ext_dims[0] == 3);
}

namespace {

struct G2Universe {
  AlgebraPtr algebra = share(fixtures::g2_algebra());
  std::vector<Representation> bricks = fixtures::g2_brick_universe(algebra, 8, 3);
  std::vector<CountMatrix> tables = ext_power_tables(bricks, 2);

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < bricks.size(); ++i)
      if (bricks[i].name() == name) return i;
    throw std::out_of_range(name);
  }
};

const G2Universe& g2u() {
  static const G2Universe u;
  return u;
}

}  // namespace

TEST_CASE("brick sets over the G2 universe") {
  const auto& u = g2u();
  const CountMatrix& hom = u.tables[0];
  const std::size_t s1 = u.index_of("S1_0"), s2 = u.index_of("S2_0"), p2 = u.index_of("P2");
  const std::size_t x0 = u.index_of("X1(0)"), x1 = u.index_of("X1(1)");
  CHECK(u.bricks[s1].dimvec() == std::vector<std::size_t>{1, 0});
  CHECK(std::holds_alternative<BrickSet>(verify_brick_set({s1, s2}, hom)));
  CHECK(std::holds_alternative<BrickSet>(verify_brick_set({x0, x1}, hom)));
  CHECK(std::holds_alternative<BrickSetViolation>(verify_brick_set({s1, p2}, hom)));

  const Assignment e1{"E^1", u.tables[1]};
  CHECK(adjacency_of({s1, s2}, e1) == CountMatrix{{0, 2}, {1, 0}});
  CHECK(adjacency_of({x0, x1, u.index_of("X1(2)")}, e1) == CountMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(adjacency_of({s1, s2}, Assignment{"Hom", hom}) == CountMatrix{{1, 0}, {0, 1}});

  CHECK(fpdim_n(2, hom, e1).value.value == doctest::Approx(std::sqrt(2.0)));
  CHECK(fpdim_n(3, hom, e1).value.value == doctest::Approx(1.0));
}

TEST_CASE("restricting the universe never raises fpdim") {
  const auto& u = g2u();
  std::vector<std::size_t> sub;
  for (std::size_t i = 0; i < u.bricks.size(); ++i)
    if (u.bricks[i].name().rfind("X1", 0) == 0) sub.push_back(i);
  REQUIRE(sub.size() == 8);
  const CountMatrix hom_sub = u.tables[0].principal_submatrix(sub);
  for (std::size_t m = 1; m <= 2; ++m) {
    const Assignment full{"E", u.tables[m]};
    const Assignment part{"E", u.tables[m].principal_submatrix(sub)};
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK(fpdim_n(n, hom_sub, part).value.value <= fpdim_n(n, u.tables[0], full).value.value + 1e-12);
  }
  // A larger set-size budget only adds cells.
  std::vector<std::string> names;
  for (const auto& b : u.bricks) names.push_back(b.name());
  const FpReport small = fp_report(names, u.tables[0], {{1, {"E^1", u.tables[1]}}}, {2, 0});
  const FpReport large = fp_report(names, u.tables[0], {{1, {"E^1", u.tables[1]}}}, {3, 0});
  CHECK(small.fpdim->value <= large.fpdim->value + 1e-12);
  CHECK(small.cell(2, 1).value.value == large.cell(2, 1).value.value);
}

TEST_CASE("principal submatrix law") {
  const auto& u = g2u();
  const Assignment e1{"E^1", u.tables[1]};
  const std::vector<std::size_t> phi{u.index_of("S1_0"), u.index_of("S2_0")};
  const CountMatrix whole = adjacency_of(phi, e1);
  CHECK(adjacency_of({phi[1]}, e1) == whole.principal_submatrix({1}));
  CHECK(rho(adjacency_of({phi[0]}, e1)).value <= rho(whole).value);
}

TEST_CASE("E1 quivers of small universes") {
  const AlgebraPtr a2 = share(fixtures::path_algebra(dynkin_quiver({DynkinFamily::A, false, 2})));
  const auto ind = dynkin_indecomposables(a2, 1);
  REQUIRE(ind.size() == 3);
  const auto t = ext_power_tables(ind, 1);
  CHECK(cycle_number(e1_quiver({"a", "b", "c"}, t[1])).global == CycleCount::zero);
  CHECK(fpdim_n(1, t[0], {"E^1", t[1]}).value.value == 0.0);
  const Quiver single = e1_quiver({"X"}, CountMatrix{{0}});
  CHECK(single.vertex_count() == 1);
  CHECK(single.arrow_count() == 0);
  CHECK_THROWS_AS(e1_quiver({"X"}, CountMatrix{{0, 1}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("quiver bound on concrete universes") {
  const AlgebraPtr a3 = share(fixtures::path_algebra(dynkin_quiver({DynkinFamily::A, false, 3})));
  const auto ind = dynkin_indecomposables(a3, 1);
  const auto t = ext_power_tables(ind, 1);
  const QuiverBoundReport r = quiver_bound_check(t[0], {"E^1", t[1]}, 4);
  CHECK(r.pass);
  CHECK(r.category_side.value == 0.0);
  CHECK(r.quiver_side.value == 0.0);

  const auto& u = g2u();
  const QuiverBoundReport g = quiver_bound_check(u.tables[0], {"E^1", u.tables[1]}, 3);
  CHECK(g.pass);
  CHECK(g.category_side.value >= std::sqrt(2.0) - 1e-9);
  CHECK(g.quiver_side.value >= g.category_side.value - 1e-9);

  const QuiverBoundReport one = quiver_bound_check(CountMatrix{{1}}, {"loops", CountMatrix{{3}}}, 1);
  CHECK(one.category_side.value == doctest::Approx(3.0));
  CHECK(one.pass);
}

TEST_CASE("fp complexity against Ext complexity") {
  const AlgebraPtr g2 = g2u().algebra;
  CandidateOptions opts;
  opts.max_dim = 3;
  const FpcCxReport g = fpc_vs_cx_check(g2, brick_candidates(g2, opts), 8, 2);
  CHECK(g.pass);
  CHECK(g.fp_exponential);
  CHECK(g.cx_exponential);

  const AlgebraPtr dual = share(fixtures::truncated_polynomial(2));
  const FpcCxReport d = fpc_vs_cx_check(dual, brick_candidates(dual, {}), 8, 2);
  CHECK(d.pass);
  CHECK(d.fpc == doctest::Approx(1.0).epsilon(0.25));
  CHECK(d.cx == doctest::Approx(1.0).epsilon(0.25));

  const AlgebraPtr a2 = share(fixtures::path_algebra(dynkin_quiver({DynkinFamily::A, false, 2})));
  const FpcCxReport h = fpc_vs_cx_check(a2, brick_candidates(a2, {}), 6, 2);
  CHECK(h.pass);
  CHECK(h.fpc == 0.0);
}

TEST_CASE("semisimple algebras have complexity zero") {
  Quiver q({"1", "2"});
  const ComplexityReport r = complexity_estimate(share(fixtures::path_algebra(q)), 5);
  for (auto d : r.ext_dims) CHECK(d == 0);
  CHECK(r.cx == 0.0);
  CHECK(r.growth.kind == GrowthEstimate::Kind::vanishing);
  CHECK_THROWS_AS(complexity_estimate(share(fixtures::path_algebra(q)), 3), std::invalid_argument);
}

TEST_CASE("constant and zero sequences") {
  const GrowthEstimate c = growth_analyze(std::vector<double>(10, 1.0));
  CHECK(c.fpg == 0.0);
  CHECK(c.fpv == 1.0);
  const GrowthEstimate z = growth_analyze(std::vector<double>(10, 0.0));
  CHECK(std::isinf(z.fpg));
  CHECK(z.fpg < 0);
  CHECK(z.fpv == 0.0);
}

TEST_CASE("genus matrix examples") {
  CHECK(rho(genus_matrix(3, 2)).value == doctest::Approx(4.0));
  CHECK(rho(genus_matrix(5, 3)).value == doctest::Approx(11.0));
  CHECK(rho(genus_matrix(1, 7)).value == doctest::Approx(7.0));
}
