#include "fproot/fpcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace fproot {

std::variant<BrickSet, BrickSetViolation> verify_brick_set(const std::vector<std::size_t>& members,
                                                           const CountMatrix& hom) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const std::int64_t d = hom(members[i], members[j]);
      if (d != (i == j ? 1 : 0)) return BrickSetViolation{i, j, d};
    }
  return BrickSet{members, hom.principal_submatrix(members)};
}

CountMatrix adjacency_of(const std::vector<std::size_t>& members, const Assignment& sigma) {
  return sigma.values.principal_submatrix(members);
}

EnumerationResult for_each_brick_set(const CountMatrix& hom, std::size_t size, std::size_t cap,
                                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t k = hom.size();
  std::vector<std::size_t> bricks;
  for (std::size_t i = 0; i < k; ++i)
    if (hom(i, i) == 1) bricks.push_back(i);
  std::vector<std::vector<bool>> orth(k, std::vector<bool>(k, false));
  for (std::size_t i : bricks)
    for (std::size_t j : bricks) orth[i][j] = i != j && hom(i, j) == 0 && hom(j, i) == 0;

  EnumerationResult res;
  if (size == 0) return res;
  std::vector<std::size_t> current;
  // Depth-first clique enumeration over the orthogonality graph.
  std::function<bool(std::size_t)> extend = [&](std::size_t from) {
    if (current.size() == size) {
      if (cap > 0 && res.visited == cap) {
        res.exhausted = true;
        return false;
      }
      visit(current);
      ++res.visited;
      return true;
    }
    for (std::size_t p = from; p < bricks.size(); ++p) {
      const std::size_t b = bricks[p];
      if (bricks.size() - p < size - current.size()) break;
      if (!std::all_of(current.begin(), current.end(), [&](std::size_t c) { return orth[c][b]; })) continue;
      current.push_back(b);
      const bool go_on = extend(p + 1);
      current.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  extend(0);
  return res;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("FPROOT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FpCell fpdim_n(std::size_t n, const CountMatrix& hom, const Assignment& sigma, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("fpdim_n: n must be positive");
  FpCell cell;
  cell.n = n;
  std::vector<std::size_t> flat;
  const EnumerationResult e = for_each_brick_set(
      hom, n, cap, [&](const std::vector<std::size_t>& s) { flat.insert(flat.end(), s.begin(), s.end()); });
  cell.sets_scanned = e.visited;
  cell.exhausted = e.exhausted;
  if (e.visited == 0) {
    cell.value = SpectralValue::exact_value(0);
    return cell;
  }

  // Numeric scan; ties resolve to the earliest set so the result does not
  // depend on the schedule.
  const RhoOptions fast{0, false};
  const std::size_t sets = e.visited;
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, sets / 256));
  std::vector<std::pair<double, std::size_t>> best(workers, {-1.0, 0});
  auto run = [&](std::size_t w) {
    for (std::size_t s = w; s < sets; s += workers) {
      std::vector<std::size_t> members(flat.begin() + s * n, flat.begin() + (s + 1) * n);
      const SpectralValue v = rho(adjacency_of(members, sigma), fast);
      const double x = v.infinite ? std::numeric_limits<double>::infinity() : v.value;
      if (x > best[w].first) best[w] = {x, s};
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::pair<double, std::size_t> winner = best[0];
  for (const auto& b : best)
    if (b.first > winner.first || (b.first == winner.first && b.second < winner.second)) winner = b;

  cell.witness.assign(flat.begin() + winner.second * n, flat.begin() + (winner.second + 1) * n);
  cell.value = rho(adjacency_of(cell.witness, sigma));
  return cell;
}

std::string to_string(GrowthEstimate::Kind k) {
  switch (k) {
    case GrowthEstimate::Kind::vanishing: return "vanishing";
    case GrowthEstimate::Kind::bounded: return "bounded";
    case GrowthEstimate::Kind::polynomial: return "polynomial";
    case GrowthEstimate::Kind::exponential: return "exponential";
  }
  return "?";
}

namespace {

// Least-squares residual of y against x and the fitted slope.
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxx > 0 ? sxy / sxx : 0.0;
  double res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (my + slope * (x[i] - mx));
    res += e * e;
  }
  return {res, slope};
}

}  // namespace

GrowthEstimate growth_analyze(const std::vector<double>& seq) {
  if (seq.size() < 4) throw std::invalid_argument("growth_analyze: need at least 4 terms");
  GrowthEstimate g;
  g.window_end = seq.size();
  g.window_begin = std::max<std::size_t>(2, seq.size() / 2 + 1);
  std::vector<double> xs, logs, ys;
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (std::size_t n = g.window_begin; n <= g.window_end; ++n) {
    const double a = seq[n - 1];
    if (a < 0 || std::isnan(a)) throw std::invalid_argument("growth_analyze: negative or NaN term");
    if (a == 0) continue;
    const double dn = static_cast<double>(n);
    g.fpg = std::max(g.fpg, std::log(a) / std::log(dn));
    g.fpv = std::max(g.fpv, std::pow(a, 1.0 / dn));
    xs.push_back(dn);
    logs.push_back(std::log(dn));
    ys.push_back(std::log(a));
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  if (xs.empty()) {
    g.kind = GrowthEstimate::Kind::vanishing;
  } else if (xs.size() < 2 || hi == lo) {
    g.kind = GrowthEstimate::Kind::bounded;
  } else {
    const auto [res_exp, slope_exp] = linear_fit(xs, ys);
    const auto [res_pow, slope_pow] = linear_fit(logs, ys);
    if (res_exp < res_pow && slope_exp > 1e-3)
      g.kind = GrowthEstimate::Kind::exponential;
    else if (slope_pow > 1e-3)
      g.kind = GrowthEstimate::Kind::polynomial;
    else
      g.kind = GrowthEstimate::Kind::bounded;
  }
  return g;
}

std::optional<std::size_t> stabilization_index(const std::vector<double>& fpdim_by_n, double fpdim) {
  double running = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < fpdim_by_n.size(); ++n) {
    running = std::max(running, fpdim_by_n[n]);
    if (std::abs(running - fpdim) <= 1e-9 || (std::isinf(running) && std::isinf(fpdim))) return n + 1;
  }
  return std::nullopt;
}

const FpCell& FpReport::cell(std::size_t n, int power) const {
  auto it = std::find(powers.begin(), powers.end(), power);
  if (n == 0 || n > grid.size() || it == powers.end()) throw std::out_of_range("FpReport::cell");
  return grid[n - 1][static_cast<std::size_t>(it - powers.begin())];
}

namespace {

double as_double(const SpectralValue& v) { return v.infinite ? std::numeric_limits<double>::infinity() : v.value; }

}  // namespace

FpReport fp_report(const std::vector<std::string>& names, const CountMatrix& hom,
                   const std::vector<std::pair<int, Assignment>>& powers, const FpBudgets& budgets) {
  if (budgets.max_set_size == 0) throw std::invalid_argument("fp_report: set-size budget must be positive");
  if (names.size() != hom.size()) throw std::invalid_argument("fp_report: names and hom table disagree");
  FpReport r;
  r.names = names;
  r.budgets = budgets;
  for (const auto& [p, a] : powers) {
    if (a.values.size() != hom.size()) throw std::invalid_argument("fp_report: assignment size mismatch");
    r.powers.push_back(p);
  }
  for (std::size_t n = 1; n <= budgets.max_set_size; ++n) {
    std::vector<FpCell> row;
    for (const auto& [p, a] : powers) {
      FpCell c = fpdim_n(n, hom, a, budgets.max_sets);
      c.power = p;
      r.exhausted = r.exhausted || c.exhausted;
      row.push_back(std::move(c));
    }
    r.grid.push_back(std::move(row));
  }

  auto power_it = std::find(r.powers.begin(), r.powers.end(), 1);
  if (power_it != r.powers.end()) {
    const std::size_t k = static_cast<std::size_t>(power_it - r.powers.begin());
    std::vector<double> by_n;
    const FpCell* best = nullptr;
    for (const auto& row : r.grid) {
      by_n.push_back(as_double(row[k].value));
      if (!row[k].witness.empty() && (!best || as_double(row[k].value) > as_double(best->value))) best = &row[k];
    }
    r.fpdim = best ? best->value : SpectralValue::exact_value(0);
    if (best) r.fpdim_witness = best->witness;
    r.stabilization_index = stabilization_index(by_n, as_double(*r.fpdim));
  }

  int max_power = 0;
  for (int p : r.powers) max_power = std::max(max_power, p);
  bool contiguous = max_power >= 1;
  for (int m = 1; m <= max_power && contiguous; ++m)
    contiguous = std::find(r.powers.begin(), r.powers.end(), m) != r.powers.end();
  if (contiguous) {
    for (int m = 1; m <= max_power; ++m) {
      const std::size_t k = static_cast<std::size_t>(std::find(r.powers.begin(), r.powers.end(), m) - r.powers.begin());
      double env = 0;
      for (const auto& row : r.grid) env = std::max(env, as_double(row[k].value));
      r.envelope_sequence.push_back(env);
      if (!r.fpdim_witness.empty())
        r.growth_sequence.push_back(
            as_double(rho(adjacency_of(r.fpdim_witness, powers[k].second), RhoOptions{0, false})));
    }
    if (r.envelope_sequence.size() >= 4) r.envelope_growth = growth_analyze(r.envelope_sequence);
    if (r.growth_sequence.size() >= 4) r.growth = growth_analyze(r.growth_sequence);
  }

  for (std::size_t k = 0; k < r.powers.size(); ++k) {
    if (r.powers[k] < 0) continue;
    double env = 0;
    for (const auto& row : r.grid) env = std::max(env, as_double(row[k].value));
    if (env > numeric_tolerance && (!r.fpgldim || r.powers[k] > *r.fpgldim)) r.fpgldim = r.powers[k];
  }
  return r;
}

CountMatrix hom_table(const std::vector<Representation>& ms) {
  CountMatrix h(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) h(i, j) = static_cast<std::int64_t>(hom_dim(ms[i], ms[j]));
  return h;
}

std::vector<CountMatrix> ext_power_tables(const std::vector<Representation>& ms, std::size_t max_power) {
  std::vector<CountMatrix> tables(max_power + 1, CountMatrix(ms.size()));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Resolution res = minimal_resolution(ms[i], max_power + 1);
    for (std::size_t j = 0; j < ms.size(); ++j)
      for (std::size_t m = 0; m <= max_power; ++m)
        tables[m](i, j) = static_cast<std::int64_t>(ext_from_resolution(res, m, ms[j]));
  }
  return tables;
}

std::vector<std::pair<int, Assignment>> ext_assignments(const std::vector<CountMatrix>& tables) {
  std::vector<std::pair<int, Assignment>> out;
  for (std::size_t m = 0; m < tables.size(); ++m)
    out.emplace_back(static_cast<int>(m), Assignment{"E^" + std::to_string(m), tables[m]});
  return out;
}

Quiver e1_quiver(const std::vector<std::string>& names, const CountMatrix& ext1) {
  if (names.size() != ext1.size()) throw std::invalid_argument("e1_quiver: size mismatch");
  Quiver q;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::string id = names[i].empty() ? "X" + std::to_string(i) : names[i];
    if (q.find_vertex(id)) id += "#" + std::to_string(i);
    q.add_vertex(id);
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j)
      for (std::int64_t k = 0; k < ext1(i, j); ++k)
        q.add_arrow("e" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k), i, j);
  return q;
}

QuiverBoundReport quiver_bound_check(const CountMatrix& hom, const Assignment& sigma, std::size_t max_size) {
  QuiverBoundReport r;
  r.category_side = SpectralValue::exact_value(0);
  for (std::size_t n = 1; n <= max_size; ++n) {
    FpCell c = fpdim_n(n, hom, sigma);
    if (as_double(c.value) > as_double(r.category_side)) r.category_side = c.value;
  }
  r.quiver_side = rho(sigma.values);
  r.pass = r.quiver_side.infinite ||
           as_double(r.category_side) <= as_double(r.quiver_side) + r.category_side.tolerance + r.quiver_side.tolerance;
  return r;
}

CountMatrix HomTableCategory::hom_matrix() const { return shifted(0).values; }

Assignment HomTableCategory::shifted(long offset) const {
  Assignment a{"shift^" + std::to_string(offset), CountMatrix(size())};
  for (long i = lo; i <= hi; ++i)
    for (long j = lo; j <= hi; ++j) a.values(static_cast<std::size_t>(i - lo), static_cast<std::size_t>(j - lo)) =
        homdim(i, j + offset);
  return a;
}

HomTableCategory graded_shift_category(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("graded_shift_category: empty window");
  return {lo, hi, [](long i, long j) -> std::int64_t { return (j - i == 0 || j - i == 1) ? 1 : 0; }};
}

FpReport homtable_fp(const HomTableCategory& table, long shift, const std::vector<int>& powers,
                     const FpBudgets& budgets) {
  std::vector<std::string> names;
  for (long i = table.lo; i <= table.hi; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, Assignment>> assignments;
  for (int p : powers) assignments.emplace_back(p, table.shifted(shift * p));
  return fp_report(names, table.hom_matrix(), assignments, budgets);
}

ComplexityReport complexity_estimate(const AlgebraPtr& a, std::size_t depth, std::size_t agc_c,
                                     std::size_t agc_d) {
  if (depth < 4) throw std::invalid_argument("complexity_estimate: depth must be at least 4");
  const auto s = simples(a);
  const std::size_t w = s.size();
  // e[n][i][j] = dim Ext^n(S_i, S_j)
  std::vector<std::vector<std::vector<std::size_t>>> e(depth + 1, std::vector<std::vector<std::size_t>>(w, std::vector<std::size_t>(w)));
  for (std::size_t i = 0; i < w; ++i) {
    const Resolution res = minimal_resolution(s[i], depth + 1);
    for (std::size_t j = 0; j < w; ++j)
      for (std::size_t n = 0; n <= depth; ++n) e[n][i][j] = ext_from_resolution(res, n, s[j]);
  }
  ComplexityReport r;
  std::vector<double> seq;
  for (std::size_t n = 1; n <= depth; ++n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j) total += e[n][i][j];
    r.ext_dims.push_back(total);
    seq.push_back(static_cast<double>(total));
  }
  r.growth = growth_analyze(seq);
  r.cx = r.growth.kind == GrowthEstimate::Kind::vanishing ? 0.0 : r.growth.fpg + 1.0;
  r.infinite = r.growth.kind == GrowthEstimate::Kind::exponential;

  std::vector<std::size_t> p(depth + 1, 0);
  for (std::size_t n = 0; n <= depth; ++n)
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = i; j < w; ++j) p[n] = std::max(p[n], std::min(e[n][i][j], e[n][j][i]));
  r.agc_c = agc_c;
  r.agc_d = agc_d;
  r.agc_holds = true;
  for (std::size_t n = 1 + agc_d; n + agc_d <= depth; ++n) {
    std::size_t window = 0;
    for (std::size_t k = n - agc_d; k <= n + agc_d; ++k) window = std::max(window, p[k]);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j)
        if (e[n][i][j] > agc_c * window) r.agc_holds = false;
  }
  return r;
}

FpcCxReport fpc_vs_cx_check(const AlgebraPtr& a, const std::vector<Representation>& candidates,
                            std::size_t max_power, std::size_t max_set_size, double tolerance) {
  std::vector<std::string> names;
  for (const auto& c : candidates) names.push_back(c.name());
  const auto tables = ext_power_tables(candidates, max_power);
  const FpReport rep = fp_report(names, tables[0], ext_assignments(tables), FpBudgets{max_set_size, 0});
  FpcCxReport r;
  if (rep.growth && rep.growth->kind != GrowthEstimate::Kind::vanishing) {
    r.fpc = rep.growth->fpg + 1.0;
    r.fp_exponential = rep.growth->kind == GrowthEstimate::Kind::exponential;
  }
  const ComplexityReport cx = complexity_estimate(a, max_power);
  r.cx = cx.cx;
  r.cx_exponential = cx.infinite;
  r.agc_holds = cx.agc_holds;
  if (r.cx_exponential)
    r.pass = true;
  else if (r.fp_exponential)
    r.pass = false;
  else
    r.pass = r.fpc <= r.cx + tolerance;
  return r;
}

CountMatrix genus_matrix(std::size_t n, std::int64_t g) {
  if (n == 0 || g < 1) throw std::invalid_argument("genus_matrix: need n >= 1 and g >= 1");
  CountMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? g : g - 1;
  return m;
}

}  // namespace fproot
