#include "fproot/quiver.hpp"

#include "fproot/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fproot {

Quiver::Quiver(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(std::move(v));
}

std::size_t Quiver::add_vertex(std::string id) {
  if (find_vertex(id)) throw std::invalid_argument("duplicate vertex '" + id + "'");
  vertices_.push_back(std::move(id));
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string label, const std::string& from, const std::string& to) {
  return add_arrow(std::move(label), vertex_index(from), vertex_index(to));
}

std::size_t Quiver::add_arrow(std::string label, std::size_t from, std::size_t to) {
  if (from >= vertices_.size() || to >= vertices_.size())
    throw std::invalid_argument("arrow '" + label + "' has an undeclared endpoint");
  if (find_arrow(label)) throw std::invalid_argument("duplicate arrow label '" + label + "'");
  arrows_.push_back({std::move(label), from, to});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw std::invalid_argument("unknown vertex '" + id + "'");
}

std::size_t Quiver::arrow_index(const std::string& label) const {
  if (auto a = find_arrow(label)) return *a;
  throw std::invalid_argument("unknown arrow '" + label + "'");
}

Quiver Quiver::reversed() const {
  Quiver r(vertices_);
  for (const auto& a : arrows_) r.add_arrow(a.label, a.target, a.source);
  return r;
}

CountMatrix adjacency(const Quiver& q) {
  CountMatrix m(q.vertex_count());
  for (const auto& a : q.arrows()) m(a.source, a.target) += 1;
  return m;
}

CountMatrix symmetric_adjacency(const Quiver& q) {
  CountMatrix m(q.vertex_count());
  for (const auto& a : q.arrows()) {
    m(a.source, a.target) += 1;
    m(a.target, a.source) += 1;
  }
  return m;
}

SpectralValue quiver_fpdim(const Quiver& q) { return rho(adjacency(q)); }

SpectralValue quiver_family_fpdim(const std::vector<Quiver>& family) {
  SpectralValue best = SpectralValue::exact_value(0);
  for (const auto& q : family) {
    SpectralValue v = quiver_fpdim(q);
    const bool certified = best.certified && v.certified;
    const double tol = std::max(best.tolerance, v.tolerance);
    if (v.value > best.value) best = std::move(v);
    best.certified = certified;
    best.tolerance = tol;
  }
  return best;
}

std::string to_string(CycleCount c) {
  switch (c) {
    case CycleCount::zero: return "0";
    case CycleCount::one: return "1";
    case CycleCount::many: return ">=2";
  }
  return "?";
}

namespace {

int saturate(long n) { return n >= 2 ? 2 : static_cast<int>(n); }

// theta at base vertex v: sum over arrows leaving v of the number of walks
// from the arrow's target back to v that avoid v in their interior.
CycleCount cycles_at(const Quiver& q, std::size_t v) {
  const std::size_t n = q.vertex_count();
  Digraph g(n);           // quiver with v removed
  Digraph reverse_g(n);
  std::vector<long> into_v(n, 0);
  for (const auto& a : q.arrows()) {
    if (a.target == v && a.source != v) into_v[a.source] += 1;
    if (a.source == v || a.target == v) continue;
    g[a.source].push_back(a.target);
    reverse_g[a.target].push_back(a.source);
  }

  // Vertices (other than v) from which v is reachable avoiding v.
  std::vector<bool> reach(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t x = 0; x < n; ++x)
    if (x != v && into_v[x] > 0) {
      reach[x] = true;
      queue.push_back(x);
    }
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : reverse_g[x])
      if (!reach[y]) {
        reach[y] = true;
        queue.push_back(y);
      }
  }

  // A walk that can enter a cycle of Q - v and still return to v can wind
  // around that cycle any number of times.
  const auto scc = strongly_connected_components(g);
  std::vector<int> walks(n, 0);
  for (std::size_t c = 0; c < scc.members.size(); ++c) {  // sinks first
    for (std::size_t x : scc.members[c]) {
      if (x == v || !reach[x]) continue;
      if (scc.cyclic[c]) {
        walks[x] = 2;
        continue;
      }
      long total = into_v[x];
      for (std::size_t y : g[x]) total += walks[y];
      walks[x] = saturate(total);
    }
  }

  long theta = 0;
  for (const auto& a : q.arrows()) {
    if (a.source != v) continue;
    theta += a.target == v ? 1 : walks[a.target];
  }
  return static_cast<CycleCount>(saturate(theta));
}

}  // namespace

CycleNumber cycle_number(const Quiver& q) {
  CycleNumber out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    out.per_vertex.push_back(cycles_at(q, v));
    out.global = std::max(out.global, out.per_vertex.back());
  }
  return out;
}

TrichotomyReport fpdim_trichotomy_check(const Quiver& q, double tolerance) {
  TrichotomyReport r;
  r.fpdim = quiver_fpdim(q);
  r.theta = cycle_number(q).global;
  const double x = r.fpdim.value;
  const bool is_zero = std::abs(x) <= tolerance;
  const bool is_one = std::abs(x - 1.0) <= tolerance;
  const bool above_one = x > 1.0 + tolerance;
  r.pass = (is_zero == (r.theta == CycleCount::zero)) && (is_one == (r.theta == CycleCount::one)) &&
           (above_one == (r.theta == CycleCount::many));
  return r;
}

std::string DynkinType::name() const {
  if (family == DynkinFamily::other) return "other";
  std::string s = extended ? "~" : "";
  s += family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
  return s + std::to_string(rank);
}

DynkinType classify_underlying_graph(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) throw std::invalid_argument("classify: empty quiver");

  std::vector<std::vector<std::size_t>> nbr(n);
  std::size_t loops = 0;
  std::vector<std::vector<long>> mult(n, std::vector<long>(n, 0));
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) {
      ++loops;
      continue;
    }
    if (mult[a.source][a.target]++ == 0) {
      nbr[a.source].push_back(a.target);
      nbr[a.target].push_back(a.source);
    }
    mult[a.target][a.source] = mult[a.source][a.target];
  }
  for (const auto& a : q.arrows())
    if (a.source == a.target) nbr[a.source].push_back(a.source);

  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t visited = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    ++visited;
    for (std::size_t y : nbr[x])
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
  }
  if (visited != n) throw std::invalid_argument("classify: underlying graph is disconnected");

  const DynkinType other{};
  if (loops > 0) {
    if (n == 1 && loops == 1) return {DynkinFamily::A, true, 0};
    return other;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mult[i][j] >= 2) {
        if (n == 2 && mult[i][j] == 2) return {DynkinFamily::A, true, 1};
        return other;
      }

  std::size_t edges = 0;
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = nbr[i].size();
    edges += degree[i];
  }
  edges /= 2;
  const int rank = static_cast<int>(n);

  if (edges == n) {
    if (n >= 3 && std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 2; }))
      return {DynkinFamily::A, true, rank - 1};
    return other;
  }
  if (edges != n - 1) return other;

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i)
    if (degree[i] >= 3) branch.push_back(i);
  if (branch.empty()) return {DynkinFamily::A, false, rank};

  // Vertices on the arm that starts at `first` and leads away from `from`.
  auto arm_length = [&](std::size_t from, std::size_t first) {
    std::size_t len = 1, prev = from, cur = first;
    while (degree[cur] == 2) {
      std::size_t next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    return degree[cur] == 1 ? len : 0;  // 0: the arm reaches another branch point
  };

  if (branch.size() == 1) {
    const std::size_t c = branch[0];
    std::vector<std::size_t> arms;
    for (std::size_t y : nbr[c]) arms.push_back(arm_length(c, y));
    std::sort(arms.begin(), arms.end());
    if (degree[c] == 4) {
      if (arms == std::vector<std::size_t>{1, 1, 1, 1}) return {DynkinFamily::D, true, 4};
      return other;
    }
    if (degree[c] != 3) return other;
    const std::size_t p = arms[0], s = arms[1], r = arms[2];
    if (p == 1 && s == 1) return {DynkinFamily::D, false, rank};
    if (p == 1 && s == 2 && r >= 2 && r <= 4) return {DynkinFamily::E, false, rank};
    if (p == 2 && s == 2 && r == 2) return {DynkinFamily::E, true, 6};
    if (p == 1 && s == 3 && r == 3) return {DynkinFamily::E, true, 7};
    if (p == 1 && s == 2 && r == 5) return {DynkinFamily::E, true, 8};
    return other;
  }
  if (branch.size() == 2 && degree[branch[0]] == 3 && degree[branch[1]] == 3) {
    for (std::size_t b : branch) {
      std::size_t leaves = 0;
      for (std::size_t y : nbr[b])
        if (degree[y] == 1) ++leaves;
      if (leaves < 2) return other;
    }
    return {DynkinFamily::D, true, rank - 1};
  }
  return other;
}

Quiver dynkin_quiver(const DynkinType& type) {
  auto make = [](std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Quiver q;
    for (std::size_t i = 1; i <= vertices; ++i) q.add_vertex(std::to_string(i));
    std::size_t k = 0;
    for (auto [a, b] : edges) q.add_arrow("a" + std::to_string(++k), a - 1, b - 1);
    return q;
  };
  auto path = [](std::size_t len) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i < len; ++i) e.emplace_back(i, i + 1);
    return e;
  };
  const int r = type.rank;
  switch (type.family) {
    case DynkinFamily::A:
      if (!type.extended) {
        if (r < 1) break;
        return make(r, path(r));
      }
      if (r == 0) {
        Quiver q({"1"});
        q.add_arrow("a1", 0, 0);
        return q;
      }
      if (r < 1) break;
      {
        auto e = path(r + 1);
        e.emplace_back(1, r + 1);
        return make(r + 1, e);
      }
    case DynkinFamily::D:
      if (!type.extended) {
        if (r < 4) break;
        auto e = path(r - 1);
        e.emplace_back(r - 2, r);
        return make(r, e);
      }
      {
        if (r < 4) break;
        auto e = path(r - 1);
        e.emplace_back(2, r);
        e.emplace_back(r - 2, r + 1);
        return make(r + 1, e);
      }
    case DynkinFamily::E:
      if (!type.extended) {
        if (r < 6 || r > 8) break;
        auto e = path(r - 1);
        e.emplace_back(3, r);
        return make(r, e);
      }
      if (r == 6) {
        auto e = path(5);
        e.emplace_back(3, 6);
        e.emplace_back(6, 7);
        return make(7, e);
      }
      if (r == 7) {
        auto e = path(7);
        e.emplace_back(4, 8);
        return make(8, e);
      }
      if (r == 8) {
        auto e = path(8);
        e.emplace_back(3, 9);
        return make(9, e);
      }
      break;
    case DynkinFamily::other:
      break;
  }
  throw std::invalid_argument("no Dynkin diagram of type " + type.name());
}

std::vector<std::vector<long>> positive_roots(const Quiver& q) {
  if (!classify_underlying_graph(q).is_dynkin())
    throw std::invalid_argument("positive_roots: underlying graph is not of Dynkin type");
  const std::size_t n = q.vertex_count();
  const CountMatrix sym = symmetric_adjacency(q);

  // Symmetric bilinear form B(x, e_i) = 2 x_i - sum_j sym(i, j) x_j.
  auto pair_with_simple = [&](const std::vector<long>& x, std::size_t i) {
    long b = 2 * x[i];
    for (std::size_t j = 0; j < n; ++j) b -= sym(i, j) * x[j];
    return b;
  };

  std::set<std::vector<long>> roots;
  std::deque<std::vector<long>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      auto y = x;
      y[i] -= pair_with_simple(x, i);
      if (std::any_of(y.begin(), y.end(), [](long c) { return c < 0; })) continue;
      if (roots.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<std::vector<long>> out(roots.begin(), roots.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0L) < std::accumulate(b.begin(), b.end(), 0L);
  });
  return out;
}

std::string to_dot(const Quiver& q, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (const auto& v : q.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& a : q.arrows())
    out << "  \"" << q.vertices()[a.source] << "\" -> \"" << q.vertices()[a.target] << "\" [label=\"" << a.label
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace fproot
