#include "fproot/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace fproot {

Path trivial_path(std::size_t vertex) { return Path{vertex, vertex, {}}; }

Path make_path(const Quiver& q, const std::vector<std::size_t>& arrows) {
  if (arrows.empty()) throw std::invalid_argument("make_path: empty arrow list");
  Path p{q.arrow(arrows.front()).source, q.arrow(arrows.front()).source, {}};
  for (std::size_t a : arrows) {
    const Arrow& ar = q.arrow(a);
    if (ar.source != p.target)
      throw std::invalid_argument("arrow '" + ar.label + "' does not start where the path ends");
    p.arrows.push_back(a);
    p.target = ar.target;
  }
  return p;
}

Path path_from_labels(const Quiver& q, const std::vector<std::string>& composition_labels) {
  std::vector<std::size_t> arrows;
  for (auto it = composition_labels.rbegin(); it != composition_labels.rend(); ++it)
    arrows.push_back(q.arrow_index(*it));
  return make_path(q, arrows);
}

std::vector<std::string> path_labels(const Quiver& q, const Path& p) {
  std::vector<std::string> out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out.push_back(q.arrow(*it).label);
  return out;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices()[p.source];
  std::string s;
  for (const auto& l : path_labels(q, p)) s += (s.empty() ? "" : "*") + l;
  return s;
}

namespace {

Path concat(const Path& a, const Path& b) {
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

// paths[L] lists every path of length L.
struct PathTable {
  const Quiver* q;
  std::vector<std::vector<Path>> paths;

  explicit PathTable(const Quiver& quiver) : q(&quiver) {
    paths.emplace_back();
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) paths[0].push_back(trivial_path(v));
  }

  void grow_to(std::size_t len) {
    constexpr std::size_t path_limit = 400000;
    while (paths.size() <= len) {
      std::vector<Path> next;
      for (const auto& p : paths.back())
        for (std::size_t a = 0; a < q->arrow_count(); ++a) {
          if (q->arrow(a).source != p.target) continue;
          Path e = p;
          e.arrows.push_back(a);
          e.target = q->arrow(a).target;
          next.push_back(std::move(e));
          if (next.size() > path_limit)
            throw std::runtime_error("build_algebra: too many paths; algebra not detected finite-dimensional");
        }
      paths.push_back(std::move(next));
    }
  }
};

Relation normalize_relation(const Quiver& q, Relation r) {
  if (r.empty()) throw std::invalid_argument("relation has no terms");
  std::map<Path, Rational> merged;
  for (auto& t : r) {
    if (t.coeff == 0) throw std::invalid_argument("relation term with zero coefficient");
    if (t.path.length() < 2)
      throw std::invalid_argument("relation term '" + path_name(q, t.path) + "' has length below 2");
    merged[t.path] += t.coeff;
  }
  Relation out;
  for (auto& [p, c] : merged)
    if (c != 0) out.push_back({c, p});
  if (out.empty()) throw std::invalid_argument("relation terms cancel to zero");
  for (const auto& t : out)
    if (t.path.source != out.front().path.source || t.path.target != out.front().path.target)
      throw std::invalid_argument("relation terms are not parallel paths");
  return out;
}

// Rows u·r·w for all relations r and paths u, w, restricted to terms of
// length <= max_len. Columns index paths of length <= max_len.
std::vector<RatVector> ideal_rows(const std::vector<Relation>& relations, const PathTable& table,
                                  const std::map<Path, std::size_t>& column, std::size_t max_len) {
  std::vector<RatVector> rows;
  for (const auto& r : relations) {
    std::size_t min_len = r.front().path.length();
    for (const auto& t : r) min_len = std::min(min_len, t.path.length());
    if (min_len > max_len) continue;
    const std::size_t s = r.front().path.source, t = r.front().path.target;
    for (std::size_t lu = 0; lu + min_len <= max_len; ++lu)
      for (const auto& u : table.paths[lu]) {
        if (u.target != s) continue;
        for (std::size_t lw = 0; lu + min_len + lw <= max_len; ++lw)
          for (const auto& w : table.paths[lw]) {
            if (w.source != t) continue;
            RatVector row(column.size());
            bool nonzero = false;
            for (const auto& term : r) {
              if (lu + term.path.length() + lw > max_len) continue;
              row[column.at(concat(concat(u, term.path), w))] += term.coeff;
              nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
          }
      }
  }
  return rows;
}

// Columns ordered longest paths first so that pivots land on long paths and
// the surviving basis consists of short ones.
std::map<Path, std::size_t> column_index(const PathTable& table, std::size_t max_len) {
  std::map<Path, std::size_t> column;
  std::size_t next = 0;
  for (std::size_t len = max_len + 1; len-- > 0;)
    for (const auto& p : table.paths[len]) column.emplace(p, next++);
  return column;
}

}  // namespace

RatVector BoundAlgebra::normal_form(const Path& p) const {
  if (p.length() >= vanishing_length_) return RatVector(dim());
  auto it = normal_forms_.find(p);
  if (it == normal_forms_.end()) throw std::invalid_argument("normal_form: not a path of this quiver");
  return it->second;
}

std::vector<std::size_t> BoundAlgebra::basis_from(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].source == v) out.push_back(i);
  return out;
}

const RatVector& BoundAlgebra::extend(std::size_t basis_index, std::size_t arrow) const {
  return extend_.at(basis_index).at(arrow);
}

RatVector BoundAlgebra::compose(const Path& p, std::size_t basis_index) const {
  const Path& b = basis_.at(basis_index);
  if (p.target != b.source) return RatVector(dim());
  return normal_form(concat(p, b));
}

std::size_t BoundAlgebra::basis_index(const Path& p) const {
  auto it = std::find(basis_.begin(), basis_.end(), p);
  if (it == basis_.end()) throw std::invalid_argument("basis_index: path is not a basis element");
  return static_cast<std::size_t>(it - basis_.begin());
}

BoundAlgebra build_algebra(Quiver q, std::vector<Relation> relations, const AlgebraOptions& opts) {
  BoundAlgebra a;
  for (auto& r : relations) a.relations_.push_back(normalize_relation(q, std::move(r)));
  a.quiver_ = std::move(q);
  const Quiver& quiver = a.quiver_;

  PathTable table(quiver);
  std::size_t n = 0;
  for (std::size_t len = 1; len <= opts.length_cap; ++len) {
    table.grow_to(len);
    if (table.paths[len].empty()) {  // acyclic quiver: no paths this long at all
      n = len;
      break;
    }
    if (len < 2 || a.relations_.empty()) continue;
    // J^len lies in the ideal iff every path of length len is in the span
    // of the ideal modulo J^(len+1).
    auto column = column_index(table, len);
    auto rows = ideal_rows(a.relations_, table, column, len);
    const std::size_t base_rank = rank(rows_to_matrix(rows, column.size()));
    for (const auto& p : table.paths[len]) {
      RatVector unit(column.size());
      unit[column.at(p)] = 1;
      rows.push_back(std::move(unit));
    }
    if (rank(rows_to_matrix(rows, column.size())) == base_rank) {
      n = len;
      break;
    }
  }
  if (n == 0)
    throw std::runtime_error("build_algebra: length cap " + std::to_string(opts.length_cap) +
                             " exceeded; algebra not detected finite-dimensional");
  a.vanishing_length_ = n;

  // Quotient of paths of length < n by the ideal truncated there.
  const std::size_t max_len = n - 1;
  auto column = column_index(table, max_len);
  std::vector<Path> by_column(column.size());
  for (const auto& [p, c] : column) by_column[c] = p;
  auto rows = ideal_rows(a.relations_, table, column, max_len);
  RowEchelon e = rref(rows_to_matrix(rows, column.size()));
  const auto free = free_columns(e, column.size());

  // Basis in ascending length, then path order.
  std::vector<std::size_t> free_sorted = free;
  std::sort(free_sorted.begin(), free_sorted.end(), [&](std::size_t x, std::size_t y) {
    const Path &p = by_column[x], &r = by_column[y];
    if (p.length() != r.length()) return p.length() < r.length();
    return p < r;
  });
  std::map<std::size_t, std::size_t> basis_of_column;
  for (std::size_t c : free_sorted) {
    basis_of_column[c] = a.basis_.size();
    a.basis_.push_back(by_column[c]);
  }

  for (std::size_t c : free) {
    RatVector v(a.basis_.size());
    v[basis_of_column[c]] = 1;
    a.normal_forms_[by_column[c]] = std::move(v);
  }
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    RatVector v(a.basis_.size());
    for (std::size_t c : free) {
      const Rational& x = e.reduced(r, c);
      if (x != 0) v[basis_of_column[c]] = -x;
    }
    a.normal_forms_[by_column[e.pivots[r]]] = std::move(v);
  }

  a.extend_.assign(a.basis_.size(), {});
  for (std::size_t b = 0; b < a.basis_.size(); ++b)
    for (std::size_t ar = 0; ar < quiver.arrow_count(); ++ar) {
      if (quiver.arrow(ar).source != a.basis_[b].target) {
        a.extend_[b].emplace_back(a.basis_.size());
        continue;
      }
      Path p = a.basis_[b];
      p.arrows.push_back(ar);
      p.target = quiver.arrow(ar).target;
      a.extend_[b].push_back(a.normal_form(p));
    }
  return a;
}

BoundAlgebra opposite(const BoundAlgebra& a) {
  Quiver rq = a.quiver().reversed();
  std::vector<Relation> rels;
  for (const auto& r : a.relations()) {
    Relation out;
    for (const auto& t : r) {
      Path p{t.path.target, t.path.source, {t.path.arrows.rbegin(), t.path.arrows.rend()}};
      out.push_back({t.coeff, std::move(p)});
    }
    rels.push_back(std::move(out));
  }
  return build_algebra(std::move(rq), std::move(rels));
}

namespace fixtures {

namespace {
Relation monomial(const Quiver& q, const std::vector<std::string>& composition_labels) {
  return {{Rational(1), path_from_labels(q, composition_labels)}};
}
}  // namespace

BoundAlgebra g2_algebra() {
  Quiver q({"1", "2"});
  q.add_arrow("alpha", "2", "1");
  q.add_arrow("beta", "1", "2");
  q.add_arrow("gamma", "1", "2");
  std::vector<Relation> rels{monomial(q, {"beta", "alpha"}), monomial(q, {"gamma", "alpha"}),
                             monomial(q, {"alpha", "beta"}), monomial(q, {"alpha", "gamma"})};
  return build_algebra(std::move(q), std::move(rels));
}

BoundAlgebra local_two_loop_algebra(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw std::invalid_argument("local_two_loop_algebra: exponents must be at least 2");
  Quiver q({"1"});
  q.add_arrow("x1", "1", "1");
  q.add_arrow("x2", "1", "1");
  std::vector<Relation> rels{monomial(q, std::vector<std::string>(m, "x1")),
                             monomial(q, std::vector<std::string>(n, "x2")), monomial(q, {"x1", "x2"})};
  return build_algebra(std::move(q), std::move(rels));
}

BoundAlgebra truncated_polynomial(std::size_t n) {
  if (n < 2) throw std::invalid_argument("truncated_polynomial: exponent must be at least 2");
  Quiver q({"1"});
  q.add_arrow("x", "1", "1");
  std::vector<Relation> rels{monomial(q, std::vector<std::string>(n, "x"))};
  return build_algebra(std::move(q), std::move(rels));
}

BoundAlgebra path_algebra(const Quiver& q) { return build_algebra(q, {}); }

Quiver kronecker_quiver() {
  Quiver q({"1", "2"});
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "1", "2");
  return q;
}

}  // namespace fixtures

}  // namespace fproot
