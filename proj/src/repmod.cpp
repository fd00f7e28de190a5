#include "fproot/repmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fproot {

namespace {

void require_same_algebra(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra()) throw std::invalid_argument("modules over different algebras");
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

RatVector column(const RatMatrix& m, std::size_t c) {
  RatVector v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

RatMatrix columns_to_matrix(const std::vector<RatVector>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

// Indices j such that the unit vectors e_j complete the column span of `span`
// to a basis of the ambient space.
std::vector<std::size_t> complement_units(const RatMatrix& span, std::size_t ambient) {
  RatMatrix m(ambient, span.cols() + ambient);
  for (std::size_t r = 0; r < ambient; ++r) {
    for (std::size_t c = 0; c < span.cols(); ++c) m(r, c) = span(r, c);
    m(r, span.cols() + r) = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t p : rref(std::move(m)).pivots)
    if (p >= span.cols()) out.push_back(p - span.cols());
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw std::invalid_argument("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dimvec, std::vector<RatMatrix> maps,
                               std::string name, bool check_relations)
    : algebra_(std::move(algebra)), dimvec_(std::move(dimvec)), maps_(std::move(maps)), name_(std::move(name)) {
  if (!algebra_) throw std::invalid_argument("representation without an algebra");
  const Quiver& q = algebra_->quiver();
  if (dimvec_.size() != q.vertex_count()) throw std::invalid_argument("dimension vector has the wrong length");
  if (maps_.size() != q.arrow_count()) throw std::invalid_argument("one matrix per arrow is required");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps_[a].rows() != dimvec_[ar.target] || maps_[a].cols() != dimvec_[ar.source])
      throw std::invalid_argument("matrix for arrow '" + ar.label + "' has shape " + std::to_string(maps_[a].rows()) +
                                  "x" + std::to_string(maps_[a].cols()) + ", expected " +
                                  std::to_string(dimvec_[ar.target]) + "x" + std::to_string(dimvec_[ar.source]));
  }
  if (!check_relations) return;
  for (const auto& r : algebra_->relations()) {
    const Path& p0 = r.front().path;
    RatMatrix sum(dimvec_[p0.target], dimvec_[p0.source]);
    for (const auto& t : r) {
      RatMatrix m = path_action(t.path);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) sum(i, j) += t.coeff * m(i, j);
    }
    if (!sum.is_zero()) throw std::invalid_argument("representation violates a relation at " + path_name(q, p0));
  }
}

std::size_t Representation::total_dim() const { return std::accumulate(dimvec_.begin(), dimvec_.end(), std::size_t{0}); }

RatMatrix Representation::path_action(const Path& p) const {
  RatMatrix m = RatMatrix::identity(dimvec_.at(p.source));
  for (std::size_t a : p.arrows) m = maps_.at(a) * m;
  return m;
}

Representation simple(const AlgebraPtr& a, std::size_t v) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> d(q.vertex_count(), 0);
  d.at(v) = 1;
  std::vector<RatMatrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(d[ar.target], d[ar.source]);
  return Representation(a, d, std::move(maps), "S" + q.vertices()[v], false);
}

std::vector<Representation> simples(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v) out.push_back(simple(a, v));
  return out;
}

std::vector<std::vector<std::size_t>> projective_coordinates(const BoundAlgebra& a, std::size_t v) {
  std::vector<std::vector<std::size_t>> coords(a.quiver().vertex_count());
  for (std::size_t b : a.basis_from(v)) coords[a.basis()[b].target].push_back(b);
  return coords;
}

Representation projective(const AlgebraPtr& a, std::size_t v) {
  const Quiver& q = a->quiver();
  if (v >= q.vertex_count()) throw std::invalid_argument("projective: unknown vertex");
  auto coords = projective_coordinates(*a, v);
  std::vector<std::size_t> d;
  for (const auto& c : coords) d.push_back(c.size());
  std::vector<RatMatrix> maps;
  for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    RatMatrix m(d[arrow.target], d[arrow.source]);
    for (std::size_t j = 0; j < coords[arrow.source].size(); ++j) {
      const RatVector& img = a->extend(coords[arrow.source][j], ar);
      for (std::size_t i = 0; i < coords[arrow.target].size(); ++i) m(i, j) = img[coords[arrow.target][i]];
    }
    maps.push_back(std::move(m));
  }
  return Representation(a, d, std::move(maps), "P" + q.vertices()[v], false);
}

Representation direct_sum(const std::vector<Representation>& ms) {
  if (ms.empty()) throw std::invalid_argument("direct_sum: empty list");
  const AlgebraPtr& a = ms.front().algebra();
  for (const auto& m : ms) require_same_algebra(ms.front(), m);
  const Quiver& q = a->quiver();
  std::vector<std::size_t> d(q.vertex_count(), 0);
  for (const auto& m : ms)
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += m.dim(v);
  std::vector<RatMatrix> maps;
  for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
    std::vector<RatMatrix> blocks;
    for (const auto& m : ms) blocks.push_back(m.map(ar));
    maps.push_back(block_diagonal(blocks));
  }
  std::string name;
  for (const auto& m : ms) name += (name.empty() ? "" : "+") + m.name();
  return Representation(a, d, std::move(maps), name, false);
}

namespace {

// Intertwiner equations f_t M_a - N_a f_s = 0; unknowns are the entries of
// f_v (dim N_v x dim M_v), row-major, vertex after vertex.
RatMatrix hom_system(const Representation& m, const Representation& n, std::vector<std::size_t>& offset) {
  const Quiver& q = m.algebra()->quiver();
  offset.assign(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  std::size_t eqs = 0;
  for (const auto& ar : q.arrows()) eqs += n.dim(ar.target) * m.dim(ar.source);
  RatMatrix sys(eqs, offset.back());
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const std::size_t s = ar.source, t = ar.target;
    const RatMatrix& ma = m.map(a);
    const RatMatrix& na = n.map(a);
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j, ++row) {
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (ma(k, j) != 0) sys(row, offset[t] + i * m.dim(t) + k) += ma(k, j);
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (na(i, k) != 0) sys(row, offset[s] + k * m.dim(s) + j) -= na(i, k);
      }
  }
  return sys;
}

}  // namespace

HomSpace hom(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  std::vector<std::size_t> offset;
  RatMatrix sys = hom_system(m, n, offset);
  std::vector<RatVector> kernel;
  if (sys.rows() == 0) {
    for (std::size_t i = 0; i < offset.back(); ++i) kernel.push_back(unit_vector(offset.back(), i));
  } else {
    kernel = nullspace_basis(sys);
  }
  HomSpace h;
  const std::size_t verts = m.dimvec().size();
  for (const auto& k : kernel) {
    std::vector<RatMatrix> f;
    for (std::size_t v = 0; v < verts; ++v) {
      RatMatrix fv(n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t j = 0; j < m.dim(v); ++j) fv(i, j) = k[offset[v] + i * m.dim(v) + j];
      f.push_back(std::move(fv));
    }
    h.basis.push_back(std::move(f));
  }
  return h;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  std::vector<std::size_t> offset;
  RatMatrix sys = hom_system(m, n, offset);
  return offset.back() - (sys.rows() == 0 ? 0 : rank(sys));
}

bool is_brick(const Representation& m) {
  if (m.is_zero()) throw std::invalid_argument("is_brick: zero module");
  return hom_dim(m, m) == 1;
}

bool isomorphic(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.dimvec() != n.dimvec()) return false;
  HomSpace h = hom(m, n);
  if (h.dim() == 0) return m.is_zero();
  auto invertible = [&](const std::vector<RatMatrix>& f) {
    for (std::size_t v = 0; v < f.size(); ++v)
      if (rank(f[v]) != m.dim(v)) return false;
    return true;
  };
  std::vector<std::vector<RatMatrix>> trials = h.basis;
  for (int shift = 1; shift <= 3 && h.dim() > 1; ++shift) {
    std::vector<RatMatrix> f = h.basis[0];
    for (std::size_t k = 1; k < h.dim(); ++k)
      for (std::size_t v = 0; v < f.size(); ++v) {
        RatMatrix scaled = h.basis[k][v];
        const Rational c = Rational(static_cast<long>((k * (k + shift)) % 7 + 1));
        for (std::size_t i = 0; i < scaled.rows(); ++i)
          for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= c;
        f[v] = f[v] + scaled;
      }
    trials.push_back(std::move(f));
  }
  return std::any_of(trials.begin(), trials.end(), invertible);
}

Representation quotient_by_generated(const Representation& m,
                                     const std::vector<std::pair<std::size_t, RatVector>>& generators) {
  const AlgebraPtr& a = m.algebra();
  const Quiver& q = a->quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::vector<RatVector>> span(nv);
  std::vector<std::pair<std::size_t, RatVector>> queue = generators;
  while (!queue.empty()) {
    auto [v, x] = std::move(queue.back());
    queue.pop_back();
    auto trial = span[v];
    trial.push_back(x);
    if (rank(rows_to_matrix(trial, m.dim(v))) == span[v].size()) continue;
    span[v].push_back(x);
    for (std::size_t ar = 0; ar < q.arrow_count(); ++ar)
      if (q.arrow(ar).source == v) queue.emplace_back(q.arrow(ar).target, m.map(ar) * x);
  }

  std::vector<std::vector<std::size_t>> complement(nv);
  std::vector<RatMatrix> projection(nv);  // rows: coordinates in M_v / U_v
  std::vector<std::size_t> d(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    RatMatrix u = columns_to_matrix(span[v], m.dim(v));
    complement[v] = complement_units(u, m.dim(v));
    d[v] = complement[v].size();
    std::vector<RatVector> cols = span[v];
    for (std::size_t j : complement[v]) cols.push_back(unit_vector(m.dim(v), j));
    RatMatrix inv = inverse(columns_to_matrix(cols, m.dim(v)));
    RatMatrix proj(d[v], m.dim(v));
    for (std::size_t i = 0; i < d[v]; ++i)
      for (std::size_t j = 0; j < m.dim(v); ++j) proj(i, j) = inv(span[v].size() + i, j);
    projection[v] = std::move(proj);
  }
  std::vector<RatMatrix> maps;
  for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    RatMatrix lift(m.dim(arrow.source), d[arrow.source]);
    for (std::size_t k = 0; k < d[arrow.source]; ++k) lift(complement[arrow.source][k], k) = 1;
    maps.push_back(projection[arrow.target] * (m.map(ar) * lift));
  }
  return Representation(a, d, std::move(maps), m.name() + "/gen", false);
}

Resolution minimal_resolution(const Representation& m, std::size_t depth) {
  const AlgebraPtr& a = m.algebra();
  const BoundAlgebra& alg = *a;
  const Quiver& q = alg.quiver();
  const std::size_t nv = q.vertex_count();

  Resolution res;
  res.module = m;
  Representation current = m;
  std::vector<RatMatrix> embedding;  // current_v -> previous projective at v

  for (std::size_t step = 0; step <= depth; ++step) {
    if (current.is_zero()) {
      res.finite = true;
      break;
    }
    ResolutionStep st;
    st.multiplicity.assign(nv, 0);
    std::vector<std::size_t> gen_index;  // generator -> coordinate in current at its vertex
    for (std::size_t v = 0; v < nv; ++v) {
      if (current.dim(v) == 0) continue;
      std::vector<RatVector> rad;
      for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
        if (q.arrow(ar).target != v) continue;
        const RatMatrix& mm = current.map(ar);
        for (std::size_t c = 0; c < mm.cols(); ++c) rad.push_back(column(mm, c));
      }
      for (std::size_t j : complement_units(columns_to_matrix(rad, current.dim(v)), current.dim(v))) {
        st.generators.push_back(v);
        gen_index.push_back(j);
        st.multiplicity[v] += 1;
      }
    }
    if (step > 0) {
      for (std::size_t g = 0; g < st.generators.size(); ++g)
        st.images.push_back(column(embedding[st.generators[g]], gen_index[g]));
    }

    // Projective cover: coordinates (generator, basis path) at each vertex.
    st.coordinates.assign(nv, {});
    for (std::size_t g = 0; g < st.generators.size(); ++g)
      for (std::size_t b : alg.basis_from(st.generators[g])) st.coordinates[alg.basis()[b].target].emplace_back(g, b);

    const bool last = step == depth;
    res.steps.push_back(st);
    if (last) break;

    std::vector<RatMatrix> path_maps(alg.dim());
    std::vector<bool> have(alg.dim(), false);
    auto action = [&](std::size_t b) -> const RatMatrix& {
      if (!have[b]) {
        path_maps[b] = current.path_action(alg.basis()[b]);
        have[b] = true;
      }
      return path_maps[b];
    };

    // Kernel of the cover, vertex by vertex.
    std::vector<RatMatrix> next_embedding(nv);
    std::vector<std::vector<std::size_t>> free(nv);
    std::vector<std::size_t> kdim(nv);
    for (std::size_t w = 0; w < nv; ++w) {
      const auto& coords = st.coordinates[w];
      RatMatrix pi(current.dim(w), coords.size());
      for (std::size_t c = 0; c < coords.size(); ++c) {
        const auto [g, b] = coords[c];
        const RatMatrix& act = action(b);
        for (std::size_t r = 0; r < current.dim(w); ++r) pi(r, c) = act(r, gen_index[g]);
      }
      std::vector<RatVector> ker;
      if (pi.rows() == 0) {
        for (std::size_t c = 0; c < coords.size(); ++c) ker.push_back(unit_vector(coords.size(), c));
        for (std::size_t c = 0; c < coords.size(); ++c) free[w].push_back(c);
      } else if (!coords.empty()) {
        ker = nullspace_basis(pi);
        free[w] = free_columns(rref(pi), coords.size());
      }
      kdim[w] = ker.size();
      next_embedding[w] = columns_to_matrix(ker, coords.size());
    }

    // Arrow maps of the syzygy: push kernel vectors through the projective
    // and read coordinates off at the free columns.
    std::vector<RatMatrix> kmaps;
    for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
      const Arrow& arrow = q.arrow(ar);
      const auto& src = st.coordinates[arrow.source];
      const auto& dst = st.coordinates[arrow.target];
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> dst_pos;
      for (std::size_t i = 0; i < dst.size(); ++i) dst_pos[dst[i]] = i;
      RatMatrix pa(dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        const auto [g, b] = src[c];
        const RatVector& img = alg.extend(b, ar);
        for (std::size_t b2 = 0; b2 < img.size(); ++b2)
          if (img[b2] != 0) pa(dst_pos.at({g, b2}), c) = img[b2];
      }
      RatMatrix km(kdim[arrow.target], kdim[arrow.source]);
      RatMatrix pushed = pa * next_embedding[arrow.source];
      for (std::size_t i = 0; i < kdim[arrow.target]; ++i)
        for (std::size_t j = 0; j < kdim[arrow.source]; ++j) km(i, j) = pushed(free[arrow.target][i], j);
      kmaps.push_back(std::move(km));
    }
    current = Representation(a, kdim, std::move(kmaps), {}, false);
    embedding = std::move(next_embedding);
  }
  if (!res.finite && current.is_zero()) res.finite = true;
  return res;
}

bool is_minimal(const Resolution& r) {
  const BoundAlgebra& alg = *r.module.algebra();
  for (std::size_t i = 1; i < r.steps.size(); ++i) {
    const auto& prev = r.steps[i - 1];
    const auto& st = r.steps[i];
    for (std::size_t g = 0; g < st.generators.size(); ++g) {
      const auto& coords = prev.coordinates[st.generators[g]];
      for (std::size_t c = 0; c < coords.size(); ++c)
        if (alg.basis()[coords[c].second].length() == 0 && st.images[g][c] != 0) return false;
    }
  }
  return true;
}

namespace {

std::size_t hom_from_projective_dim(const ResolutionStep& st, const Representation& n) {
  std::size_t d = 0;
  for (std::size_t v : st.generators) d += n.dim(v);
  return d;
}

// Matrix of Hom(P_{i-1}, N) -> Hom(P_i, N), φ ↦ φ ∘ d_i, using
// Hom(P_v, N) ≅ N_v.
RatMatrix dual_differential(const Resolution& res, std::size_t i, const Representation& n) {
  const BoundAlgebra& alg = *res.module.algebra();
  const auto& prev = res.steps[i - 1];
  const auto& st = res.steps[i];
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (std::size_t v : st.generators) row_off.push_back(row_off.back() + n.dim(v));
  for (std::size_t v : prev.generators) col_off.push_back(col_off.back() + n.dim(v));
  RatMatrix d(row_off.back(), col_off.back());
  std::map<std::size_t, RatMatrix> action;
  for (std::size_t g = 0; g < st.generators.size(); ++g) {
    const auto& coords = prev.coordinates[st.generators[g]];
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const Rational& coef = st.images[g][c];
      if (coef == 0) continue;
      const auto [h, b] = coords[c];
      auto it = action.find(b);
      if (it == action.end()) it = action.emplace(b, n.path_action(alg.basis()[b])).first;
      const RatMatrix& nb = it->second;
      for (std::size_t r = 0; r < nb.rows(); ++r)
        for (std::size_t k = 0; k < nb.cols(); ++k)
          if (nb(r, k) != 0) d(row_off[g] + r, col_off[h] + k) += coef * nb(r, k);
    }
  }
  return d;
}

std::size_t rank_or_zero(const RatMatrix& m) { return m.empty() ? 0 : rank(m); }

}  // namespace

std::size_t ext_from_resolution(const Resolution& res, std::size_t i, const Representation& n) {
  require_same_algebra(res.module, n);
  if (i >= res.steps.size()) {
    if (res.finite) return 0;
    throw std::invalid_argument("resolution too short for the requested Ext degree");
  }
  const bool have_next = i + 1 < res.steps.size();
  if (!have_next && !res.finite) throw std::invalid_argument("resolution too short for the requested Ext degree");
  const std::size_t hom_i = hom_from_projective_dim(res.steps[i], n);
  const std::size_t rank_next = have_next ? rank_or_zero(dual_differential(res, i + 1, n)) : 0;
  const std::size_t rank_here = i > 0 ? rank_or_zero(dual_differential(res, i, n)) : 0;
  return hom_i - rank_next - rank_here;
}

std::size_t ext(std::size_t i, const Representation& m, const Representation& n) {
  return ext_from_resolution(minimal_resolution(m, i + 1), i, n);
}

long euler_form(const Quiver& q, const std::vector<std::size_t>& d, const std::vector<std::size_t>& e) {
  long s = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) s += static_cast<long>(d[v] * e[v]);
  for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.source] * e[a.target]);
  return s;
}

std::size_t euler_ext1(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.algebra()->has_relations()) throw std::invalid_argument("euler_ext1: algebra has relations");
  const long v = static_cast<long>(hom_dim(m, n)) - euler_form(m.algebra()->quiver(), m.dimvec(), n.dimvec());
  if (v < 0) throw std::logic_error("euler_ext1: negative value");
  return static_cast<std::size_t>(v);
}

Representation random_representation(const AlgebraPtr& a, const std::vector<std::size_t>& dimvec,
                                     std::mt19937_64& rng, const std::vector<bool>& active) {
  const Quiver& q = a->quiver();
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<RatMatrix> maps;
  for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
    RatMatrix m(dimvec.at(q.arrow(ar).target), dimvec.at(q.arrow(ar).source));
    if (active.empty() || active[ar])
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    maps.push_back(std::move(m));
  }
  return Representation(a, dimvec, std::move(maps), {}, false);
}

namespace {

std::string dimvec_name(const std::vector<std::size_t>& d) {
  std::string s = "M(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace

std::vector<Representation> dynkin_indecomposables(const AlgebraPtr& a, std::uint64_t seed) {
  if (a->has_relations()) throw std::invalid_argument("dynkin_indecomposables: algebra has relations");
  const Quiver& q = a->quiver();
  if (!classify_underlying_graph(q).is_dynkin())
    throw std::invalid_argument("dynkin_indecomposables: underlying graph is not of Dynkin type");
  std::mt19937_64 rng(seed);
  std::vector<Representation> out;
  constexpr int max_tries = 200;
  for (const auto& root : positive_roots(q)) {
    std::vector<std::size_t> d(root.begin(), root.end());
    if (euler_form(q, d, d) != 1) throw std::logic_error("positive root with Tits form != 1");
    bool found = false;
    for (int t = 0; t < max_tries && !found; ++t) {
      Representation m = random_representation(a, d, rng);
      if (is_brick(m)) {
        m.set_name(dimvec_name(d));
        out.push_back(std::move(m));
        found = true;
      }
    }
    if (!found) throw std::runtime_error("dynkin_indecomposables: search budget exhausted at " + dimvec_name(d));
  }
  return out;
}

namespace fixtures {

namespace {

Representation g2_module(const AlgebraPtr& g2, std::size_t d1, std::size_t d2, RatMatrix beta, RatMatrix gamma,
                         std::string name) {
  const Quiver& q = g2->quiver();
  std::vector<RatMatrix> maps(3);
  maps[q.arrow_index("alpha")] = RatMatrix(d1, d2);
  maps[q.arrow_index("beta")] = std::move(beta);
  maps[q.arrow_index("gamma")] = std::move(gamma);
  return Representation(g2, {d1, d2}, std::move(maps), std::move(name));
}

}  // namespace

Representation g2_x1(const AlgebraPtr& g2, const Rational& lambda) {
  return g2_module(g2, 1, 1, RatMatrix{{1}}, RatMatrix{{lambda}}, "X1(" + to_string(lambda) + ")");
}

Representation g2_y1(const AlgebraPtr& g2) { return g2_module(g2, 1, 1, RatMatrix{{0}}, RatMatrix{{1}}, "Y1"); }

Representation g2_s2n(const AlgebraPtr& g2, std::size_t n) {
  RatMatrix beta(n + 1, n), gamma(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    beta(i, i) = 1;
    gamma(i + 1, i) = 1;
  }
  return g2_module(g2, n, n + 1, std::move(beta), std::move(gamma), "S2_" + std::to_string(n));
}

Representation g2_s1n(const AlgebraPtr& g2, std::size_t n) {
  RatMatrix beta(n, n + 1), gamma(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    beta(i, i) = 1;
    gamma(i, i + 1) = 1;
  }
  return g2_module(g2, n + 1, n, std::move(beta), std::move(gamma), "S1_" + std::to_string(n));
}

std::vector<Representation> g2_brick_universe(const AlgebraPtr& g2, std::size_t lambda_count, std::size_t max_n) {
  std::vector<Representation> out{projective(g2, g2->quiver().vertex_index("2"))};
  for (std::size_t l = 0; l < lambda_count; ++l) out.push_back(g2_x1(g2, Rational(static_cast<long>(l))));
  out.push_back(g2_y1(g2));
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(g2_s1n(g2, n));
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(g2_s2n(g2, n));
  return out;
}

std::vector<Representation> kronecker_brick_universe(const AlgebraPtr& k2, std::size_t max_dim,
                                                     std::size_t lambda_count, std::uint64_t seed) {
  const Quiver& q = k2->quiver();
  if (q.vertex_count() != 2 || q.arrow_count() != 2 || k2->has_relations())
    throw std::invalid_argument("kronecker_brick_universe: not the Kronecker path algebra");
  std::vector<Representation> out;
  auto regular = [&](Rational x, Rational y, std::string name) {
    out.emplace_back(k2, std::vector<std::size_t>{1, 1}, std::vector<RatMatrix>{RatMatrix{{x}}, RatMatrix{{y}}},
                     std::move(name));
  };
  if (max_dim >= 2) {
    for (std::size_t l = 0; l < lambda_count; ++l)
      regular(1, Rational(static_cast<long>(l)), "R(" + std::to_string(l) + ")");
    regular(0, 1, "R(inf)");
  }
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; 2 * n + 1 <= max_dim; ++n) {
    for (auto d : {std::vector<std::size_t>{n, n + 1}, std::vector<std::size_t>{n + 1, n}}) {
      bool found = false;
      for (int t = 0; t < 200 && !found; ++t) {
        Representation m = random_representation(k2, d, rng);
        if (is_brick(m)) {
          m.set_name(dimvec_name(d));
          out.push_back(std::move(m));
          found = true;
        }
      }
      if (!found) throw std::runtime_error("kronecker_brick_universe: no brick found at " + dimvec_name(d));
    }
  }
  return out;
}

}  // namespace fixtures

namespace {

void enumerate_dimvecs(std::size_t nv, std::size_t budget, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == nv) {
    if (std::accumulate(cur.begin(), cur.end(), std::size_t{0}) > 0) out.push_back(cur);
    return;
  }
  for (std::size_t d = 0; d <= budget; ++d) {
    cur.push_back(d);
    enumerate_dimvecs(nv, budget - d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Representation> brick_candidates(const AlgebraPtr& a, const CandidateOptions& opts) {
  const Quiver& q = a->quiver();
  if (!a->has_relations() && q.vertex_count() > 0 && classify_underlying_graph(q).is_dynkin())
    return dynkin_indecomposables(a, opts.seed);

  std::vector<Representation> out;
  auto consider = [&](Representation m) {
    if (m.is_zero() || m.total_dim() > opts.max_dim || !is_brick(m)) return;
    for (const auto& x : out)
      if (isomorphic(x, m)) return;
    out.push_back(std::move(m));
  };

  for (auto& s : simples(a)) consider(std::move(s));
  for (std::size_t v = 0; v < q.vertex_count(); ++v) consider(projective(a, v));

  // One-parameter quotients P_v / (a1 - lambda a2) for parallel arrows.
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Representation p = projective(a, v);
    auto coords = projective_coordinates(*a, v);
    for (std::size_t a1 = 0; a1 < q.arrow_count(); ++a1)
      for (std::size_t a2 = a1 + 1; a2 < q.arrow_count(); ++a2) {
        if (q.arrow(a1).source != v || q.arrow(a2).source != v || q.arrow(a1).target != q.arrow(a2).target) continue;
        const std::size_t w = q.arrow(a1).target;
        auto pos = [&](std::size_t arrow) {
          Path path = make_path(q, {arrow});
          const std::size_t b = a->basis_index(path);
          return static_cast<std::size_t>(std::find(coords[w].begin(), coords[w].end(), b) - coords[w].begin());
        };
        const std::size_t i1 = pos(a1), i2 = pos(a2);
        for (std::size_t l = 0; l <= opts.lambda_count; ++l) {
          RatVector x(p.dim(w));
          if (l == opts.lambda_count) {
            x[i2] = 1;  // lambda = infinity
          } else {
            x[i1] = 1;
            x[i2] = -Rational(static_cast<long>(l));
          }
          Representation quot = quotient_by_generated(p, {{w, x}});
          quot.set_name("P" + q.vertices()[v] + "/(" + q.arrow(a1).label + "-" +
                        (l == opts.lambda_count ? std::string("inf") : std::to_string(l)) + q.arrow(a2).label + ")");
          consider(std::move(quot));
        }
      }
  }

  std::mt19937_64 rng(opts.seed);
  std::vector<std::vector<std::size_t>> dimvecs;
  std::vector<std::size_t> cur;
  enumerate_dimvecs(q.vertex_count(), opts.max_dim, cur, dimvecs);
  std::bernoulli_distribution coin(0.5);
  for (const auto& d : dimvecs)
    for (std::size_t t = 0; t < opts.random_tries; ++t) {
      std::vector<bool> active(q.arrow_count(), true);
      if (t % 2 == 1)
        for (std::size_t ar = 0; ar < active.size(); ++ar) active[ar] = coin(rng);
      Representation m = random_representation(a, d, rng, active);
      try {
        Representation checked(a, m.dimvec(), m.maps(), dimvec_name(d));
        consider(std::move(checked));
      } catch (const std::invalid_argument&) {
        // relations violated
      }
    }
  return out;
}

}  // namespace fproot
