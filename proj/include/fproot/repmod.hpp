#pragma once

// Representations of bound quiver algebras, Hom spaces, minimal projective
// resolutions and Ext.
//
// Convention: an arrow a: s -> t acts by a dim_t x dim_s matrix, and a
// morphism f: M -> N satisfies f_t * M_a = N_a * f_s for every arrow.

#include "fproot/algebra.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace fproot {

using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

inline AlgebraPtr share(BoundAlgebra a) { return std::make_shared<const BoundAlgebra>(std::move(a)); }

class Representation {
public:
  Representation() = default;
  /// Throws std::invalid_argument when a matrix has the wrong shape or a
  /// relation does not evaluate to zero. Internal callers that build modules
  /// known to satisfy the relations may skip the relation check.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dimvec, std::vector<RatMatrix> maps,
                 std::string name = {}, bool check_relations = true);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<std::size_t>& dimvec() const { return dimvec_; }
  std::size_t dim(std::size_t v) const { return dimvec_.at(v); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const std::vector<RatMatrix>& maps() const { return maps_; }
  const RatMatrix& map(std::size_t arrow) const { return maps_.at(arrow); }

  /// Action of a path: the product of its arrow maps, first arrow rightmost.
  RatMatrix path_action(const Path& p) const;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dimvec_;
  std::vector<RatMatrix> maps_;
  std::string name_;
};

std::vector<Representation> simples(const AlgebraPtr& a);
Representation simple(const AlgebraPtr& a, std::size_t v);

/// A e_v: spanned at w by the basis paths v -> w; arrows extend paths.
Representation projective(const AlgebraPtr& a, std::size_t v);

/// The basis paths of projective(a, v), per vertex, in the order used for
/// its coordinates.
std::vector<std::vector<std::size_t>> projective_coordinates(const BoundAlgebra& a, std::size_t v);

Representation direct_sum(const std::vector<Representation>& ms);

struct HomSpace {
  /// Each basis morphism is one matrix per vertex (dim N_v x dim M_v).
  std::vector<std::vector<RatMatrix>> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Throws std::invalid_argument when m and n live over different algebras.
HomSpace hom(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// Throws std::invalid_argument for the zero module.
bool is_brick(const Representation& m);

/// Decides m ≅ n for modules whose Hom space is small by testing the Hom
/// basis elements and a few fixed combinations for invertibility. Exact for
/// bricks and whenever Hom(m, n) has dimension at most 1.
bool isomorphic(const Representation& m, const Representation& n);

/// Submodule generated by the given elements (vertex, vector) and the
/// corresponding quotient module.
Representation quotient_by_generated(const Representation& m,
                                     const std::vector<std::pair<std::size_t, RatVector>>& generators);

struct ResolutionStep {
  /// Vertex of each generator (indecomposable projective summand).
  std::vector<std::size_t> generators;
  /// Multiplicity of each P_v.
  std::vector<std::size_t> multiplicity;
  /// Coordinates of this projective at each vertex: (generator, basis path).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> coordinates;
  /// For step i >= 1: image of generator g in the previous projective, in
  /// that projective's coordinates at vertex generators[g].
  std::vector<RatVector> images;
};

struct Resolution {
  Representation module;
  std::vector<ResolutionStep> steps;
  /// True when a zero syzygy was reached; then steps.size() - 1 is the
  /// projective dimension.
  bool finite = false;
  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
};

/// Minimal projective resolution P_depth -> ... -> P_0 -> m, stopping early
/// at a zero syzygy.
Resolution minimal_resolution(const Representation& m, std::size_t depth);

/// Every differential image lies in the radical of the previous projective.
bool is_minimal(const Resolution& r);

/// dim Ext^i(res.module, n); needs res computed to depth at least i + 1
/// (or finite). Throws std::invalid_argument otherwise.
std::size_t ext_from_resolution(const Resolution& res, std::size_t i, const Representation& n);

std::size_t ext(std::size_t i, const Representation& m, const Representation& n);

/// ⟨d, e⟩ = Σ_v d_v e_v − Σ_{a: s→t} d_s e_t.
long euler_form(const Quiver& q, const std::vector<std::size_t>& d, const std::vector<std::size_t>& e);

/// dim Hom(m, n) − ⟨dim m, dim n⟩ on a path algebra. Throws
/// std::invalid_argument when the algebra has relations.
std::size_t euler_ext1(const Representation& m, const Representation& n);

/// Random representation at the given dimension vector; entries drawn from
/// {-2, ..., 2}. Arrows outside `active` (when nonempty) get zero maps.
/// Does not check relations.
Representation random_representation(const AlgebraPtr& a, const std::vector<std::size_t>& dimvec,
                                     std::mt19937_64& rng, const std::vector<bool>& active = {});

/// One brick per positive root of a Dynkin path algebra, ordered like
/// positive_roots. Throws std::invalid_argument for other algebras and
/// std::runtime_error when the retry budget is exhausted.
std::vector<Representation> dynkin_indecomposables(const AlgebraPtr& a, std::uint64_t seed = 1);

namespace fixtures {

/// One-dimensional at both vertices, alpha = 0, beta = 1, gamma = lambda.
Representation g2_x1(const AlgebraPtr& g2, const Rational& lambda);
/// The lambda = infinity member: beta = 0, gamma = 1.
Representation g2_y1(const AlgebraPtr& g2);
/// dims (n, n+1); beta = [I; 0], gamma = [0; I].
Representation g2_s2n(const AlgebraPtr& g2, std::size_t n);
/// dims (n+1, n); beta = [I 0], gamma = [0 I].
Representation g2_s1n(const AlgebraPtr& g2, std::size_t n);

/// P2, X1(lambda) for lambda = 0..lambda_count-1, Y1, S_{1,n} and S_{2,n}
/// for n = 0..max_n.
std::vector<Representation> g2_brick_universe(const AlgebraPtr& g2, std::size_t lambda_count = 8,
                                              std::size_t max_n = 3);

/// Kronecker bricks of total dimension <= max_dim: the regular family at
/// dimension (1,1) sampled at lambda = 0..lambda_count-1 and infinity, and
/// the preprojective and preinjective bricks.
std::vector<Representation> kronecker_brick_universe(const AlgebraPtr& k2, std::size_t max_dim,
                                                     std::size_t lambda_count = 8, std::uint64_t seed = 1);

}  // namespace fixtures

struct CandidateOptions {
  std::size_t max_dim = 4;
  std::size_t lambda_count = 8;
  std::size_t random_tries = 24;
  std::uint64_t seed = 1;
};

/// Brick candidates for an arbitrary bound algebra: simples, projective
/// bricks, one-parameter cyclic quotients of projectives, and random bricks
/// up to the dimension budget, deduplicated up to isomorphism. For Dynkin
/// path algebras the complete list of indecomposables is returned instead.
std::vector<Representation> brick_candidates(const AlgebraPtr& a, const CandidateOptions& opts);

}  // namespace fproot
