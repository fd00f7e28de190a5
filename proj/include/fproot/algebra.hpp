#pragma once

// Finite-dimensional bound quiver algebras kQ/I over the rationals.
//
// Paths are stored as arrow indices in traversal order: {a, b} means "a,
// then b". In composition notation that path is written b·a. Trivial paths
// are stored with an empty arrow list and a vertex.

#include "fproot/exactlin.hpp"
#include "fproot/quiver.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fproot {

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

Path trivial_path(std::size_t vertex);

/// Traversal-order path through the given arrows. Throws
/// std::invalid_argument when consecutive arrows do not compose.
Path make_path(const Quiver& q, const std::vector<std::size_t>& arrows);

/// Composition-order labels, e.g. {"beta", "alpha"} for "alpha then beta".
Path path_from_labels(const Quiver& q, const std::vector<std::string>& composition_labels);
std::vector<std::string> path_labels(const Quiver& q, const Path& p);

/// Human-readable name: "e_1" or "beta*alpha".
std::string path_name(const Quiver& q, const Path& p);

struct RelationTerm {
  Rational coeff;
  Path path;
};
using Relation = std::vector<RelationTerm>;

struct AlgebraOptions {
  std::size_t length_cap = 32;
};

class BoundAlgebra {
public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Standard monomials: paths not reducible modulo the ideal. Includes all
  /// trivial paths and all arrows.
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Every path of this length or longer is zero in the algebra.
  std::size_t vanishing_length() const { return vanishing_length_; }

  bool has_relations() const { return !relations_.empty(); }

  /// Coordinates of the residue of p in the basis.
  RatVector normal_form(const Path& p) const;

  /// Basis indices of the paths starting (resp. ending) at v.
  std::vector<std::size_t> basis_from(std::size_t v) const;

  /// Coordinates of (basis element b, then arrow a) in the basis.
  const RatVector& extend(std::size_t basis_index, std::size_t arrow) const;

  /// Coordinates of (path p, then basis element b). Requires p.target ==
  /// source of b; returns zero otherwise.
  RatVector compose(const Path& p, std::size_t basis_index) const;

  std::size_t basis_index(const Path& p) const;  // throws if not a basis path

private:
  friend BoundAlgebra build_algebra(Quiver q, std::vector<Relation> relations, const AlgebraOptions& opts);

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Path> basis_;
  std::size_t vanishing_length_ = 1;
  std::map<Path, RatVector> normal_forms_;      // every path shorter than vanishing_length_
  std::vector<std::vector<RatVector>> extend_;  // [basis][arrow]
};

/// Builds kQ/(relations). Throws std::invalid_argument for a non-admissible
/// relation (non-parallel terms, a term of length < 2, an empty relation)
/// and std::runtime_error when J^N is not contained in the ideal for any
/// N up to the length cap.
BoundAlgebra build_algebra(Quiver q, std::vector<Relation> relations = {}, const AlgebraOptions& opts = {});

/// Reversed quiver, every relation path reversed.
BoundAlgebra opposite(const BoundAlgebra& a);

namespace fixtures {

/// alpha: 2 -> 1, beta, gamma: 1 -> 2, all paths of length 2 zero.
BoundAlgebra g2_algebra();

/// One vertex, loops x1, x2; relations x1^m, x2^n, x1·x2.
BoundAlgebra local_two_loop_algebra(std::size_t m, std::size_t n);

/// One vertex, one loop x, relation x^n.
BoundAlgebra truncated_polynomial(std::size_t n);

/// Path algebra without relations.
BoundAlgebra path_algebra(const Quiver& q);

/// Two vertices, two arrows 1 -> 2.
Quiver kronecker_quiver();

}  // namespace fixtures

}  // namespace fproot
