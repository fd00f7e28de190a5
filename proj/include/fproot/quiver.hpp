#pragma once

// Quivers as combinatorial objects: adjacency matrices, Frobenius–Perron
// dimension, cycle numbers, Dynkin classification, positive roots.

#include "fproot/spectral.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fproot {

struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Finite directed multigraph with labelled arrows. Loops and parallel
/// arrows are allowed; labels are unique.
class Quiver {
public:
  Quiver() = default;
  explicit Quiver(std::vector<std::string> vertices);

  std::size_t add_vertex(std::string id);
  /// Throws std::invalid_argument for a duplicate label or unknown endpoint.
  std::size_t add_arrow(std::string label, const std::string& from, const std::string& to);
  std::size_t add_arrow(std::string label, std::size_t from, std::size_t to);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_arrow(const std::string& label) const;
  std::size_t vertex_index(const std::string& id) const;  // throws if unknown
  std::size_t arrow_index(const std::string& label) const;

  /// Same vertices, every arrow reversed, labels kept.
  Quiver reversed() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Entry (i, j) counts the arrows i -> j.
CountMatrix adjacency(const Quiver& q);

/// Entry (i, j) counts edges between i and j in the underlying undirected
/// graph; a loop contributes 2 on the diagonal.
CountMatrix symmetric_adjacency(const Quiver& q);

SpectralValue quiver_fpdim(const Quiver& q);

/// fpdim of a finite family of quivers: the max over its members.
SpectralValue quiver_family_fpdim(const std::vector<Quiver>& family);

/// Saturating count of indecomposable (first-return) oriented cycles.
enum class CycleCount { zero = 0, one = 1, many = 2 };

struct CycleNumber {
  std::vector<CycleCount> per_vertex;
  CycleCount global = CycleCount::zero;
};

std::string to_string(CycleCount c);

/// Per vertex, the number of closed walks based there that meet the base
/// vertex only at their ends, saturated at "≥2"; the global value is the max.
CycleNumber cycle_number(const Quiver& q);

struct TrichotomyReport {
  SpectralValue fpdim;
  CycleCount theta = CycleCount::zero;
  bool pass = false;
};

/// Checks fpdim = 0 ⇔ Θ = 0, fpdim = 1 ⇔ Θ = 1, fpdim > 1 ⇔ Θ ≥ 2.
TrichotomyReport fpdim_trichotomy_check(const Quiver& q, double tolerance = 1e-9);

enum class DynkinFamily { A, D, E, other };

struct DynkinType {
  DynkinFamily family = DynkinFamily::other;
  bool extended = false;
  int rank = 0;

  bool is_dynkin() const { return family != DynkinFamily::other && !extended; }
  bool is_extended() const { return family != DynkinFamily::other && extended; }
  /// "A4", "~D5", "other".
  std::string name() const;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Pattern-matches the underlying undirected graph against ADE and extended
/// ADE shapes. Throws std::invalid_argument if the graph is disconnected.
DynkinType classify_underlying_graph(const Quiver& q);

/// A quiver whose underlying graph has the given (extended) Dynkin type, with
/// vertices "1".."k" and every edge oriented from the smaller to the larger
/// vertex (the extended Ã_n cycle closes with n+1 -> 1 reversed to 1 -> n+1).
/// Throws std::invalid_argument for impossible ranks.
Quiver dynkin_quiver(const DynkinType& type);

/// All positive roots of the root system of an ADE graph, as dimension
/// vectors indexed like the quiver's vertices, in a deterministic order
/// (by height, then lexicographically). Throws std::invalid_argument for
/// non-Dynkin input.
std::vector<std::vector<long>> positive_roots(const Quiver& q);

/// Graphviz rendering.
std::string to_dot(const Quiver& q, const std::string& name = "Q");

}  // namespace fproot
