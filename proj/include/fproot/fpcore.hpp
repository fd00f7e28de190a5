#pragma once

// Frobenius–Perron invariants of finite brick universes: brick sets,
// adjacency matrices A(φ, σ), fpdimⁿ grids, growth estimates, E¹-quivers,
// hom-table categories and complexity estimates.
//
// A universe is a finite list of objects together with its Hom-dimension
// table. An assignment σ is a table over the same index set; the adjacency
// matrix of a brick set is the principal submatrix at its members.

#include "fproot/quiver.hpp"
#include "fproot/repmod.hpp"
#include "fproot/spectral.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fproot {

struct Assignment {
  std::string name;
  CountMatrix values;  // values(i, j) = dim(X_i, σ(X_j))
};

struct BrickSet {
  std::vector<std::size_t> members;
  CountMatrix certificate;  // pairwise Hom dimensions
};

struct BrickSetViolation {
  std::size_t i = 0, j = 0;  // first offending (member position) pair
  std::int64_t dim = 0;
};

/// Checks dim(X_i, X_j) = δ_ij.
std::variant<BrickSet, BrickSetViolation> verify_brick_set(const std::vector<std::size_t>& members,
                                                           const CountMatrix& hom);

/// A(φ, σ): rows are sources X_i, columns targets σ(X_j).
CountMatrix adjacency_of(const std::vector<std::size_t>& members, const Assignment& sigma);

/// Calls `visit` for every brick set of exactly `size` members (increasing
/// index order, lexicographic). Stops after `cap` sets when cap > 0 and
/// reports whether it stopped early.
struct EnumerationResult {
  std::size_t visited = 0;
  bool exhausted = false;
};
EnumerationResult for_each_brick_set(const CountMatrix& hom, std::size_t size, std::size_t cap,
                                     const std::function<void(const std::vector<std::size_t>&)>& visit);

struct FpCell {
  std::size_t n = 0;
  int power = 0;
  SpectralValue value;
  std::vector<std::size_t> witness;  // empty when no brick set of this size exists
  std::size_t sets_scanned = 0;
  bool exhausted = false;
};

/// sup over all n-element brick sets of ρ(A(φ, σ)); 0 when there are none.
/// Scans numerically and certifies the winning set.
FpCell fpdim_n(std::size_t n, const CountMatrix& hom, const Assignment& sigma, std::size_t cap = 0);

struct GrowthEstimate {
  enum class Kind { vanishing, bounded, polynomial, exponential };
  double fpg = -std::numeric_limits<double>::infinity();
  double fpv = 0.0;
  std::size_t window_begin = 0;  // 1-based indices into the sequence
  std::size_t window_end = 0;
  Kind kind = Kind::vanishing;
};

std::string to_string(GrowthEstimate::Kind k);

/// Treats seq[k] as a_{k+1}. fpg is the max of log(a_n)/log(n) and fpv the
/// max of a_n^(1/n) over the last half of the window (n >= 2). The kind
/// comes from comparing least-squares fits of log a_n against n and against
/// log n. Throws std::invalid_argument for fewer than 4 terms.
GrowthEstimate growth_analyze(const std::vector<double>& seq);

struct FpBudgets {
  std::size_t max_set_size = 4;
  /// Upper bound on brick sets scanned per (n, power) cell; 0 = unlimited.
  std::size_t max_sets = 0;
};

struct FpReport {
  std::vector<std::string> names;
  std::vector<int> powers;
  FpBudgets budgets;
  /// grid[n-1][k] is fpdimⁿ(σ^powers[k]).
  std::vector<std::vector<FpCell>> grid;

  std::optional<SpectralValue> fpdim;  // sup over n at power 1
  std::optional<std::size_t> stabilization_index;
  std::vector<std::size_t> fpdim_witness;
  /// Growth of m ↦ ρ(A(φ*, σ^m)) over positive powers, φ* the fpdim witness.
  std::optional<GrowthEstimate> growth;
  std::vector<double> growth_sequence;
  /// Growth of m ↦ max_n fpdimⁿ(σ^m).
  std::optional<GrowthEstimate> envelope_growth;
  std::vector<double> envelope_sequence;
  /// sup{m >= 0 : fpdim(σ^m) != 0} over the scanned powers.
  std::optional<int> fpgldim;
  bool exhausted = false;

  const FpCell& cell(std::size_t n, int power) const;
};

/// Fills the grid for n <= budgets.max_set_size and every supplied power.
FpReport fp_report(const std::vector<std::string>& names, const CountMatrix& hom,
                   const std::vector<std::pair<int, Assignment>>& powers, const FpBudgets& budgets);

/// Least n with max_{n' <= n} fpdim^{n'} = fpdim (within 1e-9).
std::optional<std::size_t> stabilization_index(const std::vector<double>& fpdim_by_n, double fpdim);

/// Hom table of a list of modules.
CountMatrix hom_table(const std::vector<Representation>& ms);

/// Ext^m tables for m = 0..max_power (m = 0 is Hom).
std::vector<CountMatrix> ext_power_tables(const std::vector<Representation>& ms, std::size_t max_power);

/// Assignments E^0 = Hom, E^1, ..., E^max_power from precomputed tables.
std::vector<std::pair<int, Assignment>> ext_assignments(const std::vector<CountMatrix>& tables);

/// Vertex per object, ext1(i, j) arrows from i to j.
Quiver e1_quiver(const std::vector<std::string>& names, const CountMatrix& ext1);

struct QuiverBoundReport {
  SpectralValue category_side;  // max over n <= max_size of fpdimⁿ(σ)
  SpectralValue quiver_side;    // fpdim of the σ-quiver on the whole universe
  bool pass = false;
};

/// fpdim of σ over brick sets is bounded by fpdim of the quiver with
/// σ(i, j) arrows from i to j.
QuiverBoundReport quiver_bound_check(const CountMatrix& hom, const Assignment& sigma, std::size_t max_size);

/// Objects indexed by the integers in [lo, hi], with a Hom-dimension rule
/// and a functor that shifts indices by `shift`.
struct HomTableCategory {
  long lo = 0;
  long hi = 0;
  std::function<std::int64_t(long, long)> homdim;

  std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
  CountMatrix hom_matrix() const;
  /// values(i, j) = homdim(i, j + offset).
  Assignment shifted(long offset) const;
};

/// Hom(A(i), A(j)) one-dimensional exactly when j - i is 0 or 1.
HomTableCategory graded_shift_category(long lo, long hi);

/// fp grid of σ^p for σ the index shift by `shift`, over the given powers.
FpReport homtable_fp(const HomTableCategory& table, long shift, const std::vector<int>& powers,
                     const FpBudgets& budgets);

struct ComplexityReport {
  std::vector<std::size_t> ext_dims;  // dim Ext^n(T, T), n = 1..depth
  GrowthEstimate growth;
  double cx = 0.0;        // fpg + 1, or 0 when Ext eventually vanishes
  bool infinite = false;  // exponential growth detected
  bool agc_holds = false;
  std::size_t agc_c = 0, agc_d = 0;
};

/// T = A/J(A). The averaging growth condition is tested with the given
/// (C, d) on every n whose window n-d..n+d lies in 1..depth.
ComplexityReport complexity_estimate(const AlgebraPtr& a, std::size_t depth, std::size_t agc_c = 2,
                                     std::size_t agc_d = 1);

struct FpcCxReport {
  double fpc = 0.0;
  double cx = 0.0;
  bool fp_exponential = false;
  bool cx_exponential = false;
  bool agc_holds = false;
  bool pass = false;
};

/// fpc = fpg + 1 from the witness growth of E^m over the candidates,
/// compared with the complexity estimate.
FpcCxReport fpc_vs_cx_check(const AlgebraPtr& a, const std::vector<Representation>& candidates,
                            std::size_t max_power, std::size_t max_set_size, double tolerance = 0.25);

/// Diagonal g, off-diagonal g - 1.
CountMatrix genus_matrix(std::size_t n, std::int64_t g);

/// Worker threads for scans: FPROOT_THREADS if set, else the hardware count.
std::size_t worker_count();

}  // namespace fproot
