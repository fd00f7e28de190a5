#pragma once

// Spectral radii of nonnegative matrices, the extended radius of matrices
// with infinite entries, and exact certification of small Perron roots.

#include "fproot/exactlin.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fproot {

/// Dense square matrix of nonnegative integer counts (Hom/Ext dimensions,
/// arrow multiplicities). The hot path of brick-set scans.
class CountMatrix {
public:
  CountMatrix() = default;
  explicit CountMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  CountMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  CountMatrix transpose() const;
  CountMatrix principal_submatrix(const std::vector<std::size_t>& idx) const;
  RatMatrix to_rational() const;

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

enum class EntryKind { finite, pos_inf, neg_inf };

struct ExtendedEntry {
  EntryKind kind = EntryKind::finite;
  Rational value;  // meaningful only when finite

  static ExtendedEntry finite(Rational q) { return {EntryKind::finite, std::move(q)}; }
  static ExtendedEntry pos_inf() { return {EntryKind::pos_inf, 0}; }
  static ExtendedEntry neg_inf() { return {EntryKind::neg_inf, 0}; }

  bool in_support() const { return kind != EntryKind::finite || value != 0; }
};

/// Square matrix over Q ∪ {+∞, −∞}.
class ExtendedMatrix {
public:
  ExtendedMatrix() = default;
  explicit ExtendedMatrix(std::size_t n) : n_(n), e_(n * n) {}
  explicit ExtendedMatrix(const RatMatrix& m);

  std::size_t size() const { return n_; }
  ExtendedEntry& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const ExtendedEntry& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

private:
  std::size_t n_ = 0;
  std::vector<ExtendedEntry> e_;
};

/// A spectral radius together with how it was obtained.
struct SpectralValue {
  bool infinite = false;
  double value = 0.0;
  /// Certified values come from exact reasoning (SCC reduction, exact
  /// characteristic polynomials); their tolerance is 0 and `value` is the
  /// double nearest to the certified isolating interval.
  bool certified = false;
  double tolerance = 0.0;
  /// Set when the radius is a rational number.
  std::optional<Rational> exact;
  /// Rational isolating interval [lo, hi] of an irrational certified root.
  std::optional<std::pair<Rational, Rational>> bracket;
  /// Square-free polynomial (ascending coefficients) having the certified
  /// root as its largest real root.
  std::vector<Rational> root_polynomial;

  static SpectralValue exact_value(const Rational& q);
  static SpectralValue infinity();
};

/// Declared absolute error of the numeric eigenvalue path for n <= 64.
inline constexpr double numeric_tolerance = 1e-9;

struct RhoOptions {
  /// Irreducible blocks up to this size are certified through their exact
  /// characteristic polynomial.
  std::size_t certify_max_block = 6;
  bool certify = true;
};

/// Perron root of a square matrix with finite nonnegative rational entries.
/// Throws std::invalid_argument for a non-square or negative input.
SpectralValue rho(const RatMatrix& m, const RhoOptions& opts = {});
SpectralValue rho(const CountMatrix& m, const RhoOptions& opts = {});

/// Extended spectral radius: the lim inf of rho(A') as every infinite slot
/// is replaced by ±x_ij with x_ij → ∞.
SpectralValue rho_extended(const ExtendedMatrix& m, const RhoOptions& opts = {});

/// Max over the Perron roots of the diagonal blocks of a block lower
/// triangular matrix.
SpectralValue rho_block_lower_triangular(const std::vector<RatMatrix>& blocks,
                                         const RhoOptions& opts = {});

/// Frobenius–Perron dimension of an object of a Z+-ring from its left
/// multiplication matrix.
SpectralValue zplus_fpdim(const CountMatrix& multiplication);

/// Spectral radius (max |λ|) of an arbitrary real matrix, numerically.
double numeric_spectral_radius(const std::vector<double>& a, std::size_t n);

namespace charpoly {

/// Coefficients c_0..c_n (ascending) of det(xI − m), computed exactly by
/// Faddeev–LeVerrier.
std::vector<Rational> characteristic_polynomial(const RatMatrix& m);

Rational evaluate(const std::vector<Rational>& p, const Rational& x);

/// p / gcd(p, p'), made monic.
std::vector<Rational> square_free_part(const std::vector<Rational>& p);

/// Number of distinct real roots of a square-free p in the half-open
/// interval (lo, hi], via a Sturm sequence.
std::size_t count_roots(const std::vector<Rational>& p, const Rational& lo, const Rational& hi);

/// Largest real root of p, isolated to width below 2^-60 (relative).
/// `estimate` seeds the search. Returns nullopt when p has no real roots.
std::optional<SpectralValue> largest_real_root(const std::vector<Rational>& p, double estimate,
                                               const Rational& upper_bound);

}  // namespace charpoly

}  // namespace fproot
