#pragma once

// Closed-form fp surfaces of small derived categories, used as oracles and
// as CLI output.

#include <cstdint>
#include <string>
#include <vector>

namespace fproot {

/// fpdimⁿ(Σ^a ∘ (b)) on the derived category of coherent sheaves on P¹.
std::int64_t p1_twist_surface(long a, long b, long n = 1);

/// fpdimⁿ(Σ^a ∘ S^b) on the same category, S the Serre functor.
std::int64_t p1_serre_surface(long a, long b, long n = 1);

/// fpdimⁿ(Σ^a ∘ S^b) for the path algebra of A₂.
std::int64_t a2_surface(long a, long b, long n = 1);

/// fpdim(Σ^i) for the polynomial ring in g variables: binomial(g, i).
std::int64_t polyring_surface(long g, long i);

/// Names accepted by surface_value and surface_grid_csv.
const std::vector<std::string>& surface_names();

/// Throws std::invalid_argument for an unknown surface name.
std::int64_t surface_value(const std::string& name, long a, long b, long n = 1);

/// CSV grid over |a|, |b| <= range: header "a\b,-r,...,r", one row per a.
std::string surface_grid_csv(const std::string& name, long range, long n = 1);

/// CSV of binomial(g, i) rows for g = 0..max_g: "g,i=0,...".
std::string polyring_csv(long max_g);

struct KroneckerCrossCheck {
  std::vector<double> engine;   // fpdimⁿ(E¹) over Kronecker bricks, n = 1..max_n
  std::vector<std::int64_t> surface;  // p1_serre_surface(1, 0, n)
  double quiver_fpdim = 0.0;
  std::size_t universe_size = 0;
  bool pass = false;
};

/// Compares the engine over Kronecker bricks of total dimension <= max_dim
/// with the P¹ surface, and checks that the Kronecker quiver itself has
/// fpdim 0.
KroneckerCrossCheck cross_check_k2(std::size_t max_dim = 6, std::size_t max_n = 3, std::uint64_t seed = 1);

}  // namespace fproot
