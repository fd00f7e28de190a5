#include "fproot/tables.hpp"

#include "fproot/fpcore.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fproot {

std::int64_t p1_twist_surface(long a, long b, long /*n*/) {
  if (a == 0) return b < 0 ? 1 : b + 1;
  if (a == 1) return b >= -1 ? 1 : -b - 1;
  return 0;
}

std::int64_t p1_serre_surface(long a, long b, long /*n*/) {
  const long s = a + b;
  if (s == 0) return b > 0 ? 1 : 1 - 2 * b;
  if (s == 1) return b <= 0 ? 1 : 2 * b - 1;
  return 0;
}

std::int64_t a2_surface(long a, long b, long /*n*/) {
  const long s = 3 * a + b;
  return s == 0 || s == 1 ? 1 : 0;
}

std::int64_t polyring_surface(long g, long i) {
  if (g < 0) throw std::invalid_argument("polyring_surface: negative g");
  if (i < 0 || i > g) return 0;
  std::int64_t c = 1;
  for (long k = 1; k <= i; ++k) c = c * (g - i + k) / k;
  return c;
}

const std::vector<std::string>& surface_names() {
  static const std::vector<std::string> names{"p1-twist", "p1-serre", "a2"};
  return names;
}

std::int64_t surface_value(const std::string& name, long a, long b, long n) {
  if (name == "p1-twist") return p1_twist_surface(a, b, n);
  if (name == "p1-serre") return p1_serre_surface(a, b, n);
  if (name == "a2") return a2_surface(a, b, n);
  throw std::invalid_argument("unknown surface '" + name + "'");
}

std::string surface_grid_csv(const std::string& name, long range, long n) {
  surface_value(name, 0, 0, n);  // validates the name
  std::ostringstream out;
  out << "a\\b";
  for (long b = -range; b <= range; ++b) out << ',' << b;
  out << '\n';
  for (long a = -range; a <= range; ++a) {
    out << a;
    for (long b = -range; b <= range; ++b) out << ',' << surface_value(name, a, b, n);
    out << '\n';
  }
  return out.str();
}

std::string polyring_csv(long max_g) {
  std::ostringstream out;
  out << 'g';
  for (long i = 0; i <= max_g; ++i) out << ",i=" << i;
  out << '\n';
  for (long g = 0; g <= max_g; ++g) {
    out << g;
    for (long i = 0; i <= max_g; ++i) out << ',' << polyring_surface(g, i);
    out << '\n';
  }
  return out.str();
}

KroneckerCrossCheck cross_check_k2(std::size_t max_dim, std::size_t max_n, std::uint64_t seed) {
  const Quiver k2 = fixtures::kronecker_quiver();
  const AlgebraPtr a = share(fixtures::path_algebra(k2));
  const auto bricks = fixtures::kronecker_brick_universe(a, max_dim, 8, seed);
  const auto tables = ext_power_tables(bricks, 1);
  const Assignment e1{"E^1", tables[1]};
  KroneckerCrossCheck r;
  r.universe_size = bricks.size();
  r.pass = true;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const FpCell c = fpdim_n(n, tables[0], e1);
    r.engine.push_back(c.value.value);
    r.surface.push_back(p1_serre_surface(1, 0, static_cast<long>(n)));
    if (c.value.infinite || std::abs(c.value.value - static_cast<double>(r.surface.back())) > 1e-9) r.pass = false;
  }
  r.quiver_fpdim = quiver_fpdim(k2).value;
  if (r.quiver_fpdim != 0.0) r.pass = false;
  return r;
}

}  // namespace fproot
