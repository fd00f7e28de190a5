#include "fproot/spectral.hpp"

#include "fproot/digraph.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fproot {

CountMatrix::CountMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  n_ = rows.size();
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("CountMatrix literal must be square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

CountMatrix CountMatrix::transpose() const {
  CountMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CountMatrix CountMatrix::principal_submatrix(const std::vector<std::size_t>& idx) const {
  CountMatrix s(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
  return s;
}

RatMatrix CountMatrix::to_rational() const {
  RatMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

ExtendedMatrix::ExtendedMatrix(const RatMatrix& m) : n_(m.rows()), e_(m.rows() * m.rows()) {
  if (m.rows() != m.cols()) throw std::invalid_argument("ExtendedMatrix must be square");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = ExtendedEntry::finite(m(i, j));
}

SpectralValue SpectralValue::exact_value(const Rational& q) {
  SpectralValue v;
  v.value = q.get_d();
  v.certified = true;
  v.exact = q;
  return v;
}

SpectralValue SpectralValue::infinity() {
  SpectralValue v;
  v.infinite = true;
  v.value = std::numeric_limits<double>::infinity();
  v.certified = true;
  return v;
}

namespace {

using DenseD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Diagonal similarity scaling by powers of two (Parlett–Reinsch), which
// leaves the spectrum unchanged and improves the conditioning of QR.
void balance(DenseD& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      double g = r / radix, f = 1, s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

double max_modulus(DenseD a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 0.0;
  if (n == 1) return std::abs(a(0, 0));
  balance(a);
  Eigen::EigenSolver<DenseD> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
  double best = 0;
  for (Eigen::Index i = 0; i < n; ++i) best = std::max(best, std::abs(solver.eigenvalues()(i)));
  return best;
}

// Perron root of an irreducible nonnegative block given in doubles.
double perron_numeric(const DenseD& block) {
  const Eigen::Index n = block.rows();
  if (n == 1) return block(0, 0);
  if (n == 2) {
    double a = block(0, 0), b = block(0, 1), c = block(1, 0), d = block(1, 1);
    double half = 0.5 * (a - d);
    return 0.5 * (a + d) + std::sqrt(half * half + b * c);
  }
  return max_modulus(block);
}

Rational row_sum_bound(const RatMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j);
    if (s > best) best = s;
  }
  return best;
}

SpectralValue certify_block(const RatMatrix& block, double estimate) {
  auto p = charpoly::characteristic_polynomial(block);
  auto q = charpoly::square_free_part(p);
  auto root = charpoly::largest_real_root(q, estimate, row_sum_bound(block) + 1);
  if (!root) throw std::logic_error("nonnegative matrix without a real eigenvalue");
  return *root;
}

// Shared SCC reduction. `entry` returns the double value of (i, j); `exact`
// returns the rational block for certification.
template <class EntryD, class ExactBlock>
SpectralValue rho_by_components(std::size_t n, EntryD entry, ExactBlock exact_block,
                                const RhoOptions& opts) {
  if (n == 0) return SpectralValue::exact_value(0);
  Digraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (entry(i, j) != 0) g[i].push_back(j);
  const auto scc = strongly_connected_components(g);

  SpectralValue best = SpectralValue::exact_value(0);
  for (std::size_t c = 0; c < scc.members.size(); ++c) {
    if (!scc.cyclic[c]) continue;
    const auto& mem = scc.members[c];
    SpectralValue v;
    if (mem.size() == 1) {
      v = SpectralValue::exact_value(exact_block(mem)(0, 0));
    } else {
      DenseD block(mem.size(), mem.size());
      for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = 0; j < mem.size(); ++j) block(i, j) = entry(mem[i], mem[j]);
      const double estimate = perron_numeric(block);
      if (opts.certify && mem.size() <= opts.certify_max_block) {
        v = certify_block(exact_block(mem), estimate);
      } else {
        v.value = estimate;
        v.tolerance = numeric_tolerance;
      }
    }
    const bool all_certified = best.certified && v.certified;
    const double tol = std::max(best.tolerance, v.tolerance);
    if (v.value > best.value) best = std::move(v);
    best.certified = all_certified;
    best.tolerance = tol;
  }
  if (!best.certified) {
    best.exact.reset();
    best.bracket.reset();
    best.root_polynomial.clear();
    best.tolerance = std::max(best.tolerance, numeric_tolerance);
  }
  return best;
}

RatMatrix sub_block(const RatMatrix& m, const std::vector<std::size_t>& idx) {
  RatMatrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
  return s;
}

}  // namespace

double numeric_spectral_radius(const std::vector<double>& a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("numeric_spectral_radius: size mismatch");
  DenseD m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i * n + j];
  return max_modulus(std::move(m));
}

SpectralValue rho(const RatMatrix& m, const RhoOptions& opts) {
  if (m.rows() != m.cols()) throw std::invalid_argument("rho: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) throw std::invalid_argument("rho: negative entry");
      d[i * n + j] = m(i, j).get_d();
    }
  return rho_by_components(
      n, [&](std::size_t i, std::size_t j) { return d[i * n + j]; },
      [&](const std::vector<std::size_t>& idx) { return sub_block(m, idx); }, opts);
}

SpectralValue rho(const CountMatrix& m, const RhoOptions& opts) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < 0) throw std::invalid_argument("rho: negative entry");
  return rho_by_components(
      n, [&](std::size_t i, std::size_t j) { return static_cast<double>(m(i, j)); },
      [&](const std::vector<std::size_t>& idx) { return m.principal_submatrix(idx).to_rational(); },
      opts);
}

SpectralValue rho_extended(const ExtendedMatrix& m, const RhoOptions& opts) {
  const std::size_t n = m.size();
  bool negative_finite = false;
  Digraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = m(i, j);
      if (e.kind == EntryKind::finite && e.value < 0) negative_finite = true;
      if (e.in_support()) g[i].push_back(j);
    }
  const auto scc = strongly_connected_components(g);
  auto same_component = [&](std::size_t i, std::size_t j) {
    return scc.component[i] == scc.component[j] && scc.cyclic[scc.component[i]];
  };

  bool neg_inf_on_cycle = false, pos_inf_on_cycle = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!same_component(i, j)) continue;
      if (m(i, j).kind == EntryKind::neg_inf) neg_inf_on_cycle = true;
      if (m(i, j).kind == EntryKind::pos_inf) pos_inf_on_cycle = true;
    }

  if (!negative_finite && !neg_inf_on_cycle) {
    // rho(A') is nondecreasing in every substituted variable, so the lim inf
    // is the supremum: infinite iff a +∞ slot lies on a cycle; otherwise only
    // entries inside strongly connected components matter.
    if (pos_inf_on_cycle) return SpectralValue::infinity();
    RatMatrix reduced(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (same_component(i, j) && m(i, j).kind == EntryKind::finite) reduced(i, j) = m(i, j).value;
    return rho(reduced, opts);
  }

  // Mixed signs: sample x = 2^k and take the minimum of the tail as the
  // lim inf estimate.
  std::vector<double> samples;
  std::vector<double> a(n * n);
  for (int k = 0; k <= 20; ++k) {
    const double x = std::ldexp(1.0, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = m(i, j);
        a[i * n + j] = e.kind == EntryKind::finite ? e.value.get_d()
                       : e.kind == EntryKind::pos_inf ? x
                                                      : -x;
      }
    samples.push_back(numeric_spectral_radius(a, n));
  }
  SpectralValue v;
  v.value = *std::min_element(samples.end() - 5, samples.end());
  v.certified = false;
  v.tolerance = std::numeric_limits<double>::infinity();
  return v;
}

SpectralValue rho_block_lower_triangular(const std::vector<RatMatrix>& blocks, const RhoOptions& opts) {
  SpectralValue best = SpectralValue::exact_value(0);
  for (const auto& b : blocks) {
    if (b.rows() != b.cols()) throw std::invalid_argument("rho_block_lower_triangular: block is not square");
    SpectralValue v = rho(b, opts);
    const bool certified = best.certified && v.certified;
    const double tol = std::max(best.tolerance, v.tolerance);
    if (v.value > best.value) best = std::move(v);
    best.certified = certified;
    best.tolerance = tol;
    if (!certified) {
      best.exact.reset();
      best.bracket.reset();
      best.root_polynomial.clear();
    }
  }
  return best;
}

SpectralValue zplus_fpdim(const CountMatrix& multiplication) { return rho(multiplication); }

namespace charpoly {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Remainder of a divided by b (b nonzero).
Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly quotient(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

void make_monic(Poly& p) {
  trim(p);
  if (p.empty()) return;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

std::size_t sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_with(const std::vector<Poly>& seq, const Rational& lo, const Rational& hi) {
  const std::size_t a = sign_changes(seq, lo), b = sign_changes(seq, hi);
  return a > b ? a - b : 0;
}

// Small-denominator rational near x (continued fractions), if any.
std::optional<Rational> nearby_rational(const Rational& x, const mpz_class& max_den) {
  Rational rem = x;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  std::optional<Rational> last;
  for (int step = 0; step < 64; ++step) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    last = Rational(h2, k2);
    last->canonicalize();
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational frac = rem - Rational(a);
    if (frac == 0) break;
    rem = 1 / frac;
  }
  return last;
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic_polynomial: not square");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RatMatrix amk = m * mk;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / static_cast<unsigned long>(k);
  }
  return c;
}

Rational evaluate(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> square_free_part(const std::vector<Rational>& p) {
  Poly q = p;
  trim(q);
  if (q.size() <= 1) {
    make_monic(q);
    return q;
  }
  Poly g = gcd(q, derivative(q));
  Poly s = g.size() <= 1 ? q : quotient(q, g);
  make_monic(s);
  return s;
}

std::size_t count_roots(const std::vector<Rational>& p, const Rational& lo, const Rational& hi) {
  return count_with(sturm_sequence(p), lo, hi);
}

std::optional<SpectralValue> largest_real_root(const std::vector<Rational>& p, double estimate,
                                               const Rational& upper_bound) {
  Poly q = p;
  trim(q);
  if (q.size() <= 1) return std::nullopt;
  const auto seq = sturm_sequence(q);

  // Cauchy bound: every root has |x| < 1 + max |c_i / c_n|.
  Rational cauchy = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    Rational r = abs(q[i] / q.back());
    if (r > cauchy) cauchy = r;
  }
  cauchy += 1;
  Rational top = std::min(upper_bound, cauchy);
  if (count_with(seq, top, cauchy) > 0) top = cauchy;
  Rational bottom = -cauchy;
  if (count_with(seq, bottom, top) == 0) return std::nullopt;

  Rational lo = bottom, hi = top;
  if (std::isfinite(estimate)) {
    const double delta = 1e-7 * std::max(1.0, std::abs(estimate));
    Rational elo(estimate - delta), ehi(estimate + delta);
    if (elo > lo && ehi < hi && count_with(seq, ehi, top) == 0 && count_with(seq, elo, ehi) >= 1) {
      lo = elo;
      hi = ehi;
    }
  }

  const Rational two(2);
  for (int it = 0; it < 400; ++it) {
    Rational width = hi - lo;
    Rational scale = abs(hi) > 1 ? abs(hi) : Rational(1);
    mpq_class limit = scale;
    mpq_div_2exp(limit.get_mpq_t(), limit.get_mpq_t(), 62);
    if (width < limit && count_with(seq, lo, hi) == 1) break;
    Rational mid = (lo + hi) / two;
    if (count_with(seq, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }

  SpectralValue v;
  v.certified = true;
  v.tolerance = 0;
  v.root_polynomial = q;
  if (evaluate(q, hi) == 0) {
    v.exact = hi;
  } else if (auto r = nearby_rational((lo + hi) / two, mpz_class(1000000)); r && *r > lo && *r <= hi &&
                                                                            evaluate(q, *r) == 0) {
    v.exact = *r;
  }
  if (v.exact) {
    v.value = v.exact->get_d();
  } else {
    v.bracket = std::make_pair(lo, hi);
    v.value = Rational((lo + hi) / two).get_d();
  }
  return v;
}

}  // namespace charpoly

}  // namespace fproot
