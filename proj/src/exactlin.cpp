#include "fproot/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fproot {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n(strip_plus(num), 10), d(strip_plus(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string digits;
    for (char c : whole)
      if (c != '-' && c != '+') digits += c;
    if (frac.empty() && digits.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      digits += c;
    }
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (digits.empty()) digits = "0";
    mpz_class n(digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    Rational q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
  }
  if (!is_integer_text(text)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  return Rational(mpz_class(strip_plus(text), 10));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RatVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (v[k] != 0 && a(i, k) != 0) out[i] += a(i, k) * v[k];
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    if (m(r, c) != 1) {
      Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(r, j) *= inv;
    }
    // Nonzero columns of the pivot row, to skip zeros during elimination.
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j)
      if (m(r, j) != 0) support.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      factor = m(i, c);
      for (std::size_t j : support) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

std::vector<std::size_t> free_columns(const RowEchelon& e, std::size_t cols) {
  std::vector<std::size_t> free;
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (p < e.pivots.size() && e.pivots[p] == c) {
      ++p;
      continue;
    }
    free.push_back(c);
  }
  return free;
}

std::vector<RatVector> nullspace_basis(const RatMatrix& m) {
  const RowEchelon e = rref(m);
  const auto free = free_columns(e, m.cols());
  std::vector<RatVector> basis;
  basis.reserve(free.size());
  for (std::size_t f : free) {
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      const Rational& x = e.reduced(k, f);
      if (x != 0) v[e.pivots[k]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
  return x;
}

RatMatrix rows_to_matrix(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("rows_to_matrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  RatMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace fproot
