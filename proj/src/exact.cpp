#include "spectrajoin/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spectrajoin {

Rat parse_rat(const std::string& text) {
  Rat value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) { return value.get_str(); }

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::x() { return Poly(std::vector<Rat>{0, 1}); }

Poly Poly::monomial(const Rat& coeff, std::size_t power) {
  std::vector<Rat> c(power + 1);
  c[power] = coeff;
  return Poly(std::move(c));
}

Poly Poly::linear_root(const Rat& root) { return Poly(std::vector<Rat>{-root, 1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rat(0); }

Rat Poly::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

Rat Poly::operator()(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double Poly::eval(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rat lead = leading();
  std::vector<Rat> c = coeffs_;
  for (auto& v : c) v /= lead;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly(), *this};
  std::vector<Rat> rem = coeffs_;
  std::vector<Rat> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const Rat lead = divisor.leading();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rat q = rem[k + dd] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::operator-() const {
  std::vector<Rat> c = coeffs_;
  for (auto& v : c) v = -v;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (!unit || k == 0) out << mag.get_str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Int den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> ints;
  ints.reserve(p.coeffs().size());
  Int content = 0;
  for (const auto& c : p.coeffs()) {
    Int v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Int(v / content));
  return Poly(std::move(out));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = primitive_part(a);
  Poly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Poly r = primitive_part(u.divmod(v).second);
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

Poly interpolate(std::span<const std::pair<Rat, Rat>> points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("interpolation abscissa repeated: " + points[i].first.get_str());
      }
    }
  }
  // Newton divided differences, then Horner expansion of the Newton form.
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  Poly result(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    result = result * Poly::linear_root(points[k].first) + Poly(dd[k]);
  }
  return result;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  const Rat lead = den.leading();
  num_ = num * Poly(Rat(1) / lead);
  den_ = den.monic();
}

std::optional<Rat> RatFunc::eval_at(const Rat& at) const {
  const Rat d = den_(at);
  if (d == 0) return std::nullopt;
  return num_(at) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (auto& v : m.data_) v = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rat> values) {
  ExactMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("matrix block out of range");
  ExactMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  }
  return b;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rat ExactMatrix::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::vector<Rat> ExactMatrix::row_sums() const {
  std::vector<Rat> sums(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
  }
  return sums;
}

Int ExactMatrix::common_denominator() const {
  Int den = 1;
  for (const auto& v : data_) {
    if (v.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  return den;
}

namespace {
void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

void require_square(const ExactMatrix& m, const char* what) {
  if (!m.is_square()) throw std::invalid_argument(std::string(what) + " needs a square matrix");
}
}  // namespace

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b);
  ExactMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b);
  ExactMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ExactMatrix operator*(const Rat& s, const ExactMatrix& m) {
  ExactMatrix c = m;
  for (auto& v : c.data_) v *= s;
  return c;
}

ExactMatrix shifted(const Rat& s, const ExactMatrix& m) {
  require_square(m, "shift");
  ExactMatrix c = Rat(-1) * m;
  for (std::size_t i = 0; i < m.rows(); ++i) c(i, i) += s;
  return c;
}

// ---------------------------------------------------------------------------
// Determinants and solves

Int bareiss_determinant(std::vector<Int> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("bareiss: entry count mismatch");
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  Int t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
      sign = -sign;
    }
    const Int& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij = (a_ij * a_kk - a_ik * a_kj) / prev, exact by Sylvester's identity
        mpz_mul(a[i * n + j].get_mpz_t(), a[i * n + j].get_mpz_t(), pivot.get_mpz_t());
        mpz_mul(t.get_mpz_t(), a[i * n + k].get_mpz_t(), a[k * n + j].get_mpz_t());
        mpz_sub(a[i * n + j].get_mpz_t(), a[i * n + j].get_mpz_t(), t.get_mpz_t());
        mpz_divexact(a[i * n + j].get_mpz_t(), a[i * n + j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  Int det = a[n * n - 1];
  return sign > 0 ? det : Int(-det);
}

namespace {
/// Integer lift: entries scaled by `den`.
std::vector<Int> integer_lift(const ExactMatrix& m, const Int& den) {
  std::vector<Int> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& v = m(i, j);
      out.emplace_back(v.get_num() * (den / v.get_den()));
    }
  }
  return out;
}
}  // namespace

Rat determinant(const ExactMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  const Int den = m.common_denominator();
  Int det = bareiss_determinant(integer_lift(m, den), n);
  if (den == 1) return Rat(det);
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), n);
  Rat r(det, scale);
  r.canonicalize();
  return r;
}

std::optional<std::vector<Rat>> solve(const ExactMatrix& m, std::vector<Rat> rhs) {
  require_square(m, "solve");
  const std::size_t n = m.rows();
  if (rhs.size() != n) throw std::invalid_argument("solve: right-hand side length mismatch");
  ExactMatrix a = m;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(rhs[k], rhs[p]);
    }
    const Rat inv = Rat(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rat f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Rat acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * rhs[j];
    rhs[k] = acc / a(k, k);
  }
  return rhs;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  ExactMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rat> e(n);
    e[c] = 1;
    auto col = solve(m, std::move(e));
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, c) = (*col)[i];
  }
  return inv;
}

Poly charpoly(const ExactMatrix& m) {
  require_square(m, "charpoly");
  const std::size_t n = m.rows();
  if (n == 0) return Poly(1);
  const Int den = m.common_denominator();
  const std::vector<Int> lifted = integer_lift(m, den);
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), n);

  std::vector<std::pair<Rat, Rat>> samples;
  samples.reserve(n + 1);
  for (std::size_t step = 0; step <= n; ++step) {
    const long k = static_cast<long>(n + 1 + step);
    std::vector<Int> a(n * n);
    for (std::size_t idx = 0; idx < n * n; ++idx) a[idx] = -lifted[idx];
    const Int diag = den * k;
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] += diag;
    Rat value(bareiss_determinant(std::move(a), n), scale);
    value.canonicalize();
    samples.emplace_back(Rat(k), std::move(value));
  }
  Poly p = interpolate(samples);
  if (p.degree() != static_cast<int>(n) || !p.is_monic()) {
    throw std::logic_error("charpoly interpolation did not yield a monic polynomial of degree n");
  }
  return p;
}

RatFunc coronal(const ExactMatrix& m) {
  require_square(m, "coronal");
  if (m.rows() == 0) throw std::invalid_argument("coronal needs n >= 1");
  // det(xI - M + J) - det(xI - M) = 1^T adj(xI - M) 1
  const Poly f = charpoly(m);
  const Poly f_shift = charpoly(m - ExactMatrix::ones(m.rows(), m.cols()));
  return RatFunc(f_shift - f, f);
}

std::optional<Rat> coronal_at(const ExactMatrix& m, const Rat& at) {
  require_square(m, "coronal");
  if (m.rows() == 0) return Rat(0);
  auto x = solve(shifted(at, m), std::vector<Rat>(m.rows(), Rat(1)));
  if (!x) return std::nullopt;
  Rat sum = 0;
  for (const auto& v : *x) sum += v;
  return sum;
}

SchurCheck schur_det_check(const ExactMatrix& m, std::size_t split, SchurPivot pivot) {
  require_square(m, "Schur check");
  const std::size_t n = m.rows();
  if (split == 0 || split >= n) throw std::invalid_argument("Schur split must leave two nonempty blocks");
  const std::size_t rest = n - split;
  const ExactMatrix a = m.block(0, 0, split, split);
  const ExactMatrix b = m.block(0, split, split, rest);
  const ExactMatrix c = m.block(split, 0, rest, split);
  const ExactMatrix d = m.block(split, split, rest, rest);

  SchurCheck out;
  const ExactMatrix& p = pivot == SchurPivot::Trailing ? d : a;
  const auto p_inv = inverse(p);
  if (!p_inv) return out;
  out.pivot_invertible = true;
  const ExactMatrix complement = pivot == SchurPivot::Trailing ? a - b * (*p_inv) * c : d - c * (*p_inv) * b;
  out.det_full = determinant(m);
  out.det_pivot = determinant(p);
  out.det_complement = determinant(complement);
  out.holds = out.det_full == out.det_complement * out.det_pivot;
  return out;
}

}  // namespace spectrajoin
