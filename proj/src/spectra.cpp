#include "spectrajoin/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spectrajoin {

// ---- Real ----------------------------------------------------------------

namespace {

Real combine(const Real& a, const Real& b, double v, auto exact_op) {
  Real out = Real::approx(v);
  if (a.exact && b.exact) {
    out.exact = exact_op(*a.exact, *b.exact);
    out.value = out.exact->get_d();
  }
  return out;
}

std::optional<Int> exact_isqrt(const Int& v) {
  if (v < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  Int root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root;
}

}  // namespace

Real operator+(const Real& a, const Real& b) {
  return combine(a, b, a.value + b.value, [](const Rat& x, const Rat& y) { return Rat(x + y); });
}
Real operator-(const Real& a, const Real& b) {
  return combine(a, b, a.value - b.value, [](const Rat& x, const Rat& y) { return Rat(x - y); });
}
Real operator*(const Real& a, const Real& b) {
  return combine(a, b, a.value * b.value, [](const Rat& x, const Rat& y) { return Rat(x * y); });
}
Real operator/(const Real& a, const Real& b) {
  if (b.exact ? *b.exact == 0 : b.value == 0.0) throw std::domain_error("division by zero");
  return combine(a, b, a.value / b.value, [](const Rat& x, const Rat& y) { return Rat(x / y); });
}
Real Real::operator-() const {
  Real out = *this;
  out.value = -value;
  if (exact) out.exact = -*exact;
  return out;
}

Real sqrt(const Real& x) {
  if (x.exact) {
    if (*x.exact < 0) throw std::domain_error("square root of a negative number");
    const auto num = exact_isqrt(x.exact->get_num());
    const auto den = exact_isqrt(x.exact->get_den());
    if (num && den) return Real(Rat(*num, *den));
    return Real::approx(std::sqrt(x.value));
  }
  if (x.value < 0) {
    if (x.value < -1e-9) throw std::domain_error("square root of a negative number");
    return Real::approx(0.0);
  }
  return Real::approx(std::sqrt(x.value));
}

// ---- Spectrum --------------------------------------------------------------

Spectrum::Spectrum(MatrixKind kind, std::vector<Real> values, double merge_tol) : kind_(kind) {
  std::sort(values.begin(), values.end(), [](const Real& a, const Real& b) { return a.value > b.value; });
  for (Real& v : values) {
    if (!entries_.empty()) {
      SpectrumEntry& last = entries_.back();
      const bool close = std::abs(v.value - last.value.value) <= merge_tol * (1.0 + std::abs(last.value.value));
      const bool exact_clash = v.exact && last.value.exact && *v.exact != *last.value.exact;
      if (close && !exact_clash) {
        ++last.multiplicity;
        if (!last.value.exact && v.exact) last.value = v;
        continue;
      }
    }
    entries_.push_back({std::move(v), 1});
  }
}

std::size_t Spectrum::size() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += static_cast<std::size_t>(e.multiplicity);
  return total;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  out.reserve(size());
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) out.insert(out.end(), static_cast<std::size_t>(it->multiplicity), it->value.value);
  return out;
}

double Spectrum::sum() const {
  double s = 0;
  for (const auto& e : entries_) s += e.multiplicity * e.value.value;
  return s;
}

double Spectrum::min() const {
  if (entries_.empty()) throw std::logic_error("empty spectrum");
  return entries_.back().value.value;
}

double Spectrum::max() const {
  if (entries_.empty()) throw std::logic_error("empty spectrum");
  return entries_.front().value.value;
}

bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol) {
  const auto va = a.values();
  const auto vb = b.values();
  if (va.size() != vb.size()) return false;
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (std::abs(va[i] - vb[i]) > tol * (1.0 + std::abs(va[i]))) return false;
  }
  return true;
}

double max_deviation(const Spectrum& a, const Spectrum& b) {
  const auto va = a.values();
  const auto vb = b.values();
  if (va.size() != vb.size()) return INFINITY;
  double worst = 0;
  for (std::size_t i = 0; i < va.size(); ++i) worst = std::max(worst, std::abs(va[i] - vb[i]));
  return worst;
}

// ---- Jacobi ------------------------------------------------------------------

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double off_tol) {
  if (a.size() != n * n) throw std::invalid_argument("jacobi: matrix size mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += at(i, j) * at(i, j);
      }
    }
    return std::sqrt(s);
  };
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= off_tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  if (off_norm() >= off_tol) throw std::runtime_error("jacobi: no convergence");
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

Spectrum numeric_spectrum(const Graph& g, MatrixKind kind) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Real> values;
  for (double v : jacobi_eigenvalues(build_numeric_matrix(g, kind), n)) values.push_back(Real::approx(v));
  return Spectrum(kind, std::move(values));
}

std::vector<Real> adjacency_eigenvalues(const Graph& g) {
  const int n = g.order();
  const std::vector<double> numeric =
      jacobi_eigenvalues(build_numeric_matrix(g, MatrixKind::A), static_cast<std::size_t>(n));
  Poly p = charpoly(build_matrix(g, MatrixKind::A));
  std::vector<Rat> integer_roots;
  const int bound = g.max_degree();
  for (int k = -bound; k <= bound; ++k) {
    while (p.degree() > 0 && p(Rat(k)) == 0) {
      p = p.divmod(Poly::linear_root(Rat(k))).first;
      integer_roots.emplace_back(k);
    }
  }
  std::vector<Real> out;
  std::vector<bool> used(numeric.size(), false);
  for (const Rat& root : integer_roots) {
    std::size_t best = numeric.size();
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      if (used[i]) continue;
      if (best == numeric.size() || std::abs(numeric[i] - root.get_d()) < std::abs(numeric[best] - root.get_d())) best = i;
    }
    if (best == numeric.size() || std::abs(numeric[best] - root.get_d()) > 1e-6) {
      throw std::logic_error("exact and numeric adjacency eigenvalues disagree");
    }
    used[best] = true;
    out.emplace_back(root);
  }
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    if (!used[i]) out.push_back(Real::approx(numeric[i]));
  }
  std::sort(out.begin(), out.end(), [](const Real& a, const Real& b) { return a.value > b.value; });
  return out;
}

Spectrum regular_transfer(const Spectrum& adjacency, int r, MatrixKind target) {
  if (adjacency.kind() != MatrixKind::A) throw std::invalid_argument("regular_transfer expects an adjacency spectrum");
  if (r < 0) throw std::invalid_argument("regular_transfer: negative degree");
  if (target == MatrixKind::NL && r == 0) throw std::domain_error("normalized Laplacian transfer needs r >= 1");
  std::vector<Real> values;
  for (const auto& e : adjacency.entries()) {
    Real v;
    switch (target) {
      case MatrixKind::A: v = e.value; break;
      case MatrixKind::L: v = Real(r) - e.value; break;
      case MatrixKind::Q: v = Real(r) + e.value; break;
      case MatrixKind::NL: v = Real(1) - e.value / Real(r); break;
    }
    values.insert(values.end(), static_cast<std::size_t>(e.multiplicity), v);
  }
  return Spectrum(target, std::move(values));
}

// ---- Quadratic and cubic roots ----------------------------------------------

std::array<Real, 2> solve_quadratic_real(const Real& a, const Real& b, const Real& c) {
  if (a.exact ? *a.exact == 0 : a.value == 0.0) throw std::invalid_argument("quadratic with zero leading coefficient");
  const Real disc = b * b - Real(4) * a * c;
  if (disc.exact && *disc.exact < 0) throw std::domain_error("quadratic has a non-real root pair");
  const double scale = b.value * b.value + std::abs(4 * a.value * c.value);
  if (!disc.exact && disc.value < -1e-9 * (1.0 + scale)) throw std::domain_error("quadratic has a non-real root pair");
  const Real root = disc.exact ? sqrt(disc) : Real::approx(std::sqrt(std::max(0.0, disc.value)));
  std::array<Real, 2> out;
  if (root.exact && a.exact && b.exact) {
    out = {(-b - root) / (Real(2) * a), (-b + root) / (Real(2) * a)};
  } else {
    // Cancellation-free form.
    const double q = -0.5 * (b.value + (b.value >= 0 ? root.value : -root.value));
    if (q == 0.0) {
      out = {Real::approx(0.0), Real::approx(0.0)};
    } else {
      out = {Real::approx(q / a.value), Real::approx(c.value / q)};
    }
  }
  if (out[0].value > out[1].value) std::swap(out[0], out[1]);
  return out;
}

namespace {

std::vector<Int> divisors(Int v) {
  v = abs(v);
  std::vector<Int> out;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

std::optional<Rat> rational_root(const Poly& cubic) {
  const Poly p = primitive_part(cubic);
  const Int lead = p.leading().get_num();
  const Int constant = p.coeff(0).get_num();
  if (constant == 0) return Rat(0);
  static const Int kLimit("1000000000000");
  if (abs(constant) > kLimit || abs(lead) > kLimit) return std::nullopt;
  for (const Int& num : divisors(constant)) {
    for (const Int& den : divisors(lead)) {
      for (int sign : {1, -1}) {
        Rat cand(num * sign, den);
        cand.canonicalize();
        if (p(cand) == 0) return cand;
      }
    }
  }
  return std::nullopt;
}

double eval_cubic(const std::array<double, 4>& c, double x) { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; }

}  // namespace

std::array<Real, 3> solve_cubic_real(const Rat& c3, const Rat& c2, const Rat& c1, const Rat& c0) {
  if (c3 == 0) throw std::invalid_argument("cubic with zero leading coefficient");
  const Poly p(std::vector<Rat>{c0, c1, c2, c3});
  if (const auto rho = rational_root(p)) {
    const Poly quad = p.divmod(Poly::linear_root(*rho)).first;
    const auto pair = solve_quadratic_real(Real(quad.coeff(2)), Real(quad.coeff(1)), Real(quad.coeff(0)));
    std::array<Real, 3> out{Real(*rho), pair[0], pair[1]};
    std::sort(out.begin(), out.end(), [](const Real& a, const Real& b) { return a.value < b.value; });
    return out;
  }

  const std::array<double, 4> c{c0.get_d(), c1.get_d(), c2.get_d(), c3.get_d()};
  const double a = c[2] / c[3];
  const double b = c[1] / c[3];
  const double d = c[0] / c[3];
  const double pp = b - a * a / 3.0;
  const double qq = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
  const double scale = 1.0 + std::abs(a) * std::abs(a) + std::abs(b);
  std::array<double, 3> t{};
  if (pp >= -1e-14 * scale) {
    if (std::abs(qq) > 1e-10 * scale * (1.0 + std::abs(a))) throw std::domain_error("cubic has a non-real root pair");
    t = {0.0, 0.0, 0.0};
  } else {
    const double m = 2.0 * std::sqrt(-pp / 3.0);
    double arg = 3.0 * qq / (pp * m);
    if (std::abs(arg) > 1.0 + 1e-9) throw std::domain_error("cubic has a non-real root pair");
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) t[static_cast<std::size_t>(k)] = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  }
  std::array<Real, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    double x = t[k] - a / 3.0;
    for (int it = 0; it < 3; ++it) {
      const double deriv = (3 * c[3] * x + 2 * c[2]) * x + c[1];
      if (deriv == 0.0) break;
      const double next = x - eval_cubic(c, x) / deriv;
      if (std::abs(eval_cubic(c, next)) >= std::abs(eval_cubic(c, x))) break;
      x = next;
    }
    const double ax = std::max(1.0, std::abs(x));
    const double bound =
        1e-10 * (std::abs(c[3]) * ax * ax * ax + std::abs(c[2]) * ax * ax + std::abs(c[1]) * ax + std::abs(c[0]));
    if (std::abs(eval_cubic(c, x)) > bound) throw std::domain_error("cubic root residual too large");
    out[k] = Real::approx(x);
  }
  std::sort(out.begin(), out.end(), [](const Real& x, const Real& y) { return x.value < y.value; });
  return out;
}

// ---- Closed forms for joins of regular graphs -----------------------------

namespace {

struct RegularData {
  int n = 0;
  int r = 0;
  std::vector<Real> rest;  ///< lambda_2..lambda_n, descending
};

RegularData regular_data(const Graph& g, const char* name) {
  const auto r = is_regular(g);
  if (!r) throw std::invalid_argument(std::string(name) + " must be regular");
  if (g.order() == 0) throw std::invalid_argument(std::string(name) + " must be non-empty");
  RegularData d;
  d.n = g.order();
  d.r = *r;
  d.rest = adjacency_eigenvalues(g);
  if (!d.rest.front().exact || *d.rest.front().exact != d.r) {
    throw std::logic_error("largest adjacency eigenvalue of a regular graph must equal its degree");
  }
  d.rest.erase(d.rest.begin());
  return d;
}

bool is_minus_one(const Real& v) { return v.exact && *v.exact == -1; }

void append_cubic(std::vector<Real>& out, const Rat& c3, const Rat& c2, const Rat& c1, const Rat& c0) {
  for (const Real& root : solve_cubic_real(c3, c2, c1, c0)) out.push_back(root);
}

void append_quadratic(std::vector<Real>& out, const Real& b, const Real& c) {
  for (const Real& root : solve_quadratic_real(Real(1), b, c)) out.push_back(root);
}

/// 1 - lambda / (n1 + r2) for the non-principal adjacency eigenvalues of G2.
void append_g2_normalized(std::vector<Real>& out, const RegularData& g2, int n1) {
  for (const Real& lam : g2.rest) out.push_back(Real(1) - lam / Real(n1 + g2.r));
}

}  // namespace

SplitEigSet split_eig_set(const Graph& g1) {
  const RegularData d = regular_data(g1, "G1");
  SplitEigSet s;
  for (std::size_t i = 0; i < d.rest.size(); ++i) {
    if (is_minus_one(d.rest[i])) s.indices.push_back(static_cast<int>(i) + 2);
  }
  return s;
}

Spectrum ns_normalized_spectrum(const Graph& g1, const Graph& g2) {
  const RegularData d1 = regular_data(g1, "G1");
  const RegularData d2 = regular_data(g2, "G2");
  if (d1.r == 0) throw std::invalid_argument("G1 must have degree at least 1");
  const int n1 = d1.n, n2 = d2.n, r1 = d1.r, r2 = d2.r;

  std::vector<Real> out;
  append_g2_normalized(out, d2, n1);

  const Real root = sqrt(Real(Rat(9 * r1 * r1 + 4 * r1 * n2)));
  const Real denom(2 * (2 * r1 + n2));
  for (const Real& lam : d1.rest) {
    const Real delta_minus_one = -lam / Real(r1);
    out.push_back(Real(1) + delta_minus_one * (root + Real(r1)) / denom);
    out.push_back(Real(1) - delta_minus_one * (root - Real(r1)) / denom);
  }
  append_cubic(out, Rat(2 * r1 * r2 + 2 * r1 * n1 + n2 * r2 + n1 * n2),
               Rat(-(3 * r1 * r2 + 5 * r1 * n1 + 2 * r2 * n2 + 3 * n1 * n2)), Rat(3 * r1 * n1 + n2 * r2 + 2 * n1 * n2),
               Rat(0));
  return Spectrum(MatrixKind::NL, std::move(out));
}

Spectrum nns_adjacency_spectrum(const Graph& g1, const Graph& g2) {
  const RegularData d1 = regular_data(g1, "G1");
  const RegularData d2 = regular_data(g2, "G2");
  const long n1 = d1.n, n2 = d2.n, r1 = d1.r, r2 = d2.r;
  const long s = n1 - r1 - 1;

  std::vector<Real> out(d2.rest.begin(), d2.rest.end());
  for (const Real& lam : d1.rest) append_quadratic(out, -lam, -((lam + Real(1)) * (lam + Real(1))));
  append_cubic(out, Rat(1), Rat(-(r1 + r2)), Rat(r1 * r2 - s * s - n1 * n2), Rat(r2 * s * s));
  return Spectrum(MatrixKind::A, std::move(out));
}

Spectrum nns_laplacian_spectrum(const Graph& g1, const Graph& g2) {
  const RegularData d1 = regular_data(g1, "G1");
  const RegularData d2 = regular_data(g2, "G2");
  const long n1 = d1.n, n2 = d2.n, r1 = d1.r, r2 = d2.r;

  std::vector<Real> out;
  for (const Real& lam : d2.rest) out.push_back(Real(Rat(n1)) + (Real(Rat(r2)) - lam));
  for (const Real& lam : d1.rest) {
    const Real mu = Real(Rat(r1)) - lam;
    const Real b = Real(Rat(2 * r1 - 2 * n1 - n2 + 2)) - mu;
    const Real c = Real(Rat(n1 * n1 - 2 * r1 * n1 - 2 * n1 + n1 * n2 - r1 * n2 - n2)) +
                   mu * (Real(Rat(n1 + r1 + 1)) - mu);
    append_quadratic(out, b, c);
  }
  append_cubic(out, Rat(1), Rat(2 * r1 - 3 * n1 - n2 + 2),
               Rat(n1 * n2 - n2 * r1 - n2 + 2 * n1 * n1 - 2 * r1 * n1 - 2 * n1), Rat(0));
  return Spectrum(MatrixKind::L, std::move(out));
}

Spectrum nns_signless_spectrum(const Graph& g1, const Graph& g2) {
  const RegularData d1 = regular_data(g1, "G1");
  const RegularData d2 = regular_data(g2, "G2");
  const long n1 = d1.n, n2 = d2.n, r1 = d1.r, r2 = d2.r;

  std::vector<Real> out;
  for (const Real& lam : d2.rest) out.push_back(Real(Rat(n1)) + (Real(Rat(r2)) + lam));
  for (const Real& lam : d1.rest) {
    const Real nu = Real(Rat(r1)) + lam;
    const Real b = Real(Rat(2 * r1 - 2 * n1 - n2 + 2)) - nu;
    const Real c = Real(Rat(n1 * n1 - 2 * r1 * n1 - 2 * n1 + n1 * n2 - r1 * n2 - n2 + 4 * r1)) +
                   nu * (Real(Rat(n1 + r1 - 3)) - nu);
    append_quadratic(out, b, c);
  }
  append_cubic(out, Rat(1), Rat(2 - 3 * n1 - n2 - 2 * r2),
               Rat(n1 * n2 - n2 * r1 - n2 + 2 * n1 * n1 + 2 * r1 * n1 - 2 * n1 - 2 * r1 - 2 * r1 * r1 + 4 * r2 * n1 -
                   4 * r2 + 2 * r2 * n2),
               Rat(2 * n1 * r1 * r1 + 2 * r1 * n1 - 2 * r1 * n1 * n1 - 2 * r2 * n1 * n2 + 2 * r1 * r2 * n2 +
                   2 * r2 * n2 + 4 * r2 * r1 * r1 + 4 * r1 * r2 - 4 * r1 * r2 * n1));
  return Spectrum(MatrixKind::Q, std::move(out));
}

Spectrum nns_normalized_spectrum(const Graph& g1, const Graph& g2, SplitCase* used_case) {
  const RegularData d1 = regular_data(g1, "G1");
  const RegularData d2 = regular_data(g2, "G2");
  if (d1.r == 0) throw std::invalid_argument("G1 must have degree at least 1");
  const long n1 = d1.n, n2 = d2.n, r1 = d1.r, r2 = d2.r;
  const long s = n1 - r1 - 1;
  const long m = n1 + n2 - 1;

  const auto in_s = static_cast<std::size_t>(std::count_if(d1.rest.begin(), d1.rest.end(), is_minus_one));
  const SplitCase kind = in_s == 0 ? SplitCase::None : in_s == d1.rest.size() ? SplitCase::All : SplitCase::Mixed;
  if (used_case) *used_case = kind;

  std::vector<Real> out;
  append_g2_normalized(out, d2, static_cast<int>(n1));
  const Real split_value = Real(1) + Real(Rat(1, m));

  if (kind == SplitCase::All) {
    out.insert(out.end(), static_cast<std::size_t>(n1 - 1), split_value);
    out.insert(out.end(), static_cast<std::size_t>(n1 + 1), Real(0));
    out.emplace_back(Rat(Rat(n1 * n1 + 2 * n1 * n2 + r2 * n2 - n1) / Rat((r2 + n1) * m)));
    return Spectrum(MatrixKind::NL, std::move(out));
  }

  if (s <= 0) throw std::logic_error("a regular graph with n1 - r1 - 1 = 0 is complete");
  for (const Real& lam : d1.rest) {
    if (is_minus_one(lam)) {
      out.emplace_back(1);
      out.push_back(split_value);
      continue;
    }
    const Real t = Real(1) + lam;
    const Real base = lam * Real(Rat(s));
    const Real root = sqrt(Real(Rat(s)) * (lam * lam * Real(Rat(s)) + Real(4) * t * t * Real(Rat(m))));
    out.push_back(Real(1) + Real(2) * t * t / (base - root));
    out.push_back(Real(1) + Real(2) * t * t / (base + root));
  }
  append_cubic(out, Rat(n1 * n1 + n1 * n2 - n1 + r2 * n1 + r2 * n2 - r2),
               Rat(-(3 * n1 * n1 + 3 * n1 * n2 - 3 * n1 - r1 * n1 + 2 * r2 * n1 + 2 * r2 * n2 - 2 * r2 - r1 * r2)),
               Rat(2 * n1 * n1 + 2 * n1 * n2 - 2 * n1 - r1 * n1 + r2 * n2), Rat(0));
  return Spectrum(MatrixKind::NL, std::move(out));
}

// ---- Uniform access ----------------------------------------------------------

std::string_view to_string(SpectrumFormula f) {
  switch (f) {
    case SpectrumFormula::NsNormalized: return "5.1";
    case SpectrumFormula::NnsAdjacency: return "6.1";
    case SpectrumFormula::NnsLaplacian: return "6.2";
    case SpectrumFormula::NnsSignless: return "6.3";
    case SpectrumFormula::NnsNormalized: return "6.4";
  }
  return "?";
}

SpectrumFormula parse_spectrum_formula(std::string_view label) {
  for (SpectrumFormula f : kAllSpectrumFormulas) {
    if (to_string(f) == label) return f;
  }
  throw std::invalid_argument("unknown spectrum formula '" + std::string(label) + "'");
}

JoinKind formula_join(SpectrumFormula f) { return f == SpectrumFormula::NsNormalized ? JoinKind::NS : JoinKind::NNS; }

MatrixKind formula_matrix(SpectrumFormula f) {
  switch (f) {
    case SpectrumFormula::NnsAdjacency: return MatrixKind::A;
    case SpectrumFormula::NnsLaplacian: return MatrixKind::L;
    case SpectrumFormula::NnsSignless: return MatrixKind::Q;
    default: return MatrixKind::NL;
  }
}

std::optional<SpectrumFormula> formula_for(JoinKind join, MatrixKind kind) {
  for (SpectrumFormula f : kAllSpectrumFormulas) {
    if (formula_join(f) == join && formula_matrix(f) == kind) return f;
  }
  return std::nullopt;
}

Spectrum closed_form_spectrum(SpectrumFormula f, const Graph& g1, const Graph& g2) {
  switch (f) {
    case SpectrumFormula::NsNormalized: return ns_normalized_spectrum(g1, g2);
    case SpectrumFormula::NnsAdjacency: return nns_adjacency_spectrum(g1, g2);
    case SpectrumFormula::NnsLaplacian: return nns_laplacian_spectrum(g1, g2);
    case SpectrumFormula::NnsSignless: return nns_signless_spectrum(g1, g2);
    case SpectrumFormula::NnsNormalized: return nns_normalized_spectrum(g1, g2);
  }
  throw std::invalid_argument("unknown spectrum formula");
}

FormulaCheck verify_spectrum_formula(SpectrumFormula f, const Graph& g1, const Graph& g2, double tol) {
  FormulaCheck out;
  out.closed_form = closed_form_spectrum(f, g1, g2);
  out.numeric = numeric_spectrum(join(formula_join(f), g1, g2), formula_matrix(f));
  out.max_deviation = max_deviation(out.closed_form, out.numeric);
  out.equal = same_spectrum(out.closed_form, out.numeric, tol);
  return out;
}

}  // namespace spectrajoin
