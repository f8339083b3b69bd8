#pragma once

/// \file spectra.hpp
/// Numeric eigenvalues of the four graph matrices and the closed-form spectra of
/// splitting joins of regular graphs.

#include <array>
#include <optional>
#include <vector>

#include "spectrajoin/exact.hpp"
#include "spectrajoin/graph.hpp"
#include "spectrajoin/joins.hpp"

namespace spectrajoin {

/// A real number carried as a double, plus its exact rational value when known.
/// Arithmetic keeps the exact part as long as every operand has one.
struct Real {
  double value = 0.0;
  std::optional<Rat> exact;

  Real() = default;
  Real(const Rat& q) : value(q.get_d()), exact(q) {}  // NOLINT
  Real(long q) : Real(Rat(q)) {}                      // NOLINT
  Real(int q) : Real(Rat(q)) {}                       // NOLINT
  static Real approx(double v) {
    Real r;
    r.value = v;
    return r;
  }

  bool is_exact() const { return exact.has_value(); }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
};

/// Square root; exact when the argument is an exact perfect square of a rational.
Real sqrt(const Real& x);

struct SpectrumEntry {
  Real value;
  int multiplicity = 0;
};

/// Multiset of eigenvalues of one matrix kind, merged at a tolerance and stored
/// in descending order.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(MatrixKind kind, std::vector<Real> values, double merge_tol = 1e-8);

  MatrixKind kind() const { return kind_; }
  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  /// Total multiplicity.
  std::size_t size() const;
  /// All values with multiplicity expanded, ascending.
  std::vector<double> values() const;
  double sum() const;
  double min() const;
  double max() const;

 private:
  MatrixKind kind_ = MatrixKind::A;
  std::vector<SpectrumEntry> entries_;
};

/// Sorted-multiset comparison with absolute tolerance tol * (1 + |value|).
bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol = 1e-8);
double max_deviation(const Spectrum& a, const Spectrum& b);

/// Eigenvalues of a symmetric row-major n x n matrix by cyclic Jacobi rotations,
/// ascending. Iterates until the off-diagonal Frobenius norm is below `off_tol`.
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, std::size_t n, double off_tol = 1e-12);

Spectrum numeric_spectrum(const Graph& g, MatrixKind kind);

/// Adjacency eigenvalues, descending; integer eigenvalues are exact (taken from the
/// characteristic polynomial), the rest come from the Jacobi solver.
std::vector<Real> adjacency_eigenvalues(const Graph& g);

/// Maps an adjacency spectrum of an r-regular graph to the L, Q or NL spectrum.
/// Throws std::domain_error for an NL target with r = 0 and std::invalid_argument
/// for a non-adjacency input.
Spectrum regular_transfer(const Spectrum& adjacency, int r, MatrixKind target);

/// Three real roots (ascending) of c3 x^3 + c2 x^2 + c1 x + c0. Rational roots are
/// found exactly; otherwise the trigonometric form is used. Throws std::domain_error
/// if the cubic has a non-real pair.
std::array<Real, 3> solve_cubic_real(const Rat& c3, const Rat& c2, const Rat& c1, const Rat& c0);

/// Both real roots (ascending) of a x^2 + b x + c; throws std::domain_error when complex.
std::array<Real, 2> solve_quadratic_real(const Real& a, const Real& b, const Real& c);

/// 1-based positions i in 2..n1 (adjacency eigenvalues in descending order) with
/// lambda_i = -1 exactly, i.e. normalized Laplacian eigenvalue 1 + 1/r1.
struct SplitEigSet {
  std::vector<int> indices;
  std::size_t size() const { return indices.size(); }
};

SplitEigSet split_eig_set(const Graph& g1);

/// Which closed form the NNS normalized Laplacian spectrum used.
enum class SplitCase { None, All, Mixed };

/// Normalized Laplacian spectrum of ns_join(g1, g2) for r1-regular g1 (r1 >= 1)
/// and regular g2.
Spectrum ns_normalized_spectrum(const Graph& g1, const Graph& g2);

Spectrum nns_adjacency_spectrum(const Graph& g1, const Graph& g2);
Spectrum nns_laplacian_spectrum(const Graph& g1, const Graph& g2);
Spectrum nns_signless_spectrum(const Graph& g1, const Graph& g2);
Spectrum nns_normalized_spectrum(const Graph& g1, const Graph& g2, SplitCase* used_case = nullptr);

/// The five closed forms, addressed uniformly.
enum class SpectrumFormula { NsNormalized, NnsAdjacency, NnsLaplacian, NnsSignless, NnsNormalized };

inline constexpr SpectrumFormula kAllSpectrumFormulas[] = {
    SpectrumFormula::NsNormalized, SpectrumFormula::NnsAdjacency, SpectrumFormula::NnsLaplacian,
    SpectrumFormula::NnsSignless, SpectrumFormula::NnsNormalized};

/// Interface labels "5.1", "6.1", "6.2", "6.3", "6.4".
std::string_view to_string(SpectrumFormula f);
SpectrumFormula parse_spectrum_formula(std::string_view label);
JoinKind formula_join(SpectrumFormula f);
MatrixKind formula_matrix(SpectrumFormula f);
/// The closed form for (join, matrix), if there is one.
std::optional<SpectrumFormula> formula_for(JoinKind join, MatrixKind kind);

Spectrum closed_form_spectrum(SpectrumFormula f, const Graph& g1, const Graph& g2);

struct FormulaCheck {
  Spectrum closed_form;
  Spectrum numeric;  ///< Jacobi spectrum of the assembled join
  double max_deviation = 0.0;
  bool equal = false;
};

/// Compares a closed form with the numeric spectrum of the join (tolerance 1e-8).
FormulaCheck verify_spectrum_formula(SpectrumFormula f, const Graph& g1, const Graph& g2, double tol = 1e-8);

}  // namespace spectrajoin
