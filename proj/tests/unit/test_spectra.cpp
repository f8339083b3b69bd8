#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spectrajoin/joins.hpp"
#include "spectrajoin/spectra.hpp"

using namespace spectrajoin;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-9) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol));
}

/// Every numeric eigenvalue should be a root of the exact characteristic polynomial.
void check_roots_of_charpoly(const Graph& g, MatrixKind kind) {
  const Poly p = charpoly(build_matrix(g, kind));
  double scale = 1.0;
  for (const Rat& c : p.coeffs()) scale = std::max(scale, std::abs(c.get_d()));
  for (double v : numeric_spectrum(g, kind).values()) {
    CHECK(std::abs(p.eval(v)) / (scale * std::pow(1.0 + std::abs(v), p.degree())) < 1e-9);
  }
}

}  // namespace

TEST_CASE("Jacobi eigenvalues of small graphs") {
  check_close(numeric_spectrum(complete_graph(4), MatrixKind::A).values(), {-1, -1, -1, 3});
  const Graph f = disjoint_union(cycle_graph(4), complete_graph(1));
  check_close(numeric_spectrum(f, MatrixKind::A).values(), {-2, 0, 0, 0, 2});
  check_close(numeric_spectrum(complete_graph(2), MatrixKind::L).values(), {0, 2});
  check_close(jacobi_eigenvalues({2, 1, 1, 2}, 2), {1, 3});
  check_close(jacobi_eigenvalues({}, 0), {});
}

TEST_CASE("numeric eigenvalues are charpoly roots") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(2 + trial % 7, 0.5, rng);
    for (MatrixKind k : kAllKinds) check_roots_of_charpoly(g, k);
  }
}

TEST_CASE("adjacency eigenvalues carry exact integers") {
  const auto eig = adjacency_eigenvalues(petersen_graph());
  REQUIRE(eig.size() == 10);
  CHECK(eig.front().exact == Rat(3));
  CHECK(eig.back().exact == Rat(-2));
  for (const Real& v : eig) CHECK(v.is_exact());
  const auto c5 = adjacency_eigenvalues(cycle_graph(5));
  CHECK(c5.front().exact == Rat(2));
  CHECK_FALSE(c5.back().is_exact());
  CHECK(c5.back().value == doctest::Approx(-(1 + std::sqrt(5.0)) / 2));
}

TEST_CASE("spectrum merging and comparison") {
  const Spectrum s(MatrixKind::A, {Real(2), Real(-1), Real::approx(-1.0 + 1e-12), Real(0)});
  REQUIRE(s.entries().size() == 3);
  CHECK(s.entries()[0].value.exact == Rat(2));
  CHECK(s.entries()[2].multiplicity == 2);
  CHECK(s.size() == 4);
  CHECK(s.sum() == doctest::Approx(0.0));
  CHECK(s.min() == doctest::Approx(-1.0));
  CHECK(s.max() == doctest::Approx(2.0));
  const Spectrum t(MatrixKind::A, {Real(0), Real(2), Real(-1), Real(-1)});
  CHECK(same_spectrum(s, t));
  CHECK(max_deviation(s, t) < 1e-10);
  const Spectrum u(MatrixKind::A, {Real(0), Real(2), Real(-1), Real(-2)});
  CHECK_FALSE(same_spectrum(s, u));
}

TEST_CASE("exact sqrt") {
  CHECK(sqrt(Real(Rat(9, 4))).exact == Rat(3, 2));
  CHECK_FALSE(sqrt(Real(2)).is_exact());
  CHECK(sqrt(Real(2)).value == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("regular transfer on C4") {
  const Spectrum a = numeric_spectrum(cycle_graph(4), MatrixKind::A);
  check_close(regular_transfer(a, 2, MatrixKind::L).values(), {0, 2, 2, 4});
  check_close(regular_transfer(a, 2, MatrixKind::Q).values(), {0, 2, 2, 4});
  check_close(regular_transfer(a, 2, MatrixKind::NL).values(), {0, 1, 1, 2});
  const Spectrum e = numeric_spectrum(empty_graph(2), MatrixKind::A);
  CHECK_THROWS_AS(regular_transfer(e, 0, MatrixKind::NL), std::domain_error);
  CHECK_THROWS_AS(regular_transfer(regular_transfer(a, 2, MatrixKind::L), 2, MatrixKind::Q),
                  std::invalid_argument);
}

TEST_CASE("quadratic and cubic roots") {
  const auto q = solve_quadratic_real(Real(1), Real(-3), Real(2));
  CHECK(q[0].exact == Rat(1));
  CHECK(q[1].exact == Rat(2));
  CHECK_THROWS_AS(solve_quadratic_real(Real(1), Real(0), Real(1)), std::domain_error);

  const auto c1 = solve_cubic_real(1, -1, -2, 0);
  CHECK(c1[0].exact == Rat(-1));
  CHECK(c1[1].exact == Rat(0));
  CHECK(c1[2].exact == Rat(2));
  const auto c2 = solve_cubic_real(1, -6, 11, -6);
  CHECK(c2[0].exact == Rat(1));
  CHECK(c2[2].exact == Rat(3));
  const auto c3 = solve_cubic_real(6, -16, 10, 0);
  CHECK(c3[0].exact == Rat(0));
  CHECK(c3[1].exact == Rat(1));
  CHECK(c3[2].exact == Rat(5, 3));
  // x^3 - 3x + 1: three irrational roots 2cos(2pi k/9 + ...)
  const auto c4 = solve_cubic_real(1, 0, -3, 1);
  for (const Real& r : c4) CHECK(std::abs(r.value * r.value * r.value - 3 * r.value + 1) < 1e-12);
  CHECK(c4[0].value < c4[1].value);
  CHECK_THROWS_AS(solve_cubic_real(1, 0, 0, 1), std::domain_error);
}

TEST_CASE("split eigenvalue set") {
  CHECK(split_eig_set(complete_graph(3)).size() == 2);
  CHECK(split_eig_set(cycle_graph(4)).size() == 0);
  const SplitEigSet c6 = split_eig_set(cycle_graph(6));
  CHECK(c6.indices == std::vector<int>{4, 5});
}

TEST_CASE("closed forms agree with the assembled joins") {
  const std::vector<Graph> graphs = {complete_graph(2),     complete_graph(3), complete_graph(4),
                                     cycle_graph(4),        cycle_graph(5),    cycle_graph(6),
                                     complete_bipartite(2, 2), empty_graph(2)};
  int checked = 0;
  for (SpectrumFormula f : kAllSpectrumFormulas) {
    for (const Graph& g1 : graphs) {
      if (g1.edge_count() == 0 && formula_matrix(f) == MatrixKind::NL) continue;
      for (const Graph& g2 : graphs) {
        const FormulaCheck c = verify_spectrum_formula(f, g1, g2);
        CHECK_MESSAGE(c.equal, to_string(f), " ", to_graph6(g1), " ", to_graph6(g2), " dev ", c.max_deviation);
        // independent check: numeric spectrum straight from the definition join
        const Graph j = oracle::definition_join(g1, g2, formula_join(f) == JoinKind::NNS);
        CHECK(same_spectrum(c.closed_form, numeric_spectrum(j, formula_matrix(f))));
        for (const SpectrumEntry& e : c.closed_form.entries()) {
          if (!e.value.exact) continue;
          Rat canonical = *e.value.exact;
          canonical.canonicalize();
          CHECK(to_string(canonical) == to_string(*e.value.exact));
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 250);
}

TEST_CASE("NNS normalized Laplacian cases") {
  SplitCase used = SplitCase::None;
  nns_normalized_spectrum(cycle_graph(4), cycle_graph(5), &used);
  CHECK(used == SplitCase::None);
  nns_normalized_spectrum(complete_graph(3), cycle_graph(4), &used);
  CHECK(used == SplitCase::All);
  nns_normalized_spectrum(cycle_graph(6), complete_graph(2), &used);
  CHECK(used == SplitCase::Mixed);
  // K3 nns G: split vertices are isolated, so 0 appears n1 + 1 times
  const Spectrum s = nns_normalized_spectrum(complete_graph(3), cycle_graph(4));
  int zeros = 0;
  for (double v : s.values()) zeros += std::abs(v) < 1e-9 ? 1 : 0;
  CHECK(zeros == 4);
}

TEST_CASE("NS normalized Laplacian values for K2 and C4") {
  // Eigenvector constructions: for adjacency eigenvalue lambda of G1 (lambda != r1),
  // NL eigenvalues are the roots of a quadratic determined by lambda, r1 and n2.
  const Graph g1 = cycle_graph(4);
  const Graph g2 = complete_graph(2);
  const Spectrum closed = ns_normalized_spectrum(g1, g2);
  const Spectrum numeric = numeric_spectrum(ns_join(g1, g2), MatrixKind::NL);
  CHECK(same_spectrum(closed, numeric));
  CHECK(closed.size() == 10);
}

TEST_CASE("formula lookup") {
  CHECK(formula_for(JoinKind::NS, MatrixKind::NL) == SpectrumFormula::NsNormalized);
  CHECK(formula_for(JoinKind::NNS, MatrixKind::Q) == SpectrumFormula::NnsSignless);
  CHECK_FALSE(formula_for(JoinKind::NS, MatrixKind::A).has_value());
  CHECK(parse_spectrum_formula("6.2") == SpectrumFormula::NnsLaplacian);
  CHECK(to_string(SpectrumFormula::NsNormalized) == "5.1");
  CHECK_THROWS_AS(parse_spectrum_formula("9.9"), std::invalid_argument);
  CHECK_THROWS(closed_form_spectrum(SpectrumFormula::NnsAdjacency, path_graph(3), complete_graph(2)));
}
