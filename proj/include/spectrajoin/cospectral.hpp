#pragma once

/// \file cospectral.hpp
/// Exact cospectrality, characteristic-polynomial identities for splitting joins,
/// NICS pair constructions, regular-graph search and the normalized-Laplacian probe.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectrajoin/exact.hpp"
#include "spectrajoin/graph.hpp"
#include "spectrajoin/joins.hpp"

namespace spectrajoin {

/// Exact characteristic polynomial of the chosen matrix (NL via I - D^{-1}A).
Poly graph_charpoly(const Graph& g, MatrixKind kind);

/// Equal order and equal exact characteristic polynomials.
bool are_cospectral_exact(const Graph& g, const Graph& h, MatrixKind kind);

struct KindVerdict {
  MatrixKind kind = MatrixKind::A;
  Poly charpoly_g;
  Poly charpoly_h;
  bool cospectral = false;
};

/// Certificate for a candidate pair: per-kind charpolys and a complete isomorphism test.
struct NicsReport {
  Graph g;
  Graph h;
  std::vector<KindVerdict> verdicts;
  bool isomorphic = false;
  std::optional<std::vector<int>> witness;
  bool g_regular = false;
  bool h_regular = false;

  /// Cospectral for every listed kind and not isomorphic.
  bool nics() const;
  /// Recomputes each verdict from the attached polynomials.
  bool consistent() const;
};

NicsReport snics_verdict(const Graph& g, const Graph& h, const std::vector<MatrixKind>& kinds);

// ---- Characteristic-polynomial identities for arbitrary G1, G2 ---------------

/// The six identities, (matrix, join): A/L/Q for the NNS join and for the NS join.
enum class CharpolyIdentity { AdjacencyNns, AdjacencyNs, LaplacianNns, LaplacianNs, SignlessNns, SignlessNs };

inline constexpr CharpolyIdentity kAllIdentities[] = {
    CharpolyIdentity::AdjacencyNns, CharpolyIdentity::AdjacencyNs, CharpolyIdentity::LaplacianNns,
    CharpolyIdentity::LaplacianNs,  CharpolyIdentity::SignlessNns, CharpolyIdentity::SignlessNs};

/// Interface labels "4.1a", "4.1b", "4.2a", "4.2b", "4.3a", "4.3b".
std::string_view to_string(CharpolyIdentity id);
CharpolyIdentity parse_charpoly_identity(std::string_view label);
MatrixKind identity_matrix(CharpolyIdentity id);
JoinKind identity_join(CharpolyIdentity id);

struct IdentityCheck {
  Poly lhs;  ///< charpoly of the assembled join matrix
  Poly rhs;  ///< product formula, sampled and interpolated
  bool equal = false;
  int samples = 0;
};

/// Evaluates the factorised formula (determinants, Schur complements, coronals)
/// at integer sample points and interpolates. Requires n1 >= 1.
IdentityCheck verify_charpoly_identity(CharpolyIdentity id, const Graph& g1, const Graph& g2);

/// Value of the factorised formula at one point; absent where a factor is undefined.
std::optional<Rat> identity_formula_at(CharpolyIdentity id, const Graph& g1, const Graph& g2, const Rat& x);

// ---- NICS constructions ------------------------------------------------------

enum class NicsTemplate {
  NsFixedLeft,    ///< G ns F vs G ns H, F and H regular cospectral
  NnsFixedLeft,   ///< G nns F vs G nns H
  NsFixedRight,   ///< F ns G vs H ns G
  NnsFixedRight,  ///< F nns G vs H nns G
  NsRegular,      ///< G1 ns G2 vs H1 ns H2, all regular
  NnsRegular,     ///< G1 nns G2 vs H1 nns H2, all regular
};

/// Interface labels "cor4.4a", "cor4.4b", "cor4.5a", "cor4.5b", "cor5.2", "cor6.5".
std::string_view to_string(NicsTemplate t);
NicsTemplate parse_nics_template(std::string_view label);
/// Number of input graphs: 3 (G, F, H) or 4 (G1, H1, G2, H2).
int template_arity(NicsTemplate t);
/// Matrix kinds certified by the template.
std::vector<MatrixKind> template_kinds(NicsTemplate t);

/// Builds the template's pair after checking its preconditions
/// (std::invalid_argument), and certifies it; a failed certificate raises
/// std::logic_error.
NicsReport nics_pair(NicsTemplate t, const std::vector<Graph>& inputs);

// ---- Regular graphs ------------------------------------------------------------

/// All r-regular graphs on n vertices, one per isomorphism class, in a
/// deterministic order. Requires 0 <= r < n <= 12.
std::vector<Graph> regular_graphs(int n, int r);

struct RegularSearchResult {
  int n = 0;
  int r = 0;
  std::vector<Graph> graphs;                  ///< one per isomorphism class
  std::vector<std::pair<int, int>> pairs;     ///< indices of A-cospectral graphs, i < j
};

/// Exhaustive search for non-isomorphic A-cospectral r-regular graphs on n vertices.
/// Requires 0 <= r < n <= 10.
RegularSearchResult find_regular_cospectral_pairs(int n, int r);

/// Cache directory: $SPECTRAJOIN_CACHE_DIR, else ~/.cache/spectrajoin.
std::filesystem::path default_cache_dir();

/// Same result, read from / written to `<dir>/regular_n{n}_r{r}.json`. Cached pairs
/// are re-verified on load; an invalid cache file is regenerated.
RegularSearchResult cached_regular_search(int n, int r, const std::filesystem::path& dir);

std::string search_to_json(const RegularSearchResult& result);
RegularSearchResult search_from_json(const std::string& text);

/// First non-isomorphic cospectral regular pair on 10 vertices, searching r = 3, 4, 5.
std::optional<std::pair<Graph, Graph>> first_regular_pair_on_ten(const std::filesystem::path& cache_dir);

/// For regular G, H of equal order and degree: whether A, L, Q, NL cospectrality
/// verdicts all agree. Throws std::invalid_argument otherwise.
bool regular_equivalence_check(const Graph& g, const Graph& h);

// ---- Normalized Laplacian probe (experimental) -------------------------------

/// Which side the cospectral pair occupies: PairRight builds G*H1 vs G*H2,
/// PairLeft builds H1*G vs H2*G.
enum class ProbeSide { PairRight, PairLeft };

/// Interface labels "right-fixed-G" and "left-fixed-H".
std::string_view to_string(ProbeSide side);
ProbeSide parse_probe_side(std::string_view label);

struct ProbeResult {
  JoinKind join = JoinKind::NS;
  NicsReport report;  ///< all four kinds
  bool nl_cospectral = false;
};

struct ProbeReport {
  ProbeSide side = ProbeSide::PairRight;
  std::vector<ProbeResult> results;  ///< NS then NNS
};

/// Experimental: a false NL verdict is reported, not raised. Throws
/// std::invalid_argument unless (h1, h2) are regular, cospectral and non-isomorphic.
ProbeReport conjecture_probe(ProbeSide side, const Graph& g, const Graph& h1, const Graph& h2);

}  // namespace spectrajoin
