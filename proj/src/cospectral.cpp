#include "spectrajoin/cospectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spectrajoin {

Poly graph_charpoly(const Graph& g, MatrixKind kind) { return charpoly(build_matrix(g, kind)); }

bool are_cospectral_exact(const Graph& g, const Graph& h, MatrixKind kind) {
  if (g.order() != h.order()) return false;
  const bool same = graph_charpoly(g, kind) == graph_charpoly(h, kind);
  if (same && kind == MatrixKind::A && g.edge_count() != h.edge_count()) {
    throw std::logic_error("A-cospectral graphs must have equal edge counts");
  }
  return same;
}

bool NicsReport::nics() const {
  if (isomorphic || verdicts.empty()) return false;
  return std::all_of(verdicts.begin(), verdicts.end(), [](const KindVerdict& v) { return v.cospectral; });
}

bool NicsReport::consistent() const {
  for (const auto& v : verdicts) {
    if (v.cospectral != (v.charpoly_g == v.charpoly_h && g.order() == h.order())) return false;
  }
  if (witness && !is_isomorphism(g, h, *witness)) return false;
  return isomorphic == witness.has_value();
}

NicsReport snics_verdict(const Graph& g, const Graph& h, const std::vector<MatrixKind>& kinds) {
  NicsReport report;
  report.g = g;
  report.h = h;
  for (MatrixKind kind : kinds) {
    KindVerdict v;
    v.kind = kind;
    v.charpoly_g = graph_charpoly(g, kind);
    v.charpoly_h = graph_charpoly(h, kind);
    v.cospectral = g.order() == h.order() && v.charpoly_g == v.charpoly_h;
    report.verdicts.push_back(std::move(v));
  }
  IsomorphismResult iso = are_isomorphic(g, h);
  report.isomorphic = iso.isomorphic;
  report.witness = std::move(iso.witness);
  report.g_regular = is_regular(g).has_value();
  report.h_regular = is_regular(h).has_value();
  return report;
}

// ---- Characteristic-polynomial identities ------------------------------------

std::string_view to_string(CharpolyIdentity id) {
  switch (id) {
    case CharpolyIdentity::AdjacencyNns: return "4.1a";
    case CharpolyIdentity::AdjacencyNs: return "4.1b";
    case CharpolyIdentity::LaplacianNns: return "4.2a";
    case CharpolyIdentity::LaplacianNs: return "4.2b";
    case CharpolyIdentity::SignlessNns: return "4.3a";
    case CharpolyIdentity::SignlessNs: return "4.3b";
  }
  return "?";
}

CharpolyIdentity parse_charpoly_identity(std::string_view label) {
  for (CharpolyIdentity id : kAllIdentities) {
    if (to_string(id) == label) return id;
  }
  throw std::invalid_argument("unknown identity '" + std::string(label) + "'");
}

MatrixKind identity_matrix(CharpolyIdentity id) {
  switch (id) {
    case CharpolyIdentity::AdjacencyNns:
    case CharpolyIdentity::AdjacencyNs: return MatrixKind::A;
    case CharpolyIdentity::LaplacianNns:
    case CharpolyIdentity::LaplacianNs: return MatrixKind::L;
    case CharpolyIdentity::SignlessNns:
    case CharpolyIdentity::SignlessNs: return MatrixKind::Q;
  }
  return MatrixKind::A;
}

JoinKind identity_join(CharpolyIdentity id) {
  switch (id) {
    case CharpolyIdentity::AdjacencyNns:
    case CharpolyIdentity::LaplacianNns:
    case CharpolyIdentity::SignlessNns: return JoinKind::NNS;
    default: return JoinKind::NS;
  }
}

namespace {

Rat det_or_one(const ExactMatrix& m) { return m.rows() == 0 ? Rat(1) : determinant(m); }

Rat power(const Rat& base, int e) {
  Rat out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

ExactMatrix degree_matrix(const Graph& g) {
  std::vector<Rat> d;
  for (int v : g.degrees()) d.emplace_back(v);
  return ExactMatrix::diagonal(d);
}

/// det(B) * [1 - gamma2 * Gamma_M(at)] where B = at*I - M; absent if B is singular.
std::optional<Rat> coupled_block(const ExactMatrix& m, const Rat& at, const Rat& gamma2) {
  const Rat det_b = det_or_one(shifted(at, m));
  if (det_b == 0) return std::nullopt;
  const auto gamma1 = coronal_at(m, at);
  if (!gamma1) return std::nullopt;
  return det_b * (Rat(1) - gamma2 * *gamma1);
}

}  // namespace

std::optional<Rat> identity_formula_at(CharpolyIdentity id, const Graph& g1, const Graph& g2, const Rat& x) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 == 0) throw std::invalid_argument("the identities need n1 >= 1");
  const bool nns = identity_join(id) == JoinKind::NNS;
  const MatrixKind kind = identity_matrix(id);
  const ExactMatrix a1 = build_matrix(g1, MatrixKind::A);
  // Cross block between u and u': complement adjacency for NNS, adjacency for NS.
  const ExactMatrix cross = nns ? build_matrix(complement(g1), MatrixKind::A) : a1;

  if (kind == MatrixKind::A) {
    if (x == 0) return std::nullopt;
    const ExactMatrix x2 = build_matrix(g2, MatrixKind::A);
    const Rat f2 = det_or_one(shifted(x, x2));
    if (f2 == 0) return std::nullopt;
    const auto gamma2 = coronal_at(x2, x);
    if (!gamma2) return std::nullopt;
    const ExactMatrix m = a1 + (Rat(1) / x) * (cross * cross);
    const auto block = coupled_block(m, x, *gamma2);
    if (!block) return std::nullopt;
    return power(x, n1) * f2 * *block;
  }

  const ExactMatrix x1 = build_matrix(g1, kind);
  const ExactMatrix x2 = build_matrix(g2, kind);
  const ExactMatrix d1 = degree_matrix(g1);
  const Rat shift2 = x - n1;
  const Rat f2 = det_or_one(shifted(shift2, x2));
  if (f2 == 0) return std::nullopt;
  const auto gamma2 = coronal_at(x2, shift2);
  if (!gamma2) return std::nullopt;

  // P is the u' diagonal block of xI - X(join).
  const ExactMatrix ident = ExactMatrix::identity(static_cast<std::size_t>(n1));
  const ExactMatrix p = nns ? (x - n1 + 1) * ident + d1 : x * ident - d1;
  const Rat det_p = determinant(p);
  if (det_p == 0) return std::nullopt;
  const auto p_inv = inverse(p);
  if (!p_inv) return std::nullopt;
  const ExactMatrix coupling = cross * *p_inv * cross;
  const ExactMatrix m = nns ? x1 - d1 + coupling : x1 + d1 + coupling;
  const Rat at = nns ? Rat(x - n1 - n2 + 1) : Rat(x - n2);
  const auto block = coupled_block(m, at, *gamma2);
  if (!block) return std::nullopt;
  return f2 * det_p * *block;
}

IdentityCheck verify_charpoly_identity(CharpolyIdentity id, const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 == 0) throw std::invalid_argument("the identities need n1 >= 1");
  IdentityCheck check;
  const Graph joined = join(identity_join(id), g1, g2);
  check.lhs = graph_charpoly(joined, identity_matrix(id));

  // Degree 2n1+n2, sampled at two extra points so that a wrong formula cannot be
  // absorbed by the interpolant. Points start beyond every eigenvalue involved.
  const int degree = 2 * n1 + n2;
  const int needed = degree + 3;
  const int start = 2 * (n1 + n2) + 2 * std::max(g1.max_degree(), g2.max_degree()) + 2;
  std::vector<std::pair<Rat, Rat>> points;
  constexpr int kMaxTries = 10000;
  for (int k = start; static_cast<int>(points.size()) < needed && k < start + kMaxTries; ++k) {
    if (const auto v = identity_formula_at(id, g1, g2, Rat(k))) points.emplace_back(Rat(k), *v);
  }
  if (static_cast<int>(points.size()) < needed) throw std::runtime_error("not enough valid sample points");
  check.samples = needed;
  check.rhs = interpolate(points);
  check.equal = check.lhs == check.rhs;
  return check;
}

// ---- NICS constructions --------------------------------------------------------

std::string_view to_string(NicsTemplate t) {
  switch (t) {
    case NicsTemplate::NsFixedLeft: return "cor4.4a";
    case NicsTemplate::NnsFixedLeft: return "cor4.4b";
    case NicsTemplate::NsFixedRight: return "cor4.5a";
    case NicsTemplate::NnsFixedRight: return "cor4.5b";
    case NicsTemplate::NsRegular: return "cor5.2";
    case NicsTemplate::NnsRegular: return "cor6.5";
  }
  return "?";
}

NicsTemplate parse_nics_template(std::string_view label) {
  for (NicsTemplate t : {NicsTemplate::NsFixedLeft, NicsTemplate::NnsFixedLeft, NicsTemplate::NsFixedRight,
                         NicsTemplate::NnsFixedRight, NicsTemplate::NsRegular, NicsTemplate::NnsRegular}) {
    if (to_string(t) == label) return t;
  }
  throw std::invalid_argument("unknown template '" + std::string(label) + "'");
}

int template_arity(NicsTemplate t) {
  return t == NicsTemplate::NsRegular || t == NicsTemplate::NnsRegular ? 4 : 3;
}

std::vector<MatrixKind> template_kinds(NicsTemplate t) {
  if (template_arity(t) == 4) return {MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::NL};
  return {MatrixKind::A, MatrixKind::L, MatrixKind::Q};
}

namespace {

JoinKind template_join(NicsTemplate t) {
  switch (t) {
    case NicsTemplate::NsFixedLeft:
    case NicsTemplate::NsFixedRight:
    case NicsTemplate::NsRegular: return JoinKind::NS;
    default: return JoinKind::NNS;
  }
}

void require_regular_cospectral(const Graph& a, const Graph& b, const char* what, bool distinct) {
  const auto ra = is_regular(a);
  const auto rb = is_regular(b);
  if (!ra || !rb) throw std::invalid_argument(std::string(what) + " must both be regular");
  if (!are_cospectral_exact(a, b, MatrixKind::A)) throw std::invalid_argument(std::string(what) + " must be A-cospectral");
  if (distinct && are_isomorphic(a, b).isomorphic) {
    throw std::invalid_argument(std::string(what) + " must be non-isomorphic");
  }
}

}  // namespace

NicsReport nics_pair(NicsTemplate t, const std::vector<Graph>& inputs) {
  if (static_cast<int>(inputs.size()) != template_arity(t)) {
    throw std::invalid_argument(std::string(to_string(t)) + " expects " + std::to_string(template_arity(t)) +
                                " input graphs");
  }
  const JoinKind kind = template_join(t);
  Graph left;
  Graph right;
  switch (t) {
    case NicsTemplate::NsFixedLeft:
    case NicsTemplate::NnsFixedLeft:
      require_regular_cospectral(inputs[1], inputs[2], "F and H", true);
      left = join(kind, inputs[0], inputs[1]);
      right = join(kind, inputs[0], inputs[2]);
      break;
    case NicsTemplate::NsFixedRight:
    case NicsTemplate::NnsFixedRight:
      require_regular_cospectral(inputs[1], inputs[2], "F and H", true);
      left = join(kind, inputs[1], inputs[0]);
      right = join(kind, inputs[2], inputs[0]);
      break;
    case NicsTemplate::NsRegular:
    case NicsTemplate::NnsRegular:
      require_regular_cospectral(inputs[0], inputs[1], "G1 and H1", false);
      require_regular_cospectral(inputs[2], inputs[3], "G2 and H2", true);
      left = join(kind, inputs[0], inputs[2]);
      right = join(kind, inputs[1], inputs[3]);
      break;
  }
  NicsReport report = snics_verdict(left, right, template_kinds(t));
  if (!report.nics()) {
    std::string failed;
    for (const auto& v : report.verdicts) {
      if (!v.cospectral) failed += std::string(" ") + std::string(to_string(v.kind));
    }
    if (report.isomorphic) failed += " (isomorphic)";
    throw std::logic_error(std::string(to_string(t)) + " certificate failed:" + failed);
  }
  return report;
}

bool regular_equivalence_check(const Graph& g, const Graph& h) {
  const auto rg = is_regular(g);
  const auto rh = is_regular(h);
  if (!rg || !rh) throw std::invalid_argument("regular_equivalence_check needs regular graphs");
  if (g.order() != h.order() || *rg != *rh) throw std::invalid_argument("graphs must share order and degree");
  const bool first = are_cospectral_exact(g, h, MatrixKind::A);
  for (MatrixKind kind : {MatrixKind::L, MatrixKind::Q, MatrixKind::NL}) {
    if (are_cospectral_exact(g, h, kind) != first) return false;
  }
  return true;
}

// ---- Probe ------------------------------------------------------------------------

std::string_view to_string(ProbeSide side) {
  return side == ProbeSide::PairRight ? "right-fixed-G" : "left-fixed-H";
}

ProbeSide parse_probe_side(std::string_view label) {
  if (label == "right-fixed-G") return ProbeSide::PairRight;
  if (label == "left-fixed-H") return ProbeSide::PairLeft;
  throw std::invalid_argument("unknown probe side '" + std::string(label) + "' (right-fixed-G or left-fixed-H)");
}

ProbeReport conjecture_probe(ProbeSide side, const Graph& g, const Graph& h1, const Graph& h2) {
  require_regular_cospectral(h1, h2, "the probe pair", true);
  ProbeReport out;
  out.side = side;
  for (JoinKind kind : {JoinKind::NS, JoinKind::NNS}) {
    ProbeResult result;
    result.join = kind;
    const Graph a = side == ProbeSide::PairRight ? join(kind, g, h1) : join(kind, h1, g);
    const Graph b = side == ProbeSide::PairRight ? join(kind, g, h2) : join(kind, h2, g);
    result.report = snics_verdict(a, b, {MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::NL});
    result.nl_cospectral = result.report.verdicts.back().cospectral;
    out.results.push_back(std::move(result));
  }
  return out;
}

}  // namespace spectrajoin
