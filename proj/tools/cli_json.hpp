#pragma once

// JSON encodings shared by the command-line subcommands.

#include <json.hpp>

#include "spectrajoin/cospectral.hpp"
#include "spectrajoin/spectra.hpp"

namespace spectrajoin::cli {

using nlohmann::json;

inline json graph_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  j["graph6"] = to_graph6(g);
  return j;
}

inline json poly_json(const Poly& p) {
  json j;
  j["coeffs"] = json::array();
  for (const Rat& c : p.coeffs()) j["coeffs"].push_back(to_string(c));
  j["text"] = p.to_string();
  return j;
}

inline json real_json(const Real& v) {
  if (v.exact) {
    if (v.exact->get_den() == 1 && v.exact->get_num().fits_slong_p()) return json(v.exact->get_num().get_si());
    return json(to_string(*v.exact));
  }
  return json(v.value);
}

inline json spectrum_json(const Spectrum& s) {
  json j;
  j["kind"] = std::string(to_string(s.kind()));
  j["entries"] = json::array();
  for (const auto& e : s.entries()) j["entries"].push_back({{"value", real_json(e.value)}, {"mult", e.multiplicity}});
  return j;
}

inline json report_json(const NicsReport& r) {
  json j;
  j["g"] = graph_json(r.g);
  j["h"] = graph_json(r.h);
  j["isomorphic"] = r.isomorphic;
  if (r.witness) j["witness"] = *r.witness;
  j["regular"] = {r.g_regular, r.h_regular};
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts) {
    j["verdicts"].push_back({{"kind", std::string(to_string(v.kind))},
                             {"cospectral", v.cospectral},
                             {"charpoly_g", poly_json(v.charpoly_g)},
                             {"charpoly_h", poly_json(v.charpoly_h)}});
  }
  j["nics"] = r.nics();
  j["consistent"] = r.consistent();
  return j;
}

}  // namespace spectrajoin::cli
