#ifndef COXTODA_JSON_IO_HPP
#define COXTODA_JSON_IO_HPP

#include <json.hpp>

#include "coxtoda/cartan.hpp"
#include "coxtoda/cell.hpp"
#include "coxtoda/dynamics.hpp"
#include "coxtoda/hamiltonians.hpp"
#include "coxtoda/laurent.hpp"
#include "coxtoda/poisson.hpp"
#include "coxtoda/weyl.hpp"

namespace coxtoda {

using nlohmann::json;

inline json laurent_to_json(const MultiLaurent& f) {
  json terms = json::array();
  for (const auto& [key, c] : f.terms()) {
    terms.push_back({{"coeff", rational_str(c)}, {"exponents", key}});
  }
  return {{"variables", f.variables()}, {"terms", terms}};
}

inline MultiLaurent laurent_from_json(const json& j) {
  std::vector<std::string> vars =
      j.at("variables").get<std::vector<std::string>>();
  MultiLaurent total;
  for (const auto& term : j.at("terms")) {
    Rational c = rational_parse(term.at("coeff").get<std::string>());
    std::vector<int> exps = term.at("exponents").get<std::vector<int>>();
    std::vector<std::pair<std::string, int>> factors;
    for (size_t i = 0; i < vars.size(); ++i)
      if (exps.at(i) != 0) factors.emplace_back(vars[i], exps[i]);
    total += MultiLaurent::monomial(c, factors);
  }
  return total;
}

inline json cartan_to_json(const CartanData& data) {
  json j;
  j["kind"] = data.is_affine() ? "affine" : "finite";
  j["matrix"] = data.matrix();
  json d = json::array();
  for (const auto& x : data.symmetrizers()) d.push_back(rational_str(x));
  j["symmetrizers"] = d;
  if (data.is_affine()) j["marks"] = data.marks();
  return j;
}

inline json weight_to_json(const Weight& w) {
  json j = json::array();
  for (const auto& x : w) j.push_back(rational_str(x));
  return j;
}

inline json mu_report_to_json(const MuChainReport& report) {
  json j;
  j["mu"] = weight_to_json(report.mu);
  j["ok"] = report.ok;
  json chain = json::array();
  for (int jdx = static_cast<int>(report.partials.size()) - 1; jdx >= 0; --jdx)
    chain.push_back({{"stage", jdx},
                     {"weight", weight_to_json(report.partials[jdx])},
                     {"expected", weight_to_json(report.expected[jdx])}});
  j["chain"] = chain;
  return j;
}

inline json structure_to_json(const PoissonStructure& ps) {
  json entries = json::array();
  for (size_t a = 0; a < ps.variables.size(); ++a)
    for (size_t b = a + 1; b < ps.variables.size(); ++b)
      if (ps.pi[a][b] != 0)
        entries.push_back({ps.variables[a], ps.variables[b],
                           rational_str(ps.pi[a][b])});
  return {{"variables", ps.variables}, {"brackets", entries}};
}

inline json reduced_coords_to_json(const ReducedCoords& rc) {
  json j;
  for (int i = 0; i <= rc.rank(); ++i) {
    j["T" + std::to_string(i)] = rc.T[i].str();
    j["S" + std::to_string(i)] = rc.S[i].str();
  }
  j["Q"] = rc.Q.str();
  return j;
}

inline json factor_coords_to_json(const FactorCoords& fc) {
  json j;
  for (int i = 0; i <= fc.rank(); ++i) {
    j["A" + std::to_string(i)] = fc.A[i].str();
    j["B" + std::to_string(i)] = fc.B[i].str();
    j["C" + std::to_string(i)] = fc.C[i].str();
    j["D" + std::to_string(i)] = fc.D[i].str();
  }
  return j;
}

inline json hamiltonians_to_json(const HamiltonianSet& hs) {
  json j = json::array();
  for (size_t i = 0; i < hs.entries.size(); ++i)
    j.push_back({{"name", "H" + std::to_string(i + 1)},
                 {"provenance", hs.provenance[i]},
                 {"string", hs.entries[i].str()},
                 {"poly", laurent_to_json(hs.entries[i])}});
  return j;
}

inline json commute_report_to_json(const CommuteReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs)
    pairs.push_back({{"i", p.i}, {"j", p.j}, {"zero", p.zero}});
  return {{"all_zero", report.all_zero}, {"pairs", pairs}};
}

inline json drift_to_json(const std::vector<DriftEntry>& drifts) {
  json j = json::array();
  for (const auto& d : drifts)
    j.push_back({{"name", d.name},
                 {"drift", d.drift},
                 {"relative", d.relative}});
  return j;
}

}  // namespace coxtoda

#endif
