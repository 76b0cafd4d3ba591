#pragma once

#include "qtwist/checks.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace qtwist {

using nlohmann::json;

/// Matrix dump: {"dim": d, "entries": [[row, col, "<canonical string>"],...]}
/// with entries sorted by (row, col).
template <class Ctx>
json matrix_to_json(const Ctx& ctx,
                    const SparseMat<typename Ctx::Scalar>& m) {
  json entries = json::array();
  for (const auto& [rc, v] : m.entries())
    entries.push_back(json::array({rc.first, rc.second, ctx.display(v)}));
  return json{{"dim", m.dim()}, {"entries", entries}};
}

/// Monomial coefficient rendering: "mu1*mu2", "-3/2*b1^2", "1", ...
std::string monomial_to_string(const Monomial& m, const VarTable& vars);
Monomial monomial_from_string(const std::string& text, const VarTable& vars);

json word_to_json(const Word& w);
Word word_from_json(const json& j);

json twist_to_json(const TwistElement& el, const VarTable& vars);
TwistElement twist_from_json(const json& j, const VarTable& vars);

inline json witness_to_json(const Witness& w) {
  return json{{"row", w.row}, {"col", w.col}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline json report_to_json(const CheckReport& r) {
  json j{{"check", r.check}, {"N", r.N},       {"mode", r.mode},
         {"pass", r.pass},   {"millis", r.millis}};
  j["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// Assignment file {"s": "2", "mu1": "3", ...} with rational strings.
inline std::map<std::string, BigRat> assignment_from_json(const json& j) {
  std::map<std::string, BigRat> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_string()) {
      out[it.key()] = rat_from_string(it.value().get<std::string>());
    } else if (it.value().is_number_integer()) {
      out[it.key()] = BigRat(it.value().get<long long>());
    } else {
      throw Error("assignment values must be rational strings");
    }
  }
  return out;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace qtwist
