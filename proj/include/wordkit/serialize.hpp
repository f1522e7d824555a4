#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wordkit/avoidance.hpp"
#include "wordkit/construct.hpp"
#include "wordkit/errors.hpp"
#include "wordkit/exact.hpp"
#include "wordkit/morphic.hpp"
#include "wordkit/witness.hpp"
#include "wordkit/word.hpp"

// JSON shapes are part of the CLI contract: nlohmann::json keeps keys
// sorted, so dumps are byte-deterministic for fixed inputs. All positions
// are 1-based; words travel as text with the alphabet size alongside.

namespace wordkit {

inline nlohmann::json to_json(position p) {
  return {{"start", p.start}, {"end", p.end}};
}

inline nlohmann::json to_json(const power_witness& pw) {
  return {{"position", to_json(pw.pos)},
          {"base", pw.base.render()},
          {"exponent", pw.exponent}};
}

inline nlohmann::json to_json(const decomp_witness& dw) {
  nlohmann::json factors = nlohmann::json::array();
  for (const word& f : dw.factors) factors.push_back(f.render());
  return {{"position", to_json(dw.pos)},
          {"factors", factors},
          {"strong", dw.strong}};
}

namespace detail {

inline nlohmann::json outcome_json(const analysis_report& report,
                                   outcome_kind kind) {
  nlohmann::json out{{"kind", to_string(kind)}};
  if (kind == outcome_kind::power)
    out.update(to_json(*report.power));
  else if (kind == outcome_kind::decomposition)
    out.update(to_json(*report.decomposition));
  return out;
}

}  // namespace detail

inline nlohmann::json to_json(const analysis_report& report) {
  nlohmann::json out{
      {"word", report.input.render()},
      {"m", report.input.alpha().size},
      {"p", report.p},
      {"q", report.q},
      {"mode", report.strong_mode ? "strong" : "plain"},
      {"exhaustive", report.exhaustive},
      {"outcome", detail::outcome_json(report, report.outcome)},
      {"stats",
       {{"subwords_examined", report.stats.subwords_examined},
        {"splits_examined", report.stats.splits_examined},
        {"decomposition_searched", report.decomposition_searched}}}};
  // an exhaustive run can carry the second witness kind alongside
  if (report.outcome == outcome_kind::power && report.decomposition)
    out["secondary"] =
        detail::outcome_json(report, outcome_kind::decomposition);
  return out;
}

inline nlohmann::json to_json(const bound_report& report) {
  nlohmann::json exemplars = nlohmann::json::array();
  for (const word& w : report.exemplars) exemplars.push_back(w.render());
  return {{"m", report.m},
          {"p", report.p},
          {"q", report.q},
          {"mode", report.strong_mode ? "strong" : "plain"},
          {"longest_witness_free_length", report.longest_witness_free_length},
          {"exemplars", exemplars},
          {"empirical_bound", report.empirical_bound},
          {"exhausted", report.exhausted},
          {"nodes_visited", report.nodes_visited},
          {"nodes_per_depth", report.nodes_per_depth}};
}

inline nlohmann::json to_json(const complexity_profile& profile) {
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < profile.values.size(); ++i)
    values.push_back({i + 1, profile.values[i]});
  return {{"prefix_length", profile.prefix_length}, {"values", values}};
}

inline nlohmann::json to_json(const recurrence_profile& profile) {
  nlohmann::json out{{"subword", profile.pattern.render()},
                     {"m", profile.pattern.alpha().size},
                     {"max_gap", profile.max_gap},
                     {"prefix_length", profile.prefix_length},
                     {"prefix_certified_only", true}};
  if (profile.window_constant)
    out["window_constant"] = *profile.window_constant;
  else
    out["window_constant"] = nullptr;
  return out;
}

inline nlohmann::json to_json(const inequality_entry& entry) {
  return {{"label", entry.label},
          {"lhs", entry.lhs},
          {"relation", entry.relation},
          {"rhs", entry.rhs},
          {"holds", entry.holds}};
}

inline nlohmann::json to_json(const strong_decomp_certificate& cert) {
  nlohmann::json markers = nlohmann::json::array();
  for (const word& w : cert.markers) markers.push_back(w.render());
  nlohmann::json factors = nlohmann::json::array();
  for (const word& w : cert.factors) factors.push_back(w.render());
  nlohmann::json inequalities = nlohmann::json::array();
  for (const auto& entry : cert.inequalities)
    inequalities.push_back(to_json(entry));
  return {{"word", cert.source.render()},
          {"m", cert.source.alpha().size},
          {"q", cert.q},
          {"marker_length", cert.marker_length},
          {"markers", markers},
          {"recurrence_constant", cert.recurrence_constant},
          {"positions", cert.positions},
          {"factors", factors},
          {"inequalities", inequalities}};
}

inline std::string to_string(const rational& v) {
  return v.str();
}

inline nlohmann::json to_json(const exact_matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json to_json(const identity_report& report) {
  nlohmann::json out{{"degree", report.degree},
                     {"dimension", report.dimension},
                     {"trials", report.trials},
                     {"seed", report.seed},
                     {"all_vanished", report.all_vanished},
                     {"lower_degree", report.lower_degree}};
  if (report.counterexample) {
    nlohmann::json tuple = nlohmann::json::array();
    for (const exact_matrix& m : *report.counterexample)
      tuple.push_back(to_json(m));
    out["counterexample"] = tuple;
  } else {
    out["counterexample"] = nullptr;
  }
  if (report.lower_witness) {
    nlohmann::json tuple = nlohmann::json::array();
    for (const exact_matrix& m : *report.lower_witness)
      tuple.push_back(to_json(m));
    out["lower_witness"] = tuple;
  } else {
    out["lower_witness"] = nullptr;
  }
  return out;
}

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j,
                                           const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error(std::string("certificate JSON is missing \"") + key +
                          "\"",
                      1);
  return *it;
}

// accepts any integer representation as long as the value is non-negative
inline bool nonnegative_integer(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return true;
  return v.is_number_integer() && v.get<std::int64_t>() >= 0;
}

template <typename T>
T numeric_field(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = require_field(j, key);
  if (!nonnegative_integer(v))
    throw parse_error(std::string("certificate field \"") + key +
                          "\" must be a non-negative integer",
                      1);
  return v.get<T>();
}

}  // namespace detail

// Rebuilds a certificate from its JSON form; malformed shapes throw
// parse_error, while out-of-range letters surface from word::parse.
inline strong_decomp_certificate certificate_from_json(
    const nlohmann::json& j) {
  if (!j.is_object())
    throw parse_error("certificate JSON must be an object", 1);
  const auto m = detail::numeric_field<rank_type>(j, "m");
  alphabet alpha(m);
  const nlohmann::json& source = detail::require_field(j, "word");
  if (!source.is_string())
    throw parse_error("certificate field \"word\" must be a string", 1);

  strong_decomp_certificate cert{
      word::parse(source.get<std::string>(), alpha),
      detail::numeric_field<std::uint32_t>(j, "q"),
      detail::numeric_field<std::size_t>(j, "marker_length"),
      {},
      detail::numeric_field<std::size_t>(j, "recurrence_constant"),
      {},
      {},
      {}};

  auto word_list = [&](const char* key) {
    const nlohmann::json& arr = detail::require_field(j, key);
    if (!arr.is_array())
      throw parse_error(std::string("certificate field \"") + key +
                            "\" must be an array of words",
                        1);
    std::vector<word> out;
    for (const auto& item : arr) {
      if (!item.is_string())
        throw parse_error(std::string("certificate field \"") + key +
                              "\" must contain strings",
                          1);
      out.push_back(word::parse(item.get<std::string>(), alpha));
    }
    return out;
  };
  cert.markers = word_list("markers");
  cert.factors = word_list("factors");

  const nlohmann::json& positions = detail::require_field(j, "positions");
  if (!positions.is_array())
    throw parse_error("certificate field \"positions\" must be an array", 1);
  for (const auto& item : positions) {
    if (!detail::nonnegative_integer(item))
      throw parse_error("certificate positions must be positive integers", 1);
    cert.positions.push_back(item.get<std::size_t>());
  }

  const nlohmann::json& inequalities =
      detail::require_field(j, "inequalities");
  if (!inequalities.is_array())
    throw parse_error("certificate field \"inequalities\" must be an array",
                      1);
  for (const auto& item : inequalities) {
    if (!item.is_object())
      throw parse_error("certificate inequalities must be objects", 1);
    inequality_entry entry;
    const nlohmann::json& label = detail::require_field(item, "label");
    const nlohmann::json& relation = detail::require_field(item, "relation");
    const nlohmann::json& holds = detail::require_field(item, "holds");
    if (!label.is_string() || !relation.is_string() || !holds.is_boolean())
      throw parse_error("certificate inequality entry has wrong field types",
                        1);
    entry.label = label.get<std::string>();
    entry.relation = relation.get<std::string>();
    entry.holds = holds.get<bool>();
    entry.lhs = detail::numeric_field<std::uint64_t>(item, "lhs");
    entry.rhs = detail::numeric_field<std::uint64_t>(item, "rhs");
    cert.inequalities.push_back(std::move(entry));
  }
  return cert;
}

}  // namespace wordkit
