#pragma once

// JSON forms of the library's values.
//   scalar:     "a/b+c/d*i"
//   matrix:     [["1","0"],["0","1/2*i"]]
//   element:    {"space": "M(2,2)+M(1,1)", "blocks": [matrix, ...]}
//   group:      {"k": 2, "left": [1,2], "right": [2,1]}
//   invariant:  {"group": group, "gamma": [[1,1]], "exceptional_count": 0,
//                "published_table_diffs": [...]}

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kgrid/error.hpp"
#include "kgrid/exact.hpp"
#include "kgrid/grids.hpp"
#include "kgrid/invariant.hpp"
#include "kgrid/ktheory.hpp"
#include "kgrid/tro.hpp"

namespace kgrid::io {

using json = nlohmann::json;

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Accepts strings in the scalar text form and plain JSON integers.
inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows", 0);
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be non-empty arrays", 0);
  std::vector<Scalar> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError("row " + std::to_string(r) + " has the wrong length", r);
    for (const auto& e : j[r]) {
      if (e.is_string()) entries.push_back(Scalar::parse(e.get<std::string>()));
      else if (e.is_number_integer()) entries.push_back(Scalar(e.get<long>()));
      else throw ParseError("matrix entries must be scalar strings", r);
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

/// Integer matrix from the scalar matrix format; every entry must be an
/// integer.
inline IntMatrix int_matrix_from_json(const json& j) {
  const Matrix m = matrix_from_json(j);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& s = m(r, c);
      if (!s.is_real() || s.re().get_den() != 1 || !s.re().get_num().fits_slong_p())
        throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") is not an integer",
                         r);
      out(r, c) = s.re().get_num().get_si();
    }
  return out;
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const TroElement& x) {
  json blocks = json::array();
  for (const auto& b : x.blocks()) blocks.push_back(to_json(b));
  return {{"space", x.space().to_string()}, {"blocks", blocks}};
}

inline TroElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("blocks"))
    throw ParseError("element needs \"space\" and \"blocks\"", 0);
  TroSpace space = TroSpace::parse(j.at("space").get<std::string>());
  std::vector<Matrix> blocks;
  for (const auto& b : j.at("blocks")) blocks.push_back(matrix_from_json(b));
  return TroElement(std::move(space), std::move(blocks));
}

inline json to_json(const K0Class& c) { return c.ranks; }

inline json to_json(const ClassSet& s) {
  json a = json::array();
  for (const auto& c : s) a.push_back(to_json(c));
  return a;
}

inline json to_json(const DoubleScaledGroup& g) {
  return {{"k", g.k()}, {"left", g.left_caps()}, {"right", g.right_caps()}};
}

inline DoubleScaledGroup group_from_json(const json& j) {
  auto left = j.at("left").get<std::vector<std::int64_t>>();
  auto right = j.at("right").get<std::vector<std::int64_t>>();
  if (j.at("k").get<std::size_t>() != left.size()) throw ParseError("\"k\" does not match caps", 0);
  return DoubleScaledGroup(std::move(left), std::move(right));
}

inline json to_json(const TroHom& h) {
  return {{"source", h.source().to_string()},
          {"target", h.target().to_string()},
          {"mult", to_json(h.mult())}};
}

inline json to_json(const std::vector<TableDiff>& diffs) {
  json a = json::array();
  for (const auto& d : diffs)
    a.push_back({{"factor", d.factor}, {"computed", to_json(d.computed)}, {"published", to_json(d.published)}});
  return a;
}

inline json to_json(const KGridInvariant& inv, const std::vector<TableDiff>& diffs = {}) {
  return {{"group", to_json(inv.group)},
          {"gamma", to_json(inv.gamma)},
          {"exceptional_count", inv.exceptional_count},
          {"published_table_diffs", to_json(diffs)}};
}

inline KGridInvariant invariant_from_json(const json& j) {
  KGridInvariant inv;
  inv.group = group_from_json(j.at("group"));
  for (const auto& c : j.at("gamma")) inv.gamma.push_back(K0Class{c.get<std::vector<std::int64_t>>()});
  normalize(inv.gamma);
  inv.exceptional_count = j.value("exceptional_count", std::size_t{0});
  return inv;
}

inline json to_json(const GridReport& r) {
  json elements = json::array();
  for (const auto& e : r.elements)
    elements.push_back({{"label", e.label},
                        {"tripotent", e.tripotent},
                        {"minimal", e.minimal},
                        {"minimal_expected", e.minimal_expected}});
  json identities = json::array();
  for (const auto& c : r.identities) identities.push_back({{"name", c.name}, {"passed", c.passed}});
  return {{"factor", r.factor},
          {"kind", to_string(r.kind)},
          {"elements", elements},
          {"span_dim", r.span_dim},
          {"expected_dim", r.expected_dim},
          {"spans_factor", r.spans_factor},
          {"identities", identities},
          {"passed", r.passed()}};
}

inline json to_json(const Verdict& v) {
  json j = {{"verdict", to_string(v.outcome)},
            {"reason", v.reason},
            {"indistinguishable_by_k_theory", v.indistinguishable_by_k_theory}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return j;
}

}  // namespace kgrid::io
