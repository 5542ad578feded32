#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "superschur/central_elements.hpp"
#include "superschur/group_algebra.hpp"
#include "superschur/tensor_rep.hpp"

namespace superschur {

using nlohmann::json;

// One shared wire format for formal sums: an array of
// {"coeff": decimal-string, "monomial": [[row,col],...]} in canonical order.
// A Word is the same shape with the unit list read as an ordered sequence.

namespace detail {

inline json units_to_json(const std::vector<MatrixUnit>& units) {
  json arr = json::array();
  for (auto u : units) arr.push_back(json::array({u.row, u.col}));
  return arr;
}

inline std::vector<MatrixUnit> units_from_json(const SpaceSpec& s, const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("monomial: expected an array of [row,col]");
  std::vector<MatrixUnit> units;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("monomial: each entry must be [row,col]");
    MatrixUnit u{e[0].get<int>(), e[1].get<int>()};
    require_unit(s, u);
    units.push_back(u);
  }
  return units;
}

}  // namespace detail

template <class TermLike>
json formal_sum_to_json(const FormalSum<TermLike>& a) {
  json arr = json::array();
  for (const auto& [t, c] : a.terms())
    arr.push_back(json{{"coeff", c.str()}, {"monomial", detail::units_to_json(t.units)}});
  return arr;
}

inline FormalSum<Word> word_sum_from_json(const SpaceSpec& s, const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("formal sum: expected an array of terms");
  FormalSum<Word> out;
  for (const auto& term : arr) {
    if (!term.contains("coeff") || !term.contains("monomial"))
      throw std::invalid_argument("formal sum term: need \"coeff\" and \"monomial\"");
    out.add(Word{detail::units_from_json(s, term["monomial"])},
            Int(term["coeff"].get<std::string>()));
  }
  return out;
}

inline FormalSum<SymMonomial> sym_sum_from_json(const SpaceSpec& s, const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("formal sum: expected an array of terms");
  FormalSum<SymMonomial> out;
  for (const auto& term : arr) {
    if (!term.contains("coeff") || !term.contains("monomial"))
      throw std::invalid_argument("formal sum term: need \"coeff\" and \"monomial\"");
    auto units = detail::units_from_json(s, term["monomial"]);
    for (std::size_t i = 1; i < units.size(); ++i) {
      if (units[i] < units[i - 1])
        throw std::invalid_argument("monomial violates canonical order: units must be "
                                    "sorted lexicographically by (row, col)");
      if (units[i] == units[i - 1] && parity(s, units[i]))
        throw std::invalid_argument("monomial violates odd-multiplicity invariant: an odd "
                                    "unit may appear at most once");
    }
    out.add(SymMonomial{std::move(units)}, Int(term["coeff"].get<std::string>()));
  }
  return out;
}

/// Matrix as an array of triplets {"row": [i_1..i_N], "col": [j_1..j_N],
/// "value": rational-string} in canonical entry order.
inline json matrix_to_json(const SpaceSpec& s, int N, const ExactMatrix& m) {
  json arr = json::array();
  for (const auto& [k, v] : m.entries()) {
    json row = json::array(), col = json::array();
    for (int i : tensor_basis(s, N, k.first).indices) row.push_back(i);
    for (int j : tensor_basis(s, N, k.second).indices) col.push_back(j);
    arr.push_back(json{{"row", row}, {"col", col}, {"value", v.str()}});
  }
  return arr;
}

inline json group_sum_to_json(const GroupAlgebraElement<Permutation>& x) {
  json arr = json::array();
  for (const auto& [g, c] : x.terms())
    arr.push_back(json{{"coeff", c.str()}, {"perm", g.one_line()}});
  return arr;
}

inline json group_sum_to_json(const GroupAlgebraElement<SergeevElement>& x) {
  json arr = json::array();
  for (const auto& [g, c] : x.terms())
    arr.push_back(
        json{{"coeff", c.str()}, {"eps", g.eps}, {"a", g.a}, {"perm", g.tau.one_line()}});
  return arr;
}

}  // namespace superschur
