#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superschur/formal_sum.hpp"
#include "superschur/numeric.hpp"

namespace superschur {

/// Dimensions of the graded space C^{m|n}: basis vectors e_1..e_m are even,
/// e_{m+1}..e_{m+n} are odd. Indices are 1-based throughout.
struct SpaceSpec {
  int m = 0;
  int n = 0;

  SpaceSpec(int even_dim, int odd_dim) : m(even_dim), n(odd_dim) {
    if (m < 0 || n < 0 || m + n < 1)
      throw std::invalid_argument("SpaceSpec: need m >= 0, n >= 0 and m + n >= 1");
  }

  int dim() const { return m + n; }
  int parity(int i) const { return i <= m ? 0 : 1; }
  bool q_context() const { return m == n && n > 0; }
};

inline void require_index(const SpaceSpec& s, int i) {
  if (i < 1 || i > s.dim())
    throw std::out_of_range("basis index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(s.dim()));
}

/// The parity-swapping involution i -> i + n (mod 2n) on indices of gl(n,n).
inline int delta_index(const SpaceSpec& s, int i) {
  if (!s.q_context()) throw std::invalid_argument("delta_index requires m == n");
  require_index(s, i);
  return i <= s.n ? i + s.n : i - s.n;
}

/// Matrix unit E_{row,col}.
struct MatrixUnit {
  int row = 1;
  int col = 1;
  auto operator<=>(const MatrixUnit&) const = default;
};

inline int parity(const SpaceSpec& s, MatrixUnit u) {
  return (s.parity(u.row) + s.parity(u.col)) & 1;
}

inline void require_unit(const SpaceSpec& s, MatrixUnit u) {
  require_index(s, u.row);
  require_index(s, u.col);
}

/// Supercommutative monomial: a multiset of matrix units kept sorted
/// lexicographically by (row, col). Odd units never repeat; a vanishing
/// monomial is represented by the absence of a term, never stored.
struct SymMonomial {
  std::vector<MatrixUnit> units;
  auto operator<=>(const SymMonomial&) const = default;
  int degree() const { return static_cast<int>(units.size()); }
};

/// Free word of matrix units: a basis monomial of the tensor algebra and,
/// through the quotient, a spanning element of the enveloping algebra.
struct Word {
  std::vector<MatrixUnit> units;
  auto operator<=>(const Word&) const = default;
  int length() const { return static_cast<int>(units.size()); }
};

/// Sorts a sequence of units into lexicographic order, accumulating the
/// Koszul sign (-1 for every transposition of two odd units). Returns
/// nullopt when an odd unit repeats, i.e. the monomial is zero.
inline std::optional<std::pair<std::vector<MatrixUnit>, int>> koszul_sort_units(
    const SpaceSpec& s, std::vector<MatrixUnit> units) {
  int sign = 1;
  for (std::size_t i = 1; i < units.size(); ++i)
    for (std::size_t j = i; j > 0 && units[j] < units[j - 1]; --j) {
      if (parity(s, units[j]) && parity(s, units[j - 1])) sign = -sign;
      std::swap(units[j], units[j - 1]);
    }
  for (std::size_t i = 1; i < units.size(); ++i)
    if (units[i] == units[i - 1] && parity(s, units[i])) return std::nullopt;
  return std::make_pair(std::move(units), sign);
}

/// Canonicalizes a unit sequence into a SymMonomial together with the Koszul
/// sign of the sorting permutation; nullopt when the monomial vanishes.
inline std::optional<std::pair<SymMonomial, int>> super_sort(const SpaceSpec& s,
                                                             std::vector<MatrixUnit> units) {
  for (auto u : units) require_unit(s, u);
  auto sorted = koszul_sort_units(s, std::move(units));
  if (!sorted) return std::nullopt;
  return std::make_pair(SymMonomial{std::move(sorted->first)}, sorted->second);
}

/// E_ab E_cd = delta_bc E_ad in the associative matrix algebra; nullopt when
/// the Kronecker delta fails.
inline std::optional<MatrixUnit> unit_product(MatrixUnit a, MatrixUnit b) {
  if (a.col != b.row) return std::nullopt;
  return MatrixUnit{a.row, b.col};
}

inline FormalSum<MatrixUnit> matrix_product(const SpaceSpec& s, MatrixUnit a, MatrixUnit b) {
  require_unit(s, a);
  require_unit(s, b);
  auto p = unit_product(a, b);
  if (!p) return {};
  return FormalSum<MatrixUnit>::single(*p);
}

/// Super bracket [x,y] = xy - (-1)^{p(x)p(y)} yx.
inline FormalSum<MatrixUnit> super_bracket(const SpaceSpec& s, MatrixUnit x, MatrixUnit y) {
  FormalSum<MatrixUnit> out = matrix_product(s, x, y);
  int sgn = (parity(s, x) && parity(s, y)) ? 1 : -1;
  out += Int(sgn) * matrix_product(s, y, x);
  return out;
}

/// F_ij = E_ij + E_{delta(i) delta(j)}, the spanning elements of Q(n) inside
/// gl(n,n). Note F_{delta(i) delta(j)} = F_ij.
inline FormalSum<MatrixUnit> q_unit(const SpaceSpec& s, int i, int j) {
  if (!s.q_context()) throw std::invalid_argument("q_unit requires m == n");
  require_index(s, i);
  require_index(s, j);
  FormalSum<MatrixUnit> out;
  out.add(MatrixUnit{i, j}, 1);
  out.add(MatrixUnit{delta_index(s, i), delta_index(s, j)}, 1);
  return out;
}

/// Product in the symmetric algebra: concatenate and re-canonicalize.
inline FormalSum<SymMonomial> sym_mul(const SpaceSpec& s, const FormalSum<SymMonomial>& a,
                                      const FormalSum<SymMonomial>& b) {
  FormalSum<SymMonomial> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<MatrixUnit> units = ma.units;
      units.insert(units.end(), mb.units.begin(), mb.units.end());
      if (auto srt = koszul_sort_units(s, std::move(units)))
        out.add(SymMonomial{std::move(srt->first)}, ca * cb * srt->second);
    }
  return out;
}

/// All units of gl(m,n) in canonical order.
inline std::vector<MatrixUnit> all_units(const SpaceSpec& s) {
  std::vector<MatrixUnit> out;
  out.reserve(static_cast<std::size_t>(s.dim()) * s.dim());
  for (int r = 1; r <= s.dim(); ++r)
    for (int c = 1; c <= s.dim(); ++c) out.push_back(MatrixUnit{r, c});
  return out;
}

}  // namespace superschur
