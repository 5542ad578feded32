#pragma once

#include <vector>

#include "superschur/algebra_core.hpp"
#include "superschur/symmetrization.hpp"

namespace superschur {

// Polynomial differential operators on the superpolynomial algebra in the
// (m+n)^2 variables x_ij, where x_ij carries the parity of E_ij. Operators
// are stored normal-ordered (all x's left of all derivatives, both factors
// canonically sorted), which makes the normal form a faithful fingerprint of
// enveloping-algebra elements.

/// Canonical monomial in the variables x_ij. The unit (r,c) stands for x_rc.
struct XMonomial {
  std::vector<MatrixUnit> vars;
  auto operator<=>(const XMonomial&) const = default;
  int degree() const { return static_cast<int>(vars.size()); }
};

using SuperPolynomial = FormalSum<XMonomial>;

/// Normal-ordered Weyl term x_{a_1b_1}..x_{a_kb_k} d_{c_1e_1}..d_{c_lf_l}.
struct WeylTerm {
  std::vector<MatrixUnit> xs;
  std::vector<MatrixUnit> ds;
  auto operator<=>(const WeylTerm&) const = default;
};

using WeylOperator = FormalSum<WeylTerm>;

inline WeylOperator weyl_identity() { return WeylOperator::single(WeylTerm{}); }

namespace detail {

inline int parity_sum(const SpaceSpec& s, const std::vector<MatrixUnit>& us, std::size_t from = 0) {
  int p = 0;
  for (std::size_t i = from; i < us.size(); ++i) p += parity(s, us[i]);
  return p & 1;
}

// Multiply a normal term by x_cd on the right: the variable either contracts
// against a matching derivative (d_ab x_cd picks up delta_ac delta_bd) or
// passes the whole derivative block and joins the x block.
inline void term_times_x(const SpaceSpec& s, const WeylTerm& t, const Int& c, MatrixUnit x,
                         WeylOperator& out) {
  const int px = parity(s, x);
  for (std::size_t j = 0; j < t.ds.size(); ++j) {
    if (t.ds[j] != x) continue;
    int sgn = (px && parity_sum(s, t.ds, j + 1)) ? -1 : 1;
    WeylTerm nt{t.xs, {}};
    nt.ds.reserve(t.ds.size() - 1);
    for (std::size_t k = 0; k < t.ds.size(); ++k)
      if (k != j) nt.ds.push_back(t.ds[k]);
    out.add(std::move(nt), c * sgn);
  }
  int sgn = (px && parity_sum(s, t.ds)) ? -1 : 1;
  auto xs = t.xs;
  xs.push_back(x);
  if (auto srt = koszul_sort_units(s, std::move(xs)))
    out.add(WeylTerm{std::move(srt->first), t.ds}, c * sgn * srt->second);
}

inline void term_times_d(const SpaceSpec& s, const WeylTerm& t, const Int& c, MatrixUnit d,
                         WeylOperator& out) {
  auto ds = t.ds;
  ds.push_back(d);
  if (auto srt = koszul_sort_units(s, std::move(ds)))
    out.add(WeylTerm{t.xs, std::move(srt->first)}, c * srt->second);
}

}  // namespace detail

/// Product in the Weyl algebra, returned in normal order.
inline WeylOperator weyl_mul(const SpaceSpec& s, const WeylOperator& a, const WeylOperator& b) {
  WeylOperator out;
  for (const auto& [tb, cb] : b.terms()) {
    WeylOperator acc;
    for (const auto& [ta, ca] : a.terms()) acc.add(ta, ca * cb);
    for (auto x : tb.xs) {
      WeylOperator next;
      for (const auto& [t, c] : acc.terms()) detail::term_times_x(s, t, c, x, next);
      acc = std::move(next);
    }
    for (auto d : tb.ds) {
      WeylOperator next;
      for (const auto& [t, c] : acc.terms()) detail::term_times_d(s, t, c, d, next);
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

/// Canonical normal-ordered form of a composition of operators.
inline WeylOperator normal_order(const SpaceSpec& s, const std::vector<WeylOperator>& comp) {
  WeylOperator acc = weyl_identity();
  for (const auto& op : comp) acc = weyl_mul(s, acc, op);
  return acc;
}

/// The generator image E_ij -> sum_k x_ki d_kj of the realization of the
/// enveloping algebra by differential operators.
inline WeylOperator diffop_unit(const SpaceSpec& s, MatrixUnit e) {
  require_unit(s, e);
  WeylOperator out;
  for (int k = 1; k <= s.dim(); ++k)
    out.add(WeylTerm{{MatrixUnit{k, e.row}}, {MatrixUnit{k, e.col}}}, 1);
  return out;
}

/// Image of a word, normal-ordered.
inline WeylOperator diffop_word(const SpaceSpec& s, const Word& w) {
  WeylOperator acc = weyl_identity();
  for (auto u : w.units) acc = weyl_mul(s, acc, diffop_unit(s, u));
  return acc;
}

/// Linear extension to sums of words; doubles as the canonical fingerprint of
/// enveloping-algebra elements (the realization has trivial kernel).
inline WeylOperator diffop(const SpaceSpec& s, const FormalSum<Word>& u) {
  WeylOperator out;
  for (const auto& [w, c] : u.terms()) out += c * diffop_word(s, w);
  return out;
}

/// Differential-operator image of a symmetric-algebra monomial: the closed
/// normal-ordered sum over index tuples kbar with sign
/// (-1)^{sum_{q<t} p_{k_q j_q} p_{k_t i_t}}.
inline WeylOperator diffop_sym(const SpaceSpec& s, const SymMonomial& a) {
  const int M = a.degree();
  WeylOperator out;
  std::vector<int> kbar(M, 1);
  for (;;) {
    int e = 0;
    for (int q = 0; q < M; ++q)
      for (int t = q + 1; t < M; ++t)
        e += parity(s, MatrixUnit{kbar[q], a.units[q].col}) *
             parity(s, MatrixUnit{kbar[t], a.units[t].row});
    std::vector<MatrixUnit> xs, ds;
    xs.reserve(M);
    ds.reserve(M);
    for (int t = 0; t < M; ++t) {
      xs.push_back(MatrixUnit{kbar[t], a.units[t].row});
      ds.push_back(MatrixUnit{kbar[t], a.units[t].col});
    }
    if (auto sx = koszul_sort_units(s, std::move(xs)))
      if (auto sd = koszul_sort_units(s, std::move(ds)))
        out.add(WeylTerm{std::move(sx->first), std::move(sd->first)},
                Int(((e & 1) ? -1 : 1) * sx->second * sd->second));
    int t = M - 1;
    while (t >= 0 && kbar[t] == s.dim()) kbar[t--] = 1;
    if (t < 0) break;
    ++kbar[t];
  }
  return out;
}

inline WeylOperator diffop_sym(const SpaceSpec& s, const FormalSum<SymMonomial>& a) {
  WeylOperator out;
  for (const auto& [mono, c] : a.terms()) out += c * diffop_sym(s, mono);
  return out;
}

namespace detail {

// Graded Leibniz action of a single derivative on a canonical monomial.
inline SuperPolynomial d_apply(const SpaceSpec& s, MatrixUnit d, const XMonomial& mono) {
  SuperPolynomial out;
  const int pd = parity(s, d);
  int left = 0;
  for (std::size_t t = 0; t < mono.vars.size(); ++t) {
    if (mono.vars[t] == d) {
      XMonomial nm;
      nm.vars.reserve(mono.vars.size() - 1);
      for (std::size_t k = 0; k < mono.vars.size(); ++k)
        if (k != t) nm.vars.push_back(mono.vars[k]);
      out.add(std::move(nm), (pd && (left & 1)) ? -1 : 1);
    }
    left += parity(s, mono.vars[t]);
  }
  return out;
}

}  // namespace detail

/// Action of a normal-ordered operator on a superpolynomial.
inline SuperPolynomial apply(const SpaceSpec& s, const WeylOperator& op,
                             const SuperPolynomial& f) {
  SuperPolynomial out;
  for (const auto& [t, c] : op.terms())
    for (const auto& [mono, cf] : f.terms()) {
      SuperPolynomial cur = SuperPolynomial::single(mono);
      for (auto it = t.ds.rbegin(); it != t.ds.rend() && !cur.zero(); ++it) {
        SuperPolynomial next;
        for (const auto& [m, cm] : cur.terms()) next += cm * detail::d_apply(s, *it, m);
        cur = std::move(next);
      }
      for (const auto& [m, cm] : cur.terms()) {
        auto vars = t.xs;
        vars.insert(vars.end(), m.vars.begin(), m.vars.end());
        if (auto srt = koszul_sort_units(s, std::move(vars)))
          out.add(XMonomial{std::move(srt->first)}, c * cf * cm * srt->second);
      }
    }
  return out;
}

/// The ordered product x_{r_1c_1}...x_{r_kc_k} as a canonical polynomial
/// (zero when an odd variable repeats).
inline SuperPolynomial ordered_x_monomial(const SpaceSpec& s, const std::vector<MatrixUnit>& vars) {
  for (auto v : vars) require_unit(s, v);
  auto srt = koszul_sort_units(s, vars);
  if (!srt) return {};
  return SuperPolynomial::single(XMonomial{std::move(srt->first)}, srt->second);
}

/// Equality of enveloping-algebra elements through the operator realization,
/// which has trivial kernel; see u_equal_tensor for the fallback probe.
inline bool u_equal(const SpaceSpec& s, const FormalSum<Word>& a, const FormalSum<Word>& b) {
  return diffop(s, a) == diffop(s, b);
}

/// Evaluation at the identity point x_ij = delta_ij. Only diagonal variables
/// survive (they are all even, so this is well defined).
inline Int eval_at_identity(const SuperPolynomial& f) {
  Int out = 0;
  for (const auto& [mono, c] : f.terms()) {
    bool diagonal = true;
    for (auto v : mono.vars)
      if (v.row != v.col) {
        diagonal = false;
        break;
      }
    if (diagonal) out += c;
  }
  return out;
}

}  // namespace superschur
