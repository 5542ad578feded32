#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "superschur/tensor_rep.hpp"

namespace superschur {

// The symmetric group with its signed place permutation on tensor space, and
// the Sergeev group Se(N): the double cover of Z_2^N extended by S_N, with
// normal form eps^c a_1^{b_1}..a_N^{b_N} tau.

class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int N) : img_(N) { std::iota(img_.begin(), img_.end(), 1); }
  explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: not a bijection");
      seen[v - 1] = 1;
    }
  }

  /// Builds from cycle lists; (a,..,z) maps a -> .. -> z -> a.
  static Permutation from_cycles(int N, const std::vector<std::vector<int>>& cycles) {
    Permutation p(N);
    for (const auto& cyc : cycles)
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        int from = cyc[t], to = cyc[(t + 1) % cyc.size()];
        if (from < 1 || from > N) throw std::invalid_argument("cycle entry out of range");
        p.img_[from - 1] = to;
      }
    // re-validate: overlapping cycles could break bijectivity
    return Permutation(p.img_);
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_[p - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int p = 1; p <= size(); ++p) inv[img_[p - 1] - 1] = p;
    return Permutation(std::move(inv));
  }

  /// Composition as functions: (a*b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> img(a.img_.size());
    for (int p = 1; p <= a.size(); ++p) img[p - 1] = a(b(p));
    return Permutation(std::move(img));
  }

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> img_;
};

/// The sign c with y_{tau(1)}..y_{tau(k)} = c * y_1..y_k in the free
/// supercommutative algebra on generators y_p of the given parities:
/// -1 for every inverted pair of odd generators.
inline int koszul_sign(const std::vector<int>& parities, const Permutation& tau) {
  if (static_cast<int>(parities.size()) != tau.size())
    throw std::invalid_argument("koszul_sign: length mismatch");
  int sign = 1;
  for (int q = 1; q <= tau.size(); ++q)
    for (int t = q + 1; t <= tau.size(); ++t)
      if (tau(q) > tau(t) && parities[tau(q) - 1] && parities[tau(t) - 1]) sign = -sign;
  return sign;
}

/// pi(tau): v_1 x..x v_N -> +- v_{tau^{-1}(1)} x..x v_{tau^{-1}(N)}.
inline TensorSum act_perm(const SpaceSpec& s, const Permutation& tau, const BasisTensor& v) {
  if (tau.size() != v.length()) throw std::invalid_argument("act_perm: length mismatch");
  const Permutation ti = tau.inverse();
  std::vector<int> parities(v.indices.size());
  for (std::size_t p = 0; p < v.indices.size(); ++p) parities[p] = s.parity(v.indices[p]);
  BasisTensor w;
  w.indices.resize(v.indices.size());
  for (int q = 1; q <= tau.size(); ++q) w.indices[q - 1] = v.indices[ti(q) - 1];
  return TensorSum::single(std::move(w), koszul_sign(parities, ti));
}

/// Element of Se(N) in normal form eps^c a_1^{b_1}..a_N^{b_N} tau.
struct SergeevElement {
  int eps = 0;             // 0 or 1
  std::vector<int> a;      // b_1..b_N, each 0 or 1
  Permutation tau;

  static SergeevElement identity(int N) {
    return SergeevElement{0, std::vector<int>(N, 0), Permutation(N)};
  }
  int size() const { return static_cast<int>(a.size()); }
  auto operator<=>(const SergeevElement&) const = default;
};

/// Normal form of a product, via a_p^2 = eps, a_p a_q = eps a_q a_p and
/// tau a_p tau^{-1} = a_{tau(p)}.
inline SergeevElement sergeev_mul(const SergeevElement& g, const SergeevElement& h) {
  if (g.size() != h.size()) throw std::invalid_argument("sergeev_mul: size mismatch");
  const int N = g.size();
  int eps = (g.eps + h.eps) & 1;
  std::vector<int> bits = g.a;
  for (int p = 1; p <= N; ++p) {
    if (!h.a[p - 1]) continue;
    const int q = g.tau(p);
    int higher = 0;
    for (int r = q + 1; r <= N; ++r) higher += bits[r - 1];
    eps ^= (higher & 1);
    if (bits[q - 1]) {
      eps ^= 1;
      bits[q - 1] = 0;
    } else {
      bits[q - 1] = 1;
    }
  }
  return SergeevElement{eps, std::move(bits), g.tau * h.tau};
}

inline SergeevElement sergeev_inverse(const SergeevElement& g) {
  const int N = g.size();
  int s = 0;
  for (int b : g.a) s += b;
  // (a_{k_1}..a_{k_s})^{-1} = eps^{s + s(s-1)/2} a_{k_1}..a_{k_s}; the
  // remaining tau^{-1} relabeling is delegated to the normal-form product
  SergeevElement tau_inv{0, std::vector<int>(N, 0), g.tau.inverse()};
  SergeevElement a_inv{(g.eps + s + s * (s - 1) / 2) & 1, g.a, Permutation(N)};
  return sergeev_mul(tau_inv, a_inv);
}

/// pi on Se(N): tau as the signed place permutation, each a_k as the odd
/// operator P (P e_j = -e_{j+n} for j <= n, P e_j = e_{j-n} otherwise) in
/// slot k with the Koszul sign of the parities to its left, and eps = -Id.
inline TensorSum act_sergeev(const SpaceSpec& s, const SergeevElement& g, const BasisTensor& v) {
  if (!s.q_context()) throw std::invalid_argument("act_sergeev requires m == n");
  TensorSum cur = act_perm(s, g.tau, v);
  for (int k = g.size(); k >= 1; --k) {
    if (!g.a[k - 1]) continue;
    TensorSum next;
    for (const auto& [bt, c] : cur.terms()) {
      int left = 0;
      for (int q = 0; q < k - 1; ++q) left += s.parity(bt.indices[q]);
      const int j = bt.indices[k - 1];
      BasisTensor w = bt;
      int sgn = (left & 1) ? -1 : 1;
      if (j <= s.n) {
        w.indices[k - 1] = j + s.n;
        sgn = -sgn;
      } else {
        w.indices[k - 1] = j - s.n;
      }
      next.add(std::move(w), c * sgn);
    }
    cur = std::move(next);
  }
  if (g.eps) cur *= Int(-1);
  return cur;
}

template <class G>
using GroupAlgebraElement = FormalSum<G>;

inline ExactMatrix group_algebra_act(const GroupAlgebraElement<Permutation>& x,
                                     const SpaceSpec& s, int N) {
  return matrix_of(
      [&](const BasisTensor& v) {
        TensorSum out;
        for (const auto& [g, c] : x.terms()) out += c * act_perm(s, g, v);
        return out;
      },
      s, N);
}

inline ExactMatrix group_algebra_act(const GroupAlgebraElement<SergeevElement>& x,
                                     const SpaceSpec& s, int N) {
  return matrix_of(
      [&](const BasisTensor& v) {
        TensorSum out;
        for (const auto& [g, c] : x.terms()) out += c * act_sergeev(s, g, v);
        return out;
      },
      s, N);
}

}  // namespace superschur
