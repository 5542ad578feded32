#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superschur/symmetrization.hpp"
#include "superschur/weyl.hpp"

namespace superschur {

// The tensor space (C^{m|n})^{tensor N}, the action of enveloping-algebra
// words, the one-change-per-slot tree action of the symmetric algebra, and
// exact matrices of all of these.

/// Basis tensor e_{i_1} x ... x e_{i_N}.
struct BasisTensor {
  std::vector<int> indices;
  auto operator<=>(const BasisTensor&) const = default;
  int length() const { return static_cast<int>(indices.size()); }
};

using TensorSum = FormalSum<BasisTensor>;

inline long tensor_dim(const SpaceSpec& s, int N) {
  long d = 1;
  for (int t = 0; t < N; ++t) d *= s.dim();
  return d;
}

/// Canonical (lexicographic) enumeration of basis tensors.
inline long tensor_index(const SpaceSpec& s, const BasisTensor& v) {
  long idx = 0;
  for (int i : v.indices) {
    require_index(s, i);
    idx = idx * s.dim() + (i - 1);
  }
  return idx;
}

inline BasisTensor tensor_basis(const SpaceSpec& s, int N, long idx) {
  BasisTensor v;
  v.indices.assign(N, 1);
  for (int t = N - 1; t >= 0; --t) {
    v.indices[t] = static_cast<int>(idx % s.dim()) + 1;
    idx /= s.dim();
  }
  return v;
}

/// Total parity of each basis tensor, in canonical enumeration order.
inline std::vector<int> tensor_index_parities(const SpaceSpec& s, int N) {
  std::vector<int> out(tensor_dim(s, N), 0);
  for (long i = 0; i < tensor_dim(s, N); ++i) {
    int p = 0;
    for (int idx : tensor_basis(s, N, i).indices) p += s.parity(idx);
    out[i] = p & 1;
  }
  return out;
}

/// Sparse square matrix over exact rationals, indexed by the canonical
/// enumeration of basis tensors.
class ExactMatrix {
public:
  using Key = std::pair<long, long>;  // (row, col)

  ExactMatrix() = default;
  explicit ExactMatrix(long dim) : dim_(dim) {}

  static ExactMatrix identity(long dim) {
    ExactMatrix m(dim);
    for (long i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
  }

  long dim() const { return dim_; }
  const std::map<Key, Rat>& entries() const { return e_; }

  Rat at(long r, long c) const {
    auto it = e_.find({r, c});
    return it == e_.end() ? Rat(0) : it->second;
  }

  void set(long r, long c, Rat v) {
    if (v == 0)
      e_.erase({r, c});
    else
      e_[{r, c}] = std::move(v);
  }

  void add(long r, long c, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = e_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) e_.erase(it);
    }
  }

  bool zero() const { return e_.empty(); }
  bool operator==(const ExactMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    for (const auto& [k, v] : b.e_) a.add(k.first, k.second, v);
    return a;
  }
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out = a;
    for (const auto& [k, v] : b.e_) out.add(k.first, k.second, -v);
    return out;
  }
  friend ExactMatrix operator*(const Rat& k, ExactMatrix m) {
    if (k == 0) return ExactMatrix(m.dim_);
    for (auto& [key, v] : m.e_) v *= k;
    return m;
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.dim_);
    for (const auto& [ka, va] : a.e_) {
      auto lo = b.e_.lower_bound({ka.second, 0});
      auto hi = b.e_.lower_bound({ka.second + 1, 0});
      for (auto it = lo; it != hi; ++it) out.add(ka.first, it->first.second, va * it->second);
    }
    return out;
  }

  bool commutes_with(const ExactMatrix& o) const { return (*this) * o == o * (*this); }

private:
  long dim_ = 0;
  std::map<Key, Rat> e_;
};

/// gamma(E_ab) on a basis tensor: replace every slot holding b by a, with the
/// Koszul sign of carrying an operator of parity p(E_ab) past the factors to
/// the left of the slot.
inline TensorSum act_unit(const SpaceSpec& s, MatrixUnit e, const BasisTensor& v) {
  require_unit(s, e);
  TensorSum out;
  const int pe = parity(s, e);
  int left = 0;
  for (std::size_t t = 0; t < v.indices.size(); ++t) {
    if (v.indices[t] == e.col) {
      BasisTensor w = v;
      w.indices[t] = e.row;
      out.add(std::move(w), (pe && (left & 1)) ? -1 : 1);
    }
    left += s.parity(v.indices[t]);
  }
  return out;
}

inline TensorSum act_unit(const SpaceSpec& s, MatrixUnit e, const TensorSum& v) {
  TensorSum out;
  for (const auto& [bt, c] : v.terms()) out += c * act_unit(s, e, bt);
  return out;
}

/// Action of a word: rightmost unit acts first.
inline TensorSum act_word(const SpaceSpec& s, const Word& w, const TensorSum& v) {
  TensorSum cur = v;
  for (auto it = w.units.rbegin(); it != w.units.rend() && !cur.zero(); ++it)
    cur = act_unit(s, *it, cur);
  return cur;
}

inline TensorSum act_word(const SpaceSpec& s, const FormalSum<Word>& u, const TensorSum& v) {
  TensorSum out;
  for (const auto& [w, c] : u.terms()) out += c * act_word(s, w, v);
  return out;
}

inline TensorSum act_word(const SpaceSpec& s, const FormalSum<Word>& u, const BasisTensor& v) {
  return act_word(s, u, TensorSum::single(v));
}

/// The tree action of a symmetric-algebra monomial: units are applied
/// right to left as in the word action, but every tensor slot may be
/// modified at most once along a path. An action, not a representation.
inline TensorSum act_sym_tree(const SpaceSpec& s, const SymMonomial& a, const BasisTensor& v) {
  if (v.length() > 63) throw std::invalid_argument("act_sym_tree: tensor too long");
  TensorSum out;
  BasisTensor cur = v;
  std::function<void(int, unsigned long long, int)> rec = [&](int step, unsigned long long used,
                                                              int sign) {
    if (step < 0) {
      out.add(cur, sign);
      return;
    }
    const MatrixUnit e = a.units[step];
    const int pe = parity(s, e);
    int left = 0;
    for (std::size_t t = 0; t < cur.indices.size(); ++t) {
      const int old = cur.indices[t];
      if (!((used >> t) & 1) && old == e.col) {
        cur.indices[t] = e.row;
        rec(step - 1, used | (1ull << t), (pe && (left & 1)) ? -sign : sign);
        cur.indices[t] = old;
      }
      left += s.parity(old);
    }
  };
  rec(a.degree() - 1, 0, 1);
  return out;
}

inline TensorSum act_sym_tree(const SpaceSpec& s, const FormalSum<SymMonomial>& a,
                              const BasisTensor& v) {
  TensorSum out;
  for (const auto& [mono, c] : a.terms()) out += c * act_sym_tree(s, mono, v);
  return out;
}

/// Matrix of a linear action, column by column over the canonical basis.
inline ExactMatrix matrix_of(const std::function<TensorSum(const BasisTensor&)>& action,
                             const SpaceSpec& s, int N) {
  const long d = tensor_dim(s, N);
  ExactMatrix m(d);
  for (long j = 0; j < d; ++j) {
    TensorSum img = action(tensor_basis(s, N, j));
    for (const auto& [bt, c] : img.terms()) m.add(tensor_index(s, bt), j, Rat(c));
  }
  return m;
}

inline ExactMatrix matrix_of_word(const SpaceSpec& s, int N, const FormalSum<Word>& u) {
  return matrix_of([&](const BasisTensor& v) { return act_word(s, u, v); }, s, N);
}

inline ExactMatrix matrix_of_unit(const SpaceSpec& s, int N, MatrixUnit e) {
  return matrix_of([&](const BasisTensor& v) { return act_unit(s, e, v); }, s, N);
}

/// Fallback equality probe for enveloping-algebra elements: identical actions
/// on every tensor power up to max_N. Weaker than the operator fingerprint at
/// fixed depth; callers should flag when they rely on it.
inline bool u_equal_tensor(const SpaceSpec& s, const FormalSum<Word>& a, const FormalSum<Word>& b,
                           int max_N) {
  for (int N = 0; N <= max_N; ++N)
    if (!(matrix_of_word(s, N, a) == matrix_of_word(s, N, b))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Entry/evaluation ratio property: the matrix entry of an element against the
// evaluation of its differential-operator image on x_{i_1 j_1}..x_{i_N j_N}
// at the identity point differ by a sign depending only on the index pair.

/// One element under test, carried as its two computation routes.
struct RatioElement {
  ExactMatrix action;
  WeylOperator op;
};

inline RatioElement ratio_element_from_words(const SpaceSpec& s, int N, const FormalSum<Word>& u) {
  return RatioElement{matrix_of_word(s, N, u), diffop(s, u)};
}

inline RatioElement ratio_element_from_sym(const SpaceSpec& s, int N,
                                           const FormalSum<SymMonomial>& a) {
  return RatioElement{matrix_of([&](const BasisTensor& v) { return act_sym_tree(s, a, v); }, s, N),
                      diffop_sym(s, a)};
}

enum class RatioStatus { skipped, constant, violation };

struct RatioPairReport {
  BasisTensor out_index;  // i_1..i_N (the row)
  BasisTensor in_index;   // j_1..j_N (the column)
  RatioStatus status = RatioStatus::skipped;
  int sign = 0;  // the constant, when status == constant
};

/// Checks, for each index pair, that entry = sign * evaluation holds with one
/// fixed sign across all supplied elements. Pairs where every element gives
/// zero on both sides are reported as skipped.
inline std::vector<RatioPairReport> ratio_check(
    const SpaceSpec& s, const std::vector<std::pair<BasisTensor, BasisTensor>>& pairs,
    const std::vector<RatioElement>& elements) {
  std::vector<RatioPairReport> out;
  out.reserve(pairs.size());
  for (const auto& [bra, ket] : pairs) {
    RatioPairReport rep{bra, ket, RatioStatus::skipped, 0};
    const long r = tensor_index(s, bra), c = tensor_index(s, ket);
    std::vector<MatrixUnit> vars;
    for (std::size_t t = 0; t < bra.indices.size(); ++t)
      vars.push_back(MatrixUnit{bra.indices[t], ket.indices[t]});
    const SuperPolynomial probe = ordered_x_monomial(s, vars);
    for (const auto& el : elements) {
      const Rat entry = el.action.at(r, c);
      const Int eval = eval_at_identity(apply(s, el.op, probe));
      if (entry == 0 && eval == 0) continue;
      if (rep.status == RatioStatus::skipped) {
        if (entry == Rat(eval))
          rep.sign = 1;
        else if (entry == Rat(-eval))
          rep.sign = -1;
        else {
          rep.status = RatioStatus::violation;
          break;
        }
        rep.status = RatioStatus::constant;
      } else if (entry != Rat(rep.sign * eval)) {
        rep.status = RatioStatus::violation;
        break;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

inline std::vector<std::pair<BasisTensor, BasisTensor>> all_index_pairs(const SpaceSpec& s,
                                                                        int N) {
  std::vector<std::pair<BasisTensor, BasisTensor>> out;
  const long d = tensor_dim(s, N);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) out.emplace_back(tensor_basis(s, N, i), tensor_basis(s, N, j));
  return out;
}

}  // namespace superschur
