#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "superschur/group_algebra.hpp"
#include "superschur/symmetrization.hpp"
#include "superschur/tensor_rep.hpp"

namespace superschur {

// Class-sum elements of the group algebras, the cyclic trace-like invariants
// of the symmetric algebras, and the instance checks that both act
// identically on tensor space after special symmetrization.

struct IntegerPartition {
  std::vector<int> parts;  // weakly decreasing, all >= 1

  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    for (int x : parts)
      if (x < 1) throw std::invalid_argument("IntegerPartition: parts must be >= 1");
  }

  int weight() const {
    int w = 0;
    for (int x : parts) w += x;
    return w;
  }
  auto operator<=>(const IntegerPartition&) const = default;
};

inline std::vector<IntegerPartition> partitions_of(int w) {
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxPart) {
    if (rem == 0) {
      out.emplace_back(IntegerPartition{cur});
      return;
    }
    for (int p = std::min(rem, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(w, w);
  return out;
}

/// All partitions with 1 <= weight <= maxWeight, by increasing weight.
inline std::vector<IntegerPartition> partitions_up_to(int maxWeight) {
  std::vector<IntegerPartition> out;
  for (int w = 1; w <= maxWeight; ++w)
    for (auto& p : partitions_of(w)) out.push_back(std::move(p));
  return out;
}

namespace detail {

inline void for_each_injective_tuple(int N, int k,
                                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple;
  std::vector<char> used(N + 1, 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(tuple.size()) == k) {
      fn(tuple);
      return;
    }
    for (int v = 1; v <= N; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      tuple.push_back(v);
      rec();
      tuple.pop_back();
      used[v] = 0;
    }
  };
  rec();
}

inline std::vector<std::vector<int>> cycles_of(const IntegerPartition& rho,
                                               const std::vector<int>& tuple) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  for (int part : rho.parts) {
    cycles.emplace_back(tuple.begin() + pos, tuple.begin() + pos + part);
    pos += part;
  }
  return cycles;
}

}  // namespace detail

/// Central element of C[S_N]: the sum over injective index tuples of the
/// products of disjoint cycles with lengths the parts of rho. Empty when
/// |rho| > N (no injective tuple exists).
inline GroupAlgebraElement<Permutation> class_sum(const IntegerPartition& rho, int N) {
  GroupAlgebraElement<Permutation> out;
  detail::for_each_injective_tuple(N, rho.weight(), [&](const std::vector<int>& tuple) {
    out.add(Permutation::from_cycles(N, detail::cycles_of(rho, tuple)), 1);
  });
  return out;
}

/// Central element of C[Se(N)]: for every injective tuple and every subset
/// alpha of its value set, the conjugate a_alpha (cycles) a_alpha^{-1} in
/// normal form.
inline GroupAlgebraElement<SergeevElement> sergeev_class_sum(const IntegerPartition& rho, int N) {
  GroupAlgebraElement<SergeevElement> out;
  detail::for_each_injective_tuple(N, rho.weight(), [&](const std::vector<int>& tuple) {
    SergeevElement perm{0, std::vector<int>(N, 0),
                        Permutation::from_cycles(N, detail::cycles_of(rho, tuple))};
    std::vector<int> values = tuple;
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size();
    for (std::size_t mask = 0; mask < (1ull << k); ++mask) {
      SergeevElement conj = SergeevElement::identity(N);
      for (std::size_t t = 0; t < k; ++t)
        if ((mask >> t) & 1) conj.a[values[t] - 1] = 1;
      out.add(sergeev_mul(sergeev_mul(conj, perm), sergeev_inverse(conj)), 1);
    }
  });
  return out;
}

/// Hooks for the deliberate-perturbation controls: the verification must
/// detect a dropped parity sign or a halved index range.
struct InvariantOptions {
  bool drop_sign = false;        // omit (-1)^{p_{i_2}+..+p_{i_k}}
  bool half_index_range = false; // q-flavor only: tuples over 1..n instead of 1..2n
};

namespace detail {

inline void for_each_tuple(int d, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(k, 1);
  if (k == 0) {
    fn(tuple);
    return;
  }
  for (;;) {
    fn(tuple);
    int t = k - 1;
    while (t >= 0 && tuple[t] == d) tuple[t--] = 1;
    if (t < 0) break;
    ++tuple[t];
  }
}

}  // namespace detail

/// The signed cyclic invariant of S(gl(m,n)):
/// sum over (i_1..i_k) of (-1)^{p_{i_2}+..+p_{i_k}} E_{i_1 i_2}..E_{i_k i_1}.
inline FormalSum<SymMonomial> gelfand_invariant(const SpaceSpec& s, int k,
                                                const InvariantOptions& opt = {}) {
  if (k < 1) throw std::invalid_argument("gelfand_invariant: k must be >= 1");
  FormalSum<SymMonomial> out;
  detail::for_each_tuple(s.dim(), k, [&](const std::vector<int>& i) {
    int e = 0;
    if (!opt.drop_sign)
      for (int t = 1; t < k; ++t) e += s.parity(i[t]);
    std::vector<MatrixUnit> units;
    units.reserve(k);
    for (int t = 0; t < k; ++t) units.push_back(MatrixUnit{i[t], i[(t + 1) % k]});
    if (auto srt = koszul_sort_units(s, std::move(units)))
      out.add(SymMonomial{std::move(srt->first)}, Int(((e & 1) ? -1 : 1) * srt->second));
  });
  return out;
}

inline FormalSum<SymMonomial> gelfand_invariant(const SpaceSpec& s, const IntegerPartition& rho,
                                                const InvariantOptions& opt = {}) {
  auto out = FormalSum<SymMonomial>::single(SymMonomial{});
  for (int part : rho.parts) out = sym_mul(s, out, gelfand_invariant(s, part, opt));
  return out;
}

/// The Q(n) counterpart, built from F_{ij} = E_ij + E_{delta(i) delta(j)}
/// with tuples over the full range 1..2n and the result expanded in
/// S(gl(n,n)).
inline FormalSum<SymMonomial> gelfand_invariant_q(int n, int k, const InvariantOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("gelfand_invariant_q: n must be >= 1");
  if (k < 1) throw std::invalid_argument("gelfand_invariant_q: k must be >= 1");
  const SpaceSpec s(n, n);
  const int range = opt.half_index_range ? n : 2 * n;
  FormalSum<SymMonomial> out;
  detail::for_each_tuple(range, k, [&](const std::vector<int>& i) {
    int e = 0;
    if (!opt.drop_sign)
      for (int t = 1; t < k; ++t) e += s.parity(i[t]);
    const Int tuple_sign = (e & 1) ? -1 : 1;
    // expand the product of F's: one E or its delta-image per factor
    for (std::size_t mask = 0; mask < (1ull << k); ++mask) {
      std::vector<MatrixUnit> units;
      units.reserve(k);
      for (int t = 0; t < k; ++t) {
        int r = i[t], c = i[(t + 1) % k];
        if ((mask >> t) & 1) {
          r = delta_index(s, r);
          c = delta_index(s, c);
        }
        units.push_back(MatrixUnit{r, c});
      }
      if (auto srt = koszul_sort_units(s, std::move(units)))
        out.add(SymMonomial{std::move(srt->first)}, tuple_sign * srt->second);
    }
  });
  return out;
}

inline FormalSum<SymMonomial> gelfand_invariant_q(int n, const IntegerPartition& rho,
                                                  const InvariantOptions& opt = {}) {
  const SpaceSpec s(n, n);
  auto out = FormalSum<SymMonomial>::single(SymMonomial{});
  for (int part : rho.parts) out = sym_mul(s, out, gelfand_invariant_q(n, part, opt));
  return out;
}

struct MatchReport {
  bool pass = false;
  ExactMatrix lhs;  // group-algebra side
  ExactMatrix rhs;  // enveloping-algebra side
};

/// Checks that the class sum of S_N and the special symmetrization of the
/// cyclic invariant act identically on (C^{m|n})^{tensor N}.
inline MatchReport verify_class_sum_gl(const SpaceSpec& s, int N, const IntegerPartition& rho,
                                       const InvariantOptions& opt = {}) {
  MatchReport rep;
  rep.lhs = group_algebra_act(class_sum(rho, N), s, N);
  rep.rhs = matrix_of_word(s, N, special_symmetrize(s, gelfand_invariant(s, rho, opt)));
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

/// The Q(n)/Sergeev counterpart on (C^{n|n})^{tensor N}.
inline MatchReport verify_class_sum_q(int n, int N, const IntegerPartition& rho,
                                      const InvariantOptions& opt = {}) {
  const SpaceSpec s(n, n);
  MatchReport rep;
  rep.lhs = group_algebra_act(sergeev_class_sum(rho, N), s, N);
  rep.rhs = matrix_of_word(s, N, special_symmetrize(s, gelfand_invariant_q(n, rho, opt)));
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

enum class CommutantSide { symmetric_group, sergeev_group };

/// Generator matrices of the relevant algebra action: all gamma(E_ab), or all
/// gamma(F_ij) in the Q context.
inline std::vector<ExactMatrix> algebra_generator_matrices(const SpaceSpec& s, int N,
                                                           CommutantSide which) {
  std::vector<ExactMatrix> out;
  if (which == CommutantSide::symmetric_group) {
    for (auto u : all_units(s)) out.push_back(matrix_of_unit(s, N, u));
  } else {
    if (!s.q_context()) throw std::invalid_argument("sergeev side requires m == n");
    for (int i = 1; i <= s.dim(); ++i)
      for (int j = 1; j <= s.dim(); ++j) {
        if (i > s.n) continue;  // F_{delta(i) delta(j)} = F_ij: keep one representative
        FormalSum<Word> w;
        const auto f = q_unit(s, i, j);
        for (const auto& [u, c] : f.terms()) w.add(Word{{u}}, c);
        out.push_back(matrix_of_word(s, N, w));
      }
  }
  return out;
}

/// Generator matrices of the group action: adjacent transpositions, plus the
/// a_k operators on the Sergeev side.
inline std::vector<ExactMatrix> group_generator_matrices(const SpaceSpec& s, int N,
                                                         CommutantSide which) {
  std::vector<ExactMatrix> out;
  for (int t = 1; t < N; ++t) {
    Permutation tau = Permutation::from_cycles(N, {{t, t + 1}});
    out.push_back(group_algebra_act(GroupAlgebraElement<Permutation>::single(tau), s, N));
  }
  if (which == CommutantSide::sergeev_group) {
    for (int k = 1; k <= N; ++k) {
      SergeevElement g = SergeevElement::identity(N);
      g.a[k - 1] = 1;
      out.push_back(group_algebra_act(GroupAlgebraElement<SergeevElement>::single(g), s, N));
    }
  }
  return out;
}

/// True iff x commutes with every algebra generator and every group
/// generator of the chosen side.
inline bool centrality_check(const ExactMatrix& x, const SpaceSpec& s, int N,
                             CommutantSide which) {
  for (const auto& g : algebra_generator_matrices(s, N, which))
    if (!x.commutes_with(g)) return false;
  for (const auto& g : group_generator_matrices(s, N, which))
    if (!x.commutes_with(g)) return false;
  return true;
}

}  // namespace superschur
