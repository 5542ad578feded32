#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "superschur/algebra_core.hpp"

namespace superschur {

// The special symmetrization. The map from enveloping-algebra words into the
// symmetric algebra is built two independent ways: by left-folding the star
// operation, and by a closed sum over regular set partitions with explicit
// Kronecker-delta and parity bookkeeping. Its inverse (the special
// symmetrization proper, S -> U) is recovered degree by degree from the
// triangularity of the word-to-monomial expansion.

/// Set partition of {1..M} in its regular presentation: elements increase
/// within each block and blocks are ordered by their first elements.
struct RegularPartition {
  std::vector<std::vector<int>> blocks;
  bool operator==(const RegularPartition&) const = default;
};

/// Streams every set partition of {1..M} exactly once, regularly presented.
/// Elements are inserted in increasing order, each appended to the end of an
/// existing block or opening a new one, so regularity holds by construction.
/// The number of partitions visited is the Bell number B_M.
inline void for_each_regular_partition(int M,
                                       const std::function<void(const RegularPartition&)>& fn) {
  if (M < 0) throw std::invalid_argument("for_each_regular_partition: M must be >= 0");
  RegularPartition p;
  std::function<void(int)> rec = [&](int next) {
    if (next > M) {
      fn(p);
      return;
    }
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      p.blocks[b].push_back(next);
      rec(next + 1);
      p.blocks[b].pop_back();
    }
    p.blocks.push_back({next});
    rec(next + 1);
    p.blocks.pop_back();
  };
  rec(1);
}

inline std::vector<RegularPartition> regular_partitions(int M) {
  std::vector<RegularPartition> out;
  for_each_regular_partition(M, [&](const RegularPartition& p) { out.push_back(p); });
  return out;
}

/// The coefficient data attached to a regular partition of the positions of
/// a word: `delta` is the product of Kronecker deltas chaining each block,
/// and `q_exponent` counts, for every unit, the odd partial block products of
/// later blocks it has to cross.
struct PartitionSignData {
  bool delta = false;
  int q_exponent = 0;
};

inline PartitionSignData partition_sign_data(const SpaceSpec& s, const Word& w,
                                             const RegularPartition& alpha) {
  const auto& us = w.units;
  PartitionSignData out;

  for (const auto& blk : alpha.blocks)
    for (std::size_t k = 0; k + 1 < blk.size(); ++k)
      if (us[blk[k] - 1].col != us[blk[k + 1] - 1].row) return out;  // delta = 0
  out.delta = true;

  // q = sum over positions p of p(u_p) * sum over later-started blocks that
  // already contain an element below p of the parity of that block's partial
  // product (row from the block's first unit, column from its largest
  // element below p).
  const int r = static_cast<int>(alpha.blocks.size());
  for (int t = 0; t < r; ++t)
    for (int pos : alpha.blocks[t]) {
      int pu = parity(s, us[pos - 1]);
      if (!pu) continue;
      for (int k = t + 1; k < r; ++k) {
        const auto& blk = alpha.blocks[k];
        if (blk.front() >= pos) continue;
        int below = blk.front();
        for (int e : blk)
          if (e < pos) below = e;
        int pp = (s.parity(us[blk.front() - 1].row) + s.parity(us[below - 1].col)) & 1;
        out.q_exponent += pu * pp;
      }
    }
  return out;
}

/// The star operation: extend a symmetric-algebra element by one generator.
/// (Y_1...Y_k) * X = Y_1...Y_k X + sum_r (-1)^{P(r)} Y_1...(Y_r X)...Y_k with
/// P(r) = p(X) * (p(Y_{r+1}) + ... + p(Y_k)) and Y_r X the matrix product.
inline FormalSum<SymMonomial> star(const SpaceSpec& s, const FormalSum<SymMonomial>& a,
                                   MatrixUnit x) {
  require_unit(s, x);
  FormalSum<SymMonomial> out;
  const int px = parity(s, x);
  for (const auto& [mono, c] : a.terms()) {
    const auto& ys = mono.units;
    {
      auto u = ys;
      u.push_back(x);
      if (auto srt = koszul_sort_units(s, std::move(u)))
        out.add(SymMonomial{std::move(srt->first)}, c * srt->second);
    }
    std::vector<int> suffix(ys.size() + 1, 0);
    for (int r = static_cast<int>(ys.size()) - 1; r >= 0; --r)
      suffix[r] = suffix[r + 1] + parity(s, ys[r]);
    for (std::size_t r = 0; r < ys.size(); ++r) {
      auto prod = unit_product(ys[r], x);
      if (!prod) continue;
      int sgn = (px && (suffix[r + 1] & 1)) ? -1 : 1;
      auto u = ys;
      u[r] = *prod;
      if (auto srt = koszul_sort_units(s, std::move(u)))
        out.add(SymMonomial{std::move(srt->first)}, c * sgn * srt->second);
    }
  }
  return out;
}

/// Image of a word in the symmetric algebra, by iterated star.
inline FormalSum<SymMonomial> symmetric_image_iter(const SpaceSpec& s, const Word& w) {
  auto acc = FormalSum<SymMonomial>::single(SymMonomial{});
  for (auto u : w.units) acc = star(s, acc, u);
  return acc;
}

/// Image of a word in the symmetric algebra, by the closed formula: a sum
/// over all regular partitions of the positions, each contributing its
/// delta-chained block products with sign (-1)^q.
inline FormalSum<SymMonomial> symmetric_image_closed(const SpaceSpec& s, const Word& w) {
  for (auto u : w.units) require_unit(s, u);
  FormalSum<SymMonomial> out;
  for_each_regular_partition(w.length(), [&](const RegularPartition& alpha) {
    auto sd = partition_sign_data(s, w, alpha);
    if (!sd.delta) return;
    std::vector<MatrixUnit> units;
    units.reserve(alpha.blocks.size());
    for (const auto& blk : alpha.blocks)
      units.push_back(MatrixUnit{w.units[blk.front() - 1].row, w.units[blk.back() - 1].col});
    if (auto srt = koszul_sort_units(s, std::move(units)))
      out.add(SymMonomial{std::move(srt->first)},
              Int((sd.q_exponent & 1) ? -srt->second : srt->second));
  });
  return out;
}

/// Linear extension over sums of words (iterated route).
inline FormalSum<SymMonomial> symmetric_image(const SpaceSpec& s, const FormalSum<Word>& u) {
  FormalSum<SymMonomial> out;
  for (const auto& [w, c] : u.terms()) out += c * symmetric_image_iter(s, w);
  return out;
}

/// The special symmetrization S(gl(m,n)) -> U(gl(m,n)): the inverse of the
/// word-to-monomial expansion. Each monomial lifts to the word in the same
/// order (leading coefficient +1); the lower-degree defect is peeled off
/// recursively, which terminates because the expansion preserves the top
/// degree.
inline FormalSum<Word> special_symmetrize(const SpaceSpec& s, FormalSum<SymMonomial> a) {
  FormalSum<Word> out;
  while (!a.zero()) {
    int top = 0;
    for (const auto& [mono, c] : a.terms()) top = std::max(top, mono.degree());
    FormalSum<Word> lift;
    for (const auto& [mono, c] : a.terms())
      if (mono.degree() == top) lift.add(Word{mono.units}, c);
    out += lift;
    a -= symmetric_image(s, lift);
  }
  return out;
}

}  // namespace superschur
