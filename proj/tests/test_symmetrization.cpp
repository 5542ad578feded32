#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "superschur/duality.hpp"
#include "superschur/symmetrization.hpp"

using namespace superschur;

namespace {

MatrixUnit E(int r, int c) { return MatrixUnit{r, c}; }

FormalSum<SymMonomial> mono_sum(std::initializer_list<std::pair<std::vector<MatrixUnit>, int>> t) {
  FormalSum<SymMonomial> out;
  for (const auto& [units, c] : t) out.add(SymMonomial{units}, c);
  return out;
}

FormalSum<Word> word_sum(std::initializer_list<std::pair<std::vector<MatrixUnit>, int>> t) {
  FormalSum<Word> out;
  for (const auto& [units, c] : t) out.add(Word{units}, c);
  return out;
}

// independent enumeration of set partitions via restricted growth strings
std::vector<RegularPartition> rgs_partitions(int M) {
  std::vector<RegularPartition> out;
  std::vector<int> a(M, 0);
  std::function<void(int, int)> rec = [&](int pos, int maxv) {
    if (pos == M) {
      RegularPartition p;
      p.blocks.resize(maxv);
      for (int j = 0; j < M; ++j) p.blocks[a[j]].push_back(j + 1);
      out.push_back(std::move(p));
      return;
    }
    for (int v = 0; v <= maxv; ++v) {
      a[pos] = v;
      rec(pos + 1, std::max(maxv, v + 1));
    }
  };
  if (M == 0)
    out.push_back(RegularPartition{});
  else
    rec(0, 0);
  return out;
}

Word random_word(std::mt19937_64& rng, const std::vector<MatrixUnit>& units, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.units.push_back(units[rng() % units.size()]);
  return w;
}

// all canonical monomials of exactly the given degree
void canonical_monomials(const SpaceSpec& s, int degree,
                         const std::function<void(const SymMonomial&)>& fn) {
  auto units = all_units(s);
  std::vector<MatrixUnit> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == degree) {
      fn(SymMonomial{cur});
      return;
    }
    for (std::size_t i = from; i < units.size(); ++i) {
      if (!cur.empty() && cur.back() == units[i] && parity(s, units[i])) continue;
      cur.push_back(units[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("regular partitions enumerate every set partition once") {
  CHECK(regular_partitions(0).size() == 1);
  CHECK(regular_partitions(0).front().blocks.empty());
  CHECK(regular_partitions(1) ==
        std::vector<RegularPartition>{RegularPartition{{{1}}}});

  auto p3 = regular_partitions(3);
  REQUIRE(p3.size() == 5);
  std::set<std::vector<std::vector<int>>> got;
  for (const auto& p : p3) got.insert(p.blocks);
  std::set<std::vector<std::vector<int>>> want = {
      {{1, 2, 3}}, {{1, 2}, {3}}, {{1, 3}, {2}}, {{1}, {2, 3}}, {{1}, {2}, {3}}};
  CHECK(got == want);

  const long bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int M = 0; M <= 6; ++M)
    CHECK(regular_partitions(M).size() == static_cast<std::size_t>(bell[M]));

  for (int M = 0; M <= 5; ++M) {
    auto mine = regular_partitions(M);
    auto oracle = rgs_partitions(M);
    std::set<std::vector<std::vector<int>>> a, b;
    for (const auto& p : mine) a.insert(p.blocks);
    for (const auto& p : oracle) b.insert(p.blocks);
    CHECK(a == b);
    CHECK(mine.size() == oracle.size());
  }

  // structural regularity
  for (const auto& p : regular_partitions(5)) {
    int prev_first = 0;
    for (const auto& blk : p.blocks) {
      REQUIRE(!blk.empty());
      CHECK(blk.front() > prev_first);
      prev_first = blk.front();
      CHECK(std::is_sorted(blk.begin(), blk.end()));
    }
  }
}

TEST_CASE("star operation base cases") {
  SpaceSpec s(1, 1);

  auto a = FormalSum<SymMonomial>::single(SymMonomial{{E(1, 1)}});
  CHECK(star(s, a, E(1, 2)) ==
        mono_sum({{{E(1, 1), E(1, 2)}, 1}, {{E(1, 2)}, 1}}));

  auto empty = FormalSum<SymMonomial>::single(SymMonomial{});
  CHECK(star(s, empty, E(2, 1)) == mono_sum({{{E(2, 1)}, 1}}));

  auto b = FormalSum<SymMonomial>::single(SymMonomial{{E(1, 2), E(2, 1)}});
  CHECK(star(s, b, E(1, 1)) ==
        mono_sum({{{E(1, 1), E(1, 2), E(2, 1)}, 1}, {{E(1, 2), E(2, 1)}, 1}}));
}

TEST_CASE("word images in the symmetric algebra: iterated route") {
  SpaceSpec s(1, 1);
  CHECK(symmetric_image_iter(s, Word{{E(1, 1), E(1, 2)}}) ==
        mono_sum({{{E(1, 1), E(1, 2)}, 1}, {{E(1, 2)}, 1}}));
  CHECK(symmetric_image_iter(s, Word{{E(2, 1)}}) == mono_sum({{{E(2, 1)}, 1}}));
  CHECK(symmetric_image_iter(s, Word{{E(1, 2), E(1, 2)}}).zero());
}

TEST_CASE("word images in the symmetric algebra: closed route") {
  SpaceSpec s(1, 1);
  CHECK(symmetric_image_closed(s, Word{{E(1, 1), E(1, 1)}}) ==
        mono_sum({{{E(1, 1), E(1, 1)}, 1}, {{E(1, 1)}, 1}}));
  CHECK(symmetric_image_closed(s, Word{{E(1, 2), E(2, 1)}}) ==
        mono_sum({{{E(1, 2), E(2, 1)}, 1}, {{E(1, 1)}, 1}}));
  CHECK(symmetric_image_closed(s, Word{{E(1, 2), E(1, 2)}}).zero());
  // the crossing sign is load-bearing: both surviving partitions cancel here
  CHECK(symmetric_image_closed(s, Word{{E(1, 2), E(1, 2), E(2, 1)}}).zero());
}

TEST_CASE("crossing-sign data on a regular partition") {
  SpaceSpec s(1, 1);
  Word w{{E(1, 2), E(1, 2), E(2, 1)}};
  RegularPartition merged{{{1, 3}, {2}}};
  auto sd = partition_sign_data(s, w, merged);
  CHECK(sd.delta);
  CHECK(sd.q_exponent == 1);
  RegularPartition dead{{{1, 2}, {3}}};
  CHECK_FALSE(partition_sign_data(s, w, dead).delta);
}

TEST_CASE("iterated and closed images agree") {
  SpaceSpec s11(1, 1);
  auto units11 = all_units(s11);
  long checked = 0;
  for (int M = 0; M <= 4; ++M) {
    std::vector<int> pick(M, 0);
    for (;;) {
      Word w;
      for (int t = 0; t < M; ++t) w.units.push_back(units11[pick[t]]);
      CHECK(symmetric_image_iter(s11, w) == symmetric_image_closed(s11, w));
      ++checked;
      int t = M - 1;
      while (t >= 0 && pick[t] == 3) pick[t--] = 0;
      if (t < 0) break;
      ++pick[t];
    }
  }
  CHECK(checked == 1 + 4 + 16 + 64 + 256);

  SpaceSpec s21(2, 1);
  auto units21 = all_units(s21);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(rng, units21, 5);
    CHECK(symmetric_image_iter(s21, w) == symmetric_image_closed(s21, w));
  }
}

TEST_CASE("the image is well defined on the enveloping quotient") {
  auto check_instance = [](const SpaceSpec& s, const Word& A, MatrixUnit X, MatrixUnit Y,
                           const Word& B) {
    int koszul = (parity(s, X) && parity(s, Y)) ? -1 : 1;
    auto glue = [&](const std::vector<MatrixUnit>& mid) {
      std::vector<MatrixUnit> u = A.units;
      u.insert(u.end(), mid.begin(), mid.end());
      u.insert(u.end(), B.units.begin(), B.units.end());
      return Word{u};
    };
    FormalSum<Word> lhs;
    lhs.add(glue({X, Y}), 1);
    lhs.add(glue({Y, X}), -koszul);
    FormalSum<Word> rhs;
    const auto br = super_bracket(s, X, Y);
    for (const auto& [u, c] : br.terms()) rhs.add(glue({u}), c);
    CHECK(symmetric_image(s, lhs) == symmetric_image(s, rhs));
  };

  SpaceSpec s11(1, 1);
  auto units11 = all_units(s11);
  for (int la = 0; la + 2 <= 4; ++la)
    for (int lb = 0; la + lb + 2 <= 4; ++lb) {
      // exhaustive over gl(1,1) words of the given lengths
      std::vector<int> pick(la + lb, 0);
      for (;;) {
        Word A, B;
        for (int t = 0; t < la; ++t) A.units.push_back(units11[pick[t]]);
        for (int t = 0; t < lb; ++t) B.units.push_back(units11[pick[la + t]]);
        for (auto X : units11)
          for (auto Y : units11) check_instance(s11, A, X, Y, B);
        int t = la + lb - 1;
        while (t >= 0 && pick[t] == 3) pick[t--] = 0;
        if (t < 0) break;
        ++pick[t];
      }
    }

  SpaceSpec s21(2, 1);
  auto units21 = all_units(s21);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int la = static_cast<int>(rng() % 3), lb = static_cast<int>(rng() % (4 - la - 2 + 1));
    check_instance(s21, random_word(rng, units21, la), units21[rng() % units21.size()],
                   units21[rng() % units21.size()], random_word(rng, units21, lb));
  }
}

TEST_CASE("special symmetrization inverts the expansion") {
  SpaceSpec s(1, 1);
  CHECK(special_symmetrize(s, mono_sum({{{E(1, 1)}, 1}})) == word_sum({{{E(1, 1)}, 1}}));
  CHECK(special_symmetrize(s, mono_sum({{{E(1, 1), E(1, 1)}, 1}})) ==
        word_sum({{{E(1, 1), E(1, 1)}, 1}, {{E(1, 1)}, -1}}));
  CHECK(special_symmetrize(s, mono_sum({{{E(1, 2), E(2, 1)}, 1}})) ==
        word_sum({{{E(1, 2), E(2, 1)}, 1}, {{E(1, 1)}, -1}}));
}

TEST_CASE("round trip: expansion of the symmetrization is the identity") {
  SpaceSpec s11(1, 1);
  for (int d = 0; d <= 4; ++d)
    canonical_monomials(s11, d, [&](const SymMonomial& mono) {
      auto a = FormalSum<SymMonomial>::single(mono);
      CHECK(symmetric_image(s11, special_symmetrize(s11, a)) == a);
    });

  SpaceSpec s21(2, 1);
  for (int d = 0; d <= 3; ++d)
    canonical_monomials(s21, d, [&](const SymMonomial& mono) {
      auto a = FormalSum<SymMonomial>::single(mono);
      CHECK(symmetric_image(s21, special_symmetrize(s21, a)) == a);
    });

  // and on a few random sums
  std::mt19937_64 rng(5);
  auto units = all_units(s21);
  for (int trial = 0; trial < 10; ++trial) {
    FormalSum<SymMonomial> a;
    for (int i = 0; i < 4; ++i) {
      auto srt = super_sort(s21, random_word(rng, units, static_cast<int>(rng() % 4)).units);
      if (srt) a.add(srt->first, Int(static_cast<int>(rng() % 5) - 2));
    }
    CHECK(symmetric_image(s21, special_symmetrize(s21, a)) == a);
  }
}

TEST_CASE("leading term of a word image is its sorted monomial") {
  SpaceSpec s(2, 1);
  auto units = all_units(s);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int M = 1 + static_cast<int>(rng() % 4);
    Word w = random_word(rng, units, M);
    auto img = symmetric_image_closed(s, w);
    auto lead = super_sort(s, w.units);
    for (const auto& [mono, c] : img.terms()) {
      if (lead && mono == lead->first) continue;
      CHECK(mono.degree() < M);
    }
    if (lead)
      CHECK(img.coeff(lead->first) == lead->second);
  }
}

TEST_CASE("images of Q(n) words stay inside the Q(n) symmetric algebra") {
  for (int n = 1; n <= 2; ++n) {
    SpaceSpec s(n, n);
    // representatives of the distinct F elements: row index in 1..n
    std::vector<FormalSum<MatrixUnit>> fs;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= 2 * n; ++j) fs.push_back(q_unit(s, i, j));

    // spanning monomial products of F's up to degree 3, as vectors
    std::vector<FormalSum<SymMonomial>> spanning;
    spanning.push_back(FormalSum<SymMonomial>::single(SymMonomial{}));
    std::function<void(std::size_t, int, const FormalSum<SymMonomial>&)> build =
        [&](std::size_t from, int depth, const FormalSum<SymMonomial>& acc) {
          if (depth == 3) return;
          for (std::size_t i = from; i < fs.size(); ++i) {
            auto f = FormalSum<SymMonomial>();
            for (const auto& [u, c] : fs[i].terms()) f.add(SymMonomial{{u}}, c);
            auto next = sym_mul(s, acc, f);
            spanning.push_back(next);
            build(i, depth + 1, next);
          }
        };
    build(0, 0, FormalSum<SymMonomial>::single(SymMonomial{}));

    // probe images: expansions of products of up to three F's as word sums
    std::vector<FormalSum<Word>> probes;
    std::mt19937_64 rng(31);
    const int max_products = n == 1 ? 0 : 40;  // n=1: exhaustive; n=2: sampled length-3
    std::function<void(int, const FormalSum<Word>&)> grow = [&](int depth,
                                                                const FormalSum<Word>& acc) {
      if (depth > 0) probes.push_back(acc);
      if (depth == (n == 1 ? 3 : 2)) return;
      for (const auto& f : fs) {
        FormalSum<Word> next;
        for (const auto& [w, cw] : acc.terms())
          for (const auto& [u, cu] : f.terms()) {
            auto units = w.units;
            units.push_back(u);
            next.add(Word{units}, cw * cu);
          }
        grow(depth + 1, next);
      }
    };
    grow(0, FormalSum<Word>::single(Word{}));
    for (int extra = 0; extra < max_products; ++extra) {
      FormalSum<Word> acc = FormalSum<Word>::single(Word{});
      for (int d = 0; d < 3; ++d) {
        const auto& f = fs[rng() % fs.size()];
        FormalSum<Word> next;
        for (const auto& [w, cw] : acc.terms())
          for (const auto& [u, cu] : f.terms()) {
            auto units = w.units;
            units.push_back(u);
            next.add(Word{units}, cw * cu);
          }
        acc = next;
      }
      probes.push_back(acc);
    }

    // shared monomial indexing
    std::map<SymMonomial, std::size_t> index;
    auto index_of = [&](const SymMonomial& m) {
      return index.try_emplace(m, index.size()).first->second;
    };
    std::vector<FormalSum<SymMonomial>> images;
    for (const auto& p : probes) images.push_back(symmetric_image(s, p));
    for (const auto& v : spanning)
      for (const auto& [m, c] : v.terms()) index_of(m);
    for (const auto& v : images)
      for (const auto& [m, c] : v.terms()) index_of(m);

    auto vectorize_sum = [&](const FormalSum<SymMonomial>& v) {
      std::vector<Rat> out(index.size(), Rat(0));
      for (const auto& [m, c] : v.terms()) out[index.at(m)] = Rat(c);
      return out;
    };

    detail::RrefBasis basis(index.size());
    for (const auto& v : spanning) basis.insert(vectorize_sum(v));
    for (const auto& img : images) CHECK(basis.contains(vectorize_sum(img)));
  }
}
