#pragma once

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "superschur/central_elements.hpp"
#include "superschur/duality.hpp"

namespace superschur {

// The property battery: every check pins its configurations and expected
// counts in code and reports exact pass/fail. No tolerances anywhere.

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace checks_detail {

inline void for_each_word(const SpaceSpec& s, int len,
                          const std::function<void(const Word&)>& fn) {
  auto units = all_units(s);
  std::vector<int> pick(len, 0);
  for (;;) {
    Word w;
    for (int t = 0; t < len; ++t) w.units.push_back(units[pick[t]]);
    fn(w);
    int t = len - 1;
    while (t >= 0 && pick[t] == static_cast<int>(units.size()) - 1) pick[t--] = 0;
    if (t < 0) break;
    ++pick[t];
  }
}

inline void canonical_monomials(const SpaceSpec& s, int degree,
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

inline Word random_word(std::mt19937_64& rng, const std::vector<MatrixUnit>& units, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.units.push_back(units[rng() % units.size()]);
  return w;
}

inline std::string rho_string(const IntegerPartition& rho) {
  std::string out = "(";
  for (std::size_t i = 0; i < rho.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rho.parts[i]);
  }
  return out + ")";
}

}  // namespace checks_detail

/// Class sums of S_N against symmetrized cyclic invariants over the whole
/// desk-scale grid, every partition of weight <= N, exact matrix equality.
inline CheckResult check_class_sum_grid_gl() {
  struct Cfg {
    int m, n, N;
  };
  const std::vector<Cfg> grid = {{1, 1, 2}, {1, 1, 3}, {2, 1, 3}, {1, 2, 3}, {2, 2, 2}};
  CheckResult res{"class sums of S_N match symmetrized invariants", true, ""};
  int total = 0;
  std::string failures;
  for (const auto& cfg : grid) {
    SpaceSpec s(cfg.m, cfg.n);
    for (const auto& rho : partitions_up_to(cfg.N)) {
      ++total;
      if (!verify_class_sum_gl(s, cfg.N, rho).pass) {
        res.pass = false;
        failures += " FAIL(" + std::to_string(cfg.m) + "," + std::to_string(cfg.n) + "," +
                    std::to_string(cfg.N) + ")rho=" + checks_detail::rho_string(rho);
      }
    }
  }
  res.detail = std::to_string(grid.size()) + " configurations, " + std::to_string(total) +
               " partition checks" + failures;
  return res;
}

/// Sergeev class sums against symmetrized Q(n) invariants.
inline CheckResult check_class_sum_grid_q() {
  struct Cfg {
    int n, N;
  };
  const std::vector<Cfg> grid = {{1, 2}, {1, 3}, {2, 2}};
  CheckResult res{"sergeev class sums match symmetrized Q(n) invariants", true, ""};
  int total = 0;
  std::string failures;
  for (const auto& cfg : grid)
    for (const auto& rho : partitions_up_to(cfg.N)) {
      ++total;
      if (!verify_class_sum_q(cfg.n, cfg.N, rho).pass) {
        res.pass = false;
        failures += " FAIL(n=" + std::to_string(cfg.n) + ",N=" + std::to_string(cfg.N) +
                    ")rho=" + checks_detail::rho_string(rho);
      }
    }
  res.detail = std::to_string(grid.size()) + " configurations, " + std::to_string(total) +
               " partition checks" + failures;
  return res;
}

/// Iterated and closed symmetric images agree: exhaustively on gl(1,1) words
/// of length <= 4 and on seeded random length-5 words over gl(2,1).
inline CheckResult check_image_consistency(std::uint64_t seed) {
  CheckResult res{"iterated and closed symmetric images agree", true, ""};
  SpaceSpec s11(1, 1);
  long words = 0;
  for (int M = 0; M <= 4; ++M)
    checks_detail::for_each_word(s11, M, [&](const Word& w) {
      ++words;
      if (symmetric_image_iter(s11, w) != symmetric_image_closed(s11, w)) res.pass = false;
    });

  SpaceSpec s21(2, 1);
  auto units = all_units(s21);
  std::mt19937_64 rng(seed);
  const int random_trials = 100;
  for (int trial = 0; trial < random_trials; ++trial) {
    Word w = checks_detail::random_word(rng, units, 5);
    if (symmetric_image_iter(s21, w) != symmetric_image_closed(s21, w)) res.pass = false;
  }
  res.detail = std::to_string(words - 1) + " gl(1,1) words of length 1..4 plus the empty word, " +
               std::to_string(random_trials) + " random gl(2,1) words of length 5";
  return res;
}

/// The symmetric image is well defined on the enveloping quotient: inserting
/// XY - (-1)^{p(X)p(Y)} YX or [X,Y] between arbitrary words gives equal
/// images. 200 seeded instances over gl(2,1), total length <= 5.
inline CheckResult check_quotient_well_defined(std::uint64_t seed) {
  CheckResult res{"symmetric image respects the enveloping relations", true, ""};
  SpaceSpec s(2, 1);
  auto units = all_units(s);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    const int la = static_cast<int>(rng() % 4);            // |A| + |B| + 2 <= 5
    const int lb = static_cast<int>(rng() % (4 - la));
    Word A = checks_detail::random_word(rng, units, la);
    Word B = checks_detail::random_word(rng, units, lb);
    MatrixUnit X = units[rng() % units.size()];
    MatrixUnit Y = units[rng() % units.size()];
    const int koszul = (parity(s, X) && parity(s, Y)) ? -1 : 1;
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
    if (symmetric_image(s, lhs) != symmetric_image(s, rhs)) res.pass = false;
  }
  res.detail = std::to_string(trials) + " seeded instances over gl(2,1), total length <= 5";
  return res;
}

/// Expansion after symmetrization is the identity on canonical monomials:
/// degree <= 4 over gl(1,1) and degree <= 3 over gl(2,1).
inline CheckResult check_round_trip() {
  CheckResult res{"symmetrize-then-expand is the identity", true, ""};
  long count11 = 0, count21 = 0;
  SpaceSpec s11(1, 1);
  for (int d = 0; d <= 4; ++d)
    checks_detail::canonical_monomials(s11, d, [&](const SymMonomial& mono) {
      ++count11;
      auto a = FormalSum<SymMonomial>::single(mono);
      if (symmetric_image(s11, special_symmetrize(s11, a)) != a) res.pass = false;
    });
  SpaceSpec s21(2, 1);
  for (int d = 0; d <= 3; ++d)
    checks_detail::canonical_monomials(s21, d, [&](const SymMonomial& mono) {
      ++count21;
      auto a = FormalSum<SymMonomial>::single(mono);
      if (symmetric_image(s21, special_symmetrize(s21, a)) != a) res.pass = false;
    });
  res.detail = std::to_string(count11) + " gl(1,1) monomials of degree <= 4, " +
               std::to_string(count21) + " gl(2,1) monomials of degree <= 3";
  return res;
}

/// The operator realization factors through the symmetric image, checked both
/// as normal-ordered operator equality and by applying both sides to every
/// superpolynomial monomial of degree <= 3 over gl(1,1).
inline CheckResult check_diffop_factorization() {
  CheckResult res{"operator realization factors through the symmetric image", true, ""};
  SpaceSpec s(1, 1);
  std::vector<XMonomial> probes;
  for (int d = 0; d <= 3; ++d)
    checks_detail::canonical_monomials(s, d,
                                       [&](const SymMonomial& m) { probes.push_back(XMonomial{m.units}); });
  long words = 0;
  for (int len = 0; len <= 3; ++len)
    checks_detail::for_each_word(s, len, [&](const Word& w) {
      ++words;
      WeylOperator direct = diffop_word(s, w);
      WeylOperator through = diffop_sym(s, symmetric_image_iter(s, w));
      if (direct != through) res.pass = false;
      for (const auto& probe : probes) {
        SuperPolynomial f = SuperPolynomial::single(probe);
        if (apply(s, direct, f) != apply(s, through, f)) res.pass = false;
      }
    });
  // equivalent formulation on the symmetric side
  for (int d = 0; d <= 3; ++d)
    checks_detail::canonical_monomials(s, d, [&](const SymMonomial& mono) {
      auto via_sigma = diffop(s, special_symmetrize(s, FormalSum<SymMonomial>::single(mono)));
      if (diffop_sym(s, mono) != via_sigma) res.pass = false;
    });
  res.detail = std::to_string(words) + " gl(1,1) words of length <= 3, applied to " +
               std::to_string(probes.size()) + " monomials of degree <= 3";
  return res;
}

/// Tree action of symmetric monomials equals the enveloping action of their
/// symmetrization, as matrices, degree <= 3 at (1,1,2) and (1,1,3).
inline CheckResult check_tree_action_matches() {
  CheckResult res{"tree action matches the symmetrized enveloping action", true, ""};
  SpaceSpec s(1, 1);
  long count = 0;
  for (int N = 2; N <= 3; ++N)
    for (int d = 0; d <= 3; ++d)
      checks_detail::canonical_monomials(s, d, [&](const SymMonomial& mono) {
        ++count;
        auto single = FormalSum<SymMonomial>::single(mono);
        ExactMatrix tree = matrix_of(
            [&](const BasisTensor& v) { return act_sym_tree(s, single, v); }, s, N);
        ExactMatrix env = matrix_of_word(s, N, special_symmetrize(s, single));
        if (tree != env) res.pass = false;
      });
  res.detail = std::to_string(count) + " monomial/configuration pairs at (1,1,2) and (1,1,3)";
  return res;
}

/// The entry/evaluation ratio is a fixed sign per index pair across a mixed
/// test set of enveloping words and symmetric monomials, at (1,1,1) and
/// (1,1,2).
inline CheckResult check_entry_evaluation_ratio() {
  CheckResult res{"matrix entries match operator evaluations up to a fixed sign", true, ""};
  std::ostringstream detail;
  SpaceSpec s(1, 1);
  for (int N = 1; N <= 2; ++N) {
    std::vector<RatioElement> elements;
    std::size_t n_words = 0;
    for (int len = 0; len <= 2; ++len)
      checks_detail::for_each_word(s, len, [&](const Word& w) {
        ++n_words;
        elements.push_back(ratio_element_from_words(s, N, FormalSum<Word>::single(w)));
      });
    std::size_t n_monos = 0;
    for (int d = 0; d <= 2; ++d)
      checks_detail::canonical_monomials(s, d, [&](const SymMonomial& m) {
        ++n_monos;
        elements.push_back(ratio_element_from_sym(s, N, FormalSum<SymMonomial>::single(m)));
      });
    auto reports = ratio_check(s, all_index_pairs(s, N), elements);
    long constant = 0, skipped = 0;
    for (const auto& rep : reports) {
      if (rep.status == RatioStatus::violation) res.pass = false;
      if (rep.status == RatioStatus::constant) ++constant;
      if (rep.status == RatioStatus::skipped) ++skipped;
    }
    if (constant == 0) res.pass = false;
    detail << "N=" << N << ": " << elements.size() << " elements (" << n_words << " words, "
           << n_monos << " monomials), " << constant << " constant pairs, " << skipped
           << " skipped; ";
  }
  res.detail = detail.str();
  return res;
}

/// Commutant duality instances: group span equals commutant of algebra span
/// and vice versa.
inline CheckResult check_duality_instances() {
  CheckResult res{"group image and algebra image are mutual commutants", true, ""};
  std::ostringstream detail;
  SpaceSpec s(1, 1);
  for (int N = 1; N <= 3; ++N) {
    auto rep = verify_duality(s, N, CommutantSide::symmetric_group);
    if (!rep.pass) res.pass = false;
    detail << "sym(1,1," << N << "): dims group=" << rep.group_span
           << " algebra=" << rep.algebra_span << " comm(group)=" << rep.commutant_of_group
           << " comm(algebra)=" << rep.commutant_of_algebra << (rep.pass ? "" : " FAIL") << "; ";
  }
  auto rep = verify_duality(s, 2, CommutantSide::sergeev_group);
  if (!rep.pass) res.pass = false;
  detail << "sergeev(1,1,2): dims group=" << rep.group_span << " algebra=" << rep.algebra_span
         << " comm(group)=" << rep.commutant_of_group
         << " comm(algebra)=" << rep.commutant_of_algebra << (rep.pass ? "" : " FAIL");
  res.detail = detail.str();
  return res;
}

/// Group-theoretic sanity: the Sergeev group closure has order 2^{N+1} N!,
/// the tensor actions are homomorphisms, and all class sums are central.
inline CheckResult check_group_sanity() {
  CheckResult res{"group orders, homomorphisms and centrality", true, ""};
  std::ostringstream detail;

  // closure enumeration from generators
  auto sergeev_closure = [](int N) {
    std::vector<SergeevElement> gens;
    for (int k = 1; k <= N; ++k) {
      SergeevElement g = SergeevElement::identity(N);
      g.a[k - 1] = 1;
      gens.push_back(g);
    }
    for (int t = 1; t < N; ++t)
      gens.push_back(
          SergeevElement{0, std::vector<int>(N, 0), Permutation::from_cycles(N, {{t, t + 1}})});
    std::set<SergeevElement> seen{SergeevElement::identity(N)};
    std::vector<SergeevElement> frontier{SergeevElement::identity(N)};
    while (!frontier.empty()) {
      std::vector<SergeevElement> next;
      for (const auto& g : frontier)
        for (const auto& h : gens) {
          auto p = sergeev_mul(g, h);
          if (seen.insert(p).second) next.push_back(p);
        }
      frontier = std::move(next);
    }
    return std::vector<SergeevElement>(seen.begin(), seen.end());
  };

  const auto se2 = sergeev_closure(2);
  if (se2.size() != 16) res.pass = false;
  detail << "|Se(2)| = " << se2.size() << " normal forms; ";

  SpaceSpec s(1, 1);

  // pi on S_N is a homomorphism, exhaustively for N <= 3
  for (int N = 2; N <= 3; ++N) {
    std::vector<Permutation> group;
    std::vector<int> img(N);
    std::iota(img.begin(), img.end(), 1);
    do group.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    std::map<Permutation, ExactMatrix> mat;
    for (const auto& g : group)
      mat.emplace(g, group_algebra_act(GroupAlgebraElement<Permutation>::single(g), s, N));
    for (const auto& g : group)
      for (const auto& h : group)
        if (!(mat.at(g * h) == mat.at(g) * mat.at(h))) res.pass = false;
  }

  // pi on Se(N) is a homomorphism, exhaustively for N <= 3
  for (int N = 2; N <= 3; ++N) {
    auto group = sergeev_closure(N);
    std::map<SergeevElement, ExactMatrix> mat;
    for (const auto& g : group)
      mat.emplace(g, group_algebra_act(GroupAlgebraElement<SergeevElement>::single(g), s, N));
    for (const auto& g : group)
      for (const auto& h : group)
        if (!(mat.at(sergeev_mul(g, h)) == mat.at(g) * mat.at(h))) res.pass = false;
  }
  detail << "pi homomorphism exhaustive on S_N and Se(N), N <= 3; ";

  // centrality of every class sum against all generators, N <= 3
  long central_checks = 0;
  for (int N = 1; N <= 3; ++N)
    for (const auto& rho : partitions_up_to(N)) {
      ++central_checks;
      if (!centrality_check(group_algebra_act(class_sum(rho, N), s, N), s, N,
                            CommutantSide::symmetric_group))
        res.pass = false;
      if (!centrality_check(group_algebra_act(sergeev_class_sum(rho, N), s, N), s, N,
                            CommutantSide::sergeev_group))
        res.pass = false;
    }
  detail << central_checks << " class sums checked central on both sides";
  res.detail = detail.str();
  return res;
}

}  // namespace superschur
