#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "superschur/numeric.hpp"

namespace superschur {

/// Finite linear combination of basis terms with exact integer coefficients.
///
/// Terms are kept in the canonical order given by `Term::operator<`, and zero
/// coefficients are never stored, so iteration order (and hence any
/// serialization) is independent of how the sum was assembled.
template <class Term>
class FormalSum {
public:
  using Map = std::map<Term, Int>;

  FormalSum() = default;

  static FormalSum single(Term t, Int c = 1) {
    FormalSum s;
    s.add(std::move(t), std::move(c));
    return s;
  }

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  Int coeff(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add(Term t, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(t), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  FormalSum& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= k;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Int& k, FormalSum a) { return a *= k; }
  friend FormalSum operator-(FormalSum a) { return a *= Int(-1); }

  bool operator==(const FormalSum&) const = default;

private:
  Map terms_;
};

}  // namespace superschur
