#pragma once

#include <utility>
#include <vector>

#include "superschur/central_elements.hpp"

namespace superschur {

// Instance-level commutant computations over exact rationals: the span of an
// operator algebra, the solution space of XG = GX, and the two-sided
// commutant comparison behind the Schur-Weyl/Sergeev duality checks.

namespace detail {

// Rows are kept in reduced echelon form (pivot 1, pivot column cleared
// everywhere, rows ordered by pivot). Insertion reduces the candidate and
// back-substitutes, so the row set is a canonical basis of the span.
class RrefBasis {
public:
  explicit RrefBasis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  void reduce(std::vector<Rat>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat& c = v[pivots_[r]];
      if (c == 0) continue;
      const Rat f = c;
      for (std::size_t j = 0; j < width_; ++j)
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
  }

  bool contains(std::vector<Rat> v) const {
    reduce(v);
    for (const Rat& x : v)
      if (x != 0) return false;
    return true;
  }

  /// Reduces v against the basis; if a nonzero remainder is left it becomes a
  /// new row. Returns true when the rank grew.
  bool insert(std::vector<Rat> v) {
    reduce(v);
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p == width_) return false;
    const Rat inv = v[p];
    for (auto& x : v) x /= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat c = rows_[r][p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (v[j] != 0) rows_[r][j] -= c * v[j];
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
  }

private:
  std::size_t width_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

inline std::vector<Rat> vectorize(const ExactMatrix& m) {
  std::vector<Rat> v(static_cast<std::size_t>(m.dim()) * m.dim(), Rat(0));
  for (const auto& [k, val] : m.entries()) v[k.first * m.dim() + k.second] = val;
  return v;
}

inline ExactMatrix devectorize(const std::vector<Rat>& v, long dim) {
  ExactMatrix m(dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c)
      if (v[r * dim + c] != 0) m.set(r, c, v[r * dim + c]);
  return m;
}

/// Linear span of a set of operators under row-major vectorization, in
/// reduced echelon form.
class MatrixSpan {
public:
  MatrixSpan(long dim, detail::RrefBasis basis) : dim_(dim), basis_(std::move(basis)) {}

  long matrix_dim() const { return dim_; }
  std::size_t dimension() const { return basis_.rank(); }
  bool contains(const ExactMatrix& m) const { return basis_.contains(vectorize(m)); }
  ExactMatrix basis_matrix(std::size_t i) const { return devectorize(basis_.rows()[i], dim_); }
  const detail::RrefBasis& basis() const { return basis_; }

  friend bool span_equal(const MatrixSpan& a, const MatrixSpan& b) {
    if (a.dim_ != b.dim_ || a.dimension() != b.dimension()) return false;
    for (std::size_t i = 0; i < a.dimension(); ++i)
      if (!b.basis_.contains(a.basis_.rows()[i])) return false;
    for (std::size_t i = 0; i < b.dimension(); ++i)
      if (!a.basis_.contains(b.basis_.rows()[i])) return false;
    return true;
  }

private:
  long dim_;
  detail::RrefBasis basis_;
};

/// Span of the unital algebra generated by the given operators: products are
/// taken until the dimension stops growing.
inline MatrixSpan span_of(const std::vector<ExactMatrix>& generators) {
  if (generators.empty()) throw std::invalid_argument("span_of: need at least one generator");
  const long dim = generators.front().dim();
  for (const auto& g : generators)
    if (g.dim() != dim) throw std::invalid_argument("span_of: dimension mismatch");
  detail::RrefBasis basis(static_cast<std::size_t>(dim) * dim);
  std::vector<ExactMatrix> frontier;
  auto push = [&](ExactMatrix m) {
    if (basis.insert(vectorize(m))) frontier.push_back(std::move(m));
  };
  push(ExactMatrix::identity(dim));
  for (const auto& g : generators) push(g);
  while (!frontier.empty()) {
    std::vector<ExactMatrix> current = std::move(frontier);
    frontier.clear();
    for (const auto& f : current)
      for (const auto& g : generators) push(f * g);
  }
  return MatrixSpan(dim, std::move(basis));
}

/// All X with XG = GX for every basis element G of the span, as a canonical
/// reduced basis.
inline MatrixSpan commutant(const MatrixSpan& span) {
  const long n = span.matrix_dim();
  const std::size_t vars = static_cast<std::size_t>(n) * n;
  detail::RrefBasis constraints(vars);
  for (std::size_t b = 0; b < span.dimension(); ++b) {
    const ExactMatrix G = span.basis_matrix(b);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        // (GX - XG)_{ij} = sum_k G_ik X_kj - X_ik G_kj
        std::vector<Rat> row(vars, Rat(0));
        bool nonzero = false;
        for (long k = 0; k < n; ++k) {
          const Rat gik = G.at(i, k);
          if (gik != 0) {
            row[k * n + j] += gik;
            nonzero = true;
          }
          const Rat gkj = G.at(k, j);
          if (gkj != 0) {
            row[i * n + k] -= gkj;
            nonzero = true;
          }
        }
        if (nonzero) constraints.insert(std::move(row));
      }
  }
  // null space: one basis vector per free column
  std::vector<char> is_pivot(vars, 0);
  for (auto p : constraints.pivots()) is_pivot[p] = 1;
  detail::RrefBasis result(vars);
  for (std::size_t f = 0; f < vars; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(vars, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < constraints.rank(); ++r)
      v[constraints.pivots()[r]] = -constraints.rows()[r][f];
    result.insert(std::move(v));
  }
  return MatrixSpan(n, std::move(result));
}

/// Homogeneous operator tagged with its Z2 parity.
struct GradedGenerator {
  ExactMatrix mat;
  int parity = 0;
};

/// All X with X G = (-1)^{p(X) p(G)} G X for every homogeneous generator G
/// (componentwise on the parity decomposition of X). Supercommuting with the
/// generators extends to their products by the graded Leibniz rule, so this
/// is the graded commutant of the generated algebra. For even generators it
/// coincides with the plain commutant.
///
/// index_parity[k] is the total parity of the k-th basis vector; the entry
/// X_{ik} carries parity p_i + p_k, and equation (i,j) against a generator
/// of parity g only touches the component of parity p_i + p_j + g.
inline MatrixSpan supercommutant(const std::vector<GradedGenerator>& gens,
                                 const std::vector<int>& index_parity) {
  const long n = static_cast<long>(index_parity.size());
  const std::size_t vars = static_cast<std::size_t>(n) * n;
  detail::RrefBasis constraints(vars);
  for (const auto& [G, g] : gens) {
    if (G.dim() != n) throw std::invalid_argument("supercommutant: dimension mismatch");
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        const int q = (index_parity[i] + index_parity[j] + g) & 1;
        const Rat sign = (q && g) ? Rat(-1) : Rat(1);
        // X G - (-1)^{qg} G X = 0 at entry (i,j)
        std::vector<Rat> row(vars, Rat(0));
        bool nonzero = false;
        for (long k = 0; k < n; ++k) {
          const Rat gkj = G.at(k, j);
          if (gkj != 0) {
            row[i * n + k] += gkj;
            nonzero = true;
          }
          const Rat gik = G.at(i, k);
          if (gik != 0) {
            row[k * n + j] -= sign * gik;
            nonzero = true;
          }
        }
        if (nonzero) constraints.insert(std::move(row));
      }
  }
  std::vector<char> is_pivot(vars, 0);
  for (auto p : constraints.pivots()) is_pivot[p] = 1;
  detail::RrefBasis result(vars);
  for (std::size_t f = 0; f < vars; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(vars, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < constraints.rank(); ++r)
      v[constraints.pivots()[r]] = -constraints.rows()[r][f];
    result.insert(std::move(v));
  }
  return MatrixSpan(n, std::move(result));
}

struct DualityReport {
  std::size_t group_span = 0;
  std::size_t algebra_span = 0;
  std::size_t commutant_of_group = 0;
  std::size_t commutant_of_algebra = 0;
  bool pass = false;
};

namespace detail {

inline std::vector<GradedGenerator> graded_sergeev_algebra_generators(const SpaceSpec& s, int N) {
  std::vector<GradedGenerator> out;
  for (int i = 1; i <= s.n; ++i)
    for (int j = 1; j <= 2 * s.n; ++j) {
      FormalSum<Word> w;
      const auto f = q_unit(s, i, j);
      for (const auto& [u, c] : f.terms()) w.add(Word{{u}}, c);
      out.push_back({matrix_of_word(s, N, w), parity(s, MatrixUnit{i, j})});
    }
  return out;
}

inline std::vector<GradedGenerator> graded_sergeev_group_generators(const SpaceSpec& s, int N) {
  std::vector<GradedGenerator> out;
  for (int t = 1; t < N; ++t) {
    Permutation tau = Permutation::from_cycles(N, {{t, t + 1}});
    out.push_back({group_algebra_act(GroupAlgebraElement<Permutation>::single(tau), s, N), 0});
  }
  for (int k = 1; k <= N; ++k) {
    SergeevElement g = SergeevElement::identity(N);
    g.a[k - 1] = 1;
    out.push_back({group_algebra_act(GroupAlgebraElement<SergeevElement>::single(g), s, N), 1});
  }
  return out;
}

}  // namespace detail

/// Verifies on one configuration that the group image spans exactly the
/// commutant of the algebra image and vice versa.
///
/// For the symmetric group every group operator is even and the plain
/// commutant is the right reading. The Sergeev image contains odd operators
/// (the slot Clifford generators), which anticommute with the odd part of
/// the Q(n) action, so the duality there holds for the graded commutant; the
/// plain XG = GX system provably fails on any configuration with odd
/// operators on both sides.
inline DualityReport verify_duality(const SpaceSpec& s, int N, CommutantSide which) {
  const MatrixSpan algebra = span_of(algebra_generator_matrices(s, N, which));
  std::vector<ExactMatrix> ggens = group_generator_matrices(s, N, which);
  if (ggens.empty()) ggens.push_back(ExactMatrix::identity(tensor_dim(s, N)));
  const MatrixSpan group = span_of(ggens);

  MatrixSpan cg = [&] {
    if (which == CommutantSide::symmetric_group) return commutant(group);
    return supercommutant(detail::graded_sergeev_group_generators(s, N),
                          tensor_index_parities(s, N));
  }();
  MatrixSpan ca = [&] {
    if (which == CommutantSide::symmetric_group) return commutant(algebra);
    return supercommutant(detail::graded_sergeev_algebra_generators(s, N),
                          tensor_index_parities(s, N));
  }();

  DualityReport rep;
  rep.group_span = group.dimension();
  rep.algebra_span = algebra.dimension();
  rep.commutant_of_group = cg.dimension();
  rep.commutant_of_algebra = ca.dimension();
  rep.pass = span_equal(group, ca) && span_equal(algebra, cg);
  return rep;
}

}  // namespace superschur
