#include <catch2/catch_amalgamated.hpp>

#include "superschur/duality.hpp"

using namespace superschur;

TEST_CASE("span of a generating set stabilizes") {
  CHECK(span_of({ExactMatrix::identity(3)}).dimension() == 1);

  SpaceSpec s(1, 1);
  auto algebra1 = span_of(algebra_generator_matrices(s, 1, CommutantSide::symmetric_group));
  CHECK(algebra1.dimension() == 4);  // the four matrix units fill End(C^2)

  auto group2 = span_of(group_generator_matrices(s, 2, CommutantSide::symmetric_group));
  CHECK(group2.dimension() == 2);  // identity and the signed swap

  CHECK(group2.contains(ExactMatrix::identity(4)));
  ExactMatrix skew(4);
  skew.set(0, 1, 1);
  CHECK_FALSE(group2.contains(skew));
}

TEST_CASE("commutant solves the exact linear system") {
  SpaceSpec s(1, 1);
  auto full = span_of(algebra_generator_matrices(s, 1, CommutantSide::symmetric_group));
  auto scalars = commutant(full);
  CHECK(scalars.dimension() == 1);
  CHECK(scalars.contains(ExactMatrix::identity(2)));

  auto algebra2 = span_of(algebra_generator_matrices(s, 2, CommutantSide::symmetric_group));
  auto group2 = span_of(group_generator_matrices(s, 2, CommutantSide::symmetric_group));
  auto ca = commutant(algebra2);
  CHECK(ca.dimension() == group2.dimension());
  CHECK(span_equal(ca, group2));

  // double commutant contains the original span
  auto cca = commutant(ca);
  for (std::size_t i = 0; i < algebra2.dimension(); ++i)
    CHECK(cca.contains(algebra2.basis_matrix(i)));
}

TEST_CASE("duality instances") {
  SpaceSpec s(1, 1);

  auto r1 = verify_duality(s, 1, CommutantSide::symmetric_group);
  CHECK(r1.pass);
  CHECK(r1.group_span == 1);
  CHECK(r1.algebra_span == 4);

  auto r2 = verify_duality(s, 2, CommutantSide::symmetric_group);
  CHECK(r2.pass);
  CHECK(r2.group_span == 2);
  CHECK(r2.commutant_of_algebra == 2);

  auto rs = verify_duality(s, 2, CommutantSide::sergeev_group);
  CHECK(rs.pass);
  CHECK(rs.group_span == rs.commutant_of_algebra);
}
