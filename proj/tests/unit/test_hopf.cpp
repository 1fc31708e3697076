#include "doctest.h"

#include "hopfcoh/hopf_algebra.hpp"
#include "hopfcoh/tensor.hpp"

using namespace hopfcoh;

TEST_CASE("group algebras are Hopf algebras") {
  for (Field f : {Field::rationals(), Field::prime(2)}) {
    auto h = group_algebra(cyclic_group_table(2), f);
    CHECK(h.dim() == 2);
    CHECK(check_hopf_axioms(h).all_passed());
  }
  auto s3 = group_algebra(symmetric_group3_table(), Field::rationals());
  CHECK(s3.dim() == 6);
  CHECK(check_hopf_axioms(s3).all_passed());
  CHECK(!s3.is_commutative());
  CHECK(s3.is_cocommutative());
}

TEST_CASE("broken comultiplication is detected") {
  Field q = Field::rationals();
  auto h = group_algebra(cyclic_group_table(2), q);
  // Delta(g) = g (x) 1
  auto comul = SparseMatrix::from_triplets(q, 4, 2, {{0, 0, q.one()}, {2, 1, q.one()}});
  HopfAlgebra bad(q, h.labels(), h.mul(), h.unit(), comul, h.counit(), h.antipode());
  auto r = check_hopf_axioms(bad);
  CHECK(!r.all_passed());
  CHECK(r.failures().find("counit") != std::string::npos);
}

TEST_CASE("non-group tables are rejected") {
  CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 1}}, Field::rationals()), InputError);
  CHECK_THROWS_AS(group_algebra({{0, 1}, {0}}, Field::rationals()), InputError);
}

TEST_CASE("Taft algebras") {
  Field q = Field::rationals();
  auto h4 = taft_algebra(2, q.from_int(-1), q);
  CHECK(h4.dim() == 4);
  CHECK(check_hopf_axioms(h4).all_passed());
  CHECK(!h4.is_commutative());
  CHECK(!h4.is_cocommutative());
  Field f7 = Field::prime(7);
  auto t3 = taft_algebra(3, f7.from_int(2), f7);
  CHECK(t3.dim() == 9);
  CHECK(check_hopf_axioms(t3).all_passed());
  CHECK_THROWS_AS(taft_algebra(2, q.one(), q), InputError);
  CHECK_THROWS_AS(taft_algebra(3, f7.from_int(3), f7), InputError);

  // Delta(x) = x (x) 1 + g (x) x
  auto dx = iterated_comultiplication(h4, 1).col(1);
  CHECK(dx == SparseVector::from_unsorted({Entry{1 * 4 + 0, q.one()}, Entry{2 * 4 + 1, q.one()}}));
}

TEST_CASE("duals") {
  Field q = Field::rationals();
  auto s3 = group_algebra(symmetric_group3_table(), q);
  auto d = dual_hopf_algebra(s3);
  CHECK(check_hopf_axioms(d).all_passed());
  CHECK(d.is_commutative());
  CHECK(!d.is_cocommutative());
  CHECK(dual_hopf_algebra(d).same_structure(s3));
  CHECK(check_hopf_axioms(dual_hopf_algebra(group_algebra(cyclic_group_table(2), q))).all_passed());
}

TEST_CASE("iterated comultiplication and componentwise product") {
  Field q = Field::rationals();
  auto h = taft_algebra(2, q.from_int(-1), q);
  CHECK(iterated_comultiplication(h, 0) == SparseMatrix::identity(q, 4));
  for (int n = 1; n <= 3; ++n) {
    // expanding from the right leg gives the same map
    auto right = kron_id(ipow(4, n - 1), h.comul(), 1) * iterated_comultiplication(h, n - 1);
    CHECK(right == iterated_comultiplication(h, n));
  }
  auto c2 = group_algebra(cyclic_group_table(2), Field::prime(2));
  Field f2 = Field::prime(2);
  // (g (x) g)(g (x) 1) = 1 (x) g
  auto u = SparseVector::unit(3, f2.one()), v = SparseVector::unit(2, f2.one());
  CHECK(componentwise_product(c2, 2, u, v) == SparseVector::unit(1, f2.one()));
  auto g3 = iterated_comultiplication(c2, 2).col(1);
  CHECK(g3 == SparseVector::unit(7, f2.one()));
  for (std::size_t p = 0; p <= 3; ++p) {
    auto m = componentwise_product_map(h, p);
    std::size_t n = ipow(4, p);
    auto I = SparseMatrix::identity(q, n);
    CHECK(m * kron(m, I) == m * kron(I, m));
    CHECK(m * kron(unit_power(h, p), I) == I);
  }
}
