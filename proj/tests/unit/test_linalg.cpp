#include "doctest.h"

#include <random>

#include "hopfcoh/linalg.hpp"

using namespace hopfcoh;

namespace {
SparseMatrix dense(Field f, std::size_t r, std::size_t c, std::initializer_list<long> vals) {
  std::vector<SparseMatrix::Triplet> ts;
  std::size_t i = 0;
  for (long v : vals) {
    if (v != 0) ts.push_back({i / c, i % c, f.from_int(v)});
    ++i;
  }
  return SparseMatrix::from_triplets(f, r, c, std::move(ts));
}
}  // namespace

TEST_CASE("identity has full rank and no kernel") {
  auto m = SparseMatrix::identity(Field::rationals(), 2);
  auto rk = rank_and_kernel(m);
  CHECK(rk.rank == 2);
  CHECK(rk.kernel.dim() == 0);
}

TEST_CASE("kernel of [1 1] over GF(2)") {
  Field f = Field::prime(2);
  auto rk = rank_and_kernel(dense(f, 1, 2, {1, 1}));
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.dim() == 1);
  CHECK(rk.kernel.basis()[0] == SparseVector({Entry{0, f.one()}, Entry{1, f.one()}}));
}

TEST_CASE("random GF(7) kernel is annihilated and rank-nullity holds") {
  Field f = Field::prime(7);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> val(0, 6), sparse(0, 2);
  std::vector<SparseMatrix::Triplet> ts;
  for (std::size_t r = 0; r < 20; ++r)
    for (std::size_t c = 0; c < 30; ++c)
      if (sparse(rng) == 0) ts.push_back({r, c, f.from_int(val(rng))});
  auto m = SparseMatrix::from_triplets(f, 20, 30, std::move(ts));
  auto rk = rank_and_kernel(m);
  CHECK(rk.rank + rk.kernel.dim() == 30);
  CHECK(rk.rank == rank(m));
  CHECK((m * rk.kernel.inclusion()).is_zero());
  CHECK(rank(m.transpose()) == rk.rank);
}

TEST_CASE("solve consistent and inconsistent systems") {
  Field q = Field::rationals();
  auto m = dense(q, 2, 2, {1, 1, 0, 0});
  auto sol = solve(m, SparseVector({Entry{0, q.from_int(3)}}));
  REQUIRE(sol);
  CHECK(m.apply(sol->particular) == SparseVector({Entry{0, q.from_int(3)}}));
  CHECK(sol->homogeneous.dim() == 1);
  CHECK(!solve(m, SparseVector({Entry{1, q.one()}})));
}

TEST_CASE("quotient by a line") {
  Field q = Field::rationals();
  auto sub = Subspace::span(q, 2, {SparseVector({Entry{0, q.one()}, Entry{1, q.one()}})});
  auto quo = quotient(2, sub);
  CHECK(quo.projection.rows() == 1);
  CHECK((quo.projection * sub.inclusion()).is_zero());
  CHECK((quo.projection * quo.section) == SparseMatrix::identity(q, 1));
}

TEST_CASE("rational elimination with growing entries") {
  Field q = Field::rationals();
  // Hilbert matrix 8x8 is invertible.
  std::vector<SparseMatrix::Triplet> ts;
  for (long i = 0; i < 8; ++i)
    for (long j = 0; j < 8; ++j) ts.push_back({std::size_t(i), std::size_t(j), q.one() / q.from_int(i + j + 1)});
  auto h = SparseMatrix::from_triplets(q, 8, 8, std::move(ts));
  CHECK(rank(h) == 8);
  auto sol = solve(h, SparseVector({Entry{7, q.one()}}));
  REQUIRE(sol);
  CHECK(h.apply(sol->particular) == SparseVector({Entry{7, q.one()}}));
}
