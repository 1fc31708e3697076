#include "doctest.h"

#include <random>

#include "hopfcoh/cohomology.hpp"

using namespace hopfcoh;

namespace {
HopfAlgebraPtr kc2(Field f) { return std::make_shared<HopfAlgebra>(group_algebra(cyclic_group_table(2), f)); }
HopfAlgebraPtr sweedler() {
  Field q = Field::rationals();
  return std::make_shared<HopfAlgebra>(taft_algebra(2, q.from_int(-1), q));
}
std::vector<std::size_t> dims_of(const DoubleComplex& dc) { return total_cohomology(dc, false).dims; }

SparseMatrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t.push_back({i, j, f.from_int(dist(rng))});
  return SparseMatrix::from_triplets(f, r, c, std::move(t));
}
}  // namespace

TEST_CASE("H4 entry (0,0) over kC2") {
  auto h = kc2(Field::rationals());
  auto H = regular_bimodule(h);
  auto dc = build_double_complex(Theory::H4, H, H, 2);
  CHECK(dc.cell(0, 0).space.dim() == 1);
  CHECK(total_squares_to_zero(dc));
  CHECK(bicomplex_identities_hold(dc));
  for (std::size_t p = 0; p <= 2; ++p)
    for (std::size_t q = 0; p + q <= 2; ++q) CHECK(dc.cell(p, q).space.dim() == full_cell_dimension(Theory::H4, H, H, p, q));
}

TEST_CASE("kC2 dimensions") {
  auto hq = kc2(Field::rationals());
  CHECK(dims_of(reduced_b_complex(hq, 3)) == std::vector<std::size_t>{1, 0, 0, 0});
  auto h2 = kc2(Field::prime(2));
  auto H = regular_bimodule(h2);
  auto full = dims_of(build_double_complex(Theory::B, H, H, 2));
  auto red = dims_of(reduced_b_complex(h2, 3));
  CHECK(full == std::vector<std::size_t>{1, 1, 1});
  CHECK(red == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(dims_of(build_double_complex(Theory::GS, H, H, 2)) == full);
}

TEST_CASE("GS and H4 agree on Sweedler's algebra") {
  auto h = sweedler();
  auto H = regular_bimodule(h);
  auto gs = dims_of(build_double_complex(Theory::GS, H, H, 1));
  auto h4 = dims_of(build_double_complex(Theory::H4, H, H, 2));
  CHECK(h4 == std::vector<std::size_t>{1, 0, 3});
  CHECK(gs == std::vector<std::size_t>{1, 0});
  CHECK(dims_of(reduced_b_complex(h, 2)) == h4);
}

TEST_CASE("H0 equals Hopf bimodule maps") {
  auto h = kc2(Field::prime(2));
  auto H = regular_bimodule(h);
  auto HH = under_tensor(H, H);
  auto r = total_cohomology(build_double_complex(Theory::H4, HH, H, 1));
  CHECK(r.dims[0] == hom_space(HH, H).dim());
  auto g = total_cohomology(build_double_complex(Theory::GS, HH, H, 1));
  CHECK(g.dims[0] == hom_space(HH, H).dim());
}

TEST_CASE("adjunction intertwines full and reduced differentials") {
  for (auto h : {kc2(Field::rationals()), sweedler()}) {
    auto H = regular_bimodule(h);
    auto full = build_double_complex(Theory::B, H, H, 2);
    auto red = reduced_b_complex(h, 2);
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t q = 0; p + q <= 2; ++q) {
        const Cell& c = full.cell(p, q);
        const Cell& rc = red.cell(p, q);
        CHECK(c.space.dim() == rc.space.dim());
        for (const auto& b : c.space.basis()) {
          auto g = SparseMatrix::unflatten(h->field(), c.out_dim, c.in_dim, b);
          auto f = adjunction_phi(*h, p, q, g);
          CHECK(adjunction_phi_inverse(*h, p, q, f) == g);
          if (p + q < 2) {
            CHECK(adjunction_phi(*h, p, q + 1, full.vertical(p, q).apply(g)) == red.vertical(p, q).apply(f));
            CHECK(adjunction_phi(*h, p + 1, q, full.horizontal(p, q).apply(g)) == red.horizontal(p, q).apply(f));
          }
        }
        for (std::size_t i = 0; i < rc.space.dim(); ++i) {
          auto f = hom_element(rc.space, i, rc.out_dim, rc.in_dim);
          auto g = adjunction_phi_inverse(*h, p, q, f);
          CHECK(c.space.contains(g.flatten()));
          CHECK(adjunction_phi(*h, p, q, g) == f);
        }
      }
  }
}

TEST_CASE("representatives and coboundaries") {
  auto h = kc2(Field::prime(2));
  auto dc = reduced_b_complex(h, 3);
  auto r = total_cohomology(dc);
  REQUIRE(r.representatives[1].size() == 1);
  auto c = dc.from_coordinates(1, r.representatives[1][0]);
  CHECK(is_cocycle(dc, c));
  CHECK_FALSE(is_coboundary(dc, c).has_value());

  std::mt19937 rng(7);
  TotalCochain x = dc.zero_cochain(1);
  for (std::size_t p = 0; p <= 1; ++p) x.parts[p] = random_matrix(h->field(), x.parts[p].rows(), x.parts[p].cols(), rng);
  auto dx = dc.apply_differential(x);
  auto pre = is_coboundary(dc, dx);
  REQUIRE(pre.has_value());
  auto back = dc.apply_differential(*pre);
  for (std::size_t p = 0; p < back.parts.size(); ++p) CHECK(back.parts[p] == dx.parts[p]);
  CHECK(is_coboundary(dc, dc.zero_cochain(2)).has_value());
  CHECK_THROWS_AS(is_coboundary(dc, x), InputError);
}

TEST_CASE("sign placements both square to zero") {
  auto dc = reduced_b_complex(sweedler(), 2).with_sign(SignRule::HorizontalFirst);
  CHECK(total_squares_to_zero(dc));
}

TEST_CASE("entry budget") {
  auto h = kc2(Field::rationals());
  auto H = regular_bimodule(h);
  ComplexOptions o;
  o.entry_budget = 100;
  CHECK_THROWS_AS(build_double_complex(Theory::GS, H, H, 2, o), ResourceError);
}

TEST_CASE("thread count does not change results") {
  auto h = sweedler();
  auto H = regular_bimodule(h);
  ComplexOptions one, four;
  four.threads = 4;
  auto a = build_double_complex(Theory::H4, H, H, 2, one);
  auto b = build_double_complex(Theory::H4, H, H, 2, four);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(a.total_differential(n) == b.total_differential(n));
}
