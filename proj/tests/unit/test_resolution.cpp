#include "doctest.h"

#include "hopfcoh/resolution.hpp"

using namespace hopfcoh;

namespace {
HopfAlgebraPtr kc2(Field f) { return std::make_shared<HopfAlgebra>(group_algebra(cyclic_group_table(2), f)); }
HopfAlgebraPtr sweedler() {
  Field q = Field::rationals();
  return std::make_shared<HopfAlgebra>(taft_algebra(2, q.from_int(-1), q));
}
bool all_zero(const std::vector<std::optional<std::size_t>>& h) {
  for (std::size_t k = 0; k + 1 < h.size(); ++k)
    if (!h[k] || *h[k] != 0) return false;
  return !h.back().has_value();
}
}  // namespace

TEST_CASE("bar resolution") {
  auto h = kc2(Field::prime(2));
  auto H = regular_bimodule(h);
  auto c = bar_resolution(H, 3);
  CHECK(c.terms[0].dim() == 4);
  CHECK(squares_to_zero(c.maps, true));
  CHECK(maps_are_morphisms(c));
  CHECK(all_zero(check_exactness(c)));
  for (const auto& t : c.terms) CHECK(check_hopf_bimodule(t).all_passed());
  auto s = find_relative_splitting(c, kCoactions, SplittingMethod::Solve);
  REQUIRE(s);
  CHECK(s->method == "solve");
  auto s2 = find_relative_splitting(c, kCoactions | kLeftAction);
  REQUIRE(s2);
  CHECK(s2->method == "canonical");
}

TEST_CASE("cobar resolution") {
  auto h = sweedler();
  auto H = regular_bimodule(h);
  auto c = cobar_resolution(H, 3);
  CHECK(squares_to_zero(c.maps, false));
  CHECK(maps_are_morphisms(c));
  CHECK(all_zero(check_exactness(c)));
  CHECK(find_relative_splitting(c, kActions, SplittingMethod::Canonical));
  CHECK(find_relative_splitting(cobar_resolution(H, 2), kActions, SplittingMethod::Solve));
  auto hk = kc2(Field::prime(2));
  CHECK(find_relative_splitting(cobar_resolution(regular_bimodule(hk), 3), kActions, SplittingMethod::Solve));
}

TEST_CASE("two-sided resolutions") {
  for (auto h : {kc2(Field::prime(2)), sweedler()}) {
    auto H = regular_bimodule(h);
    auto b = two_sided_bar(H, 2);
    CHECK(b.terms[0].dim() == h->dim() * h->dim() * h->dim());
    CHECK(squares_to_zero(b.maps, true));
    CHECK(all_zero(check_exactness(b)));
    CHECK(find_relative_splitting(b, kCoactions, SplittingMethod::Canonical));
    auto c = two_sided_cobar(H, 2);
    CHECK(squares_to_zero(c.maps, false));
    CHECK(all_zero(check_exactness(c)));
    CHECK(find_relative_splitting(c, kActions, SplittingMethod::Canonical));
    if (h->dim() == 2) {
      CHECK(maps_are_morphisms(b));
      CHECK(maps_are_morphisms(c));
      CHECK(find_relative_splitting(b, kCoactions, SplittingMethod::Solve));
      CHECK(find_relative_splitting(c, kActions, SplittingMethod::Solve));
    }
  }
}

TEST_CASE("zero differentials have full homology") {
  Field q = Field::rationals();
  std::vector<SparseMatrix> maps{SparseMatrix::zero(q, 1, 2), SparseMatrix::zero(q, 2, 3), SparseMatrix::zero(q, 3, 1)};
  auto h = check_exactness(maps, true, false);
  CHECK(!h[0]);
  CHECK(*h[1] == 2);
  CHECK(*h[2] == 3);
  CHECK(!h[3]);
}
