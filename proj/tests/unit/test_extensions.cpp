#include "doctest.h"

#include "hopfcoh/extensions.hpp"

using namespace hopfcoh;

namespace {
HopfAlgebraPtr kc2(Field f) { return std::make_shared<HopfAlgebra>(group_algebra(cyclic_group_table(2), f)); }
HopfAlgebraPtr kc3() { return std::make_shared<HopfAlgebra>(group_algebra(cyclic_group_table(3), Field::prime(3))); }
HopfAlgebraPtr sweedler() {
  Field q = Field::rationals();
  return std::make_shared<HopfAlgebra>(taft_algebra(2, q.from_int(-1), q));
}

// Non-split self-extension of H from the first cohomology class.
Extension nontrivial(const HopfAlgebraPtr& h) {
  auto H = regular_bimodule(h);
  auto dc = build_double_complex(Theory::H4, H, H, 2);
  auto res = total_cohomology(dc);
  REQUIRE(res.dims[1] >= 1);
  return extension_from_1cocycle(dc, dc.from_coordinates(1, res.representatives[1][0]));
}
}  // namespace

TEST_CASE("split extension") {
  auto h = kc2(Field::rationals());
  auto H = regular_bimodule(h);
  auto e = split_extension(H, H);
  auto rep = check_extension(e);
  CHECK(rep.valid());
  CHECK(rep.homology == std::vector<std::size_t>{0, 0, 0});
  CHECK(find_splitting(e).has_value());
}

TEST_CASE("cocycle extension over kC2 mod 2 does not split") {
  auto e = nontrivial(kc2(Field::prime(2)));
  CHECK(check_extension(e).valid());
  CHECK_FALSE(find_splitting(e).has_value());
}

TEST_CASE("coboundaries give split extensions") {
  auto h = sweedler();
  auto H = regular_bimodule(h);
  auto N = under_tensor(H, H);
  auto dc = build_double_complex(Theory::H4, H, N, 2);
  bool found = false;
  for (std::size_t i = 0; i < dc.total_dim(0) && !found; ++i) {
    SparseVector v = SparseVector::unit(i, dc.field().one());
    auto b = dc.apply_differential(dc.from_coordinates(0, v));
    bool zero = true;
    for (const auto& part : b.parts) zero = zero && part.is_zero();
    if (zero) continue;
    found = true;
    auto e = extension_from_1cocycle(dc, b);
    CHECK(check_extension(e).valid());
    CHECK(find_splitting(e).has_value());
  }
  CHECK(found);
}

TEST_CASE("splice, negation and Baer sum") {
  auto h = kc2(Field::prime(2));
  auto e = nontrivial(h);
  auto two = splice(e, e);
  CHECK(two.length() == 2);
  CHECK(check_extension(two).valid());
  CHECK(check_extension(negate(two)).valid());
  auto sum = baer_sum(e, e);
  CHECK(check_extension(sum).valid());
  CHECK(sum.terms[0].dim() == 2 * e.terms[0].dim() - e.left_end.dim() - e.right_end.dim());
  CHECK(find_splitting(baer_sum(e, negate(e))).has_value());
  CHECK(check_extension(baer_sum(two, two)).valid());
}

TEST_CASE("Baer sum with the negative splits in odd characteristic") {
  auto e = nontrivial(kc3());
  CHECK_FALSE(find_splitting(e).has_value());
  auto s = baer_sum(e, negate(e));
  CHECK(check_extension(s).valid());
  CHECK(find_splitting(s).has_value());
  CHECK_FALSE(find_splitting(baer_sum(e, e)).has_value());
}

TEST_CASE("broken extension is reported") {
  auto h = kc2(Field::rationals());
  auto H = regular_bimodule(h);
  auto e = split_extension(H, H);
  e.maps[1] = e.maps[1].scaled(Field::rationals().zero());
  auto rep = check_extension(e);
  CHECK_FALSE(rep.valid());
  CHECK(rep.homology[2] == 2);
}

TEST_CASE("tensor product of extensions") {
  auto h = kc2(Field::prime(2));
  auto e = nontrivial(h);
  auto two = splice(e, e);
  for (auto [a, b] : {std::pair{&e, &e}, std::pair{&e, &two}, std::pair{&two, &e}}) {
    auto t = tensor_extensions(*a, *b);
    CHECK(t.ext.length() == a->length() + b->length());
    auto rep = check_extension(t.ext);
    CHECK_MESSAGE(rep.valid(), rep.failure);
  }
}

TEST_CASE("comparison maps out of the tensor product") {
  auto h = kc3();
  auto e = nontrivial(h);
  auto two = splice(e, e);
  SUBCASE("m = n = 1") {
    auto t = tensor_extensions(e, e);
    CHECK(is_chain_map(t.ext, splice(e, e), lambda_map(t, e, e)));
    CHECK(is_chain_map(t.ext, negate_power(splice(e, e), 1), rho_map(t, e, e)));
  }
  SUBCASE("m = 1, n = 2") {
    auto t = tensor_extensions(e, two);
    CHECK(is_chain_map(t.ext, splice(two, e), lambda_map(t, e, two)));
    CHECK(is_chain_map(t.ext, negate_power(splice(e, two), 2), rho_map(t, e, two)));
  }
  SUBCASE("m = 2, n = 1") {
    auto t = tensor_extensions(two, e);
    CHECK(is_chain_map(t.ext, splice(e, two), lambda_map(t, two, e)));
    CHECK(is_chain_map(t.ext, negate_power(splice(two, e), 2), rho_map(t, two, e)));
    CHECK_FALSE(is_chain_map(t.ext, negate(splice(two, e)), rho_map(t, two, e)));
  }
  SUBCASE("m = n = 2") {
    auto t = tensor_extensions(two, two);
    CHECK(is_chain_map(t.ext, splice(two, two), lambda_map(t, two, two)));
    CHECK(is_chain_map(t.ext, splice(two, two), rho_map(t, two, two)));
  }
}
