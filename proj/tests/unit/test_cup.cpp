#include "doctest.h"

#include <random>

#include "hopfcoh/cup.hpp"

using namespace hopfcoh;

namespace {
HopfAlgebraPtr kc2(Field f) { return std::make_shared<HopfAlgebra>(group_algebra(cyclic_group_table(2), f)); }
HopfAlgebraPtr sweedler() {
  Field q = Field::rationals();
  return std::make_shared<HopfAlgebra>(taft_algebra(2, q.from_int(-1), q));
}

TotalCochain random_cochain(const DoubleComplex& dc, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Entry> es;
  for (std::size_t i = 0; i < dc.total_dim(n); ++i) es.push_back({i, dc.field().from_int(dist(rng))});
  return dc.from_coordinates(n, SparseVector::from_unsorted(std::move(es)));
}

bool same(const TotalCochain& a, const TotalCochain& b) {
  if (a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (!(a.parts[i] == b.parts[i])) return false;
  return true;
}

TotalCochain phi(const HopfAlgebra& h, const TotalCochain& c) {
  TotalCochain o{c.degree, {}};
  for (std::size_t p = 0; p <= c.degree; ++p) o.parts.push_back(adjunction_phi(h, p, c.degree - p, c.parts[p]));
  return o;
}
}  // namespace

TEST_CASE("unit and scalars") {
  auto h = sweedler();
  auto dc = reduced_b_complex(h, 2);
  std::mt19937 rng(1);
  auto one = dc.from_coordinates(0, SparseVector::unit(0, h->field().one()));
  for (std::size_t n = 0; n <= 2; ++n) {
    auto f = random_cochain(dc, n, rng);
    CHECK(same(cup(dc, f, one), f));
    CHECK(same(cup(dc, one, f), f));
  }
  auto a = one, b = one;
  a.parts[0] = a.parts[0].scaled(h->field().from_int(3));
  b.parts[0] = b.parts[0].scaled(h->field().from_int(-5));
  CHECK(cup(dc, a, b).parts[0].at(0, 0) == h->field().from_int(-15));
  CHECK(cup(dc, dc.zero_cochain(1), random_cochain(dc, 1, rng)).parts[1].is_zero());
}

TEST_CASE("cup_b is associative") {
  auto h = kc2(Field::rationals());
  auto dc = reduced_b_complex(h, 3);
  std::mt19937 rng(2);
  for (std::size_t a = 0; a <= 1; ++a)
    for (std::size_t b = 0; b <= 1; ++b)
      for (std::size_t c = 0; a + b + c <= 3; ++c) {
        auto f = random_cochain(dc, a, rng), g = random_cochain(dc, b, rng), k = random_cochain(dc, c, rng);
        CHECK(same(cup(dc, cup(dc, f, g), k), cup(dc, f, cup(dc, g, k))));
      }
}

TEST_CASE("Leibniz rule on basis pairs over kC2/GF(2)") {
  auto h = kc2(Field::prime(2));
  auto dc = reduced_b_complex(h, 2);
  for (std::size_t p = 0; p <= 2; ++p)
    for (std::size_t q = 0; p + q <= 2; ++q)
      for (std::size_t i = 0; i < dc.total_dim(p); ++i)
        for (std::size_t j = 0; j < dc.total_dim(q); ++j) {
          auto f = dc.from_coordinates(p, SparseVector::unit(i, h->field().one()));
          auto g = dc.from_coordinates(q, SparseVector::unit(j, h->field().one()));
          CHECK(check_leibniz(dc, f, g));
        }
}

TEST_CASE("Leibniz rule and its negative control over Sweedler's algebra") {
  auto h = sweedler();
  auto dc = reduced_b_complex(h, 2);
  auto flipped = dc.with_sign(SignRule::HorizontalFirst);
  std::mt19937 rng(3);
  std::size_t flipped_failures = 0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t p = k % 2, q = (k / 2) % 2;
    auto f = random_cochain(dc, p, rng), g = random_cochain(dc, q, rng);
    CHECK(check_leibniz(dc, f, g));
    flipped_failures += !check_leibniz(flipped, f, g);
  }
  CHECK(flipped_failures > 0);
}

TEST_CASE("cup_h4 reduces to cup_b") {
  for (auto h : {kc2(Field::rationals()), sweedler()}) {
    auto H = regular_bimodule(h);
    auto full = build_double_complex(Theory::H4, H, H, 2);
    auto red = reduced_b_complex(h, 2);
    std::mt19937 rng(4);
    for (std::size_t p = 0; p <= 1; ++p)
      for (std::size_t q = 0; p + q <= 2; ++q) {
        auto f = random_cochain(full, p, rng), g = random_cochain(full, q, rng);
        auto fg = cup(full, f, g);
        CHECK(full.admissible(fg));
        CHECK(same(phi(*h, fg), cup(red, phi(*h, f), phi(*h, g))));
        if (p + q < 2) CHECK(check_leibniz(full, f, g));
      }
  }
}

TEST_CASE("cup_h4 with module coefficients") {
  auto h = kc2(Field::prime(2));
  auto H = regular_bimodule(h);
  auto HH = under_tensor(H, H);
  auto ml = build_double_complex(Theory::H4, HH, H, 2);
  auto ln = build_double_complex(Theory::H4, H, H, 2);
  std::mt19937 rng(5);
  for (std::size_t p = 0; p <= 1; ++p)
    for (std::size_t q = 0; p + q <= 1; ++q) {
      auto f = random_cochain(ml, p, rng), g = random_cochain(ln, q, rng);
      CHECK(ml.admissible(cup(ml, ln, f, g)));
      CHECK(check_leibniz(ml, ln, ml, f, g));
    }
}

TEST_CASE("graded commutators are coboundaries") {
  auto h = kc2(Field::prime(2));
  auto dc = reduced_b_complex(h, 3);
  auto r = total_cohomology(dc);
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t q = 0; p + q <= 3; ++q)
      for (const auto& x : r.representatives[p])
        for (const auto& y : r.representatives[q]) {
          auto v = graded_commutator_test(dc, dc.from_coordinates(p, x), dc.from_coordinates(q, y));
          CHECK(v.coboundary);
          if (v.witness && p + q > 0) CHECK(same(dc.apply_differential(*v.witness), v.commutator));
        }
  std::mt19937 rng(6);
  CHECK_THROWS_AS(graded_commutator_test(dc, random_cochain(dc, 1, rng), r.representatives[0].empty()
                                                                              ? dc.zero_cochain(0)
                                                                              : dc.from_coordinates(0, r.representatives[0][0])),
                  InputError);
}

TEST_CASE("products of degree-1 cocycles are cocycles") {
  auto h = kc2(Field::prime(2));
  auto dc = reduced_b_complex(h, 2);
  auto r = total_cohomology(dc);
  for (const auto& x : r.representatives[1])
    for (const auto& y : r.representatives[1])
      CHECK(is_cocycle(dc, cup(dc, dc.from_coordinates(1, x), dc.from_coordinates(1, y))));
}
