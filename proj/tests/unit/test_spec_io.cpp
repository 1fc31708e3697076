#include "doctest.h"

#include "hopfcoh/spec_io.hpp"

using namespace hopfcoh;

namespace {
const std::filesystem::path data_dir = HOPFCOH_DATA_DIR;
const std::filesystem::path test_data = HOPFCOH_TEST_DATA_DIR;
}  // namespace

TEST_CASE("bundled algebras load and pass the axioms") {
  for (const char* name : {"kc2_q", "kc2_gf2", "ks3_q", "ks3_dual_q", "taft2_q", "taft3_gf7"}) {
    CAPTURE(name);
    auto h = load_algebra(data_dir / (std::string(name) + ".json"));
    CHECK(check_hopf_axioms(*h).all_passed());
  }
  auto t = load_algebra(data_dir / "taft3_gf7.json");
  CHECK(t->dim() == 9);
  CHECK(t->field() == Field::prime(7));
  CHECK(t->same_structure(taft_algebra(3, Field::prime(7).from_int(2), Field::prime(7))));
}

TEST_CASE("algebra JSON round trip") {
  auto h = taft_algebra(2, Field::rationals().from_int(-1), Field::rationals());
  auto j = algebra_to_json(h);
  auto back = algebra_from_json(j);
  CHECK(back.same_structure(h));
  CHECK(back.labels() == h.labels());
  CHECK(algebra_to_json(back) == j);
}

TEST_CASE("broken counit is named") {
  auto h = load_algebra(data_dir / "kc2_q_broken_counit.json");
  auto rep = check_hopf_axioms(*h);
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.failures().find("counit") != std::string::npos);
}

TEST_CASE("malformed input is an input error") {
  CHECK_THROWS_AS(load_algebra(test_data / "malformed.json"), InputError);
  CHECK_THROWS_AS(load_algebra(test_data / "bad_coefficient.json"), InputError);
  CHECK_THROWS_AS(load_algebra(test_data / "missing.json"), InputError);
  Json j = algebra_to_json(group_algebra(cyclic_group_table(2), Field::rationals()));
  j["mul"][0][0] = 5;
  CHECK_THROWS_AS(algebra_from_json(j), InputError);
  j = algebra_to_json(group_algebra(cyclic_group_table(2), Field::rationals()));
  j["field"] = Json{{"p", 4}};
  CHECK_THROWS_AS(algebra_from_json(j), InputError);
}

TEST_CASE("bimodule files") {
  auto h = load_algebra(data_dir / "kc2_q.json");
  auto H = regular_bimodule(h);
  auto ut = load_bimodule(data_dir / "kc2_q_under_tensor.json", h);
  CHECK(ut == under_tensor(H, H));
  CHECK(check_hopf_bimodule(ut).all_passed());
  CHECK(load_bimodule(data_dir / "kc2_q_regular.json", nullptr).dim() == 2);
  auto other = load_algebra(data_dir / "kc2_gf2.json");
  CHECK_THROWS_AS(load_bimodule(data_dir / "kc2_q_regular.json", other), InputError);
  auto j = bimodule_to_json(ut);
  CHECK(bimodule_from_json(j, h) == ut);
}

TEST_CASE("cohomology JSON round trip") {
  auto h = std::make_shared<const HopfAlgebra>(group_algebra(cyclic_group_table(2), Field::prime(2)));
  auto dc = reduced_b_complex(h, 3);
  auto r = total_cohomology(dc);
  auto j = cohomology_to_json(dc, r);
  CHECK(j["theory"] == "b");
  auto back = cohomology_from_json(Json::parse(j.dump()), dc.field());
  CHECK(back.dims == r.dims);
  CHECK(back.ranks == r.ranks);
  REQUIRE(back.representatives.size() == r.representatives.size());
  for (std::size_t n = 0; n < r.representatives.size(); ++n) CHECK(back.representatives[n] == r.representatives[n]);
  CHECK(cohomology_to_json(dc, back) == j);
}
