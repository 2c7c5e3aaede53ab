#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "qhg/errors.hpp"
#include "qhg/json_io.hpp"

using namespace qhg;
using fx::q;

TEST_CASE("scalars serialize as exact fractions") {
  CHECK(scalar_to_json(q(-3, 4)) == Json("-3/4"));
  CHECK(scalar_to_json(q(5)) == Json("5"));
  const Scalar z = Scalar(mpq_class(1, 3), mpq_class(-2));
  CHECK(scalar_to_json(z) == Json{{"re", "1/3"}, {"im", "-2"}});
  CHECK(scalar_from_json(scalar_to_json(z)) == z);
  CHECK(scalar_from_json(Json(7)) == q(7));
  CHECK(scalar_from_json(Json("6/8")) == q(3, 4));
  CHECK_THROWS_AS(scalar_from_json(Json(0.5)), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(Json("1/0")), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(Json{{"re", "1"}, {"imag", "2"}}), SchemaError);
}

TEST_CASE("random scalars round-trip") {
  std::mt19937 rng(41);
  const Vector v = fx::random_vector(rng, 50, true);
  CHECK(vector_from_json(vector_to_json(v), 50, "v") == v);
  CHECK_THROWS_AS(vector_from_json(vector_to_json(v), 49, "v"), SchemaError);
}

TEST_CASE("hypergroups round-trip exactly") {
  for (const auto& f : fx::fixtures()) {
    CAPTURE(f.name);
    const QuantumHypergroup h = f.make();
    const Json j = hypergroup_to_json(h.data());
    const HypergroupData back = hypergroup_data_from_json(Json::parse(j.dump()));
    CHECK(back.comult == h.comult());
    CHECK(back.counit == h.counit());
    CHECK(back.left_integral == h.left_integral());
    CHECK(back.alg.mult_table() == h.alg().mult_table());
    CHECK(back.alg.labels() == h.alg().labels());
    CHECK(back.alg.has_star() == h.alg().has_star());
    CHECK(hypergroup_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("dual with pairing round-trips") {
  const DualPackage p = build_dual(fx::s3h12());
  const Json j = hypergroup_to_json(p.dual.data(), p.pairing);
  CHECK(j.contains("pairing"));
  CHECK(QuantumHypergroup::create(hypergroup_data_from_json(j)).report().ok());
}

TEST_CASE("schema errors") {
  Json j = hypergroup_to_json(fx::s3h12().data());
  Json missing = j;
  missing.erase("counit");
  CHECK_THROWS_AS(hypergroup_data_from_json(missing), SchemaError);
  Json short_comult = j;
  short_comult["comult"][0].erase(0);
  CHECK_THROWS_AS(hypergroup_data_from_json(short_comult), SchemaError);
  Json bad_dim = j;
  bad_dim["algebra"]["dim"] = 0;
  CHECK_THROWS_AS(hypergroup_data_from_json(bad_dim), SchemaError);
  CHECK_THROWS_AS(hypergroup_data_from_json(Json::array()), SchemaError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), SchemaError);
}

TEST_CASE("groups and subgroups from JSON") {
  const Json gj = group_to_json(fx::s3());
  const FiniteGroup g = group_from_json(gj);
  CHECK(g.table() == fx::s3().table());
  CHECK(subgroup_members_from_json(Json{{"members", {"e", "(12)"}}}, g) == fx::s3_h12());
  CHECK(subgroup_members_from_json(Json{{"members", {0, 2}}}, g) == fx::s3_h12());
  CHECK_THROWS_AS(subgroup_members_from_json(Json{{"members", {"e", "(14)"}}}, g), SchemaError);
  CHECK_THROWS_AS(subgroup_members_from_json(Json{{"members", {9}}}, g), SchemaError);
  Json broken = gj;
  broken["table"][1][1] = 1;
  CHECK_THROWS_AS(group_from_json(broken), NotAGroup);
}
