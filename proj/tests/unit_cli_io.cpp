#include <doctest.h>

#include "zcenter/json_io.hpp"
#include "zcenter/render.hpp"

using namespace zc;

TEST_CASE("group JSON round trip") {
  GroupTable d3 = dihedral_group(3);
  nlohmann::json j = group_to_json(d3);
  GroupTable back = group_from_json(j);
  CHECK(back.order() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(back.mul(a, b) == d3.mul(a, b));
  CHECK(back.names() == d3.names());
  nlohmann::json bad = j;
  bad["order"] = 7;
  CHECK_THROWS_AS(group_from_json(bad), Error);
}

TEST_CASE("cochain JSON round trip with omitted zeros") {
  GroupTable d3 = dihedral_group(3);
  Cochain t = theta_d3(1);
  nlohmann::json j = cochain_to_json(d3, t);
  Cochain back = cochain_from_json(j, d3);
  CHECK(back == t);
  // omitted values default to zero
  nlohmann::json sparse{{"degree", 3},
                        {"values", {{{"args", {1, 2, 2}}, {"phase", "1/3"}}}}};
  Cochain s = cochain_from_json(sparse, d3);
  CHECK(s(1, 2, 2) == Phase(1, 3));
  CHECK(s(1, 1, 1).is_zero());
  nlohmann::json bad{{"degree", 3}, {"values", {{{"args", {1, 2}}, {"phase", "1/3"}}}}};
  CHECK_THROWS_AS(cochain_from_json(bad, d3), Error);
}

TEST_CASE("cyclotomic JSON canonical round trip") {
  Cyclotomic v = Cyclotomic::root(12, 7) + Cyclotomic(12, Rat(2));
  nlohmann::json j = cyclotomic_to_json(v);
  CHECK(j.at("N") == 12);
  Cyclotomic back = cyclotomic_from_json(j);
  CHECK(back == v);
  // canonical form: coefficients beyond phi(12) = 4 are zero
  for (std::size_t i = 4; i < 12; ++i) CHECK(j.at("coeffs")[i] == "0");
}

TEST_CASE("centre character JSON round trip") {
  GroupTable d3 = dihedral_group(3);
  CentreContext ctx(d3, theta_d3(1));
  const CentreCharacter& chi = ctx.simple_character(4);
  nlohmann::json j = centre_character_to_json(ctx, chi);
  CentreCharacter back = centre_character_from_json(ctx, j);
  for (std::size_t ix = 0; ix < chi.values.size(); ++ix)
    CHECK(back.values[ix] == chi.values[ix]);
}

TEST_CASE("value rendering") {
  RenderOptions ascii{false};
  long long n = 36;
  CHECK(render_value(Cyclotomic::zero(n)) == "0");
  CHECK(render_value(Cyclotomic(n, Rat(-2))) == "-2");
  CHECK(render_value(Cyclotomic::root(n, n / 3), ascii) == "w");
  CHECK(render_value(Cyclotomic::root(n, 2 * n / 3), ascii) == "w^-1");
  CHECK(render_value(Cyclotomic::root(n, n / 4), ascii) == "eps");
  CHECK(render_value(-Cyclotomic::root(n, n / 4), ascii) == "-eps");
  CHECK(render_value(Cyclotomic::root(n, n / 9), ascii) == "eta");
  CHECK(render_value(Cyclotomic::root(n, 5 * n / 9), ascii) == "eta^5");
  CHECK(render_value(Cyclotomic::one(n) + Cyclotomic::root(n, n / 3), ascii) == "1+w");
  CHECK(render_value(Cyclotomic::one(n) + Cyclotomic::root(n, 2 * n / 3), ascii) == "1+w^-1");
}

TEST_CASE("etale datum JSON") {
  GroupTable d3 = dihedral_group(3);
  Cochain alpha = zero_cochain(d3, 3);
  std::vector<EtaleDatum> all = etale_enumerate(d3, alpha);
  for (const EtaleDatum& d : all) {
    nlohmann::json j = etale_datum_to_json(d3, d);
    CHECK(j.at("H").size() == d.h.elems.size());
    CHECK(j.at("F").size() == d.f.elems.size());
  }
}
