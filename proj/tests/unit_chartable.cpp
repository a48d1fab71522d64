#include <doctest.h>

#include <random>

#include "zcenter/chartable.hpp"
#include "zcenter/cochain.hpp"
#include "zcenter/group.hpp"

using namespace zc;

namespace {

// exact row orthogonality: sum_g chi_i(g) chi_j(g^-1) = |G| delta_ij
void check_orthogonality(const GroupTable& g, const CharacterTable& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.rows.size(); ++j) {
      Cyclotomic acc = Cyclotomic::zero(t.root_order);
      for (int x = 0; x < g.order(); ++x)
        acc += t.value(static_cast<int>(i), x) * t.value(static_cast<int>(j), g.inv(x));
      CHECK(acc == Cyclotomic(t.root_order, Rat(i == j ? g.order() : 0)));
    }
}

Cochain coboundary_2cochain(const GroupTable& g, long long denom, std::mt19937_64& rng) {
  Cochain c(1, g.order());
  for (int x = 1; x < g.order(); ++x)
    c.values[static_cast<std::size_t>(x)] =
        Phase(static_cast<long long>(rng() % (2 * denom)), denom);
  return differential(g, c);
}

}  // namespace

TEST_CASE("ordinary character tables") {
  SUBCASE("trivial group") {
    CharacterTable t = character_table(cyclic_group(1));
    REQUIRE(t.rows.size() == 1);
    CHECK(t.degrees[0] == 1);
    CHECK(t.rows[0][0] == Cyclotomic::one(t.root_order));
  }
  SUBCASE("dihedral(3): degrees 1,1,2 and the classical table") {
    GroupTable d3 = dihedral_group(3);
    CharacterTable t = character_table(d3);
    REQUIRE(t.degrees == std::vector<long long>{1, 1, 2});
    // classes e, {r,r2}, {s,sr,sr2}; the 2-dim character is (2,-1,0)
    CHECK(t.rows[2][0] == Cyclotomic(t.root_order, Rat(2)));
    CHECK(t.rows[2][1] == Cyclotomic(t.root_order, Rat(-1)));
    CHECK(t.rows[2][2] == Cyclotomic::zero(t.root_order));
    // the sign character is -1 on reflections
    CHECK(t.rows[1][2] == Cyclotomic(t.root_order, Rat(-1)));
    check_orthogonality(d3, t);
  }
  SUBCASE("cyclic(3): values are cube roots") {
    GroupTable c3 = cyclic_group(3);
    CharacterTable t = character_table(c3);
    REQUIRE(t.rows.size() == 3);
    Cyclotomic omega = Cyclotomic::root(t.root_order, t.root_order / 3);
    for (const auto& row : t.rows) {
      bool is_root = row[1] == Cyclotomic::one(t.root_order) || row[1] == omega ||
                     row[1] == omega * omega;
      CHECK(is_root);
    }
    check_orthogonality(c3, t);
  }
  SUBCASE("quaternion and symmetric(4)") {
    GroupTable q8 = quaternion_group();
    CharacterTable tq = character_table(q8);
    CHECK(tq.degrees == std::vector<long long>{1, 1, 1, 1, 2});
    check_orthogonality(q8, tq);
    GroupTable s4 = symmetric_group(4);
    CharacterTable ts = character_table(s4);
    CHECK(ts.degrees == std::vector<long long>{1, 1, 2, 3, 3});
    check_orthogonality(s4, ts);
  }
}

TEST_CASE("central extensions") {
  GroupTable v4 = direct_product(cyclic_group(2), cyclic_group(2));
  SUBCASE("trivial multiplier with n = 1") {
    CentralExtension e = central_extension(v4, zero_cochain(v4, 2), 1);
    CHECK(e.table.order() == 4);
  }
  SUBCASE("nontrivial multiplier on Z/2 x Z/2") {
    Cochain mu(2, 4);
    // beta((x1,x2),(y1,y2)) = (1/2) x2 y1 with indices x = 2*x1 + x2
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) mu.at({x, y}) = Phase((x % 2) * (y / 2), 2);
    REQUIRE(is_cocycle(v4, mu));
    CentralExtension e = central_extension(v4, mu, 2);
    CHECK(e.table.order() == 8);
    // the embedded generator is central
    for (int x = 0; x < 8; ++x) CHECK(e.table.commutes(x, e.central(1)));
    CHECK_THROWS_AS(central_extension(v4, mu, 3), Error);
    Cochain bad = mu;
    bad.at({1, 1}) += Phase(1, 2);
    if (!is_cocycle(v4, bad)) CHECK_THROWS_AS(central_extension(v4, bad, 2), Error);
  }
}

TEST_CASE("projective character tables") {
  GroupTable v4 = direct_product(cyclic_group(2), cyclic_group(2));
  SUBCASE("zero multiplier reproduces the ordinary table") {
    ProjectiveCharacterTable p = projective_character_table(v4, zero_cochain(v4, 2));
    CHECK(p.degrees == std::vector<long long>{1, 1, 1, 1});
    CharacterTable t = character_table(v4);
    for (std::size_t i = 0; i < p.rows.size(); ++i)
      for (int x = 0; x < 4; ++x)
        CHECK(p.rows[i][static_cast<std::size_t>(x)] == t.value(static_cast<int>(i), x));
  }
  SUBCASE("nontrivial multiplier: one character of degree 2, vanishing off e") {
    Cochain mu(2, 4);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) mu.at({x, y}) = Phase((x % 2) * (y / 2), 2);
    ProjectiveCharacterTable p = projective_character_table(v4, mu);
    REQUIRE(p.degrees == std::vector<long long>{2});
    CHECK(p.rows[0][0] == Cyclotomic(p.root_order, Rat(2)));
    for (int x = 1; x < 4; ++x) CHECK(p.rows[0][static_cast<std::size_t>(x)].is_zero());
  }
  SUBCASE("order-two group with mu(s,s) = 1/2") {
    GroupTable c2 = cyclic_group(2);
    Cochain mu(2, 2);
    mu.at({1, 1}) = Phase(1, 2);
    REQUIRE(is_cocycle(c2, mu));
    ProjectiveCharacterTable p = projective_character_table(c2, mu);
    REQUIRE(p.degrees == std::vector<long long>{1, 1});
    // chi(s)^2 = -1, i.e. chi(s) is a primitive fourth root
    for (const auto& row : p.rows) {
      Cyclotomic sq = row[1] * row[1];
      CHECK(sq == Cyclotomic(p.root_order, Rat(-1)));
    }
    CHECK(!(p.rows[0][1] == p.rows[1][1]));
  }
}

TEST_CASE("projective degree sums and coboundary twists") {
  std::mt19937_64 rng(55);
  for (const GroupTable& g :
       {dihedral_group(3), quaternion_group(), direct_product(cyclic_group(2), cyclic_group(2)),
        cyclic_group(6)}) {
    for (int trial = 0; trial < 3; ++trial) {
      Cochain mu = coboundary_2cochain(g, 4, rng);
      ProjectiveCharacterTable p = projective_character_table(g, mu);
      long long s = 0;
      for (long long d : p.degrees) s += d * d;
      CHECK(s == g.order());
      // twisting by a coboundary preserves the degree multiset
      ProjectiveCharacterTable base = projective_character_table(g, zero_cochain(g, 2));
      std::vector<long long> d1 = base.degrees, d2 = p.degrees;
      std::sort(d1.begin(), d1.end());
      std::sort(d2.begin(), d2.end());
      CHECK(d1 == d2);
    }
  }
}
