#include <doctest.h>

#include <random>

#include "zcenter/cochain.hpp"
#include "zcenter/cohomology.hpp"
#include "zcenter/group.hpp"

using namespace zc;

namespace {

Cochain random_cochain(const GroupTable& g, int degree, long long denom, std::mt19937_64& rng) {
  Cochain c(degree, g.order());
  std::vector<int> args(static_cast<std::size_t>(degree));
  for (std::size_t ix = 0; ix < c.values.size(); ++ix) {
    std::size_t t = ix;
    bool id = false;
    for (int i = degree - 1; i >= 0; --i) {
      args[static_cast<std::size_t>(i)] = static_cast<int>(t % g.order());
      t /= g.order();
      id |= args[static_cast<std::size_t>(i)] == 0;
    }
    if (!id) c.values[ix] = Phase(static_cast<long long>(rng() % (2 * denom)), denom);
  }
  return c;
}

}  // namespace

TEST_CASE("differential formula and d^2 = 0") {
  GroupTable d3 = dihedral_group(3);
  std::mt19937_64 rng(11);
  CHECK(differential(d3, zero_cochain(d3, 2)).is_zero());
  Cochain c1 = random_cochain(d3, 1, 12, rng);
  Cochain d1 = differential(d3, c1);
  for (int f = 0; f < 6; ++f)
    for (int g = 0; g < 6; ++g)
      CHECK(d1(f, g) == c1(g) - c1(d3.mul(f, g)) + c1(f));
  CHECK(differential(d3, d1).is_zero());
  Cochain c2 = random_cochain(d3, 2, 12, rng);
  CHECK(differential(d3, differential(d3, c2)).is_zero());
  CHECK_THROWS_AS(differential(d3, random_cochain(d3, 4, 2, rng)), Error);
}

TEST_CASE("cocycle detection") {
  GroupTable d3 = dihedral_group(3);
  std::mt19937_64 rng(13);
  CHECK(is_cocycle(d3, zero_cochain(d3, 3)));
  CHECK(is_cocycle(d3, theta_d3(1)));
  CHECK(is_cocycle(d3, differential(d3, random_cochain(d3, 2, 8, rng))));
  Cochain bad = theta_d3(1);
  bad.at({1, 2, 1}) += Phase(1, 5);
  CHECK(!is_cocycle(d3, bad));
}

TEST_CASE("theta on dihedral(3)") {
  Cochain t = theta_d3(1);
  GroupTable d3 = dihedral_group(3);
  CHECK(t.is_normalized());
  CHECK(t(0, 1, 3).is_zero());
  CHECK(t(1, 1, 1) == Phase(0, 1));
  CHECK(t(1, 2, 2) == Phase(1, 3));
  CHECK(t(3, 3, 3) == Phase(1, 2));
  // power law and the order-6 class
  for (long long k = 0; k <= 6; ++k) {
    Cochain tk = theta_d3(k);
    Cochain scaled = k * theta_d3(1);
    CHECK(tk == scaled);
  }
  CHECK(theta_d3(6).is_zero());
  CHECK(theta_d3(12).is_zero());
}

TEST_CASE("transgression components") {
  GroupTable d3 = dihedral_group(3);
  Cochain t = theta_d3(1);
  Cochain triv = zero_cochain(d3, 3);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      CHECK(transgression_right(d3, t, 0, g, h).is_zero());
      CHECK(transgression_left(d3, t, 0, g, h).is_zero());
      CHECK(transgression_right(d3, triv, g, h, 1).is_zero());
      CHECK(transgression_left(d3, triv, g, h, 1).is_zero());
    }
  // direct evaluation of the defining combinations at sample points
  int r = 1, s = 3;
  {
    int f = r, g = r, h = s;
    int gh = d3.conj(g, h);
    int fgh = d3.conj(d3.mul(f, g), h);
    CHECK(transgression_right(d3, t, f, g, h) ==
          -t(f, g, h) + t(f, gh, g) - t(fgh, f, g));
  }
  {
    int f = s, g = r, h = r;
    int fg = d3.conj(f, g), fh = d3.conj(f, h);
    CHECK(transgression_left(d3, t, f, g, h) == t(f, g, h) - t(fg, f, h) + t(fg, fh, f));
  }
  // tables agree with pointwise evaluation
  TransgressionTables tab = transgression_tables(d3, t);
  for (int f = 0; f < 6; ++f)
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h) {
        CHECK(tab.tefa(f, g, h) == transgression_right(d3, t, f, g, h));
        CHECK(tab.acfa(f, g, h) == transgression_left(d3, t, f, g, h));
      }
}

TEST_CASE("pca identities and the double complex") {
  GroupTable d3 = dihedral_group(3);
  CHECK(check_pca_identities(d3, zero_cochain(d3, 3)));
  CHECK(check_pca_identities(d3, theta_d3(1)));
  CHECK(hs_check(d3, zero_cochain(d3, 3)));
  CHECK(hs_check(d3, theta_d3(1)));
  Cochain bad = zero_cochain(d3, 3);
  bad.at({1, 1, 1}) = Phase(1, 3);  // deliberately not a cocycle
  CHECK(!check_pca_identities(d3, bad));
  CHECK(!hs_check(d3, bad));
}

TEST_CASE("restriction") {
  GroupTable d3 = dihedral_group(3);
  Cochain t = theta_d3(1);
  EmbeddedGroup triv = subgroup_as_group(trivial_subgroup(d3));
  CHECK(restrict_cochain(t, triv).is_zero());
  EmbeddedGroup full = subgroup_as_group(full_subgroup(d3));
  CHECK(restrict_cochain(t, full) == t);
  EmbeddedGroup c3 = subgroup_as_group(generated_subgroup(d3, {1}));
  Cochain t3 = restrict_cochain(t, c3);
  CHECK(is_cocycle(c3.table, t3));
  CHECK(t3(1, 2, 2) == Phase(1, 3));
}

TEST_CASE("product and inverse cocycles") {
  GroupTable d3 = dihedral_group(3);
  GroupTable d3d3 = direct_product(d3, d3);
  Cochain t = theta_d3(1);
  CHECK(product_cocycle(d3, zero_cochain(d3, 3), d3, zero_cochain(d3, 3)).is_zero());
  Cochain prod = product_cocycle(d3, t, d3, inverse_cocycle(t));
  CHECK(is_cocycle(d3d3, prod));
  CHECK(prod.is_normalized());
  // component evaluation
  CHECK(prod(1 * 6 + 3, 2 * 6 + 3, 2 * 6 + 3) == t(1, 2, 2) - t(3, 3, 3));
  Cochain sum = inverse_cocycle(t) + t;
  CHECK(sum.is_zero());
}

TEST_CASE("builtin cocycle specs") {
  GroupTable d3 = dihedral_group(3);
  CHECK(builtin_cocycle(d3, "trivial").is_zero());
  CHECK(builtin_cocycle(d3, "theta3:2") == theta_d3(2));
  CHECK_THROWS_AS(builtin_cocycle(cyclic_group(6), "theta3:1"), Error);
  CHECK_THROWS_AS(builtin_cocycle(d3, "junk"), Error);
}
