#include <doctest.h>

#include <algorithm>
#include <random>

#include "zcenter/cochain.hpp"
#include "zcenter/cohomology.hpp"
#include "zcenter/etale.hpp"
#include "zcenter/group.hpp"

using namespace zc;

namespace {

std::vector<int> subgroup_orders(const std::vector<std::pair<Subgroup, Cochain>>& v) {
  std::vector<int> o;
  for (const auto& [s, c] : v) o.push_back(s.order());
  return o;
}

Cochain random_3coboundary(const GroupTable& g, long long denom, std::mt19937_64& rng) {
  Cochain c(2, g.order());
  std::vector<int> args(2);
  for (std::size_t ix = 0; ix < c.values.size(); ++ix) {
    std::size_t t = ix;
    bool id = false;
    for (int i = 1; i >= 0; --i) {
      args[static_cast<std::size_t>(i)] = static_cast<int>(t % g.order());
      t /= g.order();
      id |= args[static_cast<std::size_t>(i)] == 0;
    }
    if (!id) c.values[ix] = Phase(static_cast<long long>(rng() % (2 * denom)), denom);
  }
  return differential(g, c);
}

}  // namespace

TEST_CASE("admissible subgroups of dihedral(3) per twist") {
  GroupTable d3 = dihedral_group(3);
  CHECK(subgroup_orders(admissible_subgroups(d3, theta_d3(0))) ==
        std::vector<int>{1, 2, 3, 6});
  CHECK(subgroup_orders(admissible_subgroups(d3, theta_d3(3))) == std::vector<int>{1, 3});
  CHECK(subgroup_orders(admissible_subgroups(d3, theta_d3(2))) == std::vector<int>{1, 2});
  CHECK(subgroup_orders(admissible_subgroups(d3, theta_d3(1))) == std::vector<int>{1});
  // witnesses really trivialize the restriction
  for (auto& [h, gamma] : admissible_subgroups(d3, theta_d3(3))) {
    EmbeddedGroup hg = subgroup_as_group(h);
    CHECK(differential(hg.table, gamma) == restrict_cochain(theta_d3(3), hg));
  }
}

TEST_CASE("lagrangian data counts") {
  GroupTable d3 = dihedral_group(3);
  CHECK(lagrangian_data(d3, theta_d3(0)).size() == 4);
  CHECK(lagrangian_data(d3, theta_d3(1)).size() == 1);
  GroupTable v4 = direct_product(cyclic_group(2), cyclic_group(2));
  std::vector<LagrangianDatum> lv = lagrangian_data(v4, zero_cochain(v4, 3));
  int full_count = 0;
  for (const LagrangianDatum& d : lv)
    if (d.h.order() == 4) ++full_count;
  CHECK(full_count == 2);  // trivial and nontrivial H^2 class
}

TEST_CASE("epsilon from gamma") {
  GroupTable d3 = dihedral_group(3);
  SUBCASE("trivial subgroup: empty table") {
    EmbeddedGroup tg = subgroup_as_group(trivial_subgroup(d3));
    EpsilonTable e = epsilon_from_gamma(tg, zero_cochain(tg.table, 2));
    CHECK(e.at(0, 0).is_zero());
  }
  SUBCASE("abelian symmetric gamma gives zero") {
    GroupTable c4 = cyclic_group(4);
    EmbeddedGroup full = subgroup_as_group(full_subgroup(c4));
    Cochain gamma(2, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a && b) gamma.at({a, b}) = Phase(a * b, 8);  // symmetric
    EpsilonTable e = epsilon_from_gamma(full, gamma);
    for (const Phase& p : e.values) CHECK(p.is_zero());
  }
  SUBCASE("full dihedral with zero gamma") {
    EmbeddedGroup full = subgroup_as_group(full_subgroup(d3));
    EpsilonTable e = epsilon_from_gamma(full, zero_cochain(d3, 2));
    for (const Phase& p : e.values) CHECK(p.is_zero());
  }
}

TEST_CASE("etale validation from first principles") {
  GroupTable d3 = dihedral_group(3);
  SUBCASE("trivial datum is valid") {
    Cochain alpha = theta_d3(1);
    LagrangianDatum d = lagrangian_data(d3, alpha)[0];
    EtaleDatum e = lagrangian_as_etale(d);
    EtaleValidation v = validate_etale(d3, alpha, e);
    CHECK(v.ok);
  }
  SUBCASE("all lagrangian data validate, all twists") {
    for (int k : {0, 2, 3}) {
      Cochain alpha = theta_d3(k);
      for (const LagrangianDatum& d : lagrangian_data(d3, alpha)) {
        EtaleValidation v = validate_etale(d3, alpha, lagrangian_as_etale(d));
        CHECK(v.ok);
      }
    }
  }
  SUBCASE("corrupting one epsilon value is caught and pinpointed") {
    Cochain alpha = theta_d3(0);
    std::vector<LagrangianDatum> data = lagrangian_data(d3, alpha);
    EtaleDatum e = lagrangian_as_etale(data[3]);  // full D3
    e.epsilon.at(1, 3) += Phase(1, 3);
    EtaleValidation v = validate_etale(d3, alpha, e);
    CHECK(!v.ok);
    CHECK(!v.first_failure.empty());
  }
}

TEST_CASE("alternative bar placements versus first principles") {
  // On a nontrivial coboundary cocycle the transgression placement matters;
  // the validator evaluates the swapped placements alongside the
  // first-principles constraints on each datum.
  GroupTable q8 = quaternion_group();
  std::mt19937_64 rng(333);
  Cochain alpha = random_3coboundary(q8, 4, rng);
  REQUIRE(is_cocycle(q8, alpha));
  bool swapped_action_always = true, swapped_product_always = true;
  int data_count = 0;
  for (const EtaleDatum& d : etale_enumerate(q8, alpha)) {
    EtaleValidation v = validate_etale(q8, alpha, d);
    CHECK(v.ok);
    swapped_action_always &= v.action_bar_swapped_matches;
    swapped_product_always &= v.product_bar_swapped_matches;
    ++data_count;
  }
  CHECK(data_count > 0);
  // the swapped placements disagree with the validated constraints on
  // generic twisted data, so they are not equivalent formulations
  MESSAGE("swapped action placement matches on all data: ", swapped_action_always);
  MESSAGE("swapped product placement matches on all data: ", swapped_product_always);
}

TEST_CASE("lagrangian characters: identities") {
  GroupTable d3 = dihedral_group(3);
  for (int k : {0, 2, 3}) {
    Cochain alpha = theta_d3(k);
    CentreContext ctx(d3, alpha);
    for (const LagrangianDatum& d : lagrangian_data(d3, alpha)) {
      CentreCharacter chi = lagrangian_character(ctx, d);
      CHECK(is_class_function(ctx, chi));
      // chi_L(e,e) = [G:H]
      CHECK(ctx.value_at(chi, 0, 0) ==
            Cyclotomic(ctx.root_order(), Rat(d3.order() / d.h.order())));
      // total dimension = sum over f of chi_L(f, e) = |G|
      Cyclotomic dim = Cyclotomic::zero(ctx.root_order());
      for (int f = 0; f < d3.order(); ++f) dim += ctx.value_at(chi, f, 0);
      CHECK(dim == Cyclotomic(ctx.root_order(), Rat(d3.order())));
      // unit multiplicity one; integral non-negative decomposition
      std::vector<long long> m = decompose(ctx, chi);
      CHECK(m[0] == 1);
    }
  }
}

TEST_CASE("representative independence of the induced character") {
  GroupTable d3 = dihedral_group(3);
  Cochain alpha = theta_d3(3);
  CentreContext ctx(d3, alpha);
  std::mt19937_64 rng(2024);
  for (const LagrangianDatum& d : lagrangian_data(d3, alpha)) {
    CentreCharacter ref = lagrangian_character(ctx, d);
    for (int trial = 0; trial < 10; ++trial) {
      // pick a random representative from every coset of H
      std::vector<int> reps;
      std::vector<bool> used(static_cast<std::size_t>(d3.order()), false);
      for (int y = 0; y < d3.order(); ++y) {
        if (used[static_cast<std::size_t>(y)]) continue;
        std::vector<int> coset;
        for (int h : d.h.elems) {
          coset.push_back(d3.mul(y, h));
          used[static_cast<std::size_t>(d3.mul(y, h))] = true;
        }
        reps.push_back(coset[rng() % coset.size()]);
      }
      CentreCharacter alt = lagrangian_character_with_reps(ctx, d, reps);
      for (std::size_t ix = 0; ix < ref.values.size(); ++ix)
        CHECK(alt.values[ix] == ref.values[ix]);
    }
  }
}

TEST_CASE("conjugated subgroups give the same lagrangian spectra") {
  GroupTable d3 = dihedral_group(3);
  Cochain alpha = theta_d3(2);
  CentreContext ctx(d3, alpha);
  // the C2-representative is <s>; its conjugates <sr>, <sr2> must produce
  // identical decomposition sets once their own witnesses are solved
  std::vector<std::vector<long long>> ref_decs;
  for (const LagrangianDatum& d : lagrangian_data(d3, alpha))
    if (d.h.order() == 2) ref_decs.push_back(decompose(ctx, lagrangian_character(ctx, d)));
  REQUIRE(!ref_decs.empty());
  for (int x = 0; x < d3.order(); ++x) {
    Subgroup conj = conjugate_subgroup(generated_subgroup(d3, {3}), x);
    EmbeddedGroup hg = subgroup_as_group(conj);
    Cochain beta = restrict_cochain(alpha, hg);
    CoboundaryOutcome o = solve_coboundary(hg.table, beta);
    REQUIRE(o.is_coboundary);
    LagrangianDatum d{conj, hg, o.witness};
    std::vector<long long> dec = decompose(ctx, lagrangian_character(ctx, d));
    CHECK(std::find(ref_decs.begin(), ref_decs.end(), dec) != ref_decs.end());
  }
}

TEST_CASE("quotient cocycles") {
  GroupTable d3 = dihedral_group(3);
  SUBCASE("F = H collapses to the trivial cocycle on the trivial group") {
    Cochain alpha = zero_cochain(d3, 3);
    LagrangianDatum full = lagrangian_data(d3, alpha)[3];
    QuotientCocycle q = quotient_cocycle(d3, alpha, lagrangian_as_etale(full));
    CHECK(q.quotient.quotient.order() == 1);
    CHECK(q.alpha_bar.is_zero());
  }
  SUBCASE("F = {e} reproduces the restriction under the identity section") {
    Cochain alpha = theta_d3(1);
    // H = C3, F = {e}: epsilon vanishes, gamma vanishes
    Subgroup c3 = generated_subgroup(d3, {1});
    EtaleDatum d;
    d.h = c3;
    d.f = trivial_subgroup(d3);
    d.fg = subgroup_as_group(d.f);
    d.gamma = zero_cochain(d.fg.table, 2);
    d.epsilon = EpsilonTable(d3.order());
    REQUIRE(validate_etale(d3, alpha, d).ok);
    QuotientCocycle q = quotient_cocycle(d3, alpha, d);
    EmbeddedGroup hg = subgroup_as_group(c3);
    Cochain restricted = restrict_cochain(alpha, hg);
    CHECK(q.alpha_bar == restricted);
  }
  SUBCASE("(D3, C3): a 3-cocycle on Z/2 with solvable class") {
    Cochain alpha = zero_cochain(d3, 3);
    std::vector<EtaleDatum> all = etale_enumerate(d3, alpha);
    int found = 0;
    for (const EtaleDatum& d : all) {
      if (d.h.order() != 6 || d.f.order() != 3) continue;
      ++found;
      QuotientCocycle q = quotient_cocycle(d3, alpha, d);
      CHECK(q.quotient.quotient.order() == 2);
      CHECK(is_cocycle(q.quotient.quotient, q.alpha_bar));
      CHECK(solve_coboundary(q.quotient.quotient, q.alpha_bar).is_coboundary);
    }
    CHECK(found == 1);
  }
}

TEST_CASE("quotient cocycle on Z/4 over Z/2: both epsilon classes") {
  GroupTable c4 = cyclic_group(4);
  Cochain alpha = zero_cochain(c4, 3);
  std::vector<EtaleDatum> all = etale_enumerate(c4, alpha);
  int nontrivial_bars = 0, trivial_bars = 0;
  for (const EtaleDatum& d : all) {
    if (d.h.order() != 4 || d.f.order() != 2) continue;
    QuotientCocycle q = quotient_cocycle(c4, alpha, d);
    CHECK(is_cocycle(q.quotient.quotient, q.alpha_bar));
    if (solve_coboundary(q.quotient.quotient, q.alpha_bar).is_coboundary)
      ++trivial_bars;
    else
      ++nontrivial_bars;
    // section independence: the other section changes alpha_bar by a coboundary
    std::vector<int> alt = q.quotient.section;
    alt[1] = 3;  // the other representative of the nonidentity coset
    QuotientCocycle q2 = quotient_cocycle(c4, alpha, d, alt);
    Cochain diff = q2.alpha_bar - q.alpha_bar;
    CHECK(solve_coboundary(q.quotient.quotient, diff).is_coboundary);
  }
  CHECK(trivial_bars == 1);
  CHECK(nontrivial_bars == 1);
}

TEST_CASE("etale enumeration") {
  GroupTable triv = cyclic_group(1);
  CHECK(etale_enumerate(triv, zero_cochain(triv, 3)).size() == 1);
  GroupTable d3 = dihedral_group(3);
  std::vector<EtaleDatum> all = etale_enumerate(d3, zero_cochain(d3, 3));
  CHECK(all.size() == 8);
  bool has_mid = false;
  for (const EtaleDatum& d : all) has_mid |= d.h.order() == 6 && d.f.order() == 3;
  CHECK(has_mid);
  // with the order-six twist only F = {e} survives, one datum per subgroup
  std::vector<EtaleDatum> tw = etale_enumerate(d3, theta_d3(1));
  CHECK(tw.size() == 4);
  for (const EtaleDatum& d : tw) CHECK(d.f.order() == 1);
}
