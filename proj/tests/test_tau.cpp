#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genassoc/tau.hpp"

using namespace genassoc;

namespace {

RootCatalog cat_of(const char* t) { return build_root_system(CartanType::parse(t)); }

int idx_of(const RootCatalog& cat, const char* v) {
  int i = cat.idx(parse_vec(v, cat.rank));
  REQUIRE(i >= 0);
  return i;
}

}  // namespace

TEST_CASE("A2 tau walks the five-element orbit") {
  RootCatalog a2 = cat_of("A2");
  // -a1 <t+> a1 <t-> a1+a2 <t+> a2 <t-> -a2
  int m1 = idx_of(a2, "[-1,0]"), p1 = idx_of(a2, "[1,0]");
  int p12 = idx_of(a2, "[1,1]"), p2 = idx_of(a2, "[0,1]"), m2 = idx_of(a2, "[0,-1]");
  CHECK(tau_on_catalog(a2, +1, m1) == p1);
  CHECK(tau_on_catalog(a2, -1, p1) == p12);
  CHECK(tau_on_catalog(a2, +1, p12) == p2);
  CHECK(tau_on_catalog(a2, -1, p2) == m2);
  // fixed points at the ends
  CHECK(tau_on_catalog(a2, -1, m1) == m1);
  CHECK(tau_on_catalog(a2, +1, m2) == m2);
}

TEST_CASE("tau fixes -alpha_i for i in the other part") {
  for (const char* t : {"A3", "B3", "D4", "G2"}) {
    RootCatalog cat = cat_of(t);
    for (int i = 0; i < cat.rank; ++i) {
      int eps = -cat.sign[i];
      CHECK(tau_on_catalog(cat, eps, i) == i);
    }
  }
}

TEST_CASE("tau is an involution on all of Q, not just the catalog") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (const char* t : {"A3", "C3", "F4", "E6"}) {
    RootCatalog cat = cat_of(t);
    for (int trial = 0; trial < 200; ++trial) {
      RootVec v(cat.rank);
      for (auto& c : v) c = coord(rng);
      for (int eps : {+1, -1})
        CHECK(tau_apply(cat, eps, tau_apply(cat, eps, v)) == v);
    }
  }
}

TEST_CASE("tau agrees with the product of reflections away from fixed -Pi part") {
  for (const char* t : {"A3", "C3", "E6"}) {
    RootCatalog cat = cat_of(t);
    for (int idx = 0; idx < cat.size(); ++idx) {
      for (int eps : {+1, -1}) {
        if (cat.is_negative_simple(idx) && cat.sign[idx] == -eps) continue;
        // product of commuting s_i over I_eps
        RootVec v = cat.roots[idx];
        for (int i = 0; i < cat.rank; ++i) {
          if (cat.sign[i] != eps) continue;
          Int pairing = 0;
          for (int j = 0; j < cat.rank; ++j) pairing += cat.cartan[i][j] * v[j];
          v[i] -= pairing;
        }
        CHECK(cat.roots[tau_on_catalog(cat, eps, idx)] == v);
      }
    }
  }
}

TEST_CASE("word normalization collapses involutive repeats") {
  TauWord w;
  w.signs = {+1, +1, -1, -1, +1};
  w.normalize();
  CHECK(w.signs == std::vector<int>{+1});
  TauWord e;
  e.signs = {+1, -1, -1, +1};
  e.normalize();
  CHECK(e.signs.empty());
  TauWord alt;
  alt.signs = {-1, +1, -1};
  alt.normalize();
  CHECK(alt.alternating());
  CHECK(alt.signs.size() == 3);
}

TEST_CASE("empty word is the identity; word then reversed word is the identity") {
  RootCatalog cat = cat_of("C3");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    TauWord w;
    for (int k = 0; k < trial % 9; ++k) w.signs.push_back(sgn(rng) ? +1 : -1);
    for (int idx = 0; idx < cat.size(); ++idx) {
      CHECK(sigma_apply_idx(cat, TauWord{}, idx) == idx);
      int moved = sigma_apply_idx(cat, w, idx);
      CHECK(sigma_apply_idx(cat, sigma_inverse(w), moved) == idx);
    }
  }
}

TEST_CASE("A2: the alternating word with h+2 = 5 factors equals -w0") {
  RootCatalog a2 = cat_of("A2");
  TauWord w;
  w.signs = {+1, -1, +1, -1, +1};
  for (int idx = 0; idx < a2.size(); ++idx) {
    const RootVec& v = a2.roots[idx];
    RootVec expect(2);
    expect[a2.minus_w0[0]] = v[0];
    expect[a2.minus_w0[1]] = v[1];
    CHECK(a2.roots[sigma_apply_idx(a2, w, idx)] == expect);
  }
}

TEST_CASE("orbit counts and sizes: A2, A3, C3") {
  RootCatalog a2 = cat_of("A2");
  OrbitPartition o2 = orbits(a2);
  REQUIRE(o2.count() == 1);
  CHECK(o2.orbits[0].size() == 5);

  RootCatalog a3 = cat_of("A3");
  OrbitPartition o3 = orbits(a3);
  REQUIRE(o3.count() == 2);
  CHECK(o3.orbits[0].size() == 6);
  CHECK(o3.orbits[1].size() == 3);

  RootCatalog c3 = cat_of("C3");
  OrbitPartition oc = orbits(c3);
  REQUIRE(oc.count() == 3);
  for (const auto& orb : oc.orbits) CHECK(orb.size() == 4);
}

TEST_CASE("A3 orbits carry exactly the expected members") {
  RootCatalog a3 = cat_of("A3");
  OrbitPartition orb = orbits(a3);
  auto orbit_of = [&](const char* v) { return orb.orbit_of[idx_of(a3, v)]; };
  int big = orbit_of("[-1,0,0]");
  CHECK(orbit_of("[0,0,-1]") == big);
  CHECK(orbit_of("[1,0,0]") == big);
  CHECK(orbit_of("[0,0,1]") == big);
  CHECK(orbit_of("[1,1,0]") == big);
  CHECK(orbit_of("[0,1,1]") == big);
  int small = orbit_of("[0,-1,0]");
  CHECK(small != big);
  CHECK(orbit_of("[0,1,0]") == small);
  CHECK(orbit_of("[1,1,1]") == small);
}

TEST_CASE("C3 orbits are the three known sets") {
  RootCatalog c3 = cat_of("C3");
  OrbitPartition orb = orbits(c3);
  auto same = [&](const char* a, const char* b) {
    return orb.orbit_of[idx_of(c3, a)] == orb.orbit_of[idx_of(c3, b)];
  };
  CHECK(same("[-1,0,0]", "[1,0,0]"));
  CHECK(same("[-1,0,0]", "[1,1,0]"));
  CHECK(same("[-1,0,0]", "[0,1,1]"));
  CHECK(same("[0,-1,0]", "[0,1,0]"));
  CHECK(same("[0,-1,0]", "[1,1,1]"));
  CHECK(same("[0,-1,0]", "[1,2,1]"));
  CHECK(same("[0,0,-1]", "[0,0,1]"));
  CHECK(same("[0,0,-1]", "[0,2,1]"));
  CHECK(same("[0,0,-1]", "[2,2,1]"));
}

TEST_CASE("orbit partition is invariant under swapping I+ and I-") {
  // swapping the roles of the generators cannot change connectivity
  for (const char* t : {"A4", "B3", "D4"}) {
    RootCatalog cat = cat_of(t);
    OrbitPartition orb = orbits(cat);
    for (int idx = 0; idx < cat.size(); ++idx)
      for (int eps : {+1, -1})
        CHECK(orb.orbit_of[cat.tau_perm(eps)[idx]] == orb.orbit_of[idx]);
  }
}

TEST_CASE("periodicity checks pass across types") {
  for (const char* t : {"A1", "A2", "A5", "B4", "C3", "D4", "D5", "F4", "G2", "E6"}) {
    RootCatalog cat = cat_of(t);
    Report rep = check_periodicity(cat);
    CHECK_MESSAGE(rep.all_passed(), t, ": ", rep.summary());
  }
}

TEST_CASE("A1 orbit has h/2 = 1 positive root; E8 h+2 word acts as minus identity") {
  RootCatalog a1 = cat_of("A1");
  OrbitPartition orb = orbits(a1);
  REQUIRE(orb.count() == 1);
  CHECK(orb.orbits[0].size() == 2);
  CHECK(check_periodicity(a1).all_passed());

  RootCatalog e8 = cat_of("E8");
  CHECK(check_periodicity(e8).all_passed());
  // -w0 = identity permutation on I, so the word acts linearly as -w0 = P=id
  CHECK(e8.minus_w0 == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("positive pair sums transport back through tau") {
  for (const char* t : {"A3", "C3", "D4"}) {
    RootCatalog cat = cat_of(t);
    for (int a = cat.rank; a < cat.size(); ++a) {
      for (int b = cat.rank; b < cat.size(); ++b) {
        for (int eps : {+1, -1}) {
          int ta = cat.tau_perm(eps)[a], tb = cat.tau_perm(eps)[b];
          if (cat.is_negative_simple(ta) || cat.is_negative_simple(tb)) continue;
          RootVec sum(cat.rank);
          for (int j = 0; j < cat.rank; ++j)
            sum[j] = cat.roots[ta][j] + cat.roots[tb][j];
          RootVec back = tau_apply(cat, eps, sum);
          RootVec expect(cat.rank);
          for (int j = 0; j < cat.rank; ++j)
            expect[j] = cat.roots[a][j] + cat.roots[b][j];
          CHECK(back == expect);
        }
      }
    }
  }
}
