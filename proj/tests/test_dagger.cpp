#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "fincat/dagger.hpp"
#include "fincat/gens.hpp"

using namespace fincat;

namespace {

DaggerStructure dagger_of(const std::string& name) { return *gens::fixture(name).dagger; }

}  // namespace

TEST_CASE("identity map on a non-abelian group is not a dagger") {
  const auto bs3 = gens::fixture("BS3").category;
  std::vector<MorId> id(bs3.morphism_count());
  std::iota(id.begin(), id.end(), 0u);
  const auto r = check_dagger(bs3, id);
  CHECK(r.has(Code::NotContravariant));
  CHECK(!r.has(Code::NotInvolutive));
  // on an abelian group it is one
  const auto b4 = gens::fixture("B4").category;
  std::vector<MorId> id4(4);
  std::iota(id4.begin(), id4.end(), 0u);
  CHECK(check_dagger(b4, id4).ok());
}

TEST_CASE("dagger failures are itemized") {
  const auto walk = gens::fixture("Walk").category;
  CHECK(check_dagger(walk, {0, 1, 2, 3}).has(Code::NotIdentityOnObjects));
  const auto b3 = gens::fixture("B3").category;
  CHECK(check_dagger(b3, {0, 2, 0}).has(Code::NotInvolutive));
}

TEST_CASE("name-based dagger input") {
  const auto walk = gens::fixture("Walk").category;
  auto d = validate_dagger(walk, {{"f", "f_inv"}});
  REQUIRE(d.ok());
  CHECK((*d)(*walk.find_morphism("f_inv")) == *walk.find_morphism("f"));
  CHECK(!validate_dagger(walk, {{"f", "nope"}}).ok());
}

TEST_CASE("classification in B4") {
  const auto d = dagger_of("B4");
  const MorId g2 = *d.base.find_morphism("g2"), g1 = *d.base.find_morphism("g1");
  const auto c2 = classify_morphism(d, g2);
  CHECK(c2.self_adjoint);
  CHECK(c2.unitary);
  CHECK(!c2.positive_automorphism);
  const auto c1 = classify_morphism(d, g1);
  CHECK(!c1.self_adjoint);
  CHECK(c1.unitary);
  CHECK(classify_morphism(d, 0).positive_automorphism);
  CHECK_THROWS_AS(classify_morphism(d, 99), Error);
}

TEST_CASE("classification in M1F4 against field arithmetic") {
  // 1x1 matrices over F4: a* a = a^3 = 1 for a != 0, so unitaries are all nonzero scalars
  const auto d = dagger_of("M1F4");
  const auto& c = d.base;
  for (MorId m : c.hom(1, 1)) {
    const auto k = classify_morphism(d, m);
    const bool zero = c.morphism_name(m) == "f1to1_0";
    CHECK(k.unitary == !zero);
    CHECK(k.isometry == !zero);
    // self-adjoint: a^2 = a, so a in {0, 1}
    CHECK(k.self_adjoint == (zero || c.is_identity(m)));
    CHECK(k.positive_endomorphism == (zero || c.is_identity(m)));
  }
  // d0 -> d1 is the empty matrix: not an isometry, since d1 is not zero-dimensional
  const MorId z = *c.hom(0, 1).begin();
  CHECK(!is_isometry(d, *c.hom(1, 0).begin()));
  CHECK(is_isometry(d, z));
  CHECK(!is_unitary(d, z));
}

TEST_CASE("indefiniteness") {
  CHECK(is_indefinite(dagger_of("B3")).indefinite);
  const auto b4 = is_indefinite(dagger_of("B4"));
  CHECK(!b4.indefinite);
  REQUIRE(b4.counterexample.has_value());
  CHECK(b4.counterexample->first == 0);
  CHECK(dagger_of("B4").base.morphism_name(b4.counterexample->second) == "g2");
  CHECK(is_indefinite(dagger_of("M2F4")).indefinite);
  CHECK(is_indefinite(dagger_of("Walk")).indefinite);
  CHECK(is_indefinite(dagger_of("BS3")).indefinite == false);
}

TEST_CASE("unitary classes and canonical positivity") {
  CHECK(unitary_iso_classes(dagger_of("Walk")).size() == 1);
  CHECK(unitary_iso_classes(dagger_of("M2F4")).size() == 3);
  const auto p = canonical_positivity(dagger_of("B4"));
  REQUIRE(p.sets.size() == 1);
  CHECK(p.sets[0] == std::vector<MorId>{0});
  const auto pm = canonical_positivity(dagger_of("M2F4"));
  CHECK(pm.sets[2].size() == 10);
  CHECK(pm.sets[1].size() == 1);
}

TEST_CASE("dagger functors and dagger equivalences") {
  const auto b4 = dagger_of("B4");
  const auto fs = enumerate_functors(b4.base, b4.base);
  for (const auto& f : fs) CHECK(is_dagger_functor(b4, b4, f));  // abelian: every hom commutes with inversion
  const auto walk = dagger_of("Walk");
  const auto one = dagger_of("One");
  const auto to_one = terminal_functor(walk.base, one.base);
  CHECK(is_dagger_functor(walk, one, to_one));
  CHECK(is_dagger_equivalence(walk, one, to_one).ok());
  CHECK(has_unitary_quasi_inverse(walk, one, to_one) == std::optional<bool>(true));
  // a functor that is not dagger is rejected
  const auto bs3 = gens::fixture("BS3");
  const auto autos = enumerate_functors(bs3.category, bs3.category);
  bool threw = false;
  for (const auto& f : autos)
    if (!is_dagger_functor(*bs3.dagger, *bs3.dagger, f)) {
      threw = true;
      CHECK_THROWS_AS(is_dagger_equivalence(*bs3.dagger, *bs3.dagger, f), Error);
    }
  // every endomorphism of S3 commutes with inversion
  CHECK(!threw);
}

TEST_CASE("unitary search in the matrix category") {
  const auto d = dagger_of("M2F4");
  const auto u = find_unitary(d, 2, 2);
  REQUIRE(u.has_value());
  CHECK(is_unitary(d, *u));
  CHECK(*u <= d.base.identity(2));
  CHECK(!find_unitary(d, 1, 2).has_value());
  std::size_t unitaries = 0;
  for (MorId m : d.base.hom(2, 2)) unitaries += is_unitary(d, m);
  CHECK(unitaries == 18);
}
