#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fincat/gens.hpp"
#include "fincat/herm.hpp"

using namespace fincat;

namespace {

AntiInvolutiveCategory inv(const std::string& name) { return *gens::fixture(name).involution; }
DaggerStructure dag(const std::string& name) { return *gens::fixture(name).dagger; }

std::vector<MorId> names_to_ids(const FiniteCategory& c, std::initializer_list<const char*> names) {
  std::vector<MorId> out;
  for (auto n : names) out.push_back(*c.find_morphism(n));
  return out;
}

}  // namespace

TEST_CASE("fixed points of small fixtures") {
  const auto b4 = inv("B4");
  CHECK(fixed_points_on(b4, 0) == names_to_ids(b4.base, {"id_x", "g2"}));
  CHECK(enumerate_fixed_points(inv("B4eta1")).empty());
  CHECK(enumerate_fixed_points(inv("Swap2")).empty());
  CHECK(enumerate_fixed_points(inv("B3")).size() == 1);
  CHECK(enumerate_fixed_points(inv("Walk")).size() == 2);
  const auto m2 = inv("M2F4");
  CHECK(fixed_points_on(m2, 0).size() == 1);
  CHECK(fixed_points_on(m2, 1).size() == 1);
  CHECK(fixed_points_on(m2, 2).size() == 10);
  const auto chain = inv("Chain3");
  const auto cp = enumerate_fixed_points(chain);
  REQUIRE(cp.size() == 1);
  CHECK(cp[0].object == 1);
}

TEST_CASE("adjoints through fixed points") {
  const auto b4 = inv("B4");
  const FixedPoint h0{0, 0}, h2{0, 2};
  // adjoint of g: h1^{-1} . g^{-1} . h2
  CHECK(adjoint_wrt(b4, h0, h0, 1) == 3);
  CHECK(adjoint_wrt(b4, h2, h0, 1) == b4.base.compose(2, 3));
  CHECK(adjoint_wrt(b4, h0, h2, 0) == 2);
  // adjoint of an adjoint returns the morphism
  for (FixedPoint a : {h0, h2})
    for (FixedPoint b : {h0, h2})
      for (MorId f = 0; f < 4; ++f) CHECK(adjoint_wrt(b4, b, a, adjoint_wrt(b4, a, b, f)) == f);
  const auto m1 = inv("M1F4");
  CHECK_THROWS_AS(adjoint_wrt(m1, {0, 0}, {0, 0}, *m1.base.find_morphism("f1to1_2")), Error);
}

TEST_CASE("completions are dagger categories and indefinite") {
  for (const auto& b : gens::fixture_suite()) {
    INFO(b.name);
    const auto h = herm_completion(*b.involution);
    CHECK(h.category.object_count() == enumerate_fixed_points(*b.involution).size());
    CHECK(check_dagger(h.category, h.dagger.dag).ok());
    CHECK(is_indefinite(h.dagger).indefinite);
    for (const auto& p : h.points) {
      REQUIRE(h.find(p).has_value());
      CHECK(h.points[*h.find(p)] == p);
      CHECK(dual_witness_is_unitary(h, p));
    }
  }
}

TEST_CASE("replica hom-sets copy the base") {
  const auto b4 = inv("B4");
  const auto h = herm_completion(b4);
  REQUIRE(h.category.object_count() == 2);
  for (ObjId x = 0; x < 2; ++x)
    for (ObjId y = 0; y < 2; ++y)
      for (MorId f = 0; f < 4; ++f) CHECK(h.underlying(h.lift(f, x, y)) == f);
}

TEST_CASE("transfer and dual fixed points") {
  const auto b4 = inv("B4");
  for (MorId g = 0; g < 4; ++g) {
    // g^{-1} + h + g = h in an abelian group
    CHECK(transfer(b4, {0, 2}, g) == FixedPoint{0, 2});
  }
  CHECK(dual_fixed_point(b4, {0, 2}) == FixedPoint{0, 2});
  const auto m1 = inv("M1F4");
  CHECK_THROWS_AS(transfer(m1, {1, m1.base.identity(1)}, *m1.base.find_morphism("f1to1_0")), Error);
  const auto walk = inv("Walk");
  const auto fp = enumerate_fixed_points(walk);
  REQUIRE(fp.size() == 2);
  CHECK(transfer(walk, fp[1], *walk.base.find_morphism("f")).object == 0);
  CHECK(unitary_classes_via_transfer(walk).size() == 1);
}

TEST_CASE("transfer lemma cross-check on every fixture") {
  for (const auto& b : gens::fixture_suite()) {
    INFO(b.name);
    const auto x = cross_check_transfer_lemma(*b.involution);
    CHECK(x.checked);
    CHECK(x.agree);
  }
  const auto m2 = inv("M2F4");
  CHECK(unitary_classes_via_transfer(m2).size() == 3);
  CHECK(unitary_iso_classes(herm_completion(m2).dagger).size() == 3);
  CHECK(!cross_check_transfer_lemma(m2, 5).checked);
}

TEST_CASE("unit, counit and triangles on every fixture") {
  for (const auto& b : gens::fixture_suite()) {
    INFO(b.name);
    const auto v = check_counit(*b.involution);
    CHECK(v.ok());
    if (!v.ok()) MESSAGE(v.detail);
    const auto t = check_triangle_identity(*b.involution);
    CHECK(t.holds);
    if (b.dagger) {
      const auto td = check_triangle_identity(*b.dagger);
      CHECK(td.holds);
      const auto u = unit_U(*b.dagger);
      CHECK(check_functor(u.functor).ok());
      CHECK(is_dagger_functor(*b.dagger, u.herm.dagger, u.functor));
      CHECK(is_dagger_equivalence(*b.dagger, u.herm.dagger, u.functor).ok() == is_indefinite(*b.dagger).indefinite);
    }
  }
}

TEST_CASE("counit with empty image") {
  for (const char* name : {"Swap2", "B4eta1"}) {
    const auto a = inv(name);
    CHECK(restrict_exists_fix(a).base.object_count() == 0);
    CHECK(herm_completion(a).category.object_count() == 0);
    CHECK(check_counit(a).ok());
  }
  CHECK(restrict_exists_fix(inv("Chain3")).base.object_count() == 1);
}

TEST_CASE("herm functor preserves composition and dagger") {
  const auto t = inv("B4");
  const auto h = herm_completion(t);
  const auto id = identity_functor(t.base);
  for (MorId phi : {0u, 2u}) {
    const InvolutiveFunctor f{t, t, id, {phi}};
    const auto hf = herm_functor(f, h, h);
    CHECK(check_functor(hf).ok());
    CHECK(is_dagger_functor(h.dagger, h.dagger, hf));
    // (c, h) -> (c, phi . h)
    CHECK(h.points[hf.on_object(0)].form == t.base.compose(phi, h.points[0].form));
  }
  const InvolutiveFunctor i{t, t, id, {0}};
  const InvolutiveNatTrans a{i, i, NatTransData{id, id, {2}}};
  REQUIRE(check_involutive_nat_trans(a).ok());
  const auto ha = herm_nat_trans(a, h, h);
  CHECK(check_nat_trans(ha).ok());
  CHECK(is_isometric_nat_trans(h.dagger, h.dagger, ha));
}

TEST_CASE("positivity notions") {
  const auto b4 = inv("B4");
  CHECK(canonical_positivity(dag("B4")).sets == std::vector<std::vector<MorId>>{{0}});
  CHECK(check_positivity(b4, PositivityNotion{{{0}}}).ok());
  CHECK(validate_positivity(b4, {{}}).report.has(Code::EmptyOnObject));
  CHECK(validate_positivity(b4, {{1}}).report.has(Code::NotHermitian));
  const auto m2 = inv("M2F4");
  std::vector<std::vector<MorId>> partial(3);
  partial[0] = {m2.base.identity(0)};
  partial[1] = {m2.base.identity(1)};
  partial[2] = {m2.base.identity(2)};
  CHECK(validate_positivity(m2, partial).report.has(Code::NotTransferClosed));
  const auto closed = close_under_transfer(m2, {{0, m2.base.identity(0)}, {1, m2.base.identity(1)}, {2, m2.base.identity(2)}});
  REQUIRE(closed.ok());
  CHECK(closed->sets[2].size() == 10);
  CHECK(*closed == all_fixed_points(m2));
  CHECK(!close_under_transfer(m2, {{2, m2.base.identity(2)}}).ok());
  CHECK(classes_to_positivity(b4, {0}).ok());
  CHECK(classes_to_positivity(m2, {0}).report.has(Code::NotSurjectiveOntoPi0));
  const auto hp = herm_P(b4, PositivityNotion{{{0}}});
  CHECK(hp.category.object_count() == 1);
  CHECK(check_dagger(hp.category, hp.dagger.dag).ok());
}

TEST_CASE("positivity preservation: elementwise and class-level agree") {
  const auto t = inv("B4");
  const auto id = identity_functor(t.base);
  const PositivityNotion p0{{{0}}}, p2{{{2}}}, all{{{0, 2}}};
  const InvolutiveFunctor f0{t, t, id, {0}}, f2{t, t, id, {2}};
  const auto a = preserves_positivity(f0, p0, p0);
  CHECK(a.elementwise);
  CHECK(a.agree());
  const auto b = preserves_positivity(f2, p0, p0);
  CHECK(!b.elementwise);
  CHECK(b.agree());
  CHECK(preserves_positivity(f2, p0, p2).elementwise);
  CHECK(preserves_positivity(f2, all, all).elementwise);
}

TEST_CASE("T_P biequivalence and the corollary") {
  const auto v = check_Tp_biequivalence(dag("B4"));
  CHECK(v.ok());
  CHECK(v.herm_p_objects == 1);
  for (const char* name : {"One", "Walk", "B3", "M1F4", "BS3", "Swap2"}) {
    if (!gens::fixture(name).dagger) continue;
    INFO(name);
    CHECK(check_Tp_biequivalence(dag(name)).ok());
  }
  const auto c = dagger_functors_vs_fixed_points(dag("One"), dag("B4"));
  CHECK(c.functors == 1);
  CHECK(c.transformations == 4);
  CHECK(c.fixed_points.size() == 2);
  CHECK(c.dagger_functor_points.size() == 1);
  CHECK(c.essential_image == std::vector<std::size_t>{0});
  CHECK(c.positivity_preserving == std::vector<std::size_t>{0});
  CHECK(c.ok());
  const auto w = dagger_functors_vs_fixed_points(dag("B3"), dag("B4"));
  CHECK(w.ok());
}

TEST_CASE("property: random transfers stay fixed points in M2F4") {
  const auto m2 = inv("M2F4");
  const auto forms = fixed_points_on(m2, 2);
  std::vector<MorId> isos;
  for (MorId g : m2.base.hom(2, 2))
    if (m2.base.is_iso(g)) isos.push_back(g);
  CHECK(isos.size() == 180);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const FixedPoint h{2, forms[rng() % forms.size()]};
    const MorId g = isos[rng() % isos.size()];
    const auto t = transfer(m2, h, g);
    CHECK(is_fixed_point(m2, t.object, t.form));
    // transfer along g then g^{-1} returns h
    CHECK(transfer(m2, t, *m2.base.inverse(g)) == h);
  }
}
