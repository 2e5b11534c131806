#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fincat/category.hpp"
#include "fincat/kernels.hpp"

using namespace fincat;

namespace {

// Z/n delooping written out name by name, independent of the generators.
RawCategory cyclic_raw(int n) {
  RawCategory raw;
  raw.objects = {"x"};
  auto name = [](int k) { return k == 0 ? std::string("id_x") : "g" + std::to_string(k); };
  for (int k = 0; k < n; ++k) raw.morphisms.push_back({name(k), "x", "x"});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) raw.compositions.push_back({name(a), name(b), name((a + b) % n)});
  return raw;
}

RawCategory walk_raw() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}, {"f_inv", "b", "a"}};
  raw.compositions = {{"f_inv", "f", "id_a"}, {"f", "f_inv", "id_b"}};
  return raw;
}

}  // namespace

TEST_CASE("terminal category validates") {
  RawCategory raw;
  raw.objects = {"*"};
  raw.morphisms = {{"id_*", "*", "*"}};
  auto c = validate_category(raw);
  REQUIRE(c.ok());
  CHECK(c->object_count() == 1);
  CHECK(c->morphism_count() == 1);
  CHECK(c->compose(0, 0) == 0);
}

TEST_CASE("cyclic group table validates and matches addition mod 3") {
  auto c = value_or_throw(validate_category(cyclic_raw(3)));
  for (MorId a = 0; a < 3; ++a)
    for (MorId b = 0; b < 3; ++b) {
      const int ka = a == 0 ? 0 : std::stoi(c.morphism_name(a).substr(1));
      const int kb = b == 0 ? 0 : std::stoi(c.morphism_name(b).substr(1));
      const MorId r = c.compose(a, b);
      const int kr = r == 0 ? 0 : std::stoi(c.morphism_name(r).substr(1));
      CHECK(kr == (ka + kb) % 3);
    }
}

TEST_CASE("composition entry on a non-composable pair is a TypeMismatch") {
  RawCategory raw = walk_raw();
  raw.morphisms.push_back({"g", "a", "a"});
  raw.compositions.push_back({"g", "f", "f"});  // cod f = b, dom g = a
  auto c = validate_category(raw);
  CHECK_FALSE(c.ok());
  CHECK(c.report.has(Code::TypeMismatch));
}

TEST_CASE("missing identity, missing composite and duplicate composite are reported") {
  RawCategory raw;
  raw.objects = {"x"};
  raw.morphisms = {{"e", "x", "x"}};
  auto no_id = validate_category(raw);
  CHECK(no_id.report.has(Code::MissingIdentity));

  RawCategory gap = cyclic_raw(3);
  gap.compositions.pop_back();
  auto missing = validate_category(gap);
  CHECK(missing.report.has(Code::MissingComposite));

  RawCategory dup = cyclic_raw(3);
  dup.compositions.push_back({"g1", "g1", "g1"});
  CHECK(validate_category(dup).report.has(Code::DuplicateComposite));
}

TEST_CASE("identity law violation") {
  RawCategory raw = cyclic_raw(2);
  raw.compositions[1] = {"id_x", "g1", "id_x"};
  auto c = validate_category(raw);
  CHECK_FALSE(c.ok());
  CHECK((c.report.has(Code::IdentityLawFailure) || c.report.has(Code::DuplicateComposite)));
}

TEST_CASE("associativity failure lists the offending triple") {
  // Two-element monoid tables that are not associative: e unit, a.a = e, but
  // declare a 3-element "left zero with a twist".
  RawCategory raw;
  raw.objects = {"x"};
  raw.morphisms = {{"id_x", "x", "x"}, {"a", "x", "x"}, {"b", "x", "x"}};
  raw.compositions = {{"a", "a", "b"}, {"a", "b", "a"}, {"b", "a", "b"}, {"b", "b", "a"}};
  // (a.a).b = b.b = a ; a.(a.b) = a.a = b
  auto c = validate_category(raw);
  CHECK_FALSE(c.ok());
  CHECK(c.report.has(Code::AssociativityFailure));
  CHECK(c.report.summary().find("a") != std::string::npos);
}

TEST_CASE("opposite swaps dom and cod and is an involution on the nose") {
  auto walk = value_or_throw(validate_category(walk_raw()));
  auto op = opposite(walk);
  const MorId f = *walk.find_morphism("f");
  CHECK(op.dom(f) == walk.cod(f));
  CHECK(op.cod(f) == walk.dom(f));
  CHECK(opposite(op).same_as(walk));
  CHECK(is_opposite_of(op, walk));

  auto b3 = value_or_throw(validate_category(cyclic_raw(3)));
  auto b3op = opposite(b3);
  for (MorId g = 0; g < 3; ++g)
    for (MorId h = 0; h < 3; ++h) CHECK(b3op.compose(g, h) == b3.compose(h, g));
  CHECK_THROWS_AS(walk.compose(f, f), Error);
}

TEST_CASE("replica and full subcategory reuse base composition") {
  auto walk = value_or_throw(validate_category(walk_raw()));
  auto sub = full_subcategory(walk, {1});
  CHECK(sub.object_count() == 1);
  CHECK(sub.morphism_count() == 1);
  CHECK(sub.morphism_name(0) == "id_b");
  CHECK(sub.find_morphism("id_b") == 0);

  auto doubled = replicate(walk, {0, 0, 1}, {"a1", "a2", "b"});
  CHECK(doubled.morphism_count() == 9);
  const MorId f = *walk.find_morphism("f");
  const MorId f_inv = *walk.find_morphism("f_inv");
  const MorId lf = doubled.replica_lift(f, 1, 2);
  const MorId lfi = doubled.replica_lift(f_inv, 2, 0);
  CHECK(doubled.compose(lfi, lf) == doubled.replica_lift(walk.identity(0), 1, 0));
  CHECK(doubled.replica_morphism(lf) == f);
}

TEST_CASE("structural equality distinguishes tables") {
  auto a = value_or_throw(validate_category(cyclic_raw(4)));
  auto b = value_or_throw(validate_category(cyclic_raw(4)));
  CHECK(a == b);
  CHECK_FALSE(a.same_as(b));
  auto c = value_or_throw(validate_category(cyclic_raw(3)));
  CHECK_FALSE(a == c);
}

TEST_CASE("inverse search") {
  auto walk = value_or_throw(validate_category(walk_raw()));
  CHECK(walk.inverse(*walk.find_morphism("f")) == walk.find_morphism("f_inv"));
  auto b4 = value_or_throw(validate_category(cyclic_raw(4)));
  for (MorId g = 0; g < 4; ++g) CHECK(b4.is_iso(g));
}

TEST_CASE("empty category is valid") {
  auto c = validate_category(RawCategory{});
  REQUIRE(c.ok());
  CHECK(c->object_count() == 0);
  CHECK(opposite(*c).object_count() == 0);
}

TEST_CASE("serial and parallel associativity scans agree") {
  auto b4 = value_or_throw(validate_category(cyclic_raw(4)));
  auto s = kernels::scan_associativity(b4, 10, kernels::Execution::serial);
  auto p = kernels::scan_associativity(b4, 10, kernels::Execution::parallel);
  CHECK(s.count == p.count);
  CHECK(s.ok());
}
