#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fincat/dsl.hpp"
#include "fincat/herm.hpp"

using namespace fincat;

namespace {

const char* kB3 = R"(# Z/3 written out in full
category B3 {
  objects: x;
  morphisms: e : x -> x, g : x -> x, h : x -> x;
  identities: x => e;
  compose:
    e . e = e, e . g = g, e . h = h,
    g . e = g, g . g = h, g . h = e,
    h . e = h, h . g = e, h . h = g;
}
)";

bool has_code(const dsl::ParseResult& r, Code c) {
  for (const auto& d : r.diagnostics)
    if (d.code == c) return true;
  return false;
}

}  // namespace

TEST_CASE("empty input") {
  const auto r = dsl::parse("");
  REQUIRE(r.ok());
  CHECK(r.document->empty());
  CHECK(dsl::print(*r.document).empty());
  CHECK(dsl::parse("  # only a comment\n\n").ok());
}

TEST_CASE("B3 sample with an explicit unit") {
  const auto r = dsl::parse(kB3);
  REQUIRE(r.ok());
  const auto& c = r.document->categories.at("B3");
  CHECK(c.morphism_count() == 3);
  CHECK(c.morphism_name(c.identity(0)) == "e");
  const auto text = dsl::print(*r.document);
  CHECK(text.find("identities: x => e;") != std::string::npos);
  const auto back = dsl::parse(text);
  REQUIRE(back.ok());
  CHECK(*back.document == *r.document);
  // without the identities section e is a second idempotent beside id_x
  std::string no_units = kB3;
  no_units.erase(no_units.find("  identities: x => e;\n"), std::string("  identities: x => e;\n").size());
  const auto monoid = dsl::parse(no_units);
  REQUIRE(monoid.ok());
  CHECK(monoid.document->categories.at("B3").morphism_count() == 4);
}

TEST_CASE("minimal Z/3 table relying on identity laws") {
  const auto r = dsl::parse(R"(
category B3 {
  objects: x;
  morphisms: g1 : x -> x, g2 : x -> x;
  compose: g1 . g1 = g2, g1 . g2 = id_x, g2 . g1 = id_x, g2 . g2 = g1;
}
dagger D on B3 { g1 -> g2 }
involution TB3 on B3 { d: x -> x; g1 -> g2, g2 -> g1; }
positivity P on TB3 { x: { id_x } }
functor F : B3 -> B3 { objects: x -> x; morphisms: g1 -> g2, g2 -> g1; phi: x => id_x; }
)");
  REQUIRE(r.ok());
  const auto& doc = *r.document;
  CHECK(doc.categories.at("B3").morphism_count() == 3);
  CHECK(doc.daggers.at("D").category == "B3");
  CHECK(doc.involutions.at("TB3").involution == T_on_category(doc.daggers.at("D").dagger));
  CHECK(doc.positivities.at("P").notion.total() == 1);
  CHECK(doc.functors.at("F").phi.size() == 1);
  const auto again = dsl::parse(dsl::print(doc));
  REQUIRE(again.ok());
  CHECK(*again.document == doc);
}

TEST_CASE("diagnostics carry positions and codes") {
  const auto r = dsl::parse("category C {\n  objects: x;\n  morphisms: f : x -> x;\n  compose: f . f = k;\n}\n");
  REQUIRE(!r.ok());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == Code::UnresolvedReference);
  CHECK(r.diagnostics[0].line == 4);
  CHECK(r.diagnostics[0].column == 20);
  CHECK(r.diagnostics[0].format() == "4:20: UnresolvedReference: unknown morphism 'k'");

  const auto lexed = dsl::parse("category C { objects: x% ; }");
  REQUIRE(lexed.diagnostics.size() == 1);
  CHECK(lexed.diagnostics[0].code == Code::LexError);
  CHECK(lexed.diagnostics[0].column == 24);

  const auto parsed = dsl::parse("category C { objects x; }");
  CHECK(has_code(parsed, Code::ParseError));
  CHECK(has_code(dsl::parse("widget W {}"), Code::ParseError));
  CHECK(has_code(dsl::parse("category C { objects: x; }\ncategory C { objects: y; }"), Code::ParseError));

  // f . f missing: validation error wraps the category report
  const auto invalid = dsl::parse("category C { objects: x; morphisms: f : x -> x; }");
  REQUIRE(invalid.diagnostics.size() == 1);
  CHECK(invalid.diagnostics[0].code == Code::ValidationError);
  CHECK(invalid.diagnostics[0].message.find("MissingComposite") != std::string::npos);
  CHECK(invalid.diagnostics[0].line == 1);

  CHECK(has_code(dsl::parse("dagger D on Nope { }"), Code::UnresolvedReference));
  CHECK(has_code(dsl::parse("category C { objects: x; morphisms: f : x -> y; compose: f . f = f; }"),
                 Code::UnresolvedReference));
}

TEST_CASE("validators run on every block") {
  const std::string b4 = R"(
category B4 {
  objects: x;
  morphisms: g1 : x -> x, g2 : x -> x, g3 : x -> x;
  compose: g1 . g1 = g2, g1 . g2 = g3, g1 . g3 = id_x, g2 . g1 = g3, g2 . g2 = id_x, g2 . g3 = g1,
           g3 . g1 = id_x, g3 . g2 = g1, g3 . g3 = g2;
}
)";
  REQUIRE(dsl::parse(b4).ok());
  CHECK(has_code(dsl::parse(b4 + "dagger D on B4 { g1 -> g2 }"), Code::ValidationError));
  CHECK(dsl::parse(b4 + "dagger D on B4 { g1 -> g3, g2 -> g2 }").ok());
  CHECK(has_code(dsl::parse(b4 + "involution I on B4 { d: x -> x; g1 -> g3; }"), Code::ValidationError));
  CHECK(dsl::parse(b4 + "involution I on B4 { d: x -> x; g1 -> g3, g2 -> g2, g3 -> g1; eta: x => g2; }").ok());
  const std::string inv = b4 + "involution I on B4 { d: x -> x; g1 -> g3, g2 -> g2, g3 -> g1; }\n";
  CHECK(dsl::parse(inv + "positivity P on I { x: { id_x g2 } }").ok());
  const auto bad = dsl::parse(inv + "positivity P on I { x: { g1 } }");
  REQUIRE(has_code(bad, Code::ValidationError));
  CHECK(bad.diagnostics[0].message.find("NotHermitian") != std::string::npos);
  CHECK(has_code(dsl::parse(inv + "functor F : B4 -> B4 { objects: x -> x; morphisms: g1 -> g2, g2 -> g2, g3 -> g2; }"),
                 Code::ValidationError));
}

TEST_CASE("roundtrip and byte stability on every fixture") {
  for (const auto& bundle : gens::fixture_suite()) {
    INFO(bundle.name);
    const auto doc = dsl::from_bundle(bundle);
    const auto text = dsl::print(doc);
    CHECK(text == dsl::print(doc));
    const auto back = dsl::parse(text);
    REQUIRE(back.ok());
    CHECK(*back.document == doc);
    CHECK(dsl::print(*back.document) == text);
  }
}

TEST_CASE("printer rejects names outside the grammar") {
  const auto herm = herm_completion(*gens::fixture("B4").involution);
  dsl::Document doc;
  doc.categories.emplace("H", herm.category);
  CHECK_THROWS_AS(dsl::print(doc), Error);
  CHECK(dsl::is_identifier("f1to1_2"));
  CHECK(dsl::is_identifier("g1*id_d0"));
  CHECK(!dsl::is_identifier("(x,id_x)"));
}
