#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/dagger.hpp"
#include "fincat/functor.hpp"
#include "fincat/gens.hpp"
#include "fincat/involutive.hpp"
#include "fincat/positivity.hpp"

namespace fincat::dsl {

/// Text format:
///
///   category B3 {
///     objects: x;
///     morphisms: g1 : x -> x, g2 : x -> x;
///     compose: g1 . g1 = g2, g1 . g2 = id_x, g2 . g1 = id_x, g2 . g2 = g1;
///   }
///   dagger D on B3 { g1 -> g2 }
///   involution TB3 on B3 { d: x -> x; g1 -> g2, g2 -> g1; eta: x => id_x; }
///   positivity P on TB3 { x: { id_x } }
///   functor F : B3 -> B3 { objects: x -> x; morphisms: g1 -> g2, g2 -> g1; phi: x => id_x; }
///
/// Identities are named id_<object> and declared automatically, unless an
/// `identities: x => e;` section names them. Composites with an identity, d on
/// identities, identity eta components and identity dagger entries may be
/// omitted. Commas between items are optional; `#` starts a line comment.

struct Diagnostic {
  Code code;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  /// "line:column: Code: message"
  std::string format() const;
};

struct DaggerDecl {
  std::string category;
  DaggerStructure dagger;
  friend bool operator==(const DaggerDecl&, const DaggerDecl&) = default;
};

struct InvolutionDecl {
  std::string category;
  AntiInvolutiveCategory involution;
  friend bool operator==(const InvolutionDecl&, const InvolutionDecl&) = default;
};

struct PositivityDecl {
  std::string involution;
  PositivityNotion notion;
  friend bool operator==(const PositivityDecl&, const PositivityDecl&) = default;
};

struct FunctorDecl {
  std::string source;
  std::string target;
  FunctorData functor;
  std::vector<MorId> phi;  // empty when the block has no phi section
  friend bool operator==(const FunctorDecl&, const FunctorDecl&) = default;
};

/// Declarations by kind, each kind keyed by name.
struct Document {
  std::map<std::string, FiniteCategory> categories;
  std::map<std::string, DaggerDecl> daggers;
  std::map<std::string, InvolutionDecl> involutions;
  std::map<std::string, PositivityDecl> positivities;
  std::map<std::string, FunctorDecl> functors;

  bool empty() const {
    return categories.empty() && daggers.empty() && involutions.empty() && positivities.empty() && functors.empty();
  }
  friend bool operator==(const Document&, const Document&) = default;
};

struct ParseResult {
  std::optional<Document> document;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return document.has_value(); }
};

/// Every declaration passes its validator before it is accepted.
ParseResult parse(std::string_view text);

/// Canonical text: categories, daggers, involutions, positivity notions,
/// functors, each sorted by name. Throws ValidationError for names that are
/// not identifiers.
std::string print(const Document& doc);

/// Category, dagger and involution of a generated bundle.
Document from_bundle(const gens::Bundle& bundle);

bool is_identifier(std::string_view s);

}  // namespace fincat::dsl
