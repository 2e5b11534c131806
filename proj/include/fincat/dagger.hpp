#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/functor.hpp"
#include "fincat/positivity.hpp"

namespace fincat {

/// An identity-on-objects contravariant involution on morphisms.
struct DaggerStructure {
  FiniteCategory base;
  std::vector<MorId> dag;

  MorId operator()(MorId m) const { return dag[m]; }
  friend bool operator==(const DaggerStructure& a, const DaggerStructure& b) {
    return a.dag == b.dag && same_category(a.base, b.base);
  }
};

Report check_dagger(const FiniteCategory& c, const std::vector<MorId>& dag);
Checked<DaggerStructure> validate_dagger(FiniteCategory c, std::vector<MorId> dag);
/// Name-based input. Identities may be omitted (they map to themselves), and
/// an entry f -> g implies g -> f unless g has its own entry.
Checked<DaggerStructure> validate_dagger(FiniteCategory c, const std::vector<std::pair<std::string, std::string>>& raw);

struct MorphismClassification {
  bool self_adjoint = false;
  bool isometry = false;
  bool unitary = false;
  /// f = dag(a) . a for some automorphism a.
  bool positive_automorphism = false;
  /// f = dag(a) . a for some endomorphism a, invertible or not.
  bool positive_endomorphism = false;
};

bool is_isometry(const DaggerStructure& d, MorId f);
bool is_unitary(const DaggerStructure& d, MorId f);
/// Throws UnknownMorphism for identifiers outside the category.
MorphismClassification classify_morphism(const DaggerStructure& d, MorId f);

/// F(dag f) = dag(F f) for every morphism.
bool is_dagger_functor(const DaggerStructure& d1, const DaggerStructure& d2, const FunctorData& f);
bool is_isometric_nat_trans(const DaggerStructure& d1, const DaggerStructure& d2, const NatTransData& alpha);

struct DaggerEquivalenceVerdict {
  bool fully_faithful = false;
  bool unitarily_surjective = false;
  std::string detail;
  bool ok() const { return fully_faithful && unitarily_surjective; }
};

/// Fully faithful and every target object unitarily isomorphic to an image.
/// Throws NotADaggerFunctor.
DaggerEquivalenceVerdict is_dagger_equivalence(const DaggerStructure& d1, const DaggerStructure& d2,
                                               const FunctorData& f);

/// Existence of a dagger quasi-inverse G with unitary natural isomorphisms
/// F.G = Id and G.F = Id, by exhaustive search. nullopt when the functor
/// search exceeds cap.
std::optional<bool> has_unitary_quasi_inverse(const DaggerStructure& d1, const DaggerStructure& d2,
                                              const FunctorData& f, std::uint64_t cap = kDefaultCap);

struct IndefiniteVerdict {
  bool indefinite = true;
  /// Least (object, self-adjoint automorphism) with no factorization.
  std::optional<std::pair<ObjId, MorId>> counterexample;
};

/// Every self-adjoint automorphism a of x is dag(f) . f for an iso f: x -> y.
IndefiniteVerdict is_indefinite(const DaggerStructure& d);

/// Least unitary x -> y by identifier.
std::optional<MorId> find_unitary(const DaggerStructure& d, ObjId x, ObjId y);
Partition unitary_iso_classes(const DaggerStructure& d);

/// P_c = { dag(a) . a : a automorphism of c }.
PositivityNotion canonical_positivity(const DaggerStructure& d);

}  // namespace fincat
