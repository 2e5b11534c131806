#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// Default bound on enumeration search spaces.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

struct FunctorData {
  FiniteCategory source;
  FiniteCategory target;
  std::vector<ObjId> object_map;
  std::vector<MorId> morphism_map;

  ObjId on_object(ObjId x) const { return object_map[x]; }
  MorId on_morphism(MorId m) const { return morphism_map[m]; }

  /// Strict equality: same categories and identical maps.
  friend bool operator==(const FunctorData& a, const FunctorData& b);
};

struct NatTransData {
  FunctorData source_functor;
  FunctorData target_functor;
  std::vector<MorId> components;  // component at x: F x -> G x

  friend bool operator==(const NatTransData& a, const NatTransData& b);
};

Report check_functor(const FunctorData& f);
Checked<FunctorData> validate_functor(FunctorData f);
Report check_nat_trans(const NatTransData& alpha);
Checked<NatTransData> validate_nat_trans(NatTransData alpha);

FunctorData identity_functor(const FiniteCategory& c);
/// Unique functor into a one-object, one-morphism category.
FunctorData terminal_functor(const FiniteCategory& c, const FiniteCategory& one);
/// G after F. Throws SourceTargetMismatch. The composite of valid functors is
/// valid; `validate` re-checks it anyway.
FunctorData compose_functors(const FunctorData& g, const FunctorData& f, bool validate = true);

NatTransData identity_nat_trans(const FunctorData& f);
/// beta after alpha (vertical).
NatTransData compose_vertical(const NatTransData& beta, const NatTransData& alpha);
/// Componentwise inverse; nullopt unless every component is an isomorphism.
std::optional<NatTransData> invert_nat_trans(const NatTransData& alpha);
bool is_natural_iso(const NatTransData& alpha);
/// alpha whiskered by H on the left: (H alpha)_x = H(alpha_x).
NatTransData whisker_left(const FunctorData& h, const NatTransData& alpha);
/// alpha whiskered by K on the right: (alpha K)_x = alpha_{K x}.
NatTransData whisker_right(const NatTransData& alpha, const FunctorData& k);

/// |obj D|^|obj C| * max |Hom_D|, saturating.
std::uint64_t functor_search_bound(const FiniteCategory& c, const FiniteCategory& d);

/// Every functor C -> D in lexicographic order of (object_map, morphism_map).
/// Throws SearchSpaceExceeded when functor_search_bound exceeds cap.
std::vector<FunctorData> enumerate_functors(const FiniteCategory& c, const FiniteCategory& d,
                                            std::uint64_t cap = kDefaultCap);

/// Every natural transformation F => G in lexicographic order of components.
std::vector<NatTransData> enumerate_nat_transformations(const FunctorData& f, const FunctorData& g);

struct QuasiInverse {
  FunctorData backward;
  NatTransData alpha;  // forward . backward => Id
  NatTransData beta;   // backward . forward => Id
};

struct EquivalenceVerdict {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  std::optional<QuasiInverse> quasi_inverse;
  std::string detail;  // first failure, empty on success

  bool ok() const { return fully_faithful && essentially_surjective; }
};

EquivalenceVerdict is_equivalence(const FunctorData& f);
/// Every hom-map is a bijection. `detail` receives the first failure.
bool is_fully_faithful(const FunctorData& f, std::string* detail = nullptr);

struct AdjointEquivalence {
  FunctorData forward;
  FunctorData backward;
  NatTransData alpha;  // forward . backward => Id
  NatTransData beta;   // backward . forward => Id
};

/// F(beta_c) = alpha_{Fc} and G(alpha_d) = beta_{Gd}; itemized failures.
Report check_snake_identities(const AdjointEquivalence& adj);

/// Keeps beta and replaces alpha by alpha_d . F(beta_{Gd}) . alpha_{FGd}^{-1}.
/// Throws NotAnEquivalence when the inputs are not componentwise isos.
AdjointEquivalence promote_to_adjoint_equivalence(const FunctorData& f, const FunctorData& g,
                                                  const NatTransData& alpha, const NatTransData& beta);

/// A partition of 0..n-1 into classes listed by least element.
struct Partition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<std::uint32_t>> classes;

  std::size_t size() const { return classes.size(); }
  std::uint32_t representative(std::uint32_t i) const { return classes[class_of[i]].front(); }
  friend bool operator==(const Partition&, const Partition&) = default;

  /// Classes of an equivalence relation given as a predicate on pairs (i < j).
  template <class Related>
  static Partition of_relation(std::size_t n, Related&& related) {
    Partition p;
    constexpr std::uint32_t kUnassigned = ~0u;
    p.class_of.assign(n, kUnassigned);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (p.class_of[i] != kUnassigned) continue;
      const auto id = static_cast<std::uint32_t>(p.classes.size());
      p.classes.push_back({i});
      p.class_of[i] = id;
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (p.class_of[j] == kUnassigned && related(i, j)) {
          p.class_of[j] = id;
          p.classes.back().push_back(j);
        }
    }
    return p;
  }
};

/// Least isomorphism x -> y by identifier, if any.
std::optional<MorId> find_iso(const FiniteCategory& c, ObjId x, ObjId y);
Partition iso_classes(const FiniteCategory& c);

}  // namespace fincat
