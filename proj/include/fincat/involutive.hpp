#pragma once

#include <vector>

#include "fincat/category.hpp"
#include "fincat/dagger.hpp"
#include "fincat/functor.hpp"

namespace fincat {

/// (C, d, eta): d is a functor opposite(C) -> C sharing morphism identifiers
/// with C, and eta_c: c -> d(d(c)).
struct AntiInvolutiveCategory {
  FiniteCategory base;
  FunctorData d;
  std::vector<MorId> eta;

  ObjId d_obj(ObjId x) const { return d.on_object(x); }
  MorId d_mor(MorId m) const { return d.on_morphism(m); }

  friend bool operator==(const AntiInvolutiveCategory& a, const AntiInvolutiveCategory& b) {
    return a.eta == b.eta && a.d == b.d && same_category(a.base, b.base);
  }
};

Report check_anti_involution(const FiniteCategory& c, const FunctorData& d, const std::vector<MorId>& eta);
Checked<AntiInvolutiveCategory> validate_anti_involution(FiniteCategory c, FunctorData d, std::vector<MorId> eta);
/// Builds d out of opposite(c) from plain maps.
FunctorData contravariant_functor(const FiniteCategory& c, std::vector<ObjId> object_map,
                                  std::vector<MorId> morphism_map);

/// d = dag, eta = identities.
AntiInvolutiveCategory T_on_category(const DaggerStructure& d);

/// (F, phi) with phi_x: F(d1 x) -> d2(F x).
struct InvolutiveFunctor {
  AntiInvolutiveCategory source;
  AntiInvolutiveCategory target;
  FunctorData functor;
  std::vector<MorId> phi;

  friend bool operator==(const InvolutiveFunctor& a, const InvolutiveFunctor& b) {
    return a.phi == b.phi && a.functor == b.functor && a.source == b.source && a.target == b.target;
  }
};

/// Naturality d2(F f) . phi_y = phi_x . F(d1 f), invertibility, and the
/// eta square phi_{d1 x} . F(eta1_x) = d2(phi_x) . eta2_{F x}.
Report check_involutive_functor(const InvolutiveFunctor& f);
Checked<InvolutiveFunctor> validate_involutive_functor(InvolutiveFunctor f);

InvolutiveFunctor identity_involutive_functor(const AntiInvolutiveCategory& a);
/// Datum psi_{F x} . G(phi_x). Throws SourceTargetMismatch.
InvolutiveFunctor compose_involutive_functors(const InvolutiveFunctor& g, const InvolutiveFunctor& f,
                                              bool validate = true);

struct InvolutiveNatTrans {
  InvolutiveFunctor source;
  InvolutiveFunctor target;
  NatTransData alpha;
};

/// phi_x = d2(alpha_x) . psi_x . alpha_{d1 x} for every object x.
Report check_involutive_nat_trans(const InvolutiveNatTrans& t);
InvolutiveNatTrans compose_involutive_nat_trans(const InvolutiveNatTrans& beta, const InvolutiveNatTrans& alpha);

/// (F, identities). Throws NotADaggerFunctor.
InvolutiveFunctor T_on_functor(const DaggerStructure& d1, const DaggerStructure& d2, const FunctorData& f);
/// Throws NotIsometric.
InvolutiveNatTrans T_on_nat_trans(const DaggerStructure& d1, const DaggerStructure& d2, const NatTransData& alpha);

struct InvolutiveInverse {
  InvolutiveFunctor backward;
  InvolutiveNatTrans alpha;  // F.G => Id
  InvolutiveNatTrans beta;   // G.F => Id
};

/// psi_y = beta_{d G y} . G(phi_{G y}^{-1}) . G(d(alpha_y)). Throws
/// PreconditionFailure unless adj is an adjoint equivalence on F.
InvolutiveInverse involutive_inverse_of_equivalence(const InvolutiveFunctor& f, const AdjointEquivalence& adj);

/// Fun(C, D) with d F = d_D . F . d_C, (d alpha)_x = d_D(alpha_{d_C x}) and
/// (eta_F)_x = (eta_D)_{F d_C d_C x} . F((eta_C)_x).
struct FunctorCategory {
  AntiInvolutiveCategory category;
  std::vector<FunctorData> functors;          // object identifiers
  std::vector<NatTransData> transformations;  // morphism identifiers
  AntiInvolutiveCategory source;
  AntiInvolutiveCategory target;
};

/// Throws SearchSpaceExceeded.
FunctorCategory functor_category_involution(const AntiInvolutiveCategory& c, const AntiInvolutiveCategory& d,
                                            std::uint64_t cap = kDefaultCap);

/// Fixed point psi: F -> dF read as phi_x = d_D(F(eta_C x)) . psi_{d_C x}.
InvolutiveFunctor involutive_structure_of(const FunctorCategory& fc, ObjId functor, MorId psi);
/// Every valid involutive structure on `functor`, by direct search.
std::vector<InvolutiveFunctor> enumerate_involutive_structures(const AntiInvolutiveCategory& c,
                                                               const AntiInvolutiveCategory& d,
                                                               const FunctorData& functor);

}  // namespace fincat
