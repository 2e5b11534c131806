#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fincat/dagger.hpp"
#include "fincat/functor.hpp"
#include "fincat/involutive.hpp"
#include "fincat/positivity.hpp"

namespace fincat {

/// An isomorphism form: object -> d(object) with d(form) . eta = form.
struct FixedPoint {
  ObjId object;
  MorId form;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

bool is_fixed_point(const AntiInvolutiveCategory& a, ObjId c, MorId h);
/// All fixed points, ordered by (object, form).
std::vector<FixedPoint> enumerate_fixed_points(const AntiInvolutiveCategory& a);
std::vector<MorId> fixed_points_on(const AntiInvolutiveCategory& a, ObjId c);

/// h1^{-1} . d(f) . h2 : c2 -> c1 for f: c1 -> c2. Throws TypeMismatch.
MorId adjoint_wrt(const AntiInvolutiveCategory& a, FixedPoint h1, FixedPoint h2, MorId f);

/// A category whose objects are fixed points of `source` and whose hom-sets
/// are copies of the source hom-sets, with the induced dagger.
struct HermCategory {
  AntiInvolutiveCategory source;
  std::vector<FixedPoint> points;
  FiniteCategory category;
  DaggerStructure dagger;
  std::map<FixedPoint, ObjId> index;

  std::optional<ObjId> find(FixedPoint p) const;
  /// The morphism over base morphism f between two objects of this category.
  MorId lift(MorId f, ObjId from, ObjId to) const { return category.replica_lift(f, from, to); }
  MorId underlying(MorId m) const { return category.replica_morphism(m); }
};

/// All fixed points; the dagger is computed, then checked by the caller.
HermCategory herm_completion(const AntiInvolutiveCategory& a);
/// Same construction on a chosen list of fixed points.
HermCategory herm_on_points(const AntiInvolutiveCategory& a, std::vector<FixedPoint> points);

/// Herm F(c, h) = (F c, phi_c . F(h)). Both completions must be over the
/// functor's source and target.
FunctorData herm_functor(const InvolutiveFunctor& f, const HermCategory& source, const HermCategory& target);
NatTransData herm_nat_trans(const InvolutiveNatTrans& t, const HermCategory& source, const HermCategory& target);

/// d(g) . h . g for an iso g: c' -> c. Throws NotIso.
FixedPoint transfer(const AntiInvolutiveCategory& a, FixedPoint h, MorId g);
/// (d h)^{-1} on d(c).
FixedPoint dual_fixed_point(const AntiInvolutiveCategory& a, FixedPoint h);
/// h: (c, h) -> (d c, (d h)^{-1}) is unitary in the completion.
bool dual_witness_is_unitary(const HermCategory& herm, FixedPoint h);

/// Transfer orbits of all fixed points; element i is enumerate_fixed_points(a)[i].
Partition unitary_classes_via_transfer(const AntiInvolutiveCategory& a);
/// Orbits of the listed points under transfer (each list closed under transfer).
Partition transfer_partition(const AntiInvolutiveCategory& a, const std::vector<FixedPoint>& points);

struct TransferCrossCheck {
  bool checked = false;  // false when above the size bound
  bool agree = false;
  Partition via_transfer;
  Partition via_unitaries;
};

inline constexpr std::size_t kDefaultOracleBound = 60;
/// Transfer orbits against brute-force unitary classes of the completion.
TransferCrossCheck cross_check_transfer_lemma(const AntiInvolutiveCategory& a,
                                              std::size_t bound = kDefaultOracleBound);

struct UnitFunctor {
  HermCategory herm;  // Herm(T D)
  FunctorData functor;
};

/// x -> (x, id) into the completion of T(D).
UnitFunctor unit_U(const DaggerStructure& d);
FunctorData unit_U(const DaggerStructure& d, const HermCategory& herm_td);

/// T(herm) -> herm.source with (c, h) -> c and phi_{(c,h)} = h. Works for any
/// list of points, including Herm_P.
InvolutiveFunctor counit_K(const HermCategory& herm);

struct CounitVerdict {
  bool involutive = false;
  bool fully_faithful = false;
  bool equivalence_onto_fix = false;
  bool involutive_inverse = false;
  bool image_matches = false;
  std::string detail;
  bool ok() const { return involutive && fully_faithful && equivalence_onto_fix && involutive_inverse && image_matches; }
};

/// Full subcategory on objects that carry a fixed point, with d and eta
/// restricted.
AntiInvolutiveCategory restrict_exists_fix(const AntiInvolutiveCategory& a);
/// K_A is involutive, fully faithful, and an involutive equivalence onto
/// restrict_exists_fix(A) whose object set is the essential image.
CounitVerdict check_counit(const AntiInvolutiveCategory& a);

struct TriangleVerdict {
  bool holds = false;
  std::string detail;  // first mismatch
};

/// Herm(K_A) . U_{Herm A} = Id, compared as FunctorData.
TriangleVerdict check_triangle_identity(const AntiInvolutiveCategory& a);
/// K_{T D} . T(U_D) = Id with identity datum, compared field by field.
TriangleVerdict check_triangle_identity(const DaggerStructure& d);

Report check_positivity(const AntiInvolutiveCategory& a, const PositivityNotion& p);
Checked<PositivityNotion> validate_positivity(const AntiInvolutiveCategory& a, std::vector<std::vector<MorId>> sets);
/// Transfer closure of the seeds; rejected when an object stays empty.
Checked<PositivityNotion> close_under_transfer(const AntiInvolutiveCategory& a, const std::vector<FixedPoint>& seeds);
/// Union of the selected classes of unitary_classes_via_transfer(a); the
/// selection must reach every isomorphism class of the base.
Checked<PositivityNotion> classes_to_positivity(const AntiInvolutiveCategory& a,
                                                const std::vector<std::uint32_t>& selected_classes);
/// Every fixed point.
PositivityNotion all_fixed_points(const AntiInvolutiveCategory& a);

HermCategory herm_P(const AntiInvolutiveCategory& a, const PositivityNotion& p);

struct PositivityVerdict {
  bool elementwise = false;  // phi_c . F(h) in Q for every h in P
  bool on_classes = false;   // [Herm F(P)] inside [Q] in the unitary classes
  bool agree() const { return elementwise == on_classes; }
};

PositivityVerdict preserves_positivity(const InvolutiveFunctor& f, const PositivityNotion& p,
                                       const PositivityNotion& q);

struct BiequivalenceVerdict {
  bool unit_equivalence = false;
  bool unit_witnesses = false;  // each positive h is the transfer of id along some a
  bool counit_equivalence = false;
  bool counit_preserves = false;
  bool counit_surjective_on_classes = false;
  std::size_t herm_p_objects = 0;
  std::string detail;
  bool ok() const {
    return unit_equivalence && unit_witnesses && counit_equivalence && counit_preserves && counit_surjective_on_classes;
  }
};

/// Unit and counit checks for T_P with canonical positivity on D.
BiequivalenceVerdict check_Tp_biequivalence(const DaggerStructure& d);

struct CorollaryReport {
  std::size_t functors = 0;
  std::size_t transformations = 0;
  std::vector<FixedPoint> fixed_points;   // in Fun(D1, D2)
  std::vector<std::size_t> dagger_functor_points;  // indices into fixed_points
  std::vector<std::size_t> essential_image;
  std::vector<std::size_t> positivity_preserving;
  bool fully_faithful = false;
  bool image_matches = false;
  bool ok() const { return fully_faithful && image_matches; }
};

/// Dagger functors D1 -> D2 inside the fixed points of Fun(T D1, T D2).
/// Throws SearchSpaceExceeded.
CorollaryReport dagger_functors_vs_fixed_points(const DaggerStructure& d1, const DaggerStructure& d2,
                                                std::uint64_t cap = kDefaultCap);

}  // namespace fincat
