#include "fincat/herm.hpp"

#include <algorithm>
#include <set>

#include "fincat/kernels.hpp"

namespace fincat {

namespace {

constexpr std::size_t kReportLimit = 20;

std::string point_name(const AntiInvolutiveCategory& a, FixedPoint p) {
  return "(" + a.base.object_name(p.object) + "," + a.base.morphism_name(p.form) + ")";
}

std::vector<MorId> isos_into(const FiniteCategory& c, ObjId target) {
  std::vector<MorId> out;
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (MorId g : c.hom(x, target))
      if (c.is_iso(g)) out.push_back(g);
  return out;
}

}  // namespace

bool is_fixed_point(const AntiInvolutiveCategory& a, ObjId c, MorId h) {
  const auto& base = a.base;
  if (h >= base.morphism_count() || base.dom(h) != c || base.cod(h) != a.d_obj(c)) return false;
  return base.compose(a.d_mor(h), a.eta[c]) == h && base.is_iso(h);
}

std::vector<MorId> fixed_points_on(const AntiInvolutiveCategory& a, ObjId c) {
  std::vector<MorId> out;
  for (MorId h : a.base.hom(c, a.d_obj(c)))
    if (is_fixed_point(a, c, h)) out.push_back(h);
  return out;
}

std::vector<FixedPoint> enumerate_fixed_points(const AntiInvolutiveCategory& a) {
  const auto per_object = kernels::map_indices<std::vector<MorId>>(
      a.base.object_count(), [&](std::size_t c) { return fixed_points_on(a, static_cast<ObjId>(c)); },
      kernels::default_execution());
  std::vector<FixedPoint> out;
  for (ObjId c = 0; c < per_object.size(); ++c)
    for (MorId h : per_object[c]) out.push_back({c, h});
  return out;
}

MorId adjoint_wrt(const AntiInvolutiveCategory& a, FixedPoint h1, FixedPoint h2, MorId f) {
  const auto& c = a.base;
  if (c.dom(f) != h1.object || c.cod(f) != h2.object)
    throw Error(Code::TypeMismatch, "morphism does not run between the fixed points' objects");
  const auto inv = c.inverse(h1.form);
  if (!inv) throw Error(Code::NotIso, "fixed point form is not invertible");
  return c.compose(*inv, c.compose(a.d_mor(f), h2.form));
}

std::optional<ObjId> HermCategory::find(FixedPoint p) const {
  auto it = index.find(p);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

HermCategory herm_on_points(const AntiInvolutiveCategory& a, std::vector<FixedPoint> points) {
  const auto& base = a.base;
  const std::size_t n = points.size();
  std::vector<ObjId> projection(n);
  std::vector<std::string> names(n);
  std::vector<MorId> inverse_forms(n);
  std::map<FixedPoint, ObjId> index;
  for (ObjId i = 0; i < n; ++i) {
    projection[i] = points[i].object;
    names[i] = point_name(a, points[i]);
    inverse_forms[i] = *base.inverse(points[i].form);
    index.emplace(points[i], i);
  }
  FiniteCategory cat = replicate(base, projection, std::move(names));

  // dag(f: (c1,h1) -> (c2,h2)) = h1^{-1} . d(f) . h2
  std::vector<MorId> dag(cat.morphism_count());
  const auto exec = kernels::default_execution();
  kernels::map_indices<char>(
      n,
      [&](std::size_t ii) {
        const auto i = static_cast<ObjId>(ii);
        const ObjId ci = projection[i];
        for (ObjId j = 0; j < n; ++j) {
          const ObjId cj = projection[j];
          const HomRange own = cat.hom(i, j);
          const HomRange back = cat.hom(j, i);
          const HomRange base_back = base.hom(cj, ci);
          const HomRange base_own = base.hom(ci, cj);
          for (std::uint32_t k = 0; k < own.size(); ++k) {
            const MorId t = base.compose(inverse_forms[i], base.compose(a.d_mor(base_own[k]), points[j].form));
            dag[own[k]] = back[base_back.local(t)];
          }
        }
        return char{0};
      },
      exec);
  DaggerStructure dagger{cat, std::move(dag)};
  return HermCategory{a, std::move(points), std::move(cat), std::move(dagger), std::move(index)};
}

HermCategory herm_completion(const AntiInvolutiveCategory& a) { return herm_on_points(a, enumerate_fixed_points(a)); }

FunctorData herm_functor(const InvolutiveFunctor& f, const HermCategory& source, const HermCategory& target) {
  if (!same_category(f.functor.source, source.source.base) || !same_category(f.functor.target, target.source.base))
    throw Error(Code::SourceTargetMismatch, "completions are not over the functor's source and target");
  const auto& F = f.functor;
  const auto& c2 = target.source.base;
  const std::size_t n = source.points.size();
  std::vector<ObjId> objects(n);
  for (ObjId i = 0; i < n; ++i) {
    const FixedPoint p = source.points[i];
    const FixedPoint q{F.on_object(p.object), c2.compose(f.phi[p.object], F.on_morphism(p.form))};
    auto j = target.find(q);
    if (!j) throw Error(Code::PreconditionFailure, "image fixed point is not an object of the target completion");
    objects[i] = *j;
  }
  std::vector<MorId> morphisms(source.category.morphism_count());
  kernels::map_indices<char>(
      n,
      [&](std::size_t ii) {
        const auto i = static_cast<ObjId>(ii);
        for (ObjId j = 0; j < n; ++j)
          for (MorId m : source.category.hom(i, j))
            morphisms[m] = target.lift(F.on_morphism(source.underlying(m)), objects[i], objects[j]);
        return char{0};
      },
      kernels::default_execution());
  return FunctorData{source.category, target.category, std::move(objects), std::move(morphisms)};
}

NatTransData herm_nat_trans(const InvolutiveNatTrans& t, const HermCategory& source, const HermCategory& target) {
  FunctorData hf = herm_functor(t.source, source, target);
  FunctorData hg = herm_functor(t.target, source, target);
  std::vector<MorId> comps(source.points.size());
  for (ObjId i = 0; i < comps.size(); ++i)
    comps[i] = target.lift(t.alpha.components[source.points[i].object], hf.on_object(i), hg.on_object(i));
  return NatTransData{std::move(hf), std::move(hg), std::move(comps)};
}

FixedPoint transfer(const AntiInvolutiveCategory& a, FixedPoint h, MorId g) {
  const auto& c = a.base;
  if (c.cod(g) != h.object) throw Error(Code::TypeMismatch, "transfer morphism must land on the fixed point's object");
  if (!c.is_iso(g)) throw Error(Code::NotIso, c.morphism_name(g) + " is not an isomorphism");
  return FixedPoint{c.dom(g), c.compose(a.d_mor(g), c.compose(h.form, g))};
}

FixedPoint dual_fixed_point(const AntiInvolutiveCategory& a, FixedPoint h) {
  const auto inv = a.base.inverse(a.d_mor(h.form));
  if (!inv) throw Error(Code::NotIso, "d(h) is not invertible");
  return FixedPoint{a.d_obj(h.object), *inv};
}

bool dual_witness_is_unitary(const HermCategory& herm, FixedPoint h) {
  const FixedPoint dual = dual_fixed_point(herm.source, h);
  const auto i = herm.find(h);
  const auto j = herm.find(dual);
  if (!i || !j) return false;
  return is_unitary(herm.dagger, herm.lift(h.form, *i, *j));
}

Partition transfer_partition(const AntiInvolutiveCategory& a, const std::vector<FixedPoint>& points) {
  std::map<FixedPoint, std::uint32_t> index;
  for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
  std::vector<std::vector<MorId>> into(a.base.object_count());
  for (ObjId c = 0; c < into.size(); ++c) into[c] = isos_into(a.base, c);
  const auto orbits = kernels::map_indices<std::vector<std::uint32_t>>(
      points.size(),
      [&](std::size_t i) {
        std::vector<std::uint32_t> orbit;
        for (MorId g : into[points[i].object]) {
          auto it = index.find(transfer(a, points[i], g));
          if (it != index.end()) orbit.push_back(it->second);
        }
        std::sort(orbit.begin(), orbit.end());
        return orbit;
      },
      kernels::default_execution());
  return Partition::of_relation(points.size(), [&](std::uint32_t i, std::uint32_t j) {
    return std::binary_search(orbits[i].begin(), orbits[i].end(), j);
  });
}

Partition unitary_classes_via_transfer(const AntiInvolutiveCategory& a) {
  return transfer_partition(a, enumerate_fixed_points(a));
}

TransferCrossCheck cross_check_transfer_lemma(const AntiInvolutiveCategory& a, std::size_t bound) {
  TransferCrossCheck out;
  const auto points = enumerate_fixed_points(a);
  out.via_transfer = transfer_partition(a, points);
  if (points.size() > bound) return out;
  const HermCategory herm = herm_on_points(a, points);
  out.via_unitaries = unitary_iso_classes(herm.dagger);
  out.checked = true;
  out.agree = out.via_transfer == out.via_unitaries;
  return out;
}

FunctorData unit_U(const DaggerStructure& d, const HermCategory& herm_td) {
  const auto& c = d.base;
  std::vector<ObjId> objects(c.object_count());
  for (ObjId x = 0; x < objects.size(); ++x) {
    auto i = herm_td.find({x, c.identity(x)});
    if (!i) throw Error(Code::PreconditionFailure, "identity is not a fixed point of the completion");
    objects[x] = *i;
  }
  std::vector<MorId> morphisms(c.morphism_count());
  for (MorId m = 0; m < morphisms.size(); ++m) morphisms[m] = herm_td.lift(m, objects[c.dom(m)], objects[c.cod(m)]);
  return FunctorData{c, herm_td.category, std::move(objects), std::move(morphisms)};
}

UnitFunctor unit_U(const DaggerStructure& d) {
  HermCategory herm = herm_completion(T_on_category(d));
  FunctorData u = unit_U(d, herm);
  return UnitFunctor{std::move(herm), std::move(u)};
}

InvolutiveFunctor counit_K(const HermCategory& herm) {
  const std::size_t n = herm.points.size();
  std::vector<ObjId> objects(n);
  std::vector<MorId> phi(n);
  for (ObjId i = 0; i < n; ++i) {
    objects[i] = herm.points[i].object;
    phi[i] = herm.points[i].form;
  }
  std::vector<MorId> morphisms(herm.category.morphism_count());
  for (MorId m = 0; m < morphisms.size(); ++m) morphisms[m] = herm.underlying(m);
  FunctorData k{herm.category, herm.source.base, std::move(objects), std::move(morphisms)};
  return InvolutiveFunctor{T_on_category(herm.dagger), herm.source, std::move(k), std::move(phi)};
}

AntiInvolutiveCategory restrict_exists_fix(const AntiInvolutiveCategory& a) {
  const auto& base = a.base;
  std::vector<ObjId> objects;
  std::vector<ObjId> position(base.object_count(), kNoMorphism);
  for (ObjId x = 0; x < base.object_count(); ++x)
    if (!fixed_points_on(a, x).empty()) {
      position[x] = static_cast<ObjId>(objects.size());
      objects.push_back(x);
    }
  FiniteCategory sub = full_subcategory(base, objects);
  std::vector<ObjId> d_objects(objects.size());
  for (ObjId i = 0; i < objects.size(); ++i) {
    d_objects[i] = position[a.d_obj(objects[i])];
    if (d_objects[i] == kNoMorphism) throw Error(Code::PreconditionFailure, "d leaves the objects with fixed points");
  }
  std::vector<MorId> d_morphisms(sub.morphism_count());
  for (MorId m = 0; m < d_morphisms.size(); ++m) {
    const MorId db = a.d_mor(sub.replica_morphism(m));
    d_morphisms[m] = sub.replica_lift(db, position[base.dom(db)], position[base.cod(db)]);
  }
  std::vector<MorId> eta(objects.size());
  for (ObjId i = 0; i < objects.size(); ++i) eta[i] = sub.replica_lift(a.eta[objects[i]], i, d_objects[d_objects[i]]);
  return value_or_throw(
      validate_anti_involution(sub, contravariant_functor(sub, std::move(d_objects), std::move(d_morphisms)), std::move(eta)));
}

CounitVerdict check_counit(const AntiInvolutiveCategory& a) {
  CounitVerdict v;
  const HermCategory herm = herm_completion(a);
  const InvolutiveFunctor k = counit_K(herm);
  const Report kr = check_involutive_functor(k);
  v.involutive = kr.ok();
  if (!v.involutive) v.detail = kr.summary();
  v.fully_faithful = is_fully_faithful(k.functor, &v.detail);

  const AntiInvolutiveCategory fix = restrict_exists_fix(a);
  std::vector<ObjId> position(a.base.object_count(), kNoMorphism);
  for (ObjId i = 0; i < fix.base.object_count(); ++i) position[fix.base.replica_projection(i)] = i;
  const std::size_t n = herm.points.size();
  FunctorData onto{herm.category, fix.base, std::vector<ObjId>(n), std::vector<MorId>(herm.category.morphism_count())};
  std::vector<MorId> phi(n);
  for (ObjId i = 0; i < n; ++i) {
    const FixedPoint p = herm.points[i];
    onto.object_map[i] = position[p.object];
    phi[i] = fix.base.replica_lift(p.form, position[p.object], position[a.d_obj(p.object)]);
  }
  for (MorId m = 0; m < onto.morphism_map.size(); ++m)
    onto.morphism_map[m] = fix.base.replica_lift(k.functor.on_morphism(m), onto.object_map[herm.category.dom(m)],
                                                 onto.object_map[herm.category.cod(m)]);
  const InvolutiveFunctor k_fix{k.source, fix, onto, std::move(phi)};

  const EquivalenceVerdict eq = is_equivalence(k_fix.functor);
  v.equivalence_onto_fix = eq.ok() && check_involutive_functor(k_fix).ok();
  if (!eq.ok() && v.detail.empty()) v.detail = eq.detail;
  if (v.equivalence_onto_fix) {
    const auto& qi = *eq.quasi_inverse;
    const AdjointEquivalence adj = promote_to_adjoint_equivalence(k_fix.functor, qi.backward, qi.alpha, qi.beta);
    const InvolutiveInverse inv = involutive_inverse_of_equivalence(k_fix, adj);
    Report r = check_involutive_functor(inv.backward);
    r.append(check_involutive_nat_trans(inv.alpha));
    r.append(check_involutive_nat_trans(inv.beta));
    v.involutive_inverse = r.ok();
    if (!r.ok() && v.detail.empty()) v.detail = r.summary();
  }

  std::vector<char> in_image(a.base.object_count(), 0);
  for (ObjId y = 0; y < a.base.object_count(); ++y)
    for (ObjId i = 0; i < n && !in_image[y]; ++i) in_image[y] = find_iso(a.base, k.functor.on_object(i), y).has_value();
  v.image_matches = true;
  for (ObjId y = 0; y < a.base.object_count(); ++y)
    if (static_cast<bool>(in_image[y]) != (position[y] != kNoMorphism)) {
      v.image_matches = false;
      if (v.detail.empty()) v.detail = "essential image differs from the fixed-point subcategory at " + a.base.object_name(y);
    }
  return v;
}

namespace {

TriangleVerdict compare_with_identity(const FunctorData& composite, const FiniteCategory& c) {
  TriangleVerdict v;
  for (ObjId x = 0; x < composite.object_map.size(); ++x)
    if (composite.object_map[x] != x) {
      v.detail = "object " + c.object_name(x) + " is sent to " + c.object_name(composite.object_map[x]);
      return v;
    }
  for (MorId m = 0; m < composite.morphism_map.size(); ++m)
    if (composite.morphism_map[m] != m) {
      v.detail = "morphism " + c.morphism_name(m) + " is sent to " + c.morphism_name(composite.morphism_map[m]);
      return v;
    }
  v.holds = composite == identity_functor(c);
  if (!v.holds) v.detail = "source or target category differs";
  return v;
}

}  // namespace

TriangleVerdict check_triangle_identity(const AntiInvolutiveCategory& a) {
  const HermCategory herm = herm_completion(a);
  const HermCategory outer = herm_completion(T_on_category(herm.dagger));
  const FunctorData u = unit_U(herm.dagger, outer);
  const InvolutiveFunctor k = counit_K(herm);
  const FunctorData hk = herm_functor(k, outer, herm);
  return compare_with_identity(compose_functors(hk, u, false), herm.category);
}

TriangleVerdict check_triangle_identity(const DaggerStructure& d) {
  const AntiInvolutiveCategory td = T_on_category(d);
  const HermCategory herm = herm_completion(td);
  const FunctorData u = unit_U(d, herm);
  const InvolutiveFunctor tu = T_on_functor(d, herm.dagger, u);
  const InvolutiveFunctor k = counit_K(herm);
  const InvolutiveFunctor composite = compose_involutive_functors(k, tu, false);
  TriangleVerdict v = compare_with_identity(composite.functor, d.base);
  if (!v.holds) return v;
  const InvolutiveFunctor id = identity_involutive_functor(td);
  for (ObjId x = 0; x < composite.phi.size(); ++x)
    if (composite.phi[x] != id.phi[x]) {
      v.holds = false;
      v.detail = "datum at " + d.base.object_name(x) + " is " + d.base.morphism_name(composite.phi[x]);
      return v;
    }
  v.holds = composite == id;
  if (!v.holds) v.detail = "anti-involutive source or target differs";
  return v;
}

Report check_positivity(const AntiInvolutiveCategory& a, const PositivityNotion& p) {
  Report report;
  const auto& c = a.base;
  if (p.sets.size() != c.object_count()) {
    report.add(Code::EmptyOnObject, "one set per object expected");
    return report;
  }
  for (ObjId x = 0; x < c.object_count(); ++x) {
    if (p.sets[x].empty()) report.add(Code::EmptyOnObject, "no positive fixed point on " + c.object_name(x));
    for (MorId h : p.sets[x])
      if (!is_fixed_point(a, x, h))
        report.add(Code::NotHermitian, c.morphism_name(h) + " is not a fixed point on " + c.object_name(x));
  }
  if (!report.ok()) return report;
  std::size_t failures = 0;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const auto into = isos_into(c, x);
    for (MorId h : p.sets[x])
      for (MorId g : into) {
        const FixedPoint t = transfer(a, {x, h}, g);
        if (!p.contains(t.object, t.form) && failures++ < kReportLimit)
          report.add(Code::NotTransferClosed, "transfer of " + c.morphism_name(h) + " by " + c.morphism_name(g) +
                                                  " is " + c.morphism_name(t.form) + ", not positive");
      }
  }
  return report;
}

Checked<PositivityNotion> validate_positivity(const AntiInvolutiveCategory& a, std::vector<std::vector<MorId>> sets) {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  PositivityNotion p{std::move(sets)};
  Checked<PositivityNotion> out;
  out.report = check_positivity(a, p);
  if (out.report.ok()) out.value = std::move(p);
  return out;
}

Checked<PositivityNotion> close_under_transfer(const AntiInvolutiveCategory& a, const std::vector<FixedPoint>& seeds) {
  std::vector<std::vector<MorId>> sets(a.base.object_count());
  Report pre;
  for (const FixedPoint s : seeds) {
    if (s.object >= sets.size() || !is_fixed_point(a, s.object, s.form)) {
      pre.add(Code::NotHermitian, "seed is not a fixed point");
      continue;
    }
    for (MorId g : isos_into(a.base, s.object)) {
      const FixedPoint t = transfer(a, s, g);
      sets[t.object].push_back(t.form);
    }
  }
  if (!pre.ok()) return Checked<PositivityNotion>{std::nullopt, pre};
  return validate_positivity(a, std::move(sets));
}

Checked<PositivityNotion> classes_to_positivity(const AntiInvolutiveCategory& a,
                                                const std::vector<std::uint32_t>& selected_classes) {
  const auto points = enumerate_fixed_points(a);
  const Partition classes = transfer_partition(a, points);
  std::vector<std::vector<MorId>> sets(a.base.object_count());
  for (std::uint32_t k : selected_classes) {
    if (k >= classes.size())
      return Checked<PositivityNotion>{std::nullopt, [&] {
                                         Report r;
                                         r.add(Code::NotSurjectiveOntoPi0, "class " + std::to_string(k) + " does not exist");
                                         return r;
                                       }()};
    for (std::uint32_t i : classes.classes[k]) sets[points[i].object].push_back(points[i].form);
  }
  const Partition objects = iso_classes(a.base);
  Report report;
  for (const auto& cls : objects.classes) {
    const bool hit = std::any_of(cls.begin(), cls.end(), [&](std::uint32_t x) { return !sets[x].empty(); });
    if (!hit)
      report.add(Code::NotSurjectiveOntoPi0,
                 "no selected class over the isomorphism class of " + a.base.object_name(cls.front()));
  }
  if (!report.ok()) return Checked<PositivityNotion>{std::nullopt, report};
  return validate_positivity(a, std::move(sets));
}

PositivityNotion all_fixed_points(const AntiInvolutiveCategory& a) {
  PositivityNotion p;
  p.sets.resize(a.base.object_count());
  for (ObjId x = 0; x < p.sets.size(); ++x) p.sets[x] = fixed_points_on(a, x);
  return p;
}

HermCategory herm_P(const AntiInvolutiveCategory& a, const PositivityNotion& p) {
  std::vector<FixedPoint> points;
  for (const FixedPoint q : enumerate_fixed_points(a))
    if (p.contains(q.object, q.form)) points.push_back(q);
  return herm_on_points(a, std::move(points));
}

PositivityVerdict preserves_positivity(const InvolutiveFunctor& f, const PositivityNotion& p, const PositivityNotion& q) {
  const auto& F = f.functor;
  const auto& c2 = f.target.base;
  auto image = [&](ObjId c, MorId h) {
    return FixedPoint{F.on_object(c), c2.compose(f.phi[c], F.on_morphism(h))};
  };
  PositivityVerdict v;
  v.elementwise = true;
  for (ObjId c = 0; c < p.sets.size(); ++c)
    for (MorId h : p.sets[c]) {
      const FixedPoint t = image(c, h);
      if (!q.contains(t.object, t.form)) v.elementwise = false;
    }

  const auto points = enumerate_fixed_points(f.target);
  const Partition classes = transfer_partition(f.target, points);
  std::map<FixedPoint, std::uint32_t> index;
  for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
  std::set<std::uint32_t> q_classes;
  for (ObjId c = 0; c < q.sets.size(); ++c)
    for (MorId h : q.sets[c]) q_classes.insert(classes.class_of[index.at({c, h})]);
  v.on_classes = true;
  for (ObjId c = 0; c < p.sets.size(); ++c)
    for (MorId h : p.sets[c])
      if (!q_classes.count(classes.class_of[index.at(image(c, h))])) v.on_classes = false;
  return v;
}

BiequivalenceVerdict check_Tp_biequivalence(const DaggerStructure& d) {
  BiequivalenceVerdict v;
  const auto& c = d.base;
  const AntiInvolutiveCategory td = T_on_category(d);
  const auto checked = validate_positivity(td, canonical_positivity(d).sets);
  if (!checked.ok()) {
    v.detail = checked.report.summary();
    return v;
  }
  const PositivityNotion& p = *checked;
  const HermCategory hp = herm_P(td, p);
  v.herm_p_objects = hp.points.size();

  const FunctorData u = unit_U(d, hp);
  const auto ue = is_dagger_equivalence(d, hp.dagger, u);
  v.unit_equivalence = ue.ok();
  if (!ue.ok()) v.detail = ue.detail;

  v.unit_witnesses = true;
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (MorId h : p.sets[x]) {
      bool found = false;
      for (MorId a : c.hom(x, x))
        if (c.is_iso(a) && transfer(td, {x, c.identity(x)}, a).form == h) {
          found = true;
          break;
        }
      if (!found) v.unit_witnesses = false;
    }

  const InvolutiveFunctor k = counit_K(hp);
  const auto ke = is_equivalence(k.functor);
  v.counit_equivalence = ke.ok() && check_involutive_functor(k).ok();
  if (!ke.ok() && v.detail.empty()) v.detail = ke.detail;

  const PositivityNotion q = canonical_positivity(hp.dagger);
  const PositivityVerdict pv = preserves_positivity(k, q, p);
  v.counit_preserves = pv.elementwise && pv.agree();

  // every class of P contains the image of some positive point of T(Herm_P)
  const auto points = enumerate_fixed_points(td);
  const Partition classes = transfer_partition(td, points);
  std::map<FixedPoint, std::uint32_t> index;
  for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
  std::set<std::uint32_t> hit;
  for (ObjId i = 0; i < q.sets.size(); ++i)
    for (MorId h : q.sets[i]) {
      const FixedPoint img{k.functor.on_object(i), c.compose(k.phi[i], k.functor.on_morphism(h))};
      hit.insert(classes.class_of[index.at(img)]);
    }
  v.counit_surjective_on_classes = true;
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (MorId h : p.sets[x])
      if (!hit.count(classes.class_of[index.at({x, h})])) v.counit_surjective_on_classes = false;
  return v;
}

CorollaryReport dagger_functors_vs_fixed_points(const DaggerStructure& d1, const DaggerStructure& d2, std::uint64_t cap) {
  CorollaryReport out;
  const AntiInvolutiveCategory a1 = T_on_category(d1);
  const AntiInvolutiveCategory a2 = T_on_category(d2);
  const FunctorCategory fc = functor_category_involution(a1, a2, cap);
  const auto& fun = fc.category.base;
  out.functors = fc.functors.size();
  out.transformations = fun.morphism_count();
  out.fixed_points = enumerate_fixed_points(fc.category);
  std::map<FixedPoint, std::size_t> index;
  for (std::size_t i = 0; i < out.fixed_points.size(); ++i) index.emplace(out.fixed_points[i], i);

  std::vector<InvolutiveFunctor> structures;
  for (const FixedPoint p : out.fixed_points) structures.push_back(involutive_structure_of(fc, p.object, p.form));

  // dagger functors embed as (F, identity datum), i.e. psi = id_F
  out.fully_faithful = true;
  std::vector<ObjId> dagger_functors;
  for (ObjId i = 0; i < fc.functors.size(); ++i) {
    if (!is_dagger_functor(d1, d2, fc.functors[i])) continue;
    dagger_functors.push_back(i);
    auto it = index.find({i, fun.identity(i)});
    if (it == index.end() || !(structures[it->second] == T_on_functor(d1, d2, fc.functors[i]))) {
      out.fully_faithful = false;
      continue;
    }
    out.dagger_functor_points.push_back(it->second);
  }
  for (ObjId i : dagger_functors)
    for (ObjId j : dagger_functors)
      for (MorId t : fun.hom(i, j)) {
        const auto& alpha = fc.transformations[t];
        const InvolutiveNatTrans candidate{T_on_functor(d1, d2, fc.functors[i]), T_on_functor(d1, d2, fc.functors[j]),
                                           alpha};
        if (is_isometric_nat_trans(d1, d2, alpha) != check_involutive_nat_trans(candidate).ok())
          out.fully_faithful = false;
      }

  // isomorphisms of the fixed-point category are invertible involutive transformations
  auto isomorphic = [&](std::size_t p, std::size_t q) {
    const ObjId i = out.fixed_points[p].object, j = out.fixed_points[q].object;
    for (MorId t : fun.hom(i, j)) {
      if (!fun.is_iso(t)) continue;
      if (check_involutive_nat_trans({structures[p], structures[q], fc.transformations[t]}).ok()) return true;
    }
    return false;
  };
  for (std::size_t p = 0; p < out.fixed_points.size(); ++p) {
    const bool in_image = std::any_of(out.dagger_functor_points.begin(), out.dagger_functor_points.end(),
                                      [&](std::size_t e) { return isomorphic(e, p); });
    if (in_image) out.essential_image.push_back(p);
  }

  const PositivityNotion p1 = canonical_positivity(d1);
  const PositivityNotion p2 = canonical_positivity(d2);
  for (std::size_t p = 0; p < out.fixed_points.size(); ++p)
    if (preserves_positivity(structures[p], p1, p2).elementwise) out.positivity_preserving.push_back(p);
  out.image_matches = out.essential_image == out.positivity_preserving;
  return out;
}

}  // namespace fincat
