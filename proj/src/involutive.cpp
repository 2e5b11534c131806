#include "fincat/involutive.hpp"

#include <algorithm>
#include <map>

namespace fincat {

namespace {

constexpr std::size_t kReportLimit = 20;

}  // namespace

FunctorData contravariant_functor(const FiniteCategory& c, std::vector<ObjId> object_map,
                                  std::vector<MorId> morphism_map) {
  return FunctorData{opposite(c), c, std::move(object_map), std::move(morphism_map)};
}

Report check_anti_involution(const FiniteCategory& c, const FunctorData& d, const std::vector<MorId>& eta) {
  Report report;
  if (!same_category(d.target, c) || !is_opposite_of(d.source, c)) {
    report.add(Code::NotAFunctor, "d must be a functor from the opposite category to the base");
    return report;
  }
  report.append(check_functor(d));
  if (!report.ok()) return report;
  const std::size_t n = c.object_count();
  if (eta.size() != n) {
    report.add(Code::EtaNotNatural, "eta needs one component per object");
    return report;
  }
  for (ObjId x = 0; x < n; ++x) {
    const MorId e = eta[x];
    if (e >= c.morphism_count() || c.dom(e) != x || c.cod(e) != d.on_object(d.on_object(x)))
      report.add(Code::EtaNotNatural, "eta at " + c.object_name(x) + " is not a morphism x -> d(d(x))");
  }
  if (!report.ok()) return report;

  std::size_t failures = 0;
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const MorId ddf = d.on_morphism(d.on_morphism(f));
    if (c.compose(ddf, eta[c.dom(f)]) != c.compose(eta[c.cod(f)], f) && failures++ < kReportLimit)
      report.add(Code::EtaNotNatural, "naturality of eta fails at " + c.morphism_name(f));
  }
  for (ObjId x = 0; x < n; ++x)
    if (!c.is_iso(eta[x])) report.add(Code::EtaNotIso, "eta at " + c.object_name(x) + " is not invertible");
  for (ObjId x = 0; x < n; ++x) {
    const ObjId dx = d.on_object(x);
    const MorId a = eta[dx];               // d x -> d d d x
    const MorId b = d.on_morphism(eta[x]);  // d d d x -> d x
    if (c.compose(b, a) != c.identity(dx) || c.compose(a, b) != c.identity(c.cod(a)))
      report.add(Code::CoherenceFailure,
                 "eta at d(" + c.object_name(x) + ") and d(eta at " + c.object_name(x) + ") are not mutually inverse");
  }
  return report;
}

Checked<AntiInvolutiveCategory> validate_anti_involution(FiniteCategory c, FunctorData d, std::vector<MorId> eta) {
  Checked<AntiInvolutiveCategory> out;
  out.report = check_anti_involution(c, d, eta);
  if (out.report.ok()) out.value = AntiInvolutiveCategory{std::move(c), std::move(d), std::move(eta)};
  return out;
}

AntiInvolutiveCategory T_on_category(const DaggerStructure& dag) {
  const auto& c = dag.base;
  std::vector<ObjId> objects(c.object_count());
  std::vector<MorId> eta(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    objects[x] = x;
    eta[x] = c.identity(x);
  }
  return AntiInvolutiveCategory{c, contravariant_functor(c, std::move(objects), dag.dag), std::move(eta)};
}

Report check_involutive_functor(const InvolutiveFunctor& inv) {
  Report report;
  const auto& F = inv.functor;
  const auto& a = inv.source;
  const auto& b = inv.target;
  if (!same_category(F.source, a.base) || !same_category(F.target, b.base)) {
    report.add(Code::SourceTargetMismatch, "functor does not run between the anti-involutive bases");
    return report;
  }
  report.append(check_functor(F));
  if (!report.ok()) return report;
  const auto& c1 = a.base;
  const auto& c2 = b.base;
  if (inv.phi.size() != c1.object_count()) {
    report.add(Code::NotNatural, "phi needs one component per object");
    return report;
  }
  for (ObjId x = 0; x < c1.object_count(); ++x) {
    const MorId p = inv.phi[x];
    if (p >= c2.morphism_count() || c2.dom(p) != F.on_object(a.d_obj(x)) || c2.cod(p) != b.d_obj(F.on_object(x)))
      report.add(Code::NotNatural, "phi at " + c1.object_name(x) + " is not a morphism F(d x) -> d(F x)");
  }
  if (!report.ok()) return report;
  for (ObjId x = 0; x < c1.object_count(); ++x)
    if (!c2.is_iso(inv.phi[x])) report.add(Code::NotIso, "phi at " + c1.object_name(x) + " is not invertible");

  std::size_t failures = 0;
  for (MorId f = 0; f < c1.morphism_count(); ++f) {
    const ObjId x = c1.dom(f), y = c1.cod(f);
    const MorId lhs = c2.compose(b.d_mor(F.on_morphism(f)), inv.phi[y]);
    const MorId rhs = c2.compose(inv.phi[x], F.on_morphism(a.d_mor(f)));
    if (lhs != rhs && failures++ < kReportLimit)
      report.add(Code::NotNatural, "phi is not natural at " + c1.morphism_name(f));
  }
  for (ObjId x = 0; x < c1.object_count(); ++x) {
    const MorId lhs = c2.compose(inv.phi[a.d_obj(x)], F.on_morphism(a.eta[x]));
    const MorId rhs = c2.compose(b.d_mor(inv.phi[x]), b.eta[F.on_object(x)]);
    if (lhs != rhs)
      report.add(Code::CoherenceSquareFailure, "eta square fails at " + c1.object_name(x) + ": " +
                                                   c2.morphism_name(lhs) + " vs " + c2.morphism_name(rhs));
  }
  return report;
}

Checked<InvolutiveFunctor> validate_involutive_functor(InvolutiveFunctor f) {
  Checked<InvolutiveFunctor> out;
  out.report = check_involutive_functor(f);
  if (out.report.ok()) out.value = std::move(f);
  return out;
}

InvolutiveFunctor identity_involutive_functor(const AntiInvolutiveCategory& a) {
  std::vector<MorId> phi(a.base.object_count());
  for (ObjId x = 0; x < phi.size(); ++x) phi[x] = a.base.identity(a.d_obj(x));
  return InvolutiveFunctor{a, a, identity_functor(a.base), std::move(phi)};
}

InvolutiveFunctor compose_involutive_functors(const InvolutiveFunctor& g, const InvolutiveFunctor& f, bool validate) {
  if (!(f.target == g.source))
    throw Error(Code::SourceTargetMismatch, "target of the first involutive functor is not the source of the second");
  InvolutiveFunctor out{f.source, g.target, compose_functors(g.functor, f.functor, validate),
                        std::vector<MorId>(f.phi.size())};
  const auto& c3 = g.target.base;
  for (ObjId x = 0; x < f.phi.size(); ++x)
    out.phi[x] = c3.compose(g.phi[f.functor.on_object(x)], g.functor.on_morphism(f.phi[x]));
  if (validate) return value_or_throw(validate_involutive_functor(std::move(out)));
  return out;
}

Report check_involutive_nat_trans(const InvolutiveNatTrans& t) {
  Report report;
  if (!(t.alpha.source_functor == t.source.functor) || !(t.alpha.target_functor == t.target.functor) ||
      !(t.source.source == t.target.source) || !(t.source.target == t.target.target)) {
    report.add(Code::SourceTargetMismatch, "transformation does not run between the given involutive functors");
    return report;
  }
  report.append(check_nat_trans(t.alpha));
  if (!report.ok()) return report;
  const auto& a = t.source.source;
  const auto& b = t.source.target;
  const auto& c2 = b.base;
  for (ObjId x = 0; x < a.base.object_count(); ++x) {
    const MorId rhs = c2.compose(b.d_mor(t.alpha.components[x]),
                                 c2.compose(t.target.phi[x], t.alpha.components[a.d_obj(x)]));
    if (rhs != t.source.phi[x])
      report.add(Code::CoherenceSquareFailure, "involutive square fails at " + a.base.object_name(x) + ": " +
                                                   c2.morphism_name(t.source.phi[x]) + " vs " + c2.morphism_name(rhs));
  }
  return report;
}

InvolutiveNatTrans compose_involutive_nat_trans(const InvolutiveNatTrans& beta, const InvolutiveNatTrans& alpha) {
  if (!(alpha.target == beta.source)) throw Error(Code::SourceTargetMismatch, "involutive transformations do not compose");
  return InvolutiveNatTrans{alpha.source, beta.target, compose_vertical(beta.alpha, alpha.alpha)};
}

InvolutiveFunctor T_on_functor(const DaggerStructure& d1, const DaggerStructure& d2, const FunctorData& f) {
  if (!is_dagger_functor(d1, d2, f)) throw Error(Code::NotADaggerFunctor, "functor does not commute with the daggers");
  std::vector<MorId> phi(d1.base.object_count());
  for (ObjId x = 0; x < phi.size(); ++x) phi[x] = d2.base.identity(f.on_object(x));
  return InvolutiveFunctor{T_on_category(d1), T_on_category(d2), f, std::move(phi)};
}

InvolutiveNatTrans T_on_nat_trans(const DaggerStructure& d1, const DaggerStructure& d2, const NatTransData& alpha) {
  if (!is_isometric_nat_trans(d1, d2, alpha)) throw Error(Code::NotIsometric, "a component is not an isometry");
  return InvolutiveNatTrans{T_on_functor(d1, d2, alpha.source_functor), T_on_functor(d1, d2, alpha.target_functor),
                            alpha};
}

InvolutiveInverse involutive_inverse_of_equivalence(const InvolutiveFunctor& f, const AdjointEquivalence& adj) {
  if (!(adj.forward == f.functor))
    throw Error(Code::PreconditionFailure, "adjoint equivalence does not wrap the involutive functor");
  if (!check_snake_identities(adj).ok() || !is_natural_iso(adj.alpha) || !is_natural_iso(adj.beta))
    throw Error(Code::PreconditionFailure, "data is not an adjoint equivalence");
  const auto& G = adj.backward;
  const auto& a = f.source;  // C
  const auto& b = f.target;  // D
  const auto& c = a.base;
  std::vector<MorId> psi(b.base.object_count());
  for (ObjId y = 0; y < psi.size(); ++y) {
    const ObjId gy = G.on_object(y);
    const MorId phi_inv = *b.base.inverse(f.phi[gy]);
    const MorId first = G.on_morphism(b.d_mor(adj.alpha.components[y]));
    psi[y] = c.compose(adj.beta.components[a.d_obj(gy)], c.compose(G.on_morphism(phi_inv), first));
  }
  InvolutiveFunctor g{b, a, G, std::move(psi)};
  InvolutiveNatTrans alpha{compose_involutive_functors(f, g, false), identity_involutive_functor(b), adj.alpha};
  InvolutiveNatTrans beta{compose_involutive_functors(g, f, false), identity_involutive_functor(a), adj.beta};
  return InvolutiveInverse{std::move(g), std::move(alpha), std::move(beta)};
}

FunctorCategory functor_category_involution(const AntiInvolutiveCategory& ci, const AntiInvolutiveCategory& di,
                                            std::uint64_t cap) {
  const auto& c = ci.base;
  const auto& d = di.base;
  FunctorCategory fc;
  fc.source = ci;
  fc.target = di;
  fc.functors = enumerate_functors(c, d, cap);
  const std::size_t n = fc.functors.size();

  std::map<std::pair<std::vector<ObjId>, std::vector<MorId>>, ObjId> functor_index;
  CategoryBuilder builder;
  for (ObjId i = 0; i < n; ++i) {
    functor_index.emplace(std::pair{fc.functors[i].object_map, fc.functors[i].morphism_map}, i);
    builder.add_object("F" + std::to_string(i));
  }

  std::vector<std::map<std::vector<MorId>, MorId>> lookup(n * n);  // provisional ids
  std::vector<NatTransData> provisional;
  for (ObjId i = 0; i < n; ++i)
    for (ObjId j = 0; j < n; ++j) {
      auto ts = enumerate_nat_transformations(fc.functors[i], fc.functors[j]);
      std::size_t k = 0;
      for (auto& t : ts) {
        const bool is_id = i == j && t == identity_nat_trans(fc.functors[i]);
        const std::string name =
            is_id ? "id_F" + std::to_string(i) : "t" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
        const MorId id = builder.add_morphism(name, i, j);
        if (is_id) builder.set_identity(i, id);
        lookup[i * n + j].emplace(t.components, id);
        provisional.push_back(std::move(t));
        ++k;
      }
    }
  auto find_nat = [&](ObjId i, ObjId j, const std::vector<MorId>& comps) {
    auto it = lookup[i * n + j].find(comps);
    if (it == lookup[i * n + j].end()) throw Error(Code::NotNatural, "transformation outside the enumeration");
    return it->second;
  };
  std::vector<ObjId> src_of(provisional.size()), tgt_of(provisional.size());
  for (ObjId i = 0; i < n; ++i)
    for (ObjId j = 0; j < n; ++j)
      for (const auto& [comps, id] : lookup[i * n + j]) {
        src_of[id] = i;
        tgt_of[id] = j;
      }
  for (MorId a = 0; a < provisional.size(); ++a)
    for (MorId b = 0; b < provisional.size(); ++b) {
      if (tgt_of[a] != src_of[b]) continue;
      std::vector<MorId> comps(c.object_count());
      for (ObjId x = 0; x < comps.size(); ++x)
        comps[x] = d.compose(provisional[b].components[x], provisional[a].components[x]);
      builder.set_composite(b, a, find_nat(src_of[a], tgt_of[b], comps));
    }
  FiniteCategory fun = value_or_throw(builder.build());
  fc.transformations.resize(provisional.size());
  for (MorId p = 0; p < provisional.size(); ++p) fc.transformations[builder.final_id(p)] = provisional[p];

  // d on objects: d_D . F . d_C
  std::vector<ObjId> d_objects(n);
  for (ObjId i = 0; i < n; ++i) {
    const auto& F = fc.functors[i];
    std::vector<ObjId> om(c.object_count());
    std::vector<MorId> mm(c.morphism_count());
    for (ObjId x = 0; x < om.size(); ++x) om[x] = di.d_obj(F.on_object(ci.d_obj(x)));
    for (MorId m = 0; m < mm.size(); ++m) mm[m] = di.d_mor(F.on_morphism(ci.d_mor(m)));
    auto it = functor_index.find(std::pair{om, mm});
    if (it == functor_index.end()) throw Error(Code::NotAFunctor, "conjugated functor outside the enumeration");
    d_objects[i] = it->second;
  }
  std::vector<MorId> d_morphisms(fun.morphism_count());
  for (MorId t = 0; t < fun.morphism_count(); ++t) {
    const auto& alpha = fc.transformations[t];
    const ObjId i = fun.dom(t), j = fun.cod(t);
    std::vector<MorId> comps(c.object_count());
    for (ObjId x = 0; x < comps.size(); ++x) comps[x] = di.d_mor(alpha.components[ci.d_obj(x)]);
    d_morphisms[t] = builder.final_id(find_nat(d_objects[j], d_objects[i], comps));
  }
  std::vector<MorId> eta(n);
  for (ObjId i = 0; i < n; ++i) {
    const auto& F = fc.functors[i];
    std::vector<MorId> comps(c.object_count());
    for (ObjId x = 0; x < comps.size(); ++x) {
      const ObjId ddx = ci.d_obj(ci.d_obj(x));
      comps[x] = d.compose(di.eta[F.on_object(ddx)], F.on_morphism(ci.eta[x]));
    }
    eta[i] = builder.final_id(find_nat(i, d_objects[d_objects[i]], comps));
  }
  fc.category = value_or_throw(
      validate_anti_involution(fun, contravariant_functor(fun, std::move(d_objects), std::move(d_morphisms)), std::move(eta)));
  return fc;
}

InvolutiveFunctor involutive_structure_of(const FunctorCategory& fc, ObjId functor, MorId psi) {
  const auto& F = fc.functors.at(functor);
  const auto& ci = fc.source;
  const auto& di = fc.target;
  const auto& comps = fc.transformations.at(psi).components;
  std::vector<MorId> phi(ci.base.object_count());
  for (ObjId x = 0; x < phi.size(); ++x)
    phi[x] = di.base.compose(di.d_mor(F.on_morphism(ci.eta[x])), comps[ci.d_obj(x)]);
  return InvolutiveFunctor{ci, di, F, std::move(phi)};
}

std::vector<InvolutiveFunctor> enumerate_involutive_structures(const AntiInvolutiveCategory& ci,
                                                               const AntiInvolutiveCategory& di,
                                                               const FunctorData& functor) {
  const auto& c = ci.base;
  const auto& d = di.base;
  const std::size_t n = c.object_count();
  std::vector<std::vector<MorId>> squares(n);
  for (MorId m = 0; m < c.morphism_count(); ++m) squares[std::max(c.dom(m), c.cod(m))].push_back(m);
  std::vector<std::vector<ObjId>> eta_checks(n);
  for (ObjId x = 0; x < n; ++x) eta_checks[std::max(x, ci.d_obj(x))].push_back(x);

  std::vector<InvolutiveFunctor> out;
  std::vector<MorId> phi(n, kNoMorphism);
  auto search = [&](auto&& self, ObjId x) -> void {
    if (x == n) {
      InvolutiveFunctor candidate{ci, di, functor, phi};
      if (check_involutive_functor(candidate).ok()) out.push_back(std::move(candidate));
      return;
    }
    for (MorId p : d.hom(functor.on_object(ci.d_obj(x)), di.d_obj(functor.on_object(x)))) {
      if (!d.is_iso(p)) continue;
      phi[x] = p;
      bool ok = true;
      for (MorId f : squares[x]) {
        const ObjId a = c.dom(f), b = c.cod(f);
        if (d.compose(di.d_mor(functor.on_morphism(f)), phi[b]) != d.compose(phi[a], functor.on_morphism(ci.d_mor(f)))) {
          ok = false;
          break;
        }
      }
      for (ObjId z : eta_checks[x]) {
        if (!ok) break;
        ok = d.compose(phi[ci.d_obj(z)], functor.on_morphism(ci.eta[z])) ==
             d.compose(di.d_mor(phi[z]), di.eta[functor.on_object(z)]);
      }
      if (ok) self(self, x + 1);
    }
  };
  search(search, 0);
  return out;
}

}  // namespace fincat
