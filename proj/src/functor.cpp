#include "fincat/functor.hpp"

#include <algorithm>
#include <string>

#include "fincat/kernels.hpp"

namespace fincat {

namespace {

constexpr std::size_t kReportLimit = 20;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

bool operator==(const FunctorData& a, const FunctorData& b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map && same_category(a.source, b.source) &&
         same_category(a.target, b.target);
}

bool operator==(const NatTransData& a, const NatTransData& b) {
  return a.components == b.components && a.source_functor == b.source_functor && a.target_functor == b.target_functor;
}

Report check_functor(const FunctorData& f) {
  Report report;
  const auto& c = f.source;
  const auto& d = f.target;
  if (f.object_map.size() != c.object_count() || f.morphism_map.size() != c.morphism_count()) {
    report.add(Code::NotAFunctor, "map sizes do not match the source category");
    return report;
  }
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (f.object_map[x] >= d.object_count()) {
      report.add(Code::NotAFunctor, "object " + c.object_name(x) + " maps outside the target");
      return report;
    }
  std::size_t typing = 0;
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const MorId fm = f.morphism_map[m];
    if (fm >= d.morphism_count() || d.dom(fm) != f.object_map[c.dom(m)] || d.cod(fm) != f.object_map[c.cod(m)]) {
      if (typing++ < kReportLimit)
        report.add(Code::NotAFunctor, "morphism " + c.morphism_name(m) + " is not sent to the matching hom-set");
    }
  }
  if (typing > 0) return report;
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (f.morphism_map[c.identity(x)] != d.identity(f.object_map[x]))
      report.add(Code::NotAFunctor, "identity of " + c.object_name(x) + " is not preserved");

  const auto scan = kernels::scan_pairs(
      c,
      [&](ObjId x, ObjId y, ObjId z, const BlockView&) {
        return d.block(f.object_map[x], f.object_map[y], f.object_map[z]);
      },
      [&](const BlockView& target, MorId g, MorId h, MorId gh) {
        return f.morphism_map[gh] == target.compose(f.morphism_map[g], f.morphism_map[h]);
      },
      kReportLimit, kernels::default_execution());
  for (const auto& s : scan.sites)
    report.add(Code::NotAFunctor, "F(" + c.morphism_name(s.g) + " . " + c.morphism_name(s.f) +
                                      ") differs from F(" + c.morphism_name(s.g) + ") . F(" + c.morphism_name(s.f) + ")");
  return report;
}

Checked<FunctorData> validate_functor(FunctorData f) {
  Checked<FunctorData> out;
  out.report = check_functor(f);
  if (out.report.ok()) out.value = std::move(f);
  return out;
}

Report check_nat_trans(const NatTransData& alpha) {
  Report report;
  const auto& F = alpha.source_functor;
  const auto& G = alpha.target_functor;
  if (!same_category(F.source, G.source) || !same_category(F.target, G.target)) {
    report.add(Code::SourceTargetMismatch, "functors are not parallel");
    return report;
  }
  const auto& c = F.source;
  const auto& d = F.target;
  if (alpha.components.size() != c.object_count()) {
    report.add(Code::NotNatural, "one component per object expected");
    return report;
  }
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const MorId a = alpha.components[x];
    if (a >= d.morphism_count() || d.dom(a) != F.on_object(x) || d.cod(a) != G.on_object(x)) {
      report.add(Code::NotNatural, "component at " + c.object_name(x) + " has the wrong type");
    }
  }
  if (!report.ok()) return report;
  std::size_t failures = 0;
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const ObjId x = c.dom(m), y = c.cod(m);
    if (d.compose(G.on_morphism(m), alpha.components[x]) != d.compose(alpha.components[y], F.on_morphism(m))) {
      if (failures++ < kReportLimit) report.add(Code::NotNatural, "naturality square fails at " + c.morphism_name(m));
    }
  }
  return report;
}

Checked<NatTransData> validate_nat_trans(NatTransData alpha) {
  Checked<NatTransData> out;
  out.report = check_nat_trans(alpha);
  if (out.report.ok()) out.value = std::move(alpha);
  return out;
}

FunctorData identity_functor(const FiniteCategory& c) {
  FunctorData f{c, c, std::vector<ObjId>(c.object_count()), std::vector<MorId>(c.morphism_count())};
  for (ObjId x = 0; x < c.object_count(); ++x) f.object_map[x] = x;
  for (MorId m = 0; m < c.morphism_count(); ++m) f.morphism_map[m] = m;
  return f;
}

FunctorData terminal_functor(const FiniteCategory& c, const FiniteCategory& one) {
  if (one.object_count() != 1 || one.morphism_count() != 1)
    throw Error(Code::PreconditionFailure, "target is not a terminal category");
  return FunctorData{c, one, std::vector<ObjId>(c.object_count(), 0), std::vector<MorId>(c.morphism_count(), 0)};
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f, bool validate) {
  if (!same_category(f.target, g.source))
    throw Error(Code::SourceTargetMismatch, "target of the first functor is not the source of the second");
  FunctorData out{f.source, g.target, std::vector<ObjId>(f.object_map.size()), std::vector<MorId>(f.morphism_map.size())};
  for (std::size_t x = 0; x < f.object_map.size(); ++x) out.object_map[x] = g.object_map[f.object_map[x]];
  for (std::size_t m = 0; m < f.morphism_map.size(); ++m) out.morphism_map[m] = g.morphism_map[f.morphism_map[m]];
  if (validate) return value_or_throw(validate_functor(std::move(out)));
  return out;
}

NatTransData identity_nat_trans(const FunctorData& f) {
  NatTransData out{f, f, std::vector<MorId>(f.object_map.size())};
  for (ObjId x = 0; x < f.object_map.size(); ++x) out.components[x] = f.target.identity(f.object_map[x]);
  return out;
}

NatTransData compose_vertical(const NatTransData& beta, const NatTransData& alpha) {
  if (!(alpha.target_functor == beta.source_functor))
    throw Error(Code::SourceTargetMismatch, "vertical composite of non-matching transformations");
  NatTransData out{alpha.source_functor, beta.target_functor, std::vector<MorId>(alpha.components.size())};
  const auto& d = alpha.source_functor.target;
  for (std::size_t x = 0; x < out.components.size(); ++x)
    out.components[x] = d.compose(beta.components[x], alpha.components[x]);
  return out;
}

std::optional<NatTransData> invert_nat_trans(const NatTransData& alpha) {
  NatTransData out{alpha.target_functor, alpha.source_functor, std::vector<MorId>(alpha.components.size())};
  const auto& d = alpha.source_functor.target;
  for (std::size_t x = 0; x < out.components.size(); ++x) {
    auto inv = d.inverse(alpha.components[x]);
    if (!inv) return std::nullopt;
    out.components[x] = *inv;
  }
  return out;
}

bool is_natural_iso(const NatTransData& alpha) {
  return check_nat_trans(alpha).ok() && invert_nat_trans(alpha).has_value();
}

NatTransData whisker_left(const FunctorData& h, const NatTransData& alpha) {
  NatTransData out{compose_functors(h, alpha.source_functor, false), compose_functors(h, alpha.target_functor, false),
                   std::vector<MorId>(alpha.components.size())};
  for (std::size_t x = 0; x < out.components.size(); ++x) out.components[x] = h.on_morphism(alpha.components[x]);
  return out;
}

NatTransData whisker_right(const NatTransData& alpha, const FunctorData& k) {
  NatTransData out{compose_functors(alpha.source_functor, k, false), compose_functors(alpha.target_functor, k, false),
                   std::vector<MorId>(k.object_map.size())};
  for (std::size_t x = 0; x < out.components.size(); ++x) out.components[x] = alpha.components[k.on_object(x)];
  return out;
}

std::uint64_t functor_search_bound(const FiniteCategory& c, const FiniteCategory& d) {
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < c.object_count(); ++i) bound = saturating_mul(bound, d.object_count());
  return saturating_mul(bound, std::max<std::uint64_t>(1, d.max_hom_size()));
}

std::vector<FunctorData> enumerate_functors(const FiniteCategory& c, const FiniteCategory& d, std::uint64_t cap) {
  const std::uint64_t bound = functor_search_bound(c, d);
  if (bound > cap)
    throw Error(Code::SearchSpaceExceeded,
                "functor search space " + std::to_string(bound) + " exceeds cap " + std::to_string(cap));
  std::vector<FunctorData> out;
  const std::size_t n = c.object_count();
  const std::size_t m = c.morphism_count();
  if (n > 0 && d.object_count() == 0) return out;

  // constraints (g, f, g.f) checked once the largest of the three is assigned
  std::vector<std::vector<kernels::PairSite>> checks(m);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        const BlockView v = c.block(x, y, z);
        for (std::uint32_t gi = 0; gi < v.g_range.size(); ++gi)
          for (std::uint32_t fi = 0; fi < v.f_range.size(); ++fi) {
            const MorId g = v.g_range[gi], f = v.f_range[fi], gf = v.compose_local(gi, fi);
            if (c.is_identity(g) || c.is_identity(f)) continue;
            checks[std::max({g, f, gf})].push_back({g, f, gf});
          }
      }

  std::vector<ObjId> objects(n, 0);
  std::vector<MorId> morphisms(m, kNoMorphism);
  std::vector<HomRange> candidates(m);

  auto consistent = [&](MorId k) {
    for (const auto& s : checks[k])
      if (d.compose(morphisms[s.g], morphisms[s.f]) != morphisms[s.gf]) return false;
    return true;
  };

  // depth-first over morphism identifiers
  auto search = [&](auto&& self, MorId k) -> void {
    if (k == m) {
      out.push_back(FunctorData{c, d, objects, morphisms});
      return;
    }
    if (c.is_identity(k)) {
      morphisms[k] = d.identity(objects[c.dom(k)]);
      if (consistent(k)) self(self, k + 1);
      return;
    }
    for (MorId v : candidates[k]) {
      morphisms[k] = v;
      if (consistent(k)) self(self, k + 1);
    }
  };

  while (true) {
    bool feasible = true;
    for (MorId k = 0; k < m && feasible; ++k) {
      candidates[k] = d.hom(objects[c.dom(k)], objects[c.cod(k)]);
      feasible = !candidates[k].empty();
    }
    if (feasible) search(search, 0);
    // next object map in lexicographic order
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++objects[pos] < d.object_count()) break;
      objects[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<NatTransData> enumerate_nat_transformations(const FunctorData& f, const FunctorData& g) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target))
    throw Error(Code::SourceTargetMismatch, "functors are not parallel");
  const auto& c = f.source;
  const auto& d = f.target;
  const std::size_t n = c.object_count();
  // morphisms whose naturality square is decided once max(dom, cod) is assigned
  std::vector<std::vector<MorId>> squares(n);
  for (MorId m = 0; m < c.morphism_count(); ++m) squares[std::max(c.dom(m), c.cod(m))].push_back(m);

  std::vector<NatTransData> out;
  std::vector<MorId> comps(n, kNoMorphism);
  auto search = [&](auto&& self, ObjId x) -> void {
    if (x == n) {
      out.push_back(NatTransData{f, g, comps});
      return;
    }
    for (MorId a : d.hom(f.on_object(x), g.on_object(x))) {
      comps[x] = a;
      bool ok = true;
      for (MorId m : squares[x]) {
        if (d.compose(g.on_morphism(m), comps[c.dom(m)]) != d.compose(comps[c.cod(m)], f.on_morphism(m))) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, x + 1);
    }
  };
  search(search, 0);
  return out;
}

std::optional<MorId> find_iso(const FiniteCategory& c, ObjId x, ObjId y) {
  for (MorId m : c.hom(x, y))
    if (c.is_iso(m)) return m;
  return std::nullopt;
}

EquivalenceVerdict is_equivalence(const FunctorData& f) {
  EquivalenceVerdict verdict;
  const auto& c = f.source;
  const auto& d = f.target;
  const std::size_t n = c.object_count();

  // preimage[x * n + y][local index in Hom(Fx, Fy)] = source morphism
  std::vector<std::vector<MorId>> preimage(n * n);
  verdict.fully_faithful = true;
  for (ObjId x = 0; x < n && verdict.fully_faithful; ++x)
    for (ObjId y = 0; y < n; ++y) {
      const HomRange src = c.hom(x, y);
      const HomRange tgt = d.hom(f.on_object(x), f.on_object(y));
      auto& table = preimage[x * n + y];
      table.assign(tgt.size(), kNoMorphism);
      for (MorId m : src) {
        auto& slot = table[tgt.local(f.on_morphism(m))];
        if (slot != kNoMorphism) {
          verdict.fully_faithful = false;
          verdict.detail = "not faithful: " + c.morphism_name(slot) + " and " + c.morphism_name(m) + " have the same image";
          break;
        }
        slot = m;
      }
      if (!verdict.fully_faithful) break;
      if (src.size() != tgt.size()) {
        verdict.fully_faithful = false;
        verdict.detail = "not full on Hom(" + c.object_name(x) + ", " + c.object_name(y) + ")";
        break;
      }
    }

  std::vector<ObjId> chosen(d.object_count());
  std::vector<MorId> epsilon(d.object_count());
  verdict.essentially_surjective = true;
  for (ObjId t = 0; t < d.object_count(); ++t) {
    bool found = false;
    for (ObjId x = 0; x < n && !found; ++x)
      if (auto iso = find_iso(d, f.on_object(x), t)) {
        chosen[t] = x;
        epsilon[t] = *iso;
        found = true;
      }
    if (!found) {
      verdict.essentially_surjective = false;
      if (verdict.detail.empty()) verdict.detail = "object " + d.object_name(t) + " is not isomorphic to any image";
      break;
    }
  }
  if (!verdict.ok()) return verdict;

  auto lift = [&](ObjId x, ObjId y, MorId target_morphism) {
    const HomRange tgt = d.hom(f.on_object(x), f.on_object(y));
    return preimage[x * n + y][tgt.local(target_morphism)];
  };

  FunctorData g{d, c, chosen, std::vector<MorId>(d.morphism_count())};
  for (MorId k = 0; k < d.morphism_count(); ++k) {
    const ObjId s = d.dom(k), t = d.cod(k);
    const MorId inner = d.compose(*d.inverse(epsilon[t]), d.compose(k, epsilon[s]));
    g.morphism_map[k] = lift(chosen[s], chosen[t], inner);
  }
  const FunctorData fg = compose_functors(f, g, false);
  const FunctorData gf = compose_functors(g, f, false);
  NatTransData alpha{fg, identity_functor(d), epsilon};
  NatTransData beta{gf, identity_functor(c), std::vector<MorId>(n)};
  for (ObjId x = 0; x < n; ++x) beta.components[x] = lift(chosen[f.on_object(x)], x, epsilon[f.on_object(x)]);
  verdict.quasi_inverse = QuasiInverse{std::move(g), std::move(alpha), std::move(beta)};
  return verdict;
}

Report check_snake_identities(const AdjointEquivalence& adj) {
  Report report;
  const auto& F = adj.forward;
  const auto& G = adj.backward;
  for (ObjId x = 0; x < F.source.object_count(); ++x)
    if (F.on_morphism(adj.beta.components[x]) != adj.alpha.components[F.on_object(x)])
      report.add(Code::NotAnEquivalence, "F(beta) differs from alpha F at " + F.source.object_name(x));
  for (ObjId y = 0; y < G.source.object_count(); ++y)
    if (G.on_morphism(adj.alpha.components[y]) != adj.beta.components[G.on_object(y)])
      report.add(Code::NotAnEquivalence, "G(alpha) differs from beta G at " + G.source.object_name(y));
  return report;
}

AdjointEquivalence promote_to_adjoint_equivalence(const FunctorData& f, const FunctorData& g,
                                                  const NatTransData& alpha, const NatTransData& beta) {
  const FunctorData fg = compose_functors(f, g, false);
  const FunctorData gf = compose_functors(g, f, false);
  if (!(alpha.source_functor == fg) || !(alpha.target_functor == identity_functor(f.target)) ||
      !(beta.source_functor == gf) || !(beta.target_functor == identity_functor(f.source)))
    throw Error(Code::NotAnEquivalence, "alpha must be F.G => Id and beta must be G.F => Id");
  if (!is_natural_iso(alpha) || !is_natural_iso(beta))
    throw Error(Code::NotAnEquivalence, "alpha and beta must be natural isomorphisms");

  const auto& d = f.target;
  AdjointEquivalence adj{f, g, alpha, beta};
  for (ObjId y = 0; y < d.object_count(); ++y) {
    const MorId a = alpha.components[y];
    const MorId fb = f.on_morphism(beta.components[g.on_object(y)]);
    const MorId a_inv = *d.inverse(alpha.components[fg.on_object(y)]);
    adj.alpha.components[y] = d.compose(a, d.compose(fb, a_inv));
  }
  const Report snakes = check_snake_identities(adj);
  if (!snakes.ok()) throw Error(Code::NotAnEquivalence, snakes.summary());
  return adj;
}

bool is_fully_faithful(const FunctorData& f, std::string* detail) {
  const auto& c = f.source;
  const auto& d = f.target;
  std::vector<char> seen;
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = 0; y < c.object_count(); ++y) {
      const HomRange src = c.hom(x, y);
      const HomRange tgt = d.hom(f.on_object(x), f.on_object(y));
      if (src.size() != tgt.size()) {
        if (detail) *detail = "not full on Hom(" + c.object_name(x) + ", " + c.object_name(y) + ")";
        return false;
      }
      seen.assign(tgt.size(), 0);
      for (MorId m : src) {
        auto& s = seen[tgt.local(f.on_morphism(m))];
        if (s) {
          if (detail) *detail = "not faithful on Hom(" + c.object_name(x) + ", " + c.object_name(y) + ")";
          return false;
        }
        s = 1;
      }
    }
  return true;
}

Partition iso_classes(const FiniteCategory& c) {
  return Partition::of_relation(c.object_count(), [&](ObjId x, ObjId y) { return find_iso(c, x, y).has_value(); });
}

}  // namespace fincat
