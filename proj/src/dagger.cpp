#include "fincat/dagger.hpp"

#include <algorithm>
#include <unordered_map>

#include "fincat/kernels.hpp"

namespace fincat {

namespace {

constexpr std::size_t kReportLimit = 20;

}  // namespace

Report check_dagger(const FiniteCategory& c, const std::vector<MorId>& dag) {
  Report report;
  const std::size_t count = c.morphism_count();
  if (dag.size() != count) {
    report.add(Code::UnknownMorphism, "dagger must assign one image per morphism");
    return report;
  }
  std::size_t typing = 0;
  for (MorId f = 0; f < count; ++f) {
    if (dag[f] >= count) {
      report.add(Code::UnknownMorphism, "dagger image of " + c.morphism_name(f) + " is not a morphism");
      return report;
    }
    if (c.dom(dag[f]) != c.cod(f) || c.cod(dag[f]) != c.dom(f)) {
      if (typing++ < kReportLimit)
        report.add(Code::NotIdentityOnObjects, "dagger of " + c.morphism_name(f) + " is not in the reversed hom-set");
    }
  }
  if (typing > 0) return report;

  std::size_t involution = 0;
  for (MorId f = 0; f < count; ++f)
    if (dag[dag[f]] != f && involution++ < kReportLimit)
      report.add(Code::NotInvolutive, "dagger twice does not return " + c.morphism_name(f));
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (dag[c.identity(x)] != c.identity(x))
      report.add(Code::NotInvolutive, "dagger moves the identity of " + c.object_name(x));

  // dag(g . f) = dag(f) . dag(g): in block (x, y, z) the right side lives in block (z, y, x)
  const auto scan = kernels::scan_pairs(
      c, [&](ObjId x, ObjId y, ObjId z, const BlockView&) { return c.block(z, y, x); },
      [&](const BlockView& reversed, MorId g, MorId f, MorId gf) {
        return dag[gf] == reversed.compose(dag[f], dag[g]);
      },
      kReportLimit, kernels::default_execution());
  for (const auto& s : scan.sites)
    report.add(Code::NotContravariant, "dag(" + c.morphism_name(s.g) + " . " + c.morphism_name(s.f) + ") differs from dag(" +
                                           c.morphism_name(s.f) + ") . dag(" + c.morphism_name(s.g) + ")");
  if (scan.count > scan.sites.size())
    report.add(Code::NotContravariant, std::to_string(scan.count) + " failing pairs in total");
  return report;
}

Checked<DaggerStructure> validate_dagger(FiniteCategory c, std::vector<MorId> dag) {
  Checked<DaggerStructure> out;
  out.report = check_dagger(c, dag);
  if (out.report.ok()) out.value = DaggerStructure{std::move(c), std::move(dag)};
  return out;
}

Checked<DaggerStructure> validate_dagger(FiniteCategory c, const std::vector<std::pair<std::string, std::string>>& raw) {
  std::vector<MorId> dag(c.morphism_count(), kNoMorphism);
  Report pre;
  std::vector<std::pair<MorId, MorId>> entries;
  for (const auto& [from, to] : raw) {
    auto f = c.find_morphism(from);
    auto g = c.find_morphism(to);
    if (!f || !g) {
      pre.add(Code::UnknownMorphism, "dagger entry " + from + " -> " + to + " names an unknown morphism");
      continue;
    }
    if (dag[*f] != kNoMorphism && dag[*f] != *g) {
      pre.add(Code::NotInvolutive, "dagger of " + from + " given twice");
      continue;
    }
    dag[*f] = *g;
    entries.emplace_back(*f, *g);
  }
  for (const auto& [f, g] : entries)
    if (dag[g] == kNoMorphism) dag[g] = f;
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (dag[c.identity(x)] == kNoMorphism) dag[c.identity(x)] = c.identity(x);
  for (MorId f = 0; f < c.morphism_count(); ++f)
    if (dag[f] == kNoMorphism) pre.add(Code::UnknownMorphism, "no dagger image for " + c.morphism_name(f));
  if (!pre.ok()) return Checked<DaggerStructure>{std::nullopt, pre};
  return validate_dagger(std::move(c), std::move(dag));
}

bool is_isometry(const DaggerStructure& d, MorId f) {
  return d.base.compose(d(f), f) == d.base.identity(d.base.dom(f));
}

bool is_unitary(const DaggerStructure& d, MorId f) {
  return is_isometry(d, f) && d.base.compose(f, d(f)) == d.base.identity(d.base.cod(f));
}

MorphismClassification classify_morphism(const DaggerStructure& d, MorId f) {
  const auto& c = d.base;
  if (f >= c.morphism_count()) throw Error(Code::UnknownMorphism, "morphism id " + std::to_string(f));
  MorphismClassification out;
  out.self_adjoint = d(f) == f;
  out.isometry = is_isometry(d, f);
  out.unitary = is_unitary(d, f);
  const ObjId x = c.dom(f);
  if (x == c.cod(f)) {
    const bool invertible = c.is_iso(f);
    for (MorId a : c.hom(x, x)) {
      if (c.compose(d(a), a) != f) continue;
      out.positive_endomorphism = true;
      if (invertible && c.is_iso(a)) {
        out.positive_automorphism = true;
        break;
      }
    }
  }
  return out;
}

bool is_dagger_functor(const DaggerStructure& d1, const DaggerStructure& d2, const FunctorData& f) {
  for (MorId m = 0; m < d1.base.morphism_count(); ++m)
    if (f.on_morphism(d1(m)) != d2(f.on_morphism(m))) return false;
  return true;
}

bool is_isometric_nat_trans(const DaggerStructure&, const DaggerStructure& d2, const NatTransData& alpha) {
  return std::all_of(alpha.components.begin(), alpha.components.end(), [&](MorId a) { return is_isometry(d2, a); });
}

std::optional<MorId> find_unitary(const DaggerStructure& d, ObjId x, ObjId y) {
  for (MorId u : d.base.hom(x, y))
    if (is_unitary(d, u)) return u;
  return std::nullopt;
}

DaggerEquivalenceVerdict is_dagger_equivalence(const DaggerStructure& d1, const DaggerStructure& d2,
                                               const FunctorData& f) {
  if (!is_dagger_functor(d1, d2, f)) throw Error(Code::NotADaggerFunctor, "functor does not commute with the daggers");
  DaggerEquivalenceVerdict verdict;
  verdict.fully_faithful = is_fully_faithful(f, &verdict.detail);
  verdict.unitarily_surjective = true;
  for (ObjId y = 0; y < d2.base.object_count(); ++y) {
    bool hit = false;
    for (ObjId x = 0; x < d1.base.object_count() && !hit; ++x) hit = find_unitary(d2, f.on_object(x), y).has_value();
    if (!hit) {
      verdict.unitarily_surjective = false;
      if (verdict.detail.empty())
        verdict.detail = "object " + d2.base.object_name(y) + " is not unitarily isomorphic to any image";
      break;
    }
  }
  return verdict;
}

std::optional<bool> has_unitary_quasi_inverse(const DaggerStructure& d1, const DaggerStructure& d2,
                                              const FunctorData& f, std::uint64_t cap) {
  if (functor_search_bound(d2.base, d1.base) > cap) return std::nullopt;
  const auto unitary_iso_exists = [](const DaggerStructure& d, const FunctorData& src, const FunctorData& tgt) {
    for (const auto& alpha : enumerate_nat_transformations(src, tgt))
      if (std::all_of(alpha.components.begin(), alpha.components.end(), [&](MorId a) { return is_unitary(d, a); }))
        return true;
    return false;
  };
  const FunctorData id1 = identity_functor(d1.base);
  const FunctorData id2 = identity_functor(d2.base);
  for (const auto& g : enumerate_functors(d2.base, d1.base, cap)) {
    if (!is_dagger_functor(d2, d1, g)) continue;
    if (unitary_iso_exists(d2, compose_functors(f, g, false), id2) &&
        unitary_iso_exists(d1, compose_functors(g, f, false), id1))
      return true;
  }
  return false;
}

IndefiniteVerdict is_indefinite(const DaggerStructure& d) {
  const auto& c = d.base;
  const std::size_t n = c.object_count();
  // one object per parallel task; first failure by (object, morphism) order
  auto per_object = kernels::map_indices<std::optional<MorId>>(
      n,
      [&](std::size_t xi) -> std::optional<MorId> {
        const auto x = static_cast<ObjId>(xi);
        for (MorId a : c.hom(x, x)) {
          if (d(a) != a || !c.is_iso(a)) continue;
          bool factored = false;
          for (ObjId y = 0; y < n && !factored; ++y)
            for (MorId f : c.hom(x, y))
              if (c.compose(d(f), f) == a && c.is_iso(f)) {
                factored = true;
                break;
              }
          if (!factored) return a;
        }
        return std::nullopt;
      },
      kernels::default_execution());
  IndefiniteVerdict verdict;
  for (ObjId x = 0; x < n; ++x)
    if (per_object[x]) {
      verdict.indefinite = false;
      verdict.counterexample = std::pair{x, *per_object[x]};
      break;
    }
  return verdict;
}

Partition unitary_iso_classes(const DaggerStructure& d) {
  return Partition::of_relation(d.base.object_count(),
                                [&](ObjId x, ObjId y) { return find_unitary(d, x, y).has_value(); });
}

PositivityNotion canonical_positivity(const DaggerStructure& d) {
  const auto& c = d.base;
  PositivityNotion p;
  p.sets.resize(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto& set = p.sets[x];
    for (MorId a : c.hom(x, x))
      if (c.is_iso(a)) set.push_back(c.compose(d(a), a));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  return p;
}

}  // namespace fincat
