#include "fincat/category.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "category_data.hpp"
#include "fincat/kernels.hpp"

namespace fincat {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kReportLimit = 20;

std::shared_ptr<const detail::CategoryData> empty_data() {
  static const auto data = std::make_shared<const detail::CategoryData>();
  return data;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

FiniteCategory::FiniteCategory() : data_(empty_data()) {}

std::size_t FiniteCategory::object_count() const { return data_->object_names.size(); }
std::size_t FiniteCategory::morphism_count() const { return data_->dom.size(); }
const std::string& FiniteCategory::object_name(ObjId x) const { return data_->object_names.at(x); }

std::string FiniteCategory::morphism_name(MorId m) const {
  const auto& d = *data_;
  if (m >= d.dom.size()) throw Error(Code::UnknownMorphism, "morphism id " + std::to_string(m));
  return std::visit(Overloaded{
                        [&](const detail::TableComposition&) { return d.morphism_names[m]; },
                        [&](const detail::OppositeComposition& op) { return op.base.morphism_name(m); },
                        [&](const detail::ReplicaComposition& rep) {
                          std::string base = rep.base.morphism_name(replica_morphism(m));
                          if (d.morphism_names.empty()) return base;  // injective projection
                          return base + "@" + d.object_names[d.dom[m]] + ">" + d.object_names[d.cod[m]];
                        },
                    },
                    d.composition);
}

std::optional<ObjId> FiniteCategory::find_object(std::string_view name) const {
  auto it = data_->object_index.find(std::string(name));
  if (it == data_->object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FiniteCategory::find_morphism(std::string_view name) const {
  const auto& d = *data_;
  return std::visit(Overloaded{
                        [&](const detail::TableComposition&) -> std::optional<MorId> {
                          auto it = d.morphism_index.find(std::string(name));
                          if (it == d.morphism_index.end()) return std::nullopt;
                          return it->second;
                        },
                        [&](const detail::OppositeComposition& op) { return op.base.find_morphism(name); },
                        [&](const detail::ReplicaComposition& rep) -> std::optional<MorId> {
                          if (!d.morphism_names.empty()) return std::nullopt;
                          auto b = rep.base.find_morphism(name);
                          if (!b) return std::nullopt;
                          // injective projection: at most one lift
                          std::optional<ObjId> x, y;
                          for (ObjId o = 0; o < d.n(); ++o) {
                            if (rep.projection[o] == rep.base.dom(*b)) x = o;
                            if (rep.projection[o] == rep.base.cod(*b)) y = o;
                          }
                          if (!x || !y) return std::nullopt;
                          return replica_lift(*b, *x, *y);
                        },
                    },
                    d.composition);
}

ObjId FiniteCategory::dom(MorId m) const { return data_->dom.at(m); }
ObjId FiniteCategory::cod(MorId m) const { return data_->cod.at(m); }
MorId FiniteCategory::identity(ObjId x) const { return data_->identities.at(x); }

HomRange FiniteCategory::hom(ObjId x, ObjId y) const {
  const auto n = data_->n();
  if (x >= n || y >= n) throw Error(Code::UnknownIdentifier, "object id out of range");
  return data_->hom(x, y);
}

std::size_t FiniteCategory::max_hom_size() const { return data_->max_hom; }

BlockView FiniteCategory::block(ObjId x, ObjId y, ObjId z) const {
  const auto& d = *data_;
  BlockView v;
  v.f_range = d.hom(x, y);
  v.g_range = d.hom(y, z);
  v.out_range = d.hom(x, z);
  if (v.f_range.empty() || v.g_range.empty()) return v;
  std::visit(Overloaded{
                 [&](const detail::TableComposition& t) {
                   const auto n = d.n();
                   v.table = t.local.data() + t.triple_offset[(static_cast<std::size_t>(x) * n + y) * n + z];
                   v.stride_g = v.f_range.size();
                   v.stride_f = 1;
                 },
                 [&](const detail::OppositeComposition& op) {
                   // here f: x -> y is base y -> x and g: y -> z is base z -> y; base composes f after g
                   const BlockView b = op.base.block(z, y, x);
                   v.table = b.table;
                   v.stride_g = b.stride_f;
                   v.stride_f = b.stride_g;
                 },
                 [&](const detail::ReplicaComposition& rep) {
                   const BlockView b = rep.base.block(rep.projection[x], rep.projection[y], rep.projection[z]);
                   v.table = b.table;
                   v.stride_g = b.stride_g;
                   v.stride_f = b.stride_f;
                 },
             },
             d.composition);
  return v;
}

MorId FiniteCategory::compose(MorId g, MorId f) const {
  const auto& d = *data_;
  const std::size_t count = d.dom.size();
  if (g >= count || f >= count) throw Error(Code::UnknownMorphism, "compose on unknown morphism id");
  const ObjId y = d.cod[f];
  if (d.dom[g] != y) {
    throw Error(Code::TypeMismatch,
                "cannot compose " + morphism_name(g) + " after " + morphism_name(f) + ": codomain " +
                    d.object_names[y] + " is not domain " + d.object_names[d.dom[g]]);
  }
  return block(d.dom[f], y, d.cod[g]).compose(g, f);
}

std::optional<MorId> FiniteCategory::inverse(MorId m) const {
  const ObjId x = dom(m), y = cod(m);
  const MorId idx = identity(x), idy = identity(y);
  for (MorId g : hom(y, x))
    if (compose(g, m) == idx && compose(m, g) == idy) return g;
  return std::nullopt;
}

const FiniteCategory* FiniteCategory::opposite_of() const {
  if (auto* op = std::get_if<detail::OppositeComposition>(&data_->composition)) return &op->base;
  return nullptr;
}

const FiniteCategory* FiniteCategory::replica_base() const {
  if (auto* rep = std::get_if<detail::ReplicaComposition>(&data_->composition)) return &rep->base;
  return nullptr;
}

ObjId FiniteCategory::replica_projection(ObjId x) const {
  const auto* rep = std::get_if<detail::ReplicaComposition>(&data_->composition);
  if (!rep) throw Error(Code::PreconditionFailure, "not a replicated category");
  return rep->projection.at(x);
}

MorId FiniteCategory::replica_morphism(MorId m) const {
  const auto* rep = std::get_if<detail::ReplicaComposition>(&data_->composition);
  if (!rep) throw Error(Code::PreconditionFailure, "not a replicated category");
  const auto& d = *data_;
  const ObjId x = d.dom.at(m), y = d.cod[m];
  const HomRange own = d.hom(x, y);
  return rep->base.hom(rep->projection[x], rep->projection[y])[own.local(m)];
}

MorId FiniteCategory::replica_lift(MorId b, ObjId x, ObjId y) const {
  const auto* rep = std::get_if<detail::ReplicaComposition>(&data_->composition);
  if (!rep) throw Error(Code::PreconditionFailure, "not a replicated category");
  const HomRange base_hom = rep->base.hom(rep->projection.at(x), rep->projection.at(y));
  if (!base_hom.contains(b)) throw Error(Code::TypeMismatch, "base morphism does not lie over the given objects");
  return data_->hom(x, y)[base_hom.local(b)];
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.same_as(b)) return true;
  if (a.opposite_of() && b.opposite_of() && a.opposite_of()->same_as(*b.opposite_of())) return true;
  if (a.replica_base() && b.replica_base() && a.replica_base()->same_as(*b.replica_base())) {
    const auto& ra = std::get<detail::ReplicaComposition>(a.data_->composition);
    const auto& rb = std::get<detail::ReplicaComposition>(b.data_->composition);
    return ra.projection == rb.projection && a.data_->object_names == b.data_->object_names;
  }
  const std::size_t n = a.object_count();
  if (n != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
  for (ObjId x = 0; x < n; ++x) {
    if (a.object_name(x) != b.object_name(x) || a.identity(x) != b.identity(x)) return false;
    for (ObjId y = 0; y < n; ++y) {
      const HomRange ha = a.hom(x, y), hb = b.hom(x, y);
      if (ha.first() != hb.first() || ha.size() != hb.size()) return false;
    }
  }
  for (MorId m = 0; m < a.morphism_count(); ++m)
    if (a.morphism_name(m) != b.morphism_name(m)) return false;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        const BlockView va = a.block(x, y, z), vb = b.block(x, y, z);
        for (std::uint32_t gi = 0; gi < va.g_range.size(); ++gi)
          for (std::uint32_t fi = 0; fi < va.f_range.size(); ++fi)
            if (va.compose_local(gi, fi) != vb.compose_local(gi, fi)) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Builder

ObjId CategoryBuilder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.push_back(kNoMorphism);
  return static_cast<ObjId>(objects_.size() - 1);
}

MorId CategoryBuilder::add_morphism(std::string name, ObjId dom, ObjId cod) {
  if (dom >= objects_.size() || cod >= objects_.size())
    throw Error(Code::UnknownIdentifier, "morphism " + name + " refers to an unknown object");
  morphisms_.push_back({std::move(name), dom, cod});
  return static_cast<MorId>(morphisms_.size() - 1);
}

void CategoryBuilder::set_identity(ObjId x, MorId m) { identities_.at(x) = m; }

void CategoryBuilder::set_composite(MorId g, MorId f, MorId result) { composites_.push_back({g, f, result}); }

Checked<FiniteCategory> CategoryBuilder::build() {
  Checked<FiniteCategory> out;
  Report& report = out.report;
  const std::size_t n = objects_.size();
  const std::size_t count = morphisms_.size();

  auto data = std::make_shared<detail::CategoryData>();
  data->object_names = objects_;
  for (ObjId x = 0; x < n; ++x)
    if (!data->object_index.emplace(objects_[x], x).second)
      report.add(Code::DuplicateIdentifier, "object " + objects_[x] + " declared twice");

  // hom-set ranges: stable grouping by (dom, cod)
  std::vector<MorId> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](MorId a, MorId b) {
    const auto& ma = morphisms_[a];
    const auto& mb = morphisms_[b];
    return std::tie(ma.dom, ma.cod) < std::tie(mb.dom, mb.cod);
  });
  final_ids_.assign(count, kNoMorphism);
  for (MorId i = 0; i < count; ++i) final_ids_[order[i]] = i;

  data->homs.assign(n * n, HomRange{});
  data->dom.resize(count);
  data->cod.resize(count);
  data->morphism_names.resize(count);
  {
    std::vector<std::uint32_t> sizes(n * n, 0);
    for (const auto& m : morphisms_) ++sizes[m.dom * n + m.cod];
    MorId next = 0;
    for (std::size_t b = 0; b < n * n; ++b) {
      data->homs[b] = HomRange(next, sizes[b]);
      next += sizes[b];
      data->max_hom = std::max<std::size_t>(data->max_hom, sizes[b]);
    }
  }
  for (MorId p = 0; p < count; ++p) {
    const MorId id = final_ids_[p];
    const auto& m = morphisms_[p];
    data->dom[id] = m.dom;
    data->cod[id] = m.cod;
    data->morphism_names[id] = m.name;
    if (!data->morphism_index.emplace(m.name, id).second)
      report.add(Code::DuplicateIdentifier, "morphism " + m.name + " declared twice");
  }
  auto mname = [&](MorId final_id) { return data->morphism_names[final_id]; };

  bool identities_ok = true;
  data->identities.assign(n, kNoMorphism);
  for (ObjId x = 0; x < n; ++x) {
    const MorId p = identities_[x];
    if (p == kNoMorphism || p >= count) {
      report.add(Code::MissingIdentity, "object " + objects_[x] + " has no identity morphism");
      identities_ok = false;
      continue;
    }
    const MorId id = final_ids_[p];
    if (data->dom[id] != x || data->cod[id] != x) {
      report.add(Code::TypeMismatch, "identity " + mname(id) + " of " + objects_[x] + " is not an endomorphism of it");
      identities_ok = false;
      continue;
    }
    data->identities[x] = id;
  }

  // composition table: one slot per composable pair
  detail::TableComposition table;
  table.triple_offset.assign(n * n * n, 0);
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        table.triple_offset[(x * n + y) * n + z] = total;
        total += static_cast<std::uint64_t>(data->homs[x * n + y].size()) * data->homs[y * n + z].size();
      }
  table.local.assign(total, kUnset);
  auto slot = [&](MorId g, MorId f) -> std::uint32_t& {
    const ObjId x = data->dom[f], y = data->cod[f], z = data->cod[g];
    const HomRange fr = data->homs[x * n + y];
    const HomRange gr = data->homs[y * n + z];
    return table.local[table.triple_offset[(x * n + y) * n + z] + gr.local(g) * fr.size() + fr.local(f)];
  };

  for (const auto& e : composites_) {
    if (e.g >= count || e.f >= count || e.result >= count) {
      report.add(Code::UnknownIdentifier, "composition entry refers to an unknown morphism");
      continue;
    }
    const MorId g = final_ids_[e.g], f = final_ids_[e.f], r = final_ids_[e.result];
    if (data->cod[f] != data->dom[g]) {
      report.add(Code::TypeMismatch, "compose(" + mname(g) + ", " + mname(f) + ") declared but cod(" + mname(f) +
                                         ") = " + objects_[data->cod[f]] + " differs from dom(" + mname(g) +
                                         ") = " + objects_[data->dom[g]]);
      continue;
    }
    if (data->dom[r] != data->dom[f] || data->cod[r] != data->cod[g]) {
      report.add(Code::TypeMismatch, "compose(" + mname(g) + ", " + mname(f) + ") = " + mname(r) +
                                         " lands outside Hom(" + objects_[data->dom[f]] + ", " +
                                         objects_[data->cod[g]] + ")");
      continue;
    }
    const std::uint32_t local = data->homs[data->dom[f] * n + data->cod[g]].local(r);
    std::uint32_t& s = slot(g, f);
    if (s != kUnset && s != local) {
      report.add(Code::DuplicateComposite, "compose(" + mname(g) + ", " + mname(f) + ") declared twice with different results");
      continue;
    }
    s = local;
  }

  if (identities_ok) {
    for (MorId f = 0; f < count; ++f) {
      const ObjId x = data->dom[f], y = data->cod[f];
      const std::uint32_t local = data->homs[x * n + y].local(f);
      for (const auto& [g, h] : {std::pair{data->identities[y], f}, std::pair{f, data->identities[x]}}) {
        std::uint32_t& s = slot(g, h);
        if (s == kUnset) {
          s = local;
        } else if (s != local) {
          report.add(Code::IdentityLawFailure, "compose(" + mname(g) + ", " + mname(h) + ") should be " + mname(f));
        }
      }
    }
  }

  std::size_t missing = 0;
  std::string missing_list;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const HomRange fr = data->homs[x * n + y], gr = data->homs[y * n + z];
        const auto base = table.triple_offset[(x * n + y) * n + z];
        for (std::uint32_t gi = 0; gi < gr.size(); ++gi)
          for (std::uint32_t fi = 0; fi < fr.size(); ++fi)
            if (table.local[base + gi * fr.size() + fi] == kUnset) {
              if (missing++ < kReportLimit)
                missing_list += (missing_list.empty() ? "" : ", ") + mname(gr[gi]) + " . " + mname(fr[fi]);
            }
      }
  if (missing > 0)
    report.add(Code::MissingComposite, std::to_string(missing) + " composable pair(s) without a composite: " + missing_list);

  if (!report.ok()) return out;

  data->composition = std::move(table);
  FiniteCategory candidate{std::shared_ptr<const detail::CategoryData>(std::move(data))};

  const auto assoc = kernels::scan_associativity(candidate, kReportLimit, kernels::default_execution());
  for (const auto& t : assoc.sites) {
    report.add(Code::AssociativityFailure, candidate.morphism_name(t.h) + " . (" + candidate.morphism_name(t.g) + " . " +
                                               candidate.morphism_name(t.f) + ") differs from (" +
                                               candidate.morphism_name(t.h) + " . " + candidate.morphism_name(t.g) +
                                               ") . " + candidate.morphism_name(t.f));
  }
  if (assoc.count > assoc.sites.size())
    report.add(Code::AssociativityFailure, std::to_string(assoc.count) + " failing triples in total");
  if (report.ok()) out.value = std::move(candidate);
  return out;
}

Checked<FiniteCategory> validate_category(const RawCategory& raw) {
  CategoryBuilder builder;
  Report pre;
  std::unordered_map<std::string, ObjId> objects;
  for (const auto& name : raw.objects) objects.emplace(name, builder.add_object(name));

  std::unordered_map<std::string, MorId> morphisms;
  for (const auto& m : raw.morphisms) {
    auto d = objects.find(m.dom), c = objects.find(m.cod);
    if (d == objects.end() || c == objects.end()) {
      pre.add(Code::UnknownIdentifier, "morphism " + m.name + " refers to undeclared object " +
                                           (d == objects.end() ? m.dom : m.cod));
      continue;
    }
    morphisms.emplace(m.name, builder.add_morphism(m.name, d->second, c->second));
  }

  std::unordered_set<std::string> explicit_identity;
  for (const auto& [obj, mor] : raw.identities) {
    auto o = objects.find(obj);
    auto m = morphisms.find(mor);
    if (o == objects.end() || m == morphisms.end()) {
      pre.add(Code::UnknownIdentifier, "identity entry " + obj + " => " + mor + " refers to undeclared names");
      continue;
    }
    builder.set_identity(o->second, m->second);
    explicit_identity.insert(obj);
  }
  for (const auto& name : raw.objects) {
    if (explicit_identity.count(name)) continue;
    auto m = morphisms.find("id_" + name);
    if (m != morphisms.end()) builder.set_identity(objects.at(name), m->second);
  }

  for (const auto& e : raw.compositions) {
    auto g = morphisms.find(e.g), f = morphisms.find(e.f), r = morphisms.find(e.result);
    if (g == morphisms.end() || f == morphisms.end() || r == morphisms.end()) {
      pre.add(Code::UnknownIdentifier, "composition " + e.g + " . " + e.f + " = " + e.result +
                                           " refers to an undeclared morphism");
      continue;
    }
    builder.set_composite(g->second, f->second, r->second);
  }

  auto out = builder.build();
  if (!pre.ok()) {
    Report merged = pre;
    merged.append(out.report);
    out.report = merged;
    out.value.reset();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derived categories

FiniteCategory opposite(const FiniteCategory& c) {
  if (const FiniteCategory* base = c.opposite_of()) return *base;
  const auto& src = *c.data_;
  std::lock_guard lock(src.opposite_mutex);
  if (auto cached = src.opposite_cache.lock()) return FiniteCategory{std::move(cached)};
  auto data = std::make_shared<detail::CategoryData>();
  const std::size_t n = src.n();
  data->object_names = src.object_names;
  data->object_index = src.object_index;
  data->homs.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) data->homs[x * n + y] = src.homs[y * n + x];
  data->dom = src.cod;
  data->cod = src.dom;
  data->identities = src.identities;
  data->max_hom = src.max_hom;
  data->composition = detail::OppositeComposition{c};
  std::shared_ptr<const detail::CategoryData> shared = std::move(data);
  src.opposite_cache = shared;
  return FiniteCategory{std::move(shared)};
}

FiniteCategory replicate(const FiniteCategory& base, std::vector<ObjId> projection,
                         std::vector<std::string> object_names) {
  if (projection.size() != object_names.size())
    throw Error(Code::PreconditionFailure, "replicate: projection and names differ in length");
  auto data = std::make_shared<detail::CategoryData>();
  const std::size_t n = projection.size();
  data->object_names = std::move(object_names);
  for (ObjId x = 0; x < n; ++x) {
    if (projection[x] >= base.object_count()) throw Error(Code::UnknownIdentifier, "replicate: projection out of range");
    if (!data->object_index.emplace(data->object_names[x], x).second)
      throw Error(Code::DuplicateIdentifier, "replicate: object " + data->object_names[x] + " repeated");
  }
  data->homs.resize(n * n);
  std::size_t total = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto size = base.hom(projection[x], projection[y]).size();
      data->homs[x * n + y] = HomRange(static_cast<MorId>(total), size);
      total += size;
      data->max_hom = std::max<std::size_t>(data->max_hom, size);
    }
  if (total >= kNoMorphism) throw Error(Code::SizeExceeded, "replicated category exceeds the identifier space");
  data->dom.resize(total);
  data->cod.resize(total);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (MorId m : data->homs[x * n + y]) {
        data->dom[m] = static_cast<ObjId>(x);
        data->cod[m] = static_cast<ObjId>(y);
      }
  data->identities.resize(n);
  for (ObjId x = 0; x < n; ++x) {
    const HomRange base_end = base.hom(projection[x], projection[x]);
    data->identities[x] = data->homs[x * n + x][base_end.local(base.identity(projection[x]))];
  }
  // decorated names (stored as a non-empty marker) when the projection is not injective
  std::vector<ObjId> sorted = projection;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) data->morphism_names.assign(1, "");
  data->composition = detail::ReplicaComposition{base, std::move(projection)};
  return FiniteCategory{std::shared_ptr<const detail::CategoryData>(std::move(data))};
}

FiniteCategory full_subcategory(const FiniteCategory& base, const std::vector<ObjId>& objects) {
  std::vector<std::string> names;
  names.reserve(objects.size());
  for (ObjId x : objects) names.push_back(base.object_name(x));
  return replicate(base, objects, std::move(names));
}

bool is_opposite_of(const FiniteCategory& c, const FiniteCategory& base) {
  if (const FiniteCategory* b = c.opposite_of(); b && b->same_as(base)) return true;
  if (const FiniteCategory* b = base.opposite_of(); b && b->same_as(c)) return true;
  return c == opposite(base);
}

}  // namespace fincat
