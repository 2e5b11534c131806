#include "fincat/gens.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>

#include "fincat/finite_field.hpp"

namespace fincat::gens {

namespace {

struct InvolutionData {
  std::vector<ObjId> d_obj;
  std::vector<MorId> d_mor;
  std::vector<MorId> eta;
  bool is_t_of_dagger = false;
};

// Provisional presentation; identifiers are indices into these vectors.
struct Presentation {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<ObjId> dom;
  std::vector<ObjId> cod;
  std::vector<MorId> identity;
  std::function<MorId(MorId, MorId)> compose;
  std::optional<std::vector<MorId>> dagger;
  std::optional<InvolutionData> involution;
};

[[noreturn]] void invalid(const std::string& message) { throw Error(Code::InvalidSpec, message); }

Bundle realize(const GeneratorSpec& spec, const Presentation& p) {
  const std::size_t count = p.morphisms.size();
  if (count > spec.max_morphisms)
    throw Error(Code::SizeExceeded, spec.name + ": " + std::to_string(count) + " morphisms exceed the limit " +
                                        std::to_string(spec.max_morphisms));
  std::vector<std::vector<MorId>> by_dom(p.objects.size());
  for (MorId m = 0; m < count; ++m) by_dom[p.dom[m]].push_back(m);
  std::uint64_t pairs = 0;
  for (MorId f = 0; f < count; ++f) pairs += by_dom[p.cod[f]].size();
  if (pairs > spec.max_composable_pairs)
    throw Error(Code::SizeExceeded, spec.name + ": " + std::to_string(pairs) + " composable pairs exceed the limit");

  CategoryBuilder builder;
  for (const auto& o : p.objects) builder.add_object(o);
  for (MorId m = 0; m < count; ++m) builder.add_morphism(p.morphisms[m], p.dom[m], p.cod[m]);
  for (ObjId x = 0; x < p.objects.size(); ++x) builder.set_identity(x, p.identity[x]);
  for (MorId f = 0; f < count; ++f)
    for (MorId g : by_dom[p.cod[f]]) builder.set_composite(g, f, p.compose(g, f));
  auto built = builder.build();
  if (!built.ok()) throw Error(Code::InvalidSpec, spec.name + ": " + built.report.summary());

  Bundle bundle;
  bundle.name = spec.name;
  bundle.category = *built.value;
  auto final_ids = [&](const std::vector<MorId>& v) {
    std::vector<MorId> out(count);
    for (MorId m = 0; m < count; ++m) out[builder.final_id(m)] = builder.final_id(v[m]);
    return out;
  };
  if (p.dagger) {
    auto dag = validate_dagger(bundle.category, final_ids(*p.dagger));
    if (!dag.ok()) invalid(spec.name + ": dagger " + dag.report.summary());
    bundle.dagger = *dag.value;
    bundle.dagger_name = "D";
  }
  if (p.involution) {
    std::vector<MorId> eta(p.objects.size());
    for (ObjId x = 0; x < eta.size(); ++x) eta[x] = builder.final_id(p.involution->eta[x]);
    auto inv = validate_anti_involution(
        bundle.category, contravariant_functor(bundle.category, p.involution->d_obj, final_ids(p.involution->d_mor)),
        std::move(eta));
    if (!inv.ok()) invalid(spec.name + ": involution " + inv.report.summary());
    bundle.involution = *inv.value;
    bundle.involution_name = (p.involution->is_t_of_dagger ? "T" : "I") + spec.name;
  }
  return bundle;
}

std::uint32_t group_inverse(const Group& g, std::uint32_t a) {
  for (std::uint32_t b = 0; b < g.elements.size(); ++b)
    if (g.table[a][b] == 0) return b;
  invalid("group element without inverse");
}

void check_group(const Group& g) {
  const std::size_t n = g.elements.size();
  if (n == 0 || g.table.size() != n) invalid("group table has the wrong shape");
  for (const auto& row : g.table) {
    if (row.size() != n) invalid("group table has the wrong shape");
    for (auto v : row)
      if (v >= n) invalid("group table entry out of range");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    if (g.table[0][a] != a || g.table[a][0] != a) invalid("element 0 is not the unit");
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) invalid("group table is not associative");
  for (std::uint32_t a = 0; a < n; ++a) group_inverse(g, a);
}

Presentation delooping_presentation(const GeneratorSpec& spec) {
  const Group& g = spec.group;
  check_group(g);
  const std::uint32_t n = static_cast<std::uint32_t>(g.elements.size());
  std::vector<std::uint32_t> theta = spec.twist;
  if (theta.empty()) {
    theta.resize(n);
    std::iota(theta.begin(), theta.end(), 0u);
  }
  if (theta.size() != n) invalid("twist must permute the group elements");
  for (std::uint32_t a = 0; a < n; ++a) {
    if (theta[a] >= n || theta[theta[a]] != a) invalid("twist must be an involution");
    for (std::uint32_t b = 0; b < n; ++b)
      if (theta[g.table[a][b]] != g.table[theta[a]][theta[b]]) invalid("twist must be a group automorphism");
  }
  if (spec.eta_element >= n) invalid("eta element out of range");

  Presentation p;
  p.objects = {"x"};
  p.identity = {0};
  for (std::uint32_t a = 0; a < n; ++a) {
    p.morphisms.push_back(a == 0 ? "id_x" : g.elements[a]);
    p.dom.push_back(0);
    p.cod.push_back(0);
  }
  p.compose = [&g](MorId a, MorId b) { return g.table[a][b]; };
  std::vector<MorId> dag(n);
  for (std::uint32_t a = 0; a < n; ++a) dag[a] = theta[group_inverse(g, a)];
  p.dagger = dag;
  p.involution = InvolutionData{{0}, dag, {spec.eta_element}, spec.eta_element == 0};
  return p;
}

Presentation discrete_presentation(const GeneratorSpec& spec) {
  const auto& perm = spec.permutation;
  const std::uint32_t n = static_cast<std::uint32_t>(perm.size());
  for (std::uint32_t i = 0; i < n; ++i)
    if (perm[i] >= n || perm[perm[i]] != i) invalid("permutation must be an involution");
  Presentation p;
  for (std::uint32_t i = 0; i < n; ++i) {
    p.objects.push_back("o" + std::to_string(i));
    p.morphisms.push_back("id_o" + std::to_string(i));
    p.dom.push_back(i);
    p.cod.push_back(i);
    p.identity.push_back(i);
  }
  p.compose = [](MorId g, MorId) { return g; };
  std::vector<MorId> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  const bool trivial = std::all_of(ids.begin(), ids.end(), [&](MorId i) { return perm[i] == i; });
  if (trivial) p.dagger = ids;
  std::vector<MorId> d_mor(n);
  for (std::uint32_t i = 0; i < n; ++i) d_mor[i] = perm[i];
  p.involution = InvolutionData{std::vector<ObjId>(perm.begin(), perm.end()), d_mor, ids, trivial};
  return p;
}

// Matrices over GF(q^2); hom(m -> n) holds n x m matrices encoded base Q, row-major.
struct MatrixSpace {
  FiniteField field;
  std::uint32_t Q;
  std::vector<std::vector<MorId>> offset;  // offset[m][n]
  struct Mat {
    std::uint32_t m, n, index;
  };
  std::vector<Mat> mats;

  explicit MatrixSpace(std::uint32_t order) : field(order), Q(order) {}

  std::vector<std::uint32_t> entries(std::uint32_t rows, std::uint32_t cols, std::uint32_t index) const {
    std::vector<std::uint32_t> e(rows * cols);
    for (std::size_t k = e.size(); k-- > 0;) {
      e[k] = index % Q;
      index /= Q;
    }
    return e;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& e) const {
    std::uint32_t index = 0;
    for (auto v : e) index = index * Q + v;
    return index;
  }
  // g . f for f: l -> m (m x l), g: m -> n (n x m)
  MorId compose(MorId g, MorId f) const {
    const Mat a = mats[f], b = mats[g];
    const std::uint32_t l = a.m, m = a.n, n = b.n;
    const auto ea = entries(m, l, a.index);
    const auto eb = entries(n, m, b.index);
    std::vector<std::uint32_t> ec(n * l, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < l; ++j) {
        std::uint32_t s = 0;
        for (std::uint32_t k = 0; k < m; ++k) s = field.add(s, field.mul(eb[i * m + k], ea[k * l + j]));
        ec[i * l + j] = s;
      }
    return offset[l][n] + encode(ec);
  }
};

Presentation matrix_presentation(const GeneratorSpec& spec) {
  if (spec.q < 2 || spec.q * spec.q > 256) invalid("q must satisfy 2 <= q and q^2 <= 256");
  if (spec.max_dim > 4) invalid("max_dim above 4 is not supported");
  auto space = std::make_shared<MatrixSpace>(spec.q * spec.q);  // throws unless q^2 is a prime power
  const std::uint32_t Q = space->Q;
  const std::uint32_t top = spec.max_dim;

  std::vector<std::vector<std::uint64_t>> size(top + 1, std::vector<std::uint64_t>(top + 1));
  space->offset.assign(top + 1, std::vector<MorId>(top + 1));
  std::uint64_t total = 0;
  for (std::uint32_t m = 0; m <= top; ++m)
    for (std::uint32_t n = 0; n <= top; ++n) {
      std::uint64_t s = 1;
      for (std::uint32_t i = 0; i < m * n; ++i) {
        s *= Q;
        if (s > spec.max_morphisms) throw Error(Code::SizeExceeded, spec.name + ": hom-set too large");
      }
      size[m][n] = s;
      space->offset[m][n] = static_cast<MorId>(total);
      total += s;
    }
  if (total > spec.max_morphisms) throw Error(Code::SizeExceeded, spec.name + ": too many morphisms");

  Presentation p;
  const char* digits = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  auto identity_index = [&](std::uint32_t n) {
    std::vector<std::uint32_t> e(n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return space->encode(e);
  };
  for (std::uint32_t n = 0; n <= top; ++n) p.objects.push_back("d" + std::to_string(n));
  p.identity.resize(top + 1);
  space->mats.reserve(total);
  for (std::uint32_t m = 0; m <= top; ++m)
    for (std::uint32_t n = 0; n <= top; ++n) {
      const std::uint32_t unit = m == n ? identity_index(n) : ~0u;
      for (std::uint32_t idx = 0; idx < size[m][n]; ++idx) {
        const MorId id = static_cast<MorId>(space->mats.size());
        space->mats.push_back({m, n, idx});
        p.dom.push_back(m);
        p.cod.push_back(n);
        if (idx == unit) {
          p.morphisms.push_back("id_d" + std::to_string(n));
          p.identity[n] = id;
        } else {
          std::string name = "f" + std::to_string(m) + "to" + std::to_string(n);
          if (m * n > 0) {
            name += "_";
            for (auto v : space->entries(n, m, idx)) name += digits[v];
          }
          p.morphisms.push_back(std::move(name));
        }
      }
    }
  p.compose = [space](MorId g, MorId f) { return space->compose(g, f); };

  std::vector<MorId> dag(total);
  for (MorId f = 0; f < total; ++f) {
    const auto a = space->mats[f];
    const auto e = space->entries(a.n, a.m, a.index);
    std::vector<std::uint32_t> t(a.m * a.n);
    for (std::uint32_t i = 0; i < a.n; ++i)
      for (std::uint32_t j = 0; j < a.m; ++j) t[j * a.n + i] = space->field.pow(e[i * a.m + j], spec.q);
    dag[f] = space->offset[a.n][a.m] + space->encode(t);
  }
  p.dagger = dag;
  std::vector<ObjId> objs(top + 1);
  std::iota(objs.begin(), objs.end(), 0u);
  p.involution = InvolutionData{objs, dag, p.identity, true};
  return p;
}

Presentation poset_presentation(const GeneratorSpec& spec) {
  const auto& leq = spec.leq;
  const std::uint32_t n = static_cast<std::uint32_t>(leq.size());
  if (spec.antitone.size() != n) invalid("antitone map must cover every element");
  for (const auto& row : leq)
    if (row.size() != n) invalid("order relation has the wrong shape");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!leq[i][i]) invalid("order relation must be reflexive");
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) invalid("order relation must be antisymmetric");
      for (std::uint32_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) invalid("order relation must be transitive");
    }
  }
  const auto& s = spec.antitone;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (s[i] >= n || s[s[i]] != i) invalid("antitone map must be an involution");
    for (std::uint32_t j = 0; j < n; ++j)
      if (leq[i][j] && !leq[s[j]][s[i]]) invalid("map must reverse the order");
  }
  Presentation p;
  std::vector<std::vector<MorId>> id_of(n, std::vector<MorId>(n, kNoMorphism));
  for (std::uint32_t i = 0; i < n; ++i) p.objects.push_back("p" + std::to_string(i));
  p.identity.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      id_of[i][j] = static_cast<MorId>(p.morphisms.size());
      p.morphisms.push_back(i == j ? "id_p" + std::to_string(i) : "le" + std::to_string(i) + "_" + std::to_string(j));
      p.dom.push_back(i);
      p.cod.push_back(j);
      if (i == j) p.identity[i] = id_of[i][j];
    }
  p.compose = [id_of, dom = p.dom, cod = p.cod](MorId g, MorId f) { return id_of[dom[f]][cod[g]]; };
  std::vector<MorId> d_mor(p.morphisms.size());
  for (MorId m = 0; m < d_mor.size(); ++m) d_mor[m] = id_of[s[p.cod[m]]][s[p.dom[m]]];
  bool discrete = true;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j && leq[i][j]) discrete = false;
  if (discrete && std::all_of(s.begin(), s.end(), [&, i = 0u](std::uint32_t v) mutable { return v == i++; })) {
    p.dagger = d_mor;
  }
  p.involution = InvolutionData{std::vector<ObjId>(s.begin(), s.end()), d_mor, p.identity, p.dagger.has_value()};
  return p;
}

Presentation walking_iso_presentation() {
  Presentation p;
  p.objects = {"a", "b"};
  p.morphisms = {"id_a", "id_b", "f", "f_inv"};
  p.dom = {0, 1, 0, 1};
  p.cod = {0, 1, 1, 0};
  p.identity = {0, 1};
  // table indexed [g][f]
  p.compose = [](MorId g, MorId f) -> MorId {
    if (g <= 1) return f;
    if (f <= 1) return g;
    return g == 3 ? 0 : 1;  // f_inv . f = id_a, f . f_inv = id_b
  };
  p.dagger = std::vector<MorId>{0, 1, 3, 2};
  p.involution = InvolutionData{{0, 1}, {0, 1, 3, 2}, {0, 1}, true};
  return p;
}

Presentation product_presentation(const Bundle& a, const Bundle& b) {
  const auto& ca = a.category;
  const auto& cb = b.category;
  const std::size_t nb = cb.object_count(), mb = cb.morphism_count();
  Presentation p;
  for (ObjId x = 0; x < ca.object_count(); ++x)
    for (ObjId y = 0; y < nb; ++y) p.objects.push_back(ca.object_name(x) + "*" + cb.object_name(y));
  for (MorId f = 0; f < ca.morphism_count(); ++f)
    for (MorId g = 0; g < mb; ++g) {
      const ObjId dom = static_cast<ObjId>(ca.dom(f) * nb + cb.dom(g));
      const ObjId cod = static_cast<ObjId>(ca.cod(f) * nb + cb.cod(g));
      const bool identity = ca.is_identity(f) && cb.is_identity(g);
      p.morphisms.push_back(identity ? "id_" + p.objects[dom] : ca.morphism_name(f) + "*" + cb.morphism_name(g));
      p.dom.push_back(dom);
      p.cod.push_back(cod);
    }
  p.identity.resize(p.objects.size());
  for (ObjId x = 0; x < ca.object_count(); ++x)
    for (ObjId y = 0; y < nb; ++y)
      p.identity[x * nb + y] = static_cast<MorId>(ca.identity(x) * mb + cb.identity(y));
  p.compose = [ca, cb, mb](MorId g, MorId f) {
    return static_cast<MorId>(ca.compose(g / mb, f / mb) * mb + cb.compose(g % mb, f % mb));
  };
  const std::size_t total = p.morphisms.size();
  if (a.dagger && b.dagger) {
    std::vector<MorId> dag(total);
    for (MorId m = 0; m < total; ++m) dag[m] = static_cast<MorId>((*a.dagger)(m / mb) * mb + (*b.dagger)(m % mb));
    p.dagger = std::move(dag);
  }
  if (a.involution && b.involution) {
    const auto& ia = *a.involution;
    const auto& ib = *b.involution;
    InvolutionData inv;
    inv.d_obj.resize(p.objects.size());
    inv.eta.resize(p.objects.size());
    inv.d_mor.resize(total);
    for (ObjId x = 0; x < ca.object_count(); ++x)
      for (ObjId y = 0; y < nb; ++y) {
        inv.d_obj[x * nb + y] = static_cast<ObjId>(ia.d_obj(x) * nb + ib.d_obj(y));
        inv.eta[x * nb + y] = static_cast<MorId>(ia.eta[x] * mb + ib.eta[y]);
      }
    for (MorId m = 0; m < total; ++m) inv.d_mor[m] = static_cast<MorId>(ia.d_mor(m / mb) * mb + ib.d_mor(m % mb));
    inv.is_t_of_dagger = a.involution_name.rfind("T", 0) == 0 && b.involution_name.rfind("T", 0) == 0 &&
                         p.dagger.has_value();
    p.involution = std::move(inv);
  }
  return p;
}

}  // namespace

Group cyclic_group(std::uint32_t n) {
  if (n == 0) invalid("cyclic group of order 0");
  Group g;
  for (std::uint32_t a = 0; a < n; ++a) g.elements.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  g.table.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

Group symmetric_group_3() {
  std::vector<std::array<std::uint32_t, 3>> perms;
  std::array<std::uint32_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Group g;
  for (const auto& q : perms) g.elements.push_back("s" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  g.table.assign(6, std::vector<std::uint32_t>(6));
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b) {
      // (a * b)(i) = a(b(i))
      std::array<std::uint32_t, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.table[a][b] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

GeneratorSpec delooping(std::string name, Group group, std::vector<std::uint32_t> twist, std::uint32_t eta_element) {
  GeneratorSpec s;
  s.kind = Kind::delooping;
  s.name = std::move(name);
  s.group = std::move(group);
  s.twist = std::move(twist);
  s.eta_element = eta_element;
  return s;
}

GeneratorSpec discrete(std::string name, std::vector<std::uint32_t> permutation) {
  GeneratorSpec s;
  s.kind = Kind::discrete_involution;
  s.name = std::move(name);
  s.permutation = std::move(permutation);
  return s;
}

GeneratorSpec matrix(std::string name, std::uint32_t q, std::uint32_t max_dim) {
  GeneratorSpec s;
  s.kind = Kind::matrix;
  s.name = std::move(name);
  s.q = q;
  s.max_dim = max_dim;
  return s;
}

GeneratorSpec chain(std::string name, std::uint32_t length) {
  GeneratorSpec s;
  s.kind = Kind::poset_antitone;
  s.name = std::move(name);
  s.leq.assign(length, std::vector<bool>(length, false));
  s.antitone.resize(length);
  for (std::uint32_t i = 0; i < length; ++i) {
    s.antitone[i] = length - 1 - i;
    for (std::uint32_t j = i; j < length; ++j) s.leq[i][j] = true;
  }
  return s;
}

GeneratorSpec walking_iso(std::string name) {
  GeneratorSpec s;
  s.kind = Kind::walking_iso;
  s.name = std::move(name);
  return s;
}

GeneratorSpec product(std::string name, GeneratorSpec a, GeneratorSpec b) {
  GeneratorSpec s;
  s.kind = Kind::product;
  s.name = std::move(name);
  s.factors = {std::move(a), std::move(b)};
  return s;
}

Bundle generate(const GeneratorSpec& spec) {
  if (spec.name.empty()) invalid("generator spec needs a name");
  switch (spec.kind) {
    case Kind::delooping: return realize(spec, delooping_presentation(spec));
    case Kind::discrete_involution: return realize(spec, discrete_presentation(spec));
    case Kind::matrix: return realize(spec, matrix_presentation(spec));
    case Kind::poset_antitone: return realize(spec, poset_presentation(spec));
    case Kind::walking_iso: return realize(spec, walking_iso_presentation());
    case Kind::product: {
      if (spec.factors.size() != 2) invalid("product needs exactly two factors");
      const Bundle a = generate(spec.factors[0]);
      const Bundle b = generate(spec.factors[1]);
      return realize(spec, product_presentation(a, b));
    }
  }
  invalid("unknown generator kind");
}

std::vector<GeneratorSpec> fixture_specs() {
  return {
      delooping("One", cyclic_group(1)),
      walking_iso("Walk"),
      discrete("Swap2", {1, 0}),
      delooping("B3", cyclic_group(3)),
      delooping("B4", cyclic_group(4)),
      delooping("B4eta1", cyclic_group(4), {}, 1),
      delooping("BS3", symmetric_group_3()),
      matrix("M1F4", 2, 1),
      matrix("M2F4", 2, 2),
      discrete("Disc3", {2, 1, 0}),
      chain("Chain3", 3),
      product("B2xM1F4", delooping("B2", cyclic_group(2)), matrix("M1F4", 2, 1)),
  };
}

std::vector<Bundle> fixture_suite() {
  std::vector<Bundle> out;
  for (const auto& s : fixture_specs()) out.push_back(generate(s));
  return out;
}

Bundle fixture(const std::string& name) {
  for (const auto& s : fixture_specs())
    if (s.name == name) return generate(s);
  throw Error(Code::InvalidSpec, "unknown fixture " + name);
}

}  // namespace fincat::gens
