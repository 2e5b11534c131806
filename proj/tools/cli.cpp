#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fincat/dsl.hpp"
#include "fincat/gens.hpp"
#include "fincat/herm.hpp"
#include "json.hpp"

namespace fincat::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError {
  std::string message;
};

struct Verdict {
  std::string check;
  std::string subject;
  bool passed = false;
  std::string detail;
  json witness;  // null when there is nothing to show
};

struct Run {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, sha256
  std::vector<Verdict> verdicts;
  bool failed() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.passed; });
  }
};

struct Loaded {
  std::string path;
  dsl::Document doc;
};

Loaded load(const std::string& path, Run& run) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open"};
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  run.inputs.emplace_back(path, sha256_hex(text));
  auto parsed = dsl::parse(text);
  if (!parsed.ok()) {
    std::string msg;
    for (const auto& d : parsed.diagnostics) msg += (msg.empty() ? "" : "\n") + path + ":" + d.format();
    throw InputError{msg};
  }
  return {path, std::move(*parsed.document)};
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const char* kind,
                                        const std::string& path) {
  auto it = map.find(name);
  if (it == map.end()) throw InputError{path + ": no " + std::string(kind) + " named '" + name + "'"};
  return it->second;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("FINCAT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

// ---------------------------------------------------------------------------
// checks shared by several commands

void herm_checks(Run& run, const std::string& subject, const HermCategory& herm) {
  const auto dag = check_dagger(herm.category, herm.dagger.dag);
  run.verdicts.push_back({"herm-is-dagger", subject, dag.ok(), dag.ok() ? "" : dag.summary(), nullptr});
  const auto ind = is_indefinite(herm.dagger);
  Verdict v{"herm-is-indefinite", subject, ind.indefinite, "", nullptr};
  if (ind.counterexample) {
    v.detail = "object " + herm.category.object_name(ind.counterexample->first) + ", a = " +
               herm.category.morphism_name(ind.counterexample->second);
  }
  run.verdicts.push_back(std::move(v));
}

void involution_checks(Run& run, const std::string& subject, const AntiInvolutiveCategory& a) {
  herm_checks(run, subject, herm_completion(a));
  const auto counit = check_counit(a);
  run.verdicts.push_back({"counit-equivalence", subject, counit.ok(), counit.detail, nullptr});
  const auto tri = check_triangle_identity(a);
  run.verdicts.push_back({"triangle-identities", subject, tri.holds, tri.detail, nullptr});
  const auto transfer = cross_check_transfer_lemma(a);
  if (transfer.checked)
    run.verdicts.push_back({"transfer-lemma", subject, transfer.agree,
                            std::to_string(transfer.via_transfer.size()) + " transfer classes, " +
                                std::to_string(transfer.via_unitaries.size()) + " unitary classes",
                            nullptr});
}

void dagger_checks(Run& run, const std::string& subject, const DaggerStructure& d) {
  const auto u = unit_U(d);
  const bool equivalence = is_dagger_equivalence(d, u.herm.dagger, u.functor).ok();
  const bool indefinite = is_indefinite(d).indefinite;
  run.verdicts.push_back({"unit-criterion", subject, equivalence == indefinite,
                          std::string("unit is ") + (equivalence ? "" : "not ") + "a dagger equivalence; base is " +
                              (indefinite ? "" : "not ") + "indefinite",
                          nullptr});
  const auto tri = check_triangle_identity(d);
  run.verdicts.push_back({"triangle-identities-dagger", subject, tri.holds, tri.detail, nullptr});
  const auto tp = check_Tp_biequivalence(d);
  run.verdicts.push_back({"positivity-biequivalence", subject, tp.ok(), tp.detail, nullptr});
}

// ---------------------------------------------------------------------------

int emit(const Run& run, bool as_json, std::optional<double> ms, std::ostream& out) {
  if (as_json) {
    json j;
    j["schema"] = kSchema;
    j["command"] = run.command;
    j["inputs"] = json::array();
    for (const auto& [name, digest] : run.inputs) j["inputs"].push_back({{"name", name}, {"sha256", digest}});
    j["verdicts"] = json::array();
    for (const auto& v : run.verdicts) {
      json jv{{"check", v.check}, {"subject", v.subject}, {"passed", v.passed}};
      if (!v.detail.empty()) jv["detail"] = v.detail;
      if (!v.witness.is_null()) jv["witness"] = v.witness;
      j["verdicts"].push_back(std::move(jv));
    }
    j["passed"] = !run.failed();
    if (ms) j["timing_ms"] = *ms;
    out << j.dump(2) << "\n";
  } else {
    out << "command: " << run.command << "\n";
    for (const auto& [name, digest] : run.inputs) out << "input: " << name << " sha256=" << digest << "\n";
    for (const auto& v : run.verdicts) {
      out << (v.passed ? "PASS " : "FAIL ") << v.check << " [" << v.subject << "]";
      if (!v.detail.empty()) out << ": " << v.detail;
      out << "\n";
      if (!v.witness.is_null()) out << "  " << v.witness.dump() << "\n";
    }
    if (ms) out << "timing: " << std::fixed << std::setprecision(1) << *ms << " ms\n";
  }
  return run.failed() ? kCheckFailed : kPass;
}

std::map<std::string, std::string> key_values(const std::vector<std::string>& params) {
  std::map<std::string, std::string> kv;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw InputError{"parameter '" + p + "' is not key=value"};
    kv[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return kv;
}

std::uint32_t number(const std::map<std::string, std::string>& kv, const std::string& key, std::uint32_t fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw InputError{"parameter " + key + " must be a non-negative integer"};
  }
}

std::vector<std::uint32_t> number_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw InputError{"'" + s + "' is not a comma-separated list of integers"};
    }
  }
  return out;
}

gens::GeneratorSpec spec_from(const std::string& kind, const std::vector<std::string>& params) {
  const auto kv = key_values(params);
  auto name = [&](const std::string& fallback) {
    auto it = kv.find("name");
    return it == kv.end() ? fallback : it->second;
  };
  if (kind == "fixture") {
    auto it = kv.find("name");
    if (it == kv.end()) throw InputError{"gen fixture needs name=NAME"};
    for (const auto& s : gens::fixture_specs())
      if (s.name == it->second) return s;
    throw InputError{"unknown fixture '" + it->second + "'"};
  }
  if (kind == "delooping") {
    const bool s3 = kv.count("group") && kv.at("group") == "S3";
    if (kv.count("group") && !s3) throw InputError{"group must be S3 (or use n=N for a cyclic group)"};
    const std::uint32_t n = number(kv, "n", 1);
    auto group = s3 ? gens::symmetric_group_3() : gens::cyclic_group(n);
    std::vector<std::uint32_t> twist;
    if (kv.count("twist")) twist = number_list(kv.at("twist"));
    return gens::delooping(name(s3 ? "BS3" : "B" + std::to_string(n)), std::move(group), std::move(twist),
                           number(kv, "eta", 0));
  }
  if (kind == "discrete") {
    if (!kv.count("perm")) throw InputError{"gen discrete needs perm=i,j,..."};
    return gens::discrete(name("Disc"), number_list(kv.at("perm")));
  }
  if (kind == "matrix") {
    const std::uint32_t q = number(kv, "q", 2), dim = number(kv, "maxdim", 1);
    return gens::matrix(name("M" + std::to_string(dim) + "F" + std::to_string(q * q)), q, dim);
  }
  if (kind == "chain") {
    const std::uint32_t len = number(kv, "length", 3);
    return gens::chain(name("Chain" + std::to_string(len)), len);
  }
  if (kind == "walking-iso") return gens::walking_iso(name("Walk"));
  throw InputError{"unknown generator kind '" + kind + "' (delooping, discrete, matrix, chain, walking-iso, fixture)"};
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite categories with dagger and involutive structure"};
  app.name("fincat");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, timing = false;
  std::uint64_t cap = default_cap();
  app.add_flag("--json", as_json, "Machine-readable report (schema " + std::string(kSchema) + ")");
  app.add_flag("--timing", timing, "Include wall-clock timing in the report");

  std::string file, inv_name, pos_name, dagger_name, from, to, functor_name, name, source, target, kind, output;
  std::vector<std::string> params, files;
  bool dagger_mode = false, involutive_mode = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate every declaration");
  validate->add_option("file", file)->required();

  auto* fixedpoints = app.add_subcommand("fixedpoints", "List Hermitian fixed points of an involution");
  fixedpoints->add_option("file", file)->required();
  fixedpoints->add_option("--inv", inv_name)->required();

  auto* herm = app.add_subcommand("herm", "Build the Hermitian completion and check it");
  herm->add_option("file", file)->required();
  herm->add_option("--inv", inv_name)->required();
  herm->add_option("--positivity", pos_name);

  auto* pi0u = app.add_subcommand("pi0u", "Unitary isomorphism classes of a dagger category");
  pi0u->add_option("file", file)->required();
  pi0u->add_option("--dagger", dagger_name)->required();

  auto* indefinite = app.add_subcommand("indefinite", "Check that self-adjoint automorphisms factor");
  indefinite->add_option("file", file)->required();
  indefinite->add_option("--dagger", dagger_name)->required();

  auto* equiv = app.add_subcommand("equiv", "Check that a functor is an equivalence");
  equiv->add_option("file", file)->required();
  equiv->add_option("--from", from)->required();
  equiv->add_option("--to", to)->required();
  equiv->add_option("--functor", functor_name)->required();
  auto* dflag = equiv->add_flag("--dagger", dagger_mode, "--from/--to name daggers");
  auto* iflag = equiv->add_flag("--involutive", involutive_mode, "--from/--to name involutions");
  dflag->excludes(iflag);

  auto* triangles = app.add_subcommand("triangles", "Strict triangle identities for a dagger or involution");
  triangles->add_option("file", file)->required();
  triangles->add_option("--name", name)->required();

  auto* corollary = app.add_subcommand("corollary", "Dagger functors among fixed points of a functor category");
  corollary->add_option("file", file)->required();
  corollary->add_option("--source", source)->required();
  corollary->add_option("--target", target)->required();
  corollary->add_option("--cap", cap, "Enumeration cap (default 1000000 or FINCAT_CAP)");

  auto* gen = app.add_subcommand("gen", "Write a generated fixture as a .fincat file");
  gen->add_option("kind", kind)->required();
  gen->add_option("params", params, "key=value parameters");
  gen->add_option("-o,--output", output)->required();

  auto* report = app.add_subcommand("report", "Run the theorem checks on files or on the built-in fixtures");
  report->add_option("files", files);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  Run r;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*validate) {
      r.command = "validate";
      const auto l = load(file, r);
      const auto& d = l.doc;
      r.verdicts.push_back({"parse", file, true,
                            std::to_string(d.categories.size()) + " categories, " + std::to_string(d.daggers.size()) +
                                " daggers, " + std::to_string(d.involutions.size()) + " involutions, " +
                                std::to_string(d.positivities.size()) + " positivity notions, " +
                                std::to_string(d.functors.size()) + " functors",
                            nullptr});
    } else if (*fixedpoints) {
      r.command = "fixedpoints";
      const auto l = load(file, r);
      const auto& a = lookup(l.doc.involutions, inv_name, "involution", file).involution;
      json list = json::array();
      for (const auto& p : enumerate_fixed_points(a))
        list.push_back({{"object", a.base.object_name(p.object)}, {"form", a.base.morphism_name(p.form)}});
      r.verdicts.push_back({"fixed-points", inv_name, true, std::to_string(list.size()) + " fixed points", list});
    } else if (*herm) {
      r.command = "herm";
      const auto l = load(file, r);
      const auto& a = lookup(l.doc.involutions, inv_name, "involution", file).involution;
      if (!pos_name.empty()) {
        const auto& p = lookup(l.doc.positivities, pos_name, "positivity notion", file);
        if (p.involution != inv_name)
          throw InputError{file + ": positivity " + pos_name + " is declared on " + p.involution};
        // only the full completion is guaranteed to be indefinite, so that is informational here
        const auto h = herm_P(a, p.notion);
        const auto dag = check_dagger(h.category, h.dagger.dag);
        const auto ind = is_indefinite(h.dagger);
        r.verdicts.push_back({"herm-is-dagger", inv_name + "/" + pos_name, dag.ok(),
                              std::to_string(h.category.object_count()) + " objects, " +
                                  (ind.indefinite ? "indefinite" : "not indefinite") +
                                  (dag.ok() ? "" : "; " + dag.summary()),
                              nullptr});
      } else {
        const auto h = herm_completion(a);
        herm_checks(r, inv_name, h);
        if (r.verdicts.front().detail.empty())
          r.verdicts.front().detail = std::to_string(h.category.object_count()) + " objects, " +
                                      std::to_string(h.category.morphism_count()) + " morphisms";
      }
    } else if (*pi0u) {
      r.command = "pi0u";
      const auto l = load(file, r);
      const auto& d = lookup(l.doc.daggers, dagger_name, "dagger", file).dagger;
      const auto classes = unitary_iso_classes(d);
      json list = json::array();
      for (const auto& cls : classes.classes) {
        json names = json::array();
        for (auto x : cls) names.push_back(d.base.object_name(x));
        list.push_back(names);
      }
      r.verdicts.push_back({"unitary-classes", dagger_name, true, std::to_string(classes.size()) + " classes", list});
    } else if (*indefinite) {
      r.command = "indefinite";
      const auto l = load(file, r);
      const auto& d = lookup(l.doc.daggers, dagger_name, "dagger", file).dagger;
      const auto v = is_indefinite(d);
      Verdict out_v{"indefinite", dagger_name, v.indefinite, "", nullptr};
      if (v.counterexample) {
        out_v.detail = "counterexample: object " + d.base.object_name(v.counterexample->first) +
                       ", a = " + d.base.morphism_name(v.counterexample->second);
        out_v.witness = {{"object", d.base.object_name(v.counterexample->first)},
                         {"a", d.base.morphism_name(v.counterexample->second)}};
      }
      r.verdicts.push_back(std::move(out_v));
    } else if (*equiv) {
      r.command = "equiv";
      const auto l = load(file, r);
      const auto& f = lookup(l.doc.functors, functor_name, "functor", file);
      if (dagger_mode) {
        const auto& d1 = lookup(l.doc.daggers, from, "dagger", file);
        const auto& d2 = lookup(l.doc.daggers, to, "dagger", file);
        if (d1.category != f.source || d2.category != f.target)
          throw InputError{file + ": functor " + functor_name + " does not run between the categories of " + from +
                           " and " + to};
        if (!is_dagger_functor(d1.dagger, d2.dagger, f.functor)) {
          r.verdicts.push_back({"dagger-functor", functor_name, false, "does not commute with the daggers", nullptr});
        } else {
          const auto v = is_dagger_equivalence(d1.dagger, d2.dagger, f.functor);
          r.verdicts.push_back({"dagger-equivalence", functor_name, v.ok(), v.detail, nullptr});
        }
      } else if (involutive_mode) {
        const auto& i1 = lookup(l.doc.involutions, from, "involution", file);
        const auto& i2 = lookup(l.doc.involutions, to, "involution", file);
        if (i1.category != f.source || i2.category != f.target)
          throw InputError{file + ": functor " + functor_name + " does not run between the categories of " + from +
                           " and " + to};
        if (f.phi.empty()) throw InputError{file + ": functor " + functor_name + " has no phi section"};
        const InvolutiveFunctor fi{i1.involution, i2.involution, f.functor, f.phi};
        const auto check = check_involutive_functor(fi);
        r.verdicts.push_back({"involutive-functor", functor_name, check.ok(), check.ok() ? "" : check.summary(), nullptr});
        if (check.ok()) {
          const auto v = is_equivalence(f.functor);
          r.verdicts.push_back({"equivalence", functor_name, v.ok(), v.detail, nullptr});
          if (v.ok()) {
            const auto& q = *v.quasi_inverse;
            const auto adj = promote_to_adjoint_equivalence(f.functor, q.backward, q.alpha, q.beta);
            const auto inv = involutive_inverse_of_equivalence(fi, adj);
            Report all = check_involutive_functor(inv.backward);
            all.append(check_involutive_nat_trans(inv.alpha));
            all.append(check_involutive_nat_trans(inv.beta));
            json psi = json::object();
            for (ObjId y = 0; y < inv.backward.phi.size(); ++y)
              psi[i2.involution.base.object_name(y)] = i1.involution.base.morphism_name(inv.backward.phi[y]);
            r.verdicts.push_back({"involutive-inverse", functor_name, all.ok(), all.ok() ? "" : all.summary(), psi});
          }
        }
      } else {
        if (l.doc.categories.count(from) == 0 || l.doc.categories.count(to) == 0 || f.source != from ||
            f.target != to)
          throw InputError{file + ": functor " + functor_name + " does not run from " + from + " to " + to};
        const auto v = is_equivalence(f.functor);
        r.verdicts.push_back({"equivalence", functor_name, v.ok(), v.detail, nullptr});
      }
    } else if (*triangles) {
      r.command = "triangles";
      const auto l = load(file, r);
      if (auto it = l.doc.involutions.find(name); it != l.doc.involutions.end()) {
        const auto t = check_triangle_identity(it->second.involution);
        r.verdicts.push_back({"triangle-identities", name, t.holds, t.detail, nullptr});
      } else if (auto dt = l.doc.daggers.find(name); dt != l.doc.daggers.end()) {
        const auto t = check_triangle_identity(dt->second.dagger);
        r.verdicts.push_back({"triangle-identities-dagger", name, t.holds, t.detail, nullptr});
      } else {
        throw InputError{file + ": no involution or dagger named '" + name + "'"};
      }
    } else if (*corollary) {
      r.command = "corollary";
      const auto l = load(file, r);
      const auto& d1 = lookup(l.doc.daggers, source, "dagger", file).dagger;
      const auto& d2 = lookup(l.doc.daggers, target, "dagger", file).dagger;
      const auto c = dagger_functors_vs_fixed_points(d1, d2, cap);
      auto indices = [](const std::vector<std::size_t>& v) {
        json a = json::array();
        for (auto i : v) a.push_back(i);
        return a;
      };
      json w{{"functors", c.functors},
             {"transformations", c.transformations},
             {"fixed_points", c.fixed_points.size()},
             {"dagger_functor_points", indices(c.dagger_functor_points)},
             {"essential_image", indices(c.essential_image)},
             {"positivity_preserving", indices(c.positivity_preserving)}};
      r.verdicts.push_back({"dagger-functor-corollary", source + " -> " + target, c.ok(),
                            std::to_string(c.fixed_points.size()) + " fixed points, " +
                                std::to_string(c.dagger_functor_points.size()) + " dagger functors",
                            w});
    } else if (*gen) {
      r.command = "gen";
      const auto bundle = gens::generate(spec_from(kind, params));
      const std::string text = dsl::print(dsl::from_bundle(bundle));
      std::ofstream o(output, std::ios::binary);
      if (!o) throw InputError{output + ": cannot write"};
      o << text;
      r.inputs.emplace_back(output, sha256_hex(text));
      r.verdicts.push_back({"generated", bundle.name, true,
                            std::to_string(bundle.category.object_count()) + " objects, " +
                                std::to_string(bundle.category.morphism_count()) + " morphisms",
                            nullptr});
    } else if (*report) {
      r.command = "report";
      if (files.empty()) {
        for (const auto& b : gens::fixture_suite()) {
          r.inputs.emplace_back("fixture:" + b.name, sha256_hex(dsl::print(dsl::from_bundle(b))));
          involution_checks(r, b.name + "/" + b.involution_name, *b.involution);
          if (b.dagger) dagger_checks(r, b.name + "/" + b.dagger_name, *b.dagger);
        }
      } else {
        for (const auto& path : files) {
          const auto l = load(path, r);
          for (const auto& [n, decl] : l.doc.involutions) involution_checks(r, path + ":" + n, decl.involution);
          for (const auto& [n, decl] : l.doc.daggers) dagger_checks(r, path + ":" + n, decl.dagger);
        }
      }
    }
  } catch (const InputError& e) {
    err << e.message << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  std::optional<double> ms;
  if (timing) ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return emit(r, as_json, ms, out);
}

}  // namespace fincat::cli
