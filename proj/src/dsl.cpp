#include "fincat/dsl.hpp"

#include "fincat/herm.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

namespace fincat::dsl {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '*';
}

enum class Tok { Ident, LBrace, RBrace, Colon, Semi, Comma, Dot, Eq, Arrow, FatArrow, End };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Eq: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

struct Failure {
  Diagnostic diagnostic;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    auto two = [&](char next) { return i + 1 < text.size() && text[i + 1] == next; };
    Tok t;
    std::size_t len = 1;
    switch (c) {
      case '{': t = Tok::LBrace; break;
      case '}': t = Tok::RBrace; break;
      case ':': t = Tok::Colon; break;
      case ';': t = Tok::Semi; break;
      case ',': t = Tok::Comma; break;
      case '.': t = Tok::Dot; break;
      case '=':
        if (two('>')) {
          t = Tok::FatArrow;
          len = 2;
        } else {
          t = Tok::Eq;
        }
        break;
      case '-':
        if (two('>')) {
          t = Tok::Arrow;
          len = 2;
          break;
        }
        [[fallthrough]];
      default: {
        std::string shown = static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f
                                ? "byte " + std::to_string(static_cast<unsigned char>(c))
                                : std::string("'") + c + "'";
        throw Failure{{Code::LexError, l, cl, "unexpected character " + shown}};
      }
    }
    out.push_back({t, std::string(text.substr(i, len)), l, cl});
    advance(len);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct Name {
  std::string text;
  std::size_t line, column;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ParseResult run() {
    while (peek().kind != Tok::End) {
      const Token& kw = expect(Tok::Ident, "a declaration keyword");
      if (kw.text == "category")
        category(kw);
      else if (kw.text == "dagger")
        dagger(kw);
      else if (kw.text == "involution")
        involution(kw);
      else if (kw.text == "positivity")
        positivity(kw);
      else if (kw.text == "functor")
        functor(kw);
      else
        fail(kw, Code::ParseError, "unknown declaration '" + kw.text + "'");
    }
    ParseResult r;
    r.diagnostics = diags_;
    if (diags_.empty()) r.document = std::move(doc_);
    return r;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Document doc_;
  std::vector<Diagnostic> diags_;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const Token& at, Code code, std::string message) {
    throw Failure{{code, at.line, at.column, std::move(message)}};
  }
  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind)
      fail(t, Code::ParseError, "expected " + what + ", found " + (t.kind == Tok::Ident ? "'" + t.text + "'" : tok_name(t.kind)));
    return next();
  }
  Name name(const std::string& what) {
    const Token& t = expect(Tok::Ident, what);
    return {t.text, t.line, t.column};
  }
  void keyword(const std::string& word) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text != word) fail(t, Code::ParseError, "expected '" + word + "'");
    next();
  }
  void separator() { accept(Tok::Comma); }

  void report(const Name& at, Code code, std::string message) {
    diags_.push_back({code, at.line, at.column, std::move(message)});
  }
  void report_validation(const Name& at, const std::string& what, const Report& r) {
    std::string codes;
    for (const auto& v : r.items()) {
      if (codes.find(to_string(v.code)) != std::string::npos) continue;
      if (!codes.empty()) codes += ",";
      codes += to_string(v.code);
    }
    report(at, Code::ValidationError, what + " failed validation [" + codes + "]: " + r.summary());
  }
  template <class Map>
  bool fresh(const Map& map, const Name& n, const char* kind) {
    if (!map.count(n.text)) return true;
    report(n, Code::ParseError, std::string("duplicate ") + kind + " '" + n.text + "'");
    return false;
  }

  // pairs "a -> b" or "a => b" until ';' or '}'
  std::vector<std::pair<Name, Name>> pairs(Tok arrow, bool stop_at_semi) {
    std::vector<std::pair<Name, Name>> out;
    while (peek().kind == Tok::Ident) {
      Name a = name("an identifier");
      expect(arrow, tok_name(arrow));
      Name b = name("an identifier");
      out.emplace_back(std::move(a), std::move(b));
      separator();
    }
    if (stop_at_semi) expect(Tok::Semi, "';'");
    return out;
  }

  const FiniteCategory* find_category(const Name& n) {
    auto it = doc_.categories.find(n.text);
    if (it != doc_.categories.end()) return &it->second;
    report(n, Code::UnresolvedReference, "unknown category '" + n.text + "'");
    return nullptr;
  }

  std::optional<MorId> morphism(const FiniteCategory& c, const Name& n) {
    if (auto m = c.find_morphism(n.text)) return m;
    report(n, Code::UnresolvedReference, "unknown morphism '" + n.text + "'");
    return std::nullopt;
  }
  std::optional<ObjId> object(const FiniteCategory& c, const Name& n) {
    if (auto x = c.find_object(n.text)) return x;
    report(n, Code::UnresolvedReference, "unknown object '" + n.text + "'");
    return std::nullopt;
  }

  void category(const Token& kw) {
    Name cname = name("a category name");
    expect(Tok::LBrace, "'{'");
    std::vector<Name> objects;
    struct MorDecl {
      Name name, dom, cod;
    };
    std::vector<MorDecl> morphisms;
    struct Comp {
      Name g, f, r;
    };
    std::vector<Comp> comps;
    std::vector<std::pair<Name, Name>> identities;
    std::set<std::string> seen_sections;
    while (!accept(Tok::RBrace)) {
      const Token& sec = expect(Tok::Ident, "'objects', 'morphisms', 'identities', 'compose' or '}'");
      if (!seen_sections.insert(sec.text).second) fail(sec, Code::ParseError, "repeated section '" + sec.text + "'");
      expect(Tok::Colon, "':'");
      if (sec.text == "objects") {
        while (peek().kind == Tok::Ident) {
          objects.push_back(name("an object"));
          separator();
        }
      } else if (sec.text == "morphisms") {
        while (peek().kind == Tok::Ident) {
          Name m = name("a morphism");
          expect(Tok::Colon, "':'");
          Name d = name("a domain");
          expect(Tok::Arrow, "'->'");
          Name c = name("a codomain");
          morphisms.push_back({std::move(m), std::move(d), std::move(c)});
          separator();
        }
      } else if (sec.text == "identities") {
        identities = pairs(Tok::FatArrow, false);
      } else if (sec.text == "compose") {
        while (peek().kind == Tok::Ident) {
          Name g = name("a morphism");
          expect(Tok::Dot, "'.'");
          Name f = name("a morphism");
          expect(Tok::Eq, "'='");
          Name r = name("a morphism");
          comps.push_back({std::move(g), std::move(f), std::move(r)});
          separator();
        }
      } else {
        fail(sec, Code::ParseError, "unknown category section '" + sec.text + "'");
      }
      expect(Tok::Semi, "';'");
    }
    (void)kw;
    if (!fresh(doc_.categories, cname, "category")) return;

    const std::size_t before = diags_.size();
    std::set<std::string> object_names, morphism_names;
    for (const auto& o : objects)
      if (!object_names.insert(o.text).second) report(o, Code::ParseError, "duplicate object '" + o.text + "'");
    RawCategory raw;
    raw.objects.reserve(objects.size());
    for (const auto& o : objects) raw.objects.push_back(o.text);
    for (const auto& m : morphisms) morphism_names.insert(m.name.text);
    std::set<std::string> explicit_unit;
    for (const auto& [o, m] : identities) {
      if (!object_names.count(o.text)) report(o, Code::UnresolvedReference, "unknown object '" + o.text + "'");
      if (!morphism_names.count(m.text)) report(m, Code::UnresolvedReference, "unknown morphism '" + m.text + "'");
      if (!explicit_unit.insert(o.text).second) report(o, Code::ParseError, "repeated identity for '" + o.text + "'");
      raw.identities.emplace_back(o.text, m.text);
    }
    for (const auto& o : objects)
      if (!explicit_unit.count(o.text) && !morphism_names.count("id_" + o.text))
        raw.morphisms.push_back({"id_" + o.text, o.text, o.text});
    std::set<std::string> declared;
    for (const auto& m : morphisms) {
      if (!declared.insert(m.name.text).second) report(m.name, Code::ParseError, "duplicate morphism '" + m.name.text + "'");
      for (const Name* end : {&m.dom, &m.cod})
        if (!object_names.count(end->text)) report(*end, Code::UnresolvedReference, "unknown object '" + end->text + "'");
      raw.morphisms.push_back({m.name.text, m.dom.text, m.cod.text});
    }
    for (const auto& o : objects)
      if (!explicit_unit.count(o.text)) morphism_names.insert("id_" + o.text);
    for (const auto& c : comps) {
      for (const Name* n : {&c.g, &c.f, &c.r})
        if (!morphism_names.count(n->text)) report(*n, Code::UnresolvedReference, "unknown morphism '" + n->text + "'");
      raw.compositions.push_back({c.g.text, c.f.text, c.r.text});
    }
    if (diags_.size() != before) return;
    auto built = validate_category(raw);
    if (!built.ok()) {
      report_validation(cname, "category " + cname.text, built.report);
      return;
    }
    doc_.categories.emplace(cname.text, *built.value);
  }

  void dagger(const Token&) {
    Name dname = name("a dagger name");
    keyword("on");
    Name cname = name("a category name");
    expect(Tok::LBrace, "'{'");
    auto entries = pairs(Tok::Arrow, false);
    accept(Tok::Semi);
    expect(Tok::RBrace, "'}'");
    if (!fresh(doc_.daggers, dname, "dagger")) return;
    const FiniteCategory* c = find_category(cname);
    if (!c) return;
    const std::size_t before = diags_.size();
    std::vector<std::pair<std::string, std::string>> raw;
    for (const auto& [a, b] : entries) {
      morphism(*c, a);
      morphism(*c, b);
      raw.emplace_back(a.text, b.text);
    }
    if (diags_.size() != before) return;
    auto d = validate_dagger(*c, raw);
    if (!d.ok()) {
      report_validation(dname, "dagger " + dname.text, d.report);
      return;
    }
    doc_.daggers.emplace(dname.text, DaggerDecl{cname.text, *d.value});
  }

  void involution(const Token&) {
    Name iname = name("an involution name");
    keyword("on");
    Name cname = name("a category name");
    expect(Tok::LBrace, "'{'");
    keyword("d");
    expect(Tok::Colon, "':'");
    auto obj_map = pairs(Tok::Arrow, true);
    auto mor_map = pairs(Tok::Arrow, true);
    std::vector<std::pair<Name, Name>> eta_entries;
    if (peek().kind == Tok::Ident && peek().text == "eta") {
      next();
      expect(Tok::Colon, "':'");
      eta_entries = pairs(Tok::FatArrow, true);
    }
    expect(Tok::RBrace, "'}'");
    if (!fresh(doc_.involutions, iname, "involution")) return;
    const FiniteCategory* c = find_category(cname);
    if (!c) return;
    const std::size_t before = diags_.size();
    std::vector<ObjId> om(c->object_count(), kNoObject);
    std::vector<MorId> mm(c->morphism_count(), kNoMorphism);
    std::vector<MorId> eta(c->object_count(), kNoMorphism);
    for (const auto& [a, b] : obj_map) {
      auto x = object(*c, a), y = object(*c, b);
      if (x && y) om[*x] = *y;
    }
    for (const auto& [a, b] : mor_map) {
      auto f = morphism(*c, a), g = morphism(*c, b);
      if (f && g) mm[*f] = *g;
    }
    for (const auto& [a, b] : eta_entries) {
      auto x = object(*c, a);
      auto m = morphism(*c, b);
      if (x && m) eta[*x] = *m;
    }
    if (diags_.size() != before) return;
    Report missing;
    for (ObjId x = 0; x < om.size(); ++x)
      if (om[x] == kNoObject) missing.add(Code::NotAFunctor, "d is undefined on object " + c->object_name(x));
    if (missing.ok()) {
      for (ObjId x = 0; x < om.size(); ++x) {
        if (mm[c->identity(x)] == kNoMorphism) mm[c->identity(x)] = c->identity(om[x]);
        if (eta[x] == kNoMorphism) {
          if (om[om[x]] == x)
            eta[x] = c->identity(x);
          else
            missing.add(Code::EtaNotIso, "eta is undefined on object " + c->object_name(x));
        }
      }
      for (MorId m = 0; m < mm.size(); ++m)
        if (mm[m] == kNoMorphism) missing.add(Code::NotAFunctor, "d is undefined on morphism " + c->morphism_name(m));
    }
    if (!missing.ok()) {
      report_validation(iname, "involution " + iname.text, missing);
      return;
    }
    auto a = validate_anti_involution(*c, contravariant_functor(*c, std::move(om), std::move(mm)), std::move(eta));
    if (!a.ok()) {
      report_validation(iname, "involution " + iname.text, a.report);
      return;
    }
    doc_.involutions.emplace(iname.text, InvolutionDecl{cname.text, *a.value});
  }

  void positivity(const Token&) {
    Name pname = name("a positivity name");
    keyword("on");
    Name iname = name("an involution name");
    expect(Tok::LBrace, "'{'");
    std::vector<std::pair<Name, std::vector<Name>>> entries;
    while (peek().kind == Tok::Ident) {
      Name obj = name("an object");
      expect(Tok::Colon, "':'");
      expect(Tok::LBrace, "'{'");
      std::vector<Name> forms;
      while (peek().kind == Tok::Ident) {
        forms.push_back(name("a morphism"));
        separator();
      }
      expect(Tok::RBrace, "'}'");
      if (!accept(Tok::Comma)) accept(Tok::Semi);
      entries.emplace_back(std::move(obj), std::move(forms));
    }
    expect(Tok::RBrace, "'}'");
    if (!fresh(doc_.positivities, pname, "positivity")) return;
    auto it = doc_.involutions.find(iname.text);
    if (it == doc_.involutions.end()) {
      report(iname, Code::UnresolvedReference, "unknown involution '" + iname.text + "'");
      return;
    }
    const auto& a = it->second.involution;
    const std::size_t before = diags_.size();
    std::vector<std::vector<MorId>> sets(a.base.object_count());
    for (const auto& [obj, forms] : entries) {
      auto x = object(a.base, obj);
      for (const auto& f : forms) {
        auto m = morphism(a.base, f);
        if (x && m) sets[*x].push_back(*m);
      }
    }
    if (diags_.size() != before) return;
    auto p = validate_positivity(a, std::move(sets));
    if (!p.ok()) {
      report_validation(pname, "positivity " + pname.text, p.report);
      return;
    }
    doc_.positivities.emplace(pname.text, PositivityDecl{iname.text, *p.value});
  }

  void functor(const Token&) {
    Name fname = name("a functor name");
    expect(Tok::Colon, "':'");
    Name sname = name("a source category");
    expect(Tok::Arrow, "'->'");
    Name tname = name("a target category");
    expect(Tok::LBrace, "'{'");
    std::vector<std::pair<Name, Name>> obj_map, mor_map, phi_map;
    bool has_phi = false;
    std::set<std::string> seen_sections;
    while (!accept(Tok::RBrace)) {
      const Token& sec = expect(Tok::Ident, "'objects', 'morphisms', 'phi' or '}'");
      if (!seen_sections.insert(sec.text).second) fail(sec, Code::ParseError, "repeated section '" + sec.text + "'");
      expect(Tok::Colon, "':'");
      if (sec.text == "objects")
        obj_map = pairs(Tok::Arrow, true);
      else if (sec.text == "morphisms")
        mor_map = pairs(Tok::Arrow, true);
      else if (sec.text == "phi") {
        phi_map = pairs(Tok::FatArrow, true);
        has_phi = true;
      } else
        fail(sec, Code::ParseError, "unknown functor section '" + sec.text + "'");
    }
    if (!fresh(doc_.functors, fname, "functor")) return;
    const FiniteCategory* s = find_category(sname);
    const FiniteCategory* t = find_category(tname);
    if (!s || !t) return;
    const std::size_t before = diags_.size();
    FunctorData f{*s, *t, std::vector<ObjId>(s->object_count(), kNoObject),
                  std::vector<MorId>(s->morphism_count(), kNoMorphism)};
    for (const auto& [a, b] : obj_map) {
      auto x = object(*s, a), y = object(*t, b);
      if (x && y) f.object_map[*x] = *y;
    }
    for (const auto& [a, b] : mor_map) {
      auto m = morphism(*s, a), n = morphism(*t, b);
      if (m && n) f.morphism_map[*m] = *n;
    }
    std::vector<MorId> phi;
    if (has_phi) {
      phi.assign(s->object_count(), kNoMorphism);
      for (const auto& [a, b] : phi_map) {
        auto x = object(*s, a);
        auto m = morphism(*t, b);
        if (x && m) phi[*x] = *m;
      }
    }
    if (diags_.size() != before) return;
    Report missing;
    for (ObjId x = 0; x < s->object_count(); ++x) {
      if (f.object_map[x] == kNoObject) {
        missing.add(Code::NotAFunctor, "undefined on object " + s->object_name(x));
        continue;
      }
      if (f.morphism_map[s->identity(x)] == kNoMorphism) f.morphism_map[s->identity(x)] = t->identity(f.object_map[x]);
      if (has_phi && phi[x] == kNoMorphism) missing.add(Code::NotNatural, "phi is undefined on object " + s->object_name(x));
    }
    for (MorId m = 0; m < s->morphism_count(); ++m)
      if (f.morphism_map[m] == kNoMorphism) missing.add(Code::NotAFunctor, "undefined on morphism " + s->morphism_name(m));
    if (!missing.ok()) {
      report_validation(fname, "functor " + fname.text, missing);
      return;
    }
    auto v = validate_functor(std::move(f));
    if (!v.ok()) {
      report_validation(fname, "functor " + fname.text, v.report);
      return;
    }
    doc_.functors.emplace(fname.text, FunctorDecl{sname.text, tname.text, *v.value, std::move(phi)});
  }
};

void require_identifier(const std::string& s, const char* what) {
  if (!is_identifier(s)) throw Error(Code::ValidationError, std::string(what) + " '" + s + "' is not a DSL identifier");
}

void print_list(std::ostringstream& out, const char* header, const std::vector<std::string>& items) {
  out << "  " << header << ":";
  if (items.size() <= 1) {
    for (const auto& i : items) out << " " << i;
    out << ";\n";
    return;
  }
  out << "\n";
  for (std::size_t k = 0; k < items.size(); ++k) out << "    " << items[k] << (k + 1 < items.size() ? ",\n" : ";\n");
}

void print_category(std::ostringstream& out, const std::string& name, const FiniteCategory& c) {
  require_identifier(name, "category name");
  out << "category " << name << " {\n";
  std::vector<std::string> objects, morphisms, units, comps;
  auto named_unit = [&](ObjId x) { return c.morphism_name(c.identity(x)) == "id_" + c.object_name(x); };
  for (ObjId x = 0; x < c.object_count(); ++x) {
    require_identifier(c.object_name(x), "object name");
    objects.push_back(c.object_name(x));
    if (!named_unit(x)) units.push_back(c.object_name(x) + " => " + c.morphism_name(c.identity(x)));
  }
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const std::string n = c.morphism_name(m);
    require_identifier(n, "morphism name");
    // an auto-declared identity lands first in its hom-set, so it can be left out there
    if (c.is_identity(m) && named_unit(c.dom(m)) && c.hom(c.dom(m), c.dom(m)).first() == m) continue;
    morphisms.push_back(n + " : " + c.object_name(c.dom(m)) + " -> " + c.object_name(c.cod(m)));
  }
  for (MorId g = 0; g < c.morphism_count(); ++g) {
    if (c.is_identity(g)) continue;
    for (ObjId x = 0; x < c.object_count(); ++x)
      for (MorId f : c.hom(x, c.dom(g))) {
        if (c.is_identity(f)) continue;
        comps.push_back(c.morphism_name(g) + " . " + c.morphism_name(f) + " = " + c.morphism_name(c.compose(g, f)));
      }
  }
  print_list(out, "objects", objects);
  if (!morphisms.empty()) print_list(out, "morphisms", morphisms);
  if (!units.empty()) print_list(out, "identities", units);
  if (!comps.empty()) print_list(out, "compose", comps);
  out << "}\n";
}

}  // namespace

std::string Diagnostic::format() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + std::string(to_string(code)) + ": " + message;
}

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), ident_char);
}

ParseResult parse(std::string_view text) {
  try {
    return Parser(lex(text)).run();
  } catch (const Failure& f) {
    ParseResult r;
    r.diagnostics.push_back(f.diagnostic);
    return r;
  }
}

std::string print(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  auto gap = [&] {
    if (!first) out << "\n";
    first = false;
  };
  for (const auto& [name, c] : doc.categories) {
    gap();
    print_category(out, name, c);
  }
  for (const auto& [name, d] : doc.daggers) {
    gap();
    require_identifier(name, "dagger name");
    const auto& c = d.dagger.base;
    std::vector<std::string> items;
    for (MorId m = 0; m < c.morphism_count(); ++m) {
      const MorId t = d.dagger(m);
      if (t < m || (t == m && c.is_identity(m))) continue;
      items.push_back(c.morphism_name(m) + " -> " + c.morphism_name(t));
    }
    out << "dagger " << name << " on " << d.category << " {";
    if (items.empty()) {
      out << " }\n";
      continue;
    }
    out << "\n";
    for (std::size_t k = 0; k < items.size(); ++k) out << "  " << items[k] << (k + 1 < items.size() ? ",\n" : "\n");
    out << "}\n";
  }
  for (const auto& [name, decl] : doc.involutions) {
    gap();
    require_identifier(name, "involution name");
    const auto& a = decl.involution;
    const auto& c = a.base;
    std::vector<std::string> objs, mors, etas;
    for (ObjId x = 0; x < c.object_count(); ++x) {
      objs.push_back(c.object_name(x) + " -> " + c.object_name(a.d_obj(x)));
      if (a.eta[x] != c.identity(x)) etas.push_back(c.object_name(x) + " => " + c.morphism_name(a.eta[x]));
    }
    for (MorId m = 0; m < c.morphism_count(); ++m)
      if (!c.is_identity(m)) mors.push_back(c.morphism_name(m) + " -> " + c.morphism_name(a.d_mor(m)));
    out << "involution " << name << " on " << decl.category << " {\n";
    print_list(out, "d", objs);
    if (mors.empty()) {
      out << "    ;\n";
    } else {
      for (std::size_t k = 0; k < mors.size(); ++k) out << "    " << mors[k] << (k + 1 < mors.size() ? ",\n" : ";\n");
    }
    if (!etas.empty()) print_list(out, "eta", etas);
    out << "}\n";
  }
  for (const auto& [name, decl] : doc.positivities) {
    gap();
    require_identifier(name, "positivity name");
    const auto& inv = doc.involutions.at(decl.involution).involution;
    out << "positivity " << name << " on " << decl.involution << " {\n";
    for (ObjId x = 0; x < decl.notion.sets.size(); ++x) {
      out << "  " << inv.base.object_name(x) << ": {";
      for (MorId h : decl.notion.sets[x]) out << " " << inv.base.morphism_name(h);
      out << " }\n";
    }
    out << "}\n";
  }
  for (const auto& [name, decl] : doc.functors) {
    gap();
    require_identifier(name, "functor name");
    const auto& f = decl.functor;
    std::vector<std::string> objs, mors, phis;
    for (ObjId x = 0; x < f.source.object_count(); ++x) {
      objs.push_back(f.source.object_name(x) + " -> " + f.target.object_name(f.on_object(x)));
      if (!decl.phi.empty()) phis.push_back(f.source.object_name(x) + " => " + f.target.morphism_name(decl.phi[x]));
    }
    for (MorId m = 0; m < f.source.morphism_count(); ++m)
      if (!f.source.is_identity(m))
        mors.push_back(f.source.morphism_name(m) + " -> " + f.target.morphism_name(f.on_morphism(m)));
    out << "functor " << name << " : " << decl.source << " -> " << decl.target << " {\n";
    print_list(out, "objects", objs);
    if (!mors.empty()) print_list(out, "morphisms", mors);
    if (!decl.phi.empty()) print_list(out, "phi", phis);
    out << "}\n";
  }
  return out.str();
}

Document from_bundle(const gens::Bundle& bundle) {
  Document doc;
  doc.categories.emplace(bundle.name, bundle.category);
  if (bundle.dagger) doc.daggers.emplace(bundle.dagger_name, DaggerDecl{bundle.name, *bundle.dagger});
  if (bundle.involution)
    doc.involutions.emplace(bundle.involution_name, InvolutionDecl{bundle.name, *bundle.involution});
  return doc;
}

}  // namespace fincat::dsl
