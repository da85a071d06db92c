#include "radx/instance.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "radx/errors.hpp"

namespace radx {

namespace {

struct Value {
  std::string text;
  bool quoted = false;
  std::size_t line = 0;
};

using Table = std::map<std::string, Value>;

struct Document {
  std::map<std::string, Table> tables;
  std::vector<Table> generators;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return std::string(s.substr(a, b - a));
}

// Drops a trailing comment, respecting quoted strings.
std::string drop_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool is_bare_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

Document parse_document(std::string_view text) {
  const std::set<std::string> sections = {"base", "fq"};
  Document doc;
  Table* current = nullptr;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(drop_comment(raw));
    if (line.empty()) continue;
    if (line.rfind("[[", 0) == 0) {
      if (line.size() < 4 || line.substr(line.size() - 2) != "]]") fail(lineno, "malformed array table header");
      std::string name = strip(line.substr(2, line.size() - 4));
      if (name != "generator") fail(lineno, "unknown array table [[" + name + "]]");
      doc.generators.emplace_back();
      current = &doc.generators.back();
      continue;
    }
    if (line[0] == '[') {
      if (line.back() != ']') fail(lineno, "malformed table header");
      std::string name = strip(line.substr(1, line.size() - 2));
      if (!sections.count(name)) fail(lineno, "unknown section [" + name + "]");
      if (doc.tables.count(name)) fail(lineno, "duplicate section [" + name + "]");
      current = &doc.tables[name];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key = value");
    if (!current) fail(lineno, "key outside of any section");
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (!is_bare_key(key)) fail(lineno, "invalid key '" + key + "'");
    if (current->count(key)) fail(lineno, "duplicate key '" + key + "'");
    Value v;
    v.line = lineno;
    if (!val.empty() && val.front() == '"') {
      if (val.size() < 2 || val.back() != '"' || val.find('"', 1) != val.size() - 1)
        fail(lineno, "malformed string for '" + key + "'");
      v.text = val.substr(1, val.size() - 2);
      v.quoted = true;
    } else {
      if (val.empty()) fail(lineno, "missing value for '" + key + "'");
      v.text = val;
    }
    (*current)[key] = v;
  }
  return doc;
}

void reject_unknown(const Table& t, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : t)
    if (!allowed.count(k)) fail(v.line, "unknown key '" + k + "' in " + where);
}

u64 as_u64(const Value& v, const std::string& key) {
  if (v.text.empty()) fail(v.line, key + " must be a positive integer");
  for (char c : v.text)
    if (c < '0' || c > '9') fail(v.line, key + " must be a positive integer");
  u64 out = 0;
  try {
    out = std::stoull(v.text);
  } catch (const std::exception&) {
    fail(v.line, key + " is out of range");
  }
  if (out == 0) fail(v.line, key + " must be positive");
  return out;
}

Rat as_rat(const Value& v, const std::string& key) {
  try {
    return parse_rational(v.text);
  } catch (const ParseError& e) {
    fail(v.line, key + ": " + e.what());
  }
}

const Value* find(const Table& t, const std::string& key) {
  auto it = t.find(key);
  return it == t.end() ? nullptr : &it->second;
}

RadicalQ parse_generator(const Table& t) {
  reject_unknown(t, {"twist", "radicand", "root_degree", "value"}, "[[generator]]");
  const Value* deg = find(t, "root_degree");
  const u64 d = deg ? as_u64(*deg, "root_degree") : 1;
  if (const Value* value = find(t, "value")) {
    if (find(t, "twist") || find(t, "radicand")) fail(value->line, "value cannot be combined with twist or radicand");
    Rat a = as_rat(*value, "value");
    if (a == 0) fail(value->line, "value must be nonzero");
    return canonicalize(a, d);
  }
  Rat twist = 0, radicand = 1;
  std::size_t line = 0;
  if (const Value* tw = find(t, "twist")) twist = as_rat(*tw, "twist");
  if (const Value* r = find(t, "radicand")) {
    radicand = as_rat(*r, "radicand");
    line = r->line;
    if (radicand <= 0) fail(line, "radicand must be a positive rational");
  }
  return RadicalQ::from_parts(twist, radicand, d);
}

}  // namespace

RadicalGroupSpec parse_instance(std::string_view text) {
  Document doc = parse_document(text);
  auto base_it = doc.tables.find("base");
  if (base_it == doc.tables.end()) throw ParseError("missing [base] section");
  const Table& base = base_it->second;
  reject_unknown(base, {"type", "q", "z"}, "[base]");
  const Value* type = find(base, "type");
  if (!type) throw ParseError("[base] needs a type");
  if (type->text == "Fq") {
    if (find(base, "z")) fail(find(base, "z")->line, "z is only valid for type Qzeta");
    const Value* q = find(base, "q");
    if (!q) fail(type->line, "type Fq needs q");
    if (!doc.generators.empty()) throw ParseError("[[generator]] entries are not used over F_q; use [fq]");
    auto fq = doc.tables.find("fq");
    if (fq == doc.tables.end()) throw ParseError("type Fq needs an [fq] section");
    reject_unknown(fq->second, {"group_order"}, "[fq]");
    const Value* order = find(fq->second, "group_order");
    if (!order) throw ParseError("[fq] needs group_order");
    const u64 qv = as_u64(*q, "q");
    if (!prime_power(qv)) fail(q->line, "q must be a prime power");
    return RadicalGroupSpec::roots_of_unity(BaseField::finite(qv), as_u64(*order, "group_order"));
  }
  if (doc.tables.count("fq")) throw ParseError("[fq] is only valid for type Fq");
  if (find(base, "q")) fail(find(base, "q")->line, "q is only valid for type Fq");
  BaseField field = BaseField::rationals();
  if (type->text == "Qzeta") {
    const Value* z = find(base, "z");
    if (!z) fail(type->line, "type Qzeta needs z");
    field = BaseField::cyclotomic(as_u64(*z, "z"));
  } else if (type->text == "Q") {
    if (find(base, "z")) fail(find(base, "z")->line, "z is only valid for type Qzeta");
  } else {
    fail(type->line, "unknown base type '" + type->text + "'");
  }
  std::vector<RadicalQ> gens;
  for (const auto& t : doc.generators) gens.push_back(parse_generator(t));
  return RadicalGroupSpec::radicals(field, gens);
}

RadicalGroupSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_instance(const RadicalGroupSpec& g) {
  std::ostringstream out;
  const BaseField& k = g.base();
  out << "[base]\n";
  if (k.is_finite()) {
    out << "type = \"Fq\"\nq = " << ipow(k.prime(), static_cast<unsigned>(k.degree())) << "\n\n[fq]\ngroup_order = "
        << g.group_order() << "\n";
    return out.str();
  }
  if (k.kind() == FieldKind::Cyclotomic) {
    out << "type = \"Qzeta\"\nz = " << k.z() << "\n";
  } else {
    out << "type = \"Q\"\n";
  }
  for (const auto& a : g.generators()) {
    // root_degree = lcm of exponent denominators; radicand = prod p^{e d}.
    u64 d = 1;
    for (const auto& [p, e] : a.exps()) d = lcm(d, to_u64(Int(e.get_den())));
    Rat radicand = 1;
    for (const auto& [p, e] : a.exps()) {
      Rat k2 = e * to_int(d);
      radicand *= rat_pow(Rat(to_int(p)), k2.get_num().get_si());
    }
    out << "\n[[generator]]\ntwist = \"" << to_string(a.twist()) << "\"\nradicand = \"" << to_string(radicand)
        << "\"\nroot_degree = " << d << "\n";
  }
  return out.str();
}

}  // namespace radx
