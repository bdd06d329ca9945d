#include "semilink/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace semilink {

namespace {

// Tokenizer shared by the three block formats.
struct Block {
  std::string kind;
  std::string name;
  std::string over;
  std::map<std::string, std::vector<std::string>> lists;  // list entries, strings unquoted
  std::map<std::string, std::string> scalars;
};

class BlockParser {
 public:
  explicit BlockParser(std::string_view text) : s_(text) {}

  Block parse() {
    Block b;
    b.kind = word();
    b.name = word();
    skip();
    if (peek_word() == "over") {
      word();
      b.over = word();
    }
    expect('{');
    while (true) {
      skip();
      if (eat('}')) break;
      std::string key = word();
      expect('=');
      skip();
      if (eat('[')) {
        std::vector<std::string> items;
        skip();
        if (!eat(']')) {
          while (true) {
            items.push_back(item());
            skip();
            if (eat(']')) break;
            expect(',');
          }
        }
        b.lists[key] = std::move(items);
      } else {
        b.scalars[key] = item();
      }
      skip();
      if (eat(';')) continue;
      skip();
      if (eat('}')) break;
      fail("expected ';' or '}'");
    }
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return b;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  static bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }
  std::string peek_word() {
    skip();
    std::size_t p = pos_;
    while (p < s_.size() && word_char(s_[p])) ++p;
    return std::string(s_.substr(pos_, p - pos_));
  }
  std::string word() {
    std::string w = peek_word();
    if (w.empty()) fail("expected a name");
    pos_ += w.size();
    return w;
  }
  // quoted string or a bare token running to the next ',', ';', ']' or '}'
  std::string item() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '"') {
      std::size_t end = s_.find('"', pos_ + 1);
      if (end == std::string_view::npos) fail("unterminated string");
      std::string out(s_.substr(pos_ + 1, end - pos_ - 1));
      pos_ = end + 1;
      return out;
    }
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ';' || c == ']' || c == '}')) break;
      ++pos_;
    }
    std::string out(s_.substr(start, pos_ - start));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("expected a value");
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// "name:int" or "name"
std::pair<std::string, int> named_int(const std::string& entry, int fallback) {
  auto colon = entry.find(':');
  if (colon == std::string::npos) return {strip(entry), fallback};
  std::string n = strip(entry.substr(colon + 1));
  try {
    std::size_t used = 0;
    int v = std::stoi(n, &used);
    if (used != n.size()) throw std::invalid_argument(n);
    return {strip(entry.substr(0, colon)), v};
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + n + "' in '" + entry + "'", 0);
  }
}

FieldDescriptor parse_field(const std::string& text) {
  std::string t = strip(text);
  if (t == "QQ" || t == "Q") return FieldDescriptor::rationals();
  if (t.rfind("GF(", 0) == 0 && t.back() == ')') return FieldDescriptor::prime(std::stoull(t.substr(3, t.size() - 4)));
  throw ParseError("unknown field '" + t + "'", 0);
}

Block parse_block(std::string_view text, const std::string& kind) {
  Block b = BlockParser(text).parse();
  if (b.kind != kind) throw ParseError("expected a '" + kind + "' block, found '" + b.kind + "'", 0);
  return b;
}

// Splits at top-level '+' and '-', keeping the sign with each term.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-') && !strip(cur).empty()) {
      out.push_back(strip(cur));
      cur.clear();
    }
    cur += c;
  }
  if (!strip(cur).empty()) out.push_back(strip(cur));
  return out;
}

std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && c == '*') {
      out.push_back(strip(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(strip(cur));
  return out;
}

Vec parse_relation(const std::string& text, const std::map<std::string, int>& gens, const PolyRingPtr& S) {
  Vec out;
  for (std::string term : split_terms(text)) {
    bool neg = false;
    while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') neg = !neg;
      term = strip(term.substr(1));
    }
    int comp = -1;
    std::string coeff;
    for (const auto& f : split_factors(term)) {
      auto it = gens.find(f);
      if (it != gens.end()) {
        if (comp >= 0) throw ParseError("two generators in term '" + term + "' of '" + text + "'", 0);
        comp = it->second;
      } else {
        coeff += (coeff.empty() ? "" : "*") + f;
      }
    }
    if (comp < 0) throw ParseError("term '" + term + "' has no generator in '" + text + "'", 0);
    Poly p = parse_poly(coeff.empty() ? "1" : coeff, S);
    if (neg) p = -p;
    Vec v = poly_to_vec(p, comp);
    out = vec_add(*S, out, v);
  }
  return out;
}

}  // namespace

RingPtr parse_ring(std::string_view text) {
  Block b = parse_block(text, "ring");
  auto fit = b.scalars.find("field");
  FieldDescriptor field = fit == b.scalars.end() ? FieldDescriptor::prime(32003) : parse_field(fit->second);
  std::vector<Variable> vars;
  for (const auto& v : b.lists["vars"]) {
    auto [name, w] = named_int(v, 1);
    if (w <= 0) throw ParseError("variable weights must be positive: " + v, 0);
    vars.push_back({name, w});
  }
  if (vars.empty()) throw ParseError("ring without variables", 0);
  auto S = std::make_shared<const GradedPolyRing>(field, vars);
  std::vector<Poly> rels;
  for (const auto& r : b.lists["relations"]) rels.push_back(parse_poly(r, S));
  return make_quotient_ring(S, rels, b.name);
}

ModulePtr parse_module(std::string_view text, const RingPtr& ring) {
  Block b = parse_block(text, "module");
  std::map<std::string, int> index;
  std::vector<int> degrees;
  for (const auto& g : b.lists["generators"]) {
    auto [name, d] = named_int(g, 0);
    if (ring->ambient()->variable_index(name) >= 0)
      throw ParseError("generator name '" + name + "' clashes with a variable", 0);
    if (!index.emplace(name, static_cast<int>(degrees.size())).second)
      throw ParseError("duplicate generator '" + name + "'", 0);
    degrees.push_back(d);
  }
  std::vector<Vec> rels;
  for (const auto& r : b.lists["relations"]) {
    Vec v = parse_relation(r, index, ring->ambient());
    if (!vec_is_homogeneous(v, degrees)) throw Error(ErrorCode::InvalidArgument, "relation is not homogeneous: " + r);
    rels.push_back(std::move(v));
  }
  return FPModule::make(ring, std::move(degrees), std::move(rels));
}

std::vector<Poly> parse_ideal(std::string_view text, const RingPtr& ring) {
  Block b = parse_block(text, "ideal");
  std::vector<Poly> out;
  for (const auto& g : b.lists["generators"]) {
    Poly p = parse_poly(g, ring->ambient());
    if (!p.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "ideal generator is not homogeneous: " + g);
    out.push_back(std::move(p));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RingPtr load_ring(const std::filesystem::path& path) { return parse_ring(read_file(path)); }
ModulePtr load_module(const std::filesystem::path& path, const RingPtr& ring) {
  return parse_module(read_file(path), ring);
}
std::vector<Poly> load_ideal(const std::filesystem::path& path, const RingPtr& ring) {
  return parse_ideal(read_file(path), ring);
}

std::string format_module(const ModulePtr& M, const std::string& name) {
  const auto& S = M->ring()->ambient();
  std::string out = "module " + name + " over " + M->ring()->name() + " {\n  generators = [";
  for (int i = 0; i < M->num_generators(); ++i)
    out += (i ? ", g" : "g") + std::to_string(i) + ":" + std::to_string(M->degrees()[i]);
  out += "];\n  relations = [";
  bool first_rel = true;
  for (const auto& r : M->relations()) {
    std::string rel;
    for (int j = 0; j < M->num_generators(); ++j) {
      Poly p = vec_component(S, r, j);
      if (p.is_zero()) continue;
      if (!rel.empty()) rel += " + ";
      rel += "(" + p.to_string() + ")*g" + std::to_string(j);
    }
    out += (first_rel ? "\"" : ",\n               \"") + rel + "\"";
    first_rel = false;
  }
  out += "]\n}\n";
  return out;
}

TomlDoc parse_toml(std::string_view text) {
  TomlDoc doc;
  TomlDoc::Table* cur = &doc.top;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) { throw ParseError(what + " on line " + std::to_string(lineno), 0); };
  auto parse_string = [&](const std::string& v) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"') fail("expected a quoted string");
    return v.substr(1, v.size() - 2);
  };
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments outside strings
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    std::string t = strip(line);
    if (t.empty()) continue;
    if (t.rfind("[[", 0) == 0) {
      if (t.size() < 5 || t.substr(t.size() - 2) != "]]") fail("bad table header");
      auto& arr = doc.arrays[strip(t.substr(2, t.size() - 4))];
      arr.emplace_back();
      cur = &arr.back();
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = strip(t.substr(0, eq));
    std::string v = strip(t.substr(eq + 1));
    if (key.empty() || v.empty()) fail("expected key = value");
    TomlDoc::Value value;
    if (v.front() == '"') {
      value = parse_string(v);
    } else if (v.front() == '[') {
      if (v.back() != ']') fail("arrays must fit on one line");
      std::vector<std::string> items;
      std::string body = strip(v.substr(1, v.size() - 2));
      std::string curv;
      bool q = false;
      for (char c : body) {
        if (c == '"') q = !q;
        if (c == ',' && !q) {
          items.push_back(parse_string(strip(curv)));
          curv.clear();
        } else {
          curv += c;
        }
      }
      if (!strip(curv).empty()) items.push_back(parse_string(strip(curv)));
      value = items;
    } else if (v == "true" || v == "false") {
      value = v == "true";
    } else {
      try {
        std::size_t used = 0;
        long n = std::stol(v, &used);
        if (used != v.size()) fail("bad value '" + v + "'");
        value = n;
      } catch (const std::invalid_argument&) {
        fail("bad value '" + v + "'");
      }
    }
    if (!cur->emplace(key, value).second) fail("duplicate key '" + key + "'");
  }
  return doc;
}

}  // namespace semilink
