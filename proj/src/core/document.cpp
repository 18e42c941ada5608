#include "monideal/document.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include <json.hpp>

#include "monideal/errors.hpp"

namespace monideal {

namespace {

using ordered_json = nlohmann::ordered_json;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

// Cursor over one line; columns are 1-based byte offsets.
class LineCursor {
public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  std::string_view identifier(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(std::string("expected ") + what);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Exponent number(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') fail(std::string("negative ") + what);
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      fail(std::string("expected ") + what);
    }
    Exponent value = 0;
    auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    (void)p;
    if (ec != std::errc()) {
      pos_ = start;
      fail(std::string(what) + " overflow");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t col) const { throw ParseError(msg, line_, col); }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Monomial parse_term(LineCursor& cur, const Ring& ring) {
  Monomial m = Monomial::one(ring.size());
  do {
    const std::size_t col = (cur.skip_space(), cur.column());
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      if (cur.number("coefficient") != 1) cur.fail_at("only the constant 1 may appear in a term", col);
      continue;
    }
    const auto name = cur.identifier("variable");
    const std::size_t i = ring.index_of(std::string(name));
    if (i == ring.size()) cur.fail_at("unknown variable '" + std::string(name) + "'", col);
    Exponent e = 1;
    if (cur.accept('^')) e = cur.number("exponent");
    try {
      m[i] = checked_add(m[i], e);
    } catch (const OverflowError&) {
      cur.fail_at("exponent overflow", col);
    }
  } while (cur.accept('*'));
  return m;
}

void add_ideal(IdealDocument& doc, std::string name, std::vector<Monomial> gens, std::size_t line) {
  MonomialIdeal ideal(doc.ring, std::move(gens));
  if (ideal.is_unit()) {
    doc.warnings.push_back("line " + std::to_string(line) + ": ideal " + name +
                           " is the unit ideal and was dropped");
    return;
  }
  doc.ideals.push_back({std::move(name), std::move(ideal)});
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Position of a quoted key for error messages; (1, 1) when not found.
std::pair<std::size_t, std::size_t> locate_key(std::string_view text, const std::string& key, std::size_t from = 0) {
  const auto at = text.find('"' + key + '"', from);
  if (at == std::string_view::npos) return {1, 1};
  return line_col(text, at);
}

[[noreturn]] void json_fail(std::string_view text, const std::string& key, const std::string& msg,
                            std::size_t from = 0) {
  const auto [l, c] = locate_key(text, key, from);
  throw ParseError(msg, l, c);
}

Exponent json_exponent(const ordered_json& v, std::string_view text, const std::string& key, std::size_t from) {
  if (v.is_number_unsigned()) return v.get<Exponent>();
  if (v.is_number_integer()) json_fail(text, key, "negative exponent in ideal " + key, from);
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d < 0) json_fail(text, key, "negative exponent in ideal " + key, from);
    json_fail(text, key, "exponent overflow in ideal " + key, from);
  }
  json_fail(text, key, "exponents must be integers in ideal " + key, from);
}

} // namespace

const NamedIdeal* IdealDocument::find(std::string_view name) const {
  for (const auto& n : ideals)
    if (n.name == name) return &n;
  return nullptr;
}

Monomial parse_monomial(std::string_view term, const Ring& ring) {
  LineCursor cur(term, 1);
  Monomial m = parse_term(cur, ring);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return m;
}

IdealDocument parse_text_document(std::string_view input) {
  IdealDocument doc;
  std::set<std::string> names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineCursor cur(line, line_no);
    if (cur.at_end()) continue;
    const std::size_t kw_col = cur.column();
    const auto keyword = cur.identifier("directive");

    if (keyword == "ring") {
      if (doc.ring) cur.fail_at("ring declared twice", kw_col);
      std::vector<std::string> vars;
      std::set<std::string> seen;
      while (!cur.at_end()) {
        const std::size_t col = cur.column();
        std::string v(cur.identifier("variable name"));
        if (!seen.insert(v).second) cur.fail_at("duplicate variable '" + v + "'", col);
        vars.push_back(std::move(v));
      }
      if (vars.empty()) cur.fail("ring needs at least one variable");
      doc.ring = make_ring(std::move(vars));
    } else if (keyword == "ideal") {
      if (!doc.ring) cur.fail_at("ideal before ring declaration", kw_col);
      const std::size_t name_col = (cur.skip_space(), cur.column());
      std::string name(cur.identifier("ideal name"));
      if (!names.insert(name).second) cur.fail_at("duplicate ideal name '" + name + "'", name_col);
      cur.expect('=', "'='");
      if (cur.at_end()) cur.fail("empty generator list");
      std::vector<Monomial> gens;
      do {
        gens.push_back(parse_term(cur, *doc.ring));
      } while (cur.accept(','));
      if (!cur.at_end()) cur.fail("expected ',' or end of line");
      add_ideal(doc, std::move(name), std::move(gens), line_no);
    } else if (keyword == "power") {
      if (doc.power) cur.fail_at("power given twice", kw_col);
      const std::size_t col = (cur.skip_space(), cur.column());
      const Exponent n = cur.number("power");
      if (n == 0 || n > 1000000) cur.fail_at("power must be between 1 and 1000000", col);
      doc.power = static_cast<unsigned>(n);
      if (!cur.at_end()) cur.fail("unexpected trailing input");
    } else if (keyword == "closure") {
      if (!cur.at_end()) cur.fail("unexpected trailing input");
      doc.closure = true;
    } else {
      cur.fail_at("unknown directive '" + std::string(keyword) + "'", kw_col);
    }
  }
  if (!doc.ring) throw ParseError("missing ring declaration", 1, 1);
  return doc;
}

IdealDocument parse_json_document(std::string_view input) {
  ordered_json j;
  try {
    j = ordered_json::parse(input.begin(), input.end());
  } catch (const ordered_json::parse_error& e) {
    const auto [l, c] = line_col(input, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", l, c);
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object", 1, 1);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    if (k != "vars" && k != "ideals" && k != "power" && k != "closure")
      json_fail(input, k, "unknown key '" + k + "'");
  }

  IdealDocument doc;
  if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
    json_fail(input, "vars", "vars must be a nonempty array of names");
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& v : j["vars"]) {
    if (!v.is_string() || !is_identifier(v.get<std::string>()))
      json_fail(input, "vars", "variable names must be identifiers");
    if (!seen.insert(v.get<std::string>()).second)
      json_fail(input, "vars", "duplicate variable '" + v.get<std::string>() + "'");
    vars.push_back(v.get<std::string>());
  }
  doc.ring = make_ring(std::move(vars));

  if (j.contains("ideals")) {
    const auto& ideals = j["ideals"];
    if (!ideals.is_object()) json_fail(input, "ideals", "ideals must be an object");
    const std::size_t base = input.find("\"ideals\"");
    for (auto it = ideals.begin(); it != ideals.end(); ++it) {
      const std::string& name = it.key();
      if (!is_identifier(name)) json_fail(input, name, "ideal names must be identifiers", base);
      if (!it->is_array()) json_fail(input, name, "ideal " + name + " must be a list of exponent vectors", base);
      if (it->empty()) json_fail(input, name, "empty generator list", base);
      std::vector<Monomial> gens;
      for (const auto& g : *it) {
        if (!g.is_array() || g.size() != doc.ring->size())
          json_fail(input, name, "generator of " + name + " must have one exponent per variable", base);
        std::vector<Exponent> exps;
        for (const auto& e : g) exps.push_back(json_exponent(e, input, name, base));
        gens.emplace_back(std::move(exps));
      }
      const auto [line, col] = locate_key(input, name, base);
      (void)col;
      add_ideal(doc, name, std::move(gens), line);
    }
  }
  if (j.contains("power")) {
    const auto& p = j["power"];
    if (!p.is_number_unsigned() || p.get<std::uint64_t>() == 0 || p.get<std::uint64_t>() > 1000000)
      json_fail(input, "power", "power must be between 1 and 1000000");
    doc.power = static_cast<unsigned>(p.get<std::uint64_t>());
  }
  if (j.contains("closure")) {
    if (!j["closure"].is_boolean()) json_fail(input, "closure", "closure must be a boolean");
    doc.closure = j["closure"].get<bool>();
  }
  return doc;
}

IdealDocument parse_document(std::string_view input) {
  for (char c : input) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json_document(input) : parse_text_document(input);
  }
  return parse_text_document(input);
}

std::string serialize_text(const IdealDocument& doc) {
  std::string out = "ring";
  for (const auto& v : doc.ring->vars()) out += " " + v;
  out += "\n";
  for (const auto& n : doc.ideals) {
    out += "ideal " + n.name + " =";
    const auto& gens = n.ideal.gens();
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : " ") + to_string(gens[i], *doc.ring);
    out += "\n";
  }
  if (doc.power) out += "power " + std::to_string(*doc.power) + "\n";
  if (doc.closure) out += "closure\n";
  return out;
}

std::string serialize_json(const IdealDocument& doc) {
  ordered_json j;
  j["vars"] = doc.ring->vars();
  j["ideals"] = ordered_json::object();
  for (const auto& n : doc.ideals) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : n.ideal.gens()) {
      ordered_json row = ordered_json::array();
      for (Exponent e : g.exponents()) row.push_back(e);
      gens.push_back(std::move(row));
    }
    j["ideals"][n.name] = std::move(gens);
  }
  if (doc.power) j["power"] = *doc.power;
  if (doc.closure) j["closure"] = true;
  return j.dump() + "\n";
}

} // namespace monideal
