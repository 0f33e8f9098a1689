#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lodeg/cli.hpp"
#include "lodeg/errors.hpp"
#include "lodeg/parse.hpp"

namespace lodeg::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxAmbient = 15;  // the projective conormal needs 2(n+1) variables

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(const std::string& text, std::size_t offset) {
  Position p;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(const std::string& path, const std::string& text, std::size_t offset, const std::string& what) {
  Position p = position_of(text, offset);
  throw InputError(path + ":" + std::to_string(p.line) + ":" + std::to_string(p.column) + ": " + what);
}

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

// Offsets of the opening quotes of the strings in the array under `key`.
std::vector<std::size_t> array_string_offsets(const std::string& text, const std::string& key) {
  std::vector<std::size_t> out;
  std::size_t at = text.find("\"" + key + "\"");
  if (at == std::string::npos) return out;
  at = text.find('[', at);
  if (at == std::string::npos) return out;
  for (std::size_t k = at + 1; k < text.size();) {
    char c = text[k];
    if (c == ']') break;
    if (c == '"') {
      out.push_back(k);
      for (++k; k < text.size() && text[k] != '"'; ++k) {
        if (text[k] == '\\') ++k;
      }
    }
    ++k;
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VarietyFile parse_variety_file(const std::string& text, const std::string& path) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto colon = msg.rfind(": ");
    fail_at(path, text, e.byte > 0 ? e.byte - 1 : 0,
            "malformed JSON (" + (colon == std::string::npos ? msg : msg.substr(colon + 2)) + ")");
  }
  if (!doc.is_object()) fail(path, "top level must be a JSON object");
  static const std::set<std::string> known{"variables", "polynomials", "assumed_irreducible", "homogeneous",
                                           "description", "metadata"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!known.count(it.key())) fail(path, "unknown key '" + it.key() + "'");
  }

  VarietyFile out;
  out.path = path;
  out.digest = "fnv1a64:" + fnv1a64_hex(text);

  if (!doc.contains("variables") || !doc["variables"].is_array()) fail(path, "'variables' must be an array of names");
  auto var_offsets = array_string_offsets(text, "variables");
  std::set<std::string> seen;
  for (std::size_t k = 0; k < doc["variables"].size(); ++k) {
    const json& v = doc["variables"][k];
    std::size_t off = k < var_offsets.size() ? var_offsets[k] : 0;
    if (!v.is_string()) fail_at(path, text, off, "variable names must be strings");
    std::string name = v.get<std::string>();
    if (!is_identifier(name)) fail_at(path, text, off, "'" + name + "' is not a valid variable name");
    if (!seen.insert(name).second) fail_at(path, text, off, "duplicate variable '" + name + "'");
    out.spec.variables.push_back(name);
  }
  if (out.spec.variables.empty()) fail(path, "at least one variable is required");
  if (out.spec.variables.size() > kMaxAmbient) {
    fail(path, "at most " + std::to_string(kMaxAmbient) + " variables are supported");
  }

  if (!doc.contains("polynomials") || !doc["polynomials"].is_array()) {
    fail(path, "'polynomials' must be an array of strings");
  }
  auto poly_offsets = array_string_offsets(text, "polynomials");
  for (std::size_t k = 0; k < doc["polynomials"].size(); ++k) {
    const json& p = doc["polynomials"][k];
    std::size_t off = k < poly_offsets.size() ? poly_offsets[k] : 0;
    if (!p.is_string()) fail_at(path, text, off, "polynomials must be strings");
    try {
      QPoly q = parse_polynomial(p.get<std::string>(), out.spec.variables, RationalField{});
      if (q.is_zero()) fail_at(path, text, off, "polynomial " + std::to_string(k) + " is zero");
      out.spec.generators.push_back(std::move(q));
    } catch (const ParseError& e) {
      fail_at(path, text, off + e.column(), e.what());
    }
  }
  if (out.spec.generators.empty()) fail(path, "at least one polynomial is required");

  for (const char* flag : {"assumed_irreducible", "homogeneous"}) {
    if (doc.contains(flag) && !doc[flag].is_boolean()) fail(path, std::string("'") + flag + "' must be a boolean");
  }
  out.spec.assumed_irreducible = doc.value("assumed_irreducible", true);
  if (doc.value("homogeneous", false) && !out.spec.homogeneous()) {
    fail(path, "declared homogeneous but a polynomial is not");
  }
  return out;
}

VarietyFile load_variety_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_variety_file(ss.str(), path);
}

}  // namespace lodeg::cli
