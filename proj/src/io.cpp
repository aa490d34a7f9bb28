#include "lts/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lts/errors.hpp"

namespace lts {
namespace {

using json = nlohmann::json;

struct Position {
  std::size_t line;
  std::size_t column;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

/// Maps JSON pointers to the byte offset where each value starts. Only run
/// on text that already parsed successfully.
class OffsetScanner {
 public:
  explicit OffsetScanner(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }
  std::size_t offset(const std::string& pointer) const {
    auto it = offsets_.find(pointer);
    return it == offsets_.end() ? 0 : it->second;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string string_token() {
    std::string out;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    ++pos_;
    return out;
  }
  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }
  void value(const std::string& pointer) {
    offsets_[pointer] = pos_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++pos_;  // ':'
        skip_ws();
        value(pointer + "/" + escape(key));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      std::size_t i = 0;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        value(pointer + "/" + std::to_string(i++));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ',' &&
             text_[pos_] != ']' && text_[pos_] != '}') {
        ++pos_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> offsets_;
};

/// Semantic error at a JSON pointer; converted to a located ParseError.
struct SemanticError {
  std::string pointer;
  std::string message;
};

[[noreturn]] void fail(std::string pointer, std::string message) {
  throw SemanticError{std::move(pointer), std::move(message)};
}

const json& member(const json& obj, const std::string& ptr, const char* key) {
  if (!obj.contains(key)) fail(ptr, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

void only_keys(const json& obj, const std::string& ptr, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) fail(ptr + "/" + k, "unknown key \"" + k + "\"");
  }
}

const json& object(const json& j, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object");
  return j;
}

const json& array(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array");
  return j;
}

std::int64_t integer(const json& j, const std::string& ptr) {
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) fail(ptr, "integer out of range");
    return static_cast<std::int64_t>(u);
  }
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t index(const json& j, const std::string& ptr, std::size_t bound) {
  const std::int64_t v = integer(j, ptr);
  if (v < 0 || static_cast<std::uint64_t>(v) >= bound) {
    fail(ptr, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  }
  return static_cast<std::size_t>(v);
}

GradedLTS build(const json& root) {
  object(root, "");
  only_keys(root, "", {"group", "field", "dimension", "degrees", "triple"});

  const json& group_j = object(member(root, "", "group"), "/group");
  only_keys(group_j, "/group", {"moduli"});
  const json& moduli_j = array(member(group_j, "/group", "moduli"), "/group/moduli");
  std::vector<std::int64_t> moduli;
  for (std::size_t i = 0; i < moduli_j.size(); ++i) {
    const std::string p = "/group/moduli/" + std::to_string(i);
    const std::int64_t m = integer(moduli_j[i], p);
    if (m < 0 || m == 1) fail(p, "modulus must be 0 (for Z) or at least 2, got " + std::to_string(m));
    moduli.push_back(m);
  }
  const AbelianGroup group(moduli);

  const json& field_j = object(member(root, "", "field"), "/field");
  const json& kind_j = member(field_j, "/field", "kind");
  if (!kind_j.is_string()) fail("/field/kind", "expected a string");
  Field field = Field::rational();
  const std::string kind = kind_j.get<std::string>();
  if (kind == "rational") {
    only_keys(field_j, "/field", {"kind"});
  } else if (kind == "prime") {
    only_keys(field_j, "/field", {"kind", "p"});
    const std::int64_t p = integer(member(field_j, "/field", "p"), "/field/p");
    if (p < 2) fail("/field/p", "modulus must be a prime");
    try {
      field = Field::prime(static_cast<std::uint64_t>(p));
    } catch (const std::invalid_argument& err) {
      fail("/field/p", err.what());
    }
  } else {
    fail("/field/kind", "field kind must be \"rational\" or \"prime\", got \"" + kind + "\"");
  }

  const std::int64_t dim_raw = integer(member(root, "", "dimension"), "/dimension");
  if (dim_raw < 0) fail("/dimension", "dimension must be nonnegative");
  const auto n = static_cast<std::size_t>(dim_raw);

  const json& degrees_j = array(member(root, "", "degrees"), "/degrees");
  if (degrees_j.size() != n) {
    fail("/degrees", "expected " + std::to_string(n) + " degrees, got " + std::to_string(degrees_j.size()));
  }
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string p = "/degrees/" + std::to_string(i);
    const json& d = array(degrees_j[i], p);
    if (d.size() != group.factors()) {
      fail(p, "expected " + std::to_string(group.factors()) + " coordinates, got " + std::to_string(d.size()));
    }
    std::vector<std::int64_t> coords;
    for (std::size_t c = 0; c < d.size(); ++c) coords.push_back(integer(d[c], p + "/" + std::to_string(c)));
    GroupElement g(coords);
    if (!group.is_canonical(g)) fail(p, "degree " + g.to_string() + " is not a canonical element of " + group.to_string());
    degrees.push_back(std::move(g));
  }

  StructureConstants constants;
  const json& triple_j = array(member(root, "", "triple"), "/triple");
  for (std::size_t t = 0; t < triple_j.size(); ++t) {
    const std::string p = "/triple/" + std::to_string(t);
    const json& rec = object(triple_j[t], p);
    only_keys(rec, p, {"args", "out"});
    const json& args_j = array(member(rec, p, "args"), p + "/args");
    if (args_j.size() != 3) fail(p + "/args", "expected three indices");
    TripleKey key{};
    for (std::size_t a = 0; a < 3; ++a) key[a] = index(args_j[a], p + "/args/" + std::to_string(a), n);
    if (constants.contains(key)) {
      fail(p + "/args", "duplicate triple (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                            std::to_string(key[2]) + ")");
    }
    const json& out_j = array(member(rec, p, "out"), p + "/out");
    SparseVector out;
    std::set<std::size_t> seen;
    for (std::size_t o = 0; o < out_j.size(); ++o) {
      const std::string q = p + "/out/" + std::to_string(o);
      const json& term = object(out_j[o], q);
      only_keys(term, q, {"idx", "val"});
      const std::size_t l = index(member(term, q, "idx"), q + "/idx", n);
      if (!seen.insert(l).second) fail(q + "/idx", "duplicate output index " + std::to_string(l));
      const json& val_j = member(term, q, "val");
      if (!val_j.is_string()) fail(q + "/val", "scalars must be strings such as \"3\" or \"-1/2\"");
      try {
        out.push_back({l, field.parse(val_j.get<std::string>())});
      } catch (const std::invalid_argument& err) {
        fail(q + "/val", err.what());
      }
    }
    constants.emplace(key, std::move(out));
  }

  try {
    return GradedLTS(group, field, std::move(degrees), std::move(constants));
  } catch (const std::invalid_argument& err) {
    fail("", err.what());
  }
}

}  // namespace

GradedLTS parse_system(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    const std::size_t offset = err.byte > 0 ? err.byte - 1 : 0;
    const Position pos = position_of(text, offset);
    std::string message = err.what();
    if (auto colon = message.rfind(": "); colon != std::string::npos) message = message.substr(colon + 2);
    throw ParseError("syntax error: " + message, pos.line, pos.column);
  }
  try {
    return build(root);
  } catch (const SemanticError& err) {
    const Position pos = position_of(text, OffsetScanner(text).offset(err.pointer));
    const std::string where = err.pointer.empty() ? "document root" : err.pointer;
    throw ParseError(err.message + " (at " + where + ")", pos.line, pos.column);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GradedLTS load_system(const std::filesystem::path& path) { return parse_system(read_file(path)); }

std::string serialize_system(const GradedLTS& e) {
  using ojson = nlohmann::ordered_json;
  const Field field = e.field();
  ojson group{{"moduli", e.group().moduli()}};
  ojson field_j = field.is_rational() ? ojson{{"kind", "rational"}} : ojson{{"kind", "prime"}, {"p", field.modulus()}};
  ojson degrees = ojson::array();
  for (const GroupElement& g : e.degrees()) degrees.push_back(g.coords());

  std::string s = "{\n";
  s += "  \"group\": " + group.dump() + ",\n";
  s += "  \"field\": " + field_j.dump() + ",\n";
  s += "  \"dimension\": " + std::to_string(e.dim()) + ",\n";
  s += "  \"degrees\": " + degrees.dump() + ",\n";
  s += "  \"triple\": [";
  bool first = true;
  for (const auto& [key, terms] : e.constants()) {
    ojson out = ojson::array();
    for (const Term& t : terms) out.push_back(ojson{{"idx", t.index}, {"val", t.coeff.to_string()}});
    ojson rec{{"args", key}, {"out", out}};
    s += first ? "\n    " : ",\n    ";
    s += rec.dump();
    first = false;
  }
  s += first ? "]\n}\n" : "\n  ]\n}\n";
  return s;
}

void save_system(const std::filesystem::path& path, const GradedLTS& e) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_system(e);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

}  // namespace lts
