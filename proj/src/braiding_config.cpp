#include "qshuffle/braiding_config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qshuffle {

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

BigInt parse_int_at(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
    throw BraidingError("expected integer in coefficient expression");
  return BigInt::from_string(text.substr(start, pos - start));
}

}  // namespace

LaurentPolynomial parse_laurent_expr(std::string_view text) {
  LaurentPolynomial out;
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size()) throw BraidingError("empty coefficient expression");
  bool negative = false;
  bool expect_term = true;
  while (pos < text.size()) {
    if (expect_term) {
      BigInt coefficient{1};
      int exponent = 0;
      bool saw_anything = false;
      if (pos < text.size() &&
          (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '+' ||
           text[pos] == '-')) {
        coefficient = parse_int_at(text, pos);
        saw_anything = true;
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws(text, pos);
        }
      }
      if (pos < text.size() && text[pos] == 'q') {
        ++pos;
        exponent = 1;
        saw_anything = true;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          exponent = static_cast<int>(parse_int_at(text, pos).to_int64());
        }
      }
      if (!saw_anything) throw BraidingError("malformed coefficient expression");
      if (negative) coefficient = -coefficient;
      out += LaurentPolynomial::monomial(exponent, std::move(coefficient));
      expect_term = false;
      skip_ws(text, pos);
    } else {
      if (text[pos] == '+') {
        negative = false;
      } else if (text[pos] == '-') {
        negative = true;
      } else {
        throw BraidingError("expected + or - in coefficient expression");
      }
      ++pos;
      skip_ws(text, pos);
      expect_term = true;
    }
  }
  if (expect_term) throw BraidingError("dangling operator in coefficient expression");
  return out;
}

namespace {

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

Json parse_toml_value(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos >= text.size()) throw BraidingError("missing TOML value");
  if (text[pos] == '"') {
    ++pos;
    std::string out;
    while (pos < text.size() && text[pos] != '"') out += text[pos++];
    if (pos >= text.size()) throw BraidingError("unterminated string");
    ++pos;
    return out;
  }
  if (text[pos] == '[') {
    ++pos;
    Json out = Json::array();
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      return out;
    }
    while (true) {
      out.push_back(parse_toml_value(text, pos));
      skip_ws(text, pos);
      if (pos >= text.size()) throw BraidingError("unterminated array");
      if (text[pos] == ',') {
        ++pos;
        skip_ws(text, pos);
        // Tolerate a trailing comma before the closing bracket.
        if (pos < text.size() && text[pos] == ']') {
          ++pos;
          return out;
        }
        continue;
      }
      if (text[pos] == ']') {
        ++pos;
        return out;
      }
      throw BraidingError("expected , or ] in array");
    }
  }
  if (text[pos] == '+' || text[pos] == '-' ||
      std::isdigit(static_cast<unsigned char>(text[pos]))) {
    BigInt v = parse_int_at(text, pos);
    return v.to_int64();
  }
  if (text.substr(pos, 4) == "true") {
    pos += 4;
    return true;
  }
  if (text.substr(pos, 5) == "false") {
    pos += 5;
    return false;
  }
  throw BraidingError("unsupported TOML value");
}

}  // namespace

Json toml_subset_to_json(const std::string& text) {
  Json out = Json::object();
  std::istringstream in(text);
  std::string raw;
  std::string pending;
  int depth = 0;
  while (std::getline(in, raw)) {
    std::string line = strip_comment(raw);
    for (char c : line) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
    }
    pending += line;
    if (depth > 0) {
      pending += ' ';
      continue;
    }
    std::string logical = pending;
    pending.clear();
    std::size_t eq = logical.find('=');
    std::size_t start = 0;
    skip_ws(logical, start);
    if (start >= logical.size()) continue;
    if (eq == std::string::npos) throw BraidingError("expected key = value line");
    std::string key = logical.substr(start, eq - start);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.pop_back();
    std::size_t pos = eq + 1;
    Json value = parse_toml_value(logical, pos);
    skip_ws(logical, pos);
    if (pos != logical.size()) throw BraidingError("trailing characters after value");
    out[key] = std::move(value);
  }
  if (depth != 0) throw BraidingError("unbalanced brackets in TOML file");
  return out;
}

namespace {

Json load_config_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BraidingError("cannot open braiding file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    Json parsed = Json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw BraidingError("invalid JSON in " + path);
    return parsed;
  }
  return toml_subset_to_json(text);
}

CartanData cartan_from_config(const Json& config) {
  if (!config.contains("cartan")) throw BraidingError("braiding file lacks a cartan matrix");
  std::vector<std::vector<int>> a;
  for (const auto& row : config.at("cartan")) {
    a.push_back(row.get<std::vector<int>>());
  }
  std::vector<int> d(a.size(), 1);
  if (config.contains("d")) d = config.at("d").get<std::vector<int>>();
  try {
    return CartanData(std::move(a), std::move(d));
  } catch (const std::invalid_argument& e) {
    throw BraidingError(std::string("bad Cartan data: ") + e.what());
  }
}

std::map<Letter, std::size_t> letters_from_config(const Json& config, std::size_t rank) {
  std::map<Letter, std::size_t> index;
  if (config.contains("letters")) {
    auto letters = config.at("letters").get<std::vector<Letter>>();
    if (letters.size() != rank)
      throw BraidingError("letters list must have one entry per Cartan row");
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (!index.emplace(letters[i], i).second)
        throw BraidingError("duplicate letter in letters list");
    }
  } else {
    for (std::size_t i = 0; i < rank; ++i) index[static_cast<Letter>(i + 1)] = i;
  }
  return index;
}

Rational q_from_config(const Json& config) {
  if (!config.contains("q")) throw BraidingError("numeric braiding file lacks q");
  const Json& q = config.at("q");
  Rational value = q.is_string() ? Rational::from_string(q.get<std::string>())
                                 : Rational(q.get<long long>());
  if (value.is_zero()) throw BraidingError("numeric braiding requires q != 0");
  return value;
}

TableBraiding<LaurentPolynomial> table_from_config(const Json& config) {
  if (!config.contains("table")) throw BraidingError("table braiding file lacks a table");
  TableBraiding<LaurentPolynomial> out;
  for (const auto& entry : config.at("table")) {
    if (!entry.is_array() || entry.size() != 3)
      throw BraidingError("table entries must be [x, y, coeff]");
    Letter x = entry.at(0).get<Letter>();
    Letter y = entry.at(1).get<Letter>();
    LaurentPolynomial coeff =
        entry.at(2).is_string() ? parse_laurent_expr(entry.at(2).get<std::string>())
                                : LaurentPolynomial(entry.at(2).get<long long>());
    out.set(x, y, std::move(coeff));
  }
  return out;
}

BraidingVariant braiding_from_config(const Json& config) {
  std::string kind;
  if (config.contains("kind")) {
    kind = config.at("kind").get<std::string>();
  } else if (config.contains("table")) {
    kind = "table";
  } else if (config.contains("q")) {
    kind = "numeric";
  } else if (config.contains("cartan")) {
    kind = "cartan";
  } else {
    throw BraidingError("braiding file does not determine a kind");
  }
  if (kind == "symbolic") return SymbolicBraiding{};
  if (kind == "classical") return ClassicalBraiding{};
  if (kind == "cartan") {
    CartanData data = cartan_from_config(config);
    auto index = letters_from_config(config, data.rank());
    return CartanBraiding(std::move(data), std::move(index));
  }
  if (kind == "numeric") {
    CartanData data = cartan_from_config(config);
    auto index = letters_from_config(config, data.rank());
    Rational q = q_from_config(config);
    return NumericBraiding(std::move(data), std::move(index), std::move(q));
  }
  if (kind == "table") return table_from_config(config);
  throw BraidingError("unknown braiding kind: " + kind);
}

}  // namespace

BraidingVariant load_braiding_file(const std::string& path) {
  return braiding_from_config(load_config_json(path));
}

BraidingVariant braiding_from_arg(const std::string& arg) {
  if (arg.empty()) throw BraidingError("no braiding given (flag --braiding or QSHUFFLE_BRAIDING)");
  if (arg == "symbolic") return SymbolicBraiding{};
  if (arg == "classical") return ClassicalBraiding{};
  if (arg.rfind("cartan:", 0) == 0) {
    BraidingVariant loaded = load_braiding_file(arg.substr(7));
    if (auto* numeric = std::get_if<NumericBraiding>(&loaded)) {
      return CartanBraiding(numeric->cartan());
    }
    if (!std::holds_alternative<CartanBraiding>(loaded))
      throw BraidingError("file given to cartan: does not describe a Cartan braiding");
    return loaded;
  }
  if (arg.rfind("numeric:", 0) == 0) {
    std::string rest = arg.substr(8);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw BraidingError("numeric braiding needs numeric:Q:FILE");
    Rational q = Rational::from_string(rest.substr(0, colon));
    if (q.is_zero()) throw BraidingError("numeric braiding requires q != 0");
    BraidingVariant loaded = load_braiding_file(rest.substr(colon + 1));
    if (auto* cartan = std::get_if<CartanBraiding>(&loaded)) {
      return NumericBraiding(cartan->data(), cartan->letter_to_index(), std::move(q));
    }
    if (auto* numeric = std::get_if<NumericBraiding>(&loaded)) {
      return NumericBraiding(numeric->cartan().data(),
                             numeric->cartan().letter_to_index(), std::move(q));
    }
    throw BraidingError("file given to numeric: does not carry Cartan data");
  }
  if (arg.rfind("table:", 0) == 0) {
    BraidingVariant loaded = load_braiding_file(arg.substr(6));
    if (!std::holds_alternative<TableBraiding<LaurentPolynomial>>(loaded))
      throw BraidingError("file given to table: does not describe a table braiding");
    return loaded;
  }
  return load_braiding_file(arg);
}

}  // namespace qshuffle
