#include "candec/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace candec {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json document = json::parse(text, nullptr, false);
  if (document.is_discarded()) throw DomainError("malformed JSON");
  return document;
}

void check_format(const json& document) {
  if (!document.is_object() || !document.contains("format") ||
      !document["format"].is_number_integer() || document["format"] != 1) {
    throw DomainError("expected a JSON object with \"format\": 1");
  }
}

int read_int_field(const json& document, const char* name) {
  if (!document.contains(name) || !document[name].is_number_integer()) {
    throw DomainError(std::string("missing integer field \"") + name + "\"");
  }
  return document[name].get<int>();
}

Rational read_scalar(const json& value) {
  if (value.is_string()) return rational_from_string(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw DomainError("scalar values must be strings like \"3/2\" or integers");
}

}  // namespace

std::string side_to_string(Side side) {
  return side == Side::Schur ? "schur" : "partition";
}

Side side_from_string(const std::string& text) {
  if (text == "schur") return Side::Schur;
  if (text == "partition") return Side::Partition;
  throw DomainError("side must be \"schur\" or \"partition\", got '" + text +
                    "'");
}

Invariant read_invariant_json(const std::string& text) {
  const json document = parse_document(text);
  check_format(document);
  const int n = read_int_field(document, "n");
  const int r = read_int_field(document, "r");
  if (n < 1 || r < 0) throw DomainError("need n >= 1 and r >= 0");
  if (!document.contains("entries") || !document["entries"].is_array()) {
    throw DomainError("missing \"entries\" array");
  }
  Invariant X(n, r);
  for (const json& entry : document["entries"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
        !entry[1].is_string()) {
      throw DomainError(
          "each entry must be [row multi-index, col multi-index, value]");
    }
    const MultiIndex row = MultiIndex::parse(entry[0].get<std::string>(), n);
    const MultiIndex col = MultiIndex::parse(entry[1].get<std::string>(), n);
    if (row.length() != r || col.length() != r) {
      throw DomainError("multi-index length differs from r");
    }
    const Coordinate coord{multi_index_rank(row), multi_index_rank(col)};
    if (X.entries.contains(coord)) {
      throw DomainError("duplicate entry at (" + row.to_string() + "|" +
                        col.to_string() + ")");
    }
    X.set(row, col, read_scalar(entry[2]));
  }
  return X;
}

std::string write_invariant_json(const Invariant& X) {
  json entries = json::array();
  for (const auto& [coord, value] : X.entries) {
    entries.push_back({multi_index_unrank(coord.row, X.n, X.r).to_string(),
                       multi_index_unrank(coord.col, X.n, X.r).to_string(),
                       rational_to_string(value)});
  }
  json document{{"format", 1}, {"n", X.n}, {"r", X.r}, {"entries", entries}};
  return document.dump(2) + "\n";
}

CoefficientsFile read_coefficients_json(const std::string& text) {
  const json document = parse_document(text);
  check_format(document);
  CoefficientsFile file;
  if (!document.contains("side") || !document["side"].is_string()) {
    throw DomainError("missing string field \"side\"");
  }
  file.side = side_from_string(document["side"].get<std::string>());
  file.n = read_int_field(document, "n");
  file.r = read_int_field(document, "r");
  if (file.n < 1 || file.r < 0) throw DomainError("need n >= 1 and r >= 0");
  if (!document.contains("coefficients") ||
      !document["coefficients"].is_object()) {
    throw DomainError("missing \"coefficients\" object");
  }
  const int degree = file.side == Side::Schur ? file.r : file.n;
  for (const auto& [word, value] : document["coefficients"].items()) {
    Permutation p = Permutation::parse(word);
    if (p.degree() != degree) {
      throw DomainError("coefficient word '" + word +
                        "' has the wrong degree");
    }
    file.values.emplace_back(std::move(p), read_scalar(value));
  }
  return file;
}

std::string write_coefficients_json(Side side, int n, int r,
                                    const CoefficientVector& coefficients) {
  json values = json::object();
  for (std::size_t a = 0; a < coefficients.elements.size(); ++a) {
    if (coefficients.values[a] == 0) continue;
    values[coefficients.elements[a].to_string()] =
        rational_to_string(coefficients.values[a]);
  }
  json document{{"format", 1},
                {"side", side_to_string(side)},
                {"n", n},
                {"r", r},
                {"coefficients", values}};
  return document.dump(2) + "\n";
}

CoefficientVector align_coefficients(
    const BasisSet& basis,
    const std::vector<std::pair<Permutation, Rational>>& values) {
  CoefficientVector out{basis.elements,
                        std::vector<Rational>(basis.elements.size(), 0)};
  for (const auto& [p, value] : values) {
    bool found = false;
    for (std::size_t a = 0; a < out.elements.size(); ++a) {
      if (out.elements[a] == p) {
        out.values[a] = value;
        found = true;
        break;
      }
    }
    if (!found) {
      throw DomainError("'" + p.to_string() + "' is not a basis element");
    }
  }
  return out;
}

std::string write_basis_json(const BasisSet& basis) {
  json elements = json::array();
  for (const Permutation& p : basis.elements) {
    elements.push_back(
        {{"word", p.to_string()}, {"length", coxeter_length(p)}});
  }
  json document{{"format", 1},
                {"side", side_to_string(basis.side)},
                {"n", basis.n},
                {"r", basis.r},
                {"elements", elements}};
  return document.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw DomainError("failed writing '" + path + "'");
}

}  // namespace candec
