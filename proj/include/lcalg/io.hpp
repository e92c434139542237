#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lcalg/cayley_dickson.hpp"
#include "lcalg/lowdim.hpp"

namespace lcalg {

using json = nlohmann::json;

// Algebra file format:
//   {"dim": n, "unit": k | null, "labels": [...],
//    "constants": [[[c_ij0, ..., c_ij(n-1)] for j] for i],
//    "grading": {"even": [...], "odd": [...]}}
// Coefficients are strings "p/q" or integers. Grading parts list basis
// indices, or coordinate vectors for non-coordinate gradings.

inline json rational_json(const Rational& r) { return to_string(r); }

inline Rational json_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) throw ParseError("floating-point coefficient; write it as a string \"p/q\"");
  throw ParseError("expected a rational number, got " + j.dump());
}

inline json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rational_json(c));
  return out;
}

inline Vector json_vector(const json& j, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vector v;
  for (const auto& c : j) v.push_back(json_rational(c));
  if (size && v.size() != *size) throw ParseError("vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(*size));
  return v;
}

inline json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

inline Matrix json_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(json_vector(r));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw ParseError("matrix rows have different lengths");
  return Matrix::from_rows(rows, rows[0].size());
}

inline json subspace_json(const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.basis_vectors()) out.push_back(vector_json(v));
  return out;
}

struct AlgebraFile {
  Algebra algebra;
  std::optional<Grading> grading;
};

inline json algebra_json(const Algebra& a, const std::optional<Grading>& g = std::nullopt) {
  const std::size_t n = a.dim();
  json out;
  out["dim"] = n;
  out["unit"] = a.unit() ? json(*a.unit()) : json(nullptr);
  out["labels"] = a.labels();
  json constants = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json entry = json::array();
      for (std::size_t k = 0; k < n; ++k) entry.push_back(rational_json(a.constant(i, j, k)));
      row.push_back(std::move(entry));
    }
    constants.push_back(std::move(row));
  }
  out["constants"] = std::move(constants);
  if (g) {
    auto part = [&](const Subspace& s) {
      json idx = json::array();
      bool coordinate = true;
      for (const auto& v : s.basis_vectors()) {
        std::size_t nonzero = 0, where = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(v[k]) != 0) ++nonzero, where = k;
        if (nonzero != 1 || v[where] != 1) coordinate = false;
        idx.push_back(where);
      }
      return coordinate ? idx : subspace_json(s);
    };
    out["grading"] = {{"even", part(g->even)}, {"odd", part(g->odd)}};
  }
  return out;
}

inline AlgebraFile algebra_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    if (!j.contains("dim") || !j.contains("constants")) throw ParseError("algebra file needs \"dim\" and \"constants\"");
    const auto n = j.at("dim").get<std::size_t>();
    if (n == 0) throw ParseError("dim must be positive");
    const json& c = j.at("constants");
    if (!c.is_array() || c.size() != n) throw ParseError("constants must have dim rows");
    std::vector<Rational> constants(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!c[i].is_array() || c[i].size() != n) throw ParseError("constants row " + std::to_string(i) + " must have dim entries");
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = json_vector(c[i][k], n);
        for (std::size_t l = 0; l < n; ++l) constants[(i * n + k) * n + l] = v[l];
      }
    }
    std::optional<std::size_t> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) unit = j.at("unit").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    AlgebraFile out{Algebra(n, std::move(constants), unit, std::move(labels)), std::nullopt};
    if (j.contains("grading")) {
      const json& g = j.at("grading");
      auto part = [&](const char* key) {
        if (!g.contains(key)) return Subspace(n);
        std::vector<Vector> vs;
        for (const auto& e : g.at(key)) {
          if (e.is_number_integer()) {
            const auto idx = e.get<std::size_t>();
            if (idx >= n) throw ParseError("grading index out of range");
            vs.push_back(unit_vector(n, idx));
          } else {
            vs.push_back(json_vector(e, n));
          }
        }
        return Subspace::span(vs, n);
      };
      out.grading = Grading{part("even"), part("odd")};
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra file: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string("malformed algebra file: ") + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string normalize_label(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (ch != '_') out.push_back(ch);
  return out;
}

/// Linear combination of basis labels with rational coefficients, e.g.
/// "f1 - f4", "2/3*e8 + 1", "e_8/2 + e8/2". A term without a label is a
/// multiple of the unit. Underscores in labels are ignored.
inline Vector parse_element(const std::string& text, const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(normalize_label(l));
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) { throw ParseError(what + " at position " + std::to_string(pos) + " in '" + text + "'"); };
  // factor: number or label
  struct Factor {
    Rational value = 1;
    std::optional<std::size_t> label;
  };
  auto factor = [&]() -> Factor {
    skip();
    if (pos >= text.size()) fail("expected a number or label");
    char ch = text[pos];
    Factor f;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
      std::string num = text.substr(start, pos - start);
      f.value = parse_rational(num);
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      const std::string raw = text.substr(start, pos - start);
      const std::string name = normalize_label(raw);
      for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] == name) {
          f.label = i;
          return f;
        }
      }
      pos = start;
      fail("unknown label '" + raw + "'");
    }
    if (ch == '(') fail("parentheses are not supported");
    fail(std::string("unexpected character '") + ch + "'");
    return f;
  };
  Vector out = zero_vector(n);
  skip();
  if (pos >= text.size()) fail("empty expression");
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Factor term = factor();
    Rational coeff = term.value;
    std::optional<std::size_t> label = term.label;
    while (true) {
      skip();
      if (pos >= text.size() || (text[pos] != '*' && text[pos] != '/')) break;
      char op = text[pos++];
      Factor f = factor();
      if (f.label) {
        if (label || op == '/') fail("a term may contain one label, used as a factor");
        label = f.label;
      } else if (op == '*') {
        coeff *= f.value;
      } else {
        if (sgn(f.value) == 0) fail("division by zero");
        coeff /= f.value;
      }
    }
    if (label) {
      out[*label] += sign * coeff;
    } else {
      if (!a.is_unital()) fail("constant term in a non-unital algebra");
      out[*a.unit()] += sign * coeff;
    }
  }
  return out;
}

/// Short textual form of an element using the algebra's labels.
inline std::string format_element(const Algebra& a, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const bool neg = sgn(v[i]) < 0;
    const Rational mag = abs(v[i]);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const bool is_unit = a.unit() && *a.unit() == i;
    if (is_unit) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += a.label(i);
    }
  }
  return out.empty() ? "0" : out;
}

/// Multiplication table, entries formatted with format_element.
inline std::string table_markdown(const Algebra& a) {
  std::ostringstream out;
  out << "| |";
  for (std::size_t j = 0; j < a.dim(); ++j) out << " " << a.label(j) << " |";
  out << "\n|---|";
  for (std::size_t j = 0; j < a.dim(); ++j) out << "---|";
  out << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out << "| **" << a.label(i) << "** |";
    for (std::size_t j = 0; j < a.dim(); ++j) out << " " << format_element(a, a.multiply(a.basis(i), a.basis(j))) << " |";
    out << "\n";
  }
  return out.str();
}

inline std::string table_csv(const Algebra& a) {
  auto quote = [](const std::string& s) { return s.find_first_of(",\" ") == std::string::npos ? s : "\"" + s + "\""; };
  std::ostringstream out;
  for (std::size_t j = 0; j < a.dim(); ++j) out << "," << quote(a.label(j));
  out << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out << quote(a.label(i));
    for (std::size_t j = 0; j < a.dim(); ++j) out << "," << quote(format_element(a, a.multiply(a.basis(i), a.basis(j))));
    out << "\n";
  }
  return out.str();
}

/// {"T": [[...],[...],[...]], "u": [...]} with rational entries.
inline Params4Exact params4_from_json(const json& j) {
  try {
    Params4Exact p;
    Matrix t = json_matrix(j.at("T"));
    if (t.rows() != 3 || t.cols() != 3) throw ParseError("T must be 3x3");
    p.T = t;
    p.u = j.contains("u") ? json_vector(j.at("u"), 3) : zero_vector(3);
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed (T, u) parameters: ") + e.what());
  }
}

inline json params4_json(const Params4Exact& p) { return {{"T", matrix_json(p.T)}, {"u", vector_json(p.u)}}; }

inline json params4_json(const Params4& p) {
  json t = json::array();
  for (int i = 0; i < 3; ++i) t.push_back({p.T(i, 0), p.T(i, 1), p.T(i, 2)});
  return {{"T", t}, {"u", {p.u(0), p.u(1), p.u(2)}}};
}

inline json eigen_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace lcalg
