#pragma once

// JSON persistence for models, classes, decompositions and quadratic-field
// values. Rationals are always written as strings "p/q" or "p".

#include "zariski/cutkosky.hpp"
#include "zariski/engine.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zariski::io {

using Json = nlohmann::ordered_json;

/// Malformed or semantically invalid input. `line`/`column` are 1-based and
/// zero when unknown.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line(line), column(column) {}
  std::size_t line;
  std::size_t column;

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
};

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j, std::string_view where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(where) + ": " + e.what());
  }
  throw ParseError(std::string(where) + ": expected a rational string \"p/q\", got " + j.dump());
}

inline Json to_json(const ClassVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

inline ClassVector class_from_json(const Json& j, std::string_view where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.push_back(rational_from_json(j[i], std::string(where) + "[" + std::to_string(i) + "]"));
  }
  return ClassVector(std::move(coords));
}

/// "p/q,p/q,..." -> class of the given rank
inline ClassVector parse_class_literal(std::string_view text, std::size_t rank) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      coords.push_back(Rational::parse(piece));
    } catch (const std::invalid_argument& e) {
      throw ParseError("class literal entry " + std::to_string(coords.size() + 1) + ": " +
                       e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != rank) {
    throw ParseError("class literal has " + std::to_string(coords.size()) +
                     " entries, model rank is " + std::to_string(rank));
  }
  return ClassVector(std::move(coords));
}

inline std::string class_literal(const ClassVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out;
}

inline Json to_json(const ConeModel& model) {
  Json form = Json::array();
  for (const auto& row : model.form.rows()) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(to_json(x));
    form.push_back(jr);
  }
  Json primes = Json::object();
  for (const auto& p : model.primes) primes[p.name] = to_json(p.vec);
  return Json{{"rank", model.rank()},
              {"form", form},
              {"primes", primes},
              {"ample", to_json(model.ample)},
              {"m", model.m}};
}

/// Structural parsing only; semantic checks are left to validate().
inline ConeModel model_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("model file must contain a JSON object");
  for (const char* key : {"rank", "form", "ample"}) {
    if (!j.contains(key)) throw ParseError(std::string("model is missing \"") + key + "\"");
  }
  if (!j["rank"].is_number_unsigned() && !j["rank"].is_number_integer()) {
    throw ParseError("\"rank\" must be a positive integer");
  }
  const long rank_value = j["rank"].get<long>();
  if (rank_value <= 0) throw ParseError("\"rank\" must be a positive integer");
  const auto rank = static_cast<std::size_t>(rank_value);

  const Json& jf = j["form"];
  if (!jf.is_array() || jf.size() != rank) {
    throw ParseError("\"form\" must be a " + std::to_string(rank) + "x" + std::to_string(rank) +
                     " array of rationals");
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < rank; ++i) {
    if (!jf[i].is_array() || jf[i].size() != rank) {
      throw ParseError("form row " + std::to_string(i) + " must have " + std::to_string(rank) +
                       " entries");
    }
    std::vector<Rational> row;
    for (std::size_t k = 0; k < rank; ++k) {
      row.push_back(rational_from_json(
          jf[i][k], "form[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    rows.push_back(std::move(row));
  }
  ConeModel model;
  try {
    model.form = SymmetricForm(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("form: ") + e.what());
  }
  if (j.contains("primes")) {
    const Json& jp = j["primes"];
    if (!jp.is_object()) throw ParseError("\"primes\" must be an object of name -> class");
    for (const auto& [name, vec] : jp.items()) {
      model.primes.push_back({name, class_from_json(vec, "primes." + name)});
    }
  }
  model.ample = class_from_json(j["ample"], "ample");
  if (j.contains("m")) {
    if (!j["m"].is_number_integer() || j["m"].get<long>() <= 0) {
      throw ParseError("\"m\" must be a positive integer");
    }
    model.m = j["m"].get<unsigned>();
  }
  return model;
}

/// Parses JSON text, translating byte offsets of syntax errors to line and
/// column.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw ParseError(pos == std::string::npos ? msg : msg.substr(pos), line, col);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ConeModel load_model(const std::string& path) {
  return model_from_json(parse_json_text(read_file(path)));
}

inline Json to_json(const Certificate& c) {
  return Json{{"orthogonality", c.orthogonality_checked},
              {"gram_negative_definite", c.gram_negdef_checked},
              {"effectivity", c.effectivity_checked},
              {"dual_nef", c.dual_nef_checked}};
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate c;
  auto flag = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_boolean()) {
      throw ParseError(std::string("certificate is missing boolean \"") + key + "\"");
    }
    return j[key].get<bool>();
  };
  c.orthogonality_checked = flag("orthogonality");
  c.gram_negdef_checked = flag("gram_negative_definite");
  c.effectivity_checked = flag("effectivity");
  c.dual_nef_checked = flag("dual_nef");
  return c;
}

inline Json to_json(const Decomposition& d, const ConeModel& model) {
  Json neg = Json::object();
  for (const auto& [name, c] : d.negative_coeffs) neg[name] = to_json(c);
  return Json{{"alpha", to_json(d.alpha)},
              {"positive_part", to_json(d.positive_part)},
              {"negative_part", neg},
              {"support", d.support},
              {"active_set", d.active_set},
              {"volume", to_json(pow(model.q(d.positive_part), model.m))},
              {"certificate", to_json(d.certificate)},
              {"iterations", d.iterations}};
}

inline Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("decomposition must be a JSON object");
  for (const char* key : {"alpha", "positive_part", "negative_part", "certificate"}) {
    if (!j.contains(key)) throw ParseError(std::string("decomposition is missing \"") + key + "\"");
  }
  Decomposition d;
  d.alpha = class_from_json(j["alpha"], "alpha");
  d.positive_part = class_from_json(j["positive_part"], "positive_part");
  if (!j["negative_part"].is_object()) throw ParseError("\"negative_part\" must be an object");
  for (const auto& [name, c] : j["negative_part"].items()) {
    d.negative_coeffs.emplace_back(name, rational_from_json(c, "negative_part." + name));
  }
  auto names = [&](const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    for (const auto& n : j[key]) {
      if (!n.is_string()) throw ParseError(std::string("\"") + key + "\" entries must be names");
      out.push_back(n.get<std::string>());
    }
    return out;
  };
  d.support = names("support");
  d.active_set = names("active_set");
  if (j.contains("iterations")) {
    if (!j["iterations"].is_number_unsigned()) throw ParseError("\"iterations\" must be a count");
    d.iterations = j["iterations"].get<std::size_t>();
  }
  d.certificate = certificate_from_json(j["certificate"]);
  return d;
}

inline Json to_json(const QuadExt& x) {
  Json d;
  if (x.d().fits_slong_p()) {
    d = x.d().get_si();
  } else {
    d = x.d().get_str();
  }
  return Json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", d}};
}

inline QuadExt quad_from_json(const Json& j, std::string_view where) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d")) {
    throw ParseError(std::string(where) + ": expected an object with a, b, d");
  }
  Integer d;
  if (j["d"].is_number_integer()) {
    d = Integer(j["d"].dump(), 10);
  } else if (j["d"].is_string()) {
    try {
      d = Integer(j["d"].get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw ParseError(std::string(where) + ".d: not an integer");
    }
  } else {
    throw ParseError(std::string(where) + ".d: not an integer");
  }
  if (d < 0) throw ParseError(std::string(where) + ".d: negative radicand");
  return QuadExt(rational_from_json(j["a"], std::string(where) + ".a"),
                 rational_from_json(j["b"], std::string(where) + ".b"), d);
}

inline Json to_json(const BundleClass<QuadExt>& c) {
  return Json{{"L", to_json(c.t)}, {"pullback_D", to_json(c.x)}, {"pullback_H", to_json(c.y)}};
}

/// "a,b,c" -> BaseSurface
inline BaseSurface parse_base(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      parts.push_back(Rational::parse(piece));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("base entry: ") + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw ParseError("--base expects three values D^2,D.H,H^2");
  return BaseSurface{parts[0], parts[1], parts[2]};
}

}  // namespace zariski::io
