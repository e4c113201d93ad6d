// zariski: command-line front end for the divisorial Zariski decomposition
// library.
//
// Exit codes: 0 success, 1 check failure, 2 not pseudo-effective,
// 3 invalid input (parse error, invalid model, bad arguments).

#include "zariski/fixtures.hpp"
#include "zariski/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using zariski::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitNotPseudoEffective = 2;
constexpr int kExitInvalidInput = 3;

struct Outcome {
  int exit_code = kExitOk;
  Json report;
  std::string text;
};

struct InvalidInput : std::runtime_error {
  InvalidInput(const std::string& what, Json details = Json())
      : std::runtime_error(what), details(std::move(details)) {}
  Json details;
};

zariski::RadicandOptions radicand_options() {
  zariski::RadicandOptions opts;
  if (const char* env = std::getenv("ZARISKI_SQUAREFREE_BOUND")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      opts.trial_bound = v;
    } catch (const std::exception&) {
      throw InvalidInput(std::string("ZARISKI_SQUAREFREE_BOUND is not a nonnegative integer: ") +
                         env);
    }
  }
  return opts;
}

Json violations_json(const zariski::ValidationReport& rep) {
  Json v = Json::array();
  for (const auto& x : rep.violations) v.push_back(Json{{"message", x.message}, {"indices", x.indices}});
  return v;
}

zariski::ConeModel load_valid_model(const std::string& path, std::vector<std::string>* warnings) {
  zariski::ConeModel model = zariski::io::load_model(path);
  auto rep = zariski::validate(model);
  if (!rep.ok()) {
    throw InvalidInput("model '" + path + "' is invalid", Json{{"violations", violations_json(rep)}});
  }
  if (warnings) *warnings = rep.warnings;
  return model;
}

Json not_pseff_json(const zariski::NotPseudoEffective& e) {
  Json j{{"status", "not-pseudo-effective"},
         {"reason", zariski::reason_name(e.reason())},
         {"message", e.what()}};
  if (!e.offending_subset.empty()) j["offending_subset"] = e.offending_subset;
  if (e.reason() == zariski::NotPseudoEffective::Reason::kOutsidePositiveCone) {
    j["q_self"] = e.q_self.str();
    j["q_ample"] = e.q_ample.str();
  }
  return j;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string decomposition_text(const zariski::Decomposition& d, const zariski::ConeModel& model) {
  std::ostringstream os;
  os << "alpha          " << d.alpha.str() << "\n";
  os << "positive part  " << d.positive_part.str() << "\n";
  os << "negative part  ";
  if (d.negative_coeffs.empty()) os << "0";
  for (std::size_t i = 0; i < d.negative_coeffs.size(); ++i) {
    os << (i ? " + " : "") << d.negative_coeffs[i].second << "*" << d.negative_coeffs[i].first;
  }
  os << "\nvolume         " << zariski::pow(model.q(d.positive_part), model.m) << "\n";
  os << "iterations     " << d.iterations << "\n";
  os << "certificate    " << (d.certificate.all() ? "all checks passed" : "FAILED") << "\n";
  return os.str();
}

Outcome cmd_decompose(const std::string& model_path, const std::string& literal) {
  Outcome out;
  std::vector<std::string> warnings;
  auto model = load_valid_model(model_path, &warnings);
  auto alpha = zariski::io::parse_class_literal(literal, model.rank());
  out.report["inputs"] = Json{{"model", model_path}, {"class", zariski::io::class_literal(alpha)}};
  if (!warnings.empty()) out.report["warnings"] = warnings;
  try {
    auto d = zariski::decompose(model, alpha);
    Json result = zariski::io::to_json(d, model);
    out.report["result"] = result;
    out.report["certificate"] = result["certificate"];
    out.text = decomposition_text(d, model);
  } catch (const zariski::NotPseudoEffective& e) {
    out.exit_code = kExitNotPseudoEffective;
    out.report["result"] = not_pseff_json(e);
    out.text = std::string("not pseudo-effective (") + zariski::reason_name(e.reason()) + "): " +
               e.what() + "\n";
  }
  return out;
}

Outcome cmd_exceptional(const std::string& model_path, std::optional<std::size_t> max_size) {
  Outcome out;
  auto model = load_valid_model(model_path, nullptr);
  std::size_t limit = max_size.value_or(model.rank());
  auto families = zariski::enumerate_exceptional_families(model, limit);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& fam : families) {
    std::vector<std::string> names;
    for (std::size_t i : fam) names.push_back(model.primes[i].name);
    list.push_back(names);
    text << "{" << join(names, ", ") << "}\n";
  }
  out.report["inputs"] = Json{{"model", model_path}, {"max_size", std::min(limit, model.rank())}};
  out.report["result"] = Json{{"families", list}, {"nonempty_count", families.size() - 1}};
  out.text = text.str() + std::to_string(families.size() - 1) + " nonempty exceptional families\n";
  return out;
}

std::vector<std::string> read_class_lines(const std::string& path) {
  std::istringstream in(zariski::io::read_file(path));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

Outcome cmd_chambers(const std::string& model_path, const std::string& classes_path) {
  Outcome out;
  auto model = load_valid_model(model_path, nullptr);
  auto lines = read_class_lines(classes_path);
  Json classes = Json::array();
  // support (as a joined key) -> member indices, in first-seen order
  std::vector<std::pair<std::vector<std::string>, std::vector<std::size_t>>> chambers;
  std::ostringstream text;
  bool any_failed = false;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    zariski::ClassVector alpha;
    try {
      alpha = zariski::io::parse_class_literal(lines[k], model.rank());
    } catch (const zariski::io::ParseError& e) {
      throw InvalidInput(classes_path + ", class " + std::to_string(k + 1) + ": " + e.what());
    }
    try {
      auto d = zariski::decompose(model, alpha);
      classes.push_back(Json{{"class", zariski::io::class_literal(alpha)},
                             {"chamber", d.support},
                             {"positive_part", zariski::io::to_json(d.positive_part)}});
      auto it = std::find_if(chambers.begin(), chambers.end(),
                             [&](const auto& c) { return c.first == d.support; });
      if (it == chambers.end()) {
        chambers.push_back({d.support, {k}});
      } else {
        it->second.push_back(k);
      }
      text << zariski::io::class_literal(alpha) << "  ->  {" << join(d.support, ", ") << "}\n";
    } catch (const zariski::NotPseudoEffective& e) {
      any_failed = true;
      Json j = not_pseff_json(e);
      j["class"] = zariski::io::class_literal(alpha);
      classes.push_back(j);
      text << zariski::io::class_literal(alpha) << "  ->  not pseudo-effective\n";
    }
  }
  Json cj = Json::array();
  for (const auto& [support, members] : chambers) {
    cj.push_back(Json{{"support", support}, {"members", members}});
  }
  out.report["inputs"] = Json{{"model", model_path}, {"classes", classes_path}};
  out.report["result"] = Json{{"classes", classes}, {"chambers", cj}};
  out.text = text.str();
  if (any_failed) out.exit_code = kExitNotPseudoEffective;
  return out;
}

Outcome cmd_cutkosky(const std::string& base_text) {
  Outcome out;
  auto base = zariski::io::parse_base(base_text);
  if (auto why = base.invalid_reason()) throw InvalidInput("invalid base surface: " + *why);
  auto opts = radicand_options();
  auto mu = zariski::compute_mu_L(base, opts);
  auto z = zariski::BundleClass<zariski::QuadExt>{zariski::QuadExt(1) - mu.mu, mu.mu,
                                                  zariski::QuadExt(0)};
  auto v = zariski::intersect3(base, z, z, z);
  Json roots = Json::array();
  for (const auto& r : mu.roots) roots.push_back(zariski::io::to_json(r));
  out.report["inputs"] = Json{{"base", Json{{"D_sq", base.d_sq.str()},
                                            {"DH", base.dh.str()},
                                            {"H_sq", base.h_sq.str()}}}};
  out.report["result"] = Json{{"mu_L", zariski::io::to_json(mu.mu)},
                              {"mu_quadratic_roots", roots},
                              {"zariski_projection_L", zariski::io::to_json(z)},
                              {"volume_L", zariski::io::to_json(v)},
                              {"rational", v.is_rational()},
                              {"approximate", Json{{"mu_L", mu.mu.decimal(12)},
                                                   {"volume_L", v.decimal(12)}}}};
  if (!mu.radicand_fully_reduced) {
    out.report["warnings"] = Json::array({"radicand not fully reduced within the trial bound"});
  }
  std::ostringstream text;
  text << "mu_L     = " << mu.mu << "   (approximate " << mu.mu.decimal(12) << ")\n";
  text << "Z(L)     = (" << z.t << ") L + (" << z.x << ") pi^*D\n";
  text << "v(L)     = " << v << "   (approximate " << v.decimal(12) << ")\n";
  text << "rational = " << (v.is_rational() ? "yes" : "no") << "\n";
  out.text = text.str();
  return out;
}

Outcome cmd_check(const std::string& model_path, const std::string& decomposition_path) {
  Outcome out;
  auto model = load_valid_model(model_path, nullptr);
  Json j = zariski::io::parse_json_text(zariski::io::read_file(decomposition_path));
  if (j.is_object() && j.contains("result")) j = j["result"];
  auto d = zariski::io::decomposition_from_json(j);
  if (d.alpha.size() != model.rank()) {
    throw InvalidInput("decomposition rank does not match the model");
  }
  auto rep = zariski::verify_decomposition(model, d.alpha, d.positive_part, d.negative_coeffs);
  Json violations = rep.violations;
  bool stored_claims_match = rep.certificate == d.certificate;
  out.report["inputs"] = Json{{"model", model_path}, {"decomposition", decomposition_path}};
  out.report["result"] = Json{{"ok", rep.ok()},
                              {"reconstruction", rep.reconstruction},
                              {"violations", violations},
                              {"stored_certificate_matches", stored_claims_match}};
  out.report["certificate"] = zariski::io::to_json(rep.certificate);
  std::ostringstream text;
  text << (rep.ok() ? "decomposition verified\n" : "decomposition FAILED verification\n");
  for (const auto& v : rep.violations) text << "  " << v << "\n";
  out.text = text.str();
  if (!rep.ok()) out.exit_code = kExitCheckFailed;
  return out;
}

Outcome cmd_validate(const std::string& model_path) {
  Outcome out;
  auto model = zariski::io::load_model(model_path);
  auto rep = zariski::validate(model);
  out.report["inputs"] = Json{{"model", model_path}};
  out.report["result"] = Json{{"ok", rep.ok()},
                              {"violations", violations_json(rep)},
                              {"warnings", rep.warnings}};
  std::ostringstream text;
  text << (rep.ok() ? "model is valid\n" : "model is INVALID\n");
  for (const auto& v : rep.violations) text << "  violation: " << v.message << "\n";
  for (const auto& w : rep.warnings) text << "  warning: " << w << "\n";
  out.text = text.str();
  if (!rep.ok()) out.exit_code = kExitInvalidInput;
  return out;
}

zariski::FixtureSpec parse_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4) throw InvalidInput("--spec expects rank,primes,seed,bound");
  try {
    zariski::FixtureSpec spec;
    spec.rank = std::stoul(parts[0]);
    spec.prime_count = std::stoul(parts[1]);
    spec.seed = std::stoull(parts[2]);
    spec.coefficient_bound = std::stol(parts[3]);
    if (spec.rank < 2 || spec.rank > 6) throw InvalidInput("fixture rank must be in 2..6");
    if (spec.prime_count > 6) throw InvalidInput("fixture prime count must be in 0..6");
    if (spec.coefficient_bound < 1) throw InvalidInput("coefficient bound must be positive");
    return spec;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("--spec expects four integers rank,primes,seed,bound");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisorial Zariski decompositions on Lorentzian lattices"};
  app.require_subcommand(1);
  bool compact = false;
  bool pretty = false;
  app.add_flag("--json", compact, "Compact single-line JSON output");
  app.add_flag("--pretty", pretty, "Human-readable text output");

  std::string model_path, class_literal, classes_path, base, decomposition_path, spec_text;
  std::optional<std::size_t> max_size;

  auto* dec = app.add_subcommand("decompose", "Decompose a class into positive and negative parts");
  dec->add_option("--model", model_path, "Model file")->required();
  dec->add_option("--class", class_literal, "Class literal p/q,p/q,...")->required();

  auto* exc = app.add_subcommand("exceptional", "Enumerate exceptional prime families");
  exc->add_option("--model", model_path, "Model file")->required();
  exc->add_option("--max-size", max_size, "Largest family size (clamped to the rank)");

  auto* cha = app.add_subcommand("chambers", "Zariski chambers of a list of classes");
  cha->add_option("--model", model_path, "Model file")->required();
  cha->add_option("--classes", classes_path, "File with one class literal per line")->required();

  auto* cut = app.add_subcommand("cutkosky", "mu_L, Z(L) and v(L) on P(O(D) + O(-H))");
  cut->add_option("--base", base, "D^2,D.H,H^2")->required();

  auto* chk = app.add_subcommand("check", "Re-verify a stored decomposition");
  chk->add_option("--model", model_path, "Model file")->required();
  chk->add_option("--decomposition", decomposition_path, "Decomposition JSON")->required();

  auto* val = app.add_subcommand("validate", "Validate a model file");
  val->add_option("--model", model_path, "Model file")->required();

  auto* fix = app.add_subcommand("fixtures", "Emit a random valid model file");
  fix->add_option("--spec", spec_text, "rank,primes,seed,bound")->required();

  for (auto* sub : {dec, exc, cha, cut, chk, val, fix}) {
    sub->add_flag("--json", compact, "Compact single-line JSON output");
    sub->add_flag("--pretty", pretty, "Human-readable text output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (fix->parsed()) {
      auto model = zariski::gen_model(parse_spec(spec_text));
      std::cout << (compact ? zariski::io::to_json(model).dump()
                            : zariski::io::to_json(model).dump(2))
                << "\n";
      return kExitOk;
    }
    if (dec->parsed()) out = cmd_decompose(model_path, class_literal);
    if (exc->parsed()) out = cmd_exceptional(model_path, max_size);
    if (cha->parsed()) out = cmd_chambers(model_path, classes_path);
    if (cut->parsed()) out = cmd_cutkosky(base);
    if (chk->parsed()) out = cmd_check(model_path, decomposition_path);
    if (val->parsed()) out = cmd_validate(model_path);
  } catch (const InvalidInput& e) {
    out.exit_code = kExitInvalidInput;
    out.report["error"] = Json{{"category", "invalid-input"}, {"message", e.what()}};
    if (!e.details.is_null()) out.report["error"]["details"] = e.details;
    out.text = std::string("error: ") + e.what() + "\n";
  } catch (const zariski::io::ParseError& e) {
    out.exit_code = kExitInvalidInput;
    out.report["error"] = Json{{"category", "parse-error"}, {"message", e.what()}};
    if (e.line) {
      out.report["error"]["line"] = e.line;
      out.report["error"]["column"] = e.column;
    }
    out.text = std::string("parse error: ") + e.what() + "\n";
  } catch (const zariski::GenerationExhausted& e) {
    out.exit_code = kExitInvalidInput;
    out.report["error"] = Json{{"category", "generation-exhausted"}, {"message", e.what()}};
    out.text = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    out.exit_code = kExitInvalidInput;
    out.report["error"] = Json{{"category", "invalid-input"}, {"message", e.what()}};
    out.text = std::string("error: ") + e.what() + "\n";
  }

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json report{{"command", command}};
  for (const auto& [k, v] : out.report.items()) report[k] = v;
  report["exit_code"] = out.exit_code;
  report["timing_ms"] = ms;

  if (pretty) {
    std::cout << out.text;
  } else {
    std::cout << (compact ? report.dump() : report.dump(2)) << "\n";
  }
  return out.exit_code;
}
