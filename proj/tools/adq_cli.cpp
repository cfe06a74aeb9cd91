#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "adq/hilbert.hpp"
#include "adq/quantize.hpp"
#include "adq/relations.hpp"
#include "adq/report.hpp"
#include "adq/strata.hpp"

namespace {

using namespace adq;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Raised for bad requests; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Settings {
  std::string family = "U";
  int rank = 2;
  double tolerance = 1e-9;
  int degree_cap = 6;
  std::string bracket_scale = "1";
  std::string output = "-";
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

TorusModel make_model(const Settings& s) {
  return build_torus_model(parse_family(s.family), s.rank, parse_rational(s.bracket_scale));
}

Json config_json(const Settings& s, const TorusModel& m) {
  return {{"family", s.family},
          {"rank", s.rank},
          {"tolerance", s.tolerance},
          {"degree_cap", s.degree_cap},
          {"bracket_scale", s.bracket_scale},
          {"model", model_json(m)}};
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string status_of(std::size_t passed, std::size_t total) {
  if (passed == total) return "pass";
  return passed == 0 ? "fail" : "partial";
}

int emit_report(const Settings& s, const TorusModel& m, const std::string& command, Json results,
                std::size_t passed, std::size_t total, const Stopwatch& clock) {
  const std::string status = status_of(passed, total);
  Json report = {{"command", command},
                 {"status", status},
                 {"version", kToolkitVersion},
                 {"config", config_json(s, m)},
                 {"results", std::move(results)},
                 {"timing_seconds", clock.seconds()}};
  Output out(s.output);
  out.stream() << report.dump(2) << "\n";
  return status == "pass" ? kPass : kFail;
}

Complex complex_from(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw UsageError("complex values are numbers or [re, im] pairs");
}

std::vector<Complex> complex_list(const Json& j) {
  if (!j.is_array()) throw UsageError("expected an array of complex values");
  std::vector<Complex> out;
  for (const auto& x : j) out.push_back(complex_from(x));
  return out;
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  try {
    return complex_list(Json::parse(text));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed point: ") + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("expected a comma separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

// ------------------------------------------------------------------ verify

Json audit_json(const BracketAudit& a) {
  return {{"trials", a.trials},
          {"antisymmetry_failures", a.antisymmetry_failures},
          {"leibniz_failures", a.leibniz_failures},
          {"jacobi_failures", a.jacobi_failures},
          {"pass", a.pass()}};
}

int cmd_verify(const Settings& s, const std::string& target, int trials, std::uint64_t seed) {
  Stopwatch clock;
  const auto model = make_model(s);
  Json results = Json::array();
  std::size_t passed = 0, total = 0;

  if (target == "tau-theorem") {
    if (model.family != Family::U) throw UsageError("tau-theorem applies to the U family");
    for (const auto& c : verify_tau_theorem(model.rank, model.rank)) {
      results.push_back({{"pair", {c.j1, c.k1, c.j2, c.k2}},
                         {"coefficient", c.coefficient},
                         {"pass", c.pass},
                         {"residual", polynomial_json(c.residual, model.vars)}});
      passed += c.pass;
      ++total;
    }
  } else if (target == "jacobi") {
    const BracketFn bracket = [&](const LaurentPoly& f, const LaurentPoly& g) { return model.poisson(f, g); };
    const auto audit = jacobi_check(bracket, model.vars.size(), trials, 2, seed, model.ideal);
    results.push_back(audit_json(audit));
    passed = audit.pass();
    total = 1;
  } else {
    std::vector<Relation> selected;
    if (target.starts_with("relation:")) {
      const std::string tag = target.substr(9);
      auto rel = find_relation(tag, &model);
      if (!rel) throw UsageError("unknown relation tag '" + tag + "'");
      selected.push_back(*rel);
    } else {
      for (const auto& r : model_relations(model))
        if (r.tag == target || r.tag.starts_with(target + "-") || target == "relations") selected.push_back(r);
      if (selected.empty()) throw UsageError("no check named '" + target + "' for this model");
    }
    for (const auto& r : selected) {
      const auto check = verify_relation(model, r);
      results.push_back(relation_json(r, check));
      passed += check.pass;
      ++total;
    }
  }
  return emit_report(s, model, "verify " + target, std::move(results), passed, total, clock);
}

// ---------------------------------------------------------------- stratify

Json stratify_record(const TorusModel& model, const BracketMatrix& brackets, const HilbertMap& map,
                     const Json& request, double tolerance) {
  std::vector<Complex> z;
  std::vector<Complex> sigma;
  if (request.contains("z")) {
    z = complex_list(request.at("z"));
    sigma = elementary_values(z);
  } else if (request.contains("sigma")) {
    sigma = complex_list(request.at("sigma"));
    if (model.family == Family::SU && static_cast<int>(sigma.size()) + 1 == model.rank) sigma.push_back(1.0);
  } else {
    throw UsageError("each line needs a \"z\" or a \"sigma\" array");
  }
  if (static_cast<int>(sigma.size()) != model.rank) throw UsageError("point has the wrong number of coordinates");
  if (model.family == Family::SU) {
    Complex det = 1.0;
    for (auto x : z) det *= x;
    if (std::abs(det - 1.0) > 1e-6) throw UsageError("point is off the determinant-one torus");
  }

  const auto stratum = classify_stratum(model.family, sigma);
  // a lifted representative keeps repeated roots exactly equal
  if (z.empty()) z = stratum.representative;
  Json record = {{"sigma", Json::array()}, {"stratum", to_json(stratum)}};
  for (auto x : sigma) record["sigma"].push_back(to_json(x));
  record["rank"] = poisson_rank_at(brackets, z);

  const Eigen::MatrixXcd gram = gram_matrix(map, z);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver((gram + gram.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  const double norm = solver.eigenvalues().cwiseAbs().maxCoeff();
  record["member"] = min_eig >= -tolerance * norm;
  record["min_eigenvalue"] = min_eig;
  return record;
}

int cmd_stratify(const Settings& s, const std::string& points_path) {
  const auto model = make_model(s);
  if (model.family != Family::U && model.family != Family::SU)
    throw UsageError("stratify supports the U and SU families");
  std::ifstream in(points_path);
  if (!in) throw UsageError("cannot read points file " + points_path);
  const auto brackets = bracket_matrix(model);
  const auto map = hilbert_map(model);
  Output out(s.output);
  std::string line;
  int number = 0;
  bool all_ok = true;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = {{"line", number}};
      record.update(stratify_record(model, brackets, map, Json::parse(line), s.tolerance));
    } catch (const std::exception& e) {
      record = {{"line", number}, {"error", e.what()}};
      all_ok = false;
    }
    out.stream() << record.dump() << "\n";
  }
  return all_ok ? kPass : kFail;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const Settings& s, const std::string& cutoff_text, const std::string& stratum_text,
                 bool characters) {
  const auto model = make_model(s);
  const auto datum = weight_datum(model.family, model.rank);
  Rational cutoff;
  try {
    cutoff = parse_rational(cutoff_text);
  } catch (const Error&) {
    throw UsageError("cutoff must be a rational number");
  }
  if (cutoff < 0) throw UsageError("cutoff must be nonnegative");
  Output out(s.output);
  if (!stratum_text.empty()) {
    const auto stratum = make_stratum(model.family, parse_int_list(stratum_text));
    out.stream() << projection_json(costratified_projection_table(model, datum, cutoff, stratum)).dump() << "\n";
    return kPass;
  }
  for (const auto& e : spectrum(model, datum, cutoff, characters)) {
    Json line = spectrum_json(e, model.vars);
    line["convention"] = datum.convention();
    out.stream() << line.dump() << "\n";
  }
  return kPass;
}

// ----------------------------------------------------------------- rewrite

int cmd_rewrite(const Settings& s, const std::string& expression, const std::string& generators) {
  Stopwatch clock;
  const auto model = make_model(s);
  std::vector<NamedPolynomial> gens;
  if (generators.empty()) {
    gens = model.paired_generators();
  } else {
    std::vector<std::string> names;
    // split on commas outside parentheses so that s(1,1) stays whole
    int depth = 0;
    std::string cur;
    for (char c : generators) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        names.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) names.push_back(cur);
    gens = model.named(names);
  }
  const LaurentPoly target = model.parse(expression);
  Json result = {{"expression", expression}};
  bool ok = false;
  try {
    const auto rw = rewrite_in_generators(target, gens, s.degree_cap, model.ideal, &model.weyl);
    const bool round_trip = model.reduce(expand_rewrite(rw, gens, model.ideal)) == target;
    result["rewrite"] = to_string(rw.expression, rw.names);
    result["round_trip"] = round_trip;
    ok = round_trip;
  } catch (const NotInvariant& e) {
    result["error"] = "NotInvariant";
    result["message"] = e.what();
  } catch (const NoRepresentationWithinCap& e) {
    result["error"] = "NoRepresentationWithinCap";
    result["message"] = e.what();
    result["residual"] = polynomial_json(e.residual(), model.vars);
  }
  return emit_report(s, model, "rewrite", Json::array({result}), ok, 1, clock);
}

// --------------------------------------------------------------- relations

int cmd_relations(const Settings& s, const std::string& derive) {
  Stopwatch clock;
  const auto model = make_model(s);
  Json results = Json::array();
  std::size_t passed = 0, total = 0;
  if (!derive.empty()) {
    if (model.family != Family::U) throw UsageError("relations are derived on the U family");
    const auto rs = parse_index_pair(derive);
    if (!rs) throw UsageError("--derive expects (r,s)");
    const auto d = derive_relation(model.rank, rs->first, rs->second);
    Json j = relation_json(d.relation, d.check);
    j["beta"] = polynomial_json(d.beta, d.names);
    j["alpha"] = polynomial_json(d.alpha, d.names);
    results.push_back(std::move(j));
    passed = d.check.pass;
    total = 1;
  } else {
    for (const auto& r : model_relations(model)) {
      const auto check = verify_relation(model, r);
      results.push_back(relation_json(r, check));
      passed += check.pass;
      ++total;
    }
    if (is_spin(model.family)) {
      const auto split = spin_bracket_split(model);
      results.push_back({{"tag", "spin-bracket-split"},
                         {"origin", "computed candidates A, B"},
                         {"A", polynomial_json(split.a, model.vars)},
                         {"B", polynomial_json(split.b, model.vars)},
                         {"pass", split.invariant}});
      passed += split.invariant;
      ++total;
    }
  }
  return emit_report(s, model, "relations", std::move(results), passed, total, clock);
}

// -------------------------------------------------------------------- gram

int cmd_gram(const Settings& s, const std::string& point, bool canoe) {
  Stopwatch clock;
  const auto model = make_model(s);
  const HilbertMap map = canoe ? canoe_hilbert_map() : hilbert_map(model);
  Json result = {{"components", Json::array()}};
  for (const auto& c : map.components) result["components"].push_back(c.name);
  if (!point.empty()) {
    result["point"] = Json::array();
    const auto z = parse_complex_list(point);
    for (auto x : z) result["point"].push_back(to_json(x));
    result["matrix"] = to_json(gram_matrix(map, z));
  } else {
    const QuotientIdeal ideal = canoe ? family_ideal(Family::SU, 2) : model.ideal;
    Json rows = Json::array();
    for (const auto& row : symbolic_gram(map)) {
      Json r = Json::array();
      for (const auto& entry : row) {
        Json cell = {{"torus", polynomial_json(reduce_mod(entry, ideal), map.vars)}};
        try {
          const auto rw = rewrite_in_generators(entry, map.components, s.degree_cap, ideal);
          cell["components"] = to_string(rw.expression, rw.names);
        } catch (const NoRepresentationWithinCap&) {
          cell["components"] = nullptr;
        }
        r.push_back(std::move(cell));
      }
      rows.push_back(std::move(r));
    }
    result["symbolic"] = std::move(rows);
  }
  return emit_report(s, model, canoe ? "gram canoe" : "gram", Json::array({result}), 1, 1, clock);
}

// ------------------------------------------------------------------- canoe

int cmd_canoe(const Settings& settings, const std::vector<std::string>& points, const std::string& candidate) {
  Stopwatch clock;
  Settings s = settings;
  s.family = "SU";
  s.rank = 2;
  const auto model = build_torus_model(Family::SU, 2, parse_rational(s.bracket_scale));
  Json results = Json::array();
  std::size_t passed = 0, total = 0;
  for (const auto& p : points) {
    const auto parts = parse_complex_list("[" + p + "]");
    if (parts.empty() || parts.size() > 2 || parts[0].imag() != 0.0 || (parts.size() == 2 && parts[1].imag() != 0.0))
      throw UsageError("--z takes re or re,im");
    const auto r = su2_canoe({parts[0].real(), parts.size() == 2 ? parts[1].real() : 0.0});
    results.push_back(to_json(r));
    passed += r.relation_residual <= s.tolerance;
    ++total;
  }
  if (!candidate.empty()) {
    std::vector<double> xyb;
    for (auto x : parse_complex_list("[" + candidate + "]")) xyb.push_back(x.real());
    if (xyb.size() != 3) throw UsageError("--candidate takes X,Y,b");
    Json j = {{"candidate", xyb}};
    try {
      const auto m = psd_membership(canoe_membership_model(), canoe_candidate(xyb[0], xyb[1], xyb[2]), s.tolerance);
      j.update(to_json(m));
    } catch (const RelationViolation& e) {
      j["member"] = false;
      j["error"] = "RelationViolation";
      j["message"] = e.what();
    }
    results.push_back(std::move(j));
    ++passed;
    ++total;
  }
  if (total == 0) throw UsageError("canoe needs --z or --candidate");
  return emit_report(s, model, "canoe", std::move(results), passed, total, clock);
}

// ---------------------------------------------------------------- boundary

int cmd_boundary(const Settings& s, int samples) {
  if (samples < 1) throw UsageError("--samples must be positive");
  Output out(s.output);
  for (int i = 0; i < samples; ++i) {
    const double alpha = 2.0 * std::numbers::pi * i / samples;
    const auto [u, v] = real_boundary_su3(alpha);
    out.stream() << Json{{"alpha", alpha}, {"u", u}, {"v", v}}.dump() << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjoint quotient toolkit: invariants, brackets, relations, strata, spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--family", s.family, "U, SU, B, C, D, spinB, spinD or G2");
  app.add_option("--rank", s.rank, "rank parameter n");
  app.add_option("--tolerance", s.tolerance, "relative numerical tolerance");
  app.add_option("--degree-cap", s.degree_cap, "weighted degree cap for rewriting");
  app.add_option("--bracket-scale", s.bracket_scale, "global factor on the bracket, as a rational");
  app.add_option("--output", s.output, "output file, - for standard output");

  auto* verify = app.add_subcommand("verify", "run a named check");
  std::string target;
  int trials = 25;
  std::uint64_t seed = 1;
  verify->add_option("target", target, "tau-theorem, jacobi, relations, relation:<tag> or a family check")->required();
  verify->add_option("--trials", trials, "random triples for jacobi");
  verify->add_option("--seed", seed, "seed for jacobi");

  auto* stratify = app.add_subcommand("stratify", "classify points given as JSON lines");
  std::string points_path;
  stratify->add_option("--points", points_path, "file with one {\"z\": [...]} or {\"sigma\": [...]} per line")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "energy spectrum as JSON lines");
  std::string cutoff = "10", stratum_text;
  bool no_characters = false;
  spectrum_cmd->add_option("--cutoff", cutoff, "largest energy");
  spectrum_cmd->add_option("--stratum", stratum_text, "partition such as 2,1: emit the restriction table");
  spectrum_cmd->add_flag("--no-characters", no_characters, "omit characters");

  auto* rewrite = app.add_subcommand("rewrite", "express an invariant in generators");
  std::string expression, generators;
  rewrite->add_option("expression", expression, "invariant expression")->required();
  rewrite->add_option("--generators", generators, "comma separated generator names");

  auto* relations = app.add_subcommand("relations", "verify the model's relations or derive one");
  std::string derive;
  relations->add_option("--derive", derive, "(r,s): derive the relation for s(r,s)");

  auto* gram = app.add_subcommand("gram", "Gram matrix of the Hilbert map");
  std::string point;
  bool canoe_gram = false;
  gram->add_option("--point", point, "torus point as a JSON array of [re, im]");
  gram->add_flag("--canoe", canoe_gram, "use the SU(2) components Z, Zb, tau, sig");

  auto* canoe = app.add_subcommand("canoe", "SU(2) canoe records");
  std::vector<std::string> canoe_points;
  std::string candidate;
  canoe->add_option("--z", canoe_points, "torus point as re or re,im");
  canoe->add_option("--candidate", candidate, "X,Y,b membership check");

  auto* boundary = app.add_subcommand("boundary", "SU(3) real boundary samples");
  int samples = 12;
  boundary->add_option("--samples", samples, "number of angles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(s, target, trials, seed);
    if (*stratify) return cmd_stratify(s, points_path);
    if (*spectrum_cmd) return cmd_spectrum(s, cutoff, stratum_text, !no_characters);
    if (*rewrite) return cmd_rewrite(s, expression, generators);
    if (*relations) return cmd_relations(s, derive);
    if (*gram) return cmd_gram(s, point, canoe_gram);
    if (*canoe) return cmd_canoe(s, canoe_points, candidate);
    if (*boundary) return cmd_boundary(s, samples);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownGenerator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
