#include "frobcat/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "frobcat/cli/io.hpp"
#include "frobcat/constructions/constructions.hpp"
#include "frobcat/error.hpp"
#include "frobcat/exactla/linalg.hpp"

namespace frobcat::cli {

namespace {

using io::Json;

struct Options {
  std::string command;
  std::string target;
  std::string only;  // --name: restrict to one algebra or filtration
  std::string mode = "auto";
  std::uint64_t seed = 0;
  std::size_t symbolic_capacity = 4;
  unsigned max_height = 64;
  std::string output = "json";

  DetectOptions detect() const {
    DetectOptions d;
    d.mode = mode == "exact" ? DetectMode::exact : mode == "randomized" ? DetectMode::randomized : DetectMode::automatic;
    d.seed = seed;
    d.symbolic_capacity = symbolic_capacity;
    d.max_height = max_height;
    return d;
  }
};

// What a target resolves to: a document, or a built-in seen as one algebra
// with its filtration.
struct Target {
  std::optional<io::SpecDocument> doc;
  std::optional<FilteredAlg> builtin;

  std::vector<std::pair<std::string, AlgObj>> algebras(const Options& o) const {
    std::vector<std::pair<std::string, AlgObj>> out;
    if (builtin) {
      out.emplace_back(o.target, builtin->algebra);
    } else {
      for (const auto& [name, a] : doc->algebras)
        if (o.only.empty() || o.only == name) out.emplace_back(name, a.algebra);
    }
    if (!o.only.empty() && !builtin && out.empty()) throw ParseError("--name", "no algebra named '" + o.only + "'");
    return out;
  }

  std::vector<std::string> filtration_names(const Options& o) const {
    if (builtin) return {o.target};
    std::vector<std::string> out;
    for (const auto& [name, f] : doc->filtrations)
      if (o.only.empty() || o.only == name) out.push_back(name);
    if (!o.only.empty() && out.empty()) throw ParseError("--name", "no filtration named '" + o.only + "'");
    return out;
  }

  FilteredAlg filtration(const std::string& name) const {
    return builtin ? *builtin : io::filtered_algebra(*doc, name);
  }
};

Target resolve(const std::string& target) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(target, ec)) {
    std::ifstream in(target);
    if (!in) throw ParseError("target", "cannot read " + target);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {io::load_text(buffer.str()), std::nullopt};
  }
  try {
    return {std::nullopt, builtin(target)};
  } catch (const MalformedInput& e) {
    throw ParseError("target", "neither a readable file nor a built-in: " + std::string(e.what()));
  }
}

std::string outcome_name(LiftOutcome o) {
  switch (o) {
    case LiftOutcome::lifted:
      return "lifted";
    case LiftOutcome::lift_failed:
      return "lift-failed";
    case LiftOutcome::no_conclusion:
      return "no-conclusion";
  }
  return "";
}

std::string join_failures(const ValidationReport& r) {
  std::string s;
  for (const auto& f : r.failures()) s += (s.empty() ? "" : ", ") + f;
  return s;
}

struct Outcome {
  Json report;
  std::vector<std::string> summary;
  int status = kOk;
};

Outcome cmd_validate(const Options&, const Target& t) {
  ValidationReport checks;
  if (t.builtin) {
    checks.merge(validate_hopf(*t.builtin->algebra.hopf()), "hopf/");
    checks.merge(check_algebra(t.builtin->algebra), "algebra/");
    checks.merge(check_filtered_algebra(*t.builtin), "filtration/");
  } else {
    const auto& doc = *t.doc;
    checks.merge(validate_hopf(*doc.hopf), "hopf/");
    for (const auto& [name, obj] : doc.objects) checks.merge(check_module(obj), "objects/" + name + "/");
    for (const auto& [name, a] : doc.algebras) checks.merge(check_algebra(a.algebra), "algebras/" + name + "/");
    for (const auto& [name, f] : doc.filtrations) {
      try {
        checks.merge(check_filtered_algebra(io::filtered_algebra(doc, name)), "filtrations/" + name + "/");
      } catch (const MalformedInput& e) {
        checks.add("filtrations/" + name + "/nested", false, e.what());
      }
    }
  }
  Outcome out;
  out.status = checks.ok() ? kOk : kNegative;
  out.report = {{"checks", io::report_to_json(checks)}, {"ok", checks.ok()}};
  out.summary.push_back(checks.ok() ? "all " + std::to_string(checks.checks().size()) + " checks pass"
                                    : "failed: " + join_failures(checks));
  return out;
}

Outcome cmd_frobenius(const Options& o, const Target& t) {
  Outcome out;
  Json results = Json::array();
  bool negative = false, inconclusive = false;
  for (const auto& [name, a] : t.algebras(o)) {
    const auto cert = frobenius_detect(a, o.detect());
    results.push_back({{"algebra", name}, {"dim", a.dim()}, {"certificate", io::certificate_to_json(cert)}});
    if (!cert.frobenius) (cert.mode == "randomized" ? inconclusive : negative) = true;
    out.summary.push_back(name + ": " + (cert.frobenius ? "frobenius" : "not-frobenius") + " (" + cert.mode + ")");
  }
  out.report = {{"results", std::move(results)}};
  out.status = inconclusive ? kInconclusive : negative ? kNegative : kOk;
  return out;
}

Outcome cmd_gr(const Options& o, const Target& t) {
  Outcome out;
  Json results = Json::array();
  for (const auto& name : t.filtration_names(o)) {
    const FilteredAlg f = t.filtration(name);
    const GrResult g = gr(f);
    std::size_t total = 0;
    for (auto d : g.graded.dims) total += d;
    if (total != f.algebra.dim()) throw InternalFault("gr lost dimension on " + name);
    results.push_back({{"filtration", name}, {"graded", io::graded_to_json(g.graded)}});
    std::string dims;
    for (auto d : g.graded.dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    out.summary.push_back(name + ": components (" + dims + ")");
  }
  out.report = {{"results", std::move(results)}};
  return out;
}

Outcome cmd_lift(const Options& o, const Target& t) {
  Outcome out;
  Json results = Json::array();
  for (const auto& name : t.filtration_names(o)) {
    const FilteredAlg f = t.filtration(name);
    Json r = {{"filtration", name}};
    LiftResult lift;
    try {
      lift = lift_frobenius(f, o.detect());
    } catch (const NotConnected& e) {
      r["outcome"] = "not-connected";
      r["clauses"] = check_connected(f).failures();
      results.push_back(std::move(r));
      out.summary.push_back(name + ": not connected (" + join_failures(check_connected(f)) + ")");
      out.status = std::max<int>(out.status, kNotConnected);
      continue;
    }
    r["outcome"] = outcome_name(lift.outcome);
    r["gr-components"] = lift.graded.graded.dims;
    r["gr-certificate"] = io::certificate_to_json(lift.graded_certificate);
    r["graded-report"] = lift.graded_report ? io::graded_report_to_json(*lift.graded_report) : Json(nullptr);
    r["eta"] = lift.eta ? io::vector_to_json(*lift.eta) : Json(nullptr);
    r["certificate"] = lift.certificate ? io::certificate_to_json(*lift.certificate) : Json(nullptr);
    results.push_back(std::move(r));
    out.summary.push_back(name + ": " + outcome_name(lift.outcome));
    if (lift.outcome == LiftOutcome::lift_failed) out.status = std::max<int>(out.status, kNegative);
  }
  out.report = {{"results", std::move(results)}};
  return out;
}

Outcome demo_exterior(const Options& o) {
  const GradedAlg b = exterior_algebra(Obj::trivial(vec_hopf(), 3));
  const auto cert = frobenius_detect(b.total, o.detect());
  ValidationReport checks;
  checks.add("frobenius", cert.frobenius);
  checks.add("components-1-3-3-1", b.dims == std::vector<std::size_t>{1, 3, 3, 1});
  Json data = {{"components", b.dims}, {"certificate", io::certificate_to_json(cert)}};
  if (cert.frobenius) {
    const auto report = graded_frobenius_structure_check(b, cert);
    checks.merge(report.checks);
    checks.add("block-ranks-1-3-3-1", report.block_ranks == std::vector<std::size_t>{1, 3, 3, 1});
    data["graded-report"] = io::graded_report_to_json(report);
  }
  return {{{"data", std::move(data)}, {"checks", io::report_to_json(checks)}},
          {"exterior algebra on 3 generators: block ranks (1,3,3,1)"},
          checks.ok() ? kOk : kNegative};
}

Json quotient_json(const QuotientCommutation& q) {
  return {{"quotient-of-gr", q.quotient_of_gr.dims},
          {"gr-of-quotient", q.gr_of_quotient.dims},
          {"iso", io::matrix_to_json(q.iso)},
          {"checks", io::report_to_json(q.report)}};
}

Outcome demo_quotient(const Options&) {
  ValidationReport checks;
  const FilteredAlg poly = trivial_filtration(truncated_poly(3));
  const WeakIdeal square = ideal_from_subspace(poly.algebra, Matrix{{0}, {0}, {1}}, Side::bi);
  const auto q1 = graded_quotient_commutes(poly, filtered_ideal(poly, square));
  checks.merge(q1.report, "truncated/");

  const Obj w = Obj::trivial(vec_hopf(), 2);
  const FilteredAlg cl = clifford_algebra(w, make_bilinear_form(w, Matrix{{1, 0}, {0, 0}}));
  const Matrix gen = generated_ideal(cl.algebra, Matrix::unit_column(4, 2));
  const WeakIdeal ideal = ideal_from_subspace(cl.algebra, gen, Side::bi);
  const auto q2 = graded_quotient_commutes(cl, filtered_ideal(cl, ideal));
  checks.merge(q2.report, "clifford/");

  return {{{"data", {{"truncated", quotient_json(q1)}, {"clifford", quotient_json(q2)}}},
           {"checks", io::report_to_json(checks)}},
          {"(x^2) in k[x]/(x^3) and (x2) in Cl(k^2, diag(1,0)): gr(A)/gr(I) = gr(A/I)"},
          checks.ok() ? kOk : kNegative};
}

Outcome demo_representing(const Options& o) {
  const auto r = representing_algebra(etingof_ostrik_min());
  const auto cert = frobenius_detect(r.algebra, o.detect());
  ValidationReport checks;
  checks.merge(check_algebra(r.algebra), "algebra/");
  checks.add("dimension-4", r.algebra.dim() == 4);
  checks.add("frobenius", cert.frobenius);
  return {{{"data", {{"dim", r.algebra.dim()}, {"certificate", io::certificate_to_json(cert)}}},
           {"checks", io::report_to_json(checks)}},
          {"representing algebra for G = Z/2, W = sign line, V = k: " +
           std::string(cert.frobenius ? "frobenius" : "not frobenius")},
          checks.ok() ? kOk : kNegative};
}

const std::map<std::string, std::function<Outcome(const Options&)>>& demos() {
  static const std::map<std::string, std::function<Outcome(const Options&)>> table{
      {"theorem-7-3-min", demo_representing},
      {"lemma-6-3-exterior", demo_exterior},
      {"cor-4-6-quotient", demo_quotient},
  };
  return table;
}

Json header(const Options& o) {
  Json h = {{"command", o.command}, {"target", o.target}, {"seed", o.seed}};
  h["options"] = {{"mode", o.mode}, {"symbolic-capacity", o.symbolic_capacity}, {"max-height", o.max_height}};
  return h;
}

int emit(const Options& o, Json report, const std::vector<std::string>& summary, int status, double millis,
         std::ostream& out, std::ostream& err) {
  Json full = header(o);
  for (auto it = report.begin(); it != report.end(); ++it) full[it.key()] = it.value();
  full["exit-status"] = status;
  std::ostringstream text;
  for (const auto& line : summary) text << o.command << ": " << line << "\n";
  text << o.command << ": exit " << status << " (" << static_cast<long long>(millis) << " ms)\n";
  if (o.output == "summary") {
    out << text.str();
  } else {
    out << full.dump(2) << "\n";
    err << text.str();
  }
  return status;
}

int error(const Options& o, int status, const std::string& kind, const std::string& message, std::ostream& out,
          std::ostream& err, const std::string& field = {}) {
  Json report = {{"error", {{"kind", kind}, {"message", message}}}};
  if (!field.empty()) report["error"]["field"] = field;
  err << o.command << ": " << kind << ": " << message << "\n";
  if (o.output != "summary") {
    Json full = header(o);
    full["error"] = report["error"];
    full["exit-status"] = status;
    out << full.dump(2) << "\n";
  }
  return status;
}

}  // namespace

std::vector<std::string> demo_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : demos()) out.push_back(name);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Frobenius-algebra toolkit for algebras in representation categories", "frobcat"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool detect) {
    sub->add_option("--output", o.output, "json or summary")->check(CLI::IsMember({"json", "summary"}));
    if (!detect) return;
    sub->add_option("--mode", o.mode, "exact, randomized or auto")
        ->check(CLI::IsMember({"exact", "randomized", "auto"}));
    sub->add_option("--seed", o.seed, "seed of the sampler");
    sub->add_option("--symbolic-capacity", o.symbolic_capacity, "largest invariant-form count handled symbolically");
    sub->add_option("--max-height", o.max_height, "largest sample height")->check(CLI::Range(1u, 1u << 20));
  };
  auto target = [&](CLI::App* sub) {
    sub->add_option("target", o.target, "document path or built-in name")->required();
    sub->add_option("--name", o.only, "restrict to one algebra or filtration of a document");
  };
  auto* validate = app.add_subcommand("validate", "check every axiom of a document or built-in");
  target(validate);
  common(validate, false);
  auto* frob = app.add_subcommand("frobenius", "decide the Frobenius property with a certificate");
  target(frob);
  common(frob, true);
  auto* grc = app.add_subcommand("gr", "associated graded algebra of each filtration");
  target(grc);
  common(grc, false);
  auto* lift = app.add_subcommand("lift", "certify a connected filtered algebra from its associated graded");
  lift->alias("bongale");
  target(lift);
  common(lift, true);
  auto* demo = app.add_subcommand("demo", "run a named end-to-end example");
  demo->add_option("name", o.target, "demo name")->required();
  common(demo, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  for (auto* sub : {validate, frob, grc, lift, demo})
    if (sub->parsed()) o.command = sub->get_name();

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    Outcome r;
    if (o.command == "demo") {
      const auto it = demos().find(o.target);
      if (it == demos().end()) {
        std::string names;
        for (const auto& n : demo_names()) names += (names.empty() ? "" : ", ") + n;
        return error(o, kInputError, "unknown-demo", "unknown demo '" + o.target + "'; available: " + names, out, err);
      }
      r = it->second(o);
    } else {
      const Target t = resolve(o.target);
      if (o.command == "validate") r = cmd_validate(o, t);
      if (o.command == "frobenius") r = cmd_frobenius(o, t);
      if (o.command == "gr") r = cmd_gr(o, t);
      if (o.command == "lift") r = cmd_lift(o, t);
    }
    return emit(o, std::move(r.report), r.summary, r.status, elapsed(), out, err);
  } catch (const ParseError& e) {
    return error(o, kInputError, "parse-error", e.what(), out, err, e.field());
  } catch (const CapacityExceeded& e) {
    return error(o, kCapacity, "capacity-exceeded", e.what(), out, err);
  } catch (const InternalFault& e) {
    return error(o, kInternal, "internal-fault", e.what(), out, err);
  } catch (const PreconditionViolation& e) {
    return error(o, kInputError, "invalid-input", e.what(), out, err);
  } catch (const MalformedInput& e) {
    return error(o, kInputError, "invalid-input", e.what(), out, err);
  } catch (const CategoryMismatch& e) {
    return error(o, kInputError, "invalid-input", e.what(), out, err);
  }
}

}  // namespace frobcat::cli
