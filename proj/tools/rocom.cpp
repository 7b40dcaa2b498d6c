// rocom: command-line front end for the context and situation engine.
//
// Each invocation loads the engine state file, runs one command, and writes
// the state back when the command changed it. Exit status: 0 success,
// 1 domain error (or a negative answer such as a denied access check),
// 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rocom/bundled.hpp"
#include "rocom/document.hpp"
#include "rocom/engine.hpp"
#include "rocom/scenario.hpp"

namespace fs = std::filesystem;
using namespace rocom;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Options {
  std::string state_path;
  bool porcelain = false;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidArgument, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A document argument is a path, a name found on ROCOM_PATH, or the name of
/// a bundled document, tried in that order.
std::string load_text(const std::string& name) {
  if (fs::exists(name)) return read_file(name);
  if (const char* search = std::getenv("ROCOM_PATH")) {
    std::stringstream dirs(search);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      auto candidate = fs::path(dir) / name;
      if (fs::exists(candidate)) return read_file(candidate);
    }
  }
  if (auto text = bundled_document(fs::path(name).filename().string())) return std::string(*text);
  fail(Errc::InvalidArgument, "no such document: " + name);
}

Engine load_state(const Options& o) {
  if (!fs::exists(o.state_path)) return Engine::with_builtins();
  Engine engine;
  try {
    apply_document(parse_document(read_file(o.state_path)), engine);
  } catch (const Error& e) {
    throw Error(e.code(), "state file " + o.state_path + ": " + e.detail(), e.where());
  }
  return engine;
}

void save_state(const Options& o, const Engine& engine) {
  auto tmp = o.state_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::InvalidArgument, "cannot write " + tmp);
    out << export_document(engine);
  }
  fs::rename(tmp, o.state_path);
}

std::optional<DateTime> opt_time(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return DateTime::parse(text);
}

std::string fact_line(const Fact& f, bool porcelain) {
  const auto& p = f.payload;
  auto prob = p.qoc.probability ? format_real(*p.qoc.probability) : std::string();
  if (porcelain) {
    return std::to_string(f.id) + "\t" + f.subject + "\t" + f.property.str() + "\t" + format_value(p.value) + "\t" +
           p.unit.value_or("") + "\t" + p.source.value_or("") + "\t" + p.timestamp.iso() + "\t" + prob;
  }
  std::string out = format_value(p.value);
  if (p.unit) out += " " + *p.unit;
  if (p.source) out += " source=" + *p.source;
  out += " ts=" + p.timestamp.iso();
  if (!prob.empty()) out += " probability=" + prob;
  return out;
}

std::string short_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7g", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Context and situation modeling engine"};
  app.require_subcommand(1);
  Options opts;
  const char* env_state = std::getenv("ROCOM_STATE");
  opts.state_path = env_state ? env_state : "rocom-state.rcm";
  app.add_option("--state", opts.state_path, "Engine state file (default $ROCOM_STATE or ./rocom-state.rcm)");
  app.add_flag("--porcelain", opts.porcelain, "Tab-separated machine-readable output");

  std::vector<std::string> load_files;
  auto* load = app.add_subcommand("load", "Apply documents to the engine state");
  load->add_option("files", load_files, "Documents (.rcm)")->required();

  struct {
    std::string subject, property, value, unit, ts, source, by = std::string(kSystemActor), at;
    std::optional<double> prob, mean_error;
  } as;
  auto* assert_cmd = app.add_subcommand("assert", "Assert a data value or relation");
  assert_cmd->add_option("subject", as.subject)->required();
  assert_cmd->add_option("property", as.property)->required();
  assert_cmd->add_option("value", as.value)->required();
  assert_cmd->add_option("--unit", as.unit, "Encoding unit");
  assert_cmd->add_option("--prob", as.prob, "Probability in [0, 1]");
  assert_cmd->add_option("--mean-error", as.mean_error, "Mean error");
  assert_cmd->add_option("--ts", as.ts, "Observation timestamp");
  assert_cmd->add_option("--source", as.source, "Source individual");
  assert_cmd->add_option("--by", as.by, "Asserting actor");
  assert_cmd->add_option("--at", as.at, "Assertion time (default: now)");

  std::string subject, property, policy = "latest";
  auto* get = app.add_subcommand("get", "Resolve the current value");
  get->add_option("subject", subject)->required();
  get->add_option("property", property)->required();
  get->add_option("--policy", policy, "latest | confident[:theta] | all");

  std::string q_class, q_property, q_subject;
  auto* query = app.add_subcommand("query", "List matching facts");
  query->add_option("--class", q_class);
  query->add_option("--property", q_property);
  query->add_option("--subject", q_subject);

  auto* history = app.add_subcommand("history", "Every fact for a subject and property");
  history->add_option("subject", subject)->required();
  history->add_option("property", property)->required();

  double amount = 0;
  std::string from, to;
  auto* convert = app.add_subcommand("convert", "Convert a value between units");
  convert->add_option("value", amount)->required();
  convert->add_option("from", from)->required();
  convert->add_option("to", to)->required();

  std::string entity, activity_class;
  auto* access = app.add_subcommand("access", "Access control");
  access->require_subcommand(1);
  auto* check = access->add_subcommand("check", "May an entity perform an activity class?");
  check->add_option("entity", entity)->required();
  check->add_option("activity-class", activity_class)->required();

  std::string script;
  auto* scenario = app.add_subcommand("scenario", "Scenario scripts");
  scenario->require_subcommand(1);
  auto* run = scenario->add_subcommand("run", "Run a scenario on a fresh engine");
  run->add_option("file", script)->required();

  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate", "Check the state, or documents against it");
  validate->add_option("files", validate_files);

  std::string format = "canonical", base = ExportOptions{}.base_iri;
  auto* export_cmd = app.add_subcommand("export", "Write the engine state to stdout");
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"canonical", "rdfxml"}));
  export_cmd->add_option("--base", base, "Base IRI for rdfxml");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*load) {
      Engine engine = load_state(opts);
      for (const auto& file : load_files) {
        std::string text = load_text(file);
        ApplyReport report;
        try {
          report = apply_document(parse_document(text), engine);
        } catch (const Error& e) {
          std::cerr << "error: " << file << ":" << e.what() << '\n';
          return kDomainError;
        }
        if (opts.porcelain) {
          for (const auto& [section, n] : report.counts) std::cout << file << '\t' << section << '\t' << n << '\n';
        } else {
          std::cout << "loaded " << file << ": " << report.total() << " records\n";
        }
      }
      save_state(opts, engine);
    } else if (*assert_cmd) {
      Engine engine = load_state(opts);
      auto prop = property_term(engine.schema(), as.property);
      Annotations ann;
      ann.timestamp = opt_time(as.ts);
      if (!as.unit.empty()) ann.unit = as.unit;
      ann.qoc.probability = as.prob;
      ann.qoc.mean_error = as.mean_error;
      if (!as.source.empty()) ann.source = as.source;
      DateTime at = as.at.empty() ? (ann.timestamp ? *ann.timestamp : DateTime::now()) : DateTime::parse(as.at);
      Fact fact;
      if (auto def = engine.schema().find_data_property(prop)) {
        fact = engine.store().assert_data(as.subject, prop, parse_literal(def->value_type, as.value), ann, as.by, at);
      } else {
        fact = engine.store().assert_relation(as.subject, prop, as.value, ann, as.by, at).fact;
      }
      save_state(opts, engine);
      std::cout << (opts.porcelain ? fact_line(fact, true) : "fact " + std::to_string(fact.id) + ": " + fact_line(fact, false))
                << '\n';
    } else if (*get) {
      Engine engine = load_state(opts);
      auto facts = engine.store().resolve(subject, property_term(engine.schema(), property),
                                          ResolutionPolicy::parse(policy));
      if (facts.empty()) {
        std::cerr << "no current value for " << subject << ' ' << property << '\n';
        return kDomainError;
      }
      for (const auto& f : facts) std::cout << fact_line(f, opts.porcelain) << '\n';
    } else if (*query) {
      Engine engine = load_state(opts);
      QueryPattern pattern;
      if (!q_class.empty()) pattern.class_term = TermName::parse(q_class);
      if (!q_property.empty()) pattern.property = property_term(engine.schema(), q_property);
      if (!q_subject.empty()) pattern.subject = q_subject;
      for (const auto& f : engine.store().query(pattern)) {
        std::cout << (opts.porcelain ? fact_line(f, true)
                                     : f.subject + " " + f.property.str() + " = " + fact_line(f, false))
                  << '\n';
      }
    } else if (*history) {
      Engine engine = load_state(opts);
      for (const auto& f : engine.store().history(subject, property_term(engine.schema(), property))) {
        std::cout << (opts.porcelain ? fact_line(f, true) : "#" + std::to_string(f.id) + " " + fact_line(f, false))
                  << '\n';
      }
    } else if (*convert) {
      Engine engine = load_state(opts);
      double out = engine.units().convert(amount, from, to);
      std::cout << (opts.porcelain ? format_real(out) : short_number(out)) << '\n';
    } else if (*check) {
      Engine engine = load_state(opts);
      auto decision = engine.access().check(entity, TermName::parse(activity_class));
      if (opts.porcelain) {
        std::cout << (decision.allowed ? "allowed" : "denied") << '\t' << decision.via_group << '\n';
      } else if (decision.allowed) {
        std::cout << "Allowed via " << decision.via_group << '\n';
      } else {
        std::cout << "Denied\n";
      }
      return decision.allowed ? kOk : kDomainError;
    } else if (*run) {
      Engine engine = Engine::with_builtins();
      auto doc = parse_document(load_text(script));
      apply_document(doc, engine);
      auto report = run_scenario(doc.scenario, engine);
      std::cout << report.render();
      return report.ok() ? kOk : kDomainError;
    } else if (*validate) {
      Engine engine = load_state(opts);
      std::vector<std::pair<std::string, Issue>> issues;
      if (validate_files.empty()) {
        for (auto& i : engine.schema().validate()) issues.emplace_back("state", i);
      }
      for (const auto& file : validate_files) {
        for (auto& i : check_document(engine, load_text(file))) issues.emplace_back(file, i);
      }
      bool errors = false;
      for (const auto& [where, issue] : issues) {
        errors = errors || issue.severity == Severity::Error;
        if (opts.porcelain) {
          std::cout << where << '\t' << (issue.severity == Severity::Error ? "error" : "warning") << '\t'
                    << issue.kind << '\t' << issue.subject << '\t' << issue.message << '\n';
        } else {
          std::cout << where << ": " << format_issue(issue) << '\n';
        }
      }
      if (!opts.porcelain && issues.empty()) std::cout << "ok\n";
      return errors ? kDomainError : kOk;
    } else if (*export_cmd) {
      Engine engine = load_state(opts);
      ExportOptions eo;
      eo.format = format == "rdfxml" ? ExportFormat::RdfXml : ExportFormat::Canonical;
      eo.base_iri = base;
      std::cout << export_document(engine, eo);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}
