#include "rocom/scenario.hpp"

#include <cmath>
#include <map>

#include "record_fields.hpp"

namespace rocom {

std::size_t ScenarioReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(expectations.begin(), expectations.end(), [](const auto& e) { return !e.passed; }));
}

std::string ScenarioReport::render() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  out += "expectations: " + std::to_string(expectations.size() - failures()) + " passed, " +
         std::to_string(failures()) + " failed\n";
  return out;
}

namespace {

using detail::Fields;
using detail::syntax;

const std::map<std::string, std::vector<std::string>>& step_fields() {
  static const std::map<std::string, std::vector<std::string>> fields = {
      {"trigger", {"situation", "event", "goal", "description", "at"}},
      {"add-goal", {"situation", "goal", "parent", "description"}},
      {"add-activity", {"situation", "activity", "class", "goal", "pre", "performers", "atomic"}},
      {"assert-data",
       {"subject", "property", "value", "ts", "unit", "scale", "accuracy", "probability", "coverage", "resolution",
        "meanerror", "recurrence", "source", "by", "at"}},
      {"assert-relation", {"subject", "property", "object", "ts", "probability", "source", "by", "at"}},
      {"start", {"situation", "activity", "at"}},
      {"complete", {"situation", "activity", "at"}},
      {"abort", {"situation", "activity", "at"}},
      {"expect-value", {"subject", "property", "policy", "equals", "unit", "source", "none"}},
      {"expect-goal", {"situation", "goal", "status", "achievedat"}},
      {"expect-activity", {"situation", "activity", "state", "duration"}},
      {"expect-access", {"entity", "class", "result", "via"}},
      {"expect-terminal", {"situation", "value"}},
  };
  return fields;
}

bool same_value(const Value& expected, const Value& actual) {
  auto a = numeric(expected);
  auto b = numeric(actual);
  if (a && b && !std::holds_alternative<bool>(expected)) {
    return std::fabs(*a - *b) <= kCompareTolerance * std::max(1.0, std::fabs(*a));
  }
  return expected == actual;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string describe(const Fact& f) {
  std::string s = format_value(f.payload.value);
  if (f.payload.unit) s += " " + *f.payload.unit;
  if (f.payload.source) s += " source=" + *f.payload.source;
  return s;
}

class Runner {
 public:
  explicit Runner(Engine& engine) : engine_(engine) {}

  ScenarioReport run(const std::vector<ScenarioStep>& steps) {
    for (std::size_t i = 0; i < steps.size(); ++i) step(i + 1, steps[i]);
    flush_transitions();
    return std::move(report_);
  }

 private:
  void step(std::size_t index, const ScenarioStep& s) {
    auto known = step_fields().find(s.head);
    if (known == step_fields().end()) syntax(s.pos, "unknown scenario step '" + s.head + "'");
    auto allowed = known->second;
    bool is_expect = s.head.rfind("expect-", 0) == 0;
    if (!is_expect) allowed.push_back("expect-error");
    Fields f(s, allowed);

    if (is_expect) {
      expect(index, s.head, f);
      return;
    }

    std::optional<Errc> wanted;
    if (auto* e = f.get("expect-error")) {
      wanted = parse_errc(f.scalar(*e));
      if (!wanted) syntax(e->pos, "unknown error code '" + e->scalar + "'");
    }
    std::string what = s.head + " " + summary(s);
    try {
      act(s.head, f);
    } catch (const Error& e) {
      if (e.code() == Errc::SyntaxError && e.where()) throw;
      flush_transitions();
      if (wanted && *wanted == e.code()) {
        record(index, what + " raises " + std::string(to_string(e.code())), true, "");
        return;
      }
      if (wanted) {
        record(index, what + " raises " + std::string(to_string(*wanted)), false,
               std::string(to_string(e.code())) + ": " + e.detail());
        return;
      }
      throw Error(Errc::StepError,
                  "step " + std::to_string(index) + " (" + s.head + "): " + std::string(to_string(e.code())) + ": " +
                      e.detail(),
                  s.pos);
    }
    flush_transitions();
    if (wanted) record(index, what + " raises " + std::string(to_string(*wanted)), false, "succeeded");
  }

  static std::string summary(const ScenarioStep& s) {
    for (const char* key : {"activity", "goal", "subject", "event"}) {
      if (auto* v = s.find(key)) return v->scalar;
    }
    return "";
  }

  void act(const std::string& verb, const Fields& f) {
    auto& sit = engine_.situations();
    auto& store = engine_.store();
    if (verb == "trigger") {
      sit.trigger(f.text("event"), f.opt_text("description").value_or(""), f.time("at"), f.opt_text("situation"),
                  f.opt_text("goal"));
    } else if (verb == "add-goal") {
      sit.add_goal(f.text("situation"), f.opt_text("description").value_or(""), f.text("parent"),
                   f.opt_text("goal"));
    } else if (verb == "add-activity") {
      ActivitySpec spec;
      spec.id = f.opt_text("activity");
      spec.class_term = f.term("class");
      spec.goal = f.text("goal");
      spec.preconditions = f.list("pre");
      spec.performers = f.list("performers");
      spec.atomic = f.flag("atomic");
      sit.add_activity(f.text("situation"), spec);
    } else if (verb == "assert-data") {
      auto property = property_term(engine_.schema(), f.text("property"));
      auto def = engine_.schema().find_data_property(property);
      if (!def) fail(Errc::UnknownProperty, property.str());
      auto value = parse_literal(def->value_type, f.text("value"));
      Annotations ann;
      ann.timestamp = f.opt_time("ts");
      if (f.get("unit") && f.get("scale")) syntax(f.record().pos, "unit= and scale= are aliases; give one");
      ann.unit = f.get("unit") ? f.opt_text("unit") : f.opt_text("scale");
      ann.qoc.accuracy = f.opt_number("accuracy");
      ann.qoc.probability = f.opt_number("probability");
      ann.qoc.coverage = f.opt_text("coverage");
      ann.qoc.resolution = f.opt_number("resolution");
      ann.qoc.mean_error = f.opt_number("meanerror");
      ann.qoc.recurrence = f.opt_text("recurrence");
      ann.source = f.opt_text("source");
      auto at = f.time("at");
      auto fact = store.assert_data(f.text("subject"), property, value, ann,
                                    f.opt_text("by").value_or(std::string(kSystemActor)), at);
      report_.lines.push_back(at.iso() + " - assert " + fact.subject + " " + fact.property.str() + " = " +
                              describe(fact));
    } else if (verb == "assert-relation") {
      Annotations ann;
      ann.timestamp = f.opt_time("ts");
      ann.qoc.probability = f.opt_number("probability");
      ann.source = f.opt_text("source");
      auto at = f.time("at");
      auto r = store.assert_relation(f.text("subject"), property_term(engine_.schema(), f.text("property")), f.text("object"), ann,
                                     f.opt_text("by").value_or(std::string(kSystemActor)), at);
      report_.lines.push_back(at.iso() + " - relate " + r.fact.subject + " " + r.fact.property.str() + " " +
                              format_value(r.fact.payload.value));
    } else if (verb == "start") {
      sit.start_activity(f.text("situation"), f.text("activity"), f.time("at"));
    } else if (verb == "complete") {
      sit.complete_activity(f.text("situation"), f.text("activity"), f.time("at"));
    } else if (verb == "abort") {
      sit.abort_activity(f.text("situation"), f.text("activity"), f.time("at"));
    }
  }

  void expect(std::size_t index, const std::string& verb, const Fields& f) {
    try {
      if (verb == "expect-value") {
        expect_value(index, f);
      } else if (verb == "expect-goal") {
        auto snap = engine_.situations().status(f.text("situation"));
        auto id = f.text("goal");
        const auto* g = snap.goal(id);
        if (!g) fail(Errc::UnknownGoal, id);
        std::string status(to_string(g->status));
        bool ok = true;
        std::string want = "goal " + id;
        if (auto st = f.opt_text("status")) {
          want += " " + *st;
          ok = ok && lower(*st) == lower(status);
        }
        if (auto t = f.opt_time("achievedat")) {
          want += " at " + t->iso();
          ok = ok && g->achieved_at == *t;
        }
        record(index, want, ok, status + (g->achieved_at ? " at " + g->achieved_at->iso() : ""));
      } else if (verb == "expect-activity") {
        auto snap = engine_.situations().status(f.text("situation"));
        auto id = f.text("activity");
        const auto* a = snap.activity(id);
        if (!a) fail(Errc::UnknownActivity, id);
        std::string state(to_string(a->state));
        bool ok = true;
        std::string want = "activity " + id;
        if (auto st = f.opt_text("state")) {
          want += " " + *st;
          ok = ok && lower(*st) == lower(state);
        }
        std::string observed = state;
        if (auto* d = f.get("duration")) {
          auto secs = static_cast<std::int64_t>(Fields::number_at(f.scalar(*d), d->pos));
          want += " duration " + std::to_string(secs) + "s";
          auto got = a->duration();
          observed += got ? " duration " + std::to_string(*got) + "s" : " no duration";
          ok = ok && got == secs;
        }
        record(index, want, ok, observed);
      } else if (verb == "expect-access") {
        auto entity = f.text("entity");
        auto cls = f.term("class");
        auto result = lower(f.text("result"));
        if (result != "allowed" && result != "denied") syntax(f.need("result").pos, "result must be allowed or denied");
        auto d = engine_.access().check(entity, cls);
        bool ok = d.allowed == (result == "allowed");
        std::string observed = d.allowed ? "allowed via " + d.via_group : "denied";
        std::string want = "access " + entity + " " + cls.str() + " " + result;
        if (auto via = f.opt_text("via")) {
          want += " via " + *via;
          ok = ok && d.via_group == *via;
        }
        record(index, want, ok, observed);
      } else if (verb == "expect-terminal") {
        auto snap = engine_.situations().status(f.text("situation"));
        bool want = f.flag("value", true);
        record(index, "situation " + snap.id + " terminal=" + (want ? "true" : "false"), snap.terminal == want,
               snap.terminal ? "true" : "false");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::SyntaxError && e.where()) throw;
      record(index, verb, false, std::string(to_string(e.code())) + ": " + e.detail());
    }
  }

  void expect_value(std::size_t index, const Fields& f) {
    auto subject = f.text("subject");
    auto property = property_term(engine_.schema(), f.text("property"));
    auto policy_text = f.opt_text("policy").value_or("latest");
    ResolutionPolicy policy;
    try {
      policy = ResolutionPolicy::parse(policy_text);
    } catch (const Error& e) {
      syntax(f.need("policy").pos, e.detail());
    }
    std::string want = subject + " " + property.str() + " [" + policy.str() + "]";
    auto facts = engine_.store().resolve(subject, property, policy);

    if (f.flag("none")) {
      record(index, want + " has no value", facts.empty(), facts.empty() ? "" : describe(facts.front()));
      return;
    }
    if (facts.empty()) {
      record(index, want, false, "no value");
      return;
    }
    // For the `all` policy any candidate may satisfy the expectation.
    std::string observed;
    bool any = false;
    for (const auto& fact : facts) {
      bool ok = true;
      if (auto eq = f.opt_text("equals")) {
        Value expected;
        if (fact.is_relation()) {
          expected = IndividualRef{*eq};
        } else {
          auto def = engine_.schema().find_data_property(property);
          expected = parse_literal(def->value_type, *eq);
        }
        ok = ok && same_value(expected, fact.payload.value);
      }
      if (auto unit = f.opt_text("unit")) ok = ok && fact.payload.unit && lower(*fact.payload.unit) == lower(*unit);
      if (auto source = f.opt_text("source")) ok = ok && fact.payload.source == *source;
      if (!observed.empty()) observed += "; ";
      observed += describe(fact);
      any = any || ok;
    }
    for (const char* key : {"equals", "unit", "source"}) {
      if (auto v = f.opt_text(key)) want += std::string(" ") + key + "=" + *v;
    }
    record(index, want, any, observed);
  }

  void record(std::size_t index, const std::string& what, bool passed, const std::string& observed) {
    std::string line = std::string("EXPECT ") + (passed ? "PASS" : "FAIL") + " step " + std::to_string(index) + ": " + what;
    if (!passed) line += " (got " + (observed.empty() ? std::string("nothing") : observed) + ")";
    report_.lines.push_back(line);
    report_.expectations.push_back({index, what, passed, passed ? "" : observed});
  }

  void flush_transitions() {
    for (const auto& sid : engine_.situations().situations()) {
      auto snap = engine_.situations().status(sid);
      auto& seen = emitted_[sid];
      if (seen >= snap.timeline.size()) continue;
      SituationSnapshot slice = snap;
      slice.timeline.assign(snap.timeline.begin() + static_cast<std::ptrdiff_t>(seen), snap.timeline.end());
      seen = snap.timeline.size();
      auto text = render_timeline(slice);
      std::size_t start = 0;
      while (start < text.size()) {
        auto end = text.find('\n', start);
        report_.lines.push_back(text.substr(start, end - start));
        start = end + 1;
      }
    }
  }

  Engine& engine_;
  ScenarioReport report_;
  std::map<std::string, std::size_t> emitted_;
};

}  // namespace

ScenarioReport run_scenario(const std::vector<ScenarioStep>& steps, Engine& engine) {
  return Runner(engine).run(steps);
}

}  // namespace rocom
