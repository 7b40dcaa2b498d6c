#include "rocom/document.hpp"

#include "record_fields.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>

namespace rocom {

const FieldValue* Record::find(const std::string& key) const {
  auto it = fields.find(key);
  return it == fields.end() ? nullptr : &it->second;
}

const std::vector<std::string>& section_names() {
  static const std::vector<std::string> names = {
      "schema.classes", "schema.objectproperties", "schema.dataproperties", "schema.equivalences", "units",
      "individuals",    "facts",                   "groups",                "scenario"};
  return names;
}

std::size_t ApplyReport::total() const {
  std::size_t n = 0;
  for (const auto& [_, c] : counts) n += c;
  return n;
}

// ---------------------------------------------------------------------------
// Lexing

namespace {

using detail::Fields;
using detail::enum_field;
using detail::syntax;

bool bare_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '"' && c != '[' && c != ']' && c != ',' && c != '=';
}

class LineLexer {
 public:
  LineLexer(std::string_view line, std::size_t lineno) : line_(line), lineno_(lineno) {}

  TextPos pos() const { return {lineno_, i_ + 1}; }
  bool done() {
    skip_ws();
    return i_ >= line_.size();
  }
  char peek() const { return i_ < line_.size() ? line_[i_] : '\0'; }

  void skip_ws() {
    while (i_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[i_]))) ++i_;
  }

  std::string quoted() {
    TextPos start = pos();
    ++i_;  // opening quote
    std::string out;
    while (i_ < line_.size()) {
      char c = line_[i_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (i_ >= line_.size()) break;
        char e = line_[i_++];
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: syntax({lineno_, i_ - 1}, std::string("unknown escape \\") + e);
        }
        continue;
      }
      out += c;
    }
    syntax(start, "unterminated string");
  }

  std::string bare() {
    std::size_t start = i_;
    while (i_ < line_.size() && bare_char(line_[i_])) ++i_;
    if (start == i_) syntax(pos(), std::string("unexpected '") + peek() + "'");
    return std::string(line_.substr(start, i_ - start));
  }

  std::string word(bool& was_quoted) {
    was_quoted = peek() == '"';
    return was_quoted ? quoted() : bare();
  }

  std::string key() {
    std::size_t start = i_;
    while (i_ < line_.size() &&
           (std::islower(static_cast<unsigned char>(line_[i_])) || std::isdigit(static_cast<unsigned char>(line_[i_])) ||
            line_[i_] == '-')) {
      ++i_;
    }
    if (start == i_) syntax(pos(), "expected a field name");
    if (peek() != '=') syntax(pos(), "expected '=' after field name");
    ++i_;
    return std::string(line_.substr(start, i_ - 1 - start));
  }

  FieldValue value() {
    FieldValue v;
    v.pos = pos();
    if (peek() == '[') {
      v.is_list = true;
      ++i_;
      skip_ws();
      if (peek() == ']') {
        ++i_;
        return v;
      }
      while (true) {
        skip_ws();
        bool q = false;
        v.items.push_back(word(q));
        skip_ws();
        if (peek() == ',') {
          ++i_;
          continue;
        }
        if (peek() == ']') {
          ++i_;
          return v;
        }
        syntax(pos(), "expected ',' or ']' in list");
      }
    }
    if (i_ >= line_.size() || std::isspace(static_cast<unsigned char>(peek()))) syntax(pos(), "missing value");
    v.scalar = word(v.quoted);
    return v;
  }

 private:
  std::string_view line_;
  std::size_t lineno_;
  std::size_t i_ = 0;
};

struct RawSection {
  std::string name;
  TextPos pos;
  std::vector<Record> records;
};

std::vector<RawSection> lex(std::string_view text) {
  std::vector<RawSection> sections;
  std::set<std::string> seen;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    start = end + 1;

    LineLexer lx(line, lineno);
    if (lx.done() || lx.peek() == '#') continue;
    if (lx.peek() == '[') {
      TextPos pos = lx.pos();
      auto close = line.find(']');
      if (close == std::string_view::npos) syntax(pos, "unterminated section header");
      auto open = line.find('[');
      std::string name(line.substr(open + 1, close - open - 1));
      auto rest = line.substr(close + 1);
      if (std::any_of(rest.begin(), rest.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); })) {
        syntax({lineno, close + 2}, "text after section header");
      }
      const auto& known = section_names();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw Error(Errc::UnknownSection, "'" + name + "'", pos);
      }
      if (!seen.insert(name).second) {
        throw Error(Errc::DuplicateDefinitionInDocument, "section [" + name + "] appears twice", pos);
      }
      sections.push_back({name, pos, {}});
      continue;
    }
    if (sections.empty()) syntax(lx.pos(), "record outside of any section");
    Record rec;
    rec.pos = lx.pos();
    bool q = false;
    rec.head = lx.word(q);
    while (!lx.done()) {
      TextPos kpos = lx.pos();
      std::string key = lx.key();
      FieldValue v = lx.value();
      if (!rec.fields.emplace(key, std::move(v)).second) syntax(kpos, "field '" + key + "' repeated");
      if (!lx.done() && !std::isspace(static_cast<unsigned char>(line[lx.pos().column - 2]))) {
        syntax(lx.pos(), "expected whitespace between fields");
      }
    }
    sections.back().records.push_back(std::move(rec));
  }
  return sections;
}

// ---------------------------------------------------------------------------
void duplicate(const std::string& what, TextPos pos) {
  throw Error(Errc::DuplicateDefinitionInDocument, what, pos);
}

const std::set<std::string>& scenario_verbs() {
  static const std::set<std::string> verbs = {
      "trigger",        "add-goal",    "add-activity", "assert-data",     "assert-relation",
      "start",          "complete",    "abort",        "expect-value",    "expect-goal",
      "expect-activity", "expect-access", "expect-terminal"};
  return verbs;
}

}  // namespace

RcmDocument parse_document(std::string_view text) {
  RcmDocument doc;
  std::set<TermName> class_names;
  std::set<TermName> property_names;
  std::set<std::string> iris;
  std::set<std::string> unit_names;
  std::set<std::string> individual_ids;
  std::set<std::uint64_t> fact_ids;
  std::set<std::string> group_ids;

  for (const auto& section : lex(text)) {
    doc.sections.push_back(section.name);
    for (const auto& rec : section.records) {
      const auto& name = section.name;
      if (name == "schema.classes") {
        Fields f(rec, {"parent", "label"});
        ClassRecord c{Fields::term_at(rec.head, rec.pos), f.term("parent"), f.opt_text("label").value_or(""),
                      rec.pos};
        if (!class_names.insert(c.name).second) duplicate("class " + c.name.str(), rec.pos);
        doc.classes.push_back(std::move(c));
      } else if (name == "schema.objectproperties") {
        Fields f(rec, {"domain", "range", "functional", "inversefunctional", "inverseof", "subpropertyof", "label"});
        ObjectPropertyRecord p;
        p.def.name = Fields::term_at(rec.head, rec.pos);
        p.def.domain = f.terms("domain");
        if (p.def.domain.empty()) syntax(rec.pos, "missing field 'domain'");
        p.def.range = f.term("range");
        p.def.functional = f.flag("functional");
        p.def.inverse_functional = f.flag("inversefunctional");
        p.def.inverse_of = f.terms("inverseof");
        p.def.sub_property_of = f.opt_term("subpropertyof");
        p.def.label = f.opt_text("label").value_or("");
        p.pos = rec.pos;
        if (!property_names.insert(p.def.name).second) duplicate("property " + p.def.name.str(), rec.pos);
        doc.object_properties.push_back(std::move(p));
      } else if (name == "schema.dataproperties") {
        Fields f(rec, {"domain", "type", "volatility", "subpropertyof", "label"});
        DataPropertyRecord p;
        p.def.name = Fields::term_at(rec.head, rec.pos);
        p.def.domain = f.term("domain");
        f.need("type");
        p.def.value_type = enum_field(f, "type", ValueType::Text, parse_value_type);
        p.def.volatility = enum_field(f, "volatility", Volatility::Dynamic, parse_volatility);
        p.def.sub_property_of = f.opt_term("subpropertyof");
        p.def.label = f.opt_text("label").value_or("");
        p.pos = rec.pos;
        if (!property_names.insert(p.def.name).second) duplicate("property " + p.def.name.str(), rec.pos);
        doc.data_properties.push_back(std::move(p));
      } else if (name == "schema.equivalences") {
        Fields f(rec, {"kind", "term"});
        f.need("kind");
        EquivalenceRecord e{rec.head, enum_field(f, "kind", TermKind::Class, parse_term_kind), f.term("term"),
                            rec.pos};
        if (!iris.insert(e.iri).second) duplicate("equivalence " + e.iri, rec.pos);
        doc.equivalences.push_back(std::move(e));
      } else if (name == "units") {
        Fields f(rec, {"dimension", "scale", "offset"});
        UnitRecord u{{rec.head, f.text("dimension"), f.opt_number("scale").value_or(1.0),
                      f.opt_number("offset").value_or(0.0)},
                     rec.pos};
        std::string folded = u.def.name;
        for (auto& c : folded) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (!unit_names.insert(folded).second) duplicate("unit " + u.def.name, rec.pos);
        doc.units.push_back(std::move(u));
      } else if (name == "individuals") {
        Fields f(rec, {"class", "createdby", "createdat", "modifiedby", "modifiedat", "change"});
        IndividualRecord ind;
        ind.id = f.ident(rec.head, rec.pos);
        ind.class_term = f.term("class");
        ind.created_by = f.opt_text("createdby");
        ind.created_at = f.time("createdat");
        ind.modified_by = f.opt_text("modifiedby");
        ind.modified_at = f.opt_time("modifiedat");
        ind.change = f.opt_text("change");
        ind.pos = rec.pos;
        if (!individual_ids.insert(ind.id).second) duplicate("individual " + ind.id, rec.pos);
        doc.individuals.push_back(std::move(ind));
      } else if (name == "facts") {
        Fields f(rec, {"subject", "property", "value", "object", "ts", "unit", "scale", "accuracy", "probability",
                       "coverage", "resolution", "meanerror", "recurrence", "source", "by", "at", "derivedfrom"});
        FactRecord fr;
        fr.local_id = f.integer_at(rec.head, rec.pos);
        fr.subject = f.ident(f.text("subject"), f.need("subject").pos);
        fr.property = f.term("property");
        fr.value = f.opt_text("value");
        fr.object = f.opt_ident("object");
        if (fr.value.has_value() == fr.object.has_value()) syntax(rec.pos, "a fact needs exactly one of value=/object=");
        fr.timestamp = f.opt_time("ts");
        if (f.get("unit") && f.get("scale")) syntax(rec.pos, "unit= and scale= are aliases; give one");
        fr.unit = f.get("unit") ? f.opt_text("unit") : f.opt_text("scale");
        fr.qoc.accuracy = f.opt_number("accuracy");
        fr.qoc.probability = f.opt_number("probability");
        fr.qoc.coverage = f.opt_text("coverage");
        fr.qoc.resolution = f.opt_number("resolution");
        fr.qoc.mean_error = f.opt_number("meanerror");
        fr.qoc.recurrence = f.opt_text("recurrence");
        fr.source = f.opt_ident("source");
        if (auto by = f.opt_text("by")) fr.by = *by;
        auto at = f.opt_time("at");
        if (!at && !fr.timestamp) syntax(rec.pos, "a fact needs at= or ts=");
        fr.at = at ? *at : *fr.timestamp;
        if (auto* d = f.get("derivedfrom")) fr.derived_from = f.integer_at(f.scalar(*d), d->pos);
        fr.pos = rec.pos;
        if (!fact_ids.insert(fr.local_id).second) duplicate("fact " + rec.head, rec.pos);
        if (fr.derived_from && !fact_ids.contains(*fr.derived_from)) {
          syntax(rec.pos, "derivedfrom must name an earlier fact");
        }
        doc.facts.push_back(std::move(fr));
      } else if (name == "groups") {
        Fields f(rec, {"members", "privileges"});
        GroupRecord g{f.ident(rec.head, rec.pos), f.idents("members"), f.terms("privileges"), rec.pos};
        if (!group_ids.insert(g.id).second) duplicate("group " + g.id, rec.pos);
        doc.groups.push_back(std::move(g));
      } else if (name == "scenario") {
        if (!scenario_verbs().contains(rec.head)) syntax(rec.pos, "unknown scenario step '" + rec.head + "'");
        doc.scenario.push_back(rec);
      }
    }
  }

  // Step times must not run backwards.
  std::optional<DateTime> last;
  for (const auto& step : doc.scenario) {
    auto* at = step.find("at");
    if (!at) continue;
    DateTime t;
    if (at->is_list || !DateTime::try_parse(at->scalar, t)) syntax(at->pos, "malformed datetime");
    if (last && t < *last) syntax(at->pos, "step time " + t.iso() + " precedes " + last->iso());
    last = t;
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Application

namespace {

template <typename F>
void at_record(TextPos pos, F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    throw e.at(pos);
  }
}

/// Orders records so that any in-document dependency comes first.
template <typename Rec, typename KeyOf, typename DepOf>
std::vector<const Rec*> dependency_order(const std::vector<Rec>& records, KeyOf key_of, DepOf dep_of) {
  std::map<TermName, const Rec*> by_name;
  for (const auto& r : records) by_name.emplace(key_of(r), &r);
  std::map<TermName, int> state;  // 1 visiting, 2 done
  std::vector<const Rec*> out;
  std::function<void(const Rec&)> visit = [&](const Rec& r) {
    auto k = key_of(r);
    if (state[k] == 2) return;
    if (state[k] == 1) throw Error(Errc::WouldCreateCycle, k.str() + " depends on itself", r.pos);
    state[k] = 1;
    if (auto dep = dep_of(r)) {
      auto it = by_name.find(*dep);
      if (it != by_name.end() && *dep != k) visit(*it->second);
    }
    state[k] = 2;
    out.push_back(&r);
  };
  for (const auto& r : records) visit(r);
  return out;
}

}  // namespace

ApplyReport apply_document(const RcmDocument& doc, Engine& engine) {
  Engine work(engine);
  ApplyReport report;
  auto& schema = work.schema();
  auto& store = work.store();

  auto classes = dependency_order(
      doc.classes, [](const ClassRecord& r) { return r.name; },
      [](const ClassRecord& r) -> std::optional<TermName> { return r.parent; });
  for (const auto* c : classes) {
    at_record(c->pos, [&] { schema.define_class(c->name, c->parent, c->label); });
  }

  auto objects = dependency_order(
      doc.object_properties, [](const ObjectPropertyRecord& r) { return r.def.name; },
      [](const ObjectPropertyRecord& r) { return r.def.sub_property_of; });
  for (const auto* p : objects) {
    auto def = p->def;
    def.inverse_of.clear();
    at_record(p->pos, [&] { schema.define_object_property(def); });
  }
  for (const auto& p : doc.object_properties) {
    for (const auto& inv : p.def.inverse_of) at_record(p.pos, [&] { schema.link_inverse(p.def.name, inv); });
  }

  auto datas = dependency_order(
      doc.data_properties, [](const DataPropertyRecord& r) { return r.def.name; },
      [](const DataPropertyRecord& r) { return r.def.sub_property_of; });
  for (const auto* p : datas) {
    at_record(p->pos, [&] { schema.define_data_property(p->def); });
  }

  for (const auto& e : doc.equivalences) {
    at_record(e.pos, [&] { schema.declare_equivalence(e.term, e.kind, e.iri); });
  }

  std::vector<const UnitRecord*> units;
  for (const auto& u : doc.units) units.push_back(&u);
  std::stable_partition(units.begin(), units.end(), [](const UnitRecord* u) { return u->def.canonical(); });
  for (const auto* u : units) {
    at_record(u->pos, [&] { work.units().register_unit(u->def); });
  }

  for (const auto& ind : doc.individuals) {
    at_record(ind.pos, [&] { store.create_individual(ind.class_term, ind.id, std::string(kSystemActor), ind.created_at); });
  }

  std::map<std::uint64_t, FactId> local_to_store;
  for (const auto& fr : doc.facts) {
    at_record(fr.pos, [&] {
      AnnotatedValue payload;
      if (fr.object) {
        payload.value = IndividualRef{*fr.object};
      } else if (auto def = schema.find_data_property(fr.property)) {
        payload.value = parse_literal(def->value_type, *fr.value);
      } else if (schema.find_object_property(fr.property)) {
        fail(Errc::TypeMismatch, fr.property.str() + " is an object property; use object=");
      } else {
        fail(Errc::UnknownProperty, fr.property.str());
      }
      payload.timestamp = fr.timestamp.value_or(fr.at);
      payload.unit = fr.unit;
      payload.qoc = fr.qoc;
      payload.source = fr.source;
      std::optional<FactId> derived;
      if (fr.derived_from) derived = local_to_store.at(*fr.derived_from);
      auto f = store.replay(fr.subject, fr.property, payload, fr.by, fr.at, derived);
      local_to_store[fr.local_id] = f.id;
    });
  }

  for (const auto& ind : doc.individuals) {
    at_record(ind.pos, [&] {
      auto p = store.provenance(ind.id);
      std::string creator = ind.created_by.value_or(std::string(kSystemActor));
      if (creator != kSystemActor && creator != ind.id && !store.contains(creator)) {
        fail(Errc::UnknownIndividual, "creator " + creator);
      }
      bool untouched = p.last_change == "created" && p.last_modified_at == p.created_at &&
                       p.last_modified_by == kSystemActor;
      p.created_by = creator;
      if (untouched) p.last_modified_by = creator;
      if (ind.modified_by) p.last_modified_by = *ind.modified_by;
      if (ind.modified_at) p.last_modified_at = *ind.modified_at;
      if (ind.change) p.last_change = *ind.change;
      store.restore_provenance(ind.id, p);
    });
  }

  for (const auto& g : doc.groups) {
    at_record(g.pos, [&] {
      if (store.contains(g.id)) {
        work.access().adopt_group(g.id);
      } else {
        work.access().create_group(g.id);
      }
      for (const auto& m : g.members) work.access().add_member(g.id, m);
      for (const auto& p : g.privileges) work.access().grant_privilege(g.id, p);
    });
  }

  report.counts["schema.classes"] = doc.classes.size();
  report.counts["schema.objectproperties"] = doc.object_properties.size();
  report.counts["schema.dataproperties"] = doc.data_properties.size();
  report.counts["schema.equivalences"] = doc.equivalences.size();
  report.counts["units"] = doc.units.size();
  report.counts["individuals"] = doc.individuals.size();
  report.counts["facts"] = doc.facts.size();
  report.counts["groups"] = doc.groups.size();
  report.counts["scenario"] = doc.scenario.size();
  std::erase_if(report.counts, [](const auto& kv) { return kv.second == 0; });

  engine = std::move(work);
  return report;
}

// ---------------------------------------------------------------------------
// Canonical export

std::string quote(std::string_view s) {
  bool bare = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == ':' || c == '/' ||
           c == '#' || c == '+' || c == '-';
  });
  if (bare && s.front() != '#') return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

namespace {

std::string text_field(std::string_view s) {
  // Free text is always quoted so it never collides with keywords.
  std::string q = quote(s);
  return q.front() == '"' ? q : "\"" + q + "\"";
}

template <typename T, typename F>
std::string join_list(const std::vector<T>& items, F render) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += render(items[i]);
  }
  return out + "]";
}

std::string export_canonical(const Engine& engine) {
  const auto& schema = engine.schema();
  std::string out = "# rocom canonical document\n";
  auto term = [](const TermName& t) { return t.str(); };

  out += "\n[schema.classes]\n";
  for (const auto& c : schema.classes()) {
    if (!c.parent) continue;
    out += c.name.str() + " parent=" + c.parent->str() + " label=" + text_field(c.label) + "\n";
  }

  out += "\n[schema.objectproperties]\n";
  for (const auto& p : schema.object_properties()) {
    out += p.name.str() + " domain=" + join_list(p.domain, term) + " range=" + p.range.str();
    if (p.functional) out += " functional=true";
    if (p.inverse_functional) out += " inversefunctional=true";
    if (!p.inverse_of.empty()) out += " inverseof=" + join_list(p.inverse_of, term);
    if (p.sub_property_of) out += " subpropertyof=" + p.sub_property_of->str();
    out += " label=" + text_field(p.label) + "\n";
  }

  out += "\n[schema.dataproperties]\n";
  for (const auto& p : schema.data_properties()) {
    out += p.name.str() + " domain=" + p.domain.str() + " type=" + std::string(to_string(p.value_type)) +
           " volatility=" + std::string(to_string(p.volatility));
    if (p.sub_property_of) out += " subpropertyof=" + p.sub_property_of->str();
    out += " label=" + text_field(p.label) + "\n";
  }

  out += "\n[schema.equivalences]\n";
  for (const auto& [iri, m] : schema.equivalences()) {
    out += text_field(iri) + " kind=" + std::string(to_string(m.kind)) + " term=" + m.term.str() + "\n";
  }

  out += "\n[units]\n";
  for (const auto& u : engine.units().units()) {
    out += quote(u.name) + " dimension=" + quote(u.dimension) + " scale=" + format_real(u.scale) +
           " offset=" + format_real(u.offset) + "\n";
  }

  out += "\n[individuals]\n";
  for (const auto& ind : engine.store().individuals()) {
    const auto& p = ind.provenance;
    out += ind.id + " class=" + ind.class_term.str() + " createdby=" + p.created_by +
           " createdat=" + p.created_at.iso() + " modifiedby=" + p.last_modified_by +
           " modifiedat=" + p.last_modified_at.iso() + " change=" + text_field(p.last_change) + "\n";
  }

  out += "\n[facts]\n";
  for (const auto& f : engine.store().facts()) {
    out += std::to_string(f.id) + " subject=" + f.subject + " property=" + f.property.str();
    if (auto ref = std::get_if<IndividualRef>(&f.payload.value)) {
      out += " object=" + ref->id;
    } else if (std::holds_alternative<std::string>(f.payload.value)) {
      out += " value=" + text_field(std::get<std::string>(f.payload.value));
    } else {
      out += " value=" + format_value(f.payload.value);
    }
    out += " ts=" + f.payload.timestamp.iso();
    if (f.payload.unit) out += " unit=" + quote(*f.payload.unit);
    const auto& q = f.payload.qoc;
    if (q.accuracy) out += " accuracy=" + format_real(*q.accuracy);
    if (q.probability) out += " probability=" + format_real(*q.probability);
    if (q.coverage) out += " coverage=" + text_field(*q.coverage);
    if (q.resolution) out += " resolution=" + format_real(*q.resolution);
    if (q.mean_error) out += " meanerror=" + format_real(*q.mean_error);
    if (q.recurrence) out += " recurrence=" + text_field(*q.recurrence);
    if (f.payload.source) out += " source=" + *f.payload.source;
    out += " by=" + f.asserted_by + " at=" + f.asserted_at.iso();
    if (f.derived_from) out += " derivedfrom=" + std::to_string(*f.derived_from);
    out += "\n";
  }

  out += "\n[groups]\n";
  for (const auto& g : engine.access().groups()) {
    out += g.id + " members=" + join_list(g.members, [](const std::string& s) { return s; }) +
           " privileges=" + join_list(g.privileges, term) + "\n";
  }
  return out;
}

}  // namespace

std::string export_rdfxml(const Engine& engine, const std::string& base_iri);

std::string export_document(const Engine& engine, const ExportOptions& options) {
  if (options.format == ExportFormat::RdfXml) return export_rdfxml(engine, options.base_iri);
  return export_canonical(engine);
}

std::vector<Issue> check_document(const Engine& base, std::string_view text) {
  auto as_issue = [](const Error& e) {
    std::string where;
    if (e.where()) where = std::to_string(e.where()->line) + ":" + std::to_string(e.where()->column);
    return Issue{Severity::Error, std::string(to_string(e.code())), where, e.detail()};
  };
  Engine work(base);
  try {
    apply_document(parse_document(text), work);
  } catch (const Error& e) {
    return {as_issue(e)};
  }
  return work.schema().validate();
}

}  // namespace rocom
