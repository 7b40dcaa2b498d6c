#include "rocom/store.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <tuple>

#include "rocom/error.hpp"

namespace rocom {

ResolutionPolicy ResolutionPolicy::parse(std::string_view text) {
  if (text == "latest") return latest();
  if (text == "all") return all();
  if (text == "confident") return confident();
  constexpr std::string_view prefix = "confident:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto rest = text.substr(prefix.size());
    double theta = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), theta);
    if (!rest.empty() && ec == std::errc{} && ptr == rest.data() + rest.size() && theta >= 0.0 && theta <= 1.0) {
      return confident(theta);
    }
  }
  fail(Errc::InvalidArgument, "bad policy '" + std::string(text) + "' (latest | all | confident:<0..1>)");
}

std::string ResolutionPolicy::str() const {
  switch (kind) {
    case Kind::Latest: return "latest";
    case Kind::All: return "all";
    case Kind::Confident: return "confident:" + format_real(threshold);
  }
  return "latest";
}

namespace {

bool newer(const Fact& a, const Fact& b) {
  return std::tie(a.payload.timestamp, a.id) > std::tie(b.payload.timestamp, b.id);
}

double probability_of(const Fact& f) { return f.payload.qoc.probability.value_or(kDefaultProbability); }

}  // namespace

ContextStore::ContextStore(const Schema& schema, const UnitRegistry& units) : schema_(&schema), units_(&units) {}

ContextStore::ContextStore(const ContextStore& other) : ContextStore(other, *other.schema_, *other.units_) {}

ContextStore::ContextStore(const ContextStore& other, const Schema& schema, const UnitRegistry& units)
    : schema_(&schema), units_(&units) {
  std::shared_lock lock(other.mutex_);
  individuals_ = other.individuals_;
  facts_ = other.facts_;
  index_ = other.index_;
}

const Individual& ContextStore::individual_locked(const std::string& id) const {
  auto it = individuals_.find(id);
  if (it == individuals_.end()) fail(Errc::UnknownIndividual, id);
  return it->second;
}

void ContextStore::require_actor_locked(const std::string& actor) const {
  if (actor != kSystemActor) individual_locked(actor);
}

void ContextStore::require_property_locked(const TermName& property) const {
  if (!schema_->find_data_property(property) && !schema_->find_object_property(property)) {
    fail(Errc::UnknownProperty, property.str());
  }
}

Individual ContextStore::create_individual(const TermName& class_term, const std::string& id,
                                           const std::string& actor, DateTime at) {
  std::unique_lock lock(mutex_);
  if (!valid_identifier(id) || id == kSystemActor) fail(Errc::InvalidIdentifier, "'" + id + "'");
  if (individuals_.contains(id)) fail(Errc::DuplicateIndividual, id);
  if (!schema_->has_class(class_term)) fail(Errc::UnknownClass, class_term.str());
  if (actor != kSystemActor && actor != id) individual_locked(actor);
  Individual ind{id, class_term, {actor, at, actor, at, "created"}};
  individuals_.emplace(id, ind);
  return ind;
}

void ContextStore::check_annotations_locked(const Annotations& ann) const {
  auto issues = validate_qoc(ann.qoc);
  if (!issues.empty()) fail(Errc::InvalidQoC, issues.front().subject + " " + issues.front().message);
  if (ann.unit && !units_->contains(*ann.unit)) fail(Errc::UnknownUnit, *ann.unit);
  if (ann.source) individual_locked(*ann.source);
}

AnnotatedValue ContextStore::annotate(Value value, const Annotations& ann, DateTime at) const {
  return AnnotatedValue{std::move(value), ann.timestamp.value_or(at), ann.unit, ann.qoc, ann.source};
}

Fact ContextStore::append_locked(Fact f) {
  f.id = facts_.size() + 1;
  index_[{f.subject, f.property}].push_back(facts_.size());
  facts_.push_back(f);
  return f;
}

void ContextStore::touch_locked(const std::string& id, const std::string& actor, DateTime at,
                                const std::string& change) {
  auto& p = individuals_.at(id).provenance;
  if (at >= p.last_modified_at) {
    p.last_modified_at = at;
    p.last_modified_by = actor;
    p.last_change = change;
  }
}

Fact ContextStore::assert_data(const std::string& subject, const TermName& property, Value value,
                               const Annotations& ann, const std::string& actor, DateTime at) {
  std::unique_lock lock(mutex_);
  const auto& ind = individual_locked(subject);
  require_actor_locked(actor);
  auto def = schema_->find_data_property(property);
  if (!def) {
    if (schema_->find_object_property(property)) {
      fail(Errc::UnknownProperty, property.str() + " is an object property");
    }
    fail(Errc::UnknownProperty, property.str());
  }
  if (!schema_->is_subclass_of(ind.class_term, def->domain)) {
    fail(Errc::DomainViolation, subject + " (" + ind.class_term.str() + ") is outside the domain " +
                                    def->domain.str() + " of " + property.str());
  }
  if (def->value_type == ValueType::Real && std::holds_alternative<std::int64_t>(value)) {
    value = static_cast<double>(std::get<std::int64_t>(value));
  }
  if (!holds_type(value, def->value_type)) {
    fail(Errc::TypeMismatch, property.str() + " expects " + std::string(to_string(def->value_type)));
  }
  check_annotations_locked(ann);
  Fact f{0, subject, property, annotate(std::move(value), ann, at), actor, at, std::nullopt};
  f = append_locked(std::move(f));
  touch_locked(subject, actor, at, "set " + property.str());
  return f;
}

RelationResult ContextStore::assert_relation(const std::string& subject, const TermName& property,
                                             const std::string& object, const Annotations& ann,
                                             const std::string& actor, DateTime at) {
  std::unique_lock lock(mutex_);
  const auto& s = individual_locked(subject);
  const auto& o = individual_locked(object);
  require_actor_locked(actor);
  auto def = schema_->find_object_property(property);
  if (!def) {
    if (schema_->find_data_property(property)) {
      fail(Errc::UnknownProperty, property.str() + " is a data property");
    }
    fail(Errc::UnknownProperty, property.str());
  }
  auto in_domain = [&](const ObjectPropertyDef& p, const TermName& cls) {
    return std::any_of(p.domain.begin(), p.domain.end(),
                       [&](const TermName& d) { return schema_->is_subclass_of(cls, d); });
  };
  if (!in_domain(*def, s.class_term)) {
    fail(Errc::DomainViolation, subject + " (" + s.class_term.str() + ") is outside the domain of " + property.str());
  }
  if (!schema_->is_subclass_of(o.class_term, def->range)) {
    fail(Errc::RangeViolation, object + " (" + o.class_term.str() + ") is outside the range " + def->range.str() +
                                   " of " + property.str());
  }
  check_annotations_locked(ann);

  std::optional<ObjectPropertyDef> inverse;
  if (def->inverse_of.size() == 1) {
    inverse = schema_->find_object_property(def->inverse_of.front());
    // Validate the derived fact before anything is appended.
    if (!in_domain(*inverse, o.class_term)) {
      fail(Errc::DomainViolation, "inverse " + inverse->name.str() + " does not admit " + object);
    }
    if (!schema_->is_subclass_of(s.class_term, inverse->range)) {
      fail(Errc::RangeViolation, "inverse " + inverse->name.str() + " does not admit " + subject);
    }
  }

  RelationResult result;
  result.fact = append_locked(
      Fact{0, subject, property, annotate(IndividualRef{object}, ann, at), actor, at, std::nullopt});
  touch_locked(subject, actor, at, "set " + property.str());
  if (inverse) {
    result.inverse = append_locked(
        Fact{0, object, inverse->name, annotate(IndividualRef{subject}, ann, at), actor, at, result.fact.id});
    touch_locked(object, actor, at, "set " + inverse->name.str());
  }
  return result;
}

Fact ContextStore::replay(const std::string& subject, const TermName& property, const AnnotatedValue& payload,
                          const std::string& actor, DateTime at, std::optional<FactId> derived_from) {
  // Validation mirrors the assert paths; materialization is skipped.
  std::unique_lock lock(mutex_);
  const auto& ind = individual_locked(subject);
  require_actor_locked(actor);
  Annotations ann{payload.timestamp, payload.unit, payload.qoc, payload.source};
  check_annotations_locked(ann);
  if (derived_from && (*derived_from == 0 || *derived_from > facts_.size())) {
    fail(Errc::InvalidArgument, "derivedfrom refers to an unknown fact");
  }
  if (auto def = schema_->find_data_property(property)) {
    if (!schema_->is_subclass_of(ind.class_term, def->domain)) fail(Errc::DomainViolation, subject);
    if (!holds_type(payload.value, def->value_type)) fail(Errc::TypeMismatch, property.str());
  } else if (auto odef = schema_->find_object_property(property)) {
    auto ref = std::get_if<IndividualRef>(&payload.value);
    if (!ref) fail(Errc::TypeMismatch, property.str() + " expects an individual");
    const auto& obj = individual_locked(ref->id);
    bool dom = std::any_of(odef->domain.begin(), odef->domain.end(),
                           [&](const TermName& d) { return schema_->is_subclass_of(ind.class_term, d); });
    if (!dom) fail(Errc::DomainViolation, subject);
    if (!schema_->is_subclass_of(obj.class_term, odef->range)) fail(Errc::RangeViolation, ref->id);
  } else {
    fail(Errc::UnknownProperty, property.str());
  }
  Fact f = append_locked(Fact{0, subject, property, payload, actor, at, derived_from});
  touch_locked(subject, actor, at, "set " + property.str());
  return f;
}

void ContextStore::restore_provenance(const std::string& id, const ProvenanceRecord& record) {
  std::unique_lock lock(mutex_);
  individual_locked(id);
  if (record.last_modified_at < record.created_at) {
    fail(Errc::InvalidArgument, id + ": last modification precedes creation");
  }
  individuals_.at(id).provenance = record;
}

std::vector<Fact> ContextStore::candidates_locked(const Key& key) const {
  std::vector<Fact> out;
  auto it = index_.find(key);
  if (it == index_.end()) return out;
  auto def = schema_->find_object_property(key.second);
  if (def && def->functional) {
    const Fact* best = nullptr;
    for (auto i : it->second) {
      if (!best || newer(facts_[i], *best)) best = &facts_[i];
    }
    out.push_back(*best);
    return out;
  }
  for (auto i : it->second) out.push_back(facts_[i]);
  return out;
}

std::optional<Fact> ContextStore::winner_locked(const Key& key, const ResolutionPolicy& policy) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  const Fact* best = nullptr;
  for (auto i : it->second) {
    const Fact& f = facts_[i];
    if (policy.kind == ResolutionPolicy::Kind::Confident && probability_of(f) < policy.threshold) continue;
    if (!best || newer(f, *best)) best = &f;
  }
  if (!best) return std::nullopt;
  return *best;
}

std::optional<Fact> ContextStore::get_current(const std::string& subject, const TermName& property,
                                              const ResolutionPolicy& policy) const {
  if (policy.kind == ResolutionPolicy::Kind::All) {
    fail(Errc::InvalidArgument, "get_current resolves a single value; use resolve() for the All policy");
  }
  std::shared_lock lock(mutex_);
  individual_locked(subject);
  require_property_locked(property);
  return winner_locked({subject, property}, policy);
}

std::vector<Fact> ContextStore::resolve(const std::string& subject, const TermName& property,
                                        const ResolutionPolicy& policy) const {
  std::shared_lock lock(mutex_);
  individual_locked(subject);
  require_property_locked(property);
  if (policy.kind == ResolutionPolicy::Kind::All) return candidates_locked({subject, property});
  std::vector<Fact> out;
  if (auto f = winner_locked({subject, property}, policy)) out.push_back(*f);
  return out;
}

std::vector<Fact> ContextStore::history(const std::string& subject, const TermName& property) const {
  std::shared_lock lock(mutex_);
  individual_locked(subject);
  require_property_locked(property);
  std::vector<Fact> out;
  if (auto it = index_.find({subject, property}); it != index_.end()) {
    for (auto i : it->second) out.push_back(facts_[i]);
  }
  return out;
}

ProvenanceRecord ContextStore::provenance(const std::string& subject) const {
  std::shared_lock lock(mutex_);
  return individual_locked(subject).provenance;
}

namespace {

bool apply_op(CompareOp op, std::partial_ordering c) {
  switch (op) {
    case CompareOp::Less: return c < 0;
    case CompareOp::LessEqual: return c <= 0;
    case CompareOp::Equal: return c == 0;
    case CompareOp::NotEqual: return c != 0;
    case CompareOp::GreaterEqual: return c >= 0;
    case CompareOp::Greater: return c > 0;
  }
  return false;
}

}  // namespace

std::vector<Fact> ContextStore::query(const QueryPattern& pattern) const {
  std::shared_lock lock(mutex_);
  if (pattern.class_term && !schema_->has_class(*pattern.class_term)) {
    fail(Errc::UnknownTerm, "class " + pattern.class_term->str());
  }
  if (pattern.property && !schema_->find_data_property(*pattern.property) &&
      !schema_->find_object_property(*pattern.property)) {
    fail(Errc::UnknownTerm, "property " + pattern.property->str());
  }
  if (pattern.subject) individual_locked(*pattern.subject);
  if (pattern.predicate && pattern.predicate->unit && !units_->contains(*pattern.predicate->unit)) {
    fail(Errc::UnknownUnit, *pattern.predicate->unit);
  }

  auto value_matches = [&](const Fact& f) {
    const auto& pred = *pattern.predicate;
    auto lhs = numeric(f.payload.value);
    auto rhs = numeric(pred.operand);
    if (lhs && rhs) {
      if (f.payload.unit.has_value() != pred.unit.has_value()) return false;
      if (pred.unit) {
        const auto fu = units_->find(*f.payload.unit);
        const auto pu = units_->find(*pred.unit);
        if (!fu || !pu || fu->dimension != pu->dimension) return false;
        AnnotatedValue b{pred.operand, {}, pred.unit, {}, {}};
        auto ord = units_->compare(f.payload, b);
        auto c = ord == Ordering::Less      ? std::partial_ordering::less
                 : ord == Ordering::Greater ? std::partial_ordering::greater
                                            : std::partial_ordering::equivalent;
        return apply_op(pred.op, c);
      }
      return apply_op(pred.op, *lhs <=> *rhs);
    }
    if (f.payload.value.index() != pred.operand.index()) return false;
    return apply_op(pred.op, f.payload.value <=> pred.operand);
  };

  std::vector<Fact> out;
  for (const auto& [key, indices] : index_) {
    if (pattern.subject && key.first != *pattern.subject) continue;
    if (pattern.property && key.second != *pattern.property) continue;
    if (pattern.class_term &&
        !schema_->is_subclass_of(individuals_.at(key.first).class_term, *pattern.class_term)) {
      continue;
    }
    for (auto& f : candidates_locked(key)) {
      if (pattern.predicate && !value_matches(f)) continue;
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const Fact& a, const Fact& b) { return a.id < b.id; });
  return out;
}

std::optional<std::string> ContextStore::location_at_granularity(const std::string& subject,
                                                                 std::size_t level) const {
  static const TermName kLocatedIn = TermName::parse("location#locatedin");
  std::shared_lock lock(mutex_);
  individual_locked(subject);
  require_property_locked(kLocatedIn);
  std::string cur = subject;
  // Bounded walk: a containment cycle cannot loop forever.
  for (std::size_t step = 0; step <= level && step <= individuals_.size(); ++step) {
    auto f = winner_locked({cur, kLocatedIn}, ResolutionPolicy::latest());
    if (!f) return std::nullopt;
    cur = std::get<IndividualRef>(f->payload.value).id;
    if (step == level) return cur;
  }
  return std::nullopt;
}

ContextStore ContextStore::merge(const ContextStore& other) const {
  if (schema_->fingerprint() != other.schema_->fingerprint()) {
    fail(Errc::SchemaMismatch, "stores were built against different schemas");
  }
  ContextStore theirs(other);  // snapshot, so only one lock is held at a time
  ContextStore result(*this);

  for (const auto& [id, ind] : theirs.individuals_) {
    auto it = result.individuals_.find(id);
    if (it == result.individuals_.end()) {
      result.individuals_.emplace(id, ind);
      continue;
    }
    if (it->second.class_term != ind.class_term) {
      fail(Errc::IndividualClassConflict,
           id + ": " + it->second.class_term.str() + " vs " + ind.class_term.str());
    }
    auto& p = it->second.provenance;
    const auto& q = ind.provenance;
    if (q.created_at < p.created_at) {
      p.created_at = q.created_at;
      p.created_by = q.created_by;
    }
    if (q.last_modified_at > p.last_modified_at) {
      p.last_modified_at = q.last_modified_at;
      p.last_modified_by = q.last_modified_by;
      p.last_change = q.last_change;
    }
  }

  struct Tagged {
    const Fact* fact;
    int origin;
  };
  std::vector<Tagged> all;
  all.reserve(result.facts_.size() + theirs.facts_.size());
  for (const auto& f : result.facts_) all.push_back({&f, 0});
  for (const auto& f : theirs.facts_) all.push_back({&f, 1});
  std::stable_sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
    return std::tie(a.fact->payload.timestamp, a.origin, a.fact->id) <
           std::tie(b.fact->payload.timestamp, b.origin, b.fact->id);
  });

  auto qoc_key = [](const QoC& q) {
    auto num = [](const std::optional<double>& d) { return d ? format_real(*d) : std::string("-"); };
    return num(q.accuracy) + "|" + num(q.probability) + "|" + q.coverage.value_or("-") + "|" +
           num(q.resolution) + "|" + num(q.mean_error) + "|" + q.recurrence.value_or("-");
  };
  auto content_key = [&](const Fact& f) {
    return f.subject + '\x1f' + f.property.str() + '\x1f' + std::to_string(f.payload.value.index()) + '\x1f' +
           format_value(f.payload.value) + '\x1f' + f.payload.unit.value_or("\x1e") + '\x1f' +
           f.payload.source.value_or("\x1e") + '\x1f' + f.asserted_by + '\x1f' +
           std::to_string(f.asserted_at.seconds()) + '\x1f' + std::to_string(f.payload.timestamp.seconds()) +
           '\x1f' + qoc_key(f.payload.qoc);
  };
  auto source_of = [&](const Tagged& t) -> const Fact* {
    if (!t.fact->derived_from) return nullptr;
    const auto& pool = t.origin == 0 ? result.facts_ : theirs.facts_;
    return &pool.at(*t.fact->derived_from - 1);
  };

  // Derived facts are identified by their source's content, not its id.
  std::map<std::pair<int, FactId>, FactId> renumber;
  std::map<std::string, FactId> seen;
  std::vector<Fact> merged;
  std::vector<int> merged_origin;
  merged.reserve(all.size());
  for (const auto& t : all) {
    std::string key = content_key(*t.fact);
    if (const Fact* src = source_of(t)) key += "\x1d" + content_key(*src);
    if (auto it = seen.find(key); it != seen.end()) {
      renumber[{t.origin, t.fact->id}] = it->second;
      continue;
    }
    Fact f = *t.fact;
    f.id = merged.size() + 1;
    renumber[{t.origin, t.fact->id}] = f.id;
    seen.emplace(std::move(key), f.id);
    merged.push_back(std::move(f));
    merged_origin.push_back(t.origin);
  }
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (merged[i].derived_from) merged[i].derived_from = renumber.at({merged_origin[i], *merged[i].derived_from});
  }

  result.facts_ = std::move(merged);
  result.index_.clear();
  for (std::size_t i = 0; i < result.facts_.size(); ++i) {
    result.index_[{result.facts_[i].subject, result.facts_[i].property}].push_back(i);
  }
  return result;
}

bool ContextStore::contains(const std::string& id) const {
  std::shared_lock lock(mutex_);
  return individuals_.contains(id);
}

std::optional<Individual> ContextStore::find_individual(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = individuals_.find(id);
  if (it == individuals_.end()) return std::nullopt;
  return it->second;
}

std::vector<Individual> ContextStore::individuals() const {
  std::shared_lock lock(mutex_);
  std::vector<Individual> out;
  out.reserve(individuals_.size());
  for (const auto& [_, ind] : individuals_) out.push_back(ind);
  return out;
}

std::vector<Fact> ContextStore::facts() const {
  std::shared_lock lock(mutex_);
  return facts_;
}

std::size_t ContextStore::fact_count() const {
  std::shared_lock lock(mutex_);
  return facts_.size();
}

}  // namespace rocom
