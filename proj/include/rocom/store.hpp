#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "rocom/annotated.hpp"
#include "rocom/quality.hpp"
#include "rocom/schema.hpp"

namespace rocom {

/// Coarse-grained, per-individual provenance.
struct ProvenanceRecord {
  std::string created_by;
  DateTime created_at;
  std::string last_modified_by;
  DateTime last_modified_at;
  std::string last_change;

  bool operator==(const ProvenanceRecord&) const = default;
};

struct Individual {
  std::string id;
  TermName class_term;
  ProvenanceRecord provenance;

  bool operator==(const Individual&) const = default;
};

using FactId = std::uint64_t;

/// One immutable assertion. Relation facts carry an IndividualRef value.
struct Fact {
  FactId id = 0;
  std::string subject;
  TermName property;
  AnnotatedValue payload;
  std::string asserted_by;
  DateTime asserted_at;
  std::optional<FactId> derived_from;

  bool is_relation() const noexcept { return std::holds_alternative<IndividualRef>(payload.value); }
  bool operator==(const Fact&) const = default;
};

/// Caller-supplied annotations; the timestamp defaults to the assertion time.
struct Annotations {
  std::optional<DateTime> timestamp;
  std::optional<std::string> unit;
  QoC qoc;
  std::optional<std::string> source;
};

struct ResolutionPolicy {
  enum class Kind { Latest, Confident, All };

  Kind kind = Kind::Latest;
  double threshold = 0.5;

  static ResolutionPolicy latest() { return {Kind::Latest, 0.0}; }
  static ResolutionPolicy confident(double theta = 0.5) { return {Kind::Confident, theta}; }
  static ResolutionPolicy all() { return {Kind::All, 0.0}; }

  /// "latest" | "all" | "confident" | "confident:<theta>"
  static ResolutionPolicy parse(std::string_view text);
  std::string str() const;
};

/// Probability assumed for facts that carry none.
inline constexpr double kDefaultProbability = 1.0;

enum class CompareOp { Less, LessEqual, Equal, NotEqual, GreaterEqual, Greater };

struct ValuePredicate {
  CompareOp op = CompareOp::Equal;
  Value operand;
  std::optional<std::string> unit;
};

struct QueryPattern {
  std::optional<TermName> class_term;  // matches subclasses too
  std::optional<TermName> property;
  std::optional<std::string> subject;
  std::optional<ValuePredicate> predicate;
};

struct RelationResult {
  Fact fact;
  std::optional<Fact> inverse;
};

/// Append-only store of individuals and annotated facts.
///
/// Facts are never mutated or removed; "current" values are resolved at read
/// time. For a functional object property only the fact with the greatest
/// (timestamp, id) is current; every other (subject, property) keeps all of
/// its facts as current candidates. Each public operation is atomic.
///
/// The store refers to, but does not own, its schema and unit registry.
class ContextStore {
 public:
  ContextStore(const Schema& schema, const UnitRegistry& units);
  ContextStore(const ContextStore& other);
  /// Copy of `other` bound to a different schema/registry (same content).
  ContextStore(const ContextStore& other, const Schema& schema, const UnitRegistry& units);
  ContextStore& operator=(const ContextStore&) = delete;

  Individual create_individual(const TermName& class_term, const std::string& id, const std::string& actor,
                               DateTime at);

  Fact assert_data(const std::string& subject, const TermName& property, Value value, const Annotations& ann,
                   const std::string& actor, DateTime at);

  /// Appends the relation and, when the property has exactly one declared
  /// inverse, the derived inverse fact in the same atomic step.
  RelationResult assert_relation(const std::string& subject, const TermName& property, const std::string& object,
                                 const Annotations& ann, const std::string& actor, DateTime at);

  /// Latest / Confident: the single winning fact, if any.
  std::optional<Fact> get_current(const std::string& subject, const TermName& property,
                                  const ResolutionPolicy& policy = ResolutionPolicy::latest()) const;
  /// Any policy; All yields every current candidate in id order.
  std::vector<Fact> resolve(const std::string& subject, const TermName& property,
                            const ResolutionPolicy& policy) const;

  std::vector<Fact> history(const std::string& subject, const TermName& property) const;
  ProvenanceRecord provenance(const std::string& subject) const;
  std::vector<Fact> query(const QueryPattern& pattern) const;

  /// Follows `locatedin` upward; level 0 is the directly asserted location.
  std::optional<std::string> location_at_granularity(const std::string& subject, std::size_t level) const;

  /// Union of both stores, facts interleaved by (timestamp, origin) and
  /// renumbered. Content-identical facts are kept once.
  ContextStore merge(const ContextStore& other) const;

  /// Appends a fact exactly as given (validated, never materialized), with a
  /// fresh id. Used when loading documents.
  Fact replay(const std::string& subject, const TermName& property, const AnnotatedValue& payload,
              const std::string& actor, DateTime at, std::optional<FactId> derived_from);
  void restore_provenance(const std::string& id, const ProvenanceRecord& record);

  bool contains(const std::string& id) const;
  std::optional<Individual> find_individual(const std::string& id) const;
  std::vector<Individual> individuals() const;  // sorted by id
  std::vector<Fact> facts() const;              // id order
  std::size_t fact_count() const;

  const Schema& schema() const noexcept { return *schema_; }
  const UnitRegistry& units() const noexcept { return *units_; }

 private:
  using Key = std::pair<std::string, TermName>;

  const Individual& individual_locked(const std::string& id) const;
  void require_actor_locked(const std::string& actor) const;
  void check_annotations_locked(const Annotations& ann) const;
  AnnotatedValue annotate(Value value, const Annotations& ann, DateTime at) const;
  Fact append_locked(Fact f);
  void touch_locked(const std::string& id, const std::string& actor, DateTime at, const std::string& change);
  std::vector<Fact> candidates_locked(const Key& key) const;
  void require_property_locked(const TermName& property) const;
  std::optional<Fact> winner_locked(const Key& key, const ResolutionPolicy& policy) const;

  const Schema* schema_;
  const UnitRegistry* units_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, Individual> individuals_;
  std::vector<Fact> facts_;
  std::map<Key, std::vector<std::size_t>> index_;
};

}  // namespace rocom
