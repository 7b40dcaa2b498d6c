#pragma once

#include <memory>

#include "rocom/access.hpp"
#include "rocom/quality.hpp"
#include "rocom/schema.hpp"
#include "rocom/situation.hpp"
#include "rocom/store.hpp"

namespace rocom {

/// Owns one of each module, wired together. Copies are deep.
class Engine {
 public:
  /// Only the six root classes; no units.
  Engine();
  Engine(const Engine& other);
  Engine& operator=(const Engine& other);
  Engine(Engine&&) noexcept = default;
  Engine& operator=(Engine&&) noexcept = default;
  ~Engine();

  /// Bare engine with the bundled core ontology and unit table applied.
  static Engine with_builtins();

  Schema& schema() { return *schema_; }
  const Schema& schema() const { return *schema_; }
  UnitRegistry& units() { return *units_; }
  const UnitRegistry& units() const { return *units_; }
  ContextStore& store() { return *store_; }
  const ContextStore& store() const { return *store_; }
  AccessControl& access() { return *access_; }
  const AccessControl& access() const { return *access_; }
  SituationEngine& situations() { return *situations_; }
  const SituationEngine& situations() const { return *situations_; }

  /// Resolution gated by a privilege: `actor` must be allowed to perform
  /// `activity_class` (AccessDenied otherwise).
  std::vector<Fact> resolve_as(const std::string& actor, const TermName& activity_class,
                               const std::string& subject, const TermName& property,
                               const ResolutionPolicy& policy) const;

 private:
  std::unique_ptr<Schema> schema_;
  std::unique_ptr<UnitRegistry> units_;
  std::unique_ptr<ContextStore> store_;
  std::unique_ptr<AccessControl> access_;
  std::unique_ptr<SituationEngine> situations_;
};

/// Resolves a property name as typed by a user: a full `ns#local` term, or a
/// bare local name when exactly one defined property carries it.
TermName property_term(const Schema& schema, std::string_view text);

}  // namespace rocom
