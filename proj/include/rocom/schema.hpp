#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "rocom/annotated.hpp"
#include "rocom/term.hpp"
#include "rocom/value.hpp"

namespace rocom {

struct ClassDef {
  TermName name;
  std::optional<TermName> parent;  // empty for the pre-seeded roots
  std::string label;
  std::vector<std::string> equivalences;  // sorted external IRIs

  bool operator==(const ClassDef&) const = default;
};

struct ObjectPropertyDef {
  TermName name;
  std::vector<TermName> domain;  // union of classes, non-empty
  TermName range;
  bool functional = false;
  bool inverse_functional = false;
  std::vector<TermName> inverse_of;  // sorted; kept symmetric by the registry
  std::optional<TermName> sub_property_of;
  std::string label;
  std::vector<std::string> equivalences;

  bool operator==(const ObjectPropertyDef&) const = default;
};

enum class Volatility { Static, Dynamic };

std::string_view to_string(Volatility v);
Volatility parse_volatility(std::string_view name);

struct DataPropertyDef {
  TermName name;
  TermName domain;
  ValueType value_type = ValueType::Text;
  Volatility volatility = Volatility::Dynamic;
  std::optional<TermName> sub_property_of;
  std::string label;
  std::vector<std::string> equivalences;

  bool operator==(const DataPropertyDef&) const = default;
};

enum class TermKind { Class, Property };

std::string_view to_string(TermKind k);
TermKind parse_term_kind(std::string_view name);

struct ExternalMapping {
  TermKind kind;
  TermName term;

  bool operator==(const ExternalMapping&) const = default;
};

/// Class and property registry for the core and application ontologies.
///
/// The six roots (entity, event, activity, location, time, goal) exist from
/// construction. The class hierarchy is a single-parent forest; a class is a
/// subclass of itself. Every mutation is atomic under an exclusive lock and
/// reads may proceed concurrently.
class Schema {
 public:
  static constexpr const char* kRoots[] = {"entity", "event", "activity", "location", "time", "goal"};

  Schema();
  Schema(const Schema& other);
  Schema& operator=(const Schema& other);

  ClassDef define_class(const TermName& name, const TermName& parent, std::string label = {});

  /// Registers the property and links each listed inverse back to it.
  ObjectPropertyDef define_object_property(ObjectPropertyDef def);
  DataPropertyDef define_data_property(DataPropertyDef def);

  /// Symmetric, idempotent inverse link between two object properties.
  void link_inverse(const TermName& p, const TermName& q);

  bool is_subclass_of(const TermName& a, const TermName& b) const;

  void declare_equivalence(const TermName& local, TermKind kind, const std::string& external_iri);
  std::optional<ExternalMapping> resolve_external(const std::string& external_iri) const;

  std::vector<Issue> validate() const;

  bool has_class(const TermName& name) const;
  bool is_root(const TermName& name) const;
  std::optional<ClassDef> find_class(const TermName& name) const;
  std::optional<ObjectPropertyDef> find_object_property(const TermName& name) const;
  std::optional<DataPropertyDef> find_data_property(const TermName& name) const;

  /// True when the object property declares more than one inverse; such
  /// properties are never materialized by the store.
  bool inverse_ambiguous(const TermName& property) const;

  /// Deterministically ordered snapshots (by term).
  std::vector<ClassDef> classes() const;
  std::vector<ObjectPropertyDef> object_properties() const;
  std::vector<DataPropertyDef> data_properties() const;
  std::vector<DataPropertyDef> data_properties(Volatility v) const;
  std::map<std::string, ExternalMapping> equivalences() const;

  /// Stable 64-bit digest of every definition; equal schemas hash equal.
  std::uint64_t fingerprint() const;

 private:
  bool subclass_locked(const TermName& a, const TermName& b) const;
  bool has_property_locked(const TermName& name) const;
  void require_class_locked(const TermName& name) const;

  mutable std::shared_mutex mutex_;
  std::map<TermName, ClassDef> classes_;
  std::map<TermName, ObjectPropertyDef> object_properties_;
  std::map<TermName, DataPropertyDef> data_properties_;
  std::map<std::string, ExternalMapping> external_;
};

}  // namespace rocom
