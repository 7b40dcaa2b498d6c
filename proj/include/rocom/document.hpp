#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rocom/engine.hpp"
#include "rocom/error.hpp"

namespace rocom {

/// Raw field value: a scalar (bare or quoted) or a bracketed list.
struct FieldValue {
  bool is_list = false;
  bool quoted = false;
  std::string scalar;
  std::vector<std::string> items;
  TextPos pos;
};

/// `head key=value ...` on a single line.
struct Record {
  std::string head;
  TextPos pos;
  std::map<std::string, FieldValue> fields;

  const FieldValue* find(const std::string& key) const;
};

struct ClassRecord {
  TermName name;
  TermName parent;
  std::string label;
  TextPos pos;
};

struct ObjectPropertyRecord {
  ObjectPropertyDef def;  // inverse_of as written in the document
  TextPos pos;
};

struct DataPropertyRecord {
  DataPropertyDef def;
  TextPos pos;
};

struct EquivalenceRecord {
  std::string iri;
  TermKind kind = TermKind::Class;
  TermName term;
  TextPos pos;
};

struct UnitRecord {
  UnitDef def;
  TextPos pos;
};

struct IndividualRecord {
  std::string id;
  TermName class_term;
  std::optional<std::string> created_by;
  DateTime created_at;
  std::optional<std::string> modified_by;
  std::optional<DateTime> modified_at;
  std::optional<std::string> change;
  TextPos pos;
};

struct FactRecord {
  std::uint64_t local_id = 0;
  std::string subject;
  TermName property;
  std::optional<std::string> value;   // lexical literal, typed on apply
  std::optional<std::string> object;  // relation target
  std::optional<DateTime> timestamp;
  std::optional<std::string> unit;
  QoC qoc;
  std::optional<std::string> source;
  std::string by = std::string(kSystemActor);
  DateTime at;
  std::optional<std::uint64_t> derived_from;
  TextPos pos;
};

struct GroupRecord {
  std::string id;
  std::vector<std::string> members;
  std::vector<TermName> privileges;
  TextPos pos;
};

/// A scenario step keeps its raw fields; the runner interprets them.
using ScenarioStep = Record;

/// Parsed `.rcm` document. Sections are optional and appear at most once.
struct RcmDocument {
  std::vector<ClassRecord> classes;
  std::vector<ObjectPropertyRecord> object_properties;
  std::vector<DataPropertyRecord> data_properties;
  std::vector<EquivalenceRecord> equivalences;
  std::vector<UnitRecord> units;
  std::vector<IndividualRecord> individuals;
  std::vector<FactRecord> facts;
  std::vector<GroupRecord> groups;
  std::vector<ScenarioStep> scenario;
  std::vector<std::string> sections;  // names in the order they appeared
};

/// Section names accepted by the parser, in application order.
const std::vector<std::string>& section_names();

/// Throws Error{SyntaxError | UnknownSection | DuplicateDefinitionInDocument}
/// carrying the line/column of the first problem.
RcmDocument parse_document(std::string_view text);

struct ApplyReport {
  std::map<std::string, std::size_t> counts;  // section name -> records applied

  std::size_t total() const;
};

/// All-or-nothing: on any error the engine is left untouched and the error
/// carries the originating record's position.
ApplyReport apply_document(const RcmDocument& doc, Engine& engine);

enum class ExportFormat { Canonical, RdfXml };

struct ExportOptions {
  ExportFormat format = ExportFormat::Canonical;
  std::string base_iri = "http://example.org/rocom/";
};

/// Canonical output is byte-stable: classes and properties by name,
/// individuals by id, facts by id, groups in creation order.
std::string export_document(const Engine& engine, const ExportOptions& options = {});

/// Renders one fact as an RDF/XML-style annotation Axiom block.
std::string export_fact_axiom(const Engine& engine, const Fact& fact);

/// Parses a document and applies it to a copy of `base`; collects every
/// finding (parse/apply error or schema issue). Empty means clean.
std::vector<Issue> check_document(const Engine& base, std::string_view text);

/// Quotes and escapes when the token would not survive as a bare word.
std::string quote(std::string_view s);

}  // namespace rocom
