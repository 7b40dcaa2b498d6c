#include "rocom/engine.hpp"

#include "rocom/bundled.hpp"
#include "rocom/document.hpp"
#include "rocom/error.hpp"

namespace rocom {

Engine::Engine()
    : schema_(std::make_unique<Schema>()),
      units_(std::make_unique<UnitRegistry>()),
      store_(std::make_unique<ContextStore>(*schema_, *units_)),
      access_(std::make_unique<AccessControl>(*store_)),
      situations_(std::make_unique<SituationEngine>(*store_, *access_)) {}

Engine::Engine(const Engine& other)
    : schema_(std::make_unique<Schema>(*other.schema_)),
      units_(std::make_unique<UnitRegistry>(*other.units_)),
      store_(std::make_unique<ContextStore>(*other.store_, *schema_, *units_)),
      access_(std::make_unique<AccessControl>(*other.access_, *store_)),
      situations_(std::make_unique<SituationEngine>(*other.situations_, *store_, *access_)) {}

Engine& Engine::operator=(const Engine& other) {
  if (this != &other) {
    Engine copy(other);
    *this = std::move(copy);
  }
  return *this;
}

Engine::~Engine() = default;

Engine Engine::with_builtins() {
  Engine e;
  for (const char* name : {"core-ontology.rcm", "units.rcm"}) {
    auto text = bundled_document(name);
    apply_document(parse_document(std::string(*text)), e);
  }
  return e;
}

std::vector<Fact> Engine::resolve_as(const std::string& actor, const TermName& activity_class,
                                     const std::string& subject, const TermName& property,
                                     const ResolutionPolicy& policy) const {
  if (!access_->check(actor, activity_class)) {
    fail(Errc::AccessDenied, actor + " may not perform " + activity_class.str());
  }
  return store_->resolve(subject, property, policy);
}

TermName property_term(const Schema& schema, std::string_view text) {
  if (text.find('#') != std::string_view::npos) return TermName::parse(text);
  if (TermName::valid(text)) {
    auto term = TermName::parse(text);
    if (schema.find_object_property(term) || schema.find_data_property(term)) return term;
  }
  std::vector<TermName> matches;
  for (const auto& p : schema.object_properties()) {
    if (p.name.local() == text) matches.push_back(p.name);
  }
  for (const auto& p : schema.data_properties()) {
    if (p.name.local() == text) matches.push_back(p.name);
  }
  return matches.size() == 1 ? matches.front() : TermName::parse(text);
}

}  // namespace rocom
