#include <set>

#include "rocom/document.hpp"

namespace rocom {

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view xsd_type(const Value& v) {
  switch (v.index()) {
    case 0: return "string";
    case 1: return "integer";
    case 2: return "float";
    case 3: return "boolean";
    default: return "dateTime";
  }
}

std::string_view xsd_type(ValueType t) {
  switch (t) {
    case ValueType::Text: return "string";
    case ValueType::Integer: return "integer";
    case ValueType::Real: return "float";
    case ValueType::Boolean: return "boolean";
    case ValueType::DateTime: return "dateTime";
  }
  return "string";
}

std::string term_ref(const TermName& t) { return "&" + t.ns() + ";" + t.local(); }

std::string individual_ref(const ContextStore& store, const std::string& id) {
  auto ind = store.find_individual(id);
  std::string ns = ind ? ind->class_term.ns() : "rocomo-schema";
  return "&" + ns + ";" + xml_escape(id);
}

std::string literal(std::string_view element, std::string_view type, std::string_view text) {
  return "    <" + std::string(element) + " rdf:datatype=\"&xsd;" + std::string(type) + "\">" + xml_escape(text) +
         "</" + std::string(element) + ">\n";
}

std::string resource(std::string_view element, const std::string& ref) {
  return "    <" + std::string(element) + " rdf:resource=\"" + ref + "\"/>\n";
}

std::string label(const std::string& text) {
  return "    <rdfs:label xml:lang=\"en\">" + xml_escape(text) + "</rdfs:label>\n";
}

std::string axiom(const ContextStore& store, const Fact& f) {
  const auto& p = f.payload;
  std::string out = "<Axiom>\n";
  if (auto ref = std::get_if<IndividualRef>(&p.value)) {
    out += resource("annotatedTarget", individual_ref(store, ref->id));
  } else {
    out += literal("annotatedTarget", xsd_type(p.value), format_value(p.value));
  }
  out += literal("rocomo-schema:timeStamp", "dateTime", p.timestamp.iso());
  if (p.unit) out += literal("rocomo-schema:unit", "string", *p.unit);
  const auto& q = p.qoc;
  if (q.probability) out += literal("rocomo-schema:probability", "float", format_real(*q.probability));
  if (q.accuracy) out += literal("rocomo-schema:accuracy", "float", format_real(*q.accuracy));
  if (q.mean_error) out += literal("rocomo-schema:meanError", "float", format_real(*q.mean_error));
  if (q.coverage) out += literal("rocomo-schema:coverage", "string", *q.coverage);
  if (q.resolution) out += literal("rocomo-schema:resolution", "float", format_real(*q.resolution));
  if (q.recurrence) out += literal("rocomo-schema:recurrence", "string", *q.recurrence);
  if (p.source) out += resource("rocomo-schema:source", individual_ref(store, *p.source));
  out += resource("annotatedProperty", term_ref(f.property));
  out += resource("annotatedSource", individual_ref(store, f.subject));
  return out + "</Axiom>\n";
}

}  // namespace

std::string export_fact_axiom(const Engine& engine, const Fact& fact) { return axiom(engine.store(), fact); }

std::string export_rdfxml(const Engine& engine, const std::string& base_iri) {
  const auto& schema = engine.schema();
  const auto& store = engine.store();
  auto classes = schema.classes();
  auto objects = schema.object_properties();
  auto datas = schema.data_properties();
  auto individuals = store.individuals();
  auto facts = store.facts();

  std::set<std::string> namespaces = {"entity", "rocomo-schema"};
  for (const auto& c : classes) namespaces.insert(c.name.ns());
  for (const auto& p : objects) namespaces.insert(p.name.ns());
  for (const auto& p : datas) namespaces.insert(p.name.ns());

  std::string out = "<?xml version=\"1.0\"?>\n<!DOCTYPE rdf:RDF [\n";
  out += "    <!ENTITY owl \"http://www.w3.org/2002/07/owl#\" >\n";
  out += "    <!ENTITY xsd \"http://www.w3.org/2001/XMLSchema#\" >\n";
  out += "    <!ENTITY rdfs \"http://www.w3.org/2000/01/rdf-schema#\" >\n";
  out += "    <!ENTITY rdf \"http://www.w3.org/1999/02/22-rdf-syntax-ns#\" >\n";
  for (const auto& ns : namespaces) {
    out += "    <!ENTITY " + ns + " \"" + xml_escape(base_iri + ns) + "#\" >\n";
  }
  out += "]>\n\n<rdf:RDF xmlns=\"http://www.w3.org/2002/07/owl#\"\n";
  out += "     xml:base=\"" + xml_escape(base_iri) + "\"\n";
  out += "     xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n";
  out += "     xmlns:rdfs=\"http://www.w3.org/2000/01/rdf-schema#\"\n";
  out += "     xmlns:owl=\"http://www.w3.org/2002/07/owl#\"\n";
  out += "     xmlns:xsd=\"http://www.w3.org/2001/XMLSchema#\"";
  for (const auto& ns : namespaces) out += "\n     xmlns:" + ns + "=\"" + xml_escape(base_iri + ns) + "#\"";
  out += ">\n\n";

  std::map<TermName, std::vector<std::string>> equivalents;
  for (const auto& [iri, m] : schema.equivalences()) equivalents[m.term].push_back(iri);

  for (const auto& c : classes) {
    out += "<Class rdf:about=\"" + term_ref(c.name) + "\">\n";
    if (!c.label.empty()) out += label(c.label);
    if (c.parent) out += resource("rdfs:subClassOf", term_ref(*c.parent));
    for (const auto& iri : equivalents[c.name]) out += resource("equivalentClass", xml_escape(iri));
    out += "</Class>\n\n";
  }
  for (const auto& p : objects) {
    out += "<ObjectProperty rdf:about=\"" + term_ref(p.name) + "\">\n";
    if (p.functional) out += resource("rdf:type", "&owl;FunctionalProperty");
    if (p.inverse_functional) out += resource("rdf:type", "&owl;InverseFunctionalProperty");
    if (!p.label.empty()) out += label(p.label);
    for (const auto& d : p.domain) out += resource("rdfs:domain", term_ref(d));
    out += resource("rdfs:range", term_ref(p.range));
    if (p.sub_property_of) out += resource("rdfs:subPropertyOf", term_ref(*p.sub_property_of));
    for (const auto& inv : p.inverse_of) out += resource("inverseOf", term_ref(inv));
    for (const auto& iri : equivalents[p.name]) out += resource("equivalentProperty", xml_escape(iri));
    out += "</ObjectProperty>\n\n";
  }
  for (const auto& p : datas) {
    out += "<DatatypeProperty rdf:about=\"" + term_ref(p.name) + "\">\n";
    if (!p.label.empty()) out += label(p.label);
    out += resource("rdfs:domain", term_ref(p.domain));
    out += resource("rdfs:range", "&xsd;" + std::string(xsd_type(p.value_type)));
    if (p.sub_property_of) out += resource("rdfs:subPropertyOf", term_ref(*p.sub_property_of));
    for (const auto& iri : equivalents[p.name]) out += resource("equivalentProperty", xml_escape(iri));
    out += "</DatatypeProperty>\n\n";
  }

  for (const auto& ind : individuals) {
    out += "<NamedIndividual rdf:about=\"" + individual_ref(store, ind.id) + "\">\n";
    out += resource("rdf:type", term_ref(ind.class_term));
    out += label(ind.id);
    std::set<TermName> seen;
    for (const auto& f : facts) {
      if (f.subject != ind.id || !seen.insert(f.property).second) continue;
      auto current = store.get_current(ind.id, f.property);
      if (!current) continue;
      std::string element = f.property.ns() + ":" + f.property.local();
      if (auto ref = std::get_if<IndividualRef>(&current->payload.value)) {
        out += resource(element, individual_ref(store, ref->id));
      } else {
        out += literal(element, xsd_type(current->payload.value), format_value(current->payload.value));
      }
    }
    const auto& pv = ind.provenance;
    out += resource("entity:createdBy", individual_ref(store, pv.created_by));
    out += literal("entity:createdAt", "dateTime", pv.created_at.iso());
    out += resource("entity:lastModifiedBy", individual_ref(store, pv.last_modified_by));
    out += literal("entity:lastModifiedAt", "dateTime", pv.last_modified_at.iso());
    out += literal("entity:lastChange", "string", pv.last_change);
    out += "</NamedIndividual>\n\n";
  }

  for (const auto& f : facts) out += axiom(store, f) + "\n";
  return out + "</rdf:RDF>\n";
}

}  // namespace rocom
