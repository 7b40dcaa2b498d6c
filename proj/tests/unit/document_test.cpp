#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "generators.hpp"
#include "rocom/bundled.hpp"
#include "rocom/document.hpp"

using namespace rocom;
using gen::term;

namespace {

Error parse_error(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("document parsed");
  return Error(Errc::InvalidArgument, "");
}

Error apply_error(std::string_view text, Engine& e) {
  try {
    apply_document(parse_document(text), e);
  } catch (const Error& err) {
    return err;
  }
  FAIL("document applied");
  return Error(Errc::InvalidArgument, "");
}

std::string fixture(const std::string& name) {
  std::ifstream in(std::filesystem::path(ROCOM_FIXTURE_DIR) / name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("an empty document is valid and changes nothing") {
  auto e = Engine::with_builtins();
  auto before = export_document(e);
  auto doc = parse_document("");
  CHECK(doc.sections.empty());
  CHECK(apply_document(doc, e).total() == 0);
  CHECK(export_document(e) == before);
  CHECK(parse_document("# only a comment\n\n   \n").sections.empty());
}

TEST_CASE("field values: bare, quoted with escapes, and lists") {
  auto doc = parse_document(
      "[schema.classes]\n"
      "kitchen parent=location label=\"The \\\"big\\\" one\\\\\\n2\"\n"
      "[groups]\n"
      "g members=[a, b,c] privileges=[]\n");
  REQUIRE(doc.classes.size() == 1);
  CHECK(doc.classes[0].label == "The \"big\" one\\\n2");
  REQUIRE(doc.groups.size() == 1);
  CHECK(doc.groups[0].members == std::vector<std::string>{"a", "b", "c"});
  CHECK(doc.groups[0].privileges.empty());
}

TEST_CASE("syntax errors carry line and column") {
  struct Case {
    const char* text;
    Errc code;
    std::size_t line, column;
  };
  const Case cases[] = {
      {"[schema.classes]\nroom parent=location label=\"open\n", Errc::SyntaxError, 2, 28},
      {"[schema.classes]\nroom parent\n", Errc::SyntaxError, 2, 12},
      {"[schema.classes]\nroom parent=location parent=entity\n", Errc::SyntaxError, 2, 22},
      {"room parent=location\n", Errc::SyntaxError, 1, 1},
      {"# header\n[schema.widgets]\n", Errc::UnknownSection, 2, 1},
      {"[units]\n[units]\n", Errc::DuplicateDefinitionInDocument, 2, 1},
      {"[schema.classes]\na parent=entity\n\na parent=event\n", Errc::DuplicateDefinitionInDocument, 4, 1},
      {"[schema.classes]\nroom parent=location colour=red\n", Errc::SyntaxError, 2, 22},
      {"[facts]\n1 subject=a property=b value=1 object=c at=2013-09-18\n", Errc::SyntaxError, 2, 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    auto e = parse_error(c.text);
    CHECK(e.code() == c.code);
    REQUIRE(e.where());
    CHECK(e.where()->line == c.line);
    CHECK(e.where()->column == c.column);
  }
}

TEST_CASE("apply errors point at the originating record") {
  auto e = Engine::with_builtins();
  auto err = apply_error(
      "[individuals]\n"
      "r1 class=room createdat=2013-09-18T08:00:00\n",
      e);
  CHECK(err.code() == Errc::UnknownClass);
  REQUIRE(err.where());
  CHECK(err.where()->line == 2);
  CHECK(std::string(err.what()).rfind("2:1: UnknownClass", 0) == 0);
}

TEST_CASE("import is all-or-nothing") {
  auto e = Engine::with_builtins();
  auto before = export_document(e);
  auto err = apply_error(
      "[schema.classes]\n"
      "room parent=location\n"
      "[individuals]\n"
      "r1 class=room createdat=2013-09-18T08:00:00\n"
      "[facts]\n"
      "1 subject=r1 property=environment#temperature value=3.0 at=2013-09-18T08:00:00\n",
      e);
  CHECK(err.code() == Errc::DomainViolation);
  CHECK(err.where()->line == 6);
  CHECK(export_document(e) == before);
  CHECK_FALSE(e.schema().has_class(term("room")));
}

TEST_CASE("the fault corpus raises the labelled kind") {
  auto base = Engine::with_builtins();
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(ROCOM_FIXTURE_DIR) / "faults")) {
    auto text = fixture("faults/" + entry.path().filename().string());
    auto kind = text.substr(10, text.find('\n') - 10);
    CAPTURE(entry.path().filename().string());
    auto issues = check_document(base, text);
    REQUIRE_FALSE(issues.empty());
    CHECK(issues.front().kind == kind);
    ++seen;
  }
  CHECK(seen == 10);
}

TEST_CASE("canonical export is stable across a reload") {
  auto e = Engine::with_builtins();
  apply_document(parse_document(*bundled_document("fire-incident.rcm")), e);
  auto first = export_document(e);
  Engine fresh;
  apply_document(parse_document(first), fresh);
  CHECK(export_document(fresh) == first);
  CHECK(fresh.store().fact_count() == e.store().fact_count());
  CHECK(fresh.access().check("Responder1", term("evacuatepeople")).via_group == "responders");
  CHECK(fresh.store().provenance("envreading1") == e.store().provenance("envreading1"));
}

TEST_CASE("round trip preserves awkward text and every annotation") {
  gen::Rng rng(1234);
  for (int i = 0; i < 25; ++i) {
    auto e = gen::random_engine(rng);
    auto text = export_document(e);
    Engine fresh;
    apply_document(parse_document(text), fresh);
    CHECK(fresh.store().facts() == e.store().facts());
    CHECK(fresh.store().individuals() == e.store().individuals());
    CHECK(fresh.schema().fingerprint() == e.schema().fingerprint());
    CHECK(export_document(fresh) == text);
  }
}

TEST_CASE("derived facts keep their link through a reload") {
  auto e = Engine::with_builtins();
  apply_document(parse_document("[individuals]\n"
                                "a class=person createdat=2013-09-18T08:00:00\n"
                                "b class=person createdat=2013-09-18T08:00:00\n"),
                 e);
  e.store().assert_relation("a", term("person#father"), "b", {}, "SYSTEM", gen::at(400));
  Engine fresh;
  apply_document(parse_document(export_document(e)), fresh);
  auto facts = fresh.store().facts();
  REQUIRE(facts.size() == 2);
  CHECK(facts[1].derived_from == facts[0].id);
}

TEST_CASE("loading is additive: later documents build on earlier ones") {
  auto e = Engine::with_builtins();
  apply_document(parse_document(*bundled_document("murgency-extension.rcm")), e);
  CHECK(e.schema().is_subclass_of(term("murgencydispatcher"), term("person")));
  auto err = apply_error(*bundled_document("murgency-extension.rcm"), e);
  CHECK(err.code() == Errc::DuplicateTerm);
}

TEST_CASE("unit and scale are aliases on facts") {
  auto e = Engine::with_builtins();
  apply_document(parse_document(fixture("envreading1.rcm")), e);
  auto f = e.store().facts().front();
  CHECK(f.payload.unit == "Fahrenheit");
  CHECK(f.payload.qoc.probability == 0.9);
  CHECK(f.payload.source == "sensor1");
  CHECK(f.payload.timestamp.iso() == "2013-09-18T14:00:00");
  CHECK(parse_error("[facts]\n1 subject=a property=b value=1 unit=x scale=y at=2013-09-18\n").code() ==
        Errc::SyntaxError);
}

TEST_CASE("RDF/XML export declares entities and emits annotation axioms") {
  auto e = Engine::with_builtins();
  apply_document(parse_document(fixture("envreading1.rcm")), e);
  auto xml = export_document(e, {ExportFormat::RdfXml, "http://example.org/home/"});
  CHECK(xml.rfind("<?xml", 0) == 0);
  CHECK(xml.find("<!ENTITY person ") != std::string::npos);
  CHECK(xml.find("<!ENTITY rocomo-schema ") != std::string::npos);
  CHECK(xml.find("http://example.org/home/") != std::string::npos);
  CHECK(xml.find("<Class rdf:about=\"&person;person\">") != std::string::npos);
  CHECK(xml.find("<Axiom>") != std::string::npos);
  CHECK(xml.find("<annotatedProperty rdf:resource=\"&environment;temperature\"/>") != std::string::npos);
  CHECK(xml.find("&sensor;sensor1") != std::string::npos);
}

TEST_CASE("quote leaves plain tokens bare") {
  CHECK(quote("person#daughter") == "person#daughter");
  CHECK(quote("2013-09-18T14:00:00") == "2013-09-18T14:00:00");
  CHECK(quote("two words") == "\"two words\"");
  CHECK(quote("") == "\"\"");
  CHECK(quote("#lead") == "\"#lead\"");
  CHECK(quote("a\"b") == "\"a\\\"b\"");
}

TEST_CASE("check_document reports clean documents as empty") {
  auto base = Engine::with_builtins();
  CHECK(check_document(base, *bundled_document("fire-incident.rcm")).empty());
  auto issues = check_document(base, "[schema.classes]\nroom parent=nowhere\n");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == "UnknownParent");
  CHECK(issues[0].subject == "2:1");
}

TEST_CASE("bundled documents are all present") {
  auto names = bundled_document_names();
  CHECK(names.size() == 4);
  for (auto n : names) CHECK(bundled_document(n));
  CHECK_FALSE(bundled_document("missing.rcm"));
}
