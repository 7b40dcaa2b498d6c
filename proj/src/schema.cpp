#include "rocom/schema.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "rocom/error.hpp"

namespace rocom {

std::string_view to_string(Volatility v) { return v == Volatility::Static ? "static" : "dynamic"; }

Volatility parse_volatility(std::string_view name) {
  if (name == "static") return Volatility::Static;
  if (name == "dynamic") return Volatility::Dynamic;
  fail(Errc::InvalidArgument, "unknown volatility '" + std::string(name) + "'");
}

std::string_view to_string(TermKind k) { return k == TermKind::Class ? "class" : "property"; }

TermKind parse_term_kind(std::string_view name) {
  if (name == "class") return TermKind::Class;
  if (name == "property") return TermKind::Property;
  fail(Errc::InvalidArgument, "unknown term kind '" + std::string(name) + "'");
}

namespace {

template <typename T>
void insert_sorted(std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

Schema::Schema() {
  for (const char* root : kRoots) {
    auto name = TermName::parse(root);
    classes_.emplace(name, ClassDef{name, std::nullopt, root, {}});
  }
}

Schema::Schema(const Schema& other) {
  std::shared_lock lock(other.mutex_);
  classes_ = other.classes_;
  object_properties_ = other.object_properties_;
  data_properties_ = other.data_properties_;
  external_ = other.external_;
}

Schema& Schema::operator=(const Schema& other) {
  if (this == &other) return *this;
  Schema copy(other);
  std::unique_lock lock(mutex_);
  classes_ = std::move(copy.classes_);
  object_properties_ = std::move(copy.object_properties_);
  data_properties_ = std::move(copy.data_properties_);
  external_ = std::move(copy.external_);
  return *this;
}

void Schema::require_class_locked(const TermName& name) const {
  if (!classes_.contains(name)) fail(Errc::UnknownClass, name.str());
}

bool Schema::has_property_locked(const TermName& name) const {
  return object_properties_.contains(name) || data_properties_.contains(name);
}

ClassDef Schema::define_class(const TermName& name, const TermName& parent, std::string label) {
  std::unique_lock lock(mutex_);
  if (name == parent) fail(Errc::WouldCreateCycle, name.str() + " cannot be its own parent");
  if (classes_.contains(name)) fail(Errc::DuplicateTerm, "class " + name.str());
  if (!classes_.contains(parent)) fail(Errc::UnknownParent, parent.str());
  // A new leaf under an existing node cannot close a cycle in a forest.
  ClassDef def{name, parent, label.empty() ? name.local() : std::move(label), {}};
  classes_.emplace(name, def);
  return def;
}

ObjectPropertyDef Schema::define_object_property(ObjectPropertyDef def) {
  std::unique_lock lock(mutex_);
  if (has_property_locked(def.name)) fail(Errc::DuplicateTerm, "property " + def.name.str());
  if (def.domain.empty()) fail(Errc::UnknownClass, "object property " + def.name.str() + " has no domain");
  for (const auto& d : def.domain) require_class_locked(d);
  require_class_locked(def.range);
  if (def.sub_property_of) {
    if (*def.sub_property_of == def.name) fail(Errc::WouldCreateCycle, def.name.str() + " sub-property of itself");
    if (!object_properties_.contains(*def.sub_property_of)) {
      fail(Errc::UnknownProperty, def.sub_property_of->str());
    }
  }
  std::sort(def.domain.begin(), def.domain.end());
  def.domain.erase(std::unique(def.domain.begin(), def.domain.end()), def.domain.end());
  std::vector<TermName> inverses;
  for (const auto& inv : def.inverse_of) {
    if (inv == def.name) {
      insert_sorted(inverses, inv);  // self-inverse (symmetric) property
      continue;
    }
    if (!object_properties_.contains(inv)) fail(Errc::UnknownProperty, inv.str());
    insert_sorted(inverses, inv);
  }
  def.inverse_of = std::move(inverses);
  std::sort(def.equivalences.begin(), def.equivalences.end());
  if (def.label.empty()) def.label = def.name.local();
  for (const auto& inv : def.inverse_of) {
    if (inv != def.name) insert_sorted(object_properties_.at(inv).inverse_of, def.name);
  }
  object_properties_.emplace(def.name, def);
  return def;
}

DataPropertyDef Schema::define_data_property(DataPropertyDef def) {
  std::unique_lock lock(mutex_);
  if (has_property_locked(def.name)) fail(Errc::DuplicateTerm, "property " + def.name.str());
  require_class_locked(def.domain);
  if (def.sub_property_of) {
    if (*def.sub_property_of == def.name) fail(Errc::WouldCreateCycle, def.name.str() + " sub-property of itself");
    if (!data_properties_.contains(*def.sub_property_of)) fail(Errc::UnknownProperty, def.sub_property_of->str());
  }
  std::sort(def.equivalences.begin(), def.equivalences.end());
  if (def.label.empty()) def.label = def.name.local();
  data_properties_.emplace(def.name, def);
  return def;
}

void Schema::link_inverse(const TermName& p, const TermName& q) {
  std::unique_lock lock(mutex_);
  auto pi = object_properties_.find(p);
  auto qi = object_properties_.find(q);
  if (pi == object_properties_.end()) fail(Errc::UnknownProperty, p.str());
  if (qi == object_properties_.end()) fail(Errc::UnknownProperty, q.str());
  insert_sorted(pi->second.inverse_of, q);
  insert_sorted(qi->second.inverse_of, p);
}

bool Schema::subclass_locked(const TermName& a, const TermName& b) const {
  const TermName* cur = &a;
  while (true) {
    if (*cur == b) return true;
    const auto& def = classes_.at(*cur);
    if (!def.parent) return false;
    cur = &*def.parent;
  }
}

bool Schema::is_subclass_of(const TermName& a, const TermName& b) const {
  std::shared_lock lock(mutex_);
  require_class_locked(a);
  require_class_locked(b);
  return subclass_locked(a, b);
}

void Schema::declare_equivalence(const TermName& local, TermKind kind, const std::string& external_iri) {
  std::unique_lock lock(mutex_);
  if (external_iri.empty()) fail(Errc::InvalidArgument, "empty external IRI");
  std::vector<std::string>* target = nullptr;
  if (kind == TermKind::Class) {
    auto it = classes_.find(local);
    if (it == classes_.end()) fail(Errc::UnknownTerm, "class " + local.str());
    target = &it->second.equivalences;
  } else if (auto it = object_properties_.find(local); it != object_properties_.end()) {
    target = &it->second.equivalences;
  } else if (auto dt = data_properties_.find(local); dt != data_properties_.end()) {
    target = &dt->second.equivalences;
  } else {
    fail(Errc::UnknownTerm, "property " + local.str());
  }
  ExternalMapping mapping{kind, local};
  if (auto it = external_.find(external_iri); it != external_.end()) {
    if (it->second == mapping) return;
    fail(Errc::ConflictingMapping, external_iri + " already maps to " + std::string(to_string(it->second.kind)) +
                                       " " + it->second.term.str());
  }
  external_.emplace(external_iri, mapping);
  insert_sorted(*target, external_iri);
}

std::optional<ExternalMapping> Schema::resolve_external(const std::string& external_iri) const {
  std::shared_lock lock(mutex_);
  auto it = external_.find(external_iri);
  if (it == external_.end()) return std::nullopt;
  return it->second;
}

std::vector<Issue> Schema::validate() const {
  std::shared_lock lock(mutex_);
  std::vector<Issue> issues;

  std::map<std::string, std::vector<TermName>> by_label;
  for (const auto& [name, def] : classes_) by_label[def.label].push_back(name);
  for (const auto& [label, names] : by_label) {
    if (names.size() < 2) continue;
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n.str();
    issues.push_back({Severity::Warning, "AmbiguousLabel", label, "label '" + label + "' is shared by " + list});
  }

  for (const auto& [name, def] : classes_) {
    // Walk to a root; a broken chain means the class is unreachable.
    const ClassDef* cur = &def;
    std::size_t steps = 0;
    while (cur->parent && steps <= classes_.size()) {
      auto it = classes_.find(*cur->parent);
      if (it == classes_.end()) break;
      cur = &it->second;
      ++steps;
    }
    if (cur->parent || steps > classes_.size()) {
      issues.push_back({Severity::Error, "UnreachableClass", name.str(), "parent chain does not reach a root"});
    }
  }

  for (const auto& [name, def] : object_properties_) {
    for (const auto& inv : def.inverse_of) {
      if (inv < name) continue;  // report each pair once
      const auto& other = object_properties_.at(inv);
      bool ok = def.domain == std::vector<TermName>{other.range} && other.domain == std::vector<TermName>{def.range};
      if (!ok) {
        issues.push_back({Severity::Error, "DomainRangeMismatch", name.str() + "/" + inv.str(),
                          "inverse properties must swap domain and range"});
      }
    }
    if (def.sub_property_of) {
      const auto& super = object_properties_.at(*def.sub_property_of);
      for (const auto& d : def.domain) {
        bool covered = std::any_of(super.domain.begin(), super.domain.end(),
                                   [&](const TermName& s) { return subclass_locked(d, s); });
        if (!covered) {
          issues.push_back({Severity::Error, "SubPropertyDomainIncompatible", name.str(),
                            "domain " + d.str() + " is not within the domain of " + super.name.str()});
        }
      }
    }
  }
  for (const auto& [name, def] : data_properties_) {
    if (!def.sub_property_of) continue;
    const auto& super = data_properties_.at(*def.sub_property_of);
    if (!subclass_locked(def.domain, super.domain)) {
      issues.push_back({Severity::Error, "SubPropertyDomainIncompatible", name.str(),
                        "domain " + def.domain.str() + " is not within the domain of " + super.name.str()});
    }
    if (def.value_type != super.value_type) {
      issues.push_back({Severity::Error, "SubPropertyTypeMismatch", name.str(),
                        "value type differs from " + super.name.str()});
    }
  }
  return issues;
}

bool Schema::has_class(const TermName& name) const {
  std::shared_lock lock(mutex_);
  return classes_.contains(name);
}

bool Schema::is_root(const TermName& name) const {
  std::shared_lock lock(mutex_);
  auto it = classes_.find(name);
  return it != classes_.end() && !it->second.parent;
}

std::optional<ClassDef> Schema::find_class(const TermName& name) const {
  std::shared_lock lock(mutex_);
  auto it = classes_.find(name);
  if (it == classes_.end()) return std::nullopt;
  return it->second;
}

std::optional<ObjectPropertyDef> Schema::find_object_property(const TermName& name) const {
  std::shared_lock lock(mutex_);
  auto it = object_properties_.find(name);
  if (it == object_properties_.end()) return std::nullopt;
  return it->second;
}

std::optional<DataPropertyDef> Schema::find_data_property(const TermName& name) const {
  std::shared_lock lock(mutex_);
  auto it = data_properties_.find(name);
  if (it == data_properties_.end()) return std::nullopt;
  return it->second;
}

bool Schema::inverse_ambiguous(const TermName& property) const {
  std::shared_lock lock(mutex_);
  auto it = object_properties_.find(property);
  return it != object_properties_.end() && it->second.inverse_of.size() > 1;
}

std::vector<ClassDef> Schema::classes() const {
  std::shared_lock lock(mutex_);
  std::vector<ClassDef> out;
  out.reserve(classes_.size());
  for (const auto& [_, def] : classes_) out.push_back(def);
  return out;
}

std::vector<ObjectPropertyDef> Schema::object_properties() const {
  std::shared_lock lock(mutex_);
  std::vector<ObjectPropertyDef> out;
  for (const auto& [_, def] : object_properties_) out.push_back(def);
  return out;
}

std::vector<DataPropertyDef> Schema::data_properties() const {
  std::shared_lock lock(mutex_);
  std::vector<DataPropertyDef> out;
  for (const auto& [_, def] : data_properties_) out.push_back(def);
  return out;
}

std::vector<DataPropertyDef> Schema::data_properties(Volatility v) const {
  auto all = data_properties();
  std::erase_if(all, [v](const DataPropertyDef& d) { return d.volatility != v; });
  return all;
}

std::map<std::string, ExternalMapping> Schema::equivalences() const {
  std::shared_lock lock(mutex_);
  return external_;
}

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void add(std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;  // field separator
    h *= 1099511628211ull;
  }
  void add(const TermName& t) { add(t.str()); }
  void add(const std::optional<TermName>& t) { add(t ? t->str() : std::string("-")); }
};

}  // namespace

std::uint64_t Schema::fingerprint() const {
  std::shared_lock lock(mutex_);
  Fnv f;
  for (const auto& [name, def] : classes_) {
    f.add("C");
    f.add(name);
    f.add(def.parent);
    f.add(def.label);
    for (const auto& e : def.equivalences) f.add(e);
  }
  for (const auto& [name, def] : object_properties_) {
    f.add("O");
    f.add(name);
    for (const auto& d : def.domain) f.add(d);
    f.add(def.range);
    f.add(def.functional ? "f" : "-");
    f.add(def.inverse_functional ? "i" : "-");
    for (const auto& inv : def.inverse_of) f.add(inv);
    f.add(def.sub_property_of);
    f.add(def.label);
    for (const auto& e : def.equivalences) f.add(e);
  }
  for (const auto& [name, def] : data_properties_) {
    f.add("D");
    f.add(name);
    f.add(def.domain);
    f.add(to_string(def.value_type));
    f.add(to_string(def.volatility));
    f.add(def.sub_property_of);
    f.add(def.label);
    for (const auto& e : def.equivalences) f.add(e);
  }
  for (const auto& [iri, m] : external_) {
    f.add("E");
    f.add(iri);
    f.add(to_string(m.kind));
    f.add(m.term);
  }
  return f.h;
}

}  // namespace rocom
