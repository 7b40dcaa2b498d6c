#include "rocom/access.hpp"

#include <algorithm>
#include <mutex>

#include "rocom/error.hpp"

namespace rocom {

namespace {

const TermName& entity_class() {
  static const TermName t = TermName::parse("entity");
  return t;
}

const TermName& activity_class_root() {
  static const TermName t = TermName::parse("activity");
  return t;
}

const TermName& group_class() {
  static const TermName t = TermName::parse("accessgroup");
  return t;
}

template <typename T>
void insert_sorted(std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

AccessControl::AccessControl(ContextStore& store) : store_(&store) {}

AccessControl::AccessControl(const AccessControl& other, ContextStore& store) : store_(&store) {
  std::shared_lock lock(other.mutex_);
  groups_ = other.groups_;
}

AccessGroup* AccessControl::group_locked(const std::string& id) {
  auto it = std::find_if(groups_.begin(), groups_.end(), [&](const AccessGroup& g) { return g.id == id; });
  return it == groups_.end() ? nullptr : &*it;
}

AccessGroup AccessControl::create_group(const std::string& id, const std::string& actor, DateTime at) {
  std::unique_lock lock(mutex_);
  store_->create_individual(group_class(), id, actor, at);
  groups_.push_back(AccessGroup{id, {}, {}});
  return groups_.back();
}

AccessGroup AccessControl::adopt_group(const std::string& id) {
  std::unique_lock lock(mutex_);
  auto ind = store_->find_individual(id);
  if (!ind) fail(Errc::UnknownIndividual, id);
  if (!store_->schema().is_subclass_of(ind->class_term, group_class())) {
    fail(Errc::UnknownGroup, id + " is not an accessgroup individual");
  }
  if (group_locked(id)) fail(Errc::DuplicateIndividual, "group " + id);
  groups_.push_back(AccessGroup{id, {}, {}});
  return groups_.back();
}

void AccessControl::add_member(const std::string& group, const std::string& entity) {
  std::unique_lock lock(mutex_);
  auto* g = group_locked(group);
  if (!g) fail(Errc::UnknownIndividual, "group " + group);
  auto ind = store_->find_individual(entity);
  if (!ind) fail(Errc::UnknownIndividual, entity);
  if (!store_->schema().is_subclass_of(ind->class_term, entity_class())) {
    fail(Errc::NotAnEntity, entity + " is a " + ind->class_term.str());
  }
  insert_sorted(g->members, entity);
}

void AccessControl::grant_privilege(const std::string& group, const TermName& activity_class) {
  std::unique_lock lock(mutex_);
  auto* g = group_locked(group);
  if (!g) fail(Errc::UnknownGroup, group);
  const auto& schema = store_->schema();
  if (!schema.has_class(activity_class)) fail(Errc::UnknownClass, activity_class.str());
  if (!schema.is_subclass_of(activity_class, activity_class_root())) {
    fail(Errc::NotAnActivityClass, activity_class.str());
  }
  insert_sorted(g->privileges, activity_class);
}

AccessDecision AccessControl::check(const std::string& entity, const TermName& activity_class) const {
  std::shared_lock lock(mutex_);
  if (!store_->contains(entity)) fail(Errc::UnknownIndividual, entity);
  const auto& schema = store_->schema();
  if (!schema.has_class(activity_class)) fail(Errc::UnknownClass, activity_class.str());
  if (!schema.is_subclass_of(activity_class, activity_class_root())) {
    fail(Errc::NotAnActivityClass, activity_class.str());
  }
  for (const auto& g : groups_) {
    if (!std::binary_search(g.members.begin(), g.members.end(), entity)) continue;
    for (const auto& p : g.privileges) {
      if (schema.is_subclass_of(activity_class, p)) return {true, g.id};
    }
  }
  return {};
}

std::optional<AccessGroup> AccessControl::find_group(const std::string& id) const {
  std::shared_lock lock(mutex_);
  for (const auto& g : groups_) {
    if (g.id == id) return g;
  }
  return std::nullopt;
}

std::vector<AccessGroup> AccessControl::groups() const {
  std::shared_lock lock(mutex_);
  return groups_;
}

}  // namespace rocom
