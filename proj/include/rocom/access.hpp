#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "rocom/store.hpp"

namespace rocom {

struct AccessGroup {
  std::string id;
  std::vector<std::string> members;   // sorted
  std::vector<TermName> privileges;   // sorted activity classes

  bool operator==(const AccessGroup&) const = default;
};

struct AccessDecision {
  bool allowed = false;
  std::string via_group;  // first qualifying group in creation order

  explicit operator bool() const noexcept { return allowed; }
};

/// Group-based RBAC. Privileges are activity classes and cover their
/// subclasses; entities outside every group are denied.
class AccessControl {
 public:
  explicit AccessControl(ContextStore& store);
  AccessControl(const AccessControl& other, ContextStore& store);
  AccessControl(const AccessControl&) = delete;
  AccessControl& operator=(const AccessControl&) = delete;

  /// Creates the `accessgroup` individual and registers it as a group.
  AccessGroup create_group(const std::string& id, const std::string& actor = std::string(kSystemActor),
                           DateTime at = {});
  /// Registers an existing `accessgroup` individual (document loading).
  AccessGroup adopt_group(const std::string& id);

  void add_member(const std::string& group, const std::string& entity);
  void grant_privilege(const std::string& group, const TermName& activity_class);

  AccessDecision check(const std::string& entity, const TermName& activity_class) const;

  std::optional<AccessGroup> find_group(const std::string& id) const;
  /// Creation order.
  std::vector<AccessGroup> groups() const;

 private:
  AccessGroup* group_locked(const std::string& id);

  ContextStore* store_;
  mutable std::shared_mutex mutex_;
  std::vector<AccessGroup> groups_;
};

}  // namespace rocom
