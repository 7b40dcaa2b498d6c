#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "rocom/access.hpp"
#include "rocom/store.hpp"

namespace rocom {

enum class GoalStatus { Pending, Achieved };
enum class ActivityState { Pending, Eligible, Running, Completed, Aborted };

std::string_view to_string(GoalStatus s);
std::string_view to_string(ActivityState s);
ActivityState parse_activity_state(std::string_view name);

struct Goal {
  std::string id;
  std::string description;
  std::optional<std::string> parent;
  std::vector<std::string> children;
  GoalStatus status = GoalStatus::Pending;
  std::optional<DateTime> achieved_at;

  bool operator==(const Goal&) const = default;
};

struct Activity {
  std::string id;
  TermName class_term;
  std::string goal;  // postcondition
  std::vector<std::string> preconditions;
  std::vector<std::string> performers;
  bool atomic = false;
  ActivityState state = ActivityState::Pending;
  std::optional<DateTime> start_time;
  std::optional<DateTime> end_time;

  /// Seconds between start and end, once both are known.
  std::optional<std::int64_t> duration() const;
  bool operator==(const Activity&) const = default;
};

struct Event {
  std::string individual;
  DateTime occurred_at;
  std::string triggers_goal;

  bool operator==(const Event&) const = default;
};

/// One line of the timeline: what happened to which activity and which goals
/// it achieved. `activity` is empty for situation-level transitions.
struct Transition {
  DateTime time;
  std::string activity;
  std::string what;
  std::vector<std::string> goals_achieved;

  bool operator==(const Transition&) const = default;
};

struct SituationSnapshot {
  std::string id;
  Event event;
  std::string root_goal;
  std::vector<Goal> goals;            // creation order
  std::vector<Activity> activities;   // creation order
  DateTime clock;
  bool terminal = false;
  std::vector<Transition> timeline;

  const Goal* goal(const std::string& id) const;
  const Activity* activity(const std::string& id) const;
  bool operator==(const SituationSnapshot&) const = default;
};

/// Deterministic text rendering, one line per transition.
std::string render_timeline(const SituationSnapshot& snapshot);

struct ActivitySpec {
  std::optional<std::string> id;
  TermName class_term;
  std::string goal;
  std::vector<std::string> preconditions;
  std::vector<std::string> performers;
  bool atomic = false;
};

/// Event-triggered goal trees driven by activities.
///
/// Goals use AND decomposition: a goal with children is achieved exactly when
/// its last child is; a leaf goal is achieved by completing an activity that
/// targets it. Callers supply every time; the engine only enforces that each
/// situation's clock never runs backwards. Operations on one situation are
/// serialized, distinct situations progress independently.
class SituationEngine {
 public:
  SituationEngine(const ContextStore& store, const AccessControl& access);
  SituationEngine(const SituationEngine& other, const ContextStore& store, const AccessControl& access);
  ~SituationEngine();
  SituationEngine(const SituationEngine&) = delete;
  SituationEngine& operator=(const SituationEngine&) = delete;

  SituationSnapshot trigger(const std::string& event_individual, const std::string& root_description, DateTime t0,
                            std::optional<std::string> situation_id = {},
                            std::optional<std::string> root_goal_id = {});

  Goal add_goal(const std::string& situation, const std::string& description, const std::string& parent,
                std::optional<std::string> goal_id = {});

  Activity add_activity(const std::string& situation, const ActivitySpec& spec);

  Activity start_activity(const std::string& situation, const std::string& activity, DateTime t);
  Activity complete_activity(const std::string& situation, const std::string& activity, DateTime t);
  Activity abort_activity(const std::string& situation, const std::string& activity, DateTime t);

  SituationSnapshot status(const std::string& situation) const;
  std::vector<std::string> situations() const;

 private:
  struct State;
  State& state(const std::string& situation) const;

  const ContextStore* store_;
  const AccessControl* access_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::unique_ptr<State>> situations_;
  std::size_t next_id_ = 1;
};

}  // namespace rocom
