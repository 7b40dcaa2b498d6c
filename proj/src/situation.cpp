#include "rocom/situation.hpp"

#include <algorithm>

#include "rocom/error.hpp"

namespace rocom {

std::string_view to_string(GoalStatus s) { return s == GoalStatus::Achieved ? "achieved" : "pending"; }

std::string_view to_string(ActivityState s) {
  switch (s) {
    case ActivityState::Pending: return "pending";
    case ActivityState::Eligible: return "eligible";
    case ActivityState::Running: return "running";
    case ActivityState::Completed: return "completed";
    case ActivityState::Aborted: return "aborted";
  }
  return "pending";
}

ActivityState parse_activity_state(std::string_view name) {
  for (auto s : {ActivityState::Pending, ActivityState::Eligible, ActivityState::Running, ActivityState::Completed,
                 ActivityState::Aborted}) {
    if (to_string(s) == name) return s;
  }
  fail(Errc::InvalidArgument, "unknown activity state '" + std::string(name) + "'");
}

std::optional<std::int64_t> Activity::duration() const {
  if (!start_time || !end_time) return std::nullopt;
  return seconds_between(*start_time, *end_time);
}

const Goal* SituationSnapshot::goal(const std::string& gid) const {
  auto it = std::find_if(goals.begin(), goals.end(), [&](const Goal& g) { return g.id == gid; });
  return it == goals.end() ? nullptr : &*it;
}

const Activity* SituationSnapshot::activity(const std::string& aid) const {
  auto it = std::find_if(activities.begin(), activities.end(), [&](const Activity& a) { return a.id == aid; });
  return it == activities.end() ? nullptr : &*it;
}

std::string render_timeline(const SituationSnapshot& s) {
  std::string out;
  for (const auto& t : s.timeline) {
    out += t.time.iso() + " " + s.id + " " + (t.activity.empty() ? "-" : t.activity) + " " + t.what;
    if (!t.goals_achieved.empty()) {
      out += " achieved=";
      for (std::size_t i = 0; i < t.goals_achieved.size(); ++i) out += (i ? "," : "") + t.goals_achieved[i];
    }
    out += "\n";
  }
  return out;
}

struct SituationEngine::State {
  std::mutex mutex;
  SituationSnapshot data;
  std::size_t next_goal = 1;
  std::size_t next_activity = 1;

  Goal* find_goal(const std::string& id) {
    auto it = std::find_if(data.goals.begin(), data.goals.end(), [&](const Goal& g) { return g.id == id; });
    return it == data.goals.end() ? nullptr : &*it;
  }

  Goal& goal(const std::string& id) {
    auto* g = find_goal(id);
    if (!g) fail(Errc::UnknownGoal, id + " in situation " + data.id);
    return *g;
  }

  Activity& activity(const std::string& id) {
    auto it = std::find_if(data.activities.begin(), data.activities.end(),
                           [&](const Activity& a) { return a.id == id; });
    if (it == data.activities.end()) fail(Errc::UnknownActivity, id + " in situation " + data.id);
    return *it;
  }

  bool achieved(const std::string& id) { return goal(id).status == GoalStatus::Achieved; }

  void require_clock(DateTime t) const {
    if (t < data.clock) fail(Errc::ClockRegression, t.iso() + " is before " + data.clock.iso());
  }

  /// Marks `id` achieved at t and walks up while parents become complete.
  void achieve(const std::string& id, DateTime t, std::vector<std::string>& achieved_now) {
    Goal* g = &goal(id);
    if (g->status == GoalStatus::Achieved) return;
    g->status = GoalStatus::Achieved;
    g->achieved_at = t;
    achieved_now.push_back(g->id);
    while (g->parent) {
      Goal& parent = goal(*g->parent);
      if (parent.status == GoalStatus::Achieved) break;
      bool all = std::all_of(parent.children.begin(), parent.children.end(),
                             [&](const std::string& c) { return achieved(c); });
      if (!all) break;
      parent.status = GoalStatus::Achieved;
      parent.achieved_at = t;
      achieved_now.push_back(parent.id);
      g = &parent;
    }
    if (goal(data.root_goal).status == GoalStatus::Achieved) data.terminal = true;
  }

  void refresh_eligibility(DateTime t) {
    for (auto& a : data.activities) {
      if (a.state != ActivityState::Pending) continue;
      bool ready = std::all_of(a.preconditions.begin(), a.preconditions.end(),
                               [&](const std::string& g) { return achieved(g); });
      if (ready) {
        a.state = ActivityState::Eligible;
        data.timeline.push_back({t, a.id, "eligible", {}});
      }
    }
  }
};

SituationEngine::SituationEngine(const ContextStore& store, const AccessControl& access)
    : store_(&store), access_(&access) {}

SituationEngine::~SituationEngine() = default;

SituationEngine::SituationEngine(const SituationEngine& other, const ContextStore& store,
                                 const AccessControl& access)
    : store_(&store), access_(&access) {
  std::shared_lock lock(other.mutex_);
  next_id_ = other.next_id_;
  for (const auto& [id, st] : other.situations_) {
    std::lock_guard guard(st->mutex);
    auto copy = std::make_unique<State>();
    copy->data = st->data;
    copy->next_goal = st->next_goal;
    copy->next_activity = st->next_activity;
    situations_.emplace(id, std::move(copy));
  }
}

SituationEngine::State& SituationEngine::state(const std::string& situation) const {
  std::shared_lock lock(mutex_);
  auto it = situations_.find(situation);
  if (it == situations_.end()) fail(Errc::UnknownSituation, situation);
  return *it->second;
}

SituationSnapshot SituationEngine::trigger(const std::string& event_individual, const std::string& root_description,
                                           DateTime t0, std::optional<std::string> situation_id,
                                           std::optional<std::string> root_goal_id) {
  static const TermName kEvent = TermName::parse("event");
  auto ind = store_->find_individual(event_individual);
  if (!ind) fail(Errc::UnknownIndividual, event_individual);
  if (!store_->schema().is_subclass_of(ind->class_term, kEvent)) {
    fail(Errc::NotAnEvent, event_individual + " is a " + ind->class_term.str());
  }

  std::unique_lock lock(mutex_);
  std::string sid;
  if (situation_id) {
    if (!valid_identifier(*situation_id)) fail(Errc::InvalidIdentifier, *situation_id);
    if (situations_.contains(*situation_id)) fail(Errc::InvalidArgument, "situation " + *situation_id + " exists");
    sid = *situation_id;
  } else {
    do {
      sid = "s" + std::to_string(next_id_++);
    } while (situations_.contains(sid));
  }

  auto st = std::make_unique<State>();
  auto& d = st->data;
  d.id = sid;
  std::string root = root_goal_id ? *root_goal_id : sid + ".g" + std::to_string(st->next_goal++);
  if (!valid_identifier(root)) fail(Errc::InvalidIdentifier, root);
  d.event = Event{event_individual, t0, root};
  d.root_goal = root;
  d.goals.push_back(Goal{root, root_description, std::nullopt, {}, GoalStatus::Pending, std::nullopt});
  d.clock = t0;
  d.timeline.push_back({t0, {}, "triggered by " + event_individual + " goal=" + root, {}});
  SituationSnapshot snap = d;
  situations_.emplace(sid, std::move(st));
  return snap;
}

Goal SituationEngine::add_goal(const std::string& situation, const std::string& description,
                               const std::string& parent, std::optional<std::string> goal_id) {
  auto& st = state(situation);
  std::lock_guard guard(st.mutex);
  auto& p = st.goal(parent);
  if (p.status == GoalStatus::Achieved) fail(Errc::ParentAlreadyAchieved, parent);
  std::string gid;
  if (goal_id) {
    if (!valid_identifier(*goal_id)) fail(Errc::InvalidIdentifier, *goal_id);
    if (st.find_goal(*goal_id)) fail(Errc::DuplicateGoal, *goal_id);
    gid = *goal_id;
  } else {
    do {
      gid = st.data.id + ".g" + std::to_string(st.next_goal++);
    } while (st.find_goal(gid));
  }
  st.goal(parent).children.push_back(gid);
  Goal g{gid, description, parent, {}, GoalStatus::Pending, std::nullopt};
  st.data.goals.push_back(g);
  return g;
}

Activity SituationEngine::add_activity(const std::string& situation, const ActivitySpec& spec) {
  static const TermName kActivity = TermName::parse("activity");
  auto& st = state(situation);
  std::lock_guard guard(st.mutex);
  const auto& schema = store_->schema();
  if (!schema.has_class(spec.class_term)) fail(Errc::UnknownClass, spec.class_term.str());
  if (!schema.is_subclass_of(spec.class_term, kActivity)) fail(Errc::NotAnActivityClass, spec.class_term.str());
  st.goal(spec.goal);
  for (const auto& g : spec.preconditions) st.goal(g);
  for (const auto& p : spec.performers) {
    if (!store_->contains(p)) fail(Errc::UnknownIndividual, p);
  }
  std::string aid;
  if (spec.id) {
    if (!valid_identifier(*spec.id)) fail(Errc::InvalidIdentifier, *spec.id);
    auto& acts = st.data.activities;
    if (std::any_of(acts.begin(), acts.end(), [&](const Activity& a) { return a.id == *spec.id; })) {
      fail(Errc::DuplicateActivity, *spec.id);
    }
    aid = *spec.id;
  } else {
    aid = st.data.id + ".a" + std::to_string(st.next_activity++);
  }
  Activity a;
  a.id = aid;
  a.class_term = spec.class_term;
  a.goal = spec.goal;
  a.preconditions = spec.preconditions;
  a.performers = spec.performers;
  a.atomic = spec.atomic;
  st.data.activities.push_back(a);
  st.refresh_eligibility(st.data.clock);
  return st.activity(aid);
}

Activity SituationEngine::start_activity(const std::string& situation, const std::string& activity, DateTime t) {
  auto& st = state(situation);
  std::lock_guard guard(st.mutex);
  auto& a = st.activity(activity);
  if (st.data.terminal) fail(Errc::AlreadyTerminal, "situation " + situation + " already achieved its goal");
  if (a.state == ActivityState::Pending) {
    std::string missing;
    for (const auto& g : a.preconditions) {
      if (!st.achieved(g)) missing += (missing.empty() ? "" : ", ") + g;
    }
    fail(Errc::PreconditionNotMet, activity + " waits on " + missing);
  }
  if (a.state != ActivityState::Eligible) {
    fail(Errc::InvalidTransition, activity + " is " + std::string(to_string(a.state)));
  }
  st.require_clock(t);
  std::string denied;
  for (const auto& p : a.performers) {
    if (!access_->check(p, a.class_term)) denied += (denied.empty() ? "" : ", ") + p;
  }
  if (!denied.empty()) fail(Errc::AccessDenied, denied + " may not perform " + a.class_term.str());
  a.state = ActivityState::Running;
  a.start_time = t;
  st.data.clock = t;
  st.data.timeline.push_back({t, a.id, "started", {}});
  return a;
}

Activity SituationEngine::complete_activity(const std::string& situation, const std::string& activity,
                                            DateTime t) {
  auto& st = state(situation);
  std::lock_guard guard(st.mutex);
  auto& a = st.activity(activity);
  if (a.state != ActivityState::Running) {
    fail(Errc::NotRunning, activity + " is " + std::string(to_string(a.state)));
  }
  st.require_clock(t);
  if (t < *a.start_time) fail(Errc::ClockRegression, "end precedes start");
  const auto& target = st.goal(a.goal);
  if (target.status == GoalStatus::Pending) {
    for (const auto& c : target.children) {
      if (!st.achieved(c)) fail(Errc::SubgoalsPending, a.goal + " still waits on " + c);
    }
  }
  a.state = ActivityState::Completed;
  a.end_time = t;
  st.data.clock = t;
  std::vector<std::string> achieved_now;
  st.achieve(a.goal, t, achieved_now);
  st.data.timeline.push_back({t, a.id, "completed", achieved_now});
  st.refresh_eligibility(t);
  return a;
}

Activity SituationEngine::abort_activity(const std::string& situation, const std::string& activity, DateTime t) {
  auto& st = state(situation);
  std::lock_guard guard(st.mutex);
  auto& a = st.activity(activity);
  if (a.state != ActivityState::Running) {
    fail(Errc::NotRunning, activity + " is " + std::string(to_string(a.state)));
  }
  if (a.atomic) fail(Errc::AtomicNonInterruptable, activity);
  st.require_clock(t);
  a.state = ActivityState::Aborted;
  a.end_time = t;
  st.data.clock = t;
  st.data.timeline.push_back({t, a.id, "aborted", {}});
  return a;
}

SituationSnapshot SituationEngine::status(const std::string& situation) const {
  auto& st = state(situation);
  std::lock_guard guard(st.mutex);
  return st.data;
}

std::vector<std::string> SituationEngine::situations() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [id, _] : situations_) out.push_back(id);
  return out;
}

}  // namespace rocom
