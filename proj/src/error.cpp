#include "rocom/error.hpp"

namespace rocom {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidTerm: return "InvalidTerm";
    case Errc::DuplicateTerm: return "DuplicateTerm";
    case Errc::UnknownParent: return "UnknownParent";
    case Errc::WouldCreateCycle: return "WouldCreateCycle";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::UnknownTerm: return "UnknownTerm";
    case Errc::ConflictingMapping: return "ConflictingMapping";
    case Errc::InvalidIdentifier: return "InvalidIdentifier";
    case Errc::DuplicateIndividual: return "DuplicateIndividual";
    case Errc::UnknownIndividual: return "UnknownIndividual";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::InvalidQoC: return "InvalidQoC";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::IndividualClassConflict: return "IndividualClassConflict";
    case Errc::DuplicateUnit: return "DuplicateUnit";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::DuplicateCanonical: return "DuplicateCanonical";
    case Errc::MissingCanonicalUnit: return "MissingCanonicalUnit";
    case Errc::UnknownUnit: return "UnknownUnit";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnknownSituation: return "UnknownSituation";
    case Errc::NotAnEvent: return "NotAnEvent";
    case Errc::UnknownGoal: return "UnknownGoal";
    case Errc::DuplicateGoal: return "DuplicateGoal";
    case Errc::ParentAlreadyAchieved: return "ParentAlreadyAchieved";
    case Errc::UnknownActivity: return "UnknownActivity";
    case Errc::DuplicateActivity: return "DuplicateActivity";
    case Errc::NotAnActivityClass: return "NotAnActivityClass";
    case Errc::PreconditionNotMet: return "PreconditionNotMet";
    case Errc::AccessDenied: return "AccessDenied";
    case Errc::ClockRegression: return "ClockRegression";
    case Errc::AlreadyTerminal: return "AlreadyTerminal";
    case Errc::InvalidTransition: return "InvalidTransition";
    case Errc::NotRunning: return "NotRunning";
    case Errc::SubgoalsPending: return "SubgoalsPending";
    case Errc::AtomicNonInterruptable: return "AtomicNonInterruptable";
    case Errc::UnknownGroup: return "UnknownGroup";
    case Errc::NotAnEntity: return "NotAnEntity";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSection: return "UnknownSection";
    case Errc::DuplicateDefinitionInDocument: return "DuplicateDefinitionInDocument";
    case Errc::StepError: return "StepError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string render(Errc code, const std::string& message, const std::optional<TextPos>& where) {
  std::string out;
  if (where) {
    out += std::to_string(where->line) + ":" + std::to_string(where->column) + ": ";
  }
  out += to_string(code);
  if (!message.empty()) {
    out += ": " + message;
  }
  return out;
}

}  // namespace

Error::Error(Errc code, const std::string& message, std::optional<TextPos> where)
    : std::runtime_error(render(code, message, where)),
      code_(code),
      detail_(message),
      where_(where) {}

Error Error::at(TextPos pos) const {
  return Error(code_, detail_, where_ ? where_ : std::optional<TextPos>(pos));
}

std::optional<Errc> parse_errc(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Errc::InvalidArgument); ++i) {
    if (to_string(static_cast<Errc>(i)) == name) return static_cast<Errc>(i);
  }
  return std::nullopt;
}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace rocom
