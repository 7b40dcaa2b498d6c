#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rocom {

enum class Errc {
  // schema
  InvalidTerm,
  DuplicateTerm,
  UnknownParent,
  WouldCreateCycle,
  UnknownClass,
  UnknownProperty,
  UnknownTerm,
  ConflictingMapping,
  // store
  InvalidIdentifier,
  DuplicateIndividual,
  UnknownIndividual,
  DomainViolation,
  RangeViolation,
  TypeMismatch,
  InvalidQoC,
  SchemaMismatch,
  IndividualClassConflict,
  // quality
  DuplicateUnit,
  ZeroScale,
  DuplicateCanonical,
  MissingCanonicalUnit,
  UnknownUnit,
  DimensionMismatch,
  // situation
  UnknownSituation,
  NotAnEvent,
  UnknownGoal,
  DuplicateGoal,
  ParentAlreadyAchieved,
  UnknownActivity,
  DuplicateActivity,
  NotAnActivityClass,
  PreconditionNotMet,
  AccessDenied,
  ClockRegression,
  AlreadyTerminal,
  InvalidTransition,
  NotRunning,
  SubgoalsPending,
  AtomicNonInterruptable,
  // access
  UnknownGroup,
  NotAnEntity,
  // io
  SyntaxError,
  UnknownSection,
  DuplicateDefinitionInDocument,
  StepError,
  InvalidArgument,
};

std::string_view to_string(Errc code);
std::optional<Errc> parse_errc(std::string_view name);

/// Position inside a source document, 1-based.
struct TextPos {
  std::size_t line = 0;
  std::size_t column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::optional<TextPos> where = {});

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<TextPos>& where() const noexcept { return where_; }

  /// Same error re-anchored at a document position (keeps an existing one).
  Error at(TextPos pos) const;

 private:
  Errc code_;
  std::string detail_;
  std::optional<TextPos> where_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace rocom
