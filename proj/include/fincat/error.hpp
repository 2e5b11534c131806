#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fincat {

/// Stable, machine-readable failure codes shared by every validator and
/// construction in the library. `to_string` yields the code names used in
/// reports and diagnostics; they must not change between releases.
enum class Code {
  // categories
  TypeMismatch,
  MissingIdentity,
  AssociativityFailure,
  IdentityLawFailure,
  MissingComposite,
  DuplicateComposite,
  DuplicateIdentifier,
  UnknownIdentifier,
  // functors and natural transformations
  NotAFunctor,
  NotNatural,
  SourceTargetMismatch,
  SearchSpaceExceeded,
  NotAnEquivalence,
  // daggers
  NotIdentityOnObjects,
  NotContravariant,
  NotInvolutive,
  UnknownMorphism,
  NotADaggerFunctor,
  NotIsometric,
  // anti-involutions
  EtaNotNatural,
  EtaNotIso,
  CoherenceFailure,
  NotIso,
  CoherenceSquareFailure,
  PreconditionFailure,
  // positivity
  EmptyOnObject,
  NotHermitian,
  NotTransferClosed,
  NotSurjectiveOntoPi0,
  // generators
  InvalidSpec,
  SizeExceeded,
  // dsl
  LexError,
  ParseError,
  UnresolvedReference,
  ValidationError,
};

std::string_view to_string(Code code);

struct Violation {
  Code code;
  std::string message;
};

/// Itemized outcome of a validator. An empty report means every checked law held.
class Report {
 public:
  void add(Code code, std::string message) { items_.push_back({code, std::move(message)}); }
  void append(const Report& other) { items_.insert(items_.end(), other.items_.begin(), other.items_.end()); }

  bool ok() const { return items_.empty(); }
  explicit operator bool() const { return ok(); }
  const std::vector<Violation>& items() const { return items_; }
  bool has(Code code) const;
  std::string summary() const;

 private:
  std::vector<Violation> items_;
};

/// A validated value or the report explaining why there is none.
template <class T>
struct Checked {
  std::optional<T> value;
  Report report;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

class Error : public std::runtime_error {
 public:
  Error(Code code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Unwraps a Checked value, throwing the first violation on failure.
template <class T>
T value_or_throw(Checked<T> checked) {
  if (!checked.value) {
    const auto& items = checked.report.items();
    if (items.empty()) throw Error(Code::ValidationError, "validation failed");
    throw Error(items.front().code, checked.report.summary());
  }
  return std::move(*checked.value);
}

}  // namespace fincat
