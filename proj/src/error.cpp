#include "fincat/error.hpp"

#include <algorithm>

namespace fincat {

std::string_view to_string(Code code) {
  switch (code) {
    case Code::TypeMismatch: return "TypeMismatch";
    case Code::MissingIdentity: return "MissingIdentity";
    case Code::AssociativityFailure: return "AssociativityFailure";
    case Code::IdentityLawFailure: return "IdentityLawFailure";
    case Code::MissingComposite: return "MissingComposite";
    case Code::DuplicateComposite: return "DuplicateComposite";
    case Code::DuplicateIdentifier: return "DuplicateIdentifier";
    case Code::UnknownIdentifier: return "UnknownIdentifier";
    case Code::NotAFunctor: return "NotAFunctor";
    case Code::NotNatural: return "NotNatural";
    case Code::SourceTargetMismatch: return "SourceTargetMismatch";
    case Code::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case Code::NotAnEquivalence: return "NotAnEquivalence";
    case Code::NotIdentityOnObjects: return "NotIdentityOnObjects";
    case Code::NotContravariant: return "NotContravariant";
    case Code::NotInvolutive: return "NotInvolutive";
    case Code::UnknownMorphism: return "UnknownMorphism";
    case Code::NotADaggerFunctor: return "NotADaggerFunctor";
    case Code::NotIsometric: return "NotIsometric";
    case Code::EtaNotNatural: return "EtaNotNatural";
    case Code::EtaNotIso: return "EtaNotIso";
    case Code::CoherenceFailure: return "CoherenceFailure";
    case Code::NotIso: return "NotIso";
    case Code::CoherenceSquareFailure: return "CoherenceSquareFailure";
    case Code::PreconditionFailure: return "PreconditionFailure";
    case Code::EmptyOnObject: return "EmptyOnObject";
    case Code::NotHermitian: return "NotHermitian";
    case Code::NotTransferClosed: return "NotTransferClosed";
    case Code::NotSurjectiveOntoPi0: return "NotSurjectiveOntoPi0";
    case Code::InvalidSpec: return "InvalidSpec";
    case Code::SizeExceeded: return "SizeExceeded";
    case Code::LexError: return "LexError";
    case Code::ParseError: return "ParseError";
    case Code::UnresolvedReference: return "UnresolvedReference";
    case Code::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

bool Report::has(Code code) const {
  return std::any_of(items_.begin(), items_.end(), [code](const Violation& v) { return v.code == code; });
}

std::string Report::summary() const {
  std::string out;
  for (const auto& v : items_) {
    if (!out.empty()) out += "; ";
    out += to_string(v.code);
    out += ": ";
    out += v.message;
  }
  return out;
}

}  // namespace fincat
