#pragma once

#include <stdexcept>
#include <string>

namespace brinv {

enum class ErrorKind {
  BoxNotInPattern,
  DepthCapExceeded,
  NotSiblings,
  NotATiling,
  NoCommonLowerBound,
  BudgetExceeded,
  NonHierarchicalFrame,
  BaseMismatch,
  PreconditionViolated,
  NotDisjoint,
  SizeMismatch,
  NotBijective,
  BoxNotBelowDomain,
  NotBoxWorld,
  NoEdge,
  StarSearchBudgetExceeded,
  CertificateViolation,
  UnknownSuite,
  SyntaxError,
  InvariantViolation,
};

inline char const* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BoxNotInPattern: return "BoxNotInPattern";
    case ErrorKind::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorKind::NotSiblings: return "NotSiblings";
    case ErrorKind::NotATiling: return "NotATiling";
    case ErrorKind::NoCommonLowerBound: return "NoCommonLowerBound";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonHierarchicalFrame: return "NonHierarchicalFrame";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::BoxNotBelowDomain: return "BoxNotBelowDomain";
    case ErrorKind::NotBoxWorld: return "NotBoxWorld";
    case ErrorKind::NoEdge: return "NoEdge";
    case ErrorKind::StarSearchBudgetExceeded: return "StarSearchBudgetExceeded";
    case ErrorKind::CertificateViolation: return "CertificateViolation";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

// All library failures are reported through this type; kind() is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        _kind(kind), _detail(detail) {}

  ErrorKind          kind() const noexcept { return _kind; }
  std::string const& detail() const noexcept { return _detail; }

 private:
  ErrorKind   _kind;
  std::string _detail;
};

inline bool is_budget_error(Error const& e) noexcept {
  return e.kind() == ErrorKind::BudgetExceeded
         || e.kind() == ErrorKind::StarSearchBudgetExceeded;
}

}  // namespace brinv
