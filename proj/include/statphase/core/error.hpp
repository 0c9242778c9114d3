#ifndef STATPHASE_CORE_ERROR_HPP
#define STATPHASE_CORE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace statphase {

enum class ErrorKind {
  VariableMismatch,
  UnknownVariable,
  BothConstantInVar,
  DegreeZero,
  ZeroPolynomial,
  SyntaxError,
  DegreeCapExceeded,
  NonVanishingGerm,
  NotConvenient,
  Degenerate,
  NonIsolated,
  NotACriticalPoint,
  DegenerateInG,
  ZeroDenominator,
  WrongArity,
  NonIsolatedIndeterminacy,
  GenericityFailure,
  EliminationCollapse,
  NotIndeterminacyPoint,
  NonIsolatedSolution,
  SingularS,
  NonIsolatedCritical,
  NotTame,
  LineInBadLocus,
  NotTransverse,
  NoFiniteBadPoint,
  SingleBranch,
  ValidationError,
  IoError,
  Internal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::BothConstantInVar: return "BothConstantInVar";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::NonVanishingGerm: return "NonVanishingGerm";
    case ErrorKind::NotConvenient: return "NotConvenient";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::NotACriticalPoint: return "NotACriticalPoint";
    case ErrorKind::DegenerateInG: return "DegenerateInG";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::NonIsolatedIndeterminacy: return "NonIsolatedIndeterminacy";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::EliminationCollapse: return "EliminationCollapse";
    case ErrorKind::NotIndeterminacyPoint: return "NotIndeterminacyPoint";
    case ErrorKind::NonIsolatedSolution: return "NonIsolatedSolution";
    case ErrorKind::SingularS: return "SingularS";
    case ErrorKind::NonIsolatedCritical: return "NonIsolatedCritical";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::LineInBadLocus: return "LineInBadLocus";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::NoFiniteBadPoint: return "NoFiniteBadPoint";
    case ErrorKind::SingleBranch: return "SingleBranch";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every engine failure is an Error carrying a kind and the module that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message,
        std::size_t position = npos)
      : std::runtime_error(message),
        kind_(kind),
        module_(std::move(module)),
        position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }
  // Character offset for SyntaxError, npos otherwise.
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorKind kind_;
  std::string module_;
  std::size_t position_;
};

}  // namespace statphase

#endif  // STATPHASE_CORE_ERROR_HPP
