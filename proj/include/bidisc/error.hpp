#ifndef BIDISC_ERROR_HPP
#define BIDISC_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bidisc {

enum class Err {
  Syntax,
  DivisionByZero,
  NotHomogeneous,
  ZeroPolynomial,
  BothConstantInY,
  DegreeZeroInY,
  DegreeTooSmall,
  NotPrimitive,
  NotSquarefree,
  NotSeparable,
  UnivariateInput,
  NotUnibranchEdge,
  YDivides,
  DegreeDrop,
  NotMinimal,
  NotMonic,
  NotMonicMinimal,
  NotIrreducible,
  NonRationalBranch,
  TruncationInsufficient,
  DegenerateImage,
  NotPolynomial,
  FactorsNotCoprime,
  BoundViolated,
  BadParams,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::Syntax: return "SyntaxError";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NotHomogeneous: return "NotHomogeneous";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::BothConstantInY: return "BothConstantInY";
    case Err::DegreeZeroInY: return "DegreeZeroInY";
    case Err::DegreeTooSmall: return "DegreeTooSmall";
    case Err::NotPrimitive: return "NotPrimitive";
    case Err::NotSquarefree: return "NotSquarefree";
    case Err::NotSeparable: return "NotSeparable";
    case Err::UnivariateInput: return "UnivariateInput";
    case Err::NotUnibranchEdge: return "NotUnibranchEdge";
    case Err::YDivides: return "YDivides";
    case Err::DegreeDrop: return "DegreeDrop";
    case Err::NotMinimal: return "NotMinimal";
    case Err::NotMonic: return "NotMonic";
    case Err::NotMonicMinimal: return "NotMonicMinimal";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::NonRationalBranch: return "NonRationalBranch";
    case Err::TruncationInsufficient: return "TruncationInsufficient";
    case Err::DegenerateImage: return "DegenerateImage";
    case Err::NotPolynomial: return "NotPolynomial";
    case Err::FactorsNotCoprime: return "FactorsNotCoprime";
    case Err::BoundViolated: return "BoundViolated";
    case Err::BadParams: return "BadParams";
    case Err::Internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, std::string message)
      : std::runtime_error(std::string(err_name(kind)) + ": " + message), kind_(kind) {}
  Error(Err kind, std::string message, std::size_t offset)
      : std::runtime_error(std::string(err_name(kind)) + " at byte " + std::to_string(offset) +
                           ": " + message),
        kind_(kind),
        offset_(offset) {}

  Err kind() const { return kind_; }
  std::optional<std::size_t> offset() const { return offset_; }

  // True for malformed input (maps to CLI exit code 2), false for domain refusals (exit 1).
  bool is_syntax_class() const {
    return kind_ == Err::Syntax || kind_ == Err::DivisionByZero || kind_ == Err::NotHomogeneous;
  }

 private:
  Err kind_;
  std::optional<std::size_t> offset_;
};

[[noreturn]] inline void fail(Err kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool cond, Err kind, const std::string& message) {
  if (!cond) throw Error(kind, message);
}

}  // namespace bidisc

#endif
