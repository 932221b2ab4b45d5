#pragma once

#include <stdexcept>
#include <string>

namespace qspect {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

struct BasisError : std::invalid_argument {
  explicit BasisError(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptySpanError : std::invalid_argument {
  explicit EmptySpanError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotContractive : std::domain_error {
  explicit NotContractive(const std::string& what) : std::domain_error(what) {}
};

struct RankAmbiguous : std::runtime_error {
  explicit RankAmbiguous(const std::string& what) : std::runtime_error(what) {}
};

struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::invalid_argument {
  SyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset(offset) {}
  std::size_t offset;
};

struct UnknownName : std::invalid_argument {
  explicit UnknownName(const std::string& what) : std::invalid_argument(what) {}
};

struct TruncationError : std::invalid_argument {
  explicit TruncationError(const std::string& what) : std::invalid_argument(what) {}
};

struct ConflictError : std::logic_error {
  explicit ConflictError(const std::string& what) : std::logic_error(what) {}
};

struct NotFredholm : std::domain_error {
  explicit NotFredholm(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedShape : std::domain_error {
  explicit UnsupportedShape(const std::string& what) : std::domain_error(what) {}
};

struct NonCompactPerturbation : std::invalid_argument {
  explicit NonCompactPerturbation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qspect
