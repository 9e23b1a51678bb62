#pragma once

#include <stdexcept>
#include <string>

namespace janowski {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BackendMismatch : Error {
  BackendMismatch() : Error("operands use different scalar backends") {}
};

struct NotInvertible : Error {
  NotInvertible() : Error("series has zero constant term, no reciprocal") {}
};

struct NotNormalized : Error {
  explicit NotNormalized(const std::string& what) : Error(what) {}
};

struct NotComposable : Error {
  NotComposable() : Error("inner series must have zero constant term") {}
};

struct NotNormalizedForReversion : Error {
  NotNormalizedForReversion()
      : Error("reversion requires f[0] = 0 and f[1] = 1") {}
};

struct InvalidLambda : Error {
  InvalidLambda() : Error("exponent lambda must be positive") {}
};

struct InvalidIndex : Error {
  explicit InvalidIndex(const std::string& what) : Error(what) {}
};

struct InvalidParams : Error {
  explicit InvalidParams(const std::string& what) : Error(what) {}
};

struct InvalidSchwarz : Error {
  explicit InvalidSchwarz(const std::string& what) : Error(what) {}
};

struct TruncationTooShort : Error {
  explicit TruncationTooShort(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace janowski
