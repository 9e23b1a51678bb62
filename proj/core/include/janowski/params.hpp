#pragma once

#include "janowski/errors.hpp"
#include "janowski/rational.hpp"

namespace janowski {

/// The parameter pair (A, B) with -1 <= B < A <= 1, together with the
/// derived quantity delta = (1-A)/(1-B) in [0, 1).
class JanowskiParams {
 public:
  JanowskiParams(Rational A, Rational B) : A_(std::move(A)), B_(std::move(B)) {
    if (!(B_ >= -1 && B_ < A_ && A_ <= 1))
      throw InvalidParams("require -1 <= B < A <= 1, got A=" +
                          format_rational(A_) + " B=" + format_rational(B_));
  }

  const Rational& A() const { return A_; }
  const Rational& B() const { return B_; }
  Rational delta() const { return Rational(1 - A_) / Rational(1 - B_); }

  bool operator==(const JanowskiParams&) const = default;

 private:
  Rational A_;
  Rational B_;
};

}  // namespace janowski
