#pragma once

#include "zariski/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zariski {

/// The class lies outside the modeled pseudo-effective cone.
class NotPseudoEffective : public std::runtime_error {
 public:
  enum class Reason {
    kGramNotNegativeDefinite,
    kOutsidePositiveCone,
    kNegativeLCoefficient,
    kBaseClassNotNef,
  };

  NotPseudoEffective(Reason reason, std::string detail)
      : std::runtime_error(std::move(detail)), reason_(reason) {}

  Reason reason() const { return reason_; }

  /// Prime names of the active set whose Gram matrix failed definiteness.
  std::vector<std::string> offending_subset;
  /// q(a, a) and q(a, h) of the projected class, for positive-cone failures.
  Rational q_self;
  Rational q_ample;

 private:
  Reason reason_;
};

inline const char* reason_name(NotPseudoEffective::Reason r) {
  switch (r) {
    case NotPseudoEffective::Reason::kGramNotNegativeDefinite:
      return "gram-not-negative-definite";
    case NotPseudoEffective::Reason::kOutsidePositiveCone:
      return "positive-cone-closure";
    case NotPseudoEffective::Reason::kNegativeLCoefficient:
      return "negative-L-coefficient";
    case NotPseudoEffective::Reason::kBaseClassNotNef:
      return "base-class-not-nef";
  }
  return "unknown";
}

/// A postcondition the theory guarantees did not hold.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace zariski
