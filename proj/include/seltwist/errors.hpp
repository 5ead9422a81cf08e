#pragma once

#include <stdexcept>
#include <string>

namespace seltwist {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// arith
struct ZeroInputError : Error {
  ZeroInputError() : Error("nonzero integer required") {}
};
struct FactorizationIncompleteError : Error {
  explicit FactorizationIncompleteError(const std::string& what) : Error(what) {}
};

// curve: each constructor rejection is distinguishable
struct CurveError : Error {
  enum class Reason { GcdNotOne, DivisibleByThree, SingularModel };
  Reason reason;
  CurveError(Reason r, const std::string& what) : Error(what), reason(r) {}
};

// generic precondition violation (p | d where the rule does not apply, etc.)
struct DomainError : Error {
  using Error::Error;
};

// congruence / pipeline
struct HypothesisNoneError : Error {
  HypothesisNoneError()
      : Error("neither hypothesis case holds for this curve; the twist-set construction does not apply") {}
};
struct SigmaMembershipError : Error {
  std::string violated;
  explicit SigmaMembershipError(const std::string& cond)
      : Error("twist class lies outside the admissible set: " + cond), violated(cond) {}
};
struct RatioNotOneError : Error {
  std::string twist, isogeny, place;
  RatioNotOneError(std::string d, std::string iso, std::string p)
      : Error("global ratio is not 1 for twist " + d + ", isogeny " + iso + ", place " + p),
        twist(std::move(d)), isogeny(std::move(iso)), place(std::move(p)) {}
};
struct ScenarioFileError : Error {
  using Error::Error;
};

}  // namespace seltwist
