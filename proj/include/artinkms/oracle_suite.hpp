// Cross-checks of the fast routines against the brute-force oracles on a
// ball: reversing against shortest common multiples, clique polynomial
// against the growth series, and the cell formulas against membership.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artinkms/reversing.hpp"
#include "artinkms/word_engine.hpp"

namespace artinkms {

struct LcmAgreement {
  std::size_t pairs        = 0;
  std::size_t conclusive   = 0;  // both sides reached a verdict
  std::size_t agreements   = 0;
  std::size_t inconclusive = 0;  // reversing ran out of steps
  std::optional<std::pair<Word, Word>> first_mismatch;
  std::string detail;

  bool ok() const noexcept { return !first_mismatch.has_value(); }
};

// Every ordered pair of elements of length <= source_radius.  A pair is
// conclusive when a common multiple lies in the ball or reversing proves there
// is none; the reversing LCM must then be the shortest common multiple in the
// ball and divide every other one.
LcmAgreement lcm_agreement(const WordEngine& engine, const Ball& ball, std::size_t source_radius,
                           std::size_t step_cap = kDefaultStepCap);

struct SuiteCheck {
  std::string name;
  bool        passed  = true;
  std::size_t checked = 0;
  std::string detail;
};

std::vector<SuiteCheck> oracle_suite(const WordEngine& engine, std::size_t radius);

}  // namespace artinkms
