// Right LCMs and complements.
//
// lcm() uses right subword reversing driven by the atom complements
// s\t = <ts>^{m(s,t)-1}.  oracle_lcm() and MultiplesTable decide the same
// question by brute force (search for the shortest common right multiple) and
// exist to cross-check the reversing route.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "artinkms/presentation.hpp"
#include "artinkms/word_engine.hpp"

namespace artinkms {

inline constexpr std::size_t kDefaultStepCap = 1000000;

enum class LcmTag { Lcm, NoCommonMultiple, Inconclusive };

struct LcmResult {
  LcmTag      tag = LcmTag::Inconclusive;
  Word        lcm;         // p v q
  Word        comp_left;   // p\q:  p . comp_left  = lcm
  Word        comp_right;  // q\p:  q . comp_right = lcm
  std::size_t steps_used = 0;

  bool found() const noexcept { return tag == LcmTag::Lcm; }
};

// s\t, or nullopt when m(s,t) is infinite.
std::optional<Word> atom_complement(const CoxeterMatrix& matrix, Letter s, Letter t);

// Reversing on raw words; results are not canonicalised.
LcmResult reverse(const CoxeterMatrix& matrix, const Word& p, const Word& q, std::size_t step_cap = kDefaultStepCap);

// As reverse(), with lcm and both complements replaced by canonical words.
LcmResult lcm(const WordEngine& engine, const Word& p, const Word& q, std::size_t step_cap = kDefaultStepCap);

// Left fold of lcm over a nonempty list.  comp_left is K.front()^{-1}(vK) and
// comp_right is K.back()^{-1}(vK).
LcmResult lcm_set(const WordEngine& engine, std::span<const Word> elements, std::size_t step_cap = kDefaultStepCap);

// Shortest common right multiple of length <= length_cap, found by
// enumerating the right multiples of p one length at a time.  Never reports
// NoCommonMultiple: without a witness it returns Inconclusive.
LcmResult oracle_lcm(const WordEngine& engine, const Word& p, const Word& q, std::size_t length_cap);

// Bulk version of oracle_lcm over a precomputed ball: the right multiples of
// each source element inside the ball are stored as bitsets, and the LCM of
// two sources is the shortest element in both sets.
class MultiplesTable {
 public:
  MultiplesTable(const Ball& ball, std::vector<std::size_t> sources);

  std::size_t source_count() const noexcept { return sources_.size(); }
  std::size_t source(std::size_t i) const { return sources_[i]; }

  // Ball id of the shortest common multiple of sources i and j, or Ball::npos
  // when none lies in the ball.  Throws Defect if the shortest one is not
  // unique.
  std::size_t shortest_common_multiple(std::size_t i, std::size_t j) const;

  // True when every common multiple of sources i and j inside the ball is a
  // right multiple of the ball element `candidate`.
  bool below_all_common_multiples(std::size_t i, std::size_t j, std::size_t candidate) const;

 private:
  using Bits = std::vector<std::uint64_t>;
  Bits multiples_of(std::size_t id) const;

  const Ball*                                  ball_;
  std::vector<std::size_t>                     sources_;
  std::vector<Bits>                            multiples_;
  mutable std::unordered_map<std::size_t, Bits> extra_;
};

}  // namespace artinkms
