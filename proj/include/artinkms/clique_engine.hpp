// Cliques, clique polynomials and the closure P_inf.
//
// A clique is a finite subset admitting a common right multiple.  For subsets
// of generators this happens exactly when the parabolic Coxeter submatrix is of
// finite type; cliques_of() decides by that criterion and confirms each answer
// by reversing.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "artinkms/polynomial.hpp"
#include "artinkms/reversing.hpp"
#include "artinkms/word_engine.hpp"

namespace artinkms {

// Step budget for the reversing cross-check in cliques_of().
inline constexpr std::size_t kCliqueCheckSteps = 20000;

struct Clique {
  std::vector<Word> members;
  Word              lcm;
  std::size_t       lcm_length = 0;
};

// All cliques K of J (J a set of generators), including the empty one, in
// order of the bitmask over the sorted J.  Throws Defect if the finite-type
// criterion and reversing disagree.
std::vector<Clique> cliques_of(const WordEngine& engine, std::span<const Letter> J,
                               std::size_t check_steps = kCliqueCheckSteps);

// h(t) = sum over cliques K of S of (-1)^|K| t^length(vK).  Throws NonUniformWeights.
IntPolynomial clique_polynomial(const WordEngine& engine);

// g_J(t) for arbitrary nonidentity elements; non-cliques contribute nothing.
// Duplicates in J (as monoid elements) are merged.  Throws IdentityEntry, and
// Inconclusive when reversing runs out of steps.
IntPolynomial subset_polynomial(const WordEngine& engine, std::span<const Word> J,
                                std::size_t step_cap = kDefaultStepCap);

struct PinfSet {
  std::vector<Word> elements;  // canonical, sorted by length then lexicographically
  bool              saturated       = false;
  std::size_t       iterations_used = 0;
};

inline constexpr std::size_t kDefaultPinfIterations = 1000;
inline constexpr std::size_t kDefaultPinfElements   = 100000;

// Smallest set containing the generators and closed under p -> x\p for every
// generator x with x v p finite, identity excluded.  Stops unsaturated after
// iteration_cap rounds or once element_cap elements are known.
PinfSet pinf(const WordEngine& engine, std::size_t iteration_cap = kDefaultPinfIterations,
             std::size_t element_cap = kDefaultPinfElements, std::size_t step_cap = kDefaultStepCap);

// Sorts by length, then lexicographically.
bool shortlex_less(const Word& a, const Word& b);

}  // namespace artinkms
