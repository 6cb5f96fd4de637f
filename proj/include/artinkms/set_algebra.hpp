// Cells p Omega_K = { p w : k is not a left divisor of w for every k in K }
// and finite disjoint unions of them.
//
// K = {} gives the principal right ideal pP; a blocker equal to e gives the
// empty set.  Everything here is checked extensionally on balls by
// verify_equal(), which is the oracle for the symbolic operations.

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "artinkms/clique_engine.hpp"
#include "artinkms/reversing.hpp"
#include "artinkms/word_engine.hpp"

namespace artinkms {

struct Cell {
  Word              prefix;
  std::vector<Word> blockers;

  bool operator==(const Cell&) const = default;
};

using SymbolicSet = std::vector<Cell>;

// Canonical words, duplicate and dominated blockers removed (k <= k' makes k'
// redundant), blockers sorted by length then lexicographically.
Cell normalize(const WordEngine& engine, Cell cell);

// Denotes the empty set.
bool is_empty_cell(const Cell& cell);

// "p | k1, k2"; "e" or "" for the identity.
Cell        parse_cell(const MonoidPresentation& presentation, std::string_view text);
std::string format_cell(const MonoidPresentation& presentation, const Cell& cell);

bool member(const WordEngine& engine, const Word& w, const Cell& cell);
bool member(const WordEngine& engine, const Word& w, const SymbolicSet& set);

// P \ pP as (e,{s1}) u (s1,{s2}) u ... u (s1...s(k-1),{sk}) for the canonical
// word s1...sk of p.  Throws IdentityArgument.
SymbolicSet complement_principal(const WordEngine& engine, const Word& p);

enum class IntersectTag { Cell, Empty, Inconclusive };

struct IntersectResult {
  IntersectTag tag = IntersectTag::Empty;
  Cell         cell;
};

// p1 Omega_K1 n p2 Omega_K2 = r Omega_K' with r = p1 v p2 and
// K' = { r\(p_i k) : k in K_i, r v p_i k finite }.
IntersectResult intersect_cells(const WordEngine& engine, const Cell& a, const Cell& b,
                                std::size_t step_cap = kDefaultStepCap);

enum class RewriteTarget { Atoms, Pinf };

std::string_view to_string(RewriteTarget target) noexcept;
RewriteTarget    parse_target(std::string_view text);

struct RewriteOptions {
  std::size_t depth_cap = 10000;
  std::size_t node_cap  = 100000;
  std::size_t step_cap  = kDefaultStepCap;
};

struct RewriteResult {
  bool        conclusive = true;
  SymbolicSet cells;         // valid when conclusive
  std::size_t nodes     = 0;  // recursion calls made
  std::size_t max_depth = 0;
};

// Disjoint union of cells equal to `cell` whose blockers all lie in the
// target set.  Peels the first atom s of the first blocker q = s q' outside
// the target:
//   Omega_{q, R} = Omega_{s, R} u s Omega_{q', s\R}.
// For the pinf target, `pinf_set` must hold the (saturated) P_inf.
RewriteResult rewrite_blockers(const WordEngine& engine, RewriteTarget target, const Cell& cell,
                               const std::vector<Word>& pinf_set = {}, const RewriteOptions& options = {});

struct VerifyReport {
  bool                equal      = true;
  bool                disjoint_a = true;
  bool                disjoint_b = true;
  std::optional<Word> counterexample;
  std::string         reason;
  std::size_t         checked = 0;

  bool ok() const noexcept { return equal && disjoint_a && disjoint_b; }
};

// Compares membership on every element of length <= radius and checks that
// the cells of each side are pairwise disjoint there.
VerifyReport verify_equal(const WordEngine& engine, const SymbolicSet& a, const SymbolicSet& b, std::size_t radius);

// Same, over a prebuilt ball.
VerifyReport verify_equal(const WordEngine& engine, const SymbolicSet& a, const SymbolicSet& b, const Ball& ball);

enum class SampleOutcome { Success, Inconclusive, Counterexample };

struct ClosureSample {
  Letter        s = 0;
  Cell          target;   // (q, K) with K a set of generators
  Cell          intersection;
  bool          empty = false;
  SymbolicSet   rewritten;
  SampleOutcome outcome = SampleOutcome::Success;
  std::optional<Word> counterexample;
};

struct ClosureReport {
  std::vector<ClosureSample> samples;
  std::size_t                successes      = 0;
  std::size_t                inconclusive   = 0;
  std::size_t                counterexamples = 0;
};

// For random s, q of length <= max_prefix and K within the generators, writes
// (P \ sP) n q Omega_K with generator blockers only and checks it on the ball.
ClosureReport algebra_closure_check(const WordEngine& engine, std::size_t samples, std::size_t radius,
                                    std::mt19937_64& rng, std::size_t max_prefix = 3,
                                    const RewriteOptions& options = {});

}  // namespace artinkms
