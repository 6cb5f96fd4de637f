// Lists lambda: {1..n} -> P u {inf}, the lambda1/lambda2 splitting step, the
// binary tree it generates, and the scalar Z-polynomial
//
//   Z(lambda)(t) = sum over U of (-1)^|U| t^length(v lambda(U)),
//
// with U ranging over index subsets and terms with v lambda(U) = inf dropped.
// For any splitting at an atom p the identity Z(lambda) = Z(lambda1) +
// t^length(p) Z(lambda2) holds.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "artinkms/polynomial.hpp"
#include "artinkms/reversing.hpp"
#include "artinkms/word_engine.hpp"

namespace artinkms {

// nullopt is inf.
using Entry = std::optional<Word>;

struct LambdaList {
  std::vector<Entry> entries;

  bool operator==(const LambdaList&) const = default;
};

// "s1.s2,inf,e"
LambdaList  parse_list(const MonoidPresentation& presentation, std::string_view text);
std::string format_list(const MonoidPresentation& presentation, const LambdaList& list);

// Entries replaced by canonical words.
LambdaList canonical_list(const WordEngine& engine, const LambdaList& list);

// All entries are generators or inf, or some entry is e.
bool is_leaf(const LambdaList& list);

// Picks the atom p <= entry to split off; `entry` is canonical, of length >= 2.
using AtomChooser = std::function<Letter(const WordEngine& engine, const Word& entry)>;

// First letter of the canonical word.
AtomChooser first_letter_chooser();

// Uniformly random left divisor of length one, drawn from `rng`.
AtomChooser random_atom_chooser(std::mt19937_64& rng);

struct StepResult {
  std::size_t index = 0;  // position that was split
  Letter      atom  = 0;  // p
  LambdaList  lambda1;
  LambdaList  lambda2;
};

// Splits the first entry of length >= 2 as p q with p an atom; lambda1 puts p
// in its place, lambda2 maps every entry x to p\x (inf when p v x is).
// Throws LeafInput, Inconclusive.
StepResult step(const WordEngine& engine, const LambdaList& list, const AtomChooser& chooser = first_letter_chooser(),
                std::size_t step_cap = kDefaultStepCap);

enum class TreeStatus { Finite, Inconclusive };

struct TreeReport {
  TreeStatus  status     = TreeStatus::Finite;
  std::size_t node_count = 0;
  std::size_t leaf_count = 0;
  std::size_t max_depth  = 0;
  std::string witness_branch;  // sequence of '1'/'2' to the node where a cap was hit

  bool finite() const noexcept { return status == TreeStatus::Finite; }
};

inline constexpr std::size_t kDefaultDepthCap = 10000;
inline constexpr std::size_t kDefaultNodeCap  = 1000000;

TreeReport build_tree(const WordEngine& engine, const LambdaList& root, std::size_t depth_cap = kDefaultDepthCap,
                      std::size_t node_cap = kDefaultNodeCap);

// Throws Inconclusive if reversing runs out of steps.
IntPolynomial z_poly(const WordEngine& engine, const LambdaList& list, std::size_t step_cap = kDefaultStepCap);

// Drops every entry that is a right multiple of another entry; among equal
// entries the first is kept.  inf entries are left alone.
LambdaList remove_dominated(const WordEngine& engine, const LambdaList& list);

}  // namespace artinkms
