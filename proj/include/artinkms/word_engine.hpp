// Word problem in Artin monoids by brute-force closure.
//
// The defining relations preserve length, so the set of words representing a
// given element is finite; it is computed by breadth-first application of
// single relation substitutions.  Everything else in this header (equality,
// left divisibility, balls) is decided from those classes and is used across
// the project as the independent oracle for the reversing-based routines.

#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artinkms/presentation.hpp"

namespace artinkms {

inline constexpr std::size_t kDefaultClassCap = 100000;
inline constexpr std::size_t kDefaultBallCap  = 1000000;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Generator names joined by "."; the empty string is the identity.
std::string format_word(const MonoidPresentation& presentation, const Word& w);
Word        parse_word(const MonoidPresentation& presentation, std::string_view text);

std::string format_word_or_e(const MonoidPresentation& presentation, const Word& w);

Word concat(const Word& a, const Word& b);

struct EquivClass {
  Word              representative;  // lexicographically least member
  std::vector<Word> members;         // sorted
};

class WordEngine {
 public:
  explicit WordEngine(MonoidPresentation presentation, std::size_t class_cap = kDefaultClassCap);

  WordEngine(const WordEngine&)            = delete;
  WordEngine& operator=(const WordEngine&) = delete;

  const MonoidPresentation& presentation() const noexcept { return presentation_; }
  std::size_t               rank() const noexcept { return presentation_.rank(); }
  std::size_t               class_cap() const noexcept { return class_cap_; }

  // Throws CapExceeded when the class has more than class_cap() members.
  EquivClass equivalence_class(const Word& w) const;

  // Memoised equivalence_class(), shared between callers.
  std::shared_ptr<const EquivClass> class_of(const Word& w) const;

  // Lexicographically least word equal to w (memoised).
  Word canonical(const Word& w) const;

  bool equal(const Word& u, const Word& v) const;

  // p <= q, i.e. q = p r for some r.
  bool left_divides(const Word& p, const Word& q) const;

  // Canonical r with p r = q, if p <= q.
  std::optional<Word> left_quotient(const Word& p, const Word& q) const;

  // Generators s with s <= w, ascending.
  std::vector<Letter> left_atoms(const Word& w) const;

  // Canonical representatives of all elements of length <= radius, ordered by
  // length and then lexicographically.  Throws CapExceeded past `cap`.
  std::vector<Word> ball(std::size_t radius, std::size_t cap = kDefaultBallCap) const;

  // Number of elements of each length 0..radius.
  std::vector<std::size_t> growth_coefficients(std::size_t radius, std::size_t cap = kDefaultBallCap) const;

  std::size_t cache_size() const;

 private:
  MonoidPresentation presentation_;
  std::size_t        class_cap_;

  mutable std::mutex                               mutex_;
  mutable std::unordered_map<Word, Word, WordHash> canonical_cache_;
  mutable std::unordered_map<Word, std::shared_ptr<const EquivClass>, WordHash> class_cache_;  // by representative
};

// Elements of length <= radius with their right Cayley graph.  Element ids are
// ordered by length, then lexicographically by canonical representative.
class Ball {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Ball(const WordEngine& engine, std::size_t radius, std::size_t cap = kDefaultBallCap);

  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t rank() const noexcept { return rank_; }

  const Word& element(std::size_t id) const { return elements_[id]; }
  std::size_t length(std::size_t id) const { return elements_[id].size(); }

  // Id of the element represented by w, or npos if it lies outside the ball.
  std::size_t find(const Word& w) const;

  // Id of element(id) * s, or npos when that has length > radius.
  std::size_t right_multiply(std::size_t id, Letter s) const { return next_[id * rank_ + s]; }

  // First id of each length 0..radius, plus size() as a sentinel.
  const std::vector<std::size_t>& layer_starts() const noexcept { return layer_starts_; }

  const std::vector<Word>& elements() const noexcept { return elements_; }

 private:
  const WordEngine*                                   engine_;
  std::size_t                                         radius_;
  std::size_t                                         rank_;
  std::vector<Word>                                   elements_;
  std::vector<std::size_t>                            next_;
  std::vector<std::size_t>                            layer_starts_;
  std::unordered_map<Word, std::size_t, WordHash>     index_;
};

}  // namespace artinkms
