#include "artinkms/reversing.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "artinkms/error.hpp"

namespace artinkms {

std::optional<Word> atom_complement(const CoxeterMatrix& matrix, Letter s, Letter t) {
  if (s == t) return Word{};
  unsigned m = matrix(s, t);
  if (m == kInfinity) return std::nullopt;
  return alternating(t, s, m - 1);
}

namespace {

// Signed letters: +(s+1) for s, -(s+1) for s^{-1}.
using Signed = std::int16_t;

Signed pos(Letter s) { return static_cast<Signed>(s + 1); }
Signed neg(Letter s) { return static_cast<Signed>(-(s + 1)); }
Letter letter_of(Signed x) { return static_cast<Letter>((x < 0 ? -x : x) - 1); }

}  // namespace

LcmResult reverse(const CoxeterMatrix& matrix, const Word& p, const Word& q, std::size_t step_cap) {
  LcmResult result;
  // p^{-1} q, reversed into (p\q)(q\p)^{-1}.  The word is split at the
  // cursor into a left stack and a right stack (top = next letter), so each
  // step costs O(1) even when the word grows.
  std::vector<Signed> w;
  std::vector<Signed> right;
  w.reserve(p.size() + q.size());
  right.reserve(q.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it) w.push_back(neg(*it));
  for (auto it = q.rbegin(); it != q.rend(); ++it) right.push_back(pos(*it));

  std::size_t steps = 0;
  while (!right.empty()) {
    if (w.empty() || !(w.back() < 0 && right.back() > 0)) {
      w.push_back(right.back());
      right.pop_back();
      continue;
    }
    if (steps == step_cap) {
      result.tag        = LcmTag::Inconclusive;
      result.steps_used = steps;
      return result;
    }
    ++steps;
    Letter s = letter_of(w.back());
    Letter t = letter_of(right.back());
    w.pop_back();
    right.pop_back();
    if (s != t) {
      auto st = atom_complement(matrix, s, t);
      if (!st) {
        result.tag        = LcmTag::NoCommonMultiple;
        result.steps_used = steps;
        return result;
      }
      auto ts = *atom_complement(matrix, t, s);
      // Pushed so that st comes first, followed by ts^{-1}.
      for (Letter c : ts) right.push_back(neg(c));
      for (auto it = st->rbegin(); it != st->rend(); ++it) right.push_back(pos(*it));
    }
    // Everything below the new top of w is already (positive)(negative).
    if (!w.empty()) {
      right.push_back(w.back());
      w.pop_back();
    }
  }
  result.tag        = LcmTag::Lcm;
  result.steps_used = steps;
  for (Signed x : w) {
    if (x > 0) result.comp_left.push_back(letter_of(x));
  }
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 0) result.comp_right.push_back(letter_of(*it));
  }
  result.lcm = concat(p, result.comp_left);
  return result;
}

LcmResult lcm(const WordEngine& engine, const Word& p, const Word& q, std::size_t step_cap) {
  LcmResult r = reverse(engine.presentation().matrix(), p, q, step_cap);
  if (r.found()) {
    r.lcm        = engine.canonical(r.lcm);
    r.comp_left  = engine.canonical(r.comp_left);
    r.comp_right = engine.canonical(r.comp_right);
  }
  return r;
}

LcmResult lcm_set(const WordEngine& engine, std::span<const Word> elements, std::size_t step_cap) {
  if (elements.empty()) throw Error(ErrorKind::MalformedInput, "lcm_set needs a nonempty list");
  const auto& matrix = engine.presentation().matrix();
  LcmResult acc;
  acc.tag        = LcmTag::Lcm;
  acc.lcm        = elements.front();
  std::size_t steps = 0;
  for (std::size_t k = 1; k < elements.size(); ++k) {
    LcmResult r = reverse(matrix, acc.lcm, elements[k], step_cap - std::min(step_cap, steps));
    steps += r.steps_used;
    if (!r.found()) {
      r.steps_used = steps;
      return r;
    }
    acc.comp_left.insert(acc.comp_left.end(), r.comp_left.begin(), r.comp_left.end());
    acc.lcm        = r.lcm;
    acc.comp_right = r.comp_right;
  }
  if (elements.size() == 1) acc.comp_right.clear();
  acc.steps_used = steps;
  acc.lcm        = engine.canonical(acc.lcm);
  acc.comp_left  = engine.canonical(acc.comp_left);
  acc.comp_right = engine.canonical(acc.comp_right);
  return acc;
}

LcmResult oracle_lcm(const WordEngine& engine, const Word& p, const Word& q, std::size_t length_cap) {
  LcmResult result;
  std::set<Word> frontier{engine.canonical(p)};
  for (std::size_t len = p.size(); len <= length_cap; ++len) {
    if (len >= q.size()) {
      std::vector<Word> common;
      for (const auto& m : frontier) {
        if (engine.left_divides(q, m)) common.push_back(m);
      }
      if (common.size() > 1) {
        throw Error(ErrorKind::Defect, "two shortest common multiples found; right LCMs are not unique");
      }
      if (common.size() == 1) {
        result.tag        = LcmTag::Lcm;
        result.lcm        = common.front();
        result.comp_left  = *engine.left_quotient(p, result.lcm);
        result.comp_right = *engine.left_quotient(q, result.lcm);
        return result;
      }
    }
    if (len == length_cap) break;
    std::set<Word> next;
    for (const auto& m : frontier) {
      for (std::size_t s = 0; s < engine.rank(); ++s) {
        Word w = m;
        w.push_back(static_cast<Letter>(s));
        next.insert(engine.canonical(w));
      }
    }
    frontier = std::move(next);
  }
  result.tag = LcmTag::Inconclusive;
  return result;
}

MultiplesTable::MultiplesTable(const Ball& ball, std::vector<std::size_t> sources)
    : ball_(&ball), sources_(std::move(sources)) {
  multiples_.reserve(sources_.size());
  for (std::size_t id : sources_) multiples_.push_back(multiples_of(id));
}

MultiplesTable::Bits MultiplesTable::multiples_of(std::size_t id) const {
  Bits bits((ball_->size() + 63) / 64, 0);
  std::vector<std::size_t> stack{id};
  bits[id / 64] |= std::uint64_t{1} << (id % 64);
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    if (ball_->length(x) == ball_->radius()) continue;
    for (std::size_t s = 0; s < ball_->rank(); ++s) {
      std::size_t y = ball_->right_multiply(x, static_cast<Letter>(s));
      if (y == Ball::npos) continue;
      auto mask = std::uint64_t{1} << (y % 64);
      if ((bits[y / 64] & mask) == 0) {
        bits[y / 64] |= mask;
        stack.push_back(y);
      }
    }
  }
  return bits;
}

std::size_t MultiplesTable::shortest_common_multiple(std::size_t i, std::size_t j) const {
  const Bits& a = multiples_[i];
  const Bits& b = multiples_[j];
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::uint64_t both = a[k] & b[k];
    if (both == 0) continue;
    std::size_t id  = k * 64 + static_cast<std::size_t>(std::countr_zero(both));
    std::size_t len = ball_->length(id);
    std::size_t end = ball_->layer_starts()[len + 1];
    // Any second common multiple of the same length contradicts uniqueness.
    for (std::size_t other = id + 1; other < end; ++other) {
      if ((a[other / 64] & b[other / 64]) >> (other % 64) & 1U) {
        throw Error(ErrorKind::Defect, "two shortest common multiples in the ball");
      }
    }
    return id;
  }
  return Ball::npos;
}

bool MultiplesTable::below_all_common_multiples(std::size_t i, std::size_t j, std::size_t candidate) const {
  auto it = extra_.find(candidate);
  if (it == extra_.end()) it = extra_.emplace(candidate, multiples_of(candidate)).first;
  const Bits& c = it->second;
  const Bits& a = multiples_[i];
  const Bits& b = multiples_[j];
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a[k] & b[k]) & ~c[k]) return false;
  }
  return true;
}

}  // namespace artinkms
