#include "artinkms/word_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "artinkms/error.hpp"

namespace artinkms {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter c : w) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}

std::string format_word(const MonoidPresentation& presentation, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += '.';
    out += presentation.generators()[w[i]];
  }
  return out;
}

std::string format_word_or_e(const MonoidPresentation& presentation, const Word& w) {
  return w.empty() ? std::string("e") : format_word(presentation, w);
}

Word parse_word(const MonoidPresentation& presentation, std::string_view text) {
  Word w;
  if (text.empty()) return w;
  std::size_t start = 0;
  while (true) {
    auto dot              = text.find('.', start);
    std::string_view name = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    auto letter           = presentation.find_generator(name);
    if (!letter) throw Error(ErrorKind::MalformedInput, "unknown generator '" + std::string(name) + "'");
    w.push_back(*letter);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

WordEngine::WordEngine(MonoidPresentation presentation, std::size_t class_cap)
    : presentation_(std::move(presentation)), class_cap_(class_cap) {}

EquivClass WordEngine::equivalence_class(const Word& w) const {
  for (Letter c : w) {
    if (c >= rank()) throw Error(ErrorKind::MalformedInput, "letter out of range");
  }
  const auto& m = presentation_.matrix();
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      Letter s = current[i], t = current[i + 1];
      if (s == t) continue;
      unsigned len = m(s, t);
      if (len == kInfinity || i + len > current.size()) continue;
      bool match = true;
      for (unsigned k = 2; k < len && match; ++k) match = current[i + k] == (k % 2 == 0 ? s : t);
      if (!match) continue;
      Word next = current;
      for (unsigned k = 0; k < len; ++k) next[i + k] = (k % 2 == 0 ? t : s);
      if (seen.insert(next).second) {
        if (seen.size() > class_cap_) {
          throw Error(ErrorKind::CapExceeded,
                      "equivalence class exceeds cap " + std::to_string(class_cap_) + " at length "
                          + std::to_string(w.size()));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  EquivClass result;
  result.members.assign(seen.begin(), seen.end());
  std::sort(result.members.begin(), result.members.end());
  result.representative = result.members.front();
  for (const auto& member : result.members) {
    if (member.size() != w.size()) throw Error(ErrorKind::Defect, "relation changed word length");
  }
  return result;
}

std::shared_ptr<const EquivClass> WordEngine::class_of(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    auto it = canonical_cache_.find(w);
    if (it != canonical_cache_.end()) {
      auto found = class_cache_.find(it->second);
      if (found != class_cache_.end()) return found->second;
    }
  }
  auto cls = std::make_shared<const EquivClass>(equivalence_class(w));
  std::lock_guard lock(mutex_);
  for (const auto& member : cls->members) canonical_cache_.emplace(member, cls->representative);
  return class_cache_.emplace(cls->representative, cls).first->second;
}

Word WordEngine::canonical(const Word& w) const {
  if (w.size() < 2) return w;
  {
    std::lock_guard lock(mutex_);
    auto it = canonical_cache_.find(w);
    if (it != canonical_cache_.end()) return it->second;
  }
  return class_of(w)->representative;
}

bool WordEngine::equal(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return false;
  if (u == v) return true;
  return canonical(u) == canonical(v);
}

bool WordEngine::left_divides(const Word& p, const Word& q) const {
  return left_quotient(p, q).has_value();
}

std::optional<Word> WordEngine::left_quotient(const Word& p, const Word& q) const {
  if (p.size() > q.size()) return std::nullopt;
  if (p.empty()) return canonical(q);
  const Word target = canonical(p);
  std::set<Word> prefixes_tried;
  for (const auto& member : class_of(q)->members) {
    Word prefix(member.begin(), member.begin() + static_cast<std::ptrdiff_t>(p.size()));
    if (!prefixes_tried.insert(prefix).second) continue;
    if (canonical(prefix) == target) {
      return canonical(Word(member.begin() + static_cast<std::ptrdiff_t>(p.size()), member.end()));
    }
  }
  return std::nullopt;
}

std::vector<Letter> WordEngine::left_atoms(const Word& w) const {
  std::set<Letter> firsts;
  for (const auto& member : class_of(w)->members) {
    if (!member.empty()) firsts.insert(member.front());
  }
  return {firsts.begin(), firsts.end()};
}

std::vector<Word> WordEngine::ball(std::size_t radius, std::size_t cap) const {
  return Ball(*this, radius, cap).elements();
}

std::vector<std::size_t> WordEngine::growth_coefficients(std::size_t radius, std::size_t cap) const {
  Ball b(*this, radius, cap);
  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k <= radius; ++k) counts.push_back(b.layer_starts()[k + 1] - b.layer_starts()[k]);
  return counts;
}

std::size_t WordEngine::cache_size() const {
  std::lock_guard lock(mutex_);
  return canonical_cache_.size();
}

Ball::Ball(const WordEngine& engine, std::size_t radius, std::size_t cap)
    : engine_(&engine), radius_(radius), rank_(engine.rank()) {
  elements_.push_back(Word{});
  index_.emplace(Word{}, 0);
  layer_starts_ = {0, 1};
  for (std::size_t len = 1; len <= radius; ++len) {
    std::set<Word> layer;
    for (std::size_t id = layer_starts_[len - 1]; id < layer_starts_[len]; ++id) {
      for (std::size_t s = 0; s < rank_; ++s) {
        Word w = elements_[id];
        w.push_back(static_cast<Letter>(s));
        layer.insert(engine.canonical(w));
      }
    }
    if (elements_.size() + layer.size() > cap) {
      throw Error(ErrorKind::CapExceeded, "ball of radius " + std::to_string(radius) + " exceeds "
                                              + std::to_string(cap) + " elements");
    }
    for (const auto& w : layer) {
      index_.emplace(w, elements_.size());
      elements_.push_back(w);
    }
    layer_starts_.push_back(elements_.size());
  }
  next_.assign(elements_.size() * rank_, npos);
  for (std::size_t id = 0; id < layer_starts_[radius]; ++id) {
    for (std::size_t s = 0; s < rank_; ++s) {
      Word w = elements_[id];
      w.push_back(static_cast<Letter>(s));
      next_[id * rank_ + s] = index_.at(engine.canonical(w));
    }
  }
}

std::size_t Ball::find(const Word& w) const {
  if (w.size() > radius_) return npos;
  auto it = index_.find(engine_->canonical(w));
  return it == index_.end() ? npos : it->second;
}

}  // namespace artinkms
