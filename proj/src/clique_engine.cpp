#include "artinkms/clique_engine.hpp"

#include <algorithm>
#include <set>

#include "artinkms/error.hpp"

namespace artinkms {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Clique> cliques_of(const WordEngine& engine, std::span<const Letter> J, std::size_t check_steps) {
  std::vector<Letter> gens(J.begin(), J.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Letter s : gens) {
    if (s >= engine.rank()) throw Error(ErrorKind::MalformedInput, "generator index out of range");
  }
  if (gens.size() >= 31) throw Error(ErrorKind::TooLarge, "too many generators to enumerate subsets");

  const auto& matrix = engine.presentation().matrix();
  std::vector<Clique> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::vector<Letter> subset;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (mask >> i & 1U) subset.push_back(gens[i]);
    }
    bool spherical = subset.empty() || is_finite_type(matrix.restrict_to(subset));
    if (subset.empty()) {
      out.push_back(Clique{});
      continue;
    }
    std::vector<Word> members;
    for (Letter s : subset) members.push_back(Word{s});
    LcmResult r = lcm_set(engine, members, check_steps);
    if (spherical && !r.found()) {
      throw Error(ErrorKind::Defect, "finite-type subset without a common multiple found by reversing");
    }
    if (!spherical && r.found()) {
      throw Error(ErrorKind::Defect, "reversing found a common multiple of a non-spherical subset");
    }
    if (!spherical) continue;
    std::size_t length = r.lcm.size();
    out.push_back(Clique{std::move(members), std::move(r.lcm), length});
  }
  return out;
}

IntPolynomial clique_polynomial(const WordEngine& engine) {
  if (!engine.presentation().uniform_weights()) {
    throw Error(ErrorKind::NonUniformWeights, "the clique polynomial needs uniform weights");
  }
  std::vector<Letter> all(engine.rank());
  for (std::size_t s = 0; s < all.size(); ++s) all[s] = static_cast<Letter>(s);
  std::vector<BigInt> c;
  for (const auto& k : cliques_of(engine, all)) {
    if (c.size() <= k.lcm_length) c.resize(k.lcm_length + 1, BigInt(0));
    c[k.lcm_length] += k.members.size() % 2 == 0 ? 1 : -1;
  }
  return IntPolynomial(std::move(c));
}

namespace {

struct SubsetWalker {
  const CoxeterMatrix&       matrix;
  const std::vector<Word>&   elements;
  std::size_t                step_cap;
  std::vector<BigInt>        coefficients;

  void add(std::size_t length, std::size_t size) {
    if (coefficients.size() <= length) coefficients.resize(length + 1, BigInt(0));
    coefficients[length] += size % 2 == 0 ? 1 : -1;
  }

  // Extends the clique with lcm `current` by elements after index `from`.
  void walk(const Word& current, std::size_t size, std::size_t from) {
    for (std::size_t k = from; k < elements.size(); ++k) {
      LcmResult r = reverse(matrix, current, elements[k], step_cap);
      if (r.tag == LcmTag::NoCommonMultiple) continue;  // no superset is a clique either
      if (r.tag == LcmTag::Inconclusive) {
        throw Error(ErrorKind::Inconclusive, "reversing exceeded its step cap");
      }
      add(r.lcm.size(), size + 1);
      walk(r.lcm, size + 1, k + 1);
    }
  }
};

}  // namespace

IntPolynomial subset_polynomial(const WordEngine& engine, std::span<const Word> J, std::size_t step_cap) {
  std::set<Word> distinct;
  for (const auto& w : J) {
    if (w.empty()) throw Error(ErrorKind::IdentityEntry, "g_J is defined for nonidentity elements only");
    distinct.insert(engine.canonical(w));
  }
  std::vector<Word> elements(distinct.begin(), distinct.end());
  SubsetWalker walker{engine.presentation().matrix(), elements, step_cap, {}};
  walker.add(0, 0);
  walker.walk(Word{}, 0, 0);
  return IntPolynomial(std::move(walker.coefficients));
}

PinfSet pinf(const WordEngine& engine, std::size_t iteration_cap, std::size_t element_cap, std::size_t step_cap) {
  const auto& matrix = engine.presentation().matrix();
  std::set<Word> known;
  std::vector<Word> frontier;
  for (std::size_t s = 0; s < engine.rank(); ++s) {
    Word w{static_cast<Letter>(s)};
    known.insert(w);
    frontier.push_back(w);
  }
  PinfSet result;
  result.saturated = true;
  while (!frontier.empty()) {
    if (result.iterations_used == iteration_cap || known.size() > element_cap) {
      result.saturated = false;
      break;
    }
    ++result.iterations_used;
    std::vector<Word> next;
    for (const auto& p : frontier) {
      for (std::size_t x = 0; x < engine.rank(); ++x) {
        LcmResult r = reverse(matrix, Word{static_cast<Letter>(x)}, p, step_cap);
        if (r.tag == LcmTag::NoCommonMultiple) continue;
        if (r.tag == LcmTag::Inconclusive) {
          result.saturated = false;
          continue;
        }
        if (r.comp_left.empty()) continue;
        Word c = engine.canonical(r.comp_left);
        if (known.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  result.elements.assign(known.begin(), known.end());
  std::sort(result.elements.begin(), result.elements.end(), shortlex_less);
  return result;
}

}  // namespace artinkms
