#include "artinkms/kms_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>

#include "artinkms/error.hpp"
#include "artinkms/reversing.hpp"

namespace artinkms {

std::string_view to_string(Family family) noexcept {
  return family == Family::Atoms ? "atoms" : "pinf";
}

Family parse_family(std::string_view text) {
  if (text == "atoms") return Family::Atoms;
  if (text == "pinf") return Family::Pinf;
  throw Error(ErrorKind::MalformedInput, "family must be 'atoms' or 'pinf', got '" + std::string(text) + "'");
}

std::vector<Word> family_elements(const WordEngine& engine, const KmsOptions& options) {
  std::vector<Word> members;
  if (options.family == Family::Atoms) {
    if (!options.force && !atom_reduction_guaranteed(engine.presentation().matrix())) {
      throw Error(ErrorKind::GuaranteeUnavailable,
                  "no reduction theorem covers this presentation; use the pinf family or force");
    }
    for (std::size_t s = 0; s < engine.rank(); ++s) members.push_back(Word{static_cast<Letter>(s)});
  } else {
    PinfSet p = pinf(engine, options.pinf_iterations);
    if (!p.saturated) {
      throw Error(ErrorKind::UnsaturatedPinf,
                  "P_inf closure did not saturate within " + std::to_string(options.pinf_iterations) + " rounds");
    }
    members = std::move(p.elements);
  }
  if (members.size() > kMaxFamilySize
      || (options.family == Family::Pinf && members.size() > options.max_family_size)) {
    throw Error(ErrorKind::TooLarge, "family has " + std::to_string(members.size())
                                         + " elements; all subsets would be enumerated");
  }
  return members;
}

namespace {

constexpr std::int16_t kNoLcm = -1;

// length(vK) for every K within the family, by bitmask; kNoLcm for non-cliques.
std::vector<std::int16_t> subset_lengths(const WordEngine& engine, const std::vector<Word>& family, Family kind) {
  const auto& matrix = engine.presentation().matrix();
  const std::size_t n = family.size();
  std::vector<std::int16_t> len(std::size_t{1} << n, kNoLcm);
  len[0] = 0;

  struct Frame {
    std::size_t mask;
    Word        lcm;
    std::size_t from;
  };
  std::vector<Frame> stack{{0, Word{}, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (std::size_t k = f.from; k < n; ++k) {
      std::size_t mask = f.mask | (std::size_t{1} << k);
      LcmResult r      = reverse(matrix, f.lcm, family[k],
                                 kind == Family::Atoms ? kCliqueCheckSteps : kDefaultStepCap);
      if (r.tag == LcmTag::Inconclusive) {
        if (kind == Family::Atoms) {
          std::vector<Letter> letters;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) letters.push_back(family[i].front());
          }
          if (!is_finite_type(matrix.restrict_to(letters))) continue;
          throw Error(ErrorKind::Defect, "reversing did not finish on a finite-type subset");
        }
        throw Error(ErrorKind::Inconclusive, "reversing exceeded its step cap");
      }
      if (r.tag == LcmTag::NoCommonMultiple) continue;
      len[mask] = static_cast<std::int16_t>(r.lcm.size());
      stack.push_back({mask, std::move(r.lcm), k + 1});
    }
  }
  return len;
}

std::vector<Word> subset_of(const std::vector<Word>& family, std::size_t mask) {
  std::vector<Word> J;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (mask >> i & 1U) J.push_back(family[i]);
  }
  return J;
}

}  // namespace

std::vector<GoverningPolynomial> governing_polynomials(const WordEngine& engine, const std::vector<Word>& family,
                                                       Family kind) {
  const std::size_t n = family.size();
  if (n > kMaxFamilySize) throw Error(ErrorKind::TooLarge, "family too large to enumerate");
  if (n == 0) return {};
  const std::size_t total = std::size_t{1} << n;
  auto len                = subset_lengths(engine, family, kind);
  std::size_t degree      = 0;
  for (auto l : len) degree = std::max<std::size_t>(degree, l < 0 ? 0 : static_cast<std::size_t>(l));
  const std::size_t width = degree + 1;

  // coefficient d of g_J is the sum over cliques K within J with length(vK) = d of
  // (-1)^|K|: a subset-sum (zeta) transform per degree.
  std::vector<std::int32_t> coeffs(total * width, 0);
  std::vector<std::int32_t> layer(total);
  for (std::size_t d = 0; d < width; ++d) {
    for (std::size_t m = 0; m < total; ++m) {
      layer[m] = len[m] == static_cast<std::int16_t>(d) ? (std::popcount(m) % 2 == 0 ? 1 : -1) : 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      for (std::size_t m = 0; m < total; ++m) {
        if (m & bit) layer[m] += layer[m ^ bit];
      }
    }
    for (std::size_t m = 0; m < total; ++m) coeffs[m * width + d] = layer[m];
  }

  std::map<std::vector<std::int32_t>, std::size_t> index;
  std::vector<GoverningPolynomial> out;
  for (std::size_t m = 1; m < total; ++m) {
    std::vector<std::int32_t> key(coeffs.begin() + static_cast<std::ptrdiff_t>(m * width),
                                  coeffs.begin() + static_cast<std::ptrdiff_t>((m + 1) * width));
    auto [it, inserted] = index.emplace(std::move(key), out.size());
    if (inserted) {
      std::vector<BigInt> c(it->first.begin(), it->first.end());
      out.push_back({IntPolynomial(std::move(c)), subset_of(family, m), m, 0});
    }
    ++out[it->second].subsets;
  }
  return out;
}

namespace {

int sign_of(const Rational& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

// Exact sign of g at the unique root of `combined` inside root's interval.
// Every root of g is a root of `combined`, so g has at most that root there.
int sign_at_root(const IntPolynomial& g, const SturmChain& chain, const RootInterval& root) {
  if (root.exact) return sign_at(g, root.hi);
  if (chain.polynomial().degree() >= 1 && chain.count(root.lo, root.hi) == 1) return 0;
  return sign_at(g, root.hi);
}

double beta_of(const RootInterval& root) {
  if (root.exact && root.hi == 1) return 0.0;
  return -std::log(root.approx);
}

BetaEndpoint endpoint_at_root(const RootStatus& root, bool closed) {
  BetaEndpoint e;
  e.beta   = root.beta;
  e.closed = closed;
  e.t_root = root.t;
  return e;
}

}  // namespace

TemperatureSpace temperature_space(const WordEngine& engine, const KmsOptions& options) {
  if (!engine.presentation().uniform_weights()) {
    throw Error(ErrorKind::NonUniformWeights, "root isolation needs uniform weights; use kms eval instead");
  }
  TemperatureSpace space;
  space.family         = options.family;
  space.family_members = family_elements(engine, options);
  space.polynomials    = governing_polynomials(engine, space.family_members, options.family);

  std::vector<SturmChain> chains;
  space.combined = IntPolynomial({BigInt(1)});
  for (const auto& gp : space.polynomials) {
    chains.emplace_back(gp.g);
    if (gp.g.degree() >= 1) space.combined = square_free_lcm(space.combined, chains.back().polynomial());
  }

  std::vector<RootInterval> roots;
  if (space.combined.degree() >= 1) {
    roots = isolate_roots(space.combined, Rational(0), cauchy_bound(space.combined));
  }

  // Rational samples strictly between consecutive roots.
  const std::size_t k = roots.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Rational width = kDefaultRootWidth;
    while (!(roots[i].hi < roots[i + 1].lo)) {
      width /= 2;
      refine(roots[i + 1], width);
    }
  }
  if (k > 0) {
    Rational width = kDefaultRootWidth;
    while (roots[0].lo == 0) {
      width /= 2;
      refine(roots[0], width);
    }
  }
  std::vector<Rational> samples;
  for (std::size_t i = 0; i <= k; ++i) {
    if (k == 0) {
      samples.emplace_back(1);
    } else if (i == 0) {
      samples.push_back(simplest_between(Rational(0), roots[0].lo));
    } else if (i == k) {
      samples.push_back(simplest_between(roots[k - 1].hi, roots[k - 1].hi + 2));
    } else {
      samples.push_back(simplest_between(roots[i - 1].hi, roots[i].lo));
    }
  }

  for (const auto& t : samples) {
    TemperatureSpace::Piece piece{t, true, std::nullopt};
    for (std::size_t j = 0; j < space.polynomials.size(); ++j) {
      if (sign_of(space.polynomials[j].g.evaluate(t)) < 0) {
        piece.feasible = false;
        piece.witness  = j;
        break;
      }
    }
    space.pieces.push_back(std::move(piece));
  }
  for (auto& r : roots) {
    RootStatus status;
    status.beta     = beta_of(r);
    status.included = true;
    for (std::size_t j = 0; j < space.polynomials.size(); ++j) {
      if (sign_at_root(space.polynomials[j].g, chains[j], r) < 0) {
        status.included = false;
        status.witness  = j;
        break;
      }
    }
    status.t = std::move(r);
    space.roots.push_back(std::move(status));
  }

  // Merge feasible runs of items (piece 0, root 0, piece 1, ..., piece k).
  auto feasible = [&](std::size_t item) {
    return item % 2 == 0 ? space.pieces[item / 2].feasible : space.roots[item / 2].included;
  };
  const std::size_t items = 2 * k + 1;
  for (std::size_t a = 0; a < items;) {
    if (!feasible(a)) {
      ++a;
      continue;
    }
    std::size_t b = a;
    while (b + 1 < items && feasible(b + 1)) ++b;
    BetaComponent c;
    c.first_item = a;
    c.last_item  = b;
    // Low t is high beta.
    if (a == 0) {
      c.upper.infinite = true;
      c.upper.closed   = true;
      c.upper.beta     = HUGE_VAL;
    } else if (a % 2 == 1) {
      c.upper = endpoint_at_root(space.roots[a / 2], true);
    } else {
      c.upper = endpoint_at_root(space.roots[a / 2 - 1], false);
    }
    if (b == items - 1) {
      c.lower.infinite = true;
      c.lower.beta     = -HUGE_VAL;
    } else if (b % 2 == 1) {
      c.lower = endpoint_at_root(space.roots[b / 2], true);
    } else {
      c.lower = endpoint_at_root(space.roots[b / 2], false);
    }
    c.point = a == b && a % 2 == 1;
    space.components.push_back(std::move(c));
    a = b + 1;
  }
  std::reverse(space.components.begin(), space.components.end());
  space.includes_plus_infinity = space.pieces.front().feasible;
  space.contains_zero          = true;
  for (const auto& gp : space.polynomials) {
    if (gp.g.evaluate(Rational(1)) < 0) space.contains_zero = false;
  }
  return space;
}

GapReport detect_gap(const TemperatureSpace& space) {
  GapReport report;
  for (std::size_t c = 0; c + 1 < space.components.size(); ++c) {
    const auto& low  = space.components[c];      // smaller beta, larger t
    const auto& high = space.components[c + 1];
    Gap gap;
    gap.lower = low.upper;
    gap.upper = high.lower;
    // Every open t-piece strictly between the two components fails somewhere.
    for (std::size_t item = high.last_item + 1; item < low.first_item; ++item) {
      if (item % 2 != 0) continue;
      const auto& piece = space.pieces[item / 2];
      if (piece.feasible) throw Error(ErrorKind::Defect, "feasible piece inside a gap");
      const auto& gp = space.polynomials[*piece.witness];
      gap.witnesses.push_back({gp.first_J, piece.sample, gp.g.evaluate(piece.sample)});
    }
    // Witnesses come out ascending in t, i.e. descending in beta.
    std::reverse(gap.witnesses.begin(), gap.witnesses.end());
    if (gap.witnesses.empty()) throw Error(ErrorKind::Defect, "gap without a failing sample");
    report.gaps.push_back(std::move(gap));
  }
  report.has_gap = !report.gaps.empty();
  return report;
}

GapReport detect_gap(const WordEngine& engine, const KmsOptions& options) {
  return detect_gap(temperature_space(engine, options));
}

namespace {

// Calls visit(lcm word, |K|) for every nonempty clique K within J.
template <typename Visit>
void for_each_clique(const CoxeterMatrix& matrix, const std::vector<Word>& J, const Word& current, std::size_t size,
                     std::size_t from, Visit& visit) {
  for (std::size_t k = from; k < J.size(); ++k) {
    LcmResult r = reverse(matrix, current, J[k]);
    if (r.tag == LcmTag::NoCommonMultiple) continue;
    if (r.tag == LcmTag::Inconclusive) throw Error(ErrorKind::Inconclusive, "reversing exceeded its step cap");
    visit(r.lcm, size + 1);
    for_each_clique(matrix, J, r.lcm, size + 1, k + 1, visit);
  }
}

}  // namespace

PositivityReport evaluate_positivity(const WordEngine& engine, const EvalPoint& point, const KmsOptions& options,
                                     const std::optional<std::vector<std::vector<Word>>>& Js) {
  std::vector<std::vector<Word>> sets;
  if (Js) {
    sets = *Js;
  } else {
    KmsOptions unguarded = options;
    unguarded.force      = true;  // point values need no reduction theorem
    auto family          = family_elements(engine, unguarded);
    for (std::size_t m = 1; m < (std::size_t{1} << family.size()); ++m) sets.push_back(subset_of(family, m));
  }
  const auto& presentation = engine.presentation();
  const bool exact         = presentation.uniform_weights() && std::holds_alternative<Rational>(point);
  if (const auto* t = std::get_if<Rational>(&point); t && *t <= 0) {
    throw Error(ErrorKind::MalformedInput, "t must be positive");
  }
  const double beta = std::holds_alternative<double>(point) ? std::get<double>(point)
                                                           : -std::log(to_double(std::get<Rational>(point)));
  std::vector<double> log_weight(engine.rank(), 1.0);
  if (presentation.weights()) {
    for (std::size_t s = 0; s < engine.rank(); ++s) log_weight[s] = std::log(to_double((*presentation.weights())[s]));
  }

  PositivityReport report;
  for (auto& J : sets) {
    PositivityEntry entry;
    for (const auto& w : J) {
      if (w.empty()) throw Error(ErrorKind::IdentityEntry, "g_J is defined for nonidentity elements only");
    }
    if (exact) {
      Rational value = subset_polynomial(engine, J).evaluate(std::get<Rational>(point));
      entry.exact    = value;
      entry.approx   = to_double(value);
      entry.nonnegative = value >= 0;
    } else {
      double sum  = 1.0;
      auto visit  = [&](const Word& lcm, std::size_t size) {
        double exponent = 0.0;
        for (Letter s : lcm) exponent += log_weight[s];
        sum += (size % 2 == 0 ? 1.0 : -1.0) * std::exp(-beta * exponent);
      };
      std::vector<Word> distinct;
      for (const auto& w : J) distinct.push_back(engine.canonical(w));
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for_each_clique(presentation.matrix(), distinct, Word{}, 0, 0, visit);
      entry.approx      = sum;
      entry.nonnegative = sum >= 0;
    }
    report.all_nonnegative = report.all_nonnegative && entry.nonnegative;
    entry.J                = std::move(J);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

CriticalBeta critical_beta(const WordEngine& engine) {
  IntPolynomial h = clique_polynomial(engine);
  if (h.degree() < 1) throw Error(ErrorKind::NoPositiveRoot, "the clique polynomial is constant");
  auto roots = isolate_roots(h, Rational(0), cauchy_bound(h));
  if (roots.empty()) throw Error(ErrorKind::NoPositiveRoot, "the clique polynomial has no positive root");
  CriticalBeta out{roots.front(), beta_of(roots.front())};
  return out;
}

Rational mu_cell(const WordEngine& engine, const Word& p, const std::vector<Word>& K, const Rational& t) {
  for (const auto& k : K) {
    if (k.empty()) return Rational(0);
  }
  Rational g = K.empty() ? Rational(1) : subset_polynomial(engine, K).evaluate(t);
  return pow(t, static_cast<unsigned>(p.size())) * g;
}

}  // namespace artinkms
