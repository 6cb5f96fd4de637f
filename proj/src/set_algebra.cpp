#include "artinkms/set_algebra.hpp"

#include <algorithm>
#include <set>

#include "artinkms/error.hpp"

namespace artinkms {

Cell normalize(const WordEngine& engine, Cell cell) {
  cell.prefix = engine.canonical(cell.prefix);
  std::set<Word> distinct;
  for (const auto& k : cell.blockers) {
    if (k.empty()) return Cell{cell.prefix, {Word{}}};
    distinct.insert(engine.canonical(k));
  }
  std::vector<Word> sorted(distinct.begin(), distinct.end());
  std::sort(sorted.begin(), sorted.end(), shortlex_less);
  std::vector<Word> kept;
  for (const auto& k : sorted) {
    // Only shorter (already kept) blockers can divide k properly.
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Word& j) {
      return j.size() < k.size() && engine.left_divides(j, k);
    });
    if (!redundant) kept.push_back(k);
  }
  cell.blockers = std::move(kept);
  return cell;
}

bool is_empty_cell(const Cell& cell) {
  return std::any_of(cell.blockers.begin(), cell.blockers.end(), [](const Word& k) { return k.empty(); });
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Word parse_word_or_e(const MonoidPresentation& presentation, std::string_view text) {
  text = trim(text);
  if (text == "e" && !presentation.find_generator("e")) return Word{};
  return parse_word(presentation, text);
}

}  // namespace

Cell parse_cell(const MonoidPresentation& presentation, std::string_view text) {
  Cell cell;
  auto bar            = text.find('|');
  cell.prefix         = parse_word_or_e(presentation, text.substr(0, bar));
  if (bar == std::string_view::npos) return cell;
  std::string_view rest = text.substr(bar + 1);
  if (trim(rest).empty()) return cell;
  std::size_t start = 0;
  while (true) {
    auto comma = rest.find(',', start);
    cell.blockers.push_back(parse_word_or_e(
        presentation, rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cell;
}

std::string format_cell(const MonoidPresentation& presentation, const Cell& cell) {
  std::string out = format_word_or_e(presentation, cell.prefix) + " |";
  for (std::size_t i = 0; i < cell.blockers.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += format_word_or_e(presentation, cell.blockers[i]);
  }
  return out;
}

bool member(const WordEngine& engine, const Word& w, const Cell& cell) {
  if (is_empty_cell(cell)) return false;
  auto rest = engine.left_quotient(cell.prefix, w);
  if (!rest) return false;
  for (const auto& k : cell.blockers) {
    if (engine.left_divides(k, *rest)) return false;
  }
  return true;
}

bool member(const WordEngine& engine, const Word& w, const SymbolicSet& set) {
  return std::any_of(set.begin(), set.end(), [&](const Cell& c) { return member(engine, w, c); });
}

SymbolicSet complement_principal(const WordEngine& engine, const Word& p) {
  if (p.empty()) throw Error(ErrorKind::IdentityArgument, "P \\ eP is empty; p must not be e");
  Word word = engine.canonical(p);
  SymbolicSet out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    out.push_back(Cell{Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i)), {Word{word[i]}}});
  }
  return out;
}

IntersectResult intersect_cells(const WordEngine& engine, const Cell& a, const Cell& b, std::size_t step_cap) {
  IntersectResult out;
  if (is_empty_cell(a) || is_empty_cell(b)) return out;
  const auto& matrix = engine.presentation().matrix();
  LcmResult r        = reverse(matrix, a.prefix, b.prefix, step_cap);
  if (r.tag == LcmTag::Inconclusive) {
    out.tag = IntersectTag::Inconclusive;
    return out;
  }
  if (r.tag == LcmTag::NoCommonMultiple) return out;
  Cell cell{r.lcm, {}};
  for (const Cell* c : {&a, &b}) {
    for (const auto& k : c->blockers) {
      // w in rP avoids p k P exactly when r\(p k) does not divide r^-1 w.
      LcmResult s = reverse(matrix, r.lcm, concat(c->prefix, k), step_cap);
      if (s.tag == LcmTag::Inconclusive) {
        out.tag = IntersectTag::Inconclusive;
        return out;
      }
      if (s.tag == LcmTag::NoCommonMultiple) continue;
      cell.blockers.push_back(s.comp_left);
    }
  }
  cell = normalize(engine, std::move(cell));
  if (is_empty_cell(cell)) return out;
  out.tag  = IntersectTag::Cell;
  out.cell = std::move(cell);
  return out;
}

std::string_view to_string(RewriteTarget target) noexcept {
  return target == RewriteTarget::Atoms ? "atoms" : "pinf";
}

RewriteTarget parse_target(std::string_view text) {
  if (text == "atoms") return RewriteTarget::Atoms;
  if (text == "pinf") return RewriteTarget::Pinf;
  throw Error(ErrorKind::MalformedInput, "target must be 'atoms' or 'pinf', got '" + std::string(text) + "'");
}

namespace {

class Rewriter {
 public:
  Rewriter(const WordEngine& engine, RewriteTarget target, const std::vector<Word>& pinf_set,
           const RewriteOptions& options)
      : engine_(engine), target_(target), pinf_(pinf_set.begin(), pinf_set.end()), options_(options) {}

  // Depth-first over an explicit stack, since a2tilde-like monoids can run
  // thousands of levels deep.  Appends cells to `out`; false when a cap was hit.
  bool run(std::vector<Word> blockers, const Word& prefix, SymbolicSet& out) {
    struct Task {
      std::vector<Word> blockers;
      std::size_t       depth;
      Word              prefix;
    };
    std::vector<Task> stack;
    stack.push_back({std::move(blockers), 0, prefix});
    while (!stack.empty()) {
      Task task = std::move(stack.back());
      stack.pop_back();
      ++nodes_;
      max_depth_ = std::max(max_depth_, task.depth);
      if (nodes_ > options_.node_cap || task.depth > options_.depth_cap) return false;
      Cell cell = normalize(engine_, Cell{Word{}, std::move(task.blockers)});
      if (is_empty_cell(cell)) continue;
      auto it = std::find_if(cell.blockers.begin(), cell.blockers.end(), [&](const Word& k) { return !in_target(k); });
      if (it == cell.blockers.end()) {
        out.push_back(normalize(engine_, Cell{std::move(task.prefix), std::move(cell.blockers)}));
        continue;
      }
      const Word q = *it;
      const Letter s = q.front();
      std::vector<Word> rest;
      for (const auto& k : cell.blockers) {
        if (k != q) rest.push_back(k);
      }

      // Elements s v with q' not dividing v and s\k not dividing v for the rest.
      std::vector<Word> second{Word(q.begin() + 1, q.end())};
      for (const auto& k : rest) {
        LcmResult r = reverse(engine_.presentation().matrix(), Word{s}, k, options_.step_cap);
        if (r.tag == LcmTag::Inconclusive) return false;
        if (r.tag == LcmTag::NoCommonMultiple) continue;
        second.push_back(r.comp_left);
      }
      Word shifted = task.prefix;
      shifted.push_back(s);
      stack.push_back({std::move(second), task.depth + 1, std::move(shifted)});

      // Elements not divisible by s, emitted first.
      rest.push_back(Word{s});
      stack.push_back({std::move(rest), task.depth + 1, std::move(task.prefix)});
    }
    return true;
  }

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t max_depth() const noexcept { return max_depth_; }

 private:
  bool in_target(const Word& k) const {
    return target_ == RewriteTarget::Atoms ? k.size() == 1 : (k.size() == 1 || pinf_.count(k) != 0);
  }

  const WordEngine&     engine_;
  RewriteTarget         target_;
  std::set<Word>        pinf_;
  const RewriteOptions& options_;
  std::size_t           nodes_     = 0;
  std::size_t           max_depth_ = 0;
};

}  // namespace

RewriteResult rewrite_blockers(const WordEngine& engine, RewriteTarget target, const Cell& cell,
                               const std::vector<Word>& pinf_set, const RewriteOptions& options) {
  std::vector<Word> canonical_pinf;
  for (const auto& w : pinf_set) canonical_pinf.push_back(engine.canonical(w));
  Rewriter rewriter(engine, target, canonical_pinf, options);
  RewriteResult result;
  result.conclusive = rewriter.run(cell.blockers, engine.canonical(cell.prefix), result.cells);
  result.nodes      = rewriter.nodes();
  result.max_depth  = rewriter.max_depth();
  if (!result.conclusive) result.cells.clear();
  return result;
}

VerifyReport verify_equal(const WordEngine& engine, const SymbolicSet& a, const SymbolicSet& b, std::size_t radius) {
  Ball ball(engine, radius);
  return verify_equal(engine, a, b, ball);
}

VerifyReport verify_equal(const WordEngine& engine, const SymbolicSet& a, const SymbolicSet& b, const Ball& ball) {
  VerifyReport report;
  auto count = [&](const Word& w, const SymbolicSet& set) {
    std::size_t n = 0;
    for (const auto& c : set) n += member(engine, w, c) ? 1 : 0;
    return n;
  };
  for (const auto& w : ball.elements()) {
    ++report.checked;
    std::size_t in_a = count(w, a);
    std::size_t in_b = count(w, b);
    if (in_a > 1) {
      report.disjoint_a = false;
      report.reason     = "cells of the first set overlap";
    } else if (in_b > 1) {
      report.disjoint_b = false;
      report.reason     = "cells of the second set overlap";
    } else if ((in_a > 0) != (in_b > 0)) {
      report.equal  = false;
      report.reason = in_a > 0 ? "element of the first set missing from the second"
                               : "element of the second set missing from the first";
    } else {
      continue;
    }
    report.counterexample = w;
    return report;
  }
  return report;
}

ClosureReport algebra_closure_check(const WordEngine& engine, std::size_t samples, std::size_t radius,
                                    std::mt19937_64& rng, std::size_t max_prefix, const RewriteOptions& options) {
  ClosureReport report;
  if (engine.rank() == 0) return report;
  Ball prefixes(engine, max_prefix);
  Ball ball(engine, radius);
  std::uniform_int_distribution<std::size_t> pick_atom(0, engine.rank() - 1);
  std::uniform_int_distribution<std::size_t> pick_prefix(0, prefixes.size() - 1);
  std::bernoulli_distribution coin(0.5);

  for (std::size_t n = 0; n < samples; ++n) {
    ClosureSample sample;
    sample.s             = static_cast<Letter>(pick_atom(rng));
    sample.target.prefix = prefixes.element(pick_prefix(rng));
    for (std::size_t x = 0; x < engine.rank(); ++x) {
      if (coin(rng)) sample.target.blockers.push_back(Word{static_cast<Letter>(x)});
    }
    const Cell outside{Word{}, {Word{sample.s}}};
    IntersectResult cut = intersect_cells(engine, outside, sample.target, options.step_cap);
    if (cut.tag == IntersectTag::Inconclusive) {
      sample.outcome = SampleOutcome::Inconclusive;
    } else {
      sample.empty = cut.tag == IntersectTag::Empty;
      if (!sample.empty) {
        sample.intersection = cut.cell;
        RewriteResult r     = rewrite_blockers(engine, RewriteTarget::Atoms, cut.cell, {}, options);
        if (!r.conclusive) sample.outcome = SampleOutcome::Inconclusive;
        sample.rewritten = std::move(r.cells);
      }
      if (sample.outcome == SampleOutcome::Success) {
        for (const auto& w : ball.elements()) {
          bool expected   = member(engine, w, outside) && member(engine, w, sample.target);
          std::size_t got = 0;
          for (const auto& c : sample.rewritten) got += member(engine, w, c) ? 1 : 0;
          if (got > 1 || (got == 1) != expected) {
            sample.outcome        = SampleOutcome::Counterexample;
            sample.counterexample = w;
            break;
          }
        }
      }
    }
    switch (sample.outcome) {
      case SampleOutcome::Success: ++report.successes; break;
      case SampleOutcome::Inconclusive: ++report.inconclusive; break;
      case SampleOutcome::Counterexample: ++report.counterexamples; break;
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace artinkms
