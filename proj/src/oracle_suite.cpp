#include "artinkms/oracle_suite.hpp"

#include <algorithm>

#include "artinkms/clique_engine.hpp"
#include "artinkms/error.hpp"
#include "artinkms/set_algebra.hpp"

namespace artinkms {

namespace {

std::string pair_text(const MonoidPresentation& presentation, const Word& p, const Word& q) {
  return "(" + format_word_or_e(presentation, p) + ", " + format_word_or_e(presentation, q) + ")";
}

SuiteCheck growth_check(const WordEngine& engine, const Ball& ball) {
  SuiteCheck check{"growth_series_inverse", true, 0, ""};
  std::vector<Letter> atoms(engine.rank());
  for (std::size_t s = 0; s < atoms.size(); ++s) atoms[s] = static_cast<Letter>(s);
  IntPolynomial h;
  for (const auto& clique : cliques_of(engine, atoms)) {
    h += IntPolynomial::monomial(clique.members.size() % 2 == 0 ? 1 : -1, clique.lcm_length);
  }
  auto inverse = series_inverse(h, ball.radius() + 1);
  const auto& starts = ball.layer_starts();
  for (std::size_t len = 0; len <= ball.radius(); ++len) {
    ++check.checked;
    BigInt count = starts[len + 1] - starts[len];
    if (count != inverse[len]) {
      check.passed = false;
      check.detail = "length " + std::to_string(len) + ": ball has " + count.str() + ", 1/h gives " +
                     inverse[len].str();
      return check;
    }
  }
  check.detail = "h(t) = " + h.to_string();
  return check;
}

SuiteCheck complement_check(const WordEngine& engine, const Ball& ball) {
  SuiteCheck check{"complement_partition", true, 0, ""};
  const SymbolicSet everything{Cell{}};
  const std::size_t end = ball.layer_starts()[std::min<std::size_t>(3, ball.radius()) + 1];
  for (std::size_t id = 1; id < end; ++id) {
    const Word& p = ball.element(id);
    SymbolicSet parts = complement_principal(engine, p);
    parts.push_back(Cell{p, {}});
    ++check.checked;
    VerifyReport r = verify_equal(engine, parts, everything, ball);
    if (!r.ok()) {
      check.passed = false;
      check.detail = "p = " + format_word(engine.presentation(), p) + ": " + r.reason;
      return check;
    }
  }
  return check;
}

SuiteCheck intersect_check(const WordEngine& engine, const Ball& ball) {
  SuiteCheck check{"intersect_membership", true, 0, ""};
  std::vector<Cell> cells;
  for (std::size_t p = 0; p <= engine.rank(); ++p) {
    Word prefix = p == 0 ? Word{} : Word{static_cast<Letter>(p - 1)};
    cells.push_back(Cell{prefix, {}});
    for (std::size_t k = 0; k < engine.rank(); ++k) cells.push_back(Cell{prefix, {Word{static_cast<Letter>(k)}}});
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i; j < cells.size(); ++j) {
      IntersectResult r = intersect_cells(engine, cells[i], cells[j]);
      if (r.tag == IntersectTag::Inconclusive) continue;
      ++check.checked;
      for (const auto& w : ball.elements()) {
        bool both = member(engine, w, cells[i]) && member(engine, w, cells[j]);
        bool cut  = r.tag == IntersectTag::Cell && member(engine, w, r.cell);
        if (both != cut) {
          const auto& P = engine.presentation();
          check.passed  = false;
          check.detail  = format_cell(P, cells[i]) + " n " + format_cell(P, cells[j]) + " at " + format_word_or_e(P, w);
          return check;
        }
      }
    }
  }
  return check;
}

}  // namespace

LcmAgreement lcm_agreement(const WordEngine& engine, const Ball& ball, std::size_t source_radius,
                           std::size_t step_cap) {
  LcmAgreement out;
  source_radius = std::min(source_radius, ball.radius());
  std::vector<std::size_t> sources(ball.layer_starts()[source_radius + 1]);
  for (std::size_t i = 0; i < sources.size(); ++i) sources[i] = i;
  MultiplesTable table(ball, sources);
  const auto& matrix = engine.presentation().matrix();
  const auto& P      = engine.presentation();

  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t j = 0; j < sources.size(); ++j) {
      ++out.pairs;
      const Word& p = ball.element(i);
      const Word& q = ball.element(j);
      LcmResult r   = reverse(matrix, p, q, step_cap);
      if (r.tag == LcmTag::Inconclusive) {
        ++out.inconclusive;
        continue;
      }
      std::size_t oracle = table.shortest_common_multiple(i, j);
      bool verdict = oracle != Ball::npos || r.tag == LcmTag::NoCommonMultiple;
      if (!verdict) continue;  // reversing found an LCM beyond the ball
      ++out.conclusive;
      std::string problem;
      if (r.tag == LcmTag::NoCommonMultiple) {
        if (oracle != Ball::npos) problem = "reversing found no common multiple, the ball has " + format_word(P, ball.element(oracle));
      } else if (r.lcm.size() > ball.radius()) {
        problem = "reversing LCM has length " + std::to_string(r.lcm.size()) + ", the ball has " +
                  format_word(P, ball.element(oracle));
      } else if (ball.find(r.lcm) != oracle) {
        problem = "reversing gives " + format_word(P, engine.canonical(r.lcm)) + ", the oracle " +
                  format_word(P, ball.element(oracle));
      } else if (!table.below_all_common_multiples(i, j, oracle)) {
        problem = "shortest common multiple does not divide all others";
      } else if (!engine.equal(concat(p, r.comp_left), concat(q, r.comp_right))) {
        problem = "complements do not close the square";
      }
      if (problem.empty()) {
        ++out.agreements;
      } else if (!out.first_mismatch) {
        out.first_mismatch = std::make_pair(p, q);
        out.detail         = pair_text(P, p, q) + ": " + problem;
      }
    }
  }
  return out;
}

std::vector<SuiteCheck> oracle_suite(const WordEngine& engine, std::size_t radius) {
  std::vector<SuiteCheck> checks;
  Ball ball(engine, radius);

  LcmAgreement lcm = lcm_agreement(engine, ball, std::max<std::size_t>(1, radius / 2));
  SuiteCheck lcm_check{"lcm_vs_oracle", lcm.ok(), lcm.conclusive, lcm.detail};
  if (lcm.ok()) {
    lcm_check.detail = std::to_string(lcm.agreements) + " of " + std::to_string(lcm.pairs) + " pairs conclusive, " +
                       std::to_string(lcm.inconclusive) + " inconclusive";
  }
  checks.push_back(std::move(lcm_check));

  try {
    checks.push_back(growth_check(engine, ball));
  } catch (const Error& e) {
    checks.push_back(SuiteCheck{"growth_series_inverse", false, 0, e.what()});
  }
  checks.push_back(complement_check(engine, ball));
  Ball small(engine, std::min<std::size_t>(radius, 5));
  checks.push_back(intersect_check(engine, small));
  return checks;
}

}  // namespace artinkms
