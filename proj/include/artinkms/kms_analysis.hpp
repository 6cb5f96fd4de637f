// Inverse temperatures of the length dynamics.
//
// With t = e^-beta, a gauge-invariant KMS_beta state exists exactly when
// g_J(t) >= 0 for every finite J in the governing family (the generators, when
// a reduction theorem applies, or P_inf).  Each g_J is an integer polynomial,
// so the admissible set of t is a finite union of intervals and points whose
// endpoints are real roots; those are isolated exactly with Sturm chains.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "artinkms/clique_engine.hpp"
#include "artinkms/polynomial.hpp"
#include "artinkms/word_engine.hpp"

namespace artinkms {

enum class Family { Atoms, Pinf };

std::string_view to_string(Family family) noexcept;
Family           parse_family(std::string_view text);

struct KmsOptions {
  Family      family = Family::Atoms;
  bool        force  = false;   // atoms family without a known reduction theorem
  std::size_t max_family_size = 20;
  std::size_t pinf_iterations = kDefaultPinfIterations;
};

// Hard limit on the family size, override or not.
inline constexpr std::size_t kMaxFamilySize = 24;

// Members of the family, in the order used to enumerate J by bitmask.
// Throws GuaranteeUnavailable, UnsaturatedPinf, TooLarge.
std::vector<Word> family_elements(const WordEngine& engine, const KmsOptions& options);

struct GoverningPolynomial {
  IntPolynomial     g;
  std::vector<Word> first_J;  // first subset in bitmask order with this g_J
  std::size_t       first_mask = 0;
  std::size_t       subsets    = 0;  // how many J share it
};

// Distinct g_J over nonempty J within the family, ordered by first_mask.
std::vector<GoverningPolynomial> governing_polynomials(const WordEngine& engine, const std::vector<Word>& family,
                                                       Family kind);

// One end of a beta interval.  t_root is the algebraic description of
// t = e^-beta; it is absent at +-infinity.
struct BetaEndpoint {
  double                      beta     = 0.0;
  bool                        infinite = false;
  bool                        closed   = false;
  std::optional<RootInterval> t_root;
};

struct BetaComponent {
  BetaEndpoint lower;
  BetaEndpoint upper;
  bool         point = false;  // a single beta, lower == upper

  // Range of t-items covered, where item 2i is the open piece below root i
  // and item 2i+1 is root i itself.
  std::size_t first_item = 0;
  std::size_t last_item  = 0;
};

struct RootStatus {
  RootInterval              t;
  double                    beta     = 0.0;
  bool                      included = false;
  std::optional<std::size_t> witness;  // index into polynomials, the first failing J
};

struct TemperatureSpace {
  Family                           family = Family::Atoms;
  std::vector<Word>                family_members;
  std::vector<GoverningPolynomial> polynomials;
  IntPolynomial                    combined;  // lcm of the square-free parts
  std::vector<RootStatus>          roots;     // positive roots of `combined`, ascending in t
  std::vector<BetaComponent>       components;  // ascending in beta
  bool                             includes_plus_infinity = false;
  bool                             contains_zero          = false;
  // Open t-intervals between consecutive roots with a rational sample point
  // and the first failing polynomial, if any; ascending in t.
  struct Piece {
    Rational                   sample;
    bool                       feasible = false;
    std::optional<std::size_t> witness;
  };
  std::vector<Piece> pieces;  // pieces.size() == roots.size() + 1
};

// Throws NonUniformWeights, GuaranteeUnavailable, UnsaturatedPinf, TooLarge.
TemperatureSpace temperature_space(const WordEngine& engine, const KmsOptions& options = {});

struct GapWitness {
  std::vector<Word> J;  // first failing subset in bitmask order
  Rational          sample_t;
  Rational          value;  // g_J(sample_t) < 0
};

struct Gap {
  BetaEndpoint            lower;  // end of the component below
  BetaEndpoint            upper;  // start of the component above
  std::vector<GapWitness> witnesses;  // one per open t-piece in the gap, ascending in beta
};

struct GapReport {
  bool             has_gap = false;
  std::vector<Gap> gaps;
};

GapReport detect_gap(const TemperatureSpace& space);
GapReport detect_gap(const WordEngine& engine, const KmsOptions& options = {});

// A point of evaluation: exact t, or beta as a float.
using EvalPoint = std::variant<Rational, double>;

struct PositivityEntry {
  std::vector<Word>       J;
  std::optional<Rational> exact;  // set for rational t with uniform weights
  double                  approx      = 0.0;
  bool                    nonnegative = false;
};

struct PositivityReport {
  std::vector<PositivityEntry> entries;
  bool                         all_nonnegative = true;
};

// g_J at the point for each J in Js, or for every nonempty J in the family.
// With explicit weights, N(vK)^-beta is the product of w_s^(-beta * count_s).
PositivityReport evaluate_positivity(const WordEngine& engine, const EvalPoint& point, const KmsOptions& options = {},
                                     const std::optional<std::vector<std::vector<Word>>>& Js = std::nullopt);

struct CriticalBeta {
  RootInterval t;  // smallest positive root of the clique polynomial
  double       beta = 0.0;
};

// Throws NonUniformWeights, NoPositiveRoot.
CriticalBeta critical_beta(const WordEngine& engine);

// mu(p Omega_K) = t^length(p) g_K(t); zero when e is in K.
Rational mu_cell(const WordEngine& engine, const Word& p, const std::vector<Word>& K, const Rational& t);

}  // namespace artinkms
