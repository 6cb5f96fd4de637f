// Artin monoid presentations given by Coxeter matrices.
//
// The monoid generated by S with relations <st>^m = <ts>^m, one for each pair
// s != t with finite m = m(s,t).  The value 0 encodes m = infinity (no
// relation), both in memory and in presentation files.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artinkms/numeric.hpp"

namespace artinkms {

// Index of a generator in the presentation's name table.
using Letter = std::uint8_t;

// Finite sequence of generators; the empty word is the identity e.
using Word = std::vector<Letter>;

inline constexpr unsigned kInfinity = 0;

inline constexpr std::size_t kMaxGenerators = 255;

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  // Validates symmetry, unit diagonal and off-diagonal entries in {0,2,3,...}.
  // Throws Error with AsymmetricMatrix, BadDiagonal or BadEntry.
  explicit CoxeterMatrix(const std::vector<std::vector<unsigned>>& rows);

  std::size_t size() const noexcept { return n_; }

  unsigned operator()(std::size_t i, std::size_t j) const noexcept { return m_[i * n_ + j]; }

  bool infinite(std::size_t i, std::size_t j) const noexcept { return (*this)(i, j) == kInfinity; }

  // Submatrix on the given generators, in the given order.
  CoxeterMatrix restrict_to(std::span<const Letter> generators) const;

  std::vector<std::vector<unsigned>> rows() const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::size_t           n_ = 0;
  std::vector<unsigned> m_;
};

class MonoidPresentation {
 public:
  MonoidPresentation() = default;

  // Throws MalformedInput on bad or duplicate names, InconsistentWeights when
  // two generators joined by an odd finite m carry different weights.
  MonoidPresentation(std::string name, std::vector<std::string> generators, CoxeterMatrix matrix,
                     std::optional<std::vector<Rational>> weights = std::nullopt);

  // Generators named s1, s2, ... in row order.
  static MonoidPresentation from_rows(std::string name, const std::vector<std::vector<unsigned>>& rows);

  const std::string&              name() const noexcept { return name_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const CoxeterMatrix&            matrix() const noexcept { return matrix_; }
  std::size_t                     rank() const noexcept { return generators_.size(); }

  const std::optional<std::vector<Rational>>& weights() const noexcept { return weights_; }

  // True when no weights are given, i.e. N(p) = exp(length(p)).
  bool uniform_weights() const noexcept { return !weights_.has_value(); }

  std::optional<Letter> find_generator(std::string_view name) const;

  // The two sides <st>^m and <ts>^m of every relation, s < t, m finite.
  std::vector<std::pair<Word, Word>> relations() const;

  bool operator==(const MonoidPresentation&) const = default;

 private:
  std::string                          name_;
  std::vector<std::string>             generators_;
  CoxeterMatrix                        matrix_;
  std::optional<std::vector<Rational>> weights_;
};

// Alternating word s t s t ... of the given length.
Word alternating(Letter s, Letter t, unsigned length);

MonoidPresentation parse_presentation(std::string_view json_text);
MonoidPresentation load_presentation(const std::string& path);
std::string        serialize_presentation(const MonoidPresentation& presentation);

struct Component {
  std::vector<Letter> generators;
  std::string         type;  // "A3", "I2(5)", ... or "non-spherical"
  bool                spherical = false;
};

struct Classification {
  bool                   right_angled = false;
  bool                   finite_type  = false;
  std::vector<Component> components;
};

Classification classify(const MonoidPresentation& presentation);

// Label of a connected Coxeter diagram against the spherical table, or
// nullopt when the diagram is not spherical.
std::optional<std::string> spherical_type(const CoxeterMatrix& connected);

bool is_finite_type(const CoxeterMatrix& matrix);

// True when reduction of positivity to generators is known to hold: the matrix
// is of finite type, right-angled, or splits as a free product (all cross
// entries infinite) or a direct product (all cross entries 2) of such blocks.
bool atom_reduction_guaranteed(const CoxeterMatrix& matrix);

MonoidPresentation free_product(const MonoidPresentation& a, const MonoidPresentation& b);
MonoidPresentation direct_product(const MonoidPresentation& a, const MonoidPresentation& b);

}  // namespace artinkms
