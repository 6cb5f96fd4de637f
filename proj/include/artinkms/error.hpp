// Error type shared by every module.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace artinkms {

enum class ErrorKind {
  MalformedInput,
  AsymmetricMatrix,
  BadDiagonal,
  BadEntry,
  InconsistentWeights,
  CapExceeded,
  NonUniformWeights,
  IdentityEntry,
  IdentityArgument,
  LeafInput,
  Inconclusive,
  ZeroPolynomial,
  GuaranteeUnavailable,
  UnsaturatedPinf,
  NoPositiveRoot,
  TooLarge,
  Defect,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace artinkms
