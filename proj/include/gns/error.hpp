#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "gns/point.hpp"

namespace gns {

enum class errc {
  dimension_mismatch,
  zero_is_hole,
  not_closed,
  empty_hole_set,
  not_monomial_semigroup,
  not_zero_dimensional,
  not_contained,
  hypothesis_failed,
  repeated_axis,
  bad_parameters,
  invalid_numerical_semigroup,
  oracle_too_large,
  unreachable_genus,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::zero_is_hole: return "ZeroIsHole";
    case errc::not_closed: return "NotClosed";
    case errc::empty_hole_set: return "EmptyHoleSet";
    case errc::not_monomial_semigroup: return "NotMonomialSemigroup";
    case errc::not_zero_dimensional: return "NotZeroDimensional";
    case errc::not_contained: return "NotContained";
    case errc::hypothesis_failed: return "HypothesisFailed";
    case errc::repeated_axis: return "RepeatedAxis";
    case errc::bad_parameters: return "BadParameters";
    case errc::invalid_numerical_semigroup: return "InvalidNumericalSemigroup";
    case errc::oracle_too_large: return "OracleTooLarge";
    case errc::unreachable_genus: return "Unreachable";
    case errc::io_error: return "IoError";
  }
  return "Error";
}

// Domain error. NotClosed carries the witness hole h and the part a with
// a in S and h-a in S.
class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  error(errc code, std::string message, Point witness_hole, Point witness_part)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_hole_(std::move(witness_hole)),
        witness_part_(std::move(witness_part)) {}

  errc code() const { return code_; }
  const std::optional<Point>& witness_hole() const { return witness_hole_; }
  const std::optional<Point>& witness_part() const { return witness_part_; }

 private:
  errc code_;
  std::optional<Point> witness_hole_;
  std::optional<Point> witness_part_;
};

}  // namespace gns
