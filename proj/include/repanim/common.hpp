#ifndef REPANIM_COMMON_HPP
#define REPANIM_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace repanim {

// Counts of paths/walks/animals overflow 64 bits quickly on windows with
// large hubs, so all enumeration counters are arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument (bad vertex id, vertex outside an animal, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// A ball or enumeration region does not fit inside the window.  Counting
/// on a truncated ball would silently produce wrong numbers, so it is
/// always an error.
class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& what) : Error(what) {}
};

/// Requested vertex set is not connected.  Carries two vertices from
/// distinct components as a witness.
class ConnectivityError : public Error {
 public:
  ConnectivityError(const std::string& what, std::uint32_t in_first,
                    std::uint32_t in_second)
      : Error(what), component_a(in_first), component_b(in_second) {}
  std::uint32_t component_a;
  std::uint32_t component_b;
};

/// An exact solver or enumerator was asked for more work than its
/// configured cap allows.
class CapError : public Error {
 public:
  explicit CapError(const std::string& what, long long hint = -1)
      : Error(what), lower_bound_hint(hint) {}
  // For the capacity solver: greedy admissible-set size, usable as a
  // lower bound when the exact value is out of reach.
  long long lower_bound_hint;
};

/// A tempered sequence does not cover the degrees present in an animal.
class CoverageError : public Error {
 public:
  explicit CoverageError(const std::string& what) : Error(what) {}
};

/// Hub-graph generation failed (spacing constraint violated, ...).
class GenerationError : public Error {
 public:
  explicit GenerationError(const std::string& what) : Error(what) {}
};

// Comparisons between integer path distances and real-valued thresholds
// (phi values, lambda): ties count as satisfying the non-strict
// inequality, and a small guard absorbs rounding in the real side.
inline constexpr double kTieGuard = 1e-9;

inline bool approx_geq(double lhs, double rhs, double guard = kTieGuard) {
  return lhs >= rhs - guard * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

inline bool approx_leq(double lhs, double rhs, double guard = kTieGuard) {
  return approx_geq(rhs, lhs, guard);
}

/// Strictly-less with the same tie convention: values within the guard
/// are treated as equal, hence not less.
inline bool strictly_less(double lhs, double rhs, double guard = kTieGuard) {
  return !approx_geq(lhs, rhs, guard);
}

/// Natural log of a positive big integer, accurate to ~1e-15 relative.
inline double log_big(const BigInt& value) {
  if (value <= 0) throw ArgumentError("log_big: value must be positive");
  return static_cast<double>(log(BigFloat(value)));
}

/// count <= q^N, evaluated in 100-digit floating point so that huge
/// counts are compared without overflow.
inline bool count_leq_power(const BigInt& count, double q, std::uint64_t n) {
  if (count < 0) throw ArgumentError("count_leq_power: negative count");
  BigFloat bound = pow(BigFloat(q), static_cast<int>(n));
  return BigFloat(count) <= bound;
}

}  // namespace repanim

#endif  // REPANIM_COMMON_HPP
