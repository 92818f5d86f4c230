#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace spw {

// All arithmetic in the engine is exact; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  return Rational(Integer(num), Integer(den));
}

// "p" or "p/q", denominator always positive.
inline std::string rat_str(const Rational& r) { return r.str(); }

// Generalized binomial coefficient x(x-1)...(x-k+1)/k!, valid for any
// rational (in particular negative integer) x.
Rational binomial(const Rational& x, int k);

// Falling factorial x(x-1)...(x-k+1).
Rational falling(const Rational& x, int k);

// Raised when a rewriting or series budget is exhausted.  The underlying
// computations provably terminate, so hitting a budget always indicates an
// engine bug rather than a data-dependent condition.
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spw
