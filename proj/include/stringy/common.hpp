#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stringy {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer vector; used both for lattice points (M side) and linear forms (N side).
using Vec = std::vector<Int>;

/// Invalid input data: a cone that is not pointed/full-dimensional, a poset
/// that is not graded, a summand list that is not a nef-partition, ...
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched ambient ranks or sequence lengths.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A mathematically guaranteed property failed at runtime.  This signals a
/// bug (or corrupted state upstream), never a property of valid input.
struct IntegrityError : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace stringy
