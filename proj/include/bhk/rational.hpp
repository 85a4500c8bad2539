#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bhk {

/// Arbitrary precision integer.
using Int = mpz_class;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Raised for malformed rational literals and other value-level input errors.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// Parses "p", "-p", "p/q". Whitespace is not accepted.
Rat parse_rat(std::string_view text);

/// Lowest-terms text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

bool is_integer(const Rat& r);
Int floor(const Rat& r);
Int ceil(const Rat& r);
/// r - floor(r), in [0, 1).
Rat frac(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Least common multiple of all denominators.
Int common_denominator(const RatVector& v);

std::string to_string(const RatVector& v);

/// Total order used wherever rational vectors are keys.
struct RatVectorLess {
  bool operator()(const RatVector& a, const RatVector& b) const;
};

struct IntVectorLess {
  bool operator()(const IntVector& a, const IntVector& b) const;
};

RatVector to_rat(const IntVector& v);

Rat dot(const RatVector& a, const RatVector& b);

/// Converts to a machine integer; throws std::overflow_error if out of range.
long to_long(const Int& z);

}  // namespace bhk
