#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace shirshov {

inline constexpr int kDefaultPrecisionBits = 256;

// Certified evaluation result: an exact rational when every exponent in the
// formula is integral, and always a two-sided enclosure lo <= value <= hi
// (dyadic endpoints obtained by directed rounding).
struct BoundValue {
  std::optional<mpq_class> exact;
  mpq_class lo;
  mpq_class hi;

  bool is_exact() const { return exact.has_value(); }
  // Relative width (hi-lo)/lo as a rational; zero for exact values.
  mpq_class relative_width() const;
};

// Exact decimal rendering of a dyadic rational ("3.25"); integers come out
// plain.  Non-dyadic denominators fall back to "num/den".
std::string exact_decimal(const mpq_class& value);

// Fixed-point decimal with `frac_digits` places, rounded toward the chosen
// direction so a serialized [lo, hi] pair still encloses the value.
std::string directed_decimal(const mpq_class& value, int frac_digits, bool round_up);

BoundValue phi_log3(long n, long l, int bits = kDefaultPrecisionBits);
// Coarsened companion of phi_log3; dominates it for every n, l >= 1.
BoundValue phi_log3_coarse(long n, long l, int bits = kDefaultPrecisionBits);
BoundValue phi_log2(long n, long l, int bits = kDefaultPrecisionBits);
BoundValue psi_log3(long n, long d, long l, int bits = kDefaultPrecisionBits);
BoundValue psi_log2(long n, long d, long l, int bits = kDefaultPrecisionBits);
BoundValue upsilon(long n, long l);
BoundValue lopatin(long n, long l, int bits = kDefaultPrecisionBits);
BoundValue lower_gk(long n, long l);
BoundValue kuzmin(long n);

enum class IntervalOrder { Less, Greater, Indeterminate };

const char* to_string(IntervalOrder o);

// Certified interval comparison; Indeterminate when the enclosures overlap.
IntervalOrder compare(const BoundValue& a, const BoundValue& b);

struct BoundComparison {
  IntervalOrder lopatin_vs_psi_log3 = IntervalOrder::Indeterminate;
  IntervalOrder lopatin_vs_psi_log2 = IntervalOrder::Indeterminate;
  IntervalOrder psi_log3_vs_psi_log2 = IntervalOrder::Indeterminate;
  int precision_bits = 0;  // precision that certified the verdicts
};

// Orders the nilpotency-degree bounds at d = n, doubling the precision up to
// max_bits while any pair stays indeterminate.
BoundComparison compare_bounds(long n, long l, int bits = kDefaultPrecisionBits,
                               int max_bits = 1 << 14);

}  // namespace shirshov
