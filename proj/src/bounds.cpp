#include "shirshov/bounds.hpp"

#include <mpfr.h>

#include <algorithm>

#include "shirshov/errors.hpp"

namespace shirshov {

namespace {

mpq_class mpq_from_mpfr(const mpfr_t x) {
  mpz_class mantissa;
  mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), x);
  mpq_class out(mantissa);
  if (exp >= 0) {
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(exp));
    out *= mpq_class(shift);
  } else {
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(-exp));
    out /= mpq_class(shift);
  }
  out.canonicalize();
  return out;
}

// Two-sided enclosure of a nonnegative real, maintained with outward
// rounding.  All operations assume nonnegative operands, which every
// quantity in these formulas satisfies.
class Enclosure {
 public:
  explicit Enclosure(int bits) {
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
  }
  Enclosure(const Enclosure& other) {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  Enclosure& operator=(const Enclosure&) = delete;
  ~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Enclosure from_integer(const mpz_class& value, int bits) {
    Enclosure e(bits);
    mpfr_set_z(e.lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(e.hi_, value.get_mpz_t(), MPFR_RNDU);
    return e;
  }

  static Enclosure from_long(long value, int bits) { return from_integer(mpz_class(value), bits); }

  // log base `base` of `arg`, both integers >= 1 (arg >= 1 keeps the result
  // nonnegative).
  static Enclosure log_base(long arg, long base, int bits) {
    Enclosure num(bits), den(bits), out(bits);
    mpfr_set_si(num.lo_, arg, MPFR_RNDD);
    mpfr_log(num.lo_, num.lo_, MPFR_RNDD);
    mpfr_set_si(num.hi_, arg, MPFR_RNDU);
    mpfr_log(num.hi_, num.hi_, MPFR_RNDU);
    mpfr_set_si(den.lo_, base, MPFR_RNDD);
    mpfr_log(den.lo_, den.lo_, MPFR_RNDD);
    mpfr_set_si(den.hi_, base, MPFR_RNDU);
    mpfr_log(den.hi_, den.hi_, MPFR_RNDU);
    mpfr_div(out.lo_, num.lo_, den.hi_, MPFR_RNDD);
    mpfr_div(out.hi_, num.hi_, den.lo_, MPFR_RNDU);
    return out;
  }

  Enclosure add(const Enclosure& other) const {
    Enclosure out(prec());
    mpfr_add(out.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, other.hi_, MPFR_RNDU);
    return out;
  }

  Enclosure add_long(long value) const {
    Enclosure out(prec());
    mpfr_add_si(out.lo_, lo_, value, MPFR_RNDD);
    mpfr_add_si(out.hi_, hi_, value, MPFR_RNDU);
    return out;
  }

  Enclosure mul(const Enclosure& other) const {
    Enclosure out(prec());
    mpfr_mul(out.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_mul(out.hi_, hi_, other.hi_, MPFR_RNDU);
    return out;
  }

  Enclosure mul_long(long value) const {
    Enclosure out(prec());
    mpfr_mul_si(out.lo_, lo_, value, MPFR_RNDD);
    mpfr_mul_si(out.hi_, hi_, value, MPFR_RNDU);
    return out;
  }

  // base^this for an integer base >= 1.
  Enclosure pow_of(long base) const {
    Enclosure out(prec());
    Enclosure b(prec());
    mpfr_set_si(b.lo_, base, MPFR_RNDD);
    mpfr_set_si(b.hi_, base, MPFR_RNDU);
    mpfr_pow(out.lo_, b.lo_, lo_, MPFR_RNDD);
    mpfr_pow(out.hi_, b.hi_, hi_, MPFR_RNDU);
    return out;
  }

  Enclosure sqrt2_times() const {
    Enclosure out(prec());
    mpfr_sqrt_ui(out.lo_, 2, MPFR_RNDD);
    mpfr_sqrt_ui(out.hi_, 2, MPFR_RNDU);
    mpfr_mul(out.lo_, out.lo_, lo_, MPFR_RNDD);
    mpfr_mul(out.hi_, out.hi_, hi_, MPFR_RNDU);
    return out;
  }

  BoundValue value() const {
    BoundValue out;
    out.lo = mpq_from_mpfr(lo_);
    out.hi = mpq_from_mpfr(hi_);
    return out;
  }

 private:
  int prec() const { return static_cast<int>(mpfr_get_prec(lo_)); }

  mpfr_t lo_;
  mpfr_t hi_;
};

mpz_class pow_z(long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

BoundValue exact_value(const mpq_class& q) {
  BoundValue out;
  out.exact = q;
  out.lo = q;
  out.hi = q;
  return out;
}

// j with value = 2^j, or -1.
long log2_exact(long value) {
  if (value < 1) return -1;
  long j = 0;
  while (j < 62 && (1L << j) < value) j++;
  return (1L << j) == value ? j : -1;
}

long ceil_log3(long value) {
  long c = 0;
  mpz_class power = 1;
  while (power < value) {
    power *= 3;
    c++;
  }
  return c;
}

void check_precision(int bits) {
  if (bits < 8 || bits > (1 << 22)) throw UsageError("unreasonable precision");
}

}  // namespace

mpq_class BoundValue::relative_width() const {
  if (lo == 0) return hi - lo;
  return (hi - lo) / lo;
}

BoundValue phi_log3(long n, long l, int bits) {
  if (n < 1 || l < 1) throw UsageError("need n, l >= 1");
  check_precision(bits);
  Enclosure log34 = Enclosure::log_base(4, 3, bits);
  Enclosure e1 = log34.mul_long(21).add_long(17).pow_of(4);
  Enclosure e2 = log34.mul_long(30).add_long(10);
  Enclosure exponent = e2.add(Enclosure::log_base(n, 3, bits).mul_long(12));
  return e1.mul_long(l).mul(exponent.pow_of(n)).value();
}

BoundValue phi_log3_coarse(long n, long l, int bits) {
  if (n < 1 || l < 1) throw UsageError("need n, l >= 1");
  check_precision(bits);
  Enclosure exponent = Enclosure::log_base(n, 3, bits).mul_long(12).add_long(48);
  return exponent.pow_of(n).mul(Enclosure::from_integer(pow_z(2, 87) * l, bits)).value();
}

BoundValue phi_log2(long n, long l, int bits) {
  if (n < 1 || l < 1) throw UsageError("need n, l >= 1");
  check_precision(bits);
  if (long j = log2_exact(n); j >= 0) {
    mpz_class value = pow_z(2, 40) * l * pow_z(n, static_cast<unsigned long>(38 + 8 * j));
    return exact_value(mpq_class(value));
  }
  Enclosure exponent = Enclosure::log_base(n, 2, bits).mul_long(8).add_long(38);
  return exponent.pow_of(n).mul(Enclosure::from_integer(pow_z(2, 40) * l, bits)).value();
}

BoundValue psi_log3(long n, long d, long l, int bits) {
  if (n < 1 || l < 1) throw UsageError("need n, l >= 1");
  if (d < n) throw UsageError("need d >= n");
  check_precision(bits);
  Enclosure log34 = Enclosure::log_base(4, 3, bits);
  Enclosure front = log34.mul_long(3).add_long(5).pow_of(4);
  Enclosure exponent =
      Enclosure::log_base(n * d, 3, bits).mul_long(3).add(log34.mul_long(6).add_long(5));
  return front.mul_long(l).mul(exponent.pow_of(n * d)).mul_long(d).mul_long(d).value();
}

BoundValue psi_log2(long n, long d, long l, int bits) {
  if (n < 1 || l < 1) throw UsageError("need n, l >= 1");
  if (d < n) throw UsageError("need d >= n");
  check_precision(bits);
  if (long j = log2_exact(n * d); j >= 0) {
    mpz_class value =
        256 * mpz_class(l) * pow_z(n * d, static_cast<unsigned long>(2 * j + 10)) * d * d;
    return exact_value(mpq_class(value));
  }
  Enclosure exponent = Enclosure::log_base(n * d, 2, bits).mul_long(2).add_long(10);
  return exponent.pow_of(n * d)
      .mul(Enclosure::from_integer(mpz_class(256) * l * d * d, bits))
      .value();
}

BoundValue upsilon(long n, long l) {
  if (n < 1 || l < 1) throw UsageError("need n, l >= 1");
  mpz_class value =
      2 * pow_z(n, static_cast<unsigned long>(3 * ceil_log3(n) + 4)) * l;
  return exact_value(mpq_class(value));
}

BoundValue lopatin(long n, long l, int bits) {
  if (n < 1 || l < 1) throw UsageError("need n, l >= 1");
  check_precision(bits);
  mpz_class half = 4 * pow_z(2, static_cast<unsigned long>(n / 2)) * l;
  if (n % 2 == 0) return exact_value(mpq_class(half));
  BoundValue out = Enclosure::from_integer(half, bits).sqrt2_times().value();
  return out;
}

BoundValue lower_gk(long n, long l) {
  if (n < 1 || l < 1) throw UsageError("need n, l >= 1");
  mpq_class value = mpq_class(l - 1) * n * n / 4 + 1;
  value.canonicalize();
  return exact_value(value);
}

BoundValue kuzmin(long n) {
  if (n < 1) throw UsageError("need n >= 1");
  mpz_class value = (mpz_class(n) * n + n - 2) / 2;
  return exact_value(mpq_class(value));
}

const char* to_string(IntervalOrder o) {
  switch (o) {
    case IntervalOrder::Less: return "less";
    case IntervalOrder::Greater: return "greater";
    case IntervalOrder::Indeterminate: return "indeterminate";
  }
  return "?";
}

IntervalOrder compare(const BoundValue& a, const BoundValue& b) {
  if (a.hi < b.lo) return IntervalOrder::Less;
  if (a.lo > b.hi) return IntervalOrder::Greater;
  return IntervalOrder::Indeterminate;
}

BoundComparison compare_bounds(long n, long l, int bits, int max_bits) {
  if (n < 2 || l < 1) throw UsageError("need n >= 2 and l >= 1");
  BoundComparison out;
  for (int b = bits; b <= max_bits; b *= 2) {
    BoundValue lop = lopatin(n, l, b);
    BoundValue psi3 = psi_log3(n, n, l, b);
    BoundValue psi2 = psi_log2(n, n, l, b);
    out.lopatin_vs_psi_log3 = compare(lop, psi3);
    out.lopatin_vs_psi_log2 = compare(lop, psi2);
    out.psi_log3_vs_psi_log2 = compare(psi3, psi2);
    out.precision_bits = b;
    if (out.lopatin_vs_psi_log3 != IntervalOrder::Indeterminate &&
        out.lopatin_vs_psi_log2 != IntervalOrder::Indeterminate &&
        out.psi_log3_vs_psi_log2 != IntervalOrder::Indeterminate)
      break;
  }
  return out;
}

std::string exact_decimal(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  std::string sign = v < 0 ? "-" : "";
  mpq_class a = abs(v);
  mpz_class den = a.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    twos++;
  }
  while (den % 5 == 0) {
    den /= 5;
    fives++;
  }
  if (den != 1) return v.get_str();  // not a finite decimal
  int places = std::max(twos, fives);
  mpz_class scaled = a.get_num() * pow_z(10, static_cast<unsigned long>(places)) / a.get_den();
  std::string digits = scaled.get_str();
  if (places == 0) return sign + digits;
  while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - static_cast<size_t>(places), ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return sign + digits;
}

std::string directed_decimal(const mpq_class& value, int frac_digits, bool round_up) {
  if (value < 0) throw UsageError("directed_decimal expects a nonnegative value");
  mpz_class scale = pow_z(10, static_cast<unsigned long>(frac_digits));
  mpz_class num = value.get_num() * scale;
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), value.get_den().get_mpz_t());
  if (round_up && rem != 0) quot += 1;
  std::string digits = quot.get_str();
  if (frac_digits == 0) return digits;
  while (static_cast<int>(digits.size()) <= frac_digits) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - static_cast<size_t>(frac_digits), ".");
  return digits;
}

}  // namespace shirshov
