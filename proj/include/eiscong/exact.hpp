#pragma once

// Exact integers and rationals plus the small number-theoretic kit used
// everywhere else: p-adic valuations, generalized binomials, the H(m,a,r)
// interpolation coefficients and divisor power sums.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "eiscong/error.hpp"

namespace eiscong {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

inline ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
    if (den == 0) raise(ErrorCode::InvalidArgument, "zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_decimal(const ExactInteger& x) { return x.get_str(10); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_decimal(const ExactRational& x) { return x.get_str(10); }

inline ExactRational parse_rational(const std::string& text) {
    ExactRational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        raise(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
    q.canonicalize();
    return q;
}

inline ExactInteger ipow(const ExactInteger& base, unsigned long e) {
    ExactInteger r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ExactInteger ipow(long base, unsigned long e) { return ipow(ExactInteger(base), e); }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// p-adic valuation; zero has infinite valuation.
class Valuation {
public:
    static Valuation infinite() { return Valuation(); }
    explicit Valuation(long v) : value_(v), finite_(true) {}

    bool is_infinite() const noexcept { return !finite_; }
    long value() const {
        if (!finite_) raise(ErrorCode::InvalidArgument, "valuation of zero is infinite");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
        return a.value_ <=> b.value_;
    }
    friend bool operator==(const Valuation& a, long b) { return a == Valuation(b); }
    friend std::strong_ordering operator<=>(const Valuation& a, long b) { return a <=> Valuation(b); }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        if (v.is_infinite()) return os << "inf";
        return os << v.value_;
    }

private:
    Valuation() = default;
    long value_ = 0;
    bool finite_ = false;
};

inline long padic_valuation_nonzero(const ExactInteger& x, std::uint64_t p) {
    ExactInteger t = abs(x);
    ExactInteger pp(static_cast<unsigned long>(p));
    return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
}

inline Valuation padic_valuation(const ExactInteger& x, std::uint64_t p) {
    if (p < 2) raise(ErrorCode::InvalidArgument, "valuation needs a prime");
    if (x == 0) return Valuation::infinite();
    return Valuation(padic_valuation_nonzero(x, p));
}

inline Valuation padic_valuation(const ExactRational& x, std::uint64_t p) {
    if (p < 2) raise(ErrorCode::InvalidArgument, "valuation needs a prime");
    if (x == 0) return Valuation::infinite();
    return Valuation(padic_valuation_nonzero(x.get_num(), p) -
                     padic_valuation_nonzero(x.get_den(), p));
}

inline bool is_p_integral(const ExactRational& x, std::uint64_t p) {
    ExactInteger pp(static_cast<unsigned long>(p));
    return mpz_divisible_p(x.get_den_mpz_t(), pp.get_mpz_t()) == 0;
}

/// top*(top-1)*...*(top-j+1)/j! for any integer top; zero for j < 0.
inline ExactInteger gen_binomial(const ExactInteger& top, long j) {
    if (j < 0) return 0;
    ExactInteger r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
    return r;
}

inline ExactInteger gen_binomial(long top, long j) { return gen_binomial(ExactInteger(top), j); }

/// H(m, alpha, r) = (-1)^(m+1+r) C(alpha-1-r, m-1-r) C(alpha, r), 0 <= r <= m-1.
inline ExactInteger h_coefficient(long m, long alpha, long r) {
    if (m < 1) raise(ErrorCode::ParameterOutOfRange, "h_coefficient needs m >= 1");
    if (alpha < 0) raise(ErrorCode::ParameterOutOfRange, "h_coefficient needs alpha >= 0");
    if (r < 0 || r > m - 1)
        raise(ErrorCode::ParameterOutOfRange,
              "h_coefficient needs 0 <= r <= m-1 (r=" + std::to_string(r) + ", m=" +
                  std::to_string(m) + ")");
    ExactInteger v = gen_binomial(alpha - 1 - r, m - 1 - r) * gen_binomial(alpha, r);
    if ((m + 1 + r) % 2 != 0) v = -v;
    return v;
}

/// Divisors of n in ascending order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) raise(ErrorCode::InvalidArgument, "divisors of 0");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// sigma_e(n) = sum of d^e over the divisors d of n.
inline ExactInteger sigma_power(unsigned long e, std::uint64_t n) {
    if (n == 0) raise(ErrorCode::InvalidArgument, "sigma_power needs n >= 1");
    ExactInteger s = 0;
    for (auto d : divisors(n)) s += ipow(ExactInteger(static_cast<unsigned long>(d)), e);
    return s;
}

}  // namespace eiscong
