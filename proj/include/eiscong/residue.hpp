#pragma once

#include <cstdint>
#include <string>

#include "eiscong/exact.hpp"

namespace eiscong {

using Word = std::uint64_t;

/// Z/p^m for a prime p >= 5. Values are canonical representatives in
/// [0, p^m). The modulus has to fit below 2^63 so that sums never wrap.
class ResidueRing {
public:
    using value_type = Word;

    ResidueRing(std::uint64_t p, unsigned m) : p_(p), m_(m) {
        if (p < 5 || !is_prime(p))
            raise(ErrorCode::InvalidArgument, "residue ring needs a prime p >= 5, got " + std::to_string(p));
        if (m < 1) raise(ErrorCode::InvalidArgument, "residue ring needs m >= 1");
        unsigned __int128 q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q >= (static_cast<unsigned __int128>(1) << 63))
                raise(ErrorCode::ParameterOutOfRange,
                      "p^m too large for word residues (p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")");
        }
        modulus_ = static_cast<Word>(q);
    }

    std::uint64_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    Word modulus() const noexcept { return modulus_; }
    ExactInteger modulus_exact() const { return ExactInteger(static_cast<unsigned long>(modulus_)); }

    friend bool operator==(const ResidueRing& a, const ResidueRing& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }

    Word zero() const noexcept { return 0; }
    Word one() const noexcept { return modulus_ == 1 ? 0 : 1; }
    Word add(Word a, Word b) const noexcept {
        Word s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    Word sub(Word a, Word b) const noexcept { return a >= b ? a - b : a + (modulus_ - b); }
    Word neg(Word a) const noexcept { return a == 0 ? 0 : modulus_ - a; }
    Word mul(Word a, Word b) const noexcept {
        return static_cast<Word>(static_cast<unsigned __int128>(a) * b % modulus_);
    }
    bool equal(Word a, Word b) const noexcept { return a == b; }

    Word from_integer(const ExactInteger& x) const {
        ExactInteger r;
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), modulus_);
        return r.get_ui();
    }
    Word from_int(long long x) const {
        long long r = x % static_cast<long long>(modulus_);
        return static_cast<Word>(r < 0 ? r + static_cast<long long>(modulus_) : r);
    }

    Word pow(Word base, ExactInteger e) const {
        if (e < 0) raise(ErrorCode::InvalidArgument, "negative exponent in residue pow");
        Word r = one(), b = base;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    Word pow(Word base, std::uint64_t e) const {
        Word r = one(), b = base;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    /// Number of factors p in a; m for zero.
    unsigned valuation(Word a) const noexcept {
        if (a == 0) return m_;
        unsigned v = 0;
        while (a % p_ == 0) {
            a /= p_;
            ++v;
        }
        return v;
    }

    bool is_unit(Word a) const noexcept { return a % p_ != 0; }

    Word inverse(Word a) const {
        if (!is_unit(a))
            raise(ErrorCode::NotAUnit, std::to_string(a) + " is divisible by " + std::to_string(p_));
        // extended Euclid on signed 128-bit values
        __int128 r0 = modulus_, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            __int128 q = r0 / r1;
            __int128 t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        __int128 mod = modulus_;
        __int128 inv = s0 % mod;
        if (inv < 0) inv += mod;
        return static_cast<Word>(inv);
    }

    Word p_power(unsigned e) const noexcept {
        if (e >= m_) return 0;
        Word r = 1;
        for (unsigned i = 0; i < e; ++i) r *= p_;
        return r;
    }

    /// Reduction of a p-integral rational.
    Word from_rational(const ExactRational& x) const {
        if (!is_p_integral(x, p_))
            raise(ErrorCode::NotPIntegral,
                  to_decimal(x) + " has denominator divisible by " + std::to_string(p_));
        return mul(from_integer(x.get_num()), inverse(from_integer(x.get_den())));
    }

    std::string to_string(Word a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
    unsigned m_;
    Word modulus_ = 1;
};

/// A residue with its ring attached; the convenience type of the public API.
/// Series and matrices store bare words next to a shared ring instead.
class ResidueElement {
public:
    ResidueElement(const ResidueRing& ring, Word canonical) : ring_(ring), value_(canonical) {
        if (canonical >= ring.modulus())
            raise(ErrorCode::InvalidArgument, "residue not canonical");
    }
    static ResidueElement from_integer(const ResidueRing& ring, const ExactInteger& x) {
        return ResidueElement(ring, ring.from_integer(x));
    }

    const ResidueRing& ring() const noexcept { return ring_; }
    Word value() const noexcept { return value_; }
    unsigned valuation() const noexcept { return ring_.valuation(value_); }

    friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }
    friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
        check(a, b);
        return {a.ring_, a.ring_.add(a.value_, b.value_)};
    }
    friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
        check(a, b);
        return {a.ring_, a.ring_.sub(a.value_, b.value_)};
    }
    friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
        check(a, b);
        return {a.ring_, a.ring_.mul(a.value_, b.value_)};
    }
    ResidueElement operator-() const { return {ring_, ring_.neg(value_)}; }

private:
    static void check(const ResidueElement& a, const ResidueElement& b) {
        if (!(a.ring_ == b.ring_)) raise(ErrorCode::RingMismatch, "residues from different rings");
    }
    ResidueRing ring_;
    Word value_;
};

inline ResidueElement reduce_rational(const ExactRational& x, const ResidueRing& ring) {
    return ResidueElement(ring, ring.from_rational(x));
}

inline ResidueElement invert_unit(const ResidueElement& x) {
    return ResidueElement(x.ring(), x.ring().inverse(x.value()));
}

}  // namespace eiscong
