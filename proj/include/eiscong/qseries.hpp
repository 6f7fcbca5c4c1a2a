#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eiscong/residue.hpp"

namespace eiscong {

/// Coefficient ring for exact-rational series.
struct RationalField {
    using value_type = ExactRational;

    friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }

    ExactRational zero() const { return 0; }
    ExactRational one() const { return 1; }
    ExactRational add(const ExactRational& a, const ExactRational& b) const { return a + b; }
    ExactRational sub(const ExactRational& a, const ExactRational& b) const { return a - b; }
    ExactRational neg(const ExactRational& a) const { return -a; }
    ExactRational mul(const ExactRational& a, const ExactRational& b) const { return a * b; }
    bool equal(const ExactRational& a, const ExactRational& b) const { return a == b; }
    ExactRational from_integer(const ExactInteger& x) const { return ExactRational(x); }
    ExactRational from_int(long long x) const { return ExactRational(ExactInteger(static_cast<long>(x))); }
    ExactRational from_rational(const ExactRational& x) const { return x; }
    std::string to_string(const ExactRational& a) const { return to_decimal(a); }
};

/// Truncated q-expansion a_0 + a_1 q + ... + a_N q^N. Only the coefficients
/// up to the declared precision N exist; asking for more is an error, never
/// a silent zero.
template <class Ring>
class QSeries {
public:
    using value_type = typename Ring::value_type;

    QSeries(Ring ring, std::vector<value_type> coefficients)
        : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
        if (coeffs_.empty()) raise(ErrorCode::InvalidArgument, "series needs at least one coefficient");
    }

    static QSeries zero(const Ring& ring, std::size_t precision) {
        return QSeries(ring, std::vector<value_type>(precision + 1, ring.zero()));
    }
    static QSeries constant(const Ring& ring, std::size_t precision, value_type c) {
        auto s = zero(ring, precision);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    static QSeries one(const Ring& ring, std::size_t precision) { return constant(ring, precision, ring.one()); }
    /// q^k (zero series if k exceeds the precision).
    static QSeries monomial(const Ring& ring, std::size_t precision, std::size_t k) {
        auto s = zero(ring, precision);
        if (k <= precision) s.coeffs_[k] = ring.one();
        return s;
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t precision() const noexcept { return coeffs_.size() - 1; }
    const std::vector<value_type>& coefficients() const noexcept { return coeffs_; }

    const value_type& operator[](std::size_t n) const {
        if (n > precision())
            raise(ErrorCode::PrecisionTooLow, "coefficient q^" + std::to_string(n) +
                                                  " beyond precision " + std::to_string(precision()));
        return coeffs_[n];
    }
    void set(std::size_t n, value_type v) {
        if (n > precision()) raise(ErrorCode::PrecisionTooLow, "write beyond precision");
        coeffs_[n] = std::move(v);
    }

    QSeries truncated(std::size_t precision) const {
        if (precision > this->precision()) raise(ErrorCode::PrecisionTooLow, "cannot extend a truncated series");
        return QSeries(ring_, std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + precision + 1));
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        return combine(a, b, [&](const value_type& x, const value_type& y) { return a.ring_.add(x, y); });
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        return combine(a, b, [&](const value_type& x, const value_type& y) { return a.ring_.sub(x, y); });
    }
    QSeries scaled(const value_type& c) const {
        QSeries r = *this;
        for (auto& x : r.coeffs_) x = ring_.mul(c, x);
        return r;
    }

private:
    template <class Op>
    static QSeries combine(const QSeries& a, const QSeries& b, Op op) {
        require_same_ring(a, b);
        std::size_t n = std::min(a.precision(), b.precision());
        std::vector<value_type> out;
        out.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) out.push_back(op(a.coeffs_[i], b.coeffs_[i]));
        return QSeries(a.ring_, std::move(out));
    }

public:
    static void require_same_ring(const QSeries& a, const QSeries& b) {
        if (!(a.ring_ == b.ring_)) raise(ErrorCode::RingMismatch, "series over different rings");
    }

private:
    Ring ring_;
    std::vector<value_type> coeffs_;
};

using ResidueSeries = QSeries<ResidueRing>;
using RationalSeries = QSeries<RationalField>;

namespace detail {

inline ResidueSeries cauchy_product(const ResidueSeries& a, const ResidueSeries& b, std::size_t n) {
    const auto& ring = a.ring();
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<Word> out(n + 1, 0);
    const Word mod = ring.modulus();
    if (mod < (Word(1) << 32)) {
        // products fit in 64 bits, so a 128-bit accumulator never wraps
        for (std::size_t k = 0; k <= n; ++k) {
            unsigned __int128 acc = 0;
            for (std::size_t i = 0; i <= k; ++i) acc += static_cast<unsigned __int128>(x[i] * y[k - i]);
            out[k] = static_cast<Word>(acc % mod);
        }
    } else {
        for (std::size_t k = 0; k <= n; ++k) {
            Word acc = 0;
            for (std::size_t i = 0; i <= k; ++i) acc = ring.add(acc, ring.mul(x[i], y[k - i]));
            out[k] = acc;
        }
    }
    return ResidueSeries(ring, std::move(out));
}

template <class Ring>
QSeries<Ring> cauchy_product(const QSeries<Ring>& a, const QSeries<Ring>& b, std::size_t n) {
    const auto& ring = a.ring();
    std::vector<typename Ring::value_type> out(n + 1, ring.zero());
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t i = 0; i <= k; ++i) out[k] = ring.add(out[k], ring.mul(a[i], b[k - i]));
    return QSeries<Ring>(ring, std::move(out));
}

}  // namespace detail

/// Cauchy product truncated to the smaller precision.
template <class Ring>
QSeries<Ring> series_mul(const QSeries<Ring>& a, const QSeries<Ring>& b) {
    QSeries<Ring>::require_same_ring(a, b);
    return detail::cauchy_product(a, b, std::min(a.precision(), b.precision()));
}

/// a^n by repeated squaring; a^0 is the constant 1 at a's precision.
template <class Ring>
QSeries<Ring> series_pow(const QSeries<Ring>& a, std::uint64_t n) {
    auto result = QSeries<Ring>::one(a.ring(), a.precision());
    auto base = a;
    bool first = true;
    while (n) {
        if (n & 1) {
            result = first ? base : series_mul(result, base);
            first = false;
        }
        n >>= 1;
        if (n) base = series_mul(base, base);
    }
    return result;
}

template <class Ring>
struct CongruenceVerdict {
    bool pass = true;
    std::size_t index = 0;  // first differing q-power when !pass
    typename Ring::value_type lhs{};
    typename Ring::value_type rhs{};
};

/// Coefficient-wise comparison of q^0..q^upto.
template <class Ring>
CongruenceVerdict<Ring> series_equal_mod(const QSeries<Ring>& a, const QSeries<Ring>& b, std::size_t upto) {
    QSeries<Ring>::require_same_ring(a, b);
    if (a.precision() < upto || b.precision() < upto)
        raise(ErrorCode::PrecisionTooLow, "comparison through q^" + std::to_string(upto) +
                                              " needs both precisions >= " + std::to_string(upto));
    const auto& ring = a.ring();
    for (std::size_t i = 0; i <= upto; ++i)
        if (!ring.equal(a[i], b[i])) return {false, i, a[i], b[i]};
    return {};
}

/// Coefficient-wise image of an exact series in Z/p^m.
inline ResidueSeries reduce_series(const RationalSeries& s, const ResidueRing& ring) {
    std::vector<Word> out;
    out.reserve(s.precision() + 1);
    for (const auto& c : s.coefficients()) out.push_back(ring.from_rational(c));
    return ResidueSeries(ring, std::move(out));
}

inline nlohmann::json to_json(const ResidueSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto c : s.coefficients()) coeffs.push_back(std::to_string(c));
    return {{"p", s.ring().p()}, {"m", s.ring().m()}, {"precision", s.precision()}, {"coefficients", coeffs}};
}

inline nlohmann::json to_json(const RationalSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(to_decimal(c));
    return {{"p", nullptr}, {"m", nullptr}, {"precision", s.precision()}, {"coefficients", coeffs}};
}

inline ResidueSeries residue_series_from_json(const nlohmann::json& j) {
    ResidueRing ring(j.at("p").get<std::uint64_t>(), j.at("m").get<unsigned>());
    std::vector<Word> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(ring.from_integer(ExactInteger(c.get<std::string>())));
    if (coeffs.size() != j.at("precision").get<std::size_t>() + 1)
        raise(ErrorCode::InvalidArgument, "series JSON: precision does not match coefficient count");
    return ResidueSeries(ring, std::move(coeffs));
}

}  // namespace eiscong
