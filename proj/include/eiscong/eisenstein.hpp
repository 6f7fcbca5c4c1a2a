#pragma once

// Level-one q-expansions: G_k, E_k, Delta and the factor E with
// E_{p-1} = 1 + pE, in exact or residue mode.

#include <string>

#include "eiscong/bernoulli.hpp"
#include "eiscong/qseries.hpp"

namespace eiscong {

enum class EisensteinKind { G, E };

struct EisensteinSpec {
    EisensteinKind kind;
    long weight;
};

inline void require_even_weight(long k, long minimum) {
    if (k < 0 || k % 2 != 0) raise(ErrorCode::OddWeight, "weight " + std::to_string(k) + " is not even and >= 0");
    if (k < minimum)
        raise(ErrorCode::InvalidArgument, "weight " + std::to_string(k) + " below " + std::to_string(minimum));
}

/// Constant term -B_k/(2k) of G_k.
inline ExactRational g_constant_term(long k) {
    require_even_weight(k, 2);
    return -bernoulli(k) / ExactRational(2 * k);
}

/// -2k/B_k, the factor in front of the divisor sums of E_k.
inline ExactRational e_normalizer(long k) {
    require_even_weight(k, 2);
    return ExactRational(-2 * k) / bernoulli(k);
}

/// sigma_e(n) mod p^m via modular powers of the divisors.
inline Word sigma_residue(const ResidueRing& ring, std::uint64_t e, std::uint64_t n) {
    Word s = 0;
    for (auto d : divisors(n)) s = ring.add(s, ring.pow(ring.from_integer(ExactInteger(static_cast<unsigned long>(d))), e));
    return s;
}

inline RationalSeries g_series_exact(long k, std::size_t precision) {
    std::vector<ExactRational> c(precision + 1);
    c[0] = g_constant_term(k);
    for (std::size_t n = 1; n <= precision; ++n) c[n] = ExactRational(sigma_power(k - 1, n));
    return RationalSeries({}, std::move(c));
}

inline RationalSeries e_series_exact(long k, std::size_t precision) {
    require_even_weight(k, 0);
    if (k == 0) return RationalSeries::one({}, precision);
    auto lead = e_normalizer(k);
    std::vector<ExactRational> c(precision + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= precision; ++n) c[n] = lead * ExactRational(sigma_power(k - 1, n));
    return RationalSeries({}, std::move(c));
}

/// G_k mod p^m. Needs (p-1) not dividing k, otherwise -B_k/2k has a p in
/// its denominator.
inline ResidueSeries g_series(long k, const ResidueRing& ring, std::size_t precision) {
    require_even_weight(k, 2);
    if (k % static_cast<long>(ring.p() - 1) == 0)
        raise(ErrorCode::NotPIntegral, "G_" + std::to_string(k) + " is not " + std::to_string(ring.p()) +
                                           "-integral since (p-1) | k");
    std::vector<Word> c(precision + 1);
    c[0] = ring.from_rational(g_constant_term(k));
    for (std::size_t n = 1; n <= precision; ++n) c[n] = sigma_residue(ring, k - 1, n);
    return ResidueSeries(ring, std::move(c));
}

/// E_k mod p^m, reducing the exact factor -2k/B_k (which raises NotPIntegral
/// when p divides the numerator of B_k/k, i.e. an irregular pair).
inline ResidueSeries e_series(long k, const ResidueRing& ring, std::size_t precision) {
    require_even_weight(k, 0);
    if (k == 0) return ResidueSeries::one(ring, precision);
    Word lead = ring.from_rational(e_normalizer(k));
    std::vector<Word> c(precision + 1);
    c[0] = ring.one();
    for (std::size_t n = 1; n <= precision; ++n) c[n] = ring.mul(lead, sigma_residue(ring, k - 1, n));
    return ResidueSeries(ring, std::move(c));
}

inline ResidueSeries eisenstein_series(const EisensteinSpec& spec, const ResidueRing& ring, std::size_t precision) {
    return spec.kind == EisensteinKind::G ? g_series(spec.weight, ring, precision)
                                          : e_series(spec.weight, ring, precision);
}

/// Delta = (E_4^3 - E_6^2) / 1728.
inline ResidueSeries delta_series(const ResidueRing& ring, std::size_t precision) {
    auto e4 = e_series(4, ring, precision);
    auto e6 = e_series(6, ring, precision);
    auto diff = series_mul(series_mul(e4, e4), e4) - series_mul(e6, e6);
    return diff.scaled(ring.inverse(ring.from_int(1728)));
}

struct EFactor {
    std::uint64_t p;
    ResidueSeries series;
};

/// E with E_{p-1} = 1 + pE. The division by p happens on the exact factor
/// -2(p-1)/B_{p-1}, which has p-adic valuation exactly one.
inline EFactor e_factor(const ResidueRing& ring, std::size_t precision) {
    const long k = static_cast<long>(ring.p() - 1);
    Word lead = ring.from_rational(e_normalizer(k) / ExactRational(static_cast<unsigned long>(ring.p())));
    std::vector<Word> c(precision + 1);
    c[0] = 0;
    for (std::size_t n = 1; n <= precision; ++n) c[n] = ring.mul(lead, sigma_residue(ring, k - 1, n));
    return {ring.p(), ResidueSeries(ring, std::move(c))};
}

/// E_4^a E_6^b Delta^c.
inline ResidueSeries monomial_series(unsigned a, unsigned b, unsigned c, const ResidueRing& ring,
                                     std::size_t precision) {
    auto s = series_pow(e_series(4, ring, precision), a);
    if (b) s = series_mul(s, series_pow(e_series(6, ring, precision), b));
    if (c) s = series_mul(s, series_pow(delta_series(ring, precision), c));
    return s;
}

}  // namespace eiscong
