#pragma once

// Verifiers for the Eisenstein and Bernoulli congruences. Every check is an
// exact comparison, either of residues in Z/p^m or of p-adic valuations of
// exact rationals, and returns a structured report instead of a bool.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eiscong/eisenstein.hpp"
#include "eiscong/modular_space.hpp"

namespace eiscong {

enum class StatementId {
    GkWithEFactor,        // G shift congruence with E_{p-1} powers
    EkWithEFactor,        // E_{a(p-1)} congruence with E_{p-1} powers
    GkFixed,              // G shift congruence, no E_{p-1} powers
    BernoulliInverse,     // d^{a(p-1)} a / B_{a(p-1)} congruence
    EkFixed,              // E_{a(p-1)} congruence, no E_{p-1} powers
    GkModP,               // G_k = G_k' mod p
    GkModPm,              // G_{k0} = G_{p^{m-1}(p-1)+k0} mod p^m
    Kummer,
    SunAlternatingSum,
    ConjectureEkSeries,
    ConjectureBernoulli,
    DivisorPower,
    BinomialIdentity,
    Telescoping,
    PRegular,
    ClausenVonStaudt,
    FactorBoundG,
    FactorBoundE,
    RefinedBound,
};

inline std::string_view wire_id(StatementId id) {
    switch (id) {
        case StatementId::GkWithEFactor: return "Thm1.1";
        case StatementId::EkWithEFactor: return "Thm1.2";
        case StatementId::GkFixed: return "Prop3.1";
        case StatementId::BernoulliInverse: return "Prop4.1";
        case StatementId::EkFixed: return "Prop4.2";
        case StatementId::GkModP: return "Eq1.4";
        case StatementId::GkModPm: return "Eq1.6";
        case StatementId::Kummer: return "Kummer";
        case StatementId::SunAlternatingSum: return "Sun97";
        case StatementId::ConjectureEkSeries: return "ConjEq6.1";
        case StatementId::ConjectureBernoulli: return "ConjEq6.4";
        case StatementId::DivisorPower: return "Eq3.1";
        case StatementId::BinomialIdentity: return "Prop3.2";
        case StatementId::Telescoping: return "Eq3.3";
        case StatementId::PRegular: return "PRegular";
        case StatementId::ClausenVonStaudt: return "ClausenVonStaudt";
        case StatementId::FactorBoundG: return "Cor1.3";
        case StatementId::FactorBoundE: return "Cor1.4";
        case StatementId::RefinedBound: return "Cor5.x";
    }
    return "?";
}

enum class Certification { CoefficientEvidence, SturmCertified, Exact };

inline std::string_view to_string(Certification c) {
    switch (c) {
        case Certification::CoefficientEvidence: return "coefficient-evidence";
        case Certification::SturmCertified: return "sturm-certified";
        case Certification::Exact: return "exact";
    }
    return "?";
}

struct FailureDetail {
    std::optional<std::size_t> index;  // q-power or sequence position
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct CongruenceReport {
    StatementId statement;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    std::optional<FailureDetail> failure;
    Certification certification = Certification::Exact;

    void fail(FailureDetail detail) {
        pass = false;
        failure = std::move(detail);
    }
};

inline nlohmann::json to_json(const CongruenceReport& r) {
    nlohmann::json j = {{"statement-id", wire_id(r.statement)},
                        {"params", r.params},
                        {"verdict", r.pass ? "Pass" : "Fail"},
                        {"certification", to_string(r.certification)}};
    if (r.failure) {
        nlohmann::json f = {{"lhs", r.failure->lhs}, {"rhs", r.failure->rhs}};
        if (r.failure->index) f["index"] = *r.failure->index;
        if (!r.failure->note.empty()) f["note"] = r.failure->note;
        j["failure-detail"] = f;
    } else {
        j["failure-detail"] = nullptr;
    }
    return j;
}

struct Budget {
    long max_bernoulli_index = 4000;
};

inline void require_bernoulli_budget(long index, const Budget& budget) {
    if (index > budget.max_bernoulli_index)
        raise(ErrorCode::BudgetExceeded, "needs B_" + std::to_string(index) + ", budget is index <= " +
                                             std::to_string(budget.max_bernoulli_index));
}

namespace detail {

inline void require_prime_at_least_5(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) raise(ErrorCode::InvalidArgument, "p must be a prime >= 5");
}

inline void require_kstar(std::uint64_t p, long m, long kstar) {
    if (kstar <= m) raise(ErrorCode::ParameterOutOfRange, "k* must exceed m");
    if (kstar % 2 != 0) raise(ErrorCode::OddWeight, "k* must be even");
    if (kstar % static_cast<long>(p - 1) == 0) raise(ErrorCode::NotPIntegral, "(p-1) divides k*");
}

inline void require_small_m(std::uint64_t p, long m) {
    if (m < 1 || m > static_cast<long>(p - 1))
        raise(ErrorCode::MOutOfRange, "needs 1 <= m <= p-1 (m=" + std::to_string(m) + ")");
}

inline Certification series_certification(long weight, std::size_t precision) {
    return precision >= sturm_bound(weight) ? Certification::SturmCertified
                                            : Certification::CoefficientEvidence;
}

inline void record_series_verdict(CongruenceReport& rep, const ResidueSeries& lhs, const ResidueSeries& rhs,
                                  std::size_t upto) {
    auto v = series_equal_mod(lhs, rhs, upto);
    if (!v.pass) rep.fail({v.index, std::to_string(v.lhs), std::to_string(v.rhs), {}});
}

/// sum_{r=0}^{m-1} H(m, alpha, r) term(r) [E_{p-1}^{alpha-r}]; terms with
/// r > alpha have H = 0 and are skipped.
template <class TermFn>
ResidueSeries h_combination(const ResidueRing& ring, long m, long alpha, std::size_t precision, bool with_e_factor,
                            TermFn term) {
    auto acc = ResidueSeries::zero(ring, precision);
    long top = std::min(m - 1, alpha);
    std::optional<ResidueSeries> e_power;
    ResidueSeries e_pm1 = with_e_factor ? e_series(static_cast<long>(ring.p() - 1), ring, precision)
                                        : ResidueSeries::one(ring, precision);
    if (with_e_factor) e_power = series_pow(e_pm1, static_cast<std::uint64_t>(alpha - top));
    for (long r = top; r >= 0; --r) {
        Word h = ring.from_integer(h_coefficient(m, alpha, r));
        if (h != 0) {
            auto t = term(r);
            if (with_e_factor) t = series_mul(t, *e_power);
            acc = acc + t.scaled(h);
        }
        if (with_e_factor && r > 0) e_power = series_mul(*e_power, e_pm1);
    }
    return acc;
}

inline Valuation rational_difference_valuation(const ExactRational& a, const ExactRational& b, std::uint64_t p) {
    return padic_valuation(ExactRational(a - b), p);
}

inline void record_valuation_verdict(CongruenceReport& rep, const ExactRational& lhs, const ExactRational& rhs,
                                     std::uint64_t p, long needed) {
    auto v = rational_difference_valuation(lhs, rhs, p);
    if (v < needed) {
        std::ostringstream note;
        note << "nu_p(lhs - rhs) = " << v << " < " << needed;
        rep.fail({std::nullopt, to_decimal(lhs), to_decimal(rhs), note.str()});
    }
}

}  // namespace detail

/// G_{a(p-1)+k*} against sum_r H(m,a,r) G_{r(p-1)+k*} E_{p-1}^{a-r} mod p^m.
inline CongruenceReport check_thm_gk(std::uint64_t p, long m, long kstar, long alpha, std::size_t precision,
                                     const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    if (m < 1 || alpha < 0 || precision < 1) raise(ErrorCode::ParameterOutOfRange, "needs m >= 1, alpha >= 0, N >= 1");
    detail::require_kstar(p, m, kstar);
    const long step = static_cast<long>(p - 1);
    const long weight = alpha * step + kstar;
    require_bernoulli_budget(weight, budget);
    CongruenceReport rep{StatementId::GkWithEFactor,
                         {{"p", p}, {"m", m}, {"kstar", kstar}, {"alpha", alpha}, {"N", precision}}};
    ResidueRing ring(p, static_cast<unsigned>(m));
    auto lhs = g_series(weight, ring, precision);
    auto rhs = detail::h_combination(ring, m, alpha, precision, true,
                                     [&](long r) { return g_series(r * step + kstar, ring, precision); });
    detail::record_series_verdict(rep, lhs, rhs, precision);
    rep.certification = detail::series_certification(weight, precision);
    return rep;
}

/// E_{a(p-1)} against sum_r H(m,a,r) E_{r(p-1)} E_{p-1}^{a-r} mod p^m, m <= p-1.
inline CongruenceReport check_thm_ek(std::uint64_t p, long m, long alpha, std::size_t precision,
                                     const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    detail::require_small_m(p, m);
    if (alpha < 1 || precision < 1) raise(ErrorCode::ParameterOutOfRange, "needs alpha >= 1, N >= 1");
    const long step = static_cast<long>(p - 1);
    require_bernoulli_budget(alpha * step, budget);
    CongruenceReport rep{StatementId::EkWithEFactor, {{"p", p}, {"m", m}, {"alpha", alpha}, {"N", precision}}};
    ResidueRing ring(p, static_cast<unsigned>(m));
    auto lhs = e_series(alpha * step, ring, precision);
    auto rhs = detail::h_combination(ring, m, alpha, precision, true,
                                     [&](long r) { return e_series(r * step, ring, precision); });
    detail::record_series_verdict(rep, lhs, rhs, precision);
    rep.certification = detail::series_certification(alpha * step, precision);
    return rep;
}

/// Different-weight form: G_{a(p-1)+k*} against sum_r H(m,a,r) G_{r(p-1)+k*}.
inline CongruenceReport check_prop_gk_fixed(std::uint64_t p, long m, long kstar, long alpha, std::size_t precision,
                                            const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    if (m < 1 || alpha < 0 || precision < 1) raise(ErrorCode::ParameterOutOfRange, "needs m >= 1, alpha >= 0, N >= 1");
    detail::require_kstar(p, m, kstar);
    const long step = static_cast<long>(p - 1);
    require_bernoulli_budget(alpha * step + kstar, budget);
    CongruenceReport rep{StatementId::GkFixed,
                         {{"p", p}, {"m", m}, {"kstar", kstar}, {"alpha", alpha}, {"N", precision}}};
    ResidueRing ring(p, static_cast<unsigned>(m));
    auto lhs = g_series(alpha * step + kstar, ring, precision);
    auto rhs = detail::h_combination(ring, m, alpha, precision, false,
                                     [&](long r) { return g_series(r * step + kstar, ring, precision); });
    detail::record_series_verdict(rep, lhs, rhs, precision);
    // sides have different weights, so no Sturm argument applies
    rep.certification = Certification::CoefficientEvidence;
    return rep;
}

inline CongruenceReport check_prop_ek_fixed(std::uint64_t p, long m, long alpha, std::size_t precision,
                                            const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    detail::require_small_m(p, m);
    if (alpha < 1 || precision < 1) raise(ErrorCode::ParameterOutOfRange, "needs alpha >= 1, N >= 1");
    const long step = static_cast<long>(p - 1);
    require_bernoulli_budget(alpha * step, budget);
    CongruenceReport rep{StatementId::EkFixed, {{"p", p}, {"m", m}, {"alpha", alpha}, {"N", precision}}};
    ResidueRing ring(p, static_cast<unsigned>(m));
    auto lhs = e_series(alpha * step, ring, precision);
    auto rhs = detail::h_combination(ring, m, alpha, precision, false,
                                     [&](long r) { return e_series(r * step, ring, precision); });
    detail::record_series_verdict(rep, lhs, rhs, precision);
    rep.certification = Certification::CoefficientEvidence;
    return rep;
}

/// d^{a(p-1)} against sum_r H(m,a,r) d^{r(p-1)} mod p^m, p not dividing d.
inline CongruenceReport check_divisor_power(std::uint64_t p, long m, long alpha, std::uint64_t d) {
    detail::require_prime_at_least_5(p);
    if (m < 1 || alpha < 0 || d == 0) raise(ErrorCode::ParameterOutOfRange, "needs m >= 1, alpha >= 0, d >= 1");
    if (d % p == 0) raise(ErrorCode::DNotCoprime, "p divides d");
    CongruenceReport rep{StatementId::DivisorPower, {{"p", p}, {"m", m}, {"alpha", alpha}, {"d", d}}};
    const unsigned long step = p - 1;
    ExactInteger base(static_cast<unsigned long>(d));
    ExactInteger lhs = ipow(base, static_cast<unsigned long>(alpha) * step);
    ExactInteger rhs = 0;
    for (long r = 0; r < m; ++r) rhs += h_coefficient(m, alpha, r) * ipow(base, static_cast<unsigned long>(r) * step);
    detail::record_valuation_verdict(rep, ExactRational(lhs), ExactRational(rhs), p, m);
    return rep;
}

/// d^{a(p-1)} a/B_{a(p-1)} against sum_{r=1}^{m-1} H(m,a,r) d^{r(p-1)} r/B_{r(p-1)} mod p^m.
inline CongruenceReport check_bernoulli_prop41(std::uint64_t p, long m, long alpha, std::uint64_t d,
                                               const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    detail::require_small_m(p, m);
    if (alpha < 1 || d == 0) raise(ErrorCode::ParameterOutOfRange, "needs alpha >= 1, d >= 1");
    if (d % p == 0) raise(ErrorCode::DNotCoprime, "p divides d");
    const unsigned long step = p - 1;
    require_bernoulli_budget(alpha * static_cast<long>(step), budget);
    CongruenceReport rep{StatementId::BernoulliInverse, {{"p", p}, {"m", m}, {"alpha", alpha}, {"d", d}}};
    ExactInteger base(static_cast<unsigned long>(d));
    auto term = [&](long r) -> ExactRational {
        long k = r * static_cast<long>(step);
        return ExactRational(ipow(base, static_cast<unsigned long>(k))) * ExactRational(r) / bernoulli(k);
    };
    ExactRational lhs = term(alpha);
    ExactRational rhs = 0;
    for (long r = 1; r < m; ++r) rhs += ExactRational(h_coefficient(m, alpha, r)) * term(r);
    detail::record_valuation_verdict(rep, lhs, rhs, p, m);
    return rep;
}

/// A p-integral sequence k -> f(k).
struct IntegerSequenceFunction {
    std::string name;
    std::function<ExactRational(long)> evaluate;

    ExactRational operator()(long k) const { return evaluate(k); }
};

inline IntegerSequenceFunction product(const IntegerSequenceFunction& f, const IntegerSequenceFunction& g) {
    return {"(" + f.name + ")*(" + g.name + ")", [f, g](long k) -> ExactRational { return f(k) * g(k); }};
}

/// sum_{k=0}^n C(n,k) (-1)^k f(k).
inline ExactRational alternating_binomial_sum(const IntegerSequenceFunction& f, long n) {
    ExactRational s = 0;
    for (long k = 0; k <= n; ++k) {
        ExactRational t = ExactRational(gen_binomial(n, k)) * f(k);
        if (k % 2) s -= t; else s += t;
    }
    return s;
}

/// One report per n in 1..n_max: nu_p of the n-th alternating binomial sum is >= n.
inline std::vector<CongruenceReport> check_p_regular(const IntegerSequenceFunction& f, std::uint64_t p, long n_max) {
    if (p < 2 || !is_prime(p)) raise(ErrorCode::InvalidArgument, "p must be prime");
    for (long k = 0; k <= n_max; ++k)
        if (!is_p_integral(f(k), p))
            raise(ErrorCode::NotPIntegral, f.name + " is not p-integral at k=" + std::to_string(k));
    std::vector<CongruenceReport> out;
    for (long n = 1; n <= n_max; ++n) {
        CongruenceReport rep{StatementId::PRegular, {{"p", p}, {"n", n}, {"f", f.name}}};
        auto v = padic_valuation(alternating_binomial_sum(f, n), p);
        if (v < n) {
            std::ostringstream note;
            note << "nu_p(sum) = " << v << " < " << n;
            rep.fail({static_cast<std::size_t>(n), to_decimal(alternating_binomial_sum(f, n)), "0", note.str()});
        }
        out.push_back(std::move(rep));
    }
    return out;
}

/// f(k) = (p - p^{k(p-1)}) B_{k(p-1)}.
inline IntegerSequenceFunction sun_function(std::uint64_t p) {
    return {"(p-p^(k(p-1)))B_(k(p-1))", [p](long k) -> ExactRational {
                const unsigned long e = static_cast<unsigned long>(k) * (p - 1);
                ExactInteger pp(static_cast<unsigned long>(p));
                return ExactRational(pp - ipow(pp, e)) * bernoulli(static_cast<long>(e));
            }};
}

/// Alternating sums of the Sun function: 0 mod p^n when (p-1) does not
/// divide n, p^{n-1} mod p^n when it does.
inline std::vector<CongruenceReport> check_sun97(std::uint64_t p, long n_max, const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    if (n_max < 1) raise(ErrorCode::ParameterOutOfRange, "needs n_max >= 1");
    require_bernoulli_budget(n_max * static_cast<long>(p - 1), budget);
    auto f = sun_function(p);
    std::vector<CongruenceReport> out;
    for (long n = 1; n <= n_max; ++n) {
        CongruenceReport rep{StatementId::SunAlternatingSum, {{"p", p}, {"n", n}}};
        ExactRational sum = alternating_binomial_sum(f, n);
        ExactRational expected =
            n % static_cast<long>(p - 1) == 0 ? ExactRational(ipow(long(p), static_cast<unsigned long>(n - 1))) : 0;
        detail::record_valuation_verdict(rep, sum, expected, p, n);
        out.push_back(std::move(rep));
    }
    return out;
}

/// (1-p^{k-1})B_k/k against the same at k' mod p^r.
inline CongruenceReport check_kummer(std::uint64_t p, long k, long k2, long r, const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    const long step = static_cast<long>(p - 1);
    if (r < 1 || k < 2 || k2 < 2 || k % 2 || k2 % 2)
        raise(ErrorCode::ParameterOutOfRange, "needs r >= 1 and even k, k' >= 2");
    if (k % step == 0) raise(ErrorCode::ParameterOutOfRange, "(p-1) divides k");
    ExactInteger period = ipow(long(p), static_cast<unsigned long>(r - 1)) * step;
    if (ExactInteger(k - k2) % period != 0) raise(ErrorCode::ParameterOutOfRange, "k and k' not congruent");
    require_bernoulli_budget(std::max(k, k2), budget);
    CongruenceReport rep{StatementId::Kummer, {{"p", p}, {"k", k}, {"k2", k2}, {"r", r}}};
    auto side = [&](long kk) -> ExactRational {
        ExactInteger pp(static_cast<unsigned long>(p));
        return ExactRational(1 - ipow(pp, static_cast<unsigned long>(kk - 1))) * bernoulli(kk) / ExactRational(kk);
    };
    detail::record_valuation_verdict(rep, side(k), side(k2), p, r);
    return rep;
}

/// B_k + sum_{(q-1) | k} 1/q is an integer (k even >= 2).
inline CongruenceReport check_clausen_von_staudt(long k) {
    if (k < 2 || k % 2) raise(ErrorCode::ParameterOutOfRange, "needs even k >= 2");
    CongruenceReport rep{StatementId::ClausenVonStaudt, {{"k", k}}};
    ExactRational s = bernoulli(k);
    for (long q = 2; q <= k + 1; ++q)
        if (k % (q - 1) == 0 && is_prime(static_cast<std::uint64_t>(q))) s += ExactRational(1, q);
    s.canonicalize();
    if (s.get_den() != 1) rep.fail({std::nullopt, to_decimal(s), "integer", "not integral"});
    return rep;
}

/// G_k = G_k' mod p for k = k' mod (p-1), (p-1) not dividing k.
inline CongruenceReport check_gk_mod_p(std::uint64_t p, long k, long k2, std::size_t precision) {
    detail::require_prime_at_least_5(p);
    const long step = static_cast<long>(p - 1);
    if ((k - k2) % step != 0 || k % step == 0) raise(ErrorCode::ParameterOutOfRange, "needs k = k' != 0 mod p-1");
    CongruenceReport rep{StatementId::GkModP, {{"p", p}, {"k", k}, {"k2", k2}, {"N", precision}}};
    ResidueRing ring(p, 1);
    detail::record_series_verdict(rep, g_series(k, ring, precision), g_series(k2, ring, precision), precision);
    rep.certification = Certification::CoefficientEvidence;
    return rep;
}

/// G_{k0} = G_{p^{m-1}(p-1)+k0} mod p^m for k0 > m.
inline CongruenceReport check_gk_mod_pm(std::uint64_t p, long m, long k0, std::size_t precision,
                                        const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    detail::require_kstar(p, m, k0);
    long shift = ipow(long(p), static_cast<unsigned long>(m - 1)).get_si() * static_cast<long>(p - 1);
    require_bernoulli_budget(k0 + shift, budget);
    CongruenceReport rep{StatementId::GkModPm, {{"p", p}, {"m", m}, {"k0", k0}, {"N", precision}}};
    ResidueRing ring(p, static_cast<unsigned>(m));
    detail::record_series_verdict(rep, g_series(k0, ring, precision), g_series(k0 + shift, ring, precision),
                                  precision);
    rep.certification = Certification::CoefficientEvidence;
    return rep;
}

/// Smallest multiple of p-1 exceeding m.
inline long smallest_multiple_above(std::uint64_t p, long m) {
    const long step = static_cast<long>(p - 1);
    return (m / step + 1) * step;
}

/// Bernoulli-side conjecture: (a(p-1)+k*)/B_{a(p-1)+k*} against
/// sum_r H(m,a,r) (r(p-1)+k*)/B_{r(p-1)+k*} mod p^m, for a in [alpha_lo, alpha_hi].
inline std::vector<CongruenceReport> scan_conjecture_bernoulli(std::uint64_t p, long m, long alpha_lo,
                                                               long alpha_hi, long kstar,
                                                               const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    const long step = static_cast<long>(p - 1);
    if (m < 1 || alpha_lo < 0 || alpha_hi < alpha_lo) raise(ErrorCode::ParameterOutOfRange, "bad m or alpha range");
    if (kstar <= m || kstar % step != 0) raise(ErrorCode::ParameterOutOfRange, "k* must be a multiple of p-1 above m");
    require_bernoulli_budget(std::max(alpha_hi, m - 1) * step + kstar, budget);
    auto term = [&](long a) -> ExactRational {
        long k = a * step + kstar;
        return ExactRational(k) / bernoulli(k);
    };
    std::vector<CongruenceReport> out;
    for (long a = alpha_lo; a <= alpha_hi; ++a) {
        CongruenceReport rep{StatementId::ConjectureBernoulli, {{"p", p}, {"m", m}, {"kstar", kstar}, {"alpha", a}}};
        ExactRational rhs = 0;
        for (long r = 0; r < m; ++r) {
            auto h = h_coefficient(m, a, r);
            if (h != 0) rhs += ExactRational(h) * term(r);
        }
        detail::record_valuation_verdict(rep, term(a), rhs, p, m);
        out.push_back(std::move(rep));
    }
    return out;
}

/// Series-side conjecture: E_{a(p-1)+k*} against sum_r H(m,a,r) E_{r(p-1)+k*} E_{p-1}^{a-r}.
inline CongruenceReport scan_conjecture_ek_series(std::uint64_t p, long m, long kstar, long alpha,
                                                  std::size_t precision, const Budget& budget = {}) {
    detail::require_prime_at_least_5(p);
    const long step = static_cast<long>(p - 1);
    if (m < 1 || alpha < 0 || precision < 1) raise(ErrorCode::ParameterOutOfRange, "needs m >= 1, alpha >= 0, N >= 1");
    if (kstar <= m || kstar % step != 0) raise(ErrorCode::ParameterOutOfRange, "k* must be a multiple of p-1 above m");
    const long weight = alpha * step + kstar;
    require_bernoulli_budget(weight, budget);
    CongruenceReport rep{StatementId::ConjectureEkSeries,
                         {{"p", p}, {"m", m}, {"kstar", kstar}, {"alpha", alpha}, {"N", precision}}};
    ResidueRing ring(p, static_cast<unsigned>(m));
    auto lhs = e_series(weight, ring, precision);
    auto rhs = detail::h_combination(ring, m, alpha, precision, true,
                                     [&](long r) { return e_series(r * step + kstar, ring, precision); });
    detail::record_series_verdict(rep, lhs, rhs, precision);
    rep.certification = Certification::CoefficientEvidence;
    return rep;
}

}  // namespace eiscong
