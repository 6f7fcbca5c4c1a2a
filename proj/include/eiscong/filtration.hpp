#pragma once

// Factor filtration bounds: the least weight w such that f = E_{p-1}^n g
// (mod p^m) for some g in M_w with n(p-1) + w = weight(f), decided by
// solving a linear system over Z/p^m at Sturm precision.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eiscong/congruence.hpp"
#include "eiscong/linsolve.hpp"
#include "eiscong/modular_space.hpp"

namespace eiscong {

enum class BasisForm { Monomial, Miller };

/// Integral basis of M_w as q-expansions, one column per basis element.
struct BasisMatrix {
    long weight;
    std::vector<Monomial> monomials;
    std::vector<ResidueSeries> columns;
    BasisForm form = BasisForm::Monomial;

    std::size_t dimension() const noexcept { return columns.size(); }
    std::size_t precision() const { return columns.front().precision(); }
    Word entry(std::size_t n, std::size_t i) const { return columns.at(i)[n]; }
};

/// E_4, E_6, Delta with memoized powers for one ring and precision.
class MonomialFactory {
public:
    MonomialFactory(const ResidueRing& ring, std::size_t precision)
        : ring_(ring),
          precision_(precision),
          e4_(e_series(4, ring, precision)),
          e6_(e_series(6, ring, precision)),
          delta_(delta_series(ring, precision)) {}

    const ResidueRing& ring() const noexcept { return ring_; }
    std::size_t precision() const noexcept { return precision_; }

    ResidueSeries series(const Monomial& mono) {
        auto s = power(e4_powers_, e4_, mono.a);
        if (mono.b) s = series_mul(s, power(e6_powers_, e6_, mono.b));
        if (mono.c) s = series_mul(s, power(delta_powers_, delta_, mono.c));
        return s;
    }

private:
    ResidueSeries power(std::map<unsigned, ResidueSeries>& memo, const ResidueSeries& base, unsigned e) {
        if (e == 0) return ResidueSeries::one(ring_, precision_);
        if (auto it = memo.find(e); it != memo.end()) return it->second;
        auto v = e == 1 ? base : series_mul(power(memo, base, e - 1), base);
        memo.emplace(e, v);
        return v;
    }

    ResidueRing ring_;
    std::size_t precision_;
    ResidueSeries e4_, e6_, delta_;
    std::map<unsigned, ResidueSeries> e4_powers_, e6_powers_, delta_powers_;
};

inline void echelonize_miller(BasisMatrix& b) {
    const auto& ring = b.columns.front().ring();
    const std::size_t d = b.dimension();
    if (b.precision() + 1 < d) raise(ErrorCode::PrecisionTooLow, "Miller form needs precision >= dim - 1");
    for (std::size_t i = d; i-- > 0;) {
        for (std::size_t j = i + 1; j < d; ++j) {
            Word c = b.columns[i][j];
            if (c != 0) b.columns[i] = b.columns[i] - b.columns[j].scaled(c);
        }
    }
    b.form = BasisForm::Miller;
    (void)ring;
}

inline BasisMatrix basis(long weight, MonomialFactory& factory, BasisForm form = BasisForm::Monomial) {
    BasisMatrix b{weight, monomial_basis(weight), {}, BasisForm::Monomial};
    for (const auto& mono : b.monomials) b.columns.push_back(factory.series(mono));
    if (form == BasisForm::Miller) echelonize_miller(b);
    return b;
}

inline BasisMatrix basis(long weight, const ResidueRing& ring, std::size_t precision,
                         BasisForm form = BasisForm::Monomial) {
    MonomialFactory factory(ring, precision);
    return basis(weight, factory, form);
}

struct Witness {
    long weight;                 // w
    std::uint64_t e_exponent;    // n with n(p-1) + w = weight(f)
    std::vector<Monomial> monomials;
    std::vector<Word> coefficients;
    BasisForm form = BasisForm::Monomial;
};

struct SharpnessVerdict {
    long weight;
    bool solvable;
};

struct FiltrationReport {
    nlohmann::json input = nlohmann::json::object();
    std::uint64_t p;
    unsigned m;
    long weight;            // weight of f
    std::size_t precision;  // highest compared q-power
    bool certified;         // precision >= sturm_bound(weight)
    Witness witness;
    std::vector<long> rejected_weights;  // candidates below the bound with no solution
    std::optional<SharpnessVerdict> sharpness;

    long bound() const noexcept { return witness.weight; }
};

struct ProbeResult {
    bool solvable;
    std::vector<Word> coefficients;  // valid when solvable
};

struct FiltrationOptions {
    std::optional<std::size_t> evidence_precision;  // compare q^0..q^N instead of the Sturm bound
    BasisForm form = BasisForm::Monomial;
};

namespace detail {

inline std::size_t comparison_precision(const ResidueSeries& f, long weight, const FiltrationOptions& opts) {
    std::size_t upto = opts.evidence_precision.value_or(sturm_bound(weight));
    if (f.precision() < upto)
        raise(ErrorCode::PrecisionTooLow, "f known through q^" + std::to_string(f.precision()) + ", need q^" +
                                              std::to_string(upto));
    return upto;
}

inline ProbeResult probe(const ResidueSeries& f, long weight, long w, std::size_t upto, MonomialFactory& factory,
                         BasisForm form) {
    const auto& ring = f.ring();
    const long step = static_cast<long>(ring.p() - 1);
    const auto n = static_cast<std::uint64_t>((weight - w) / step);
    auto ep = series_pow(e_series(step, ring, upto), n);
    auto b = basis(w, factory, form);
    ResidueMatrix a(ring, upto + 1, b.dimension());
    for (std::size_t i = 0; i < b.dimension(); ++i) {
        auto col = series_mul(b.columns[i].truncated(upto), ep);
        for (std::size_t r = 0; r <= upto; ++r) a(r, i) = col[r];
    }
    std::vector<Word> rhs(f.coefficients().begin(), f.coefficients().begin() + upto + 1);
    auto res = solve_mod_pm({a, rhs});
    if (!res.solvable()) return {false, {}};
    return {true, res.solution()};
}

inline void require_probe_weight(const ResidueRing& ring, long weight, long w) {
    const long step = static_cast<long>(ring.p() - 1);
    if ((weight - w) % step != 0)
        raise(ErrorCode::WeightMismatch, "weight " + std::to_string(w) + " is not congruent to " +
                                             std::to_string(weight) + " mod p-1");
    if (w > weight || w < 0) raise(ErrorCode::ParameterOutOfRange, "probe weight must lie in [0, weight(f)]");
    if (w % 2) raise(ErrorCode::OddWeight, "odd probe weight");
    if (w == 2) raise(ErrorCode::QuasimodularWeight, "weight 2 is not a target space");
}

}  // namespace detail

/// Is f = E_{p-1}^{(k-w)/(p-1)} g (mod p^m) for some g in M_w?
inline ProbeResult sharpness_probe(const ResidueSeries& f, long weight, long w, const FiltrationOptions& opts = {}) {
    detail::require_probe_weight(f.ring(), weight, w);
    auto upto = detail::comparison_precision(f, weight, opts);
    MonomialFactory factory(f.ring(), upto);
    return detail::probe(f, weight, w, upto, factory, opts.form);
}

/// Scans w = weight mod (p-1) upward and returns the first solvable weight.
inline FiltrationReport factor_filtration_bound(const ResidueSeries& f, long weight, const FiltrationOptions& opts = {},
                                                nlohmann::json input = nlohmann::json::object()) {
    if (weight < 4 || weight % 2) raise(ErrorCode::InvalidArgument, "f needs an even declared weight >= 4");
    const auto& ring = f.ring();
    const long step = static_cast<long>(ring.p() - 1);
    auto upto = detail::comparison_precision(f, weight, opts);
    MonomialFactory factory(ring, upto);
    FiltrationReport rep{std::move(input), ring.p(), ring.m(), weight, upto, upto >= sturm_bound(weight), {}, {}, {}};
    for (long w = weight % step; w <= weight; w += step) {
        if (w == 2) continue;
        auto res = detail::probe(f, weight, w, upto, factory, opts.form);
        if (!res.solvable) {
            rep.rejected_weights.push_back(w);
            continue;
        }
        rep.witness = {w, static_cast<std::uint64_t>((weight - w) / step), monomial_basis(w), res.coefficients, opts.form};
        return rep;
    }
    // w = weight itself is solvable for any genuine modular form of that weight
    raise(ErrorCode::InvalidArgument, "f is not congruent to any form of its declared weight");
}

/// Re-multiplies the witness and compares with f through the report's precision.
inline bool witness_reproduces(const ResidueSeries& f, const FiltrationReport& rep) {
    const auto& ring = f.ring();
    auto b = basis(rep.witness.weight, ring, rep.precision, rep.witness.form);
    auto g = ResidueSeries::zero(ring, rep.precision);
    for (std::size_t i = 0; i < b.dimension(); ++i) g = g + b.columns[i].scaled(rep.witness.coefficients.at(i));
    auto ep = series_pow(e_series(static_cast<long>(ring.p() - 1), ring, rep.precision), rep.witness.e_exponent);
    return series_equal_mod(series_mul(ep, g), f, rep.precision).pass;
}

inline std::string monomial_label(const Monomial& mono) {
    std::string s;
    auto part = [&](const char* name, unsigned e) {
        if (!e) return;
        if (!s.empty()) s += "*";
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    part("E4", mono.a);
    part("E6", mono.b);
    part("Delta", mono.c);
    return s.empty() ? "1" : s;
}

inline nlohmann::json to_json(const FiltrationReport& r) {
    nlohmann::json monos = nlohmann::json::array(), coeffs = nlohmann::json::array();
    for (const auto& mono : r.witness.monomials)
        monos.push_back({{"E4", mono.a}, {"E6", mono.b}, {"Delta", mono.c}, {"label", monomial_label(mono)}});
    for (auto c : r.witness.coefficients) coeffs.push_back(std::to_string(c));
    nlohmann::json j = {
        {"input", r.input},
        {"p", r.p},
        {"m", r.m},
        {"weight", r.weight},
        {"bound-found", r.bound()},
        {"witness",
         {{"n", r.witness.e_exponent},
          {"weight", r.witness.weight},
          {"basis", r.witness.form == BasisForm::Miller ? "miller" : "monomial"},
          {"monomials", monos},
          {"coefficients", coeffs}}},
        {"rejected-weights", r.rejected_weights},
        {"certification", r.certified ? "sturm-certified" : "coefficient-evidence(" + std::to_string(r.precision) + ")"},
        {"coefficients-compared", r.precision + 1},
        {"bound-kind", "exact-weight-match"},
    };
    if (r.sharpness)
        j["sharpness"] = {{"weight", r.sharpness->weight}, {"verdict", r.sharpness->solvable ? "Solvable" : "NoSolution"}};
    else
        j["sharpness"] = nullptr;
    return j;
}

/// Least non-negative residue of k mod (p-1).
inline long residue_k0(std::uint64_t p, long k) { return k % static_cast<long>(p - 1); }

/// Smallest integer greater than m congruent to k mod (p-1).
inline long residue_k0m(std::uint64_t p, long m, long k) {
    const long step = static_cast<long>(p - 1);
    long v = k % step;
    while (v <= m) v += step;
    return v;
}

/// G_k with enough precision for a certified filtration run.
inline FiltrationReport g_filtration(std::uint64_t p, unsigned m, long k, const FiltrationOptions& opts = {}) {
    ResidueRing ring(p, m);
    auto f = g_series(k, ring, opts.evidence_precision.value_or(sturm_bound(k)));
    return factor_filtration_bound(f, k, opts, {{"kind", "G"}, {"weight", k}});
}

inline FiltrationReport e_filtration(std::uint64_t p, unsigned m, long k, const FiltrationOptions& opts = {}) {
    ResidueRing ring(p, m);
    auto f = e_series(k, ring, opts.evidence_precision.value_or(sturm_bound(k)));
    return factor_filtration_bound(f, k, opts, {{"kind", "E"}, {"weight", k}});
}

/// Cor 1.3-type check: bound(G_k) <= (m-1)(p-1) + k0(m) and <= mp.
inline CongruenceReport check_factor_bound_g(std::uint64_t p, unsigned m, long k) {
    const long step = static_cast<long>(p - 1);
    if (k < 4 || k % 2 || k % step == 0) raise(ErrorCode::ParameterOutOfRange, "needs even k >= 4 with (p-1) not dividing k");
    CongruenceReport rep{StatementId::FactorBoundG, {{"p", p}, {"m", m}, {"k", k}}};
    auto fr = g_filtration(p, m, k);
    long limit = (static_cast<long>(m) - 1) * step + residue_k0m(p, m, k);
    rep.params["bound-found"] = fr.bound();
    rep.params["limit"] = limit;
    rep.certification = Certification::SturmCertified;
    if (fr.bound() > limit || fr.bound() > static_cast<long>(m * p))
        rep.fail({std::nullopt, std::to_string(fr.bound()), "<= " + std::to_string(limit), "bound exceeded"});
    return rep;
}

/// Cor 1.4-type check: bound(E_k) <= (m-1)(p-1) for (p-1) | k, m <= p-1.
inline CongruenceReport check_factor_bound_e(std::uint64_t p, unsigned m, long k) {
    const long step = static_cast<long>(p - 1);
    if (k < 4 || k % step != 0) raise(ErrorCode::ParameterOutOfRange, "needs k >= 4 divisible by p-1");
    detail::require_small_m(p, m);
    CongruenceReport rep{StatementId::FactorBoundE, {{"p", p}, {"m", m}, {"k", k}}};
    auto fr = e_filtration(p, m, k);
    long limit = (static_cast<long>(m) - 1) * step;
    rep.params["bound-found"] = fr.bound();
    rep.params["limit"] = limit;
    rep.certification = Certification::SturmCertified;
    if (fr.bound() > limit)
        rep.fail({std::nullopt, std::to_string(fr.bound()), "<= " + std::to_string(limit), "bound exceeded"});
    return rep;
}

struct RefinedBoundCase {
    long bound;
    std::string rule;
    bool external = false;  // bound taken from prior work rather than derived here
};

/// The case tables for m = 2, 3, 4 with k = alpha(p-1) + k0, 2 <= k0 <= p-3.
inline RefinedBoundCase refined_bound_case(std::uint64_t p, unsigned m, long k) {
    const long step = static_cast<long>(p - 1);
    const long k0 = residue_k0(p, k);
    const long alpha = (k - k0) / step;
    const long pp = static_cast<long>(p);
    auto mod = [](long a, long q) { return ((a % q) + q) % q; };
    auto row = [&](long mult, std::string rule) { return RefinedBoundCase{mult * step + k0, std::move(rule)}; };
    if (m == 2) {
        auto c = row(1, "(p-1)+k0");
        c.external = (k0 == 2);
        return c;
    }
    if (m == 3) {
        if (k0 >= 4) {
            if (mod(alpha, pp) <= 1) return row(1, "k0>=4, alpha=0,1 mod p");
            return row(2, "k0>=4, otherwise");
        }
        if (mod(alpha, pp) == 1) return row(1, "k0=2, alpha=1 mod p");
        if (mod(alpha, pp) == 2) return row(2, "k0=2, alpha=2 mod p");
        return row(3, "k0=2, otherwise");
    }
    if (m == 4) {
        const long p2 = pp * pp;
        if (k0 >= 6) {
            if (mod(alpha, p2) <= 1) return row(1, "k0>=6, alpha=0,1 mod p^2");
            if (mod(alpha, pp) <= 2) return row(2, "k0>=6, alpha=0,1,2 mod p");
            return row(3, "k0>=6, otherwise");
        }
        if (k0 == 4) {
            if (mod(alpha, p2) == 1) return row(1, "k0=4, alpha=1 mod p^2");
            if (mod(alpha, pp) == 1 || mod(alpha, pp) == 2) return row(2, "k0=4, alpha=1,2 mod p");
            if (mod(alpha, pp) == 3) return row(3, "k0=4, alpha=3 mod p");
            return row(4, "k0=4, otherwise");
        }
        if (mod(alpha, p2) == 1) return row(1, "k0=2, alpha=1 mod p^2");
        if (mod(alpha, p2) == 2) return row(2, "k0=2, alpha=2 mod p^2");
        if (mod(alpha, pp) >= 1 && mod(alpha, pp) <= 3) return row(3, "k0=2, alpha=1,2,3 mod p");
        return row(4, "k0=2, otherwise");
    }
    raise(ErrorCode::ParameterOutOfRange, "refined bounds exist for m in {2,3,4}");
}

inline CongruenceReport verify_refined_bounds(std::uint64_t p, unsigned m, long k) {
    const long step = static_cast<long>(p - 1);
    if (k < 4 || k % 2 || k % step == 0) raise(ErrorCode::ParameterOutOfRange, "needs even k >= 4 with (p-1) not dividing k");
    auto c = refined_bound_case(p, m, k);
    CongruenceReport rep{StatementId::RefinedBound,
                         {{"p", p}, {"m", m}, {"k", k}, {"k0", residue_k0(p, k)}, {"alpha", (k - residue_k0(p, k)) / step},
                          {"case", c.rule}, {"limit", c.bound}, {"source", c.external ? "external" : "derived"}}};
    auto fr = g_filtration(p, m, k);
    rep.params["bound-found"] = fr.bound();
    rep.certification = Certification::SturmCertified;
    if (fr.bound() > c.bound)
        rep.fail({std::nullopt, std::to_string(fr.bound()), "<= " + std::to_string(c.bound), c.rule});
    return rep;
}

}  // namespace eiscong
