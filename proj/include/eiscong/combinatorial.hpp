#pragma once

// The vanishing identity sum_r C(a-r, j) H(m,a,r) H(m-j,r,s) = 0 and the
// pieces of its proof, each evaluated exactly: the telescoping relation,
// the two-term recurrence in m, the base case and its terminating 2F1.

#include "eiscong/congruence.hpp"

namespace eiscong {

struct IdentityParams {
    long m, j, s, alpha;
};

inline void require_identity_params(const IdentityParams& q) {
    if (q.j < 1 || q.j > q.m - 1 || q.s < 0 || q.s > q.m - q.j - 1 || q.alpha < 0)
        raise(ErrorCode::ParameterOutOfRange,
              "needs 1 <= j <= m-1, 0 <= s <= m-j-1, alpha >= 0 (m=" + std::to_string(q.m) +
                  ", j=" + std::to_string(q.j) + ", s=" + std::to_string(q.s) + ")");
}

/// sum_{r=s}^{m-1} C(alpha-r, j) H(m,alpha,r) H(m-j,r,s); zero by the identity.
inline ExactInteger combin_identity_sum(long m, long j, long s, long alpha) {
    require_identity_params({m, j, s, alpha});
    ExactInteger sum = 0;
    for (long r = s; r < m; ++r)
        sum += gen_binomial(alpha - r, j) * h_coefficient(m, alpha, r) * h_coefficient(m - j, r, s);
    return sum;
}

inline long sign_of_parity(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Summand F(m, r) in product-of-binomials form; m is the free parameter of
/// the recurrence, so it may exceed the identity's own range by one.
inline ExactInteger identity_summand(long m, long r, long j, long s, long alpha) {
    ExactInteger v = gen_binomial(alpha - r, j) * gen_binomial(alpha - 1 - r, m - 1 - r) * gen_binomial(alpha, r) *
                     gen_binomial(r - 1 - s, m - j - 1 - s) * gen_binomial(r, s);
    return sign_of_parity(r + j + s) * v;
}

/// Certificate G(r) of the telescoping relation; needs m - j - s > 0.
inline ExactRational telescoping_certificate(long m, long r, long j, long s, long alpha) {
    if (m - j - s <= 0) raise(ErrorCode::ParameterOutOfRange, "certificate needs m - j - s > 0");
    ExactInteger num = ExactInteger(s - r) * (j + r - alpha) * gen_binomial(r, s) * gen_binomial(alpha, r) *
                       gen_binomial(alpha - r, j) * gen_binomial(alpha - 1 - r, m - 1 - r) *
                       gen_binomial(r - 1 - s, m - j - 1 - s);
    return ExactRational(sign_of_parity(r + j + s) * num) / ExactRational(m - j - s);
}

/// S(m) with the summand F(m, .) (also valid at m = upper + 1).
inline ExactInteger identity_sum_by_summand(long m, long j, long s, long alpha) {
    ExactInteger sum = 0;
    for (long r = s; r < m; ++r) sum += identity_summand(m, r, j, s, alpha);
    return sum;
}

/// (alpha-m) F(m,r) + (m-s) F(m+1,r) == G(r) - G(r-1).
inline CongruenceReport check_telescoping(long m, long j, long s, long alpha, long r) {
    if (j < 1 || s < 0 || alpha < 0 || m - j - s <= 0)
        raise(ErrorCode::ParameterOutOfRange, "telescoping needs j >= 1, s >= 0, alpha >= 0, m - j - s > 0");
    CongruenceReport rep{StatementId::Telescoping, {{"m", m}, {"j", j}, {"s", s}, {"alpha", alpha}, {"r", r}}};
    ExactRational lhs = ExactRational((alpha - m) * identity_summand(m, r, j, s, alpha) +
                                      (m - s) * identity_summand(m + 1, r, j, s, alpha));
    ExactRational rhs = telescoping_certificate(m, r, j, s, alpha) - telescoping_certificate(m, r - 1, j, s, alpha);
    if (lhs != rhs) rep.fail({static_cast<std::size_t>(std::max(r, 0L)), to_decimal(lhs), to_decimal(rhs), {}});
    return rep;
}

/// Summing the telescoping relation over r = s..m-1 leaves the boundary
/// (m-s)F(m+1,m) + G(m-1) - G(s-1), which must vanish.
inline ExactRational telescoping_boundary(long m, long j, long s, long alpha) {
    return ExactRational((m - s) * identity_summand(m + 1, m, j, s, alpha)) +
           telescoping_certificate(m, m - 1, j, s, alpha) - telescoping_certificate(m, s - 1, j, s, alpha);
}

/// (alpha-m) S(m) + (m-s) S(m+1).
inline ExactInteger identity_recurrence_residual(long m, long j, long s, long alpha) {
    return (alpha - m) * identity_sum_by_summand(m, j, s, alpha) +
           (m - s) * identity_sum_by_summand(m + 1, j, s, alpha);
}

/// (a)_n = a (a+1) ... (a+n-1).
inline ExactInteger pochhammer(const ExactInteger& a, long n) {
    ExactInteger r = 1;
    for (long i = 0; i < n; ++i) r *= a + i;
    return r;
}

/// Terminating 2F1(-n, b; c; 1), c not a non-positive integer > -n.
inline ExactRational hypergeometric_2f1_terminating(long n, const ExactInteger& b, const ExactInteger& c) {
    ExactRational sum = 0;
    ExactInteger fact = 1;
    for (long i = 0; i <= n; ++i) {
        if (i > 0) fact *= i;
        ExactInteger den = pochhammer(c, i) * fact;
        if (den == 0) raise(ErrorCode::ParameterOutOfRange, "2F1 lower parameter hits zero");
        sum += ExactRational(pochhammer(ExactInteger(-n), i) * pochhammer(b, i)) / ExactRational(den);
    }
    return sum;
}

struct BaseCaseEvaluation {
    ExactInteger direct;          // S(s+j+1) summed directly
    ExactRational hypergeometric; // (-1)^j C(beta+s,s) C(beta,j) C(beta-1,j) 2F1(-j, j-beta; 1-beta; 1)
    ExactRational vandermonde;    // same prefactor times (1-j)_j / (1-beta)_j
};

/// The base case m = s+j+1 evaluated three ways; needs beta = alpha-s > j.
inline BaseCaseEvaluation identity_base_case(long j, long s, long alpha) {
    const long beta = alpha - s;
    if (j < 1 || s < 0 || beta <= j) raise(ErrorCode::ParameterOutOfRange, "base case needs j >= 1 and alpha - s > j");
    BaseCaseEvaluation out;
    out.direct = combin_identity_sum(s + j + 1, j, s, alpha);
    ExactRational prefactor = ExactRational(sign_of_parity(j) * gen_binomial(beta + s, s) * gen_binomial(beta, j) *
                                            gen_binomial(beta - 1, j));
    out.hypergeometric = prefactor * hypergeometric_2f1_terminating(j, ExactInteger(j - beta), ExactInteger(1 - beta));
    out.vandermonde =
        prefactor * ExactRational(pochhammer(ExactInteger(1 - j), j)) / ExactRational(pochhammer(ExactInteger(1 - beta), j));
    return out;
}

inline CongruenceReport check_combin_identity(long m, long j, long s, long alpha) {
    CongruenceReport rep{StatementId::BinomialIdentity, {{"m", m}, {"j", j}, {"s", s}, {"alpha", alpha}}};
    auto v = combin_identity_sum(m, j, s, alpha);
    if (v != 0) rep.fail({std::nullopt, to_decimal(v), "0", {}});
    return rep;
}

}  // namespace eiscong
