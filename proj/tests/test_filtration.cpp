#include <gtest/gtest.h>

#include <random>

#include "eiscong/reproduce.hpp"
#include "eiscong/linsolve.hpp"
#include "oracles.hpp"

using namespace eiscong;

namespace {

LinearSystem make_system(const ResidueRing& ring, const std::vector<std::vector<Word>>& a, const std::vector<Word>& b) {
    ResidueMatrix m(ring, a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m(i, j) = a[i][j];
    return {m, b};
}

void expect_sound(const LinearSystem& sys, const SolveResult& res) {
    const auto& ring = sys.matrix.ring();
    if (res.solvable()) {
        EXPECT_EQ(sys.matrix.apply(res.solution()), sys.rhs);
    } else {
        const auto& y = res.certificate();
        for (Word v : sys.matrix.apply_left(y)) EXPECT_EQ(v, 0u);
        Word yb = 0;
        for (std::size_t i = 0; i < y.size(); ++i) yb = ring.add(yb, ring.mul(y[i], sys.rhs[i]));
        EXPECT_NE(yb, 0u);
    }
}

std::vector<Word> words(const ResidueSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

}  // namespace

TEST(Solve, Identity) {
    ResidueRing ring(5, 2);
    auto sys = make_system(ring, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {3, 17, 24});
    auto res = solve_mod_pm(sys);
    ASSERT_TRUE(res.solvable());
    EXPECT_EQ(res.solution(), (std::vector<Word>{3, 17, 24}));
}

TEST(Solve, ValuationObstruction) {
    ResidueRing ring(5, 2);
    auto sys = make_system(ring, {{5}}, {3});
    auto res = solve_mod_pm(sys);
    EXPECT_FALSE(res.solvable());
    expect_sound(sys, res);
    auto ok = make_system(ring, {{5}}, {10});
    auto r2 = solve_mod_pm(ok);
    ASSERT_TRUE(r2.solvable());
    expect_sound(ok, r2);
}

TEST(Solve, RoundTripFromKnownVector) {
    std::mt19937_64 rng(11);
    for (auto [p, m] : {std::pair{7u, 8u}, {17u, 6u}, {5u, 3u}}) {
        ResidueRing ring(p, m);
        std::uniform_int_distribution<Word> d(0, ring.modulus() - 1);
        for (int t = 0; t < 30; ++t) {
            std::size_t rows = 3 + t % 9, cols = 1 + t % 6;
            ResidueMatrix a(ring, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) a(i, j) = (t % 3 == 0) ? ring.mul(d(rng), p) : d(rng);
            std::vector<Word> x(cols);
            for (auto& v : x) v = d(rng);
            LinearSystem sys{a, a.apply(x)};
            auto res = solve_mod_pm(sys);
            ASSERT_TRUE(res.solvable());
            expect_sound(sys, res);
        }
    }
}

TEST(Solve, AgreesWithEnumeration) {
    std::mt19937_64 rng(12);
    for (auto [p, m] : {std::pair{5u, 2u}, {7u, 2u}, {5u, 3u}}) {
        ResidueRing ring(p, m);
        const Word q = ring.modulus();
        std::uniform_int_distribution<Word> d(0, q - 1);
        std::uniform_int_distribution<int> shape(1, 3);
        for (int t = 0; t < 60; ++t) {
            std::size_t rows = shape(rng), cols = 1 + t % 2;
            std::vector<std::vector<Word>> a(rows, std::vector<Word>(cols));
            for (auto& row : a)
                for (auto& v : row) v = ring.mul(d(rng), ring.p_power(static_cast<unsigned>(d(rng) % (m + 1))));
            std::vector<Word> b(rows);
            for (auto& v : b) v = d(rng);
            auto sys = make_system(ring, a, b);
            auto res = solve_mod_pm(sys);
            bool exists = !oracle::all_solutions(a, b, cols, q).empty();
            EXPECT_EQ(res.solvable(), exists);
            expect_sound(sys, res);
        }
    }
}

TEST(Solve, RejectsMismatchedShape) {
    ResidueRing ring(5, 2);
    ResidueMatrix a(ring, 2, 2);
    EXPECT_THROW(solve_mod_pm({a, {1}}), Error);
    EXPECT_THROW(solve_mod_pm({a, {1, 25}}), Error);
}

// ---- basis and filtration ------------------------------------------------------

TEST(Basis, MonomialOrderAndShape) {
    ResidueRing ring(7, 2);
    auto b4 = basis(4, ring, 10);
    ASSERT_EQ(b4.dimension(), 1u);
    EXPECT_EQ(words(b4.columns[0]), words(e_series(4, ring, 10)));
    auto b52 = basis(52, ring, 10);
    ASSERT_EQ(b52.dimension(), 5u);
    EXPECT_EQ(b52.monomials.front(), (Monomial{13, 0, 0}));
    EXPECT_EQ(b52.monomials.back(), (Monomial{1, 0, 4}));
    EXPECT_EQ(basis(0, ring, 5).dimension(), 1u);
    EXPECT_THROW(basis(2, ring, 5), Error);
}

TEST(Basis, MillerForm) {
    ResidueRing ring(5, 3);
    auto b = basis(12, ring, 8, BasisForm::Miller);
    ASSERT_EQ(b.dimension(), 2u);
    EXPECT_EQ(b.entry(0, 0), 1u);
    EXPECT_EQ(b.entry(1, 0), 0u);
    EXPECT_EQ(b.entry(0, 1), 0u);
    EXPECT_EQ(b.entry(1, 1), 1u);
    // still spans the same space: E_4^3 is a combination of the two columns
    auto e43 = series_pow(e_series(4, ring, 8), 3);
    ResidueMatrix a(ring, 9, 2);
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t i = 0; i < 2; ++i) a(n, i) = b.entry(n, i);
    EXPECT_TRUE(solve_mod_pm({a, words(e43)}).solvable());
}

TEST(Filtration, ConstructedWitnessBoundsFiltration) {
    std::mt19937_64 rng(13);
    for (auto [p, m] : {std::pair{5u, 3u}, {7u, 2u}, {11u, 2u}}) {
        ResidueRing ring(p, m);
        std::uniform_int_distribution<Word> d(0, ring.modulus() - 1);
        const long step = static_cast<long>(p - 1);
        for (long w : {12L, 16L, 24L}) {
            if ((w - 4) % 2) continue;
            const long n = 3;
            const long k = w + n * step;
            const std::size_t prec = sturm_bound(k);
            auto b = basis(w, ring, prec);
            auto g = ResidueSeries::zero(ring, prec);
            for (auto& col : b.columns) g = g + col.scaled(d(rng));
            auto f = series_mul(g, series_pow(e_series(step, ring, prec), n));
            auto rep = factor_filtration_bound(f, k);
            EXPECT_LE(rep.bound(), w);
            EXPECT_TRUE(witness_reproduces(f, rep));
            EXPECT_TRUE(sharpness_probe(f, k, w).solvable);
        }
    }
}

TEST(Filtration, ProbeErrors) {
    ResidueRing ring(7, 2);
    auto f = g_series(16, ring, sturm_bound(16));
    EXPECT_THROW(sharpness_probe(f, 16, 8), Error);   // 8 != 16 mod 6
    EXPECT_THROW(sharpness_probe(f, 16, 2), Error);   // quasimodular
    EXPECT_THROW(sharpness_probe(f, 16, 22), Error);  // above the weight
}

TEST(Filtration, RejectedWeightsAreUnsolvable) {
    auto rep = g_filtration(7, 3, 100);
    auto f = g_series(100, ResidueRing(7, 3), sturm_bound(100));
    for (long w : rep.rejected_weights) EXPECT_FALSE(sharpness_probe(f, 100, w).solvable) << w;
    EXPECT_TRUE(sharpness_probe(f, 100, rep.bound()).solvable);
}

TEST(Filtration, ModPFiltration) {
    // mod p the filtration of G_k is at most k0 (the classical statement);
    // k0 = 2 is the quasimodular exception and yields p-1+2.
    for (std::uint64_t p : {5u, 7u, 11u})
        for (long k = 4; k <= 80; k += 2) {
            if (k % static_cast<long>(p - 1) == 0) continue;
            long k0 = residue_k0(p, k);
            auto rep = g_filtration(p, 1, k);
            EXPECT_LE(rep.bound(), k0 == 2 ? k0 + static_cast<long>(p - 1) : k0) << p << " " << k;
        }
}

TEST(Filtration, MonotoneInM) {
    // a witness mod p^{m+1} reduces to one mod p^m
    for (long k : {40L, 64L, 100L}) {
        long prev = 0;
        for (unsigned m = 1; m <= 4; ++m) {
            long b = g_filtration(7, m, k).bound();
            EXPECT_GE(b, prev) << k << " " << m;
            prev = b;
        }
    }
}

TEST(Filtration, OrdinaryFiltrationFactsForEk) {
    // (p-1) | k: E_k = 1 mod p, filtration 0
    for (std::uint64_t p : {5u, 7u, 13u})
        for (long a = 1; a <= 5; ++a) EXPECT_EQ(e_filtration(p, 1, a * static_cast<long>(p - 1)).bound(), 0);
}

TEST(Filtration, EvidenceModeMarksUncertified) {
    FiltrationOptions opts;
    opts.evidence_precision = 5;  // below the Sturm bound 9
    auto rep = g_filtration(7, 2, 100, opts);
    EXPECT_FALSE(rep.certified);
    EXPECT_EQ(to_json(rep)["certification"], "coefficient-evidence(5)");
}

TEST(Filtration, JsonUsesDecimalStrings) {
    auto j = to_json(g_filtration(7, 2, 40));
    EXPECT_TRUE(j["witness"]["coefficients"][0].is_string());
    EXPECT_TRUE(j.contains("bound-found"));
    EXPECT_TRUE(j["witness"].contains("n"));
}

TEST(Filtration, RefinedBoundTableExamples) {
    EXPECT_LE(refined_bound_case(5, 3, 14).bound, 14);
    EXPECT_EQ(refined_bound_case(7, 3, 4 + 6).bound, 10);
    EXPECT_EQ(refined_bound_case(7, 4, 2 + 6 * 50).bound, 8);
    EXPECT_TRUE(verify_refined_bounds(5, 3, 14).pass);
    EXPECT_TRUE(verify_refined_bounds(7, 4, 2 + 6 * 50).pass);
}

TEST(Reproduce, BothReferenceExamples) {
    for (const auto& g : golden_examples()) {
        auto res = run_reproduction(g);
        EXPECT_TRUE(res.matches()) << g.id;
        for (const auto& mm : res.mismatches) ADD_FAILURE() << mm;
        EXPECT_TRUE(res.witness_roundtrip);
        EXPECT_EQ(res.report.precision + 1, g.coefficients_compared);
    }
}

TEST(Reproduce, MillerFormWitnessAlsoReproduces) {
    ResidueRing ring(17, 6);
    auto f = e_series(1296, ring, sturm_bound(1296));
    FiltrationOptions opts;
    opts.form = BasisForm::Miller;
    auto rep = factor_filtration_bound(f, 1296, opts);
    EXPECT_EQ(rep.bound(), 80);
    EXPECT_EQ(rep.witness.e_exponent, 76);
    EXPECT_TRUE(witness_reproduces(f, rep));
}

TEST(Filtration, WeightTwoResidueModP) {
    // k = 2 mod (p-1): G_k = G_2 mod p and M_2 = 0, so the filtration is p+1
    for (std::uint64_t p : {5u, 7u, 11u, 13u})
        for (long a = 1; a <= 4; ++a) {
            auto rep = g_filtration(p, 1, a * static_cast<long>(p - 1) + 2);
            EXPECT_EQ(rep.bound(), static_cast<long>(p + 1)) << p << " " << a;
            EXPECT_FALSE(check_factor_bound_g(p, 1, a * static_cast<long>(p - 1) + 2).pass);
        }
}
