#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "eiscong/bernoulli.hpp"
#include "oracles.hpp"

using namespace eiscong;

namespace {

long nu(const ExactRational& x, std::uint64_t p) { return padic_valuation(x, p).value(); }

std::filesystem::path temp_file(const std::string& name) {
    auto path = std::filesystem::temp_directory_path() / ("eiscong_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove(path);
    return path;
}

}  // namespace

TEST(Bernoulli, SmallValues) {
    EXPECT_EQ(bernoulli(0), 1);
    EXPECT_EQ(bernoulli(1), ExactRational(-1, 2));
    EXPECT_EQ(bernoulli(2), ExactRational(1, 6));
    EXPECT_EQ(to_decimal(bernoulli(12)), "-691/2730");
    EXPECT_EQ(bernoulli(7), 0);
}

TEST(Bernoulli, NegativeIndexRejected) {
    EXPECT_THROW(bernoulli(-2), Error);
}

TEST(Bernoulli, TangentRouteMatchesAkiyamaTanigawa) {
    auto ref = oracle::bernoulli_akiyama_tanigawa(160);
    for (long k = 0; k <= 160; ++k) EXPECT_EQ(bernoulli(k), ref[k]) << "k=" << k;
}

TEST(Bernoulli, RecurrenceRouteMatchesAkiyamaTanigawa) {
    auto ref = oracle::bernoulli_akiyama_tanigawa(80);
    auto rec = bernoulli_by_recurrence(80);
    for (long k = 0; k <= 80; ++k) EXPECT_EQ(rec[k], ref[k]) << "k=" << k;
}

TEST(Bernoulli, DefiningRecurrenceHoldsAtLargeIndex) {
    // sum_{j=0}^{n} C(n+1, j) B_j = 0, checked at n = 400
    const long n = 400;
    ExactRational s = 0;
    for (long j = 0; j <= n; ++j) s += ExactRational(gen_binomial(n + 1, j)) * bernoulli(j);
    EXPECT_EQ(s, 0);
}

TEST(Bernoulli, DenominatorIsSquareFreeProductOfPrimes) {
    for (long k = 2; k <= 120; k += 2) {
        ExactInteger den = bernoulli(k).get_den(), expect = 1;
        for (long q = 2; q <= k + 1; ++q)
            if (is_prime(static_cast<std::uint64_t>(q)) && k % (q - 1) == 0) expect *= q;
        EXPECT_EQ(den, expect) << "k=" << k;
    }
}

TEST(Bernoulli, TableIsThreadSafe) {
    BernoulliTable table;
    std::vector<std::thread> pool;
    std::vector<ExactRational> got(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { got[t] = table.get(200 + 20 * t); });
    for (auto& th : pool) th.join();
    for (int t = 0; t < 8; ++t) EXPECT_EQ(got[t], bernoulli(200 + 20 * t));
}

TEST(Valuation, Examples) {
    EXPECT_EQ(nu(ExactRational(1, 6), 5), 0);
    EXPECT_GE(nu(bernoulli(6) / 6, 5), 0);   // (5-1) does not divide 6
    EXPECT_EQ(nu(bernoulli(4) / 4, 5), -1);  // (5-1) divides 4: -nu(4) - 1
    EXPECT_EQ(nu(bernoulli(4), 5), -1);
    EXPECT_TRUE(padic_valuation(ExactRational(0), 5).is_infinite());
    EXPECT_EQ(nu(ExactRational(250, 3), 5), 3);
    EXPECT_EQ(nu(ExactRational(3, 250), 5), -3);
}

TEST(Valuation, Multiplicative) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-5000, 5000);
    for (int i = 0; i < 200; ++i) {
        long a = d(rng), b = d(rng), c = d(rng) | 1, e = d(rng) | 1;
        if (a == 0 || b == 0) continue;
        ExactRational x(a, c), y(b, e);
        x.canonicalize();
        y.canonicalize();
        EXPECT_EQ(nu(x * y, 7), nu(x, 7) + nu(y, 7));
    }
}

TEST(Valuation, ClassicalBernoulliFacts) {
    // (p-1) | k: nu_p(B_k) = -1; otherwise nu_p(B_k / k) >= 0
    for (std::uint64_t p : {5u, 7u, 11u, 13u})
        for (long k = 2; k <= 150; k += 2) {
            if (k % static_cast<long>(p - 1) == 0)
                EXPECT_EQ(nu(bernoulli(k), p), -1);
            else
                EXPECT_GE(nu(bernoulli(k) / k, p), 0);
        }
}

TEST(Binomial, Examples) {
    EXPECT_EQ(gen_binomial(-1, 1), -1);
    EXPECT_EQ(gen_binomial(3, 5), 0);
    EXPECT_EQ(gen_binomial(5, 2), 10);
    EXPECT_EQ(gen_binomial(4, -1), 0);
}

TEST(Binomial, MatchesFallingFactorial) {
    for (long top = -15; top <= 15; ++top)
        for (long j = 0; j <= 10; ++j) EXPECT_EQ(gen_binomial(top, j), oracle::falling_binomial(top, j));
}

TEST(Binomial, PascalRuleForNegativeTop) {
    for (long top = -12; top <= 12; ++top)
        for (long j = 1; j <= 9; ++j)
            EXPECT_EQ(gen_binomial(top, j), gen_binomial(top - 1, j) + gen_binomial(top - 1, j - 1));
}

TEST(HCoefficient, Examples) {
    EXPECT_EQ(h_coefficient(3, 5, 1), -15);
    EXPECT_EQ(h_coefficient(3, 5, 0), 6);
    EXPECT_EQ(h_coefficient(2, 4, 0), -3);
}

TEST(HCoefficient, KroneckerDeltaBelowM) {
    for (long m = 1; m <= 10; ++m)
        for (long a = 0; a < m; ++a)
            for (long r = 0; r < m; ++r) EXPECT_EQ(h_coefficient(m, a, r), r == a ? 1 : 0);
}

TEST(HCoefficient, MatchesDefinitionAndRejectsBadR) {
    for (long m = 1; m <= 8; ++m)
        for (long a = 0; a <= 25; ++a)
            for (long r = 0; r < m; ++r) EXPECT_EQ(h_coefficient(m, a, r), oracle::h_value(m, a, r));
    EXPECT_THROW(h_coefficient(3, 5, 3), Error);
    EXPECT_THROW(h_coefficient(3, 5, -1), Error);
}

TEST(HCoefficient, RowSumsToOne) {
    // sum_r H(m, a, r) = 1: the combination of constants reproduces 1
    for (long m = 1; m <= 9; ++m)
        for (long a = 0; a <= 30; ++a) {
            ExactInteger s = 0;
            for (long r = 0; r < m; ++r) s += h_coefficient(m, a, r);
            EXPECT_EQ(s, 1) << m << " " << a;
        }
}

TEST(Sigma, Examples) {
    EXPECT_EQ(sigma_power(11, 1), 1);
    EXPECT_EQ(sigma_power(3, 4), 73);
    EXPECT_EQ(sigma_power(1, 6), 12);
    EXPECT_THROW(sigma_power(3, 0), Error);
    for (unsigned long e : {0ul, 1ul, 3ul, 9ul})
        for (unsigned long n = 1; n <= 60; ++n) EXPECT_EQ(sigma_power(e, n), oracle::sigma(e, n));
}

TEST(Sigma, Multiplicative) {
    for (unsigned long a = 1; a <= 30; ++a)
        for (unsigned long b = 1; b <= 30; ++b)
            if (std::gcd(a, b) == 1) EXPECT_EQ(sigma_power(5, a * b), sigma_power(5, a) * sigma_power(5, b));
}

TEST(Cache, RecordRoundTrip) {
    std::ostringstream os;
    for (long k = 0; k <= 40; k += 2) os << format_cache_record({static_cast<std::size_t>(k), bernoulli(k)});
    std::istringstream is(os.str());
    auto recs = parse_cache(is);
    ASSERT_EQ(recs.size(), 21u);
    std::ostringstream again;
    for (const auto& r : recs) again << format_cache_record(r);
    EXPECT_EQ(again.str(), os.str());
    EXPECT_EQ(recs[6].value, bernoulli(12));
}

TEST(Cache, RejectsMalformedAndDuplicate) {
    for (std::string bad : {"12 -691/2730\n12 -691/2730\n", "x 1/2\n", "4 -1/30 7\n", "4\n", "4 1/0\n"}) {
        std::istringstream is(bad);
        EXPECT_THROW(parse_cache(is), Error) << bad;
    }
}

TEST(Cache, AppendOnlyFileRoundTrip) {
    auto path = temp_file("cache");
    BernoulliTable t1;
    t1.ensure(60);
    EXPECT_EQ(append_bernoulli_cache(path.string(), t1), 30u);
    auto first = [&] { std::ifstream f(path); return std::string(std::istreambuf_iterator<char>(f), {}); }();

    BernoulliTable t2;
    EXPECT_EQ(load_bernoulli_cache(path.string(), t2), 30u);
    EXPECT_EQ(t2.get(60), bernoulli(60));
    EXPECT_EQ(append_bernoulli_cache(path.string(), t2), 0u);  // nothing new
    t2.get(62);
    // geometric growth computes beyond 62; only unseen indices are appended
    append_bernoulli_cache(path.string(), t2);
    std::ifstream f(path);
    std::string all(std::istreambuf_iterator<char>(f), {});
    EXPECT_EQ(all.substr(0, first.size()), first);
    std::istringstream is(all);
    auto recs = parse_cache(is);
    for (const auto& r : recs) EXPECT_EQ(r.value, bernoulli(static_cast<long>(r.index)));
    std::filesystem::remove(path);
}

TEST(Cache, MissingFileIsEmpty) {
    BernoulliTable t;
    EXPECT_EQ(load_bernoulli_cache(temp_file("absent").string(), t), 0u);
}
