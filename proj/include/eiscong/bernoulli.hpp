#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

#include "eiscong/exact.hpp"

namespace eiscong {

/// Tangent numbers T_1..T_n (T_k = 1, 2, 16, 272, ...) by the in-place
/// integer recurrence: O(n^2) multiplications by machine words, no division.
inline std::vector<ExactInteger> tangent_numbers(std::size_t n) {
    std::vector<ExactInteger> t(n + 1);
    if (n == 0) return t;
    t[1] = 1;
    for (std::size_t k = 2; k <= n; ++k) t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t j = k; j <= n; ++j)
            t[j] = t[j - 1] * static_cast<unsigned long>(j - k) +
                   t[j] * static_cast<unsigned long>(j - k + 2);
    return t;
}

/// B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
inline ExactRational bernoulli_from_tangent(std::size_t k, const ExactInteger& tangent) {
    ExactInteger four_k = ExactInteger(1) << static_cast<mp_bitcnt_t>(2 * k);
    ExactRational b = make_rational(tangent * static_cast<unsigned long>(2 * k),
                                    four_k * (four_k - 1));
    if (k % 2 == 0) b = -b;
    return b;
}

/// Memo table of Bernoulli numbers keyed by index. Readers share a lock;
/// extending the table is serialized.
class BernoulliTable {
public:
    ExactRational get(std::size_t k) {
        if (k == 1) return ExactRational(-1, 2);
        if (k % 2 == 1) return 0;
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(k); it != values_.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        if (auto it = values_.find(k); it != values_.end()) return it->second;
        extend_locked(k);
        return values_.at(k);
    }

    /// Makes every even index <= k resident.
    void ensure(std::size_t k) {
        std::unique_lock lock(mutex_);
        if (contiguous_upto_locked() < k) extend_locked(k);
    }

    /// Inserts an externally supplied value (cache load). Not marked as new.
    void insert(std::size_t k, const ExactRational& value) {
        std::unique_lock lock(mutex_);
        values_.emplace(k, value);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return values_.size();
    }

    /// Entries computed in this process (not loaded), ascending by index.
    std::vector<std::pair<std::size_t, ExactRational>> fresh_entries() const {
        std::shared_lock lock(mutex_);
        std::vector<std::pair<std::size_t, ExactRational>> out;
        for (auto k : fresh_) out.emplace_back(k, values_.at(k));
        return out;
    }

    void clear_fresh_marks() {
        std::unique_lock lock(mutex_);
        fresh_.clear();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        values_.clear();
        fresh_.clear();
    }

private:
    std::size_t contiguous_upto_locked() const {
        std::size_t k = 0;
        while (values_.count(k + 2)) k += 2;
        return k;
    }

    void extend_locked(std::size_t k) {
        // Grow geometrically so scans over increasing indices stay O(n^2) total.
        std::size_t target = std::max(k, 2 * computed_upto_);
        target += target % 2;
        auto tangent = tangent_numbers(target / 2);
        values_.try_emplace(0, ExactRational(1));
        for (std::size_t i = 1; i <= target / 2; ++i) {
            auto [it, inserted] = values_.try_emplace(2 * i, bernoulli_from_tangent(i, tangent[i]));
            if (inserted) fresh_.insert(2 * i);
        }
        computed_upto_ = target;
    }

    mutable std::shared_mutex mutex_;
    std::map<std::size_t, ExactRational> values_;
    std::set<std::size_t> fresh_;
    std::size_t computed_upto_ = 0;
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

/// Exact B_k with B_1 = -1/2.
inline ExactRational bernoulli(long k) {
    if (k < 0) raise(ErrorCode::InvalidArgument, "bernoulli index must be >= 0");
    return bernoulli_table().get(static_cast<std::size_t>(k));
}

/// Plain rational recurrence sum_{j<=n} C(n+1, j) B_j = 0. Quadratic in
/// rationals; kept as an independent cross-check of the tangent route.
inline std::vector<ExactRational> bernoulli_by_recurrence(std::size_t n) {
    std::vector<ExactRational> b(n + 1);
    b[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        ExactRational acc = 0;
        for (std::size_t j = 0; j < i; ++j) acc += ExactRational(gen_binomial(long(i + 1), long(j))) * b[j];
        b[i] = -acc / ExactRational(static_cast<unsigned long>(i + 1));
    }
    return b;
}

// Cache file: one record per line, "k num/den" (or "k num" when integral).

struct CacheRecord {
    std::size_t index;
    ExactRational value;
};

inline std::string format_cache_record(const CacheRecord& rec) {
    return std::to_string(rec.index) + " " + to_decimal(rec.value) + "\n";
}

inline std::vector<CacheRecord> parse_cache(std::istream& in) {
    std::vector<CacheRecord> out;
    std::set<std::size_t> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos || sp == 0 || line.find(' ', sp + 1) != std::string::npos)
            raise(ErrorCode::CacheFormat, "line " + std::to_string(lineno) + ": expected 'k num/den'");
        std::size_t k = 0;
        try {
            std::size_t used = 0;
            k = std::stoul(line.substr(0, sp), &used);
            if (used != sp) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            raise(ErrorCode::CacheFormat, "line " + std::to_string(lineno) + ": bad index");
        }
        ExactRational v;
        try {
            v = parse_rational(line.substr(sp + 1));
        } catch (const Error&) {
            raise(ErrorCode::CacheFormat, "line " + std::to_string(lineno) + ": bad value");
        }
        if (!seen.insert(k).second)
            raise(ErrorCode::CacheFormat, "line " + std::to_string(lineno) + ": duplicate index");
        out.push_back({k, v});
    }
    return out;
}

/// Loads a cache file into the table; a missing file is an empty cache.
inline std::size_t load_bernoulli_cache(const std::string& path, BernoulliTable& table = bernoulli_table()) {
    std::ifstream in(path);
    if (!in) return 0;
    auto records = parse_cache(in);
    for (auto& r : records) table.insert(r.index, r.value);
    return records.size();
}

/// Appends entries computed since the last save; existing lines are untouched.
inline std::size_t append_bernoulli_cache(const std::string& path, BernoulliTable& table = bernoulli_table()) {
    std::set<std::size_t> present;
    {
        std::ifstream in(path);
        if (in)
            for (auto& r : parse_cache(in)) present.insert(r.index);
    }
    std::ofstream out(path, std::ios::app);
    if (!out) raise(ErrorCode::InvalidArgument, "cannot write cache file " + path);
    std::size_t written = 0;
    for (auto& [k, v] : table.fresh_entries()) {
        if (present.count(k)) continue;
        out << format_cache_record({k, v});
        ++written;
    }
    table.clear_fresh_marks();
    return written;
}

}  // namespace eiscong
