#pragma once

// Reference witnesses for the two reproduction runs. Source values also
// listed, one per line, in data/golden/.

#include <cstdint>
#include <string_view>
#include <vector>

#include "eiscong/eisenstein.hpp"
#include "eiscong/modular_space.hpp"

namespace eiscong {

struct GoldenExample {
    std::string_view id;
    EisensteinKind kind;
    std::uint64_t p;
    unsigned m;
    long weight;
    long bound;
    std::uint64_t e_exponent;
    std::vector<Monomial> monomials;
    std::vector<std::uint64_t> coefficients;
    long sharpness_weight;  // expected NoSolution
    std::size_t coefficients_compared;
};

inline const std::vector<GoldenExample>& golden_examples() {
    static const std::vector<GoldenExample> examples = {
        {"paper-7-8", EisensteinKind::G, 7, 8, 2026, 52, 329,
         {{13, 0, 0}, {10, 0, 1}, {7, 0, 2}, {4, 0, 3}, {1, 0, 4}},
         {289118, 3330770, 1615995, 4467661, 1172952},
         46, 170},
        {"paper-17-6", EisensteinKind::E, 17, 6, 1296, 80, 76,
         {{20, 0, 0}, {17, 0, 1}, {14, 0, 2}, {11, 0, 3}, {8, 0, 4}, {5, 0, 5}, {2, 0, 6}},
         {1, 17835578, 1427399, 23585491, 19629555, 23614096, 44217},
         64, 110},
    };
    return examples;
}

inline const GoldenExample* find_golden(std::string_view id) {
    for (const auto& g : golden_examples())
        if (g.id == id) return &g;
    return nullptr;
}

}  // namespace eiscong
