#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eiscong/error.hpp"

namespace eiscong {

/// dim M_k for level one.
inline long space_dimension(long weight) {
    if (weight < 0 || weight % 2) raise(ErrorCode::OddWeight, "weight " + std::to_string(weight) + " is not even and >= 0");
    if (weight % 12 == 2) return weight / 12;
    return weight / 12 + 1;
}

/// Agreement of q^0..q^{sturm_bound(k)} certifies congruence of two
/// weight-k forms with p-integral expansions.
inline std::size_t sturm_bound(long weight) {
    if (weight < 0 || weight % 2) raise(ErrorCode::OddWeight, "weight " + std::to_string(weight) + " is not even and >= 0");
    return static_cast<std::size_t>(weight / 12 + 1);
}

/// Exponents of E_4^a E_6^b Delta^c.
struct Monomial {
    unsigned a, b, c;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The monomials E_4^a E_6^b Delta^c, b in {0,1}, of the given weight with c ascending.
inline std::vector<Monomial> monomial_basis(long weight) {
    if (weight < 0 || weight % 2) raise(ErrorCode::OddWeight, "weight " + std::to_string(weight) + " is not even and >= 0");
    if (weight == 2) raise(ErrorCode::QuasimodularWeight, "weight 2 has no modular forms (E_2 is quasimodular)");
    std::vector<Monomial> out;
    for (long c = 0; 12 * c <= weight; ++c) {
        long rest = weight - 12 * c;
        if (rest % 4 == 0) out.push_back({static_cast<unsigned>(rest / 4), 0, static_cast<unsigned>(c)});
        else if (rest >= 6) out.push_back({static_cast<unsigned>((rest - 6) / 4), 1, static_cast<unsigned>(c)});
    }
    return out;
}

}  // namespace eiscong
