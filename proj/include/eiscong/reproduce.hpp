#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eiscong/filtration.hpp"
#include "eiscong/golden.hpp"

namespace eiscong {

struct ReproductionResult {
    FiltrationReport report;
    bool witness_roundtrip;
    std::vector<std::string> mismatches;  // empty on an exact match

    bool matches() const noexcept { return mismatches.empty(); }
};

/// Filtration bound, witness and sharpness probe for a golden example, diffed
/// against the stored values.
inline ReproductionResult run_reproduction(const GoldenExample& g) {
    ResidueRing ring(g.p, g.m);
    const std::size_t upto = sturm_bound(g.weight);
    auto f = eisenstein_series({g.kind, g.weight}, ring, upto);
    auto rep = factor_filtration_bound(
        f, g.weight, {}, {{"kind", g.kind == EisensteinKind::G ? "G" : "E"}, {"weight", g.weight}, {"example", g.id}});
    auto probe = sharpness_probe(f, g.weight, g.sharpness_weight);
    rep.sharpness = SharpnessVerdict{g.sharpness_weight, probe.solvable};

    ReproductionResult out{rep, witness_reproduces(f, rep), {}};
    auto& diff = out.mismatches;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) diff.push_back(what);
    };
    expect(rep.bound() == g.bound, "bound " + std::to_string(rep.bound()) + " != " + std::to_string(g.bound));
    expect(rep.witness.e_exponent == g.e_exponent,
           "n " + std::to_string(rep.witness.e_exponent) + " != " + std::to_string(g.e_exponent));
    expect(rep.precision + 1 == g.coefficients_compared,
           "compared " + std::to_string(rep.precision + 1) + " coefficients, expected " +
               std::to_string(g.coefficients_compared));
    expect(rep.witness.monomials == g.monomials, "witness basis differs");
    if (rep.witness.coefficients.size() != g.coefficients.size()) {
        diff.push_back("witness has " + std::to_string(rep.witness.coefficients.size()) + " coefficients, expected " +
                       std::to_string(g.coefficients.size()));
    } else {
        for (std::size_t i = 0; i < g.coefficients.size(); ++i)
            expect(rep.witness.coefficients[i] == g.coefficients[i],
                   "coefficient of " + monomial_label(g.monomials[i]) + ": " +
                       std::to_string(rep.witness.coefficients[i]) + " != " + std::to_string(g.coefficients[i]));
    }
    expect(!probe.solvable, "sharpness probe at weight " + std::to_string(g.sharpness_weight) + " found a solution");
    expect(out.witness_roundtrip, "witness does not reproduce f");
    return out;
}

inline nlohmann::json to_json(const ReproductionResult& r) {
    auto j = to_json(r.report);
    j["match"] = r.matches();
    j["witness-roundtrip"] = r.witness_roundtrip;
    j["mismatches"] = r.mismatches;
    return j;
}

}  // namespace eiscong
