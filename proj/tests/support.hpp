#pragma once

// Random generators shared by the test suites.

#include <random>

#include "borelsc/algebra.hpp"

namespace testsupport {

inline borelsc::AlgebraElement random_radical(const borelsc::ContractedAlgebra& alg, std::mt19937_64& rng) {
    borelsc::AlgebraElement x(alg.n());
    for (auto r : borelsc::all_roots(alg.n())) x.set(r, borelsc::FieldElem(static_cast<std::uint32_t>(rng() % alg.q())));
    return x;
}

inline borelsc::AlgebraElement random_U(const borelsc::ContractedAlgebra& alg, std::mt19937_64& rng) {
    return alg.add(alg.one(), random_radical(alg, rng));
}

inline borelsc::TorusElement random_torus(const borelsc::ContractedAlgebra& alg, std::mt19937_64& rng) {
    borelsc::TorusElement t = borelsc::TorusElement::identity(alg.n());
    for (auto& v : t.entries) v = borelsc::FieldElem(static_cast<std::uint32_t>(1 + rng() % (alg.q() - 1)));
    return t;
}

inline borelsc::AlgebraElement random_G(const borelsc::ContractedAlgebra& alg, std::mt19937_64& rng) {
    borelsc::AlgebraElement g = random_radical(alg, rng);
    auto t = random_torus(alg, rng);
    for (int i = 1; i <= alg.n(); ++i) g.set_diag(i, t.at(i));
    return g;
}

/// Arbitrary element of g^a, diagonal possibly zero.
inline borelsc::AlgebraElement random_any(const borelsc::ContractedAlgebra& alg, std::mt19937_64& rng) {
    borelsc::AlgebraElement g = random_radical(alg, rng);
    for (int i = 1; i <= alg.n(); ++i) g.set_diag(i, borelsc::FieldElem(static_cast<std::uint32_t>(rng() % alg.q())));
    return g;
}

}  // namespace testsupport
