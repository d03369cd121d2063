#pragma once

// Brute-force orbit machinery over explicitly enumerated groups.
//
// Two-sided orbits are computed by breadth-first search over elementary
// multipliers 1 + E_a, 1 + F_b (and torus generators for G^a). A double-loop
// variant over all of U^a x U^a exists for cross-checking at tiny sizes.

#include <cstdint>
#include <deque>
#include <functional>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "canon.hpp"

namespace borelsc {

enum class GroupKind { U, G };

inline const char* group_name(GroupKind g) { return g == GroupKind::U ? "U" : "G"; }

namespace detail {

inline std::vector<AlgebraElement> elementary_multipliers(const ContractedAlgebra& alg) {
    std::vector<AlgebraElement> out;
    for (Root r : all_roots(alg.n())) out.push_back(alg.add(alg.one(), alg.unit(r)));
    return out;
}

/// diag(1, ..., g0, ..., 1) for each position; these generate H.
inline std::vector<TorusElement> torus_generators(const ContractedAlgebra& alg) {
    std::vector<TorusElement> out;
    for (int i = 1; i <= alg.n(); ++i) {
        TorusElement t = TorusElement::identity(alg.n());
        t.entries[static_cast<std::size_t>(i - 1)] = FieldElem(alg.field().primitive_root());
        out.push_back(t);
    }
    return out;
}

/// t a t^{-1}, entrywise.
inline AlgebraElement torus_conjugate(const FieldSpec& f, const TorusElement& t, const AlgebraElement& a) {
    AlgebraElement out = a;
    const int n = a.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.at(i, j) = f.mul(f.mul(t.at(i), a.at(i, j)), f.inv(t.at(j)));
    return out;
}

}  // namespace detail

/// Index of a group element in the enumeration order of its group.
inline std::uint64_t group_index(const ContractedAlgebra& alg, GroupKind g, const AlgebraElement& x) {
    return g == GroupKind::U ? alg.index_U(x) : alg.index_G(x);
}
inline AlgebraElement group_element(const ContractedAlgebra& alg, GroupKind g, std::uint64_t k) {
    return g == GroupKind::U ? alg.element_U(k) : alg.element_G(k);
}
inline std::uint64_t group_order(const ContractedAlgebra& alg, GroupKind g) {
    return g == GroupKind::U ? alg.order_U() : alg.order_G();
}

/// One step neighbours of a group element under the generators of an action.
using NeighbourFn = std::function<void(const AlgebraElement&, const std::function<void(const AlgebraElement&)>&)>;

/// Superclass action neighbours: Y -> A Y, Y -> Y B (Y = g - 1), plus torus
/// conjugation for G^a.
inline NeighbourFn superclass_neighbours(const ContractedAlgebra& alg, GroupKind g) {
    auto gens = detail::elementary_multipliers(alg);
    auto tgens = g == GroupKind::G ? detail::torus_generators(alg) : std::vector<TorusElement>{};
    return [&alg, gens, tgens](const AlgebraElement& x, const std::function<void(const AlgebraElement&)>& visit) {
        AlgebraElement y = alg.sub(x, alg.one());
        for (const auto& a : gens) {
            visit(alg.add(alg.one(), alg.mul(a, y)));
            visit(alg.add(alg.one(), alg.mul(y, a)));
        }
        for (const auto& t : tgens) visit(detail::torus_conjugate(alg.field(), t, x));
    };
}

/// Conjugation neighbours: x -> a x a^{-1} over group generators.
inline NeighbourFn conjugation_neighbours(const ContractedAlgebra& alg, GroupKind g) {
    auto gens = detail::elementary_multipliers(alg);
    std::vector<AlgebraElement> invs;
    for (const auto& a : gens) invs.push_back(alg.invert(a));
    auto tgens = g == GroupKind::G ? detail::torus_generators(alg) : std::vector<TorusElement>{};
    return [&alg, gens, invs, tgens](const AlgebraElement& x, const std::function<void(const AlgebraElement&)>& visit) {
        for (std::size_t k = 0; k < gens.size(); ++k) visit(alg.mul(alg.mul(gens[k], x), invs[k]));
        for (const auto& t : tgens) visit(detail::torus_conjugate(alg.field(), t, x));
    };
}

/// Breadth-first orbit of start; elements are returned in discovery order.
inline std::vector<AlgebraElement> bfs_orbit(const ContractedAlgebra& alg, GroupKind g, const AlgebraElement& start,
                                             const NeighbourFn& next, std::uint64_t budget = ContractedAlgebra::default_budget) {
    ContractedAlgebra::check_budget(group_order(alg, g), budget);
    std::vector<bool> seen(group_order(alg, g), false);
    std::vector<AlgebraElement> out{start};
    seen[group_index(alg, g, start)] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        AlgebraElement cur = out[head];
        next(cur, [&](const AlgebraElement& y) {
            auto k = group_index(alg, g, y);
            if (!seen[k]) {
                seen[k] = true;
                out.push_back(y);
            }
        });
    }
    return out;
}

/// {1 + A X B : A, B in U^a}.
inline std::vector<AlgebraElement> orbit_U(const ContractedAlgebra& alg, const AlgebraElement& x,
                                           std::uint64_t budget = ContractedAlgebra::default_budget) {
    if (!x.in_radical()) throw DomainError("orbit_U expects an element of the radical");
    return bfs_orbit(alg, GroupKind::U, alg.add(alg.one(), x), superclass_neighbours(alg, GroupKind::U), budget);
}

/// {1 + t A (g - 1) B^{-1} t^{-1}}.
inline std::vector<AlgebraElement> orbit_G(const ContractedAlgebra& alg, const GroupElementG& g,
                                           std::uint64_t budget = ContractedAlgebra::default_budget) {
    return bfs_orbit(alg, GroupKind::G, g.element(), superclass_neighbours(alg, GroupKind::G), budget);
}

/// Double loop over all A, B (and t): reference for the BFS path. Sorted by index.
inline std::vector<AlgebraElement> orbit_double_loop(const ContractedAlgebra& alg, GroupKind g, const AlgebraElement& x,
                                                     std::uint64_t budget = ContractedAlgebra::default_budget) {
    const std::uint64_t nu = alg.order_U();
    ContractedAlgebra::check_budget(nu * nu, budget);
    std::vector<bool> seen(group_order(alg, g), false);
    std::vector<TorusElement> ts{TorusElement::identity(alg.n())};
    if (g == GroupKind::G) {
        ts.clear();
        for (std::uint64_t k = 0; k < alg.order_G(); k += nu) ts.push_back(alg.element_G(k).diagonal_part());
    }
    std::vector<AlgebraElement> us;
    alg.for_each_U([&](const AlgebraElement& u) { us.push_back(u); }, budget);
    AlgebraElement y = alg.sub(x, alg.one());
    for (const auto& a : us) {
        AlgebraElement ay = alg.mul(a, y);
        for (const auto& b : us) {
            AlgebraElement z = alg.add(alg.one(), alg.mul(ay, b));
            for (const auto& t : ts) seen[group_index(alg, g, detail::torus_conjugate(alg.field(), t, z))] = true;
        }
    }
    std::vector<AlgebraElement> out;
    for (std::uint64_t k = 0; k < seen.size(); ++k)
        if (seen[k]) out.push_back(group_element(alg, g, k));
    return out;
}

inline std::vector<AlgebraElement> conjugacy_class(const ContractedAlgebra& alg, GroupKind g, const AlgebraElement& x,
                                                   std::uint64_t budget = ContractedAlgebra::default_budget) {
    return bfs_orbit(alg, g, x, conjugation_neighbours(alg, g), budget);
}

/// Block id of every group element under an action; blocks numbered in
/// order of their smallest element.
struct OrbitPartition {
    std::vector<std::uint32_t> block_of;
    std::vector<std::uint64_t> representative;  // smallest index in each block
    std::vector<std::uint64_t> size;
};

inline OrbitPartition orbit_partition(const ContractedAlgebra& alg, GroupKind g, const NeighbourFn& next,
                                      std::uint64_t budget = ContractedAlgebra::default_budget) {
    const std::uint64_t order = group_order(alg, g);
    ContractedAlgebra::check_budget(order, budget);
    constexpr std::uint32_t none = UINT32_MAX;
    OrbitPartition p;
    p.block_of.assign(order, none);
    std::vector<AlgebraElement> queue;
    for (std::uint64_t k = 0; k < order; ++k) {
        if (p.block_of[k] != none) continue;
        auto id = static_cast<std::uint32_t>(p.size.size());
        p.representative.push_back(k);
        p.size.push_back(1);
        p.block_of[k] = id;
        queue.assign(1, group_element(alg, g, k));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            AlgebraElement cur = queue[head];
            next(cur, [&](const AlgebraElement& y) {
                auto j = group_index(alg, g, y);
                if (p.block_of[j] == none) {
                    p.block_of[j] = id;
                    ++p.size.back();
                    queue.push_back(y);
                }
            });
        }
    }
    return p;
}

// ---- class sizes --------------------------------------------------------

namespace detail {

/// Rank over F_q of a list of vectors.
inline std::size_t rank_mod_q(const FieldSpec& f, std::vector<std::vector<FieldElem>> rows) {
    std::size_t r = 0;
    const std::size_t ncol = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < ncol && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        FieldElem inv = f.inv(rows[r][c]);
        for (auto& v : rows[r]) v = f.mul(v, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            FieldElem m = rows[i][c];
            for (std::size_t k = 0; k < ncol; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(m, rows[r][k]));
        }
        ++r;
    }
    return r;
}

}  // namespace detail

/// |1 + U X U| = |J X + X J| for an algebra group, J the radical.
inline mpz_class superclass_size_U(const ContractedAlgebra& alg, const AlgebraElement& x) {
    std::vector<std::vector<FieldElem>> rows;
    for (Root r : all_roots(alg.n())) {
        rows.push_back(alg.mul(alg.unit(r), x).board());
        rows.push_back(alg.mul(x, alg.unit(r)).board());
    }
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), alg.q(), detail::rank_mod_q(alg.field(), std::move(rows)));
    return out;
}

inline mpz_class superclass_size_G(const ContractedAlgebra& alg, const AlgebraElement& g,
                                   std::uint64_t budget = ContractedAlgebra::default_budget) {
    return mpz_class(static_cast<unsigned long>(orbit_G(alg, GroupElementG(g), budget).size()));
}

}  // namespace borelsc
