#pragma once

// Closed-form supercharacter values.
//
//   U^a:  chi_{D,phi}(K_{D',phi'}) = delta(D,D') q^{s(D) - r(D,D')} eps^{c(phi,phi')}
//   G^a:  chi_a(K_b) = delta(D,h) delta(D,D') theta(h) q^{m(D,h,D')} / |H_D|
//                      * sum_{t in H} eps^{c_t(phi,phi')}
// with m(D,h,D') = s(D) - r(D,D') - r(D,h), eps^x = zeta_q^x and
// c_t = sum over D cap D' of phi phi' t_i / t_j.

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "canon.hpp"
#include "cyclotomic.hpp"
#include "orbits.hpp"
#include "roots.hpp"

namespace borelsc {

using SupercharLabelU = SuperclassLabelU;

/// theta is given by exponents e_k over the free indices of H_D:
/// theta(h) = prod_k zeta_{q-1}^{e_k dlog h_{free_k}}.
struct SupercharLabelG {
    RookPlacement D;
    Decoration phi;
    std::vector<std::uint32_t> theta;
    friend bool operator==(const SupercharLabelG&, const SupercharLabelG&) = default;
    friend auto operator<=>(const SupercharLabelG&, const SupercharLabelG&) = default;
};

/// c(phi, phi') = sum_{gamma in D cap D'} phi(gamma) phi'(gamma).
inline FieldElem c_pair(const FieldSpec& f, const RookPlacement& d, const Decoration& phi, const RookPlacement& dp,
                        const Decoration& php) {
    FieldElem c(0);
    for (std::size_t k = 0; k < d.size(); ++k) {
        int idx = dp.index_of(d.roots()[k]);
        if (idx >= 0) c = f.add(c, f.mul(phi.values[k], php.values[static_cast<std::size_t>(idx)]));
    }
    return c;
}

inline mpz_class z_pow(std::uint64_t b, std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

inline CyclotomicNumber chi_U_value(const FieldSpec& f, int n, const SupercharLabelU& a, const SuperclassLabelU& b) {
    if (delta(a.D, b.D, n) == 0) return CyclotomicNumber(0L);
    std::size_t m = s_count(a.D, n) - r_count(a.D, b.D, n);
    FieldElem c = c_pair(f, a.D, a.phi, b.D, b.phi);
    return CyclotomicNumber::root(f.q(), f.additive_char_exponent(c)) * CyclotomicNumber(mpq_class(z_pow(f.q(), m)));
}

inline CyclotomicNumber theta_eval(const FieldSpec& f, const TorusMask& mask, const std::vector<std::uint32_t>& theta,
                                   const TorusElement& h) {
    if (theta.size() != mask.free.size()) throw DomainError("theta must have one exponent per free index");
    if (!mask.contains(h)) throw DomainError("theta evaluated outside H_D");
    std::uint64_t e = 0;
    for (std::size_t k = 0; k < theta.size(); ++k)
        e += f.mult_char_exponent(h.at(mask.free[k]), theta[k]);
    return CyclotomicNumber::root(f.q() - 1, static_cast<std::int64_t>(e % (f.q() - 1)));
}

/// One term c_gamma t_{row}/t_{col} of the exponent.
struct TorusTerm {
    Root root;
    FieldElem coeff;
};

namespace detail {

/// Sum over t in (F_q^*)^vars of zeta_q^{sum c t_i / t_j}, with t_{vars[0]} fixed
/// to 1 when fix_first is set.
inline std::vector<std::int64_t> torus_histogram(const FieldSpec& f, const std::vector<int>& vars,
                                                 const std::vector<TorusTerm>& terms, bool fix_first) {
    const std::uint32_t q = f.q();
    std::vector<std::int64_t> hist(q, 0);
    std::vector<std::uint32_t> t(static_cast<std::size_t>(*std::max_element(vars.begin(), vars.end()) + 1), 1);
    std::vector<std::uint32_t> tinv = t;
    std::size_t start = fix_first ? 1 : 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == vars.size()) {
            std::uint64_t e = 0;
            for (const auto& term : terms)
                e += std::uint64_t{term.coeff.value} * t[static_cast<std::size_t>(term.root.i)] % q *
                     tinv[static_cast<std::size_t>(term.root.j)] % q;
            ++hist[e % q];
            return;
        }
        auto v = static_cast<std::size_t>(vars[k]);
        for (std::uint32_t x = 1; x < q; ++x) {
            t[v] = x;
            tinv[v] = f.inv(FieldElem(x)).value;
            rec(k + 1);
        }
    };
    rec(start);
    return hist;
}

}  // namespace detail

/// sum_{t in H} zeta_q^{sum_gamma c_gamma t_i t_j^{-1}} by brute force over all of H.
inline CyclotomicNumber torus_sum_direct(const FieldSpec& f, int n, const std::vector<TorusTerm>& terms) {
    std::vector<int> vars(static_cast<std::size_t>(n));
    std::iota(vars.begin(), vars.end(), 1);
    return CyclotomicNumber::from_exponent_counts(f.q(), detail::torus_histogram(f, vars, terms, false));
}

/// Same sum, factorized over the connected components of the index graph of the
/// terms. Each component is invariant under scaling t by a constant, so one
/// vertex per component is fixed to 1 and the partial sum multiplied by q-1.
inline CyclotomicNumber torus_sum(const FieldSpec& f, int n, const std::vector<TorusTerm>& terms) {
    for (const auto& t : terms)
        if (!valid_root(t.root, n) || t.coeff.is_zero()) throw DomainError("torus_sum needs nonzero coefficients on valid roots");
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
    };
    std::set<int> used;
    for (const auto& t : terms) {
        used.insert(t.root.i), used.insert(t.root.j);
        parent[static_cast<std::size_t>(find(t.root.i))] = find(t.root.j);
    }
    CyclotomicNumber total(mpq_class(z_pow(f.q() - 1, static_cast<std::uint64_t>(n) - used.size())));
    std::map<int, std::vector<int>> comps;
    for (int v : used) comps[find(v)].push_back(v);
    for (const auto& [rep, vars] : comps) {
        std::vector<TorusTerm> local;
        std::copy_if(terms.begin(), terms.end(), std::back_inserter(local),
                     [&, r = rep](const TorusTerm& t) { return find(t.root.i) == r; });
        auto hist = detail::torus_histogram(f, vars, local, true);
        for (auto& h : hist) h *= (f.q() - 1);
        total *= CyclotomicNumber::from_exponent_counts(f.q(), hist);
    }
    return total;
}

/// Terms phi(gamma) phi'(gamma) over D cap D'.
inline std::vector<TorusTerm> intersection_terms(const FieldSpec& f, const RookPlacement& d, const Decoration& phi,
                                                 const RookPlacement& dp, const Decoration& php) {
    std::vector<TorusTerm> terms;
    for (std::size_t k = 0; k < d.size(); ++k) {
        int idx = dp.index_of(d.roots()[k]);
        if (idx >= 0) terms.push_back({d.roots()[k], f.mul(phi.values[k], php.values[static_cast<std::size_t>(idx)])});
    }
    return terms;
}

inline CyclotomicNumber chi_G_value(const FieldSpec& f, int n, const SupercharLabelG& a, const SuperclassLabelG& b) {
    TorusMask mask = torus_mask(a.D, n);
    if (!mask.contains(b.h)) return CyclotomicNumber(0L);
    if (delta(a.D, b.D, n) == 0) return CyclotomicNumber(0L);
    std::size_t s = s_count(a.D, n), r1 = r_count(a.D, b.D, n), r2 = r_of_h(a.D, b.h, n).size();
    CyclotomicNumber sum = torus_sum(f, n, intersection_terms(f, a.D, a.phi, b.D, b.phi));
    mpq_class scale(z_pow(f.q(), s), z_pow(f.q(), r1 + r2) * z_pow(f.q() - 1, mask.free.size()));
    scale.canonicalize();
    return theta_eval(f, mask, a.theta, b.h) * sum * CyclotomicNumber(scale);
}

// ---- label sets ---------------------------------------------------------

inline std::vector<SuperclassLabelU> labels_U(int n, std::uint32_t q) {
    std::vector<SuperclassLabelU> out;
    for (const auto& d : enumerate_rook_placements(n))
        for (auto& phi : enumerate_decorations(d, q)) out.push_back({d, std::move(phi)});
    std::sort(out.begin(), out.end());
    return out;
}

/// Torus-canonical decorations of D.
inline std::vector<Decoration> canonical_decorations(const FieldSpec& f, int n, const RookPlacement& d) {
    std::set<Decoration> s;
    for (const auto& phi : enumerate_decorations(d, f.q())) s.insert(h_canonical_phi(f, n, d, phi));
    return {s.begin(), s.end()};
}

/// H_D as a list, odometer over the free indices.
inline std::vector<TorusElement> enumerate_H_D(const RookPlacement& d, int n, std::uint32_t q) {
    TorusMask mask = torus_mask(d, n);
    std::vector<TorusElement> out;
    TorusElement h = TorusElement::identity(n);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == mask.free.size()) {
            out.push_back(h);
            return;
        }
        for (std::uint32_t v = 1; v < q; ++v) {
            h.entries[static_cast<std::size_t>(mask.free[k] - 1)] = FieldElem(v);
            rec(k + 1);
        }
        h.entries[static_cast<std::size_t>(mask.free[k] - 1)] = FieldElem(1);
    };
    rec(0);
    return out;
}

inline std::vector<SuperclassLabelG> labels_G_classes(const FieldSpec& f, int n) {
    std::vector<SuperclassLabelG> out;
    for (const auto& d : enumerate_rook_placements(n))
        for (const auto& phi : canonical_decorations(f, n, d))
            for (auto& h : enumerate_H_D(d, n, f.q())) out.push_back({d, phi, std::move(h)});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<SupercharLabelG> labels_G_chars(const FieldSpec& f, int n) {
    std::vector<SupercharLabelG> out;
    for (const auto& d : enumerate_rook_placements(n)) {
        std::size_t nfree = torus_mask(d, n).free.size();
        for (const auto& phi : canonical_decorations(f, n, d)) {
            std::vector<std::uint32_t> theta(nfree, 0);
            for (bool more = true; more;) {
                out.push_back({d, phi, theta});
                more = false;
                for (std::size_t k = nfree; k-- > 0;) {
                    if (theta[k] + 2 < f.q()) {
                        ++theta[k];
                        more = true;
                        break;
                    }
                    theta[k] = 0;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff replacing phi by t.phi leaves the value on every superclass unchanged.
inline bool h_independence_check(const FieldSpec& f, int n, const SupercharLabelG& a, const TorusElement& t) {
    SupercharLabelG moved = a;
    moved.phi = torus_act(f, t, a.D, a.phi);
    for (const auto& b : labels_G_classes(f, n))
        if (!(chi_G_value(f, n, a, b) == chi_G_value(f, n, moved, b))) return false;
    return true;
}

// ---- tables -------------------------------------------------------------

/// Row and column labels of a table share one serialized form: (D, phi) plus
/// h for G^a classes or theta for G^a characters.
struct TableLabel {
    RookPlacement D;
    Decoration phi;
    std::optional<TorusElement> h;
    std::optional<std::vector<std::uint32_t>> theta;
};

struct CharacterTable {
    GroupKind group = GroupKind::U;
    int n = 0;
    std::uint32_t q = 0;
    std::vector<TableLabel> rows;
    std::vector<TableLabel> cols;
    std::vector<CyclotomicNumber> degrees;
    std::vector<mpz_class> class_sizes;
    std::vector<std::vector<CyclotomicNumber>> values;
};

inline CharacterTable table_U(int n, std::uint32_t q, std::uint64_t budget = ContractedAlgebra::default_budget) {
    ContractedAlgebra alg(n, q);
    auto labels = labels_U(n, q);
    ContractedAlgebra::check_budget(labels.size() * labels.size(), budget);
    CharacterTable t;
    t.group = GroupKind::U, t.n = n, t.q = q;
    for (const auto& l : labels) {
        t.rows.push_back({l.D, l.phi, std::nullopt, std::nullopt});
        t.cols.push_back({l.D, l.phi, std::nullopt, std::nullopt});
        t.class_sizes.push_back(superclass_size_U(alg, alg.build_X(l.D, l.phi)));
    }
    for (const auto& a : labels) {
        std::vector<CyclotomicNumber> row;
        for (const auto& b : labels) row.push_back(chi_U_value(alg.field(), n, a, b));
        t.degrees.push_back(row.front());
        t.values.push_back(std::move(row));
    }
    return t;
}

inline CharacterTable table_G(int n, std::uint32_t q, std::uint64_t budget = ContractedAlgebra::default_budget) {
    ContractedAlgebra alg(n, q);
    ContractedAlgebra::check_budget(alg.order_G(), budget);
    auto rows = labels_G_chars(alg.field(), n);
    auto cols = labels_G_classes(alg.field(), n);
    ContractedAlgebra::check_budget(rows.size() * cols.size(), budget);
    CharacterTable t;
    t.group = GroupKind::G, t.n = n, t.q = q;
    for (const auto& a : rows) t.rows.push_back({a.D, a.phi, std::nullopt, a.theta});
    OrbitPartition orbits = orbit_partition(alg, GroupKind::G, superclass_neighbours(alg, GroupKind::G), budget);
    for (const auto& b : cols) {
        t.cols.push_back({b.D, b.phi, b.h, std::nullopt});
        auto block = orbits.block_of[alg.index_G(representative_G(alg, b))];
        t.class_sizes.push_back(mpz_class(static_cast<unsigned long>(orbits.size[block])));
    }
    for (const auto& a : rows) {
        std::vector<CyclotomicNumber> row;
        for (const auto& b : cols) row.push_back(chi_G_value(alg.field(), n, a, b));
        t.degrees.push_back(row.front());
        t.values.push_back(std::move(row));
    }
    return t;
}

}  // namespace borelsc
