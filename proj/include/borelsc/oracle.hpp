#pragma once

// Independent ground truth: induced characters computed straight from their
// definition, brute-force stabilizers, exact inner products and axiom checks.
// Nothing here uses the closed-form value formulas.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "canon.hpp"
#include "chars.hpp"
#include "cyclotomic.hpp"
#include "orbits.hpp"
#include "roots.hpp"

namespace borelsc {

// ---- transversals -------------------------------------------------------

/// 1 + sum_{a in roots} c_a unit_a over all coefficient choices.
inline std::vector<AlgebraElement> elements_supported_on(const ContractedAlgebra& alg, const std::vector<Root>& roots,
                                                         std::uint64_t budget = ContractedAlgebra::default_budget) {
    const std::uint32_t q = alg.q();
    ContractedAlgebra::check_budget(ContractedAlgebra::ipow(q, static_cast<unsigned>(roots.size())), budget);
    std::vector<AlgebraElement> out;
    AlgebraElement cur = alg.one();
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == roots.size()) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v < q; ++v) {
            cur.set(roots[k], FieldElem(v));
            rec(k + 1);
        }
        cur.set(roots[k], FieldElem(0));
    };
    rec(0);
    return out;
}

/// The q^{s(D)} elements 1 + sum_{S+(D)} a E + sum_{S-(D)} a F.
inline std::vector<AlgebraElement> transversal_S(const ContractedAlgebra& alg, const RookPlacement& d) {
    return elements_supported_on(alg, s_of_D(d, alg.n()));
}
inline std::vector<AlgebraElement> transversal_S_star(const ContractedAlgebra& alg, const RookPlacement& d) {
    return elements_supported_on(alg, s_star_of_D(d, alg.n()));
}

// ---- stabilizers ----------------------------------------------------------

/// u - 1 avoids the given roots.
inline bool avoids(const AlgebraElement& u, const std::vector<Root>& roots) {
    for (Root r : roots)
        if (!u.coef(r).is_zero()) return false;
    return true;
}
inline bool in_U_D(const AlgebraElement& u, const RookPlacement& d) { return avoids(u, s_of_D(d, u.n())); }
inline bool in_U_star_D(const AlgebraElement& u, const RookPlacement& d) { return avoids(u, s_star_of_D(d, u.n())); }

/// {g in U^a : Lambda(g Y) = Lambda(Y) for all Y}, tested on the basis units (Lambda is linear).
inline std::vector<std::uint64_t> right_stabilizer_bruteforce(const ContractedAlgebra& alg, const Functional& l) {
    std::vector<std::uint64_t> out;
    auto units = all_roots(alg.n());
    alg.for_each_U([&](const AlgebraElement& g) {
        for (Root r : units) {
            AlgebraElement y = alg.unit(r);
            if (alg.evaluate(l, alg.mul(g, y)) != alg.evaluate(l, y)) return;
        }
        out.push_back(alg.index_U(g));
    });
    return out;
}

/// {g in U^a : Lambda(Y g) = Lambda(Y) for all Y}.
inline std::vector<std::uint64_t> left_stabilizer_bruteforce(const ContractedAlgebra& alg, const Functional& l) {
    std::vector<std::uint64_t> out;
    auto units = all_roots(alg.n());
    alg.for_each_U([&](const AlgebraElement& g) {
        for (Root r : units) {
            AlgebraElement y = alg.unit(r);
            if (alg.evaluate(l, alg.mul(y, g)) != alg.evaluate(l, y)) return;
        }
        out.push_back(alg.index_U(g));
    });
    return out;
}

// ---- induced characters ---------------------------------------------------

enum class InductionRoute { right_transversal, left_transversal, frobenius };

namespace detail {

/// Exponent of xi_{D,phi}(u) = eps^{Lambda(u - 1)}, or -1 when u is outside the subgroup.
inline std::int64_t xi_exponent(const FieldSpec& f, const RookPlacement& d, const Decoration& phi,
                                const std::vector<Root>& forbidden, const AlgebraElement& u) {
    if (!avoids(u, forbidden)) return -1;
    FieldElem s(0);
    for (std::size_t k = 0; k < d.size(); ++k) s = f.add(s, f.mul(phi.values[k], u.coef(d.roots()[k])));
    return f.additive_char_exponent(s);
}

}  // namespace detail

/// Character of U^a induced from xi_{D,phi} on the right stabilizer U_D (or the
/// left stabilizer U*_D), evaluated at u.
inline CyclotomicNumber induced_chi_U(const ContractedAlgebra& alg, const RookPlacement& d, const Decoration& phi,
                                      const AlgebraElement& u, InductionRoute route = InductionRoute::right_transversal,
                                      std::uint64_t budget = ContractedAlgebra::default_budget) {
    const FieldSpec& f = alg.field();
    const int n = alg.n();
    check_decoration(d, phi);
    if (!GroupElementU(u).element().unipotent()) throw DomainError("induced_chi_U expects a unipotent element");
    std::vector<std::int64_t> hist(f.q(), 0);
    auto add = [&](std::int64_t e) {
        if (e >= 0) ++hist[static_cast<std::size_t>(e)];
    };
    switch (route) {
        case InductionRoute::right_transversal: {
            auto forbidden = s_of_D(d, n);
            for (const auto& s : transversal_S(alg, d))
                add(detail::xi_exponent(f, d, phi, forbidden, alg.mul(alg.mul(s, u), alg.invert(s))));
            return CyclotomicNumber::from_exponent_counts(f.q(), hist);
        }
        case InductionRoute::left_transversal: {
            auto forbidden = s_star_of_D(d, n);
            for (const auto& s : transversal_S_star(alg, d))
                add(detail::xi_exponent(f, d, phi, forbidden, alg.mul(alg.mul(alg.invert(s), u), s)));
            return CyclotomicNumber::from_exponent_counts(f.q(), hist);
        }
        case InductionRoute::frobenius: {
            auto forbidden = s_of_D(d, n);
            alg.for_each_U(
                [&](const AlgebraElement& x) {
                    add(detail::xi_exponent(f, d, phi, forbidden, alg.mul(alg.mul(x, u), alg.invert(x))));
                },
                budget);
            mpz_class stab;
            mpz_ui_pow_ui(stab.get_mpz_t(), f.q(), static_cast<unsigned long>(n * (n - 1)) - forbidden.size());
            return CyclotomicNumber::from_exponent_counts(f.q(), hist) / mpq_class(stab);
        }
    }
    throw std::logic_error("unknown induction route");
}

namespace detail {

/// xi_a(g) = theta(h) eps^{Lambda(X)} for g = h(1 + X) in G_D = H_D U_D, as an
/// exponent of zeta_{q(q-1)}; -1 outside G_D.
inline std::int64_t xi_G_exponent(const ContractedAlgebra& alg, const SupercharLabelG& a, const TorusMask& mask,
                                  const std::vector<Root>& forbidden, const AlgebraElement& g) {
    const FieldSpec& f = alg.field();
    const std::int64_t q = f.q();
    TorusElement h = g.diagonal_part();
    if (!mask.contains(h)) return -1;
    AlgebraElement hinv(alg.n());
    for (int i = 1; i <= alg.n(); ++i) hinv.set_diag(i, f.inv(h.at(i)));
    std::int64_t lam = xi_exponent(f, a.D, a.phi, forbidden, alg.mul(hinv, g));
    if (lam < 0) return -1;
    std::int64_t th = 0;
    for (std::size_t k = 0; k < mask.free.size(); ++k) th += f.mult_char_exponent(h.at(mask.free[k]), a.theta[k]);
    return ((q - 1) * lam + q * (th % (q - 1))) % (q * (q - 1));
}

inline std::vector<TorusElement> all_torus(const ContractedAlgebra& alg) {
    std::vector<TorusElement> out;
    const std::uint64_t nu = alg.order_U();
    for (std::uint64_t k = 0; k < alg.order_G(); k += nu) out.push_back(alg.element_G(k).diagonal_part());
    return out;
}

}  // namespace detail

/// (1/|H_D|) sum over p = t s, t in H, s in the S(D) transversal, of xi_a(p g p^{-1}).
/// With frobenius: (1/|G_D|) sum over all x in G^a of xi_a(x g x^{-1}).
inline CyclotomicNumber induced_chi_G(const ContractedAlgebra& alg, const SupercharLabelG& a, const AlgebraElement& g,
                                      bool frobenius = false, std::uint64_t budget = ContractedAlgebra::default_budget) {
    const FieldSpec& f = alg.field();
    const int n = alg.n();
    const std::uint64_t m = std::uint64_t{f.q()} * (f.q() - 1);
    GroupElementG checked(g);
    TorusMask mask = torus_mask(a.D, n);
    if (a.theta.size() != mask.free.size()) throw DomainError("theta must have one exponent per free index");
    auto forbidden = s_of_D(a.D, n);
    std::vector<std::int64_t> hist(m, 0);
    auto add = [&](const AlgebraElement& x) {
        std::int64_t e = detail::xi_G_exponent(alg, a, mask, forbidden, x);
        if (e >= 0) ++hist[static_cast<std::size_t>(e)];
    };
    mpz_class denom(static_cast<unsigned long>(h_d_size(a.D, n, f.q())));
    if (frobenius) {
        alg.for_each_G([&](const AlgebraElement& x) { add(alg.mul(alg.mul(x, g), alg.invert(x))); }, budget);
        mpz_class ud;
        mpz_ui_pow_ui(ud.get_mpz_t(), f.q(), static_cast<unsigned long>(n * (n - 1)) - forbidden.size());
        denom *= ud;
    } else {
        auto ts = detail::all_torus(alg);
        auto ss = transversal_S(alg, a.D);
        for (const auto& t : ts) {
            AlgebraElement tt = AlgebraElement::diagonal(t);
            for (const auto& s : ss) {
                AlgebraElement p = alg.mul(tt, s);
                add(alg.mul(alg.mul(p, g), alg.invert(p)));
            }
        }
    }
    return CyclotomicNumber::from_exponent_counts(m, hist) / mpq_class(denom);
}

// ---- inner products -------------------------------------------------------

/// (1/|G|) sum_classes size * f * conj(g).
inline CyclotomicNumber inner_product(const std::vector<CyclotomicNumber>& f1, const std::vector<CyclotomicNumber>& f2,
                                      const std::vector<mpz_class>& sizes) {
    if (f1.size() != f2.size() || f1.size() != sizes.size())
        throw DomainError("inner product needs class functions on the same classes");
    CyclotomicNumber sum(0L);
    mpz_class total = 0;
    for (std::size_t k = 0; k < f1.size(); ++k) {
        total += sizes[k];
        if (f1[k].is_zero() || f2[k].is_zero()) continue;
        sum += f1[k] * f2[k].conj() * CyclotomicNumber(mpq_class(sizes[k]));
    }
    return sum / mpq_class(total);
}

// ---- partitions and axioms ------------------------------------------------

inline std::string label_text(const SuperclassLabelU& l) {
    std::ostringstream os;
    os << "D=" << l.D.to_string() << " phi=[";
    for (std::size_t k = 0; k < l.phi.values.size(); ++k) os << (k ? "," : "") << l.phi.values[k].value;
    os << "]";
    return os.str();
}
inline std::string label_text(const SuperclassLabelG& l) {
    std::ostringstream os;
    os << label_text(SuperclassLabelU{l.D, l.phi}) << " h=[";
    for (std::size_t k = 0; k < l.h.entries.size(); ++k) os << (k ? "," : "") << l.h.entries[k].value;
    os << "]";
    return os.str();
}

struct PartitionReport {
    GroupKind group = GroupKind::U;
    std::uint64_t group_size = 0;
    std::size_t block_count = 0;
    std::vector<std::uint64_t> block_sizes;
    std::vector<std::string> block_labels;  // canonical label of each block, in block order
    std::vector<std::string> mismatches;    // elements whose label disagrees with their block
    bool sizes_sum_to_order() const {
        std::uint64_t s = 0;
        for (auto v : block_sizes) s += v;
        return s == group_size;
    }
    bool ok() const { return mismatches.empty() && sizes_sum_to_order(); }
};

namespace detail {

/// Compares an orbit partition with the canonical labeling: every element in a
/// block shares the block's label and no two blocks share a label.
template <class Label, class LabelFn>
PartitionReport compare_with_labels(const ContractedAlgebra& alg, GroupKind g, const OrbitPartition& p, LabelFn label,
                                    std::size_t max_witnesses) {
    PartitionReport r;
    r.group = g;
    r.group_size = group_order(alg, g);
    r.block_count = p.size.size();
    r.block_sizes = p.size;
    std::vector<Label> block_label;
    for (auto k : p.representative) block_label.push_back(label(group_element(alg, g, k)));
    for (const auto& l : block_label) r.block_labels.push_back(label_text(l));
    auto note = [&](std::string s) {
        if (r.mismatches.size() < max_witnesses) r.mismatches.push_back(std::move(s));
    };
    std::map<Label, std::size_t> first;
    for (std::size_t b = 0; b < block_label.size(); ++b) {
        auto [it, fresh] = first.emplace(block_label[b], b);
        if (!fresh) note("blocks " + std::to_string(it->second) + " and " + std::to_string(b) + " share a label");
    }
    bool overflow = false;
    for (std::uint64_t k = 0; k < r.group_size && !overflow; ++k) {
        AlgebraElement x = group_element(alg, g, k);
        if (!(label(x) == block_label[p.block_of[k]])) {
            note("element '" + alg.format(x) + "' labelled differently from its orbit");
            overflow = r.mismatches.size() >= max_witnesses;
        }
    }
    return r;
}

}  // namespace detail

/// Superclass orbits by BFS, checked against the canonical labels.
inline PartitionReport superclass_partition(const ContractedAlgebra& alg, GroupKind g,
                                            std::uint64_t budget = ContractedAlgebra::default_budget,
                                            OrbitPartition* out = nullptr) {
    OrbitPartition p = orbit_partition(alg, g, superclass_neighbours(alg, g), budget);
    PartitionReport r =
        g == GroupKind::U
            ? detail::compare_with_labels<SuperclassLabelU>(
                  alg, g, p, [&](const AlgebraElement& x) { return label_U(alg, x); }, 20)
            : detail::compare_with_labels<SuperclassLabelG>(
                  alg, g, p, [&](const AlgebraElement& x) { return label_G(alg, x); }, 20);
    if (out) *out = std::move(p);
    return r;
}

/// Every conjugacy class lies inside one superclass.
inline bool conjugacy_refinement(const ContractedAlgebra& alg, GroupKind g,
                                 std::uint64_t budget = ContractedAlgebra::default_budget) {
    OrbitPartition conj = orbit_partition(alg, g, conjugation_neighbours(alg, g), budget);
    OrbitPartition super = orbit_partition(alg, g, superclass_neighbours(alg, g), budget);
    std::vector<std::int64_t> super_of_conj(conj.size.size(), -1);
    for (std::uint64_t k = 0; k < conj.block_of.size(); ++k) {
        auto& s = super_of_conj[conj.block_of[k]];
        if (s < 0) s = super.block_of[k];
        if (s != static_cast<std::int64_t>(super.block_of[k])) return false;
    }
    return true;
}

struct AxiomReport {
    GroupKind group = GroupKind::U;
    int n = 0;
    std::uint32_t q = 0;
    bool oracle_used = true;
    bool s1_pass = false;
    bool s2_pass = false;
    bool s3_pass = false;
    bool counts_match = false;
    bool partition_pass = false;
    bool totals_pass = false;
    bool formula_pass = false;  // oracle values agree with the closed formulas on every class
    std::size_t supercharacters = 0;
    std::size_t superclasses = 0;
    std::uint64_t group_size = 0;
    mpz_class size_total = 0;
    std::vector<std::string> witnesses;
    bool all_pass() const { return s1_pass && s2_pass && s3_pass && counts_match && partition_pass && totals_pass && formula_pass;
    }
};

/// Full check of the supercharacter axioms.
///
/// Classes come from the BFS orbit partition. Character values come from the
/// induced-character oracle, evaluated at every group element for the
/// constancy check; with use_oracle = false they come from the closed formulas
/// and constancy reduces to the label partition matching the orbits.
inline AxiomReport verify_axioms(const ContractedAlgebra& alg, GroupKind g, bool use_oracle = true,
                                 std::uint64_t budget = ContractedAlgebra::default_budget) {
    const int n = alg.n();
    const FieldSpec& f = alg.field();
    AxiomReport rep;
    rep.group = g, rep.n = n, rep.q = f.q(), rep.oracle_used = use_oracle;
    rep.group_size = group_order(alg, g);
    auto witness = [&](std::string s) {
        if (rep.witnesses.size() < 20) rep.witnesses.push_back(std::move(s));
    };

    OrbitPartition orbits;
    PartitionReport part = superclass_partition(alg, g, budget, &orbits);
    rep.partition_pass = part.mismatches.empty();
    for (auto& m : part.mismatches) witness(m);
    rep.superclasses = orbits.size.size();
    for (auto s : orbits.size) rep.size_total += mpz_class(static_cast<unsigned long>(s));
    rep.totals_pass = rep.size_total == mpz_class(static_cast<unsigned long>(rep.group_size));

    std::uint32_t id_block = orbits.block_of[group_index(alg, g, alg.one())];
    rep.s3_pass = orbits.size[id_block] == 1;
    if (!rep.s3_pass) witness("identity superclass has " + std::to_string(orbits.size[id_block]) + " elements");

    std::vector<mpz_class> sizes;
    for (auto s : orbits.size) sizes.push_back(mpz_class(static_cast<unsigned long>(s)));
    std::vector<AlgebraElement> reps;
    for (auto k : orbits.representative) reps.push_back(group_element(alg, g, k));

    // character values on class representatives, one vector per character
    std::vector<std::vector<CyclotomicNumber>> values;
    std::vector<std::string> names;
    std::function<CyclotomicNumber(std::size_t, const AlgebraElement&)> value_at, formula_at;
    std::vector<SuperclassLabelU> ulabels;
    std::vector<SupercharLabelG> glabels;
    if (g == GroupKind::U) {
        ulabels = labels_U(n, f.q());
        for (const auto& l : ulabels) names.push_back(label_text(l));
        value_at = [&](std::size_t c, const AlgebraElement& x) {
            return use_oracle ? induced_chi_U(alg, ulabels[c].D, ulabels[c].phi, x)
                              : chi_U_value(f, n, ulabels[c], label_U(alg, x));
        };
        formula_at = [&](std::size_t c, const AlgebraElement& x) { return chi_U_value(f, n, ulabels[c], label_U(alg, x)); };
    } else {
        glabels = labels_G_chars(f, n);
        for (const auto& l : glabels) {
            std::string t = label_text(SuperclassLabelU{l.D, l.phi}) + " theta=[";
            for (std::size_t k = 0; k < l.theta.size(); ++k) t += (k ? "," : "") + std::to_string(l.theta[k]);
            names.push_back(t + "]");
        }
        value_at = [&](std::size_t c, const AlgebraElement& x) {
            return use_oracle ? induced_chi_G(alg, glabels[c], x) : chi_G_value(f, n, glabels[c], label_G(alg, x));
        };
        formula_at = [&](std::size_t c, const AlgebraElement& x) { return chi_G_value(f, n, glabels[c], label_G(alg, x)); };
    }
    rep.supercharacters = names.size();
    rep.counts_match = rep.supercharacters == rep.superclasses;
    if (!rep.counts_match)
        witness(std::to_string(rep.supercharacters) + " supercharacters vs " + std::to_string(rep.superclasses) +
                " superclasses");

    for (std::size_t c = 0; c < names.size(); ++c) {
        std::vector<CyclotomicNumber> row;
        for (const auto& x : reps) row.push_back(value_at(c, x));
        values.push_back(std::move(row));
    }

    rep.formula_pass = true;
    if (use_oracle) {
        for (std::size_t c = 0; c < names.size(); ++c)
            for (std::size_t b = 0; b < reps.size(); ++b)
                if (!(values[c][b] == formula_at(c, reps[b]))) {
                    rep.formula_pass = false;
                    witness("character " + names[c] + " disagrees with its formula at '" + alg.format(reps[b]) + "'");
                }
    }

    // S2: constancy on every orbit
    rep.s2_pass = true;
    if (use_oracle) {
        for (std::uint64_t k = 0; k < rep.group_size && rep.witnesses.size() < 20; ++k) {
            if (k == orbits.representative[orbits.block_of[k]]) continue;
            AlgebraElement x = group_element(alg, g, k);
            for (std::size_t c = 0; c < names.size(); ++c) {
                if (!(value_at(c, x) == values[c][orbits.block_of[k]])) {
                    rep.s2_pass = false;
                    witness("character " + names[c] + " is not constant at '" + alg.format(x) + "'");
                    break;
                }
            }
        }
    } else {
        rep.s2_pass = rep.partition_pass;
    }

    // S1: exact orthogonality of distinct characters, positive norms
    rep.s1_pass = true;
    for (std::size_t a = 0; a < names.size(); ++a) {
        for (std::size_t b = a; b < names.size(); ++b) {
            CyclotomicNumber ip = inner_product(values[a], values[b], sizes);
            bool ok = a == b ? (ip.is_rational() && ip.rational_part() > 0) : ip.is_zero();
            if (!ok) {
                rep.s1_pass = false;
                witness("<" + names[a] + ", " + names[b] + "> = " + ip.to_string());
            }
        }
    }
    return rep;
}

}  // namespace borelsc
