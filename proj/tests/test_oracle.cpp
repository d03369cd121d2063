#include <gtest/gtest.h>

#include <random>
#include <set>

#include "borelsc/oracle.hpp"
#include "support.hpp"

using namespace borelsc;
using C = CyclotomicNumber;

namespace {

Decoration dec(std::initializer_list<std::uint32_t> v) {
    Decoration d;
    for (auto x : v) d.values.push_back(FieldElem(x));
    return d;
}

std::set<AlgebraElement> as_set(const std::vector<AlgebraElement>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Oracle, Transversals) {
    ContractedAlgebra a(7, 3);
    EXPECT_EQ(transversal_S(a, RookPlacement()).size(), 1u);
    auto t = transversal_S(a, RookPlacement({{2, 5}}));
    ASSERT_EQ(t.size(), 9u);
    for (const auto& s : t) {
        auto sup = a.sub(s, a.one()).support();
        for (Root r : sup) EXPECT_TRUE(r == (Root{2, 3}) || r == (Root{2, 4}));
    }
    EXPECT_EQ(as_set(t).size(), 9u);
    // |T| |U_D| = |U^a| and T U_D covers U^a
    ContractedAlgebra b(3, 3);
    for (const auto& d : enumerate_rook_placements(3)) {
        auto ts = transversal_S(b, d);
        std::vector<AlgebraElement> ud;
        b.for_each_U([&](const AlgebraElement& u) {
            if (in_U_D(u, d)) ud.push_back(u);
        });
        EXPECT_EQ(ts.size() * ud.size(), b.order_U());
        std::set<std::uint64_t> covered;
        for (const auto& s : ts)
            for (const auto& v : ud) covered.insert(b.index_U(b.mul(v, s)));
        EXPECT_EQ(covered.size(), b.order_U()) << d.to_string();
        auto tstar = transversal_S_star(b, d);
        std::vector<AlgebraElement> ustar;
        b.for_each_U([&](const AlgebraElement& u) {
            if (in_U_star_D(u, d)) ustar.push_back(u);
        });
        EXPECT_EQ(tstar.size() * ustar.size(), b.order_U());
        covered.clear();
        for (const auto& s : tstar)
            for (const auto& v : ustar) covered.insert(b.index_U(b.mul(s, v)));
        EXPECT_EQ(covered.size(), b.order_U()) << d.to_string();
    }
}

TEST(Oracle, OrbitsU) {
    ContractedAlgebra a(2, 3);
    auto z = orbit_U(a, a.zero());
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z[0], a.one());
    // E12 is annihilated by every unit on both sides at n = 2
    auto e = orbit_U(a, a.unit({1, 2}));
    EXPECT_EQ(e.size(), 1u);
    EXPECT_EQ(as_set(e), as_set(orbit_double_loop(a, GroupKind::U, a.add(a.one(), a.unit({1, 2})))));
    for (int n : {2, 3}) {
        ContractedAlgebra b(n, 3);
        std::mt19937_64 rng(n);
        for (int k = 0; k < (n == 2 ? 9 : 15); ++k) {
            AlgebraElement x = n == 2 ? b.sub(b.element_U(static_cast<std::uint64_t>(k)), b.one())
                                      : testsupport::random_radical(b, rng);
            EXPECT_EQ(as_set(orbit_U(b, x)), as_set(orbit_double_loop(b, GroupKind::U, b.add(b.one(), x))));
        }
    }
    EXPECT_THROW(orbit_U(a, a.one()), DomainError);
}

TEST(Oracle, OrbitsPartitionU) {
    for (int n = 1; n <= 3; ++n) {
        ContractedAlgebra a(n, 3);
        std::set<std::uint64_t> seen;
        std::size_t blocks = 0;
        for (std::uint64_t k = 0; k < a.order_U(); ++k) {
            if (seen.count(k)) continue;
            ++blocks;
            for (const auto& g : orbit_U(a, a.sub(a.element_U(k), a.one()))) EXPECT_TRUE(seen.insert(a.index_U(g)).second);
        }
        EXPECT_EQ(seen.size(), a.order_U());
        EXPECT_EQ(blocks, labels_U(n, 3).size());
    }
}

TEST(Oracle, OrbitsG) {
    ContractedAlgebra a(2, 3);
    auto id = orbit_G(a, GroupElementG(a.one()));
    ASSERT_EQ(id.size(), 1u);
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k < a.order_G(); ++k) {
        AlgebraElement g = a.element_G(k);
        auto orbit = orbit_G(a, GroupElementG(g));
        EXPECT_EQ(as_set(orbit), as_set(orbit_double_loop(a, GroupKind::G, g)));
        for (const auto& x : orbit) EXPECT_EQ(x.diagonal_part(), g.diagonal_part());
    }
    TorusElement h{{FieldElem(2), FieldElem(2)}};
    auto generic = orbit_G(a, GroupElementG(AlgebraElement::diagonal(h)));
    for (const auto& x : generic) EXPECT_EQ(label_G(a, x), label_G(a, AlgebraElement::diagonal(h)));
}

TEST(Oracle, ClassSizesRankFormulaMatchesBfs) {
    for (auto [n, q] : {std::pair{1, 3u}, {2, 3u}, {2, 5u}, {3, 3u}}) {
        ContractedAlgebra a(n, q);
        for (const auto& l : labels_U(n, q)) {
            AlgebraElement x = a.build_X(l.D, l.phi);
            EXPECT_EQ(superclass_size_U(a, x), mpz_class(static_cast<unsigned long>(orbit_U(a, x).size())));
        }
    }
    ContractedAlgebra a(4, 3);
    std::mt19937_64 rng(8);
    auto labels = labels_U(4, 3);
    for (int k = 0; k < 6; ++k) {
        const auto& l = labels[rng() % labels.size()];
        AlgebraElement x = a.build_X(l.D, l.phi);
        EXPECT_EQ(superclass_size_U(a, x), mpz_class(static_cast<unsigned long>(orbit_U(a, x).size())));
    }
}

TEST(Oracle, InducedU) {
    for (std::uint32_t q : {3u, 5u}) {
        ContractedAlgebra a(2, q);
        auto labels = labels_U(2, q);
        for (const auto& l : labels) {
            EXPECT_EQ(induced_chi_U(a, l.D, l.phi, a.one()), C(static_cast<long>(transversal_S(a, l.D).size())));
            for (const auto& b : labels) {
                AlgebraElement u = a.build_u(b.D, b.phi).element();
                C right = induced_chi_U(a, l.D, l.phi, u);
                EXPECT_EQ(right, induced_chi_U(a, l.D, l.phi, u, InductionRoute::left_transversal));
                EXPECT_EQ(right, induced_chi_U(a, l.D, l.phi, u, InductionRoute::frobenius));
                EXPECT_EQ(right, chi_U_value(a.field(), 2, l, b));
            }
        }
        a.for_each_U([&](const AlgebraElement& u) {
            EXPECT_EQ(induced_chi_U(a, RookPlacement(), Decoration{}, u), C(1L));
        });
    }
    ContractedAlgebra b(3, 3);
    auto labels = labels_U(3, 3);
    std::mt19937_64 rng(12);
    for (int k = 0; k < 40; ++k) {
        const auto& l = labels[rng() % labels.size()];
        AlgebraElement u = testsupport::random_U(b, rng);
        C right = induced_chi_U(b, l.D, l.phi, u);
        EXPECT_EQ(right, induced_chi_U(b, l.D, l.phi, u, InductionRoute::left_transversal));
        EXPECT_EQ(right, induced_chi_U(b, l.D, l.phi, u, InductionRoute::frobenius));
        EXPECT_EQ(right, chi_U_value(b.field(), 3, l, label_U(b, u)));
    }
    EXPECT_THROW(induced_chi_U(b, RookPlacement(), Decoration{}, AlgebraElement::diagonal(TorusElement{{FieldElem(2), FieldElem(1), FieldElem(1)}})),
                 DomainError);
}

TEST(Oracle, InducedG) {
    ContractedAlgebra a(2, 3);
    const auto& f = a.field();
    auto chars = labels_G_chars(f, 2);
    auto classes = labels_G_classes(f, 2);
    for (const auto& c : chars) {
        EXPECT_EQ(induced_chi_G(a, c, a.one()), chi_G_value(f, 2, c, classes.front()));
        for (const auto& b : classes) {
            AlgebraElement g = representative_G(a, b);
            C v = induced_chi_G(a, c, g);
            EXPECT_EQ(v, chi_G_value(f, 2, c, b));
            EXPECT_EQ(v, induced_chi_G(a, c, g, true));
        }
    }
    a.for_each_G([&](const AlgebraElement& g) { EXPECT_EQ(induced_chi_G(a, chars.front(), g), C(1L)); });
    SupercharLabelG bad{RookPlacement(), Decoration{}, {0}};
    EXPECT_THROW(induced_chi_G(a, bad, a.one()), DomainError);
}

TEST(Oracle, InnerProducts) {
    auto t = table_U(2, 3);
    EXPECT_EQ(inner_product(t.values[0], t.values[0], t.class_sizes), C(1L));
    for (std::size_t i = 0; i < t.values.size(); ++i)
        for (std::size_t j = 0; j < t.values.size(); ++j) {
            C ip = inner_product(t.values[i], t.values[j], t.class_sizes);
            if (i == j) {
                ASSERT_TRUE(ip.is_rational());
                EXPECT_GT(ip.rational_part(), 0);
            } else {
                EXPECT_TRUE(ip.is_zero());
            }
        }
    EXPECT_THROW(inner_product({C(1L)}, {}, {1}), DomainError);
}

TEST(Oracle, Stabilizers) {
    for (int n = 1; n <= 3; ++n) {
        ContractedAlgebra a(n, 3);
        for (const auto& l : labels_U(n, 3)) {
            Functional lam = a.lambda_functional(l.D, l.phi);
            std::vector<std::uint64_t> ud, ustar;
            a.for_each_U([&](const AlgebraElement& u) {
                if (in_U_D(u, l.D)) ud.push_back(a.index_U(u));
                if (in_U_star_D(u, l.D)) ustar.push_back(a.index_U(u));
            });
            EXPECT_EQ(right_stabilizer_bruteforce(a, lam), ud) << l.D.to_string();
            EXPECT_EQ(left_stabilizer_bruteforce(a, lam), ustar) << l.D.to_string();
        }
    }
}

TEST(Oracle, ConjugacyRefinement) {
    EXPECT_TRUE(conjugacy_refinement(ContractedAlgebra(2, 3), GroupKind::U));
    EXPECT_TRUE(conjugacy_refinement(ContractedAlgebra(3, 3), GroupKind::U));
    EXPECT_TRUE(conjugacy_refinement(ContractedAlgebra(2, 3), GroupKind::G));
    ContractedAlgebra a(2, 3);
    auto cls = conjugacy_class(a, GroupKind::G, a.one());
    EXPECT_EQ(cls.size(), 1u);
}

TEST(Oracle, Axioms) {
    struct Case {
        int n;
        std::uint32_t q;
        GroupKind g;
        std::size_t count;
        std::uint64_t order;
    };
    for (auto c : {Case{2, 3, GroupKind::U, 9, 9}, Case{3, 3, GroupKind::U, 65, 729}, Case{2, 3, GroupKind::G, 8, 36},
                   Case{2, 5, GroupKind::U, 25, 25}}) {
        ContractedAlgebra a(c.n, c.q);
        for (bool oracle : {true, false}) {
            AxiomReport r = verify_axioms(a, c.g, oracle);
            EXPECT_TRUE(r.all_pass()) << c.n << " " << c.q;
            EXPECT_TRUE(r.s1_pass && r.s2_pass && r.s3_pass);
            EXPECT_EQ(r.supercharacters, c.count);
            EXPECT_EQ(r.superclasses, c.count);
            EXPECT_EQ(r.size_total, mpz_class(static_cast<unsigned long>(c.order)));
            EXPECT_TRUE(r.witnesses.empty());
        }
    }
    EXPECT_THROW(verify_axioms(ContractedAlgebra(3, 3), GroupKind::U, true, 100), BudgetError);
}

TEST(Oracle, PartitionReport) {
    ContractedAlgebra a(2, 3);
    auto r = superclass_partition(a, GroupKind::G);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.block_count, 8u);
    EXPECT_EQ(r.group_size, 36u);
    EXPECT_EQ(r.block_labels.size(), 8u);
}
