#include <gtest/gtest.h>

#include <random>

#include "borelsc/cyclotomic.hpp"

using namespace borelsc;
using C = CyclotomicNumber;

namespace {

C random_value(std::mt19937_64& rng) {
    static const std::uint64_t orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
    std::uint64_t m = orders[rng() % 8];
    std::vector<mpq_class> c(m);
    for (auto& v : c) v = mpq_class(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    for (auto& v : c) v.canonicalize();
    return C::from_unreduced(m, c);
}

}  // namespace

TEST(Cyclotomic, Roots) {
    EXPECT_EQ(C::root(1, 0), C(1L));
    EXPECT_EQ(C::root(2, 1), C(-1L));
    EXPECT_EQ(C::root(3, 1) + C::root(3, 2), C(-1L));
    EXPECT_EQ(C::root(3, 1) * C::root(3, 2), C(1L));
    EXPECT_EQ(C(-1L) + C(1L), C(0L));
    EXPECT_EQ(C::root(5, -1), C::root(5, 4));
    EXPECT_THROW(C::root(0, 0), std::invalid_argument);
}

TEST(Cyclotomic, MixedOrdersLiftToLcm) {
    EXPECT_EQ(C::root(3, 1) * C::root(5, 1), C::root(15, 8));
    EXPECT_EQ(C::root(6, 2), C::root(3, 1));
    EXPECT_EQ(C::root(4, 2), C(-1L));
    EXPECT_EQ(C::root(3, 1).lift(12), C::root(12, 4));
}

TEST(Cyclotomic, GeometricSumVanishes) {
    for (std::uint64_t m = 2; m <= 40; ++m) {
        C s;
        for (std::uint64_t k = 0; k < m; ++k) s += C::root(m, static_cast<std::int64_t>(k));
        EXPECT_TRUE(s.is_zero()) << m;
    }
}

TEST(Cyclotomic, ExponentCounts) {
    // 2 + 3 zeta_5 - zeta_5^4
    C x = C::from_exponent_counts(5, {2, 3, 0, 0, -1});
    EXPECT_EQ(x, C(2L) + C(3L) * C::root(5, 1) - C::root(5, 4));
    EXPECT_EQ(C::from_exponent_counts(7, std::vector<std::int64_t>(7, 4)), C(0L));
}

TEST(Cyclotomic, Conjugation) {
    EXPECT_EQ(C::root(4, 1).conj(), C::root(4, 3));
    EXPECT_EQ(C::root(4, 1).conj(), -C::root(4, 1));
    EXPECT_EQ(C(mpq_class(3, 7)).conj(), C(mpq_class(3, 7)));
    C a = C(1L) + C::root(3, 1);
    EXPECT_EQ(a * a.conj(), C(1L));
}

TEST(Cyclotomic, ToComplex) {
    auto one = C(1L).to_complex();
    EXPECT_NEAR(one.real(), 1.0, 1e-12);
    EXPECT_NEAR(one.imag(), 0.0, 1e-12);
    auto i = C::root(4, 1).to_complex();
    EXPECT_NEAR(i.real(), 0.0, 1e-12);
    EXPECT_NEAR(i.imag(), 1.0, 1e-12);
    auto w = C::root(3, 1).to_complex();
    EXPECT_NEAR(w.real(), -0.5, 1e-12);
    EXPECT_NEAR(w.imag(), 0.8660254037844386, 1e-12);
}

TEST(Cyclotomic, RingAxiomsOnRandomTriples) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        C a = random_value(rng), b = random_value(rng), c = random_value(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, C(0L));
        EXPECT_EQ(a.conj().conj(), a);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    }
}

TEST(Cyclotomic, NormalizedChoosesSmallestField) {
    C x = C::root(3, 1).lift(12);
    EXPECT_EQ(x.order(), 12u);
    EXPECT_EQ(x.normalized().order(), 3u);
    EXPECT_EQ(x.normalized(), x);
    EXPECT_EQ((C::root(8, 1) + C::root(8, 7)).normalized().order(), 8u);  // sqrt(2)
    EXPECT_TRUE((C::root(5, 1) * C::root(5, 4)).normalized().is_rational());
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
        C a = random_value(rng) * random_value(rng);
        EXPECT_EQ(a.normalized(), a);
    }
}

TEST(Cyclotomic, RationalDivision) {
    EXPECT_EQ(C(6L) / mpq_class(4), C(mpq_class(3, 2)));
    EXPECT_THROW(C(1L) / mpq_class(0), std::domain_error);
}
