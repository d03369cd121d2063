#include <gtest/gtest.h>

#include "borelsc/field.hpp"

using namespace borelsc;

TEST(Field, ResidueArithmetic) {
    FieldSpec f3(3), f5(5), f7(7);
    EXPECT_EQ(f3.mul(FieldElem(2), FieldElem(2)), FieldElem(1));
    EXPECT_EQ(f5.div(FieldElem(1), FieldElem(2)), FieldElem(3));
    EXPECT_EQ(f7.add(FieldElem(3), FieldElem(4)), FieldElem(0));
    EXPECT_EQ(f7.sub(FieldElem(2), FieldElem(5)), FieldElem(4));
    EXPECT_EQ(f7.neg(FieldElem(0)), FieldElem(0));
    EXPECT_EQ(f7.elem(-1), FieldElem(6));
}

TEST(Field, DivisionByZeroThrows) {
    FieldSpec f(5);
    EXPECT_THROW(f.div(FieldElem(1), FieldElem(0)), DomainError);
    EXPECT_THROW(f.inv(FieldElem(0)), DomainError);
    EXPECT_THROW(f.dlog(FieldElem(0)), DomainError);
    EXPECT_THROW(f.mult_char_exponent(FieldElem(0), 1), DomainError);
}

TEST(Field, RejectsBadModuli) {
    for (std::uint32_t q : {0u, 1u, 2u, 4u, 9u, 15u, 65537u, 70001u}) EXPECT_THROW(FieldSpec{q}, DomainError) << q;
    EXPECT_NO_THROW(FieldSpec{65521});
}

TEST(Field, SmallestPrimitiveRoot) {
    EXPECT_EQ(FieldSpec(3).primitive_root(), 2u);
    EXPECT_EQ(FieldSpec(5).primitive_root(), 2u);
    EXPECT_EQ(FieldSpec(7).primitive_root(), 3u);
    EXPECT_EQ(FieldSpec(23).primitive_root(), 5u);
    EXPECT_EQ(FieldSpec(41).primitive_root(), 6u);
}

TEST(Field, PrimitiveRootHasFullOrder) {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 31u, 257u}) {
        FieldSpec f(q);
        FieldElem g(f.primitive_root());
        EXPECT_EQ(f.pow(g, q - 1), f.one());
        FieldElem x = f.one();
        for (std::uint32_t k = 1; k < q - 1; ++k) {
            x = f.mul(x, g);
            EXPECT_NE(x, f.one()) << q << " " << k;
        }
        for (std::uint32_t k = 0; k < q - 1; ++k) EXPECT_EQ(f.dlog(f.pow(g, k)), k);
    }
}

TEST(Field, FermatAndDlogHomomorphism) {
    for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
        FieldSpec f(q);
        for (std::uint32_t a = 1; a < q; ++a) {
            EXPECT_EQ(f.pow(FieldElem(a), q - 1), f.one());
            for (std::uint32_t b = 1; b < q; ++b)
                EXPECT_EQ(f.dlog(f.mul(FieldElem(a), FieldElem(b))), (f.dlog(FieldElem(a)) + f.dlog(FieldElem(b))) % (q - 1));
        }
    }
}

TEST(Field, CharacterExponents) {
    FieldSpec f3(3), f5(5);
    EXPECT_EQ(f3.additive_char_exponent(FieldElem(0)), 0u);
    EXPECT_EQ(f3.additive_char_exponent(FieldElem(2)), 2u);
    EXPECT_EQ(f5.mult_char_exponent(FieldElem(3), 0), 0u);
    EXPECT_EQ(f3.mult_char_exponent(FieldElem(2), 1), 1u);
    EXPECT_EQ(f5.mult_char_exponent(FieldElem(4), 1), 2u);
    for (std::uint32_t s = 0; s < 5; ++s)
        for (std::uint32_t t = 0; t < 5; ++t)
            EXPECT_EQ(f5.additive_char_exponent(f5.add(FieldElem(s), FieldElem(t))),
                      (f5.additive_char_exponent(FieldElem(s)) + f5.additive_char_exponent(FieldElem(t))) % 5);
}
