#include "qlp/qfield.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace qlp;

namespace {

ExactScalar poly(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p += LaurentPoly::monomial(c, e);
    return ExactScalar(p);
}

ExactScalar random_scalar(std::mt19937 &rng) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(-3, 3), len(1, 3);
    LaurentPoly n, d;
    for (int i = 0, k = len(rng); i < k; ++i) n += LaurentPoly::monomial(coef(rng), expo(rng));
    for (int i = 0, k = len(rng); i < k; ++i) d += LaurentPoly::monomial(coef(rng), expo(rng));
    if (d.is_zero()) d = LaurentPoly(1);
    return ExactScalar(n, d);
}

} // namespace

TEST(QField, QIntSmallValues) {
    EXPECT_TRUE(qint(0).is_zero());
    EXPECT_TRUE(qint(1).is_one());
    EXPECT_EQ(qint(2), poly({{1, 1}, {-1, 1}}));
    EXPECT_EQ(qint(-3), -qint(3));
    // [m] (q - q^-1) = q^m - q^-m
    for (int m = -6; m <= 6; ++m)
        EXPECT_EQ(qint(m) * (qpow(1) - qpow(-1)), qpow(m) - qpow(-m)) << m;
}

TEST(QField, QFactorial) {
    EXPECT_TRUE(qfact(0).is_one());
    EXPECT_EQ(qfact(2), poly({{1, 1}, {-1, 1}}));
    EXPECT_EQ(qfact(3), poly({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
    EXPECT_THROW(qfact(-1), std::invalid_argument);
}

TEST(QField, QBinomial) {
    for (int n = 0; n <= 6; ++n) EXPECT_TRUE(qbin(n, 0).is_one());
    EXPECT_EQ(qbin(2, 1), poly({{1, 1}, {-1, 1}}));
    EXPECT_EQ(qbin(4, 2), qpow(2) * qbin(3, 2) + qpow(-2) * qbin(3, 1));
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_TRUE(qbin(n, k).is_laurent());
    EXPECT_THROW(qbin(2, 3), std::invalid_argument);
    EXPECT_THROW(qbin(-1, 0), std::invalid_argument);
}

TEST(QField, FieldLaws) {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        ExactScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        if (!a.is_zero() && !b.is_zero()) EXPECT_TRUE(((a / b) * (b / a)).is_one());
    }
}

TEST(QField, CanonicalForm) {
    // (q^2 - 1) / (2q - 2) reduces to (q + 1)/2
    ExactScalar x(LaurentPoly::monomial(1, 2) - LaurentPoly(1), LaurentPoly::monomial(2, 1) - LaurentPoly(2));
    EXPECT_EQ(x, poly({{1, 1}, {0, 1}}) * ExactScalar(mpq_class(1, 2)));
    EXPECT_TRUE(x.is_laurent());
    // denominator lowest coefficient is 1 at exponent 0
    ExactScalar y(LaurentPoly(1), LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(6, 4));
    EXPECT_EQ(y.den().low(), 0);
    EXPECT_EQ(y.den().lowest_coeff(), 1);
}

TEST(QField, StringRoundTrip) {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        ExactScalar a = random_scalar(rng) / (qint(3) + ExactScalar(mpq_class(2, 7)));
        EXPECT_EQ(ExactScalar::parse(a.str()), a) << a.str();
    }
    EXPECT_EQ(qint(2).str(), "1*q^-1 + 1*q^1 / 1*q^0");
    EXPECT_EQ(ExactScalar::parse("0 / 1*q^0"), ExactScalar());
    EXPECT_THROW(ExactScalar::parse("1*x^2"), std::invalid_argument);
}

TEST(QField, PolyGcd) {
    LaurentPoly a = LaurentPoly::monomial(1, 4) - LaurentPoly(1); // q^4 - 1
    LaurentPoly b = LaurentPoly::monomial(1, 6) - LaurentPoly(1); // q^6 - 1
    LaurentPoly g = poly_gcd(a, b);                                 // q^2 - 1 up to unit
    EXPECT_EQ(g, LaurentPoly(1) - LaurentPoly::monomial(1, 2));
    EXPECT_THROW(poly_exact_div(a, LaurentPoly::monomial(1, 1) + LaurentPoly(2)), std::domain_error);
}

// q-binomial recursion
TEST(QIdentities, Pascal) {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            ExactScalar rhs = qpow(k - n) * qbin(n - 1, k - 1);
            if (k <= n - 1) rhs += qpow(k) * qbin(n - 1, k);
            EXPECT_EQ(qbin(n, k), rhs) << n << "," << k;
        }
}

// generating function of inversions over all permutations
TEST(QIdentities, InversionSum) {
    for (int n = 0; n <= 5; ++n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        LaurentPoly sum;
        do {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) inv += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
            sum += LaurentPoly::monomial(1, 2 * inv);
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(ExactScalar(sum), qpow(n * (n - 1) / 2) * qfact(n)) << n;
    }
}

TEST(QIdentities, FactorialSums) {
    for (int nu1 = 0; nu1 <= 6; ++nu1)
        for (int nu2 = 0; nu2 <= 6; ++nu2)
            for (int n = 0; n <= std::min(nu1, nu2); ++n) {
                ExactScalar tail = qfact(nu1 - n) * qfact(nu2 - n) * qfact(nu1 + nu2 - n + 1) / qfact(nu1 + nu2 - 2 * n + 1);
                ExactScalar c, d;
                for (int k = 0; k <= n; ++k) {
                    c += qbin(n, k) * qpow(k * (2 * n - nu1 - nu2 - 2)) * qfact(nu1 - n + k) * qfact(nu2 - k);
                    d += qbin(n, k) * qpow(k * (nu1 + nu2 - 2 * n + 2)) * qfact(nu1 - k) * qfact(nu2 - n + k);
                }
                EXPECT_EQ(c, qpow(n * (n - nu1 - 1)) * tail) << nu1 << nu2 << n;
                EXPECT_EQ(d, qpow(n * (nu2 + 1 - n)) * tail) << nu1 << nu2 << n;
            }
}
