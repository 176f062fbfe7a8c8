#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlp {

// Laurent polynomial in one variable over Q.  Stored densely from exponent
// `low` upward; the first and last stored coefficients are nonzero, and the
// zero polynomial has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const mpq_class &c); // NOLINT: implicit constant
    LaurentPoly(long c) : LaurentPoly(mpq_class(c)) {} // NOLINT

    static LaurentPoly monomial(const mpq_class &c, int e);
    static LaurentPoly from_coeffs(int low, std::vector<mpq_class> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
    bool is_monomial() const { return c_.size() == 1; }

    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<mpq_class> &coeffs() const { return c_; }
    mpq_class coeff(int e) const;
    const mpq_class &lowest_coeff() const { return c_.front(); }
    const mpq_class &leading_coeff() const { return c_.back(); }

    // Nonzero terms as (exponent, coefficient), increasing exponent.
    std::vector<std::pair<int, mpq_class>> terms() const;

    LaurentPoly shifted(int k) const;
    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const mpq_class &c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const mpq_class &c) { return a *= c; }

    bool operator==(const LaurentPoly &o) const { return low_ == o.low_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

    // Substitute var -> var^{-1}.
    LaurentPoly inverted_variable() const;

    // Rough size measure used for pivot selection.
    std::size_t complexity() const;

    std::string str(std::string_view var) const;
    static LaurentPoly parse(std::string_view text, std::string_view var);

private:
    void trim();

    int low_ = 0;
    std::vector<mpq_class> c_;
};

// Greatest common divisor of the polynomial parts (powers of the variable are
// units), normalized to low exponent 0 and lowest coefficient 1.
LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b);

// Exact quotient a/b; throws if b does not divide a.
LaurentPoly poly_exact_div(const LaurentPoly &a, const LaurentPoly &b);

// Element of the fraction field Q(x) for the variable named by Var::name.
// Canonical form: reduced, denominator has lowest exponent 0 with coefficient 1.
template <class Var>
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {} // NOLINT
    RationalFunction(const mpq_class &c) : num_(c), den_(1) {} // NOLINT
    RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(1) {} // NOLINT
    RationalFunction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RationalFunction var_pow(int e) { return RationalFunction(LaurentPoly::monomial(1, e)); }

    const LaurentPoly &num() const { return num_; }
    const LaurentPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction inverse() const;
    RationalFunction pow(int e) const;

    RationalFunction &operator+=(const RationalFunction &o) { return *this = *this + o; }
    RationalFunction &operator-=(const RationalFunction &o) { return *this = *this - o; }
    RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }
    RationalFunction &operator/=(const RationalFunction &o) { return *this = *this / o; }

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
        if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ + b.num_);
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        LaurentPoly g = poly_gcd(a.den_, b.den_);
        LaurentPoly ad = poly_exact_div(a.den_, g), bd = poly_exact_div(b.den_, g);
        return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
        LaurentPoly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        RationalFunction r;
        r.num_ = poly_exact_div(a.num_, g1) * poly_exact_div(b.num_, g2);
        r.den_ = poly_exact_div(a.den_, g2) * poly_exact_div(b.den_, g1);
        r.rescale();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) { return a * b.inverse(); }

    bool operator==(const RationalFunction &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction &o) const { return !(*this == o); }

    std::size_t complexity() const { return num_.complexity() + den_.complexity(); }

    std::string str() const { return num_.str(Var::name) + " / " + den_.str(Var::name); }
    // Accepts "num / den" or a bare polynomial.
    static RationalFunction parse(std::string_view text);

    // Readable infix form for diagnostics, e.g. "(q^-1 + q) / (1)".
    std::string pretty() const;

private:
    void normalize();
    void rescale();

    LaurentPoly num_, den_;
};

struct QVar {
    static constexpr const char *name = "q";
};
struct TVar {
    static constexpr const char *name = "t";
};

using ExactScalar = RationalFunction<QVar>;

template <class Var>
std::ostream &operator<<(std::ostream &os, const RationalFunction<Var> &x);

// q-number [m], q-factorial [n]! and q-binomial.
ExactScalar qint(int m);
ExactScalar qfact(int n);
ExactScalar qbin(int n, int k);
// q^e
inline ExactScalar qpow(int e) { return ExactScalar::var_pow(e); }

extern template class RationalFunction<QVar>;
extern template class RationalFunction<TVar>;

} // namespace qlp
