#pragma once

#include "qlp/qfield.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qlp {

// Scalars are rational functions of t = 1/kappa.
using KappaScalar = RationalFunction<TVar>;

// a + b t
struct Exponent {
    mpq_class a = 0, b = 0;
    KappaScalar value() const;
    std::string str() const; // "a + b/kappa"
    bool operator==(const Exponent &o) const { return a == o.a && b == o.b; }
};

// Polynomial in x_1..x_p with KappaScalar coefficients; keys are exponent vectors.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(int p) : p_(p) {}
    static XPoly constant(int p, const KappaScalar &c);
    static XPoly variable(int p, int i); // x_i, 1-based

    int p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, KappaScalar> &terms() const { return terms_; }
    void add_term(const std::vector<int> &mono, const KappaScalar &c);

    XPoly &operator+=(const XPoly &o);
    XPoly &operator-=(const XPoly &o);
    XPoly &operator*=(const KappaScalar &c);
    friend XPoly operator+(XPoly a, const XPoly &b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly &b) { return a -= b; }
    friend XPoly operator*(const KappaScalar &c, XPoly a) { return a *= c; }
    friend XPoly operator*(const XPoly &a, const XPoly &b);
    bool operator==(const XPoly &o) const { return p_ == o.p_ && terms_ == o.terms_; }

    XPoly diff(int i) const;
    // multiply by (x_b - x_a), a < b
    XPoly times_gap(int a, int b) const;
    // exact quotient by (x_b - x_a); false if not divisible
    bool divide_gap(int a, int b, XPoly &quotient) const;

    std::string str() const;

private:
    int p_ = 0;
    std::map<std::vector<int>, KappaScalar> terms_;
};

// Prod_{i<j} (x_j - x_i)^{e_ij} * P(x) / Prod_{i<j} (x_j - x_i)^{k_ij}, on x_1 < ... < x_p.
// Canonical: P is not divisible by any (x_j - x_i) with k_ij > 0.
class CoulombExpr {
public:
    CoulombExpr() = default;
    explicit CoulombExpr(int p);
    static CoulombExpr power(int p, const std::map<std::pair<int, int>, Exponent> &exps,
                             const KappaScalar &c = KappaScalar(1));

    int p() const { return p_; }
    const Exponent &exponent(int i, int j) const { return exps_[pair_index(i, j)]; }
    const XPoly &numerator() const { return num_; }
    int denominator_power(int i, int j) const { return den_[pair_index(i, j)]; }
    bool is_zero() const { return num_.is_zero(); }
    bool same_class(const CoulombExpr &o) const { return p_ == o.p_ && exps_ == o.exps_; }

    CoulombExpr &operator+=(const CoulombExpr &o);
    CoulombExpr &operator-=(const CoulombExpr &o);
    CoulombExpr &operator*=(const KappaScalar &c);
    friend CoulombExpr operator+(CoulombExpr a, const CoulombExpr &b) { return a += b; }
    friend CoulombExpr operator-(CoulombExpr a, const CoulombExpr &b) { return a -= b; }
    friend CoulombExpr operator*(const KappaScalar &c, CoulombExpr a) { return a *= c; }
    bool operator==(const CoulombExpr &o) const {
        return same_class(o) && num_ == o.num_ && den_ == o.den_;
    }

    // same exponents and denominator, numerator replaced
    CoulombExpr with_numerator(XPoly num) const;
    // multiply by the polynomial factor
    CoulombExpr times(const XPoly &f) const;
    // multiply by (x_i - x_j)^n for any i != j and any integer n
    CoulombExpr times_difference(int i, int j, int n) const;

    std::string str() const;

private:
    std::size_t pair_index(int i, int j) const;
    void canonicalize();

    int p_ = 0;
    std::vector<Exponent> exps_; // pairs (i<j) in lexicographic order
    XPoly num_;
    std::vector<int> den_;
};

std::ostream &operator<<(std::ostream &os, const XPoly &f);
std::ostream &operator<<(std::ostream &os, const CoulombExpr &f);

KappaScalar kac_weight(int d);
KappaScalar delta_weight(int d, const std::vector<int> &ds);

CoulombExpr diff_x(const CoulombExpr &f, int i);
// L_m^{(j)} = -sum_{i != j} ((x_i - x_j)^{1+m} d_i + (1+m) h_i (x_i - x_j)^m)
CoulombExpr apply_L(int m, int j, const CoulombExpr &f, const std::vector<KappaScalar> &weights);
// Benoit & Saint-Aubin operator of order d at point j; weights h_i per point.
CoulombExpr apply_bsa(int j, int d, const CoulombExpr &f, const std::vector<KappaScalar> &weights);
// (kappa/2) d_i^2 + sum_{j != i} (2/(x_j - x_i) d_j - 2 h_{1,2}/(x_j - x_i)^2)
CoulombExpr apply_sle2(int i, const CoulombExpr &f);

// Prod_{i<j} (x_j - x_i)^{2 s_i s_j t}
CoulombExpr shuffle_solution(const std::vector<int> &lambda);

bool check_translation(const CoulombExpr &f);
bool check_homogeneity(const CoulombExpr &f, const KappaScalar &delta);
bool check_mobius(const CoulombExpr &f, const std::vector<KappaScalar> &weights);

// B^{d1,d2}_delta as a Gamma-function product; throws std::domain_error on a pole.
double selberg_constant(int d1, int d2, int delta, double kappa);

} // namespace qlp
