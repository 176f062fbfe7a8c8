#include "qlp/qfield.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qlp {

namespace {

using IntPoly = std::vector<mpz_class>; // ascending degree, trimmed

void trim(IntPoly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const IntPoly &p) {
    mpz_class g = 0;
    for (const auto &c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntPoly &p) {
    if (p.empty()) return;
    mpz_class g = content(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto &c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Polynomial part (low shifted to 0) scaled to a primitive integer polynomial.
IntPoly to_int_primitive(const LaurentPoly &a) {
    mpz_class l = 1;
    for (const auto &c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly r;
    r.reserve(a.size());
    for (const auto &c : a.coeffs()) {
        mpz_class v = l / c.get_den();
        r.push_back(v * c.get_num());
    }
    make_primitive(r);
    return r;
}

// Pseudo-remainder of a by b over Z.
IntPoly prem(IntPoly a, const IntPoly &b) {
    const std::size_t db = b.size() - 1;
    const mpz_class &lb = b.back();
    while (a.size() >= b.size()) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto &c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

} // namespace

LaurentPoly::LaurentPoly(const mpq_class &c) {
    if (c != 0) {
        c_.push_back(c);
        c_.back().canonicalize();
    }
}

LaurentPoly LaurentPoly::monomial(const mpq_class &c, int e) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = e;
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<mpq_class> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.c_ = std::move(coeffs);
    for (auto &x : p.c_) x.canonicalize();
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
        low_ += static_cast<int>(k);
    }
    if (c_.empty()) low_ = 0;
}

bool LaurentPoly::is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }

mpq_class LaurentPoly::coeff(int e) const {
    if (e < low_ || e > high() || c_.empty()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<int, mpq_class>> LaurentPoly::terms() const {
    std::vector<std::pair<int, mpq_class>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto &c : r.c_) c = -c;
    return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), mpq_class(0));
        low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
    trim();
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) { return *this += -o; }

LaurentPoly &LaurentPoly::operator*=(const mpq_class &c) {
    if (c == 0) return *this = LaurentPoly();
    for (auto &x : c_) x *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    mpq_class tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            r.c_[i + j] += tmp;
        }
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.low_ = -high();
    return r;
}

std::size_t LaurentPoly::complexity() const {
    std::size_t s = 0;
    for (const auto &c : c_) s += 1 + mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
    return s;
}

std::string LaurentPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms()) {
        if (!first) out += " + ";
        first = false;
        out += c.get_str();
        out += "*";
        out += var;
        out += "^";
        out += std::to_string(e);
    }
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view var) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text.empty()) throw std::invalid_argument("empty polynomial");
    LaurentPoly r;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string_view term = strip(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (term.empty()) throw std::invalid_argument("empty term in polynomial");
        mpq_class c;
        int e = 0;
        std::size_t star = term.find('*');
        std::string cs(star == std::string_view::npos ? term : term.substr(0, star));
        if (c.set_str(cs, 10) != 0) throw std::invalid_argument("bad coefficient: " + cs);
        c.canonicalize();
        if (star != std::string_view::npos) {
            std::string_view rest = term.substr(star + 1);
            if (rest.substr(0, var.size()) != var) throw std::invalid_argument("bad variable in term");
            rest.remove_prefix(var.size());
            if (rest.empty()) {
                e = 1;
            } else {
                if (rest.front() != '^') throw std::invalid_argument("bad exponent in term");
                e = std::stoi(std::string(rest.substr(1)));
            }
        }
        r += monomial(c, e);
        if (next == std::string_view::npos) break;
        pos = next + 3;
    }
    return r;
}

LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly(1);
    if (a.is_zero()) return b.shifted(-b.low()) * mpq_class(1 / b.lowest_coeff());
    if (b.is_zero()) return a.shifted(-a.low()) * mpq_class(1 / a.lowest_coeff());
    if (a.size() == 1 || b.size() == 1) return LaurentPoly(1);
    IntPoly x = to_int_primitive(a), y = to_int_primitive(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (y.size() > 1) {
        IntPoly r = prem(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
        if (y.empty()) break;
    }
    if (!y.empty()) return LaurentPoly(1); // nonzero constant remainder
    std::vector<mpq_class> c(x.begin(), x.end());
    LaurentPoly g = LaurentPoly::from_coeffs(0, std::move(c));
    g = g.shifted(-g.low());
    return g * mpq_class(1 / g.lowest_coeff());
}

LaurentPoly poly_exact_div(const LaurentPoly &a, const LaurentPoly &b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return a;
    if (b.size() == 1) return a.shifted(-b.low()) * mpq_class(1 / b.lowest_coeff());
    // Long division from the top on the dense coefficient arrays.
    std::vector<mpq_class> r = a.coeffs();
    const auto &bc = b.coeffs();
    if (r.size() < bc.size()) throw std::domain_error("inexact polynomial division");
    std::size_t qn = r.size() - bc.size() + 1;
    std::vector<mpq_class> quot(qn);
    mpq_class inv = 1 / b.leading_coeff(), tmp;
    for (std::size_t k = qn; k-- > 0;) {
        mpq_class f = r[k + bc.size() - 1] * inv;
        quot[k] = f;
        if (f == 0) continue;
        for (std::size_t i = 0; i < bc.size(); ++i) {
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), bc[i].get_mpq_t());
            r[k + i] -= tmp;
        }
    }
    for (std::size_t i = 0; i + 1 < bc.size(); ++i)
        if (r[i] != 0) throw std::domain_error("inexact polynomial division");
    return LaurentPoly::from_coeffs(a.low() - b.low(), std::move(quot));
}

template <class Var>
void RationalFunction<Var>::rescale() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    int sh = den_.low();
    if (sh != 0) {
        den_ = den_.shifted(-sh);
        num_ = num_.shifted(-sh);
    }
    if (den_.lowest_coeff() != 1) {
        mpq_class c = 1 / den_.lowest_coeff();
        den_ *= c;
        num_ *= c;
    }
}

template <class Var>
void RationalFunction<Var>::normalize() {
    rescale();
    if (num_.is_zero() || den_.is_one()) return;
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
        rescale();
    }
}

template <class Var>
RationalFunction<Var> RationalFunction<Var>::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.rescale();
    return r;
}

template <class Var>
RationalFunction<Var> RationalFunction<Var>::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

template <class Var>
RationalFunction<Var> RationalFunction<Var>::parse(std::string_view text) {
    std::size_t slash = text.find(" / ");
    if (slash == std::string_view::npos) return RationalFunction(LaurentPoly::parse(text, Var::name));
    return RationalFunction(LaurentPoly::parse(text.substr(0, slash), Var::name),
                            LaurentPoly::parse(text.substr(slash + 3), Var::name));
}

template <class Var>
std::string RationalFunction<Var>::pretty() const {
    auto poly = [](const LaurentPoly &p) {
        if (p.is_zero()) return std::string("0");
        std::string s;
        bool first = true;
        for (const auto &[e, c] : p.terms()) {
            mpq_class a = abs(c);
            if (first) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            first = false;
            bool unit = a == 1 && e != 0;
            if (!unit) s += a.get_str();
            if (e != 0) {
                if (!unit) s += "*";
                s += Var::name;
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    };
    if (den_.is_one()) return poly(num_);
    return "(" + poly(num_) + ")/(" + poly(den_) + ")";
}

template <class Var>
std::ostream &operator<<(std::ostream &os, const RationalFunction<Var> &x) {
    return os << x.pretty();
}

template class RationalFunction<QVar>;
template class RationalFunction<TVar>;
template std::ostream &operator<<(std::ostream &, const RationalFunction<QVar> &);
template std::ostream &operator<<(std::ostream &, const RationalFunction<TVar> &);

ExactScalar qint(int m) {
    if (m == 0) return ExactScalar();
    int a = m < 0 ? -m : m;
    std::vector<mpq_class> c(static_cast<std::size_t>(2 * a - 1), mpq_class(0));
    for (int i = 0; i < a; ++i) c[static_cast<std::size_t>(2 * i)] = m < 0 ? -1 : 1;
    return ExactScalar(LaurentPoly::from_coeffs(1 - a, std::move(c)));
}

ExactScalar qfact(int n) {
    if (n < 0) throw std::invalid_argument("qfact of negative integer");
    ExactScalar r(1);
    for (int m = 2; m <= n; ++m) r *= qint(m);
    return r;
}

ExactScalar qbin(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbin requires 0 <= k <= n");
    ExactScalar r(1);
    for (int i = 1; i <= k; ++i) r = r * qint(n - k + i) / qint(i);
    return r;
}

} // namespace qlp
