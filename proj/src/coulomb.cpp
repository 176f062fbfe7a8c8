#include "qlp/coulomb.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qlp {

namespace {

const KappaScalar t_var = KappaScalar::var_pow(1);

void check_point(int p, int i) {
    if (i < 1 || i > p) throw std::out_of_range("point index out of range");
}

std::string rational_str(const mpq_class &x) { return x.get_str(); }

} // namespace

KappaScalar Exponent::value() const { return KappaScalar(a) + KappaScalar(b) * t_var; }

std::string Exponent::str() const { return rational_str(a) + " + " + rational_str(b) + "/kappa"; }

// XPoly

XPoly XPoly::constant(int p, const KappaScalar &c) {
    XPoly r(p);
    r.add_term(std::vector<int>(static_cast<std::size_t>(p), 0), c);
    return r;
}

XPoly XPoly::variable(int p, int i) {
    check_point(p, i);
    std::vector<int> mono(static_cast<std::size_t>(p), 0);
    mono[static_cast<std::size_t>(i - 1)] = 1;
    XPoly r(p);
    r.add_term(mono, KappaScalar(1));
    return r;
}

void XPoly::add_term(const std::vector<int> &mono, const KappaScalar &c) {
    if (static_cast<int>(mono.size()) != p_) throw std::invalid_argument("monomial has wrong arity");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPoly &XPoly::operator+=(const XPoly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

XPoly &XPoly::operator-=(const XPoly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
}

XPoly &XPoly::operator*=(const KappaScalar &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, x] : terms_) x *= c;
    return *this;
}

XPoly operator*(const XPoly &a, const XPoly &b) {
    XPoly r(a.p_);
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_) {
            std::vector<int> m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

XPoly XPoly::diff(int i) const {
    check_point(p_, i);
    const auto k = static_cast<std::size_t>(i - 1);
    XPoly r(p_);
    for (const auto &[m, c] : terms_) {
        if (m[k] == 0) continue;
        std::vector<int> d = m;
        --d[k];
        r.add_term(d, KappaScalar(static_cast<long>(m[k])) * c);
    }
    return r;
}

XPoly XPoly::times_gap(int a, int b) const { return *this * (variable(p_, b) - variable(p_, a)); }

bool XPoly::divide_gap(int a, int b, XPoly &quotient) const {
    const auto kb = static_cast<std::size_t>(b - 1);
    // coefficients of x_b^n
    std::map<int, XPoly> by_deg;
    for (const auto &[m, c] : terms_) {
        std::vector<int> rest = m;
        int n = rest[kb];
        rest[kb] = 0;
        by_deg.try_emplace(n, XPoly(p_)).first->second.add_term(rest, c);
    }
    quotient = XPoly(p_);
    if (by_deg.empty()) return true;
    const XPoly xa = variable(p_, a);
    const int top = by_deg.rbegin()->first;
    // synthetic division by (x_b - x_a): q_{n-1} = c_n + x_a q_n
    XPoly carry(p_);
    for (int n = top; n >= 1; --n) {
        auto it = by_deg.find(n);
        XPoly qn = carry;
        if (it != by_deg.end()) qn += it->second;
        for (const auto &[m, c] : qn.terms_) {
            std::vector<int> mm = m;
            mm[kb] += n - 1;
            quotient.add_term(mm, c);
        }
        carry = xa * qn;
    }
    auto it0 = by_deg.find(0);
    XPoly rem = carry;
    if (it0 != by_deg.end()) rem += it0->second;
    return rem.is_zero();
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.pretty() << ")";
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) os << "*x" << i + 1 << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    return os.str();
}

// CoulombExpr

CoulombExpr::CoulombExpr(int p) : p_(p), exps_(static_cast<std::size_t>(p * (p - 1) / 2)), num_(p),
                                  den_(static_cast<std::size_t>(p * (p - 1) / 2), 0) {
    if (p < 0) throw std::invalid_argument("negative point count");
}

CoulombExpr CoulombExpr::power(int p, const std::map<std::pair<int, int>, Exponent> &exps, const KappaScalar &c) {
    CoulombExpr f(p);
    for (const auto &[ij, e] : exps) f.exps_[f.pair_index(ij.first, ij.second)] = e;
    f.num_ = XPoly::constant(p, c);
    return f;
}

std::size_t CoulombExpr::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > p_ || i == j) throw std::out_of_range("invalid point pair");
    // pairs (1,2),(1,3),...,(1,p),(2,3),...
    int before = (i - 1) * p_ - (i - 1) * i / 2;
    return static_cast<std::size_t>(before + (j - i - 1));
}

void CoulombExpr::canonicalize() {
    if (num_.is_zero()) {
        std::fill(den_.begin(), den_.end(), 0);
        return;
    }
    for (int i = 1; i <= p_; ++i)
        for (int j = i + 1; j <= p_; ++j) {
            int &k = den_[pair_index(i, j)];
            XPoly q;
            while (k > 0 && num_.divide_gap(i, j, q)) {
                num_ = std::move(q);
                --k;
            }
        }
}

CoulombExpr &CoulombExpr::operator+=(const CoulombExpr &o) {
    if (!same_class(o)) throw std::invalid_argument("adding expressions with different exponents");
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    XPoly a = num_, b = o.num_;
    for (int i = 1; i <= p_; ++i)
        for (int j = i + 1; j <= p_; ++j) {
            std::size_t k = pair_index(i, j);
            int top = std::max(den_[k], o.den_[k]);
            for (int r = den_[k]; r < top; ++r) a = a.times_gap(i, j);
            for (int r = o.den_[k]; r < top; ++r) b = b.times_gap(i, j);
            den_[k] = top;
        }
    num_ = a + b;
    canonicalize();
    return *this;
}

CoulombExpr &CoulombExpr::operator-=(const CoulombExpr &o) { return *this += KappaScalar(-1) * o; }

CoulombExpr &CoulombExpr::operator*=(const KappaScalar &c) {
    num_ *= c;
    if (c.is_zero()) canonicalize();
    return *this;
}

CoulombExpr CoulombExpr::with_numerator(XPoly num) const {
    if (num.p() != p_) throw std::invalid_argument("numerator has wrong arity");
    CoulombExpr r = *this;
    r.num_ = std::move(num);
    r.canonicalize();
    return r;
}

CoulombExpr CoulombExpr::times(const XPoly &f) const {
    CoulombExpr r = *this;
    r.num_ = r.num_ * f;
    r.canonicalize();
    return r;
}

CoulombExpr CoulombExpr::times_difference(int i, int j, int n) const {
    CoulombExpr r = *this;
    int a = std::min(i, j), b = std::max(i, j);
    // (x_i - x_j) = -(x_b - x_a) when i < j
    if (i < j && n % 2 != 0) r.num_ *= KappaScalar(-1);
    if (n >= 0) {
        for (int k = 0; k < n; ++k) r.num_ = r.num_.times_gap(a, b);
    } else {
        r.den_[pair_index(a, b)] += -n;
    }
    r.canonicalize();
    return r;
}

std::string CoulombExpr::str() const {
    std::ostringstream os;
    for (int i = 1; i <= p_; ++i)
        for (int j = i + 1; j <= p_; ++j) os << "e(" << i << "," << j << ") = " << exponent(i, j).str() << "\n";
    os << "prefactor = " << num_.str();
    bool any = false;
    for (int i = 1; i <= p_; ++i)
        for (int j = i + 1; j <= p_; ++j) {
            int k = denominator_power(i, j);
            if (k == 0) continue;
            os << (any ? " * " : " / (") << "(x" << j << " - x" << i << ")^" << k;
            any = true;
        }
    if (any) os << ")";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const XPoly &f) { return os << f.str(); }
std::ostream &operator<<(std::ostream &os, const CoulombExpr &f) { return os << f.str(); }

// weights and operators

KappaScalar kac_weight(int d) {
    if (d < 1) throw std::invalid_argument("kac_weight requires d >= 1");
    return KappaScalar(static_cast<long>(d * d - 1)) * t_var - KappaScalar(mpq_class(d - 1, 2));
}

KappaScalar delta_weight(int d, const std::vector<int> &ds) {
    KappaScalar r = kac_weight(d);
    for (int di : ds) r -= kac_weight(di);
    return r;
}

CoulombExpr diff_x(const CoulombExpr &f, int i) {
    const int p = f.p();
    check_point(p, i);
    CoulombExpr out = f.with_numerator(f.numerator().diff(i));
    // d_i of (x_b - x_a)^{e_ab - k_ab} gives (e_ab - k_ab) / (x_b - x_a), negated when i = a
    for (int j = 1; j <= p; ++j) {
        if (j == i) continue;
        int a = std::min(i, j), b = std::max(i, j);
        KappaScalar c = f.exponent(a, b).value() - KappaScalar(static_cast<long>(f.denominator_power(a, b)));
        if (c.is_zero()) continue;
        if (i == a) c = -c;
        out += c * f.times_difference(b, a, -1);
    }
    return out;
}

CoulombExpr apply_L(int m, int j, const CoulombExpr &f, const std::vector<KappaScalar> &weights) {
    const int p = f.p();
    check_point(p, j);
    if (static_cast<int>(weights.size()) != p) throw std::invalid_argument("one weight per point required");
    CoulombExpr out = f.with_numerator(XPoly(p));
    for (int i = 1; i <= p; ++i) {
        if (i == j) continue;
        out -= diff_x(f, i).times_difference(i, j, 1 + m);
        KappaScalar c = KappaScalar(static_cast<long>(1 + m)) * weights[static_cast<std::size_t>(i - 1)];
        if (!c.is_zero()) out -= c * f.times_difference(i, j, m);
    }
    return out;
}

CoulombExpr apply_bsa(int j, int d, const CoulombExpr &f, const std::vector<KappaScalar> &weights) {
    if (d < 1) throw std::invalid_argument("apply_bsa requires d >= 1");
    // L_{-n_1} ... L_{-n_k} f, computed from the right and shared across compositions by suffix
    std::map<std::vector<int>, CoulombExpr> suffix;
    auto image = [&](auto &&self, const std::vector<int> &parts, std::size_t from) -> CoulombExpr {
        if (from == parts.size()) return f;
        std::vector<int> key(parts.begin() + static_cast<std::ptrdiff_t>(from), parts.end());
        auto it = suffix.find(key);
        if (it != suffix.end()) return it->second;
        CoulombExpr r = apply_L(-parts[from], j, self(self, parts, from + 1), weights);
        suffix.emplace(std::move(key), r);
        return r;
    };
    mpz_class fact = 1;
    for (int i = 2; i < d; ++i) fact *= i;
    const mpq_class lead = mpq_class(fact * fact);
    CoulombExpr out = f.with_numerator(XPoly(f.p()));
    std::vector<int> parts;
    auto walk = [&](auto &&self, int left) -> void {
        if (left == 0) {
            const int k = static_cast<int>(parts.size());
            mpq_class c = lead;
            for (int r = 1; r < k; ++r) {
                int head = std::accumulate(parts.begin(), parts.begin() + r, 0);
                c /= mpq_class(head * (d - head));
            }
            KappaScalar coef = KappaScalar(c) * (KappaScalar(-4) * t_var).pow(d - k);
            out += coef * image(image, parts, 0);
            return;
        }
        for (int n = 1; n <= left; ++n) {
            parts.push_back(n);
            self(self, left - n);
            parts.pop_back();
        }
    };
    walk(walk, d);
    return out;
}

CoulombExpr apply_sle2(int i, const CoulombExpr &f) {
    const int p = f.p();
    check_point(p, i);
    const KappaScalar half_kappa = t_var.inverse() / KappaScalar(2);
    const KappaScalar h = kac_weight(2);
    CoulombExpr out = half_kappa * diff_x(diff_x(f, i), i);
    for (int j = 1; j <= p; ++j) {
        if (j == i) continue;
        out += KappaScalar(2) * diff_x(f, j).times_difference(j, i, -1);
        out -= (KappaScalar(2) * h) * f.times_difference(j, i, -2);
    }
    return out;
}

CoulombExpr shuffle_solution(const std::vector<int> &lambda) {
    const int p = static_cast<int>(lambda.size());
    std::map<std::pair<int, int>, Exponent> exps;
    for (int i = 1; i <= p; ++i) {
        if (lambda[static_cast<std::size_t>(i - 1)] < 1) throw std::invalid_argument("partition parts must be positive");
        for (int j = i + 1; j <= p; ++j)
            exps[{i, j}] = Exponent{0, 2 * lambda[static_cast<std::size_t>(i - 1)] * lambda[static_cast<std::size_t>(j - 1)]};
    }
    return CoulombExpr::power(p, exps);
}

bool check_translation(const CoulombExpr &f) {
    CoulombExpr s = f.with_numerator(XPoly(f.p()));
    for (int i = 1; i <= f.p(); ++i) s += diff_x(f, i);
    return s.is_zero();
}

bool check_homogeneity(const CoulombExpr &f, const KappaScalar &delta) {
    const int p = f.p();
    CoulombExpr s = KappaScalar(-1) * delta * f;
    for (int i = 1; i <= p; ++i) s += diff_x(f, i).times(XPoly::variable(p, i));
    return s.is_zero();
}

bool check_mobius(const CoulombExpr &f, const std::vector<KappaScalar> &weights) {
    const int p = f.p();
    if (static_cast<int>(weights.size()) != p) throw std::invalid_argument("one weight per point required");
    CoulombExpr s = f.with_numerator(XPoly(p));
    for (int i = 1; i <= p; ++i) {
        XPoly x = XPoly::variable(p, i);
        s += diff_x(f, i).times(x * x);
        s += f.times(KappaScalar(2) * weights[static_cast<std::size_t>(i - 1)] * x);
    }
    return s.is_zero();
}

double selberg_constant(int d1, int d2, int delta, double kappa) {
    if (!(kappa > 0)) throw std::invalid_argument("selberg_constant requires kappa > 0");
    if ((d1 + d2 - delta - 1) % 2 != 0) throw std::invalid_argument("delta has the wrong parity");
    const int m = (d1 + d2 - delta - 1) / 2;
    if (m < 0 || m > std::min(d1, d2) - 1) throw std::invalid_argument("delta outside the Clebsch-Gordan range");
    auto gamma = [](double x) {
        if (x <= 0 && std::abs(x - std::round(x)) < 1e-12) throw std::domain_error("Gamma pole on the parameter line");
        return std::tgamma(x);
    };
    const double c = 4.0 / kappa;
    double prod = 1;
    for (int u = 1; u <= m; ++u) {
        prod *= gamma(1 - c * (d1 - u)) * gamma(1 - c * (d2 - u)) * gamma(1 + c * u);
        prod /= gamma(1 + c) * gamma(2 - c * (d1 + d2 - m - u));
        prod /= u;
    }
    if (!std::isfinite(prod)) throw std::domain_error("Gamma product is not finite");
    return prod;
}

} // namespace qlp
