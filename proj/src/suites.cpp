#include "qlp/suites.hpp"

#include "qlp/basis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qlp {

namespace {

std::string seq_id(const std::string &group, std::size_t k) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%05zu", k);
    return group + "/" + buf;
}

// Appends tasks with ids group/00000, group/00001, ...
class TaskList {
public:
    explicit TaskList(std::string group) : group_(std::move(group)) {}
    void add(std::function<CheckRecord()> f) { tasks_.push_back({seq_id(group_, tasks_.size()), std::move(f)}); }
    std::vector<Task> take() { return std::move(tasks_); }

private:
    std::string group_;
    std::vector<Task> tasks_;
};

CheckRecord from_result(const CheckResult &r) {
    CheckRecord out{{}, r.pattern, r.check, r.pass, r.detail, {}};
    if (r.residual) out.residual = to_json(*r.residual);
    return out;
}

CheckRecord make(std::string pattern, std::string check, bool pass, std::string detail = {}) {
    return {{}, std::move(pattern), std::move(check), pass, std::move(detail), {}};
}

std::string list_str(const std::vector<int> &v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string universe_str(const Universe &u) { return list_str(u.valences) + " s=" + std::to_string(u.s); }

// Negate the first coefficient.
TensorVector flip_one(TensorVector v) {
    if (v.is_zero()) throw std::logic_error("cannot perturb a zero vector");
    auto [idx, c] = *v.coeffs().begin();
    v.set(idx, -c);
    return v;
}

ExactScalar minus_q_pow(int e) {
    ExactScalar c = qpow(e);
    return e % 2 ? -c : c;
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int left, int top) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int a = std::min(left, top); a >= 1; --a) {
            cur.push_back(a);
            self(self, left - a, a);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

int default_n(const SuiteOptions &opt, int fallback) { return opt.max_n.value_or(fallback); }

// theta_l^{(s2)} on the upper s2 points, theta_k^{(s1)} on the lower s1 points
TensorVector theta_pair(int l, int s2, int k, int s1) {
    std::vector<int> dims(static_cast<std::size_t>(s1 + s2), 2);
    TensorVector out(dims);
    if (l < 0 || k < 0 || l > s2 || k > s1) return out;
    TensorVector a = theta(l, s2), b = theta(k, s1);
    for (const auto &[ib, cb] : b.coeffs())
        for (const auto &[ia, ca] : a.coeffs()) {
            MultiIndex idx = ib;
            idx.insert(idx.end(), ia.begin(), ia.end());
            out.add(idx, cb * ca);
        }
    return out;
}

} // namespace

std::vector<Universe> universes(int max_n, const std::optional<std::vector<int>> &valences, const std::optional<int> &s) {
    std::vector<Universe> out;
    auto add = [&](const std::vector<int> &vals) {
        for (int d : admissible_defects(vals))
            if (!s || *s == d) out.push_back({vals, d});
    };
    if (valences) {
        add(*valences);
        return out;
    }
    for (int n = 1; n <= max_n; ++n)
        for (const auto &vals : valence_lists(n)) add(vals);
    return out;
}

std::vector<Task> dimension_tasks(int max_sum, int max_part) {
    TaskList tl("dimension");
    for (int n = 1; n <= max_sum; ++n)
        for (const auto &vals : valence_lists(n, max_part))
            for (int s = n % 2; s <= n; s += 2)
                tl.add([vals, s] {
                    std::size_t dim = hw_space(vals, s).size();
                    mpz_class c = count(vals, s);
                    return make(list_str(vals) + " s=" + std::to_string(s), "dim hw_space = count",
                                mpz_class(static_cast<unsigned long>(dim)) == c,
                                "dim " + std::to_string(dim) + ", count " + c.get_str());
                });
    return tl.take();
}

std::vector<Task> count_pp_tasks(int max_size) {
    TaskList tl("count_pp");
    for (int N = 0; 2 * N <= max_size; ++N)
        for (int s = 0; 2 * N + s <= max_size; ++s)
            tl.add([N, s] {
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(2 * N + s), static_cast<unsigned long>(N + s));
                mpq_class closed(mpz_class(s + 1) * bin, mpz_class(N + s + 1));
                closed.canonicalize();
                mpz_class c = count_pp(N, s);
                bool pass = closed == mpq_class(c) && c == count(std::vector<int>(static_cast<std::size_t>(2 * N + s), 1), s);
                return make("N=" + std::to_string(N) + " s=" + std::to_string(s), "count_pp closed form", pass,
                            "count " + c.get_str() + ", formula " + closed.get_str());
            });
    return tl.take();
}

std::vector<Task> catalan_tasks(int max_N) {
    TaskList tl("catalan");
    for (int N = 1; N <= max_N; ++N)
        tl.add([N] {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(2 * N), static_cast<unsigned long>(N));
            mpz_class cat = bin / (N + 1);
            std::size_t dim = hw_space(std::vector<int>(static_cast<std::size_t>(2 * N), 1), 0).size();
            return make("N=" + std::to_string(N), "dim hw_space = Catalan", mpz_class(static_cast<unsigned long>(dim)) == cat,
                        "dim " + std::to_string(dim) + ", Catalan " + cat.get_str());
        });
    return tl.take();
}

std::vector<Task> pair_partition_tasks(int max_N, bool fault) {
    TaskList tl("pairs");
    bool first = true;
    for (int N = 1; N <= max_N; ++N)
        for (const auto &a : enumerate(std::vector<int>(static_cast<std::size_t>(2 * N), 1), 0)) {
            tl.add([a, f = fault && first] {
                TensorVector v = build_v_pp(a);
                if (f) v = flip_one(v);
                CheckRecord r = make(a.str(), "pair partition projections", true);
                for (int j = 1; j < a.p(); ++j) {
                    CheckResult c = verify_projection(a, j, 1, v);
                    if (!c.pass) {
                        r = from_result(c);
                        break;
                    }
                }
                return r;
            });
            first = false;
        }
    tl.add([] {
        return make("()[]", "v of the empty pattern is 1", build_v_pp(LinkPattern()) == TensorVector::scalar(ExactScalar(1)));
    });
    for (int N = 1; N <= max_N; ++N)
        tl.add([N] {
            bool pass = build_v_pp(rainbow(N)) == rainbow_vector(N);
            return make(rainbow(N).str(), "rainbow closed form", pass);
        });
    return tl.take();
}

std::vector<Task> projection_tasks(const SuiteOptions &opt) {
    TaskList tl("projection");
    bool first = true;
    for (const auto &u : universes(default_n(opt, 6), opt.valences, opt.s))
        for (const auto &w : enumerate(u.valences, u.s)) {
            for (int j = 1; j < w.p(); ++j)
                for (int m = 1; m <= std::min(w.valence(j), w.valence(j + 1)); ++m) {
                    if (opt.inject_fault && first)
                        tl.add([w, j, m] { return from_result(verify_projection(w, j, m, flip_one(build_v_omega(w)))); });
                    else
                        tl.add([w, j, m] { return from_result(verify_projection(w, j, m)); });
                    first = false;
                }
            tl.add([w] { return from_result(verify_highest_weight(w)); });
        }
    return tl.take();
}

std::vector<Task> normalization_tasks(int max_s) {
    TaskList tl("normalization");
    for (int s = 1; s <= max_s; ++s)
        for (const auto &lam : partitions(s, s))
            tl.add([lam, s] {
                std::vector<int> dims;
                for (int r : lam) dims.push_back(r + 1);
                ExactScalar c = qint(2).pow(s) / ((qpow(1) - qpow(-1)).pow(s) * qfact(s + 1));
                TensorVector expect = TensorVector::basis(dims, MultiIndex(dims.size(), 0), c);
                LinkPattern w = shuffle_pattern(lam);
                TensorVector v = build_v_omega(w);
                CheckRecord r = make(w.str(), "shuffle normalization", v == expect && shuffle_vector(lam) == expect);
                if (!r.pass && v.dims() == expect.dims()) r.residual = to_json(v - expect);
                return r;
            });
    return tl.take();
}

std::vector<Task> rank_tasks(const SuiteOptions &opt) {
    TaskList tl("rank");
    for (const auto &u : universes(default_n(opt, 6), opt.valences, opt.s))
        tl.add([u] {
            std::size_t rank = basis_rank(u.valences, u.s);
            mpz_class c = count(u.valences, u.s);
            return make(universe_str(u), "basis rank = count", mpz_class(static_cast<unsigned long>(rank)) == c,
                        "rank " + std::to_string(rank) + ", count " + c.get_str());
        });
    return tl.take();
}

std::vector<Task> cyclic_tasks(const SuiteOptions &opt) {
    TaskList tl("cyclic");
    bool first = true;
    for (const auto &u : universes(default_n(opt, 6), opt.valences, opt.s)) {
        if (u.s != 0) continue;
        for (const auto &w : enumerate(u.valences, 0)) {
            if (opt.inject_fault && first)
                tl.add([w] {
                    TensorVector lhs = build_v_omega(cyclic_S(w));
                    TensorVector rhs = minus_q_pow(w.valence(w.p())) * smap(flip_one(build_v_omega(w)));
                    CheckRecord r = make(w.str(), "cyclic", lhs == rhs);
                    if (!r.pass && lhs.dims() == rhs.dims()) r.residual = to_json(lhs - rhs);
                    return r;
                });
            else
                tl.add([w] { return from_result(verify_cyclic(w)); });
            tl.add([w] { return from_result(verify_full_cycle(w)); });
            first = false;
        }
    }
    return tl.take();
}

std::vector<Task> r_minus_tasks(const SuiteOptions &opt) {
    TaskList tl("r_minus");
    for (const auto &u : universes(default_n(opt, 5), opt.valences, opt.s))
        for (const auto &w : enumerate(u.valences, u.s))
            tl.add([w] {
                TensorVector lhs = build_v_omega_minus(w);
                TensorVector rhs = minus_q_pow(w.s()) * build_v_omega(w);
                CheckRecord r = make(w.str(), "R- construction", lhs == rhs);
                if (!r.pass && lhs.dims() == rhs.dims()) r.residual = to_json(lhs - rhs);
                return r;
            });
    return tl.take();
}

std::vector<Task> dual_tasks(const SuiteOptions &opt) {
    TaskList tl("dual");
    bool first = true;
    for (const auto &u : universes(default_n(opt, 6), opt.valences, opt.s)) {
        auto ws = std::make_shared<const std::vector<LinkPattern>>(enumerate(u.valences, u.s));
        for (std::size_t i = 0; i < ws->size(); ++i) {
            const LinkPattern &w = (*ws)[i];
            const std::size_t orderings = dual_functionals(w).size();
            // one row of the Gram matrix per ordering
            for (std::size_t k = 0; k < orderings; ++k) {
                tl.add([ws, i, k, f = opt.inject_fault && first] {
                    const LinkPattern &w = (*ws)[i];
                    const DualFunctional psi = dual_functionals(w)[k];
                    const std::string check = "dual row, ordering " + std::to_string(k + 1);
                    for (const auto &t : *ws) {
                        TensorVector vt = build_v_omega(t);
                        if (f && t == w) vt = flip_one(vt);
                        ExactScalar val = dual_eval(psi, vt);
                        if (t == w) {
                            if (val.is_zero()) return make(w.str(), check, false, "zero diagonal");
                            if (val != dual_expected_diagonal(psi))
                                return make(w.str(), check, false, "diagonal " + val.str() + " differs from the product of 1/C");
                        } else if (!val.is_zero()) {
                            return make(w.str(), check, false, "nonzero on " + t.str());
                        }
                    }
                    return make(w.str(), check, true);
                });
                first = false;
            }
            if (orderings > 1)
                tl.add([ws, i] {
                    const LinkPattern &w = (*ws)[i];
                    auto psis = dual_functionals(w);
                    for (const auto &t : *ws) {
                        TensorVector vt = build_v_omega(t);
                        ExactScalar val = dual_eval(psis[0], vt);
                        for (std::size_t k = 1; k < psis.size(); ++k)
                            if (dual_eval(psis[k], vt) != val)
                                return make(w.str(), "orderings agree", false,
                                            "orderings 1 and " + std::to_string(k + 1) + " differ on " + t.str());
                    }
                    return make(w.str(), "orderings agree", true, std::to_string(psis.size()) + " orderings");
                });
        }
    }
    return tl.take();
}

std::vector<Task> q_identity_tasks(bool fault) {
    TaskList tl("qidentity");
    for (int n = 1; n <= 8; ++n)
        tl.add([n, f = fault && n == 1] {
            for (int k = 1; k <= n; ++k) {
                ExactScalar rhs = qpow(k - n) * qbin(n - 1, k - 1);
                if (k <= n - 1) rhs += qpow(k) * qbin(n - 1, k);
                ExactScalar lhs = qbin(n, k);
                if (f) lhs += ExactScalar(1);
                if (lhs != rhs) return make("n=" + std::to_string(n), "(a) q-binomial recursion", false, "k=" + std::to_string(k));
            }
            return make("n=" + std::to_string(n), "(a) q-binomial recursion", true);
        });
    for (int n = 0; n <= 5; ++n)
        tl.add([n] {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            LaurentPoly sum;
            do {
                int inv = 0;
                for (std::size_t i = 0; i < perm.size(); ++i)
                    for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
                sum += LaurentPoly::monomial(1, 2 * inv);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return make("n=" + std::to_string(n), "(b) inversion generating function",
                        ExactScalar(sum) == qpow(n * (n - 1) / 2) * qfact(n));
        });
    for (int nu1 = 0; nu1 <= 6; ++nu1)
        for (int nu2 = 0; nu2 <= 6; ++nu2)
            tl.add([nu1, nu2] {
                std::string id = "nu1=" + std::to_string(nu1) + " nu2=" + std::to_string(nu2);
                for (int n = 0; n <= std::min(nu1, nu2); ++n) {
                    ExactScalar tail = qfact(nu1 - n) * qfact(nu2 - n) * qfact(nu1 + nu2 - n + 1) / qfact(nu1 + nu2 - 2 * n + 1);
                    ExactScalar c, d;
                    for (int k = 0; k <= n; ++k) {
                        c += qbin(n, k) * qpow(k * (2 * n - nu1 - nu2 - 2)) * qfact(nu1 - n + k) * qfact(nu2 - k);
                        d += qbin(n, k) * qpow(k * (nu1 + nu2 - 2 * n + 2)) * qfact(nu1 - k) * qfact(nu2 - n + k);
                    }
                    if (c != qpow(n * (n - nu1 - 1)) * tail) return make(id, "(c)/(d) factorial sums", false, "(c) fails at n=" + std::to_string(n));
                    if (d != qpow(n * (nu2 + 1 - n)) * tail) return make(id, "(c)/(d) factorial sums", false, "(d) fails at n=" + std::to_string(n));
                }
                return make(id, "(c)/(d) factorial sums", true);
            });
    return tl.take();
}

std::vector<Task> projection_formula_tasks(int max_s, int max_m) {
    TaskList tl("projection_formula");
    for (int s1 = 1; s1 <= max_s; ++s1)
        for (int s2 = 1; s2 <= max_s; ++s2)
            for (int m = 1; m <= std::min({s1, s2, max_m}); ++m) {
                std::string id = "s1=" + std::to_string(s1) + " s2=" + std::to_string(s2) + " m=" + std::to_string(m);
                tl.add([=] {
                    const ExactScalar pre = ((qpow(1) - qpow(-1)) / qint(2)).pow(m);
                    for (int l = 0; l <= s2; ++l)
                        for (int k = 0; k <= s1; ++k) {
                            TensorVector lhs = theta_pair(l, s2, k, s1);
                            for (int i = 0; i < m; ++i) lhs = drop_trivial(reduce_pair(lhs, s1 - i, 1));
                            TensorVector rhs(std::vector<int>(static_cast<std::size_t>(s1 + s2 - 2 * m), 2));
                            for (int j = 0; j <= m; ++j) {
                                ExactScalar c = qbin(m, j) * qpow((m - j) * (j + l - s2 - 1 - k));
                                if (j % 2) c = -c;
                                for (int r = 0; r < j; ++r) c *= qint(k - r);
                                for (int r = 0; r < m - j; ++r) c *= qint(l - r);
                                if (!c.is_zero()) rhs += c * theta_pair(l - m + j, s2 - m, k - j, s1 - m);
                            }
                            rhs *= pre;
                            if (lhs != rhs) {
                                CheckRecord r = make(id, "m-fold projection formula", false, "l=" + std::to_string(l) + " k=" + std::to_string(k));
                                r.residual = to_json(lhs - rhs);
                                return r;
                            }
                        }
                    return make(id, "m-fold projection formula", true);
                });
                tl.add([=] {
                    const int r = s1 + s2 - 2 * m;
                    TensorVector v = embed_blocks(cg_hwv(r + 1, s1 + 1, s2 + 1));
                    for (int i = 0; i < m; ++i) v = drop_trivial(reduce_pair(v, s1 - i, 1));
                    TensorVector expect = constant_C(m, s1, s2) * drop_trivial(embed_blocks(TensorVector::basis({r + 1}, {0})));
                    CheckRecord rec = make(id, "hwv projection constant", v == expect);
                    if (!rec.pass && v.dims() == expect.dims()) rec.residual = to_json(v - expect);
                    return rec;
                });
            }
    return tl.take();
}

std::vector<Task> bsa_tasks(int max_size, bool fault) {
    TaskList tl("bsa");
    bool first = true;
    for (int n = 1; n <= max_size; ++n)
        for (const auto &lam : partitions(n, 3)) {
            std::vector<int> ds;
            std::vector<KappaScalar> h;
            for (int r : lam) {
                ds.push_back(r + 1);
                h.push_back(kac_weight(r + 1));
            }
            const std::string name = "lambda=" + list_str(lam);
            for (int j = 1; j <= static_cast<int>(lam.size()); ++j) {
                // every operator vanishes on a single point, so the fault needs two
                const bool f = fault && first && lam.size() >= 2;
                if (f) first = false;
                tl.add([=] {
                    CoulombExpr sol = shuffle_solution(lam);
                    if (f) sol += sol.times(XPoly::variable(sol.p(), sol.p()) * XPoly::variable(sol.p(), sol.p()));
                    CoulombExpr out = apply_bsa(j, ds[static_cast<std::size_t>(j - 1)], sol, h);
                    CheckRecord r = make(name, "BSA annihilation j=" + std::to_string(j), out.is_zero());
                    if (!r.pass) r.residual = to_json(out);
                    return r;
                });
            }
            tl.add([=] { return make(name, "translation invariance", check_translation(shuffle_solution(lam))); });
            tl.add([=] {
                KappaScalar delta = delta_weight(n + 1, ds);
                return make(name, "Euler degree = Delta", check_homogeneity(shuffle_solution(lam), delta), "Delta = " + delta.str());
            });
        }
    return tl.take();
}

std::vector<Task> sle_tasks() {
    TaskList tl("sle");
    const std::string name = "(x2-x1)^(1-6/kappa)";
    auto z = [] { return CoulombExpr::power(2, {{{1, 2}, Exponent{1, -6}}}); };
    auto h = [] { return std::vector<KappaScalar>{kac_weight(2), kac_weight(2)}; };
    for (int i = 1; i <= 2; ++i) {
        tl.add([=] {
            CoulombExpr out = apply_sle2(i, z());
            CheckRecord r = make(name, "second-order SLE operator i=" + std::to_string(i), out.is_zero());
            if (!r.pass) r.residual = to_json(out);
            return r;
        });
        tl.add([=] {
            CoulombExpr out = apply_bsa(i, 2, z(), h());
            CheckRecord r = make(name, "BSA d=2 j=" + std::to_string(i), out.is_zero());
            if (!r.pass) r.residual = to_json(out);
            return r;
        });
    }
    tl.add([=] { return make(name, "translation generator", check_translation(z())); });
    tl.add([=] { return make(name, "dilation generator", check_homogeneity(z(), KappaScalar(-2) * kac_weight(2))); });
    tl.add([=] { return make(name, "special conformal generator", check_mobius(z(), h())); });
    tl.add([] {
        double b = selberg_constant(2, 2, 1, 3.5), b2 = selberg_constant(3, 2, 2, 3.5), b3 = selberg_constant(2, 3, 2, 3.5);
        std::ostringstream os;
        os.precision(12);
        os << "B(2,2;1) = " << b << ", B(3,2;2) = " << b2 << ", B(2,3;2) = " << b3;
        bool pass = std::isfinite(b) && b != 0 && std::abs(b2 - b3) <= 1e-9 * std::abs(b2);
        return make("kappa=3.5", "Selberg constant finite and symmetric", pass, os.str());
    });
    return tl.take();
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"projections", "cyclic", "duals", "identities", "pde", "dimensions", "pairs"};
    return names;
}

std::vector<Task> build_suite(const std::string &name, const SuiteOptions &opt) {
    std::vector<Task> out;
    auto append = [&](std::vector<Task> t) { std::move(t.begin(), t.end(), std::back_inserter(out)); };
    if (name == "projections") {
        append(projection_tasks(opt));
        if (!opt.valences) append(normalization_tasks(std::min(4, default_n(opt, 6))));
        append(rank_tasks(opt));
    } else if (name == "cyclic") {
        append(cyclic_tasks(opt));
        SuiteOptions r = opt;
        r.max_n = std::min(default_n(opt, 6), 5);
        append(r_minus_tasks(r));
    } else if (name == "duals") {
        append(dual_tasks(opt));
    } else if (name == "identities") {
        append(q_identity_tasks(opt.inject_fault));
        append(projection_formula_tasks(4, 3));
    } else if (name == "pde") {
        append(bsa_tasks(std::min(default_n(opt, 3), 3), opt.inject_fault));
        append(sle_tasks());
    } else if (name == "dimensions") {
        append(dimension_tasks(default_n(opt, 8), 4));
        append(count_pp_tasks(10));
        append(catalan_tasks(4));
    } else if (name == "pairs") {
        append(pair_partition_tasks(std::min(default_n(opt, 4), 4), opt.inject_fault));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return out;
}

std::vector<CheckRecord> run_tasks(const std::vector<Task> &tasks, int jobs, const std::function<void(const CheckRecord &)> &on_result) {
    auto run_one = [&](std::size_t i) {
        CheckRecord r;
        try {
            r = tasks[i].run();
        } catch (const std::exception &e) {
            r = make({}, {}, false, std::string("exception: ") + e.what());
        }
        r.id = tasks[i].id;
        return r;
    };
    std::vector<CheckRecord> out(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            out[i] = run_one(i);
            if (on_result) on_result(out[i]);
        }
        return out;
    }

    std::vector<char> ready(tasks.size(), 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            CheckRecord r = run_one(i);
            std::lock_guard lock(mu);
            out[i] = std::move(r);
            ready[i] = 1;
            cv.notify_one();
        }
    };
    std::vector<std::jthread> pool;
    for (int k = 0; k < std::min<int>(jobs, static_cast<int>(tasks.size())); ++k) pool.emplace_back(worker);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return ready[i] != 0; });
        lock.unlock();
        if (on_result) on_result(out[i]);
    }
    return out;
}

} // namespace qlp
