#include "qlp/basis.hpp"

#include "qlp/linalg.hpp"

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace qlp {

namespace {

template <class V>
class Memo {
public:
    std::optional<V> get(const LinkPattern &k) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void put(const LinkPattern &k, const V &v) {
        std::lock_guard<std::mutex> lk(mu_);
        map_.emplace(k, v);
    }

private:
    std::mutex mu_;
    std::map<LinkPattern, V> map_;
};

Memo<TensorVector> &pp_memo() {
    static Memo<TensorVector> m;
    return m;
}
Memo<TensorVector> &omega_memo() {
    static Memo<TensorVector> m;
    return m;
}

MultiIndex without_pair(const MultiIndex &idx, std::size_t a) {
    MultiIndex r(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(a));
    r.insert(r.end(), idx.begin() + static_cast<std::ptrdiff_t>(a) + 2, idx.end());
    return r;
}

ExactScalar minus_q_pow(int e) {
    ExactScalar x = qpow(e);
    return (e % 2 != 0) ? -x : x;
}

// Solve the weight-zero system pi-hat_j^{(1)}(v) = target_j (all j) by
// propagating along adjacent transpositions from a root coordinate.
// Returns the propagated vector with x[root] = root_value, or nullopt on an
// inconsistency.
std::optional<TensorVector> propagate(int points, const std::vector<TensorVector> &targets, const MultiIndex &root,
                                      const ExactScalar &root_value, const ExactScalar &a, const ExactScalar &b) {
    // a: coefficient of (l_j, l_{j+1}) = (1, 0); b: coefficient of (0, 1)
    std::vector<int> dims(static_cast<std::size_t>(points), 2);
    std::map<MultiIndex, ExactScalar> x;
    x[root] = root_value;
    std::deque<MultiIndex> queue{root};
    while (!queue.empty()) {
        MultiIndex idx = queue.front();
        queue.pop_front();
        const ExactScalar xv = x.at(idx);
        for (int j = 1; j < points; ++j) {
            std::size_t i = static_cast<std::size_t>(j - 1);
            if (idx[i] == idx[i + 1]) continue;
            MultiIndex other = idx;
            std::swap(other[i], other[i + 1]);
            ExactScalar t = targets[i].coeff(without_pair(idx, i));
            bool here_is_a = idx[i] == 1;
            ExactScalar val = here_is_a ? (t - a * xv) / b : (t - b * xv) / a;
            auto it = x.find(other);
            if (it == x.end()) {
                x.emplace(other, val);
                queue.push_back(other);
            } else if (it->second != val) {
                return std::nullopt;
            }
        }
    }
    TensorVector v(dims);
    for (const auto &[idx, c] : x) v.add(idx, c);
    return v;
}

} // namespace

TensorVector build_v_pp(const LinkPattern &alpha) {
    if (!alpha.valid() || alpha.s() != 0) throw std::invalid_argument("build_v_pp requires a planar pair partition");
    for (int v : alpha.valences())
        if (v != 1) throw std::invalid_argument("build_v_pp requires unit valences");
    if (auto hit = pp_memo().get(alpha)) return *hit;
    const int points = alpha.p();
    if (points == 0) {
        TensorVector one = TensorVector::scalar(ExactScalar(1));
        pp_memo().put(alpha, one);
        return one;
    }
    std::vector<TensorVector> targets;
    for (int j = 1; j < points; ++j) {
        if (alpha.links_between(j, j + 1) > 0)
            targets.push_back(build_v_pp(remove_links(alpha, j, 1)));
        else
            targets.push_back(TensorVector(std::vector<int>(static_cast<std::size_t>(points - 2), 2)));
    }
    const CGData &cg = cg_basis(2, 2);
    auto coef = [&](int l1, int l2) {
        for (const auto &t : cg.dual.at({l1, l2}))
            if (t.d == 1) return t.c;
        return ExactScalar();
    };
    const ExactScalar a = coef(1, 0), b = coef(0, 1);
    const int N = points / 2;
    MultiIndex root(static_cast<std::size_t>(points), 0);
    for (int i = 0; i < N; ++i) root[static_cast<std::size_t>(i)] = 1;
    std::vector<TensorVector> zero_targets;
    for (const auto &t : targets) zero_targets.push_back(TensorVector(t.dims()));
    auto part = propagate(points, targets, root, ExactScalar(), a, b);
    auto hom = propagate(points, zero_targets, root, ExactScalar(1), a, b);
    if (!part || !hom) throw std::logic_error("build_v_pp: projection conditions are inconsistent for " + alpha.str());
    // Fix the free multiple of the homogeneous solution with E v = 0.
    TensorVector ep = act_E(*part), eh = act_E(*hom);
    if (eh.is_zero()) throw std::logic_error("build_v_pp: homogeneous solution is highest weight");
    const auto &[idx, c] = *eh.coeffs().begin();
    ExactScalar lambda = -ep.coeff(idx) / c;
    TensorVector v = *part + lambda * *hom;
    if (!act_E(v).is_zero()) throw std::logic_error("build_v_pp: no highest-weight solution for " + alpha.str());
    for (int j = 1; j < points; ++j)
        if (drop_trivial(reduce_pair(v, j, 1)) != targets[static_cast<std::size_t>(j - 1)])
            throw std::logic_error("build_v_pp: projection condition fails for " + alpha.str());
    pp_memo().put(alpha, v);
    return v;
}

TensorVector rainbow_vector(int N) {
    if (N < 0) throw std::invalid_argument("rainbow_vector requires N >= 0");
    if (N == 0) return TensorVector::scalar(ExactScalar(1));
    ExactScalar pre = qint(2).pow(N) / ((qpow(-2) - ExactScalar(1)).pow(N) * qfact(N + 1));
    TensorVector v(std::vector<int>(static_cast<std::size_t>(2 * N), 2));
    for (int l = 0; l <= N; ++l) {
        ExactScalar c = pre * qpow(l * (N - l - 1));
        if (l % 2) c = -c;
        TensorVector upper = theta(l, N), lower = theta(N - l, N);
        for (const auto &[il, cl] : lower.coeffs())
            for (const auto &[iu, cu] : upper.coeffs()) {
                MultiIndex idx = il;
                idx.insert(idx.end(), iu.begin(), iu.end());
                v.add(idx, c * cl * cu);
            }
    }
    return v;
}

TensorVector build_v_omega(const LinkPattern &omega) {
    if (!omega.valid()) throw std::invalid_argument("build_v_omega: invalid link pattern " + omega.str());
    if (auto hit = omega_memo().get(omega)) return *hit;
    const int s = omega.s();
    TensorVector v = build_v_pp(open_up(omega));
    v = r_plus(project_blocks(v, omega.valences(), s), s);
    omega_memo().put(omega, v);
    return v;
}

TensorVector build_v_omega_minus(const LinkPattern &omega) {
    if (!omega.valid()) throw std::invalid_argument("build_v_omega_minus: invalid link pattern " + omega.str());
    const int s = omega.s();
    LinkPattern alpha = open_up(omega);
    for (int i = 0; i < s; ++i) alpha = cyclic_S(alpha);
    std::vector<int> sizes{s};
    sizes.insert(sizes.end(), omega.valences().begin(), omega.valences().end());
    return r_minus(project_block_sizes(build_v_pp(alpha), sizes), s);
}

TensorVector shuffle_vector(const std::vector<int> &lambda) {
    int s = 0;
    std::vector<int> dims;
    for (int r : lambda) {
        if (r < 1) throw std::invalid_argument("partition parts must be positive");
        s += r;
        dims.push_back(r + 1);
    }
    ExactScalar c = qint(2).pow(s) / ((qpow(1) - qpow(-1)).pow(s) * qfact(s + 1));
    return TensorVector::basis(dims, MultiIndex(dims.size(), 0), c);
}

ExactScalar constant_C(int m, int s1, int s2) {
    if (m < 0 || m > std::min(s1, s2)) throw std::invalid_argument("constant_C requires 0 <= m <= min(s1, s2)");
    return qfact(s1 - m) * qfact(s2 - m) * qfact(s1 + s2 - m + 1) /
           (qint(2).pow(m) * qfact(s1) * qfact(s2) * qfact(s1 + s2 - 2 * m + 1));
}

ExactScalar constant_C_binomial(int m, int s1, int s2) {
    if (m < 0 || m > std::min(s1, s2)) throw std::invalid_argument("constant_C requires 0 <= m <= min(s1, s2)");
    return qbin(s1 + s2 - m + 1, m) / (qint(2).pow(m) * qfact(m) * qbin(s1, m) * qbin(s2, m));
}

CheckResult verify_projection(const LinkPattern &omega, int j, int m) {
    return verify_projection(omega, j, m, build_v_omega(omega));
}

CheckResult verify_projection(const LinkPattern &omega, int j, int m, const TensorVector &v) {
    CheckResult r{omega.str(), "projection j=" + std::to_string(j) + " m=" + std::to_string(m), false, {}, {}};
    if (j < 1 || j >= omega.p() || m < 1 || m > std::min(omega.valence(j), omega.valence(j + 1))) {
        r.detail = "parameters out of range";
        return r;
    }
    TensorVector lhs = project_general(v, j, m);
    TensorVector rhs(lhs.dims());
    const int links = omega.links_between(j, j + 1);
    if (links >= m) {
        LinkPattern hat = remove_links(omega, j, m);
        rhs = build_v_omega(hat);
        // With links left over between j and j+1 only the top component of the pair survives.
        if (links > m) rhs = project_pair(rhs, j, hat.valence(j) + hat.valence(j + 1) + 1);
        rhs *= constant_C(m, omega.valence(j), omega.valence(j + 1)).inverse();
    }
    if (lhs.dims() != rhs.dims()) {
        r.detail = "shape mismatch";
        return r;
    }
    r.pass = lhs == rhs;
    if (!r.pass) r.residual = lhs - rhs;
    return r;
}

CheckResult verify_cyclic(const LinkPattern &omega) {
    CheckResult r{omega.str(), "cyclic", false, {}, {}};
    if (omega.s() != 0 || omega.p() == 0) {
        r.detail = "requires a nonempty pattern without defects";
        return r;
    }
    TensorVector lhs = build_v_omega(cyclic_S(omega));
    TensorVector rhs = smap(build_v_omega(omega));
    rhs *= minus_q_pow(omega.valence(omega.p()));
    r.pass = lhs == rhs;
    if (!r.pass && lhs.dims() == rhs.dims()) r.residual = lhs - rhs;
    return r;
}

CheckResult verify_full_cycle(const LinkPattern &omega) {
    CheckResult r{omega.str(), "full-cycle", false, {}, {}};
    if (omega.s() != 0 || omega.p() == 0) {
        r.detail = "requires a nonempty pattern without defects";
        return r;
    }
    TensorVector v = build_v_omega(omega), w = v;
    for (int i = 0; i < omega.p(); ++i) w = smap(w);
    v *= minus_q_pow(-omega.n());
    r.pass = v == w;
    if (!r.pass && v.dims() == w.dims()) r.residual = w - v;
    return r;
}

CheckResult verify_highest_weight(const LinkPattern &omega) {
    CheckResult r{omega.str(), "highest-weight", false, {}, {}};
    TensorVector v = build_v_omega(omega);
    TensorVector ev = act_E(v);
    TensorVector kv = act_K(v) - qpow(omega.s()) * v;
    r.pass = !v.is_zero() && ev.is_zero() && kv.is_zero();
    if (!ev.is_zero()) r.residual = ev;
    else if (!kv.is_zero()) r.residual = kv;
    if (v.is_zero()) r.detail = "vector is zero";
    return r;
}

std::vector<DualFunctional> dual_functionals(const LinkPattern &omega) {
    std::vector<DualFunctional> out;
    for (auto &ord : allowable_orderings(omega)) out.push_back({omega, std::move(ord)});
    return out;
}

ExactScalar dual_eval(const DualFunctional &psi, const TensorVector &v) {
    LinkPattern cur = psi.source;
    TensorVector w = v;
    for (const auto &st : psi.recipe) {
        cur = remove_links(cur, st.j, st.m); // throws when the recipe does not fit the pattern
        w = project_general(w, st.j, st.m);
    }
    if (cur.num_links() != 0) throw std::invalid_argument("dual_eval: recipe leaves links behind");
    TensorVector ref = shuffle_vector(defect_partition(cur));
    if (w.dims() != ref.dims()) throw std::invalid_argument("dual_eval: recipe and vector shapes disagree");
    if (w.is_zero()) return ExactScalar();
    ExactScalar c;
    if (!w.proportional_to(ref, c)) throw std::domain_error("dual_eval: image is not in the one-dimensional space");
    return c;
}

ExactScalar dual_expected_diagonal(const DualFunctional &psi) {
    LinkPattern cur = psi.source;
    ExactScalar prod(1);
    for (const auto &st : psi.recipe) {
        prod /= constant_C(st.m, cur.valence(st.j), cur.valence(st.j + 1));
        cur = remove_links(cur, st.j, st.m);
    }
    return prod;
}

FactorizeResult factorize(const LinkPattern &omega, int j, int k) {
    if (j < 1 || k > omega.p() || j > k) throw std::invalid_argument("factorize: block out of range");
    FactorizeResult res;
    res.tau = sub_pattern(omega, j, k);
    res.quotient = quotient(omega, j, k);
    const int r = res.tau.s();
    const TensorVector v = build_v_omega(omega);
    const auto &dims = v.dims();
    const auto a = static_cast<std::ptrdiff_t>(j - 1), b = static_cast<std::ptrdiff_t>(k);
    std::vector<int> bdims(dims.begin() + a, dims.begin() + b);
    std::vector<int> bvals(omega.valences().begin() + a, omega.valences().begin() + b);

    // Block components grouped by block weight, then by outside index.
    std::map<int, std::map<MultiIndex, TensorVector>> parts;
    for (const auto &[idx, c] : v.coeffs()) {
        MultiIndex outside(idx.begin(), idx.begin() + a);
        outside.insert(outside.end(), idx.begin() + b, idx.end());
        MultiIndex inside(idx.begin() + a, idx.begin() + b);
        auto &slot = parts[weight(bdims, inside)];
        auto it = slot.try_emplace(outside, TensorVector(bdims)).first;
        it->second.add(inside, c);
    }

    // The vectors F^m frak v_upsilon with t - 2m = w span the weight-w part of the block.
    std::vector<int> qdims(dims.begin(), dims.begin() + a);
    qdims.push_back(r + 1);
    qdims.insert(qdims.end(), dims.begin() + b, dims.end());
    TensorVector coeffs(qdims), tau_part(dims);
    res.pure = true;
    for (const auto &[w, slot] : parts) {
        std::vector<TensorVector> cols;
        std::size_t tau_col = SIZE_MAX;
        for (int t : admissible_defects(bvals)) {
            if (t < std::abs(w) || (t - w) % 2 != 0) continue;
            for (const auto &u : enumerate(bvals, t)) {
                if (u == res.tau) tau_col = cols.size();
                cols.push_back(act_F_pow(build_v_omega(u), (t - w) / 2));
            }
        }
        std::map<MultiIndex, std::size_t> rowid;
        for (const auto &col : cols)
            for (const auto &[idx, x] : col.coeffs()) rowid.try_emplace(idx, rowid.size());
        for (const auto &[outside, blk] : slot)
            for (const auto &[idx, x] : blk.coeffs()) rowid.try_emplace(idx, rowid.size());
        Matrix<ExactScalar> mat(rowid.size(), std::vector<ExactScalar>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto &[idx, x] : cols[c].coeffs()) mat[rowid.at(idx)][c] = x;
        for (const auto &[outside, blk] : slot) {
            std::vector<ExactScalar> rhs(rowid.size());
            for (const auto &[idx, x] : blk.coeffs()) rhs[rowid.at(idx)] = x;
            auto sol = solve_unique(mat, rhs, cols.size());
            if (!sol) {
                res.detail = "block component outside the span of the block basis";
                return res;
            }
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (c != tau_col && !(*sol)[c].is_zero()) res.pure = false;
            if (tau_col == SIZE_MAX || (*sol)[tau_col].is_zero()) continue;
            const ExactScalar &ct = (*sol)[tau_col];
            MultiIndex idx(outside.begin(), outside.begin() + a);
            idx.push_back((r - w) / 2);
            idx.insert(idx.end(), outside.begin() + a, outside.end());
            coeffs.add(idx, ct);
        }
    }
    res.coefficients = drop_trivial(coeffs);
    TensorVector target = build_v_omega(res.quotient);
    if (!res.coefficients.proportional_to(target, res.scale) || res.scale.is_zero()) {
        res.detail = "tau-coefficients are not proportional to the quotient vector";
        return res;
    }
    res.ok = true;
    return res;
}

std::size_t uniqueness_probe(const std::vector<int> &valences, int s) {
    auto basis = hw_space(valences, s);
    if (basis.empty()) return 0;
    // rows: one per (j, m, output coordinate); columns: basis vectors
    std::map<std::tuple<int, int, MultiIndex>, std::vector<ExactScalar>> rows;
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (int j = 1; j < static_cast<int>(valences.size()); ++j) {
            int top = std::min(valences[static_cast<std::size_t>(j - 1)], valences[static_cast<std::size_t>(j)]);
            for (int m = 1; m <= top; ++m) {
                const TensorVector img = project_general(basis[c], j, m);
                for (const auto &[idx, x] : img.coeffs()) {
                    auto &row = rows[{j, m, idx}];
                    if (row.empty()) row.resize(basis.size());
                    row[c] = x;
                }
            }
        }
    Matrix<ExactScalar> mat;
    for (auto &[key, row] : rows) mat.push_back(std::move(row));
    return basis.size() - rank(mat, basis.size());
}

std::size_t basis_rank(const std::vector<int> &valences, int s) {
    auto universe = enumerate(valences, s);
    std::map<MultiIndex, std::size_t> col;
    std::vector<TensorVector> vecs;
    for (const auto &w : universe) {
        vecs.push_back(build_v_omega(w));
        for (const auto &[idx, c] : vecs.back().coeffs()) col.try_emplace(idx, col.size());
    }
    Matrix<ExactScalar> mat(vecs.size(), std::vector<ExactScalar>(col.size()));
    for (std::size_t r = 0; r < vecs.size(); ++r)
        for (const auto &[idx, c] : vecs[r].coeffs()) mat[r][col.at(idx)] = c;
    return rank(mat, col.size());
}

} // namespace qlp
