#include "qlp/uqsl2.hpp"

#include "qlp/linalg.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qlp {

TensorVector::TensorVector(std::vector<int> dims) : dims_(std::move(dims)) {
    for (int d : dims_)
        if (d < 1) throw std::invalid_argument("tensor factor dimension must be positive");
}

TensorVector TensorVector::scalar(const ExactScalar &c) {
    TensorVector v;
    v.add({}, c);
    return v;
}

TensorVector TensorVector::basis(std::vector<int> dims, const MultiIndex &idx, const ExactScalar &c) {
    TensorVector v(std::move(dims));
    v.add(idx, c);
    return v;
}

void TensorVector::check_index(const MultiIndex &idx) const {
    if (idx.size() != dims_.size()) throw std::invalid_argument("multi-index length does not match shape");
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (idx[i] < 0 || idx[i] >= dims_[i]) throw std::invalid_argument("multi-index out of range");
}

ExactScalar TensorVector::coeff(const MultiIndex &idx) const {
    auto it = c_.find(idx);
    return it == c_.end() ? ExactScalar() : it->second;
}

void TensorVector::add(const MultiIndex &idx, const ExactScalar &c) {
    if (c.is_zero()) return;
    check_index(idx);
    auto [it, fresh] = c_.try_emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void TensorVector::set(const MultiIndex &idx, const ExactScalar &c) {
    check_index(idx);
    if (c.is_zero())
        c_.erase(idx);
    else
        c_[idx] = c;
}

TensorVector &TensorVector::operator+=(const TensorVector &o) {
    if (dims_ != o.dims_) throw std::invalid_argument("adding tensor vectors of different shapes");
    for (const auto &[idx, c] : o.c_) add(idx, c);
    return *this;
}

TensorVector &TensorVector::operator-=(const TensorVector &o) {
    if (dims_ != o.dims_) throw std::invalid_argument("subtracting tensor vectors of different shapes");
    for (const auto &[idx, c] : o.c_) add(idx, -c);
    return *this;
}

TensorVector &TensorVector::operator*=(const ExactScalar &c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto &[idx, x] : c_) x *= c;
    return *this;
}

bool TensorVector::proportional_to(const TensorVector &w, ExactScalar &c) const {
    if (dims_ != w.dims_ || w.is_zero()) return false;
    const auto &[idx, wc] = *w.c_.begin();
    c = coeff(idx) / wc;
    TensorVector cw = w;
    cw *= c;
    return cw == *this;
}

std::string TensorVector::pretty() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[idx, c] : c_) {
        os << (first ? "" : " + ") << "(" << c.pretty() << ")*e[";
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        os << "]";
        first = false;
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const TensorVector &v) { return os << v.pretty(); }

int weight(const std::vector<int> &dims, const MultiIndex &idx) {
    int w = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) w += dims[i] - 1 - 2 * idx[i];
    return w;
}

// Coproduct legs, in point labels: E acts as sum_a E_a prod_{b<a} K_b and F as
// sum_a F_a prod_{b>a} K_b^{-1}; these follow from Delta(E) = E(x)K + 1(x)E and
// Delta(F) = F(x)1 + K^{-1}(x)F with point 1 the rightmost tensor factor.
TensorVector act_E(const TensorVector &v) {
    TensorVector out(v.dims());
    const auto &dims = v.dims();
    for (const auto &[idx, c] : v.coeffs()) {
        int below = 0; // sum_{b<a} weight of factor b
        for (std::size_t a = 0; a < idx.size(); ++a) {
            int l = idx[a], s = dims[a] - 1;
            if (l > 0) {
                MultiIndex j = idx;
                --j[a];
                out.add(j, c * qint(l) * qint(s - l + 1) * qpow(below));
            }
            below += s - 2 * l;
        }
    }
    return out;
}

TensorVector act_F(const TensorVector &v) {
    TensorVector out(v.dims());
    const auto &dims = v.dims();
    for (const auto &[idx, c] : v.coeffs()) {
        int above = 0; // sum_{b>a} weight of factor b
        for (std::size_t a = idx.size(); a-- > 0;) {
            int l = idx[a], s = dims[a] - 1;
            if (l < s) {
                MultiIndex j = idx;
                ++j[a];
                out.add(j, c * qpow(-above));
            }
            above += s - 2 * l;
        }
    }
    return out;
}

TensorVector act_K(const TensorVector &v, int power) {
    TensorVector out(v.dims());
    for (const auto &[idx, c] : v.coeffs()) out.add(idx, c * qpow(power * weight(v.dims(), idx)));
    return out;
}

TensorVector act_F_pow(const TensorVector &v, int k) {
    TensorVector w = v;
    for (int i = 0; i < k && !w.is_zero(); ++i) w = act_F(w);
    return w;
}

namespace {

std::vector<MultiIndex> indices_of_weight(const std::vector<int> &dims, int w) {
    std::vector<MultiIndex> out;
    MultiIndex cur(dims.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == dims.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int l = 0; l < dims[i]; ++l) {
            cur[i] = l;
            rec(i + 1, left - (dims[i] - 1 - 2 * l));
        }
    };
    rec(0, w);
    return out;
}

} // namespace

std::vector<TensorVector> hw_space(const std::vector<int> &valences, int s) {
    std::vector<int> dims;
    int n = 0;
    for (int v : valences) {
        if (v < 0) throw std::invalid_argument("valences must be nonnegative");
        dims.push_back(v + 1);
        n += v;
    }
    if (s < 0 || s > n || (n - s) % 2 != 0) return {};
    auto cols = indices_of_weight(dims, s);
    auto rows = indices_of_weight(dims, s + 2);
    std::map<MultiIndex, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    Matrix<ExactScalar> m(rows.size(), std::vector<ExactScalar>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        TensorVector img = act_E(TensorVector::basis(dims, cols[c]));
        for (const auto &[idx, x] : img.coeffs()) m[row_of.at(idx)][c] = x;
    }
    std::vector<TensorVector> out;
    for (const auto &x : nullspace(m, cols.size())) {
        TensorVector v(dims);
        for (std::size_t c = 0; c < cols.size(); ++c) v.add(cols[c], x[c]);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> cg_range(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("dimensions must be positive");
    std::vector<int> r;
    for (int m = 0; m <= std::min(d1, d2) - 1; ++m) r.push_back(d1 + d2 - 1 - 2 * m);
    return r;
}

TensorVector cg_hwv(int d, int d1, int d2) {
    int s1 = d1 - 1, s2 = d2 - 1;
    if (d < 1 || (d1 + d2 - 1 - d) % 2 != 0) throw std::invalid_argument("dimension outside the Clebsch-Gordan range");
    int m = (d1 + d2 - 1 - d) / 2;
    if (m < 0 || m > std::min(s1, s2)) throw std::invalid_argument("dimension outside the Clebsch-Gordan range");
    ExactScalar pre = (qpow(1) - qpow(-1)).pow(-m);
    TensorVector v({d1, d2});
    for (int l1 = 0; l1 <= m; ++l1) {
        int l2 = m - l1;
        ExactScalar c = qfact(s1 - l1) * qfact(s2 - l2) / (qfact(l1) * qfact(s1) * qfact(l2) * qfact(s2));
        c *= qpow(l1 * (s1 - l1 + 1)) * pre;
        if (l1 % 2) c = -c;
        v.add({l1, l2}, c);
    }
    return v;
}

namespace {

std::shared_ptr<const CGData> build_cg(int d1, int d2) {
    auto data = std::make_shared<CGData>();
    data->d1 = d1;
    data->d2 = d2;
    for (int d : cg_range(d1, d2)) {
        std::vector<TensorVector> fam{cg_hwv(d, d1, d2)};
        for (int l = 1; l < d; ++l) fam.push_back(act_F(fam.back()));
        data->tau[d] = std::move(fam);
    }
    int s1 = d1 - 1, s2 = d2 - 1;
    for (int L = 0; L <= s1 + s2; ++L) {
        std::vector<std::pair<int, int>> std_idx;
        for (int l1 = 0; l1 <= s1; ++l1)
            if (L - l1 >= 0 && L - l1 <= s2) std_idx.push_back({l1, L - l1});
        std::vector<std::pair<int, int>> taus; // (d, l)
        for (int d : cg_range(d1, d2)) {
            int m = (d1 + d2 - 1 - d) / 2, l = L - m;
            if (l >= 0 && l < d) taus.push_back({d, l});
        }
        const std::size_t k = std_idx.size();
        if (taus.size() != k) throw std::logic_error("Clebsch-Gordan weight space mismatch");
        // Columns of a: tau vectors in standard coordinates.  Invert [a | I].
        Matrix<ExactScalar> aug(k, std::vector<ExactScalar>(2 * k));
        for (std::size_t c = 0; c < k; ++c) {
            const auto &t = data->tau[taus[c].first][static_cast<std::size_t>(taus[c].second)];
            for (std::size_t r = 0; r < k; ++r) aug[r][c] = t.coeff({std_idx[r].first, std_idx[r].second});
        }
        for (std::size_t r = 0; r < k; ++r) aug[r][k + r] = ExactScalar(1);
        Echelon<ExactScalar> e = row_reduce(aug, 2 * k);
        if (e.pivots.size() != k || e.pivots.back() != k - 1) throw std::logic_error("Clebsch-Gordan basis is singular");
        for (std::size_t r = 0; r < k; ++r) {
            auto &terms = data->dual[std_idx[r]];
            for (std::size_t c = 0; c < k; ++c) {
                // row c of the inverse gives the tau_c coordinate
                const ExactScalar &x = e.rows[c][k + r];
                if (!x.is_zero()) terms.push_back({taus[e.pivots[c]].first, taus[e.pivots[c]].second, x});
            }
        }
    }
    return data;
}

} // namespace

const CGData &cg_basis(int d1, int d2) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const CGData>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find({d1, d2});
        if (it != cache.end()) return *it->second;
    }
    auto data = build_cg(d1, d2);
    std::lock_guard<std::mutex> lk(mu);
    auto [it, fresh] = cache.try_emplace({d1, d2}, data);
    return *it->second;
}

TensorVector reduce_pair(const TensorVector &v, int j, int d) {
    const auto &dims = v.dims();
    if (j < 1 || j >= v.p()) throw std::invalid_argument("reduce_pair: index out of range");
    const std::size_t a = static_cast<std::size_t>(j - 1);
    int d1 = dims[a], d2 = dims[a + 1];
    auto range = cg_range(d1, d2);
    if (std::find(range.begin(), range.end(), d) == range.end())
        throw std::invalid_argument("reduce_pair: dimension outside the Clebsch-Gordan range");
    const CGData &cg = cg_basis(d1, d2);
    std::vector<int> nd(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(a));
    nd.push_back(d);
    nd.insert(nd.end(), dims.begin() + static_cast<std::ptrdiff_t>(a) + 2, dims.end());
    TensorVector out(nd);
    for (const auto &[idx, c] : v.coeffs()) {
        const auto &terms = cg.dual.at({idx[a], idx[a + 1]});
        for (const auto &t : terms) {
            if (t.d != d) continue;
            MultiIndex ni(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(a));
            ni.push_back(t.l);
            ni.insert(ni.end(), idx.begin() + static_cast<std::ptrdiff_t>(a) + 2, idx.end());
            out.add(ni, c * t.c);
        }
    }
    return out;
}

TensorVector embed_pair(const TensorVector &v, int j, int d1, int d2) {
    const auto &dims = v.dims();
    if (j < 1 || j > v.p()) throw std::invalid_argument("embed_pair: index out of range");
    const std::size_t a = static_cast<std::size_t>(j - 1);
    int d = dims[a];
    const CGData &cg = cg_basis(d1, d2);
    auto it = cg.tau.find(d);
    if (it == cg.tau.end()) throw std::invalid_argument("embed_pair: dimension outside the Clebsch-Gordan range");
    std::vector<int> nd(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(a));
    nd.push_back(d1);
    nd.push_back(d2);
    nd.insert(nd.end(), dims.begin() + static_cast<std::ptrdiff_t>(a) + 1, dims.end());
    TensorVector out(nd);
    for (const auto &[idx, c] : v.coeffs()) {
        for (const auto &[pair, x] : it->second[static_cast<std::size_t>(idx[a])].coeffs()) {
            MultiIndex ni(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(a));
            ni.push_back(pair[0]);
            ni.push_back(pair[1]);
            ni.insert(ni.end(), idx.begin() + static_cast<std::ptrdiff_t>(a) + 1, idx.end());
            out.add(ni, c * x);
        }
    }
    return out;
}

TensorVector project_pair(const TensorVector &v, int j, int d) {
    const auto &dims = v.dims();
    if (j < 1 || j >= v.p()) throw std::invalid_argument("project_pair: index out of range");
    int d1 = dims[static_cast<std::size_t>(j - 1)], d2 = dims[static_cast<std::size_t>(j)];
    return embed_pair(reduce_pair(v, j, d), j, d1, d2);
}

TensorVector drop_trivial(const TensorVector &v) {
    std::vector<std::size_t> keep;
    std::vector<int> nd;
    for (std::size_t i = 0; i < v.dims().size(); ++i)
        if (v.dims()[i] != 1) {
            keep.push_back(i);
            nd.push_back(v.dims()[i]);
        }
    if (keep.size() == v.dims().size()) return v;
    TensorVector out(nd);
    for (const auto &[idx, c] : v.coeffs()) {
        MultiIndex ni;
        for (auto i : keep) ni.push_back(idx[i]);
        out.add(ni, c);
    }
    return out;
}

TensorVector project_general(const TensorVector &v, int j, int m) {
    if (j < 1 || j >= v.p()) throw std::invalid_argument("project_general: index out of range");
    int d1 = v.dims()[static_cast<std::size_t>(j - 1)], d2 = v.dims()[static_cast<std::size_t>(j)];
    if (m < 1 || m > std::min(d1, d2) - 1) throw std::invalid_argument("project_general: m out of range");
    int delta = d1 + d2 - 1 - 2 * m;
    return drop_trivial(embed_pair(reduce_pair(v, j, delta), j, d1 - m, d2 - m));
}

namespace {

// Expansion of theta_l^{(s)}: list of (positions of e_1 as a point-index mask, coefficient).
const std::vector<std::pair<MultiIndex, ExactScalar>> &theta_terms(int l, int s) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::pair<MultiIndex, ExactScalar>>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({l, s});
    if (it != cache.end()) return it->second;
    std::vector<std::pair<MultiIndex, ExactScalar>> terms;
    ExactScalar pre = qpow(l * (l - 1) / 2) * qfact(l);
    // r counts tensor positions from the left: position r is point s - r + 1.
    std::vector<int> pos;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pos.size()) == l) {
            MultiIndex idx(static_cast<std::size_t>(s), 0);
            int e = 0;
            for (int r : pos) {
                idx[static_cast<std::size_t>(s - r)] = 1;
                e += 1 - r;
            }
            terms.push_back({idx, pre * qpow(e)});
            return;
        }
        for (int r = start; r <= s; ++r) {
            pos.push_back(r);
            rec(r + 1);
            pos.pop_back();
        }
    };
    rec(1);
    return cache.emplace(std::make_pair(l, s), std::move(terms)).first->second;
}

} // namespace

TensorVector theta(int l, int s) {
    if (s < 0 || l < 0 || l > s) throw std::invalid_argument("theta requires 0 <= l <= s");
    TensorVector v(std::vector<int>(static_cast<std::size_t>(s), 2));
    for (const auto &[idx, c] : theta_terms(l, s)) v.add(idx, c);
    return v;
}

TensorVector project_block_sizes(const TensorVector &v, const std::vector<int> &sizes) {
    int total = 0;
    for (int r : sizes) {
        if (r < 0) throw std::invalid_argument("project_blocks: negative block size");
        total += r;
    }
    if (total != v.p()) throw std::invalid_argument("project_blocks: block sizes do not match the number of factors");
    for (int d : v.dims())
        if (d != 2) throw std::invalid_argument("project_blocks expects a vector in M_2^{(x)n}");
    std::vector<int> start(sizes.size());
    for (std::size_t b = 0, acc = 1; b < sizes.size(); acc += static_cast<std::size_t>(sizes[b]), ++b) start[b] = static_cast<int>(acc);
    // Fuse the highest block first so the labels of lower blocks stay put.
    TensorVector w = v;
    for (std::size_t b = sizes.size(); b-- > 0;) {
        int a = start[b];
        for (int t = 1; t < sizes[b]; ++t) {
            int d = w.dims()[static_cast<std::size_t>(a - 1)];
            w = reduce_pair(w, a, d + 1);
        }
    }
    return w;
}

TensorVector project_blocks(const TensorVector &v, const std::vector<int> &valences, int s) {
    std::vector<int> sizes = valences;
    sizes.push_back(s);
    return project_block_sizes(v, sizes);
}

TensorVector embed_blocks(const TensorVector &v) {
    std::vector<int> nd;
    for (int d : v.dims()) nd.insert(nd.end(), static_cast<std::size_t>(d - 1), 2);
    TensorVector out(nd);
    for (const auto &[idx, c] : v.coeffs()) {
        std::vector<std::pair<MultiIndex, ExactScalar>> acc{{MultiIndex{}, c}};
        for (std::size_t i = 0; i < idx.size(); ++i) {
            int r = v.dims()[i] - 1;
            if (r == 0) continue;
            const auto &terms = theta_terms(idx[i], r);
            std::vector<std::pair<MultiIndex, ExactScalar>> next;
            next.reserve(acc.size() * terms.size());
            for (const auto &[pre, x] : acc)
                for (const auto &[blk, y] : terms) {
                    MultiIndex m = pre;
                    m.insert(m.end(), blk.begin(), blk.end());
                    next.push_back({std::move(m), x * y});
                }
            acc = std::move(next);
        }
        for (const auto &[m, x] : acc) out.add(m, x);
    }
    return out;
}

namespace {

// Prepend (front = true) or append a factor of dimension d carrying e_l.
TensorVector attach(const TensorVector &v, int d, int l, bool front) {
    std::vector<int> nd = v.dims();
    if (front)
        nd.insert(nd.begin(), d);
    else
        nd.push_back(d);
    TensorVector out(nd);
    for (const auto &[idx, c] : v.coeffs()) {
        MultiIndex ni = idx;
        if (front)
            ni.insert(ni.begin(), l);
        else
            ni.push_back(l);
        out.add(ni, c);
    }
    return out;
}

// Component of v with the first/last factor equal to l, as a vector on the other factors.
TensorVector slice(const TensorVector &v, int l, bool front) {
    std::vector<int> nd = v.dims();
    if (front)
        nd.erase(nd.begin());
    else
        nd.pop_back();
    TensorVector out(nd);
    for (const auto &[idx, c] : v.coeffs()) {
        if ((front ? idx.front() : idx.back()) != l) continue;
        MultiIndex ni = idx;
        if (front)
            ni.erase(ni.begin());
        else
            ni.pop_back();
        out.add(ni, c);
    }
    return out;
}

ExactScalar sign_qpow(int sign_exp, int e) {
    ExactScalar x = qpow(e);
    return sign_exp % 2 ? -x : x;
}

} // namespace

TensorVector r_plus_inverse(const TensorVector &tau, int s) {
    if (s == 0) return tau;
    std::vector<int> nd = tau.dims();
    nd.push_back(s + 1);
    TensorVector out(nd);
    TensorVector f = tau; // F^{s-l} tau for l = s, s-1, ...
    for (int l = s; l >= 0; --l) {
        TensorVector term = attach(f, s + 1, l, false);
        term *= sign_qpow(s - l, (l + 1) * (s - l));
        out += term;
        f = act_F(f);
    }
    return out;
}

TensorVector r_plus(const TensorVector &v, int s) {
    if (s == 0) return v;
    if (v.p() == 0 || v.dims().back() != s + 1) throw std::invalid_argument("r_plus: last factor must have dimension s+1");
    TensorVector tau = slice(v, s, false);
    if (r_plus_inverse(tau, s) != v) throw std::domain_error("r_plus: vector is not in the domain of R_+");
    return tau;
}

TensorVector r_minus_inverse(const TensorVector &tau, int s) {
    if (s == 0) return tau;
    std::vector<int> nd = tau.dims();
    nd.insert(nd.begin(), s + 1);
    TensorVector out(nd);
    TensorVector f = tau;
    for (int l = s; l >= 0; --l) {
        TensorVector term = attach(f, s + 1, l, true);
        term *= sign_qpow(s - l, (l - 1) * (s - l));
        out += term;
        f = act_F(f);
    }
    return out;
}

TensorVector r_minus(const TensorVector &v, int s) {
    if (s == 0) return v;
    if (v.p() == 0 || v.dims().front() != s + 1) throw std::invalid_argument("r_minus: first factor must have dimension s+1");
    TensorVector tau = slice(v, s, true);
    if (r_minus_inverse(tau, s) != v) throw std::domain_error("r_minus: vector is not in the domain of R_-");
    return tau;
}

TensorVector smap(const TensorVector &v) {
    if (v.p() == 0) return v;
    int s = v.dims().back() - 1;
    return r_minus_inverse(r_plus(v, s), s);
}

} // namespace qlp
