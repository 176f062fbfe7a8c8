#include "qlp/linkpat.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qlp {

LinkPattern::LinkPattern(std::vector<int> valences, const std::vector<Link> &links, std::map<int, int> defects)
    : valences_(std::move(valences)) {
    for (const auto &l : links)
        if (l.mult != 0) links_[{l.a, l.b}] += l.mult;
    for (const auto &[i, c] : defects)
        if (c != 0) defects_[i] = c;
}

std::vector<Link> LinkPattern::links() const {
    std::vector<Link> out;
    out.reserve(links_.size());
    for (const auto &[ab, m] : links_) out.push_back({ab.first, ab.second, m});
    return out;
}

int LinkPattern::links_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = links_.find({a, b});
    return it == links_.end() ? 0 : it->second;
}

int LinkPattern::defects_at(int i) const {
    auto it = defects_.find(i);
    return it == defects_.end() ? 0 : it->second;
}

int LinkPattern::n() const { return std::accumulate(valences_.begin(), valences_.end(), 0); }

int LinkPattern::num_links() const {
    int l = 0;
    for (const auto &[ab, m] : links_) l += m;
    return l;
}

int LinkPattern::s() const { return n() - 2 * num_links(); }

LinkPattern::Reason LinkPattern::check() const {
    const int P = p();
    for (int v : valences_)
        if (v < 1) return Reason::malformed;
    std::vector<int> used(static_cast<std::size_t>(P + 1), 0);
    for (const auto &[ab, m] : links_) {
        auto [a, b] = ab;
        if (a < 1 || b > P || a >= b || m < 1) return Reason::malformed;
        used[static_cast<std::size_t>(a)] += m;
        used[static_cast<std::size_t>(b)] += m;
    }
    for (const auto &[i, c] : defects_) {
        if (i < 1 || i > P || c < 1) return Reason::malformed;
        used[static_cast<std::size_t>(i)] += c;
    }
    for (int i = 1; i <= P; ++i)
        if (used[static_cast<std::size_t>(i)] != valence(i)) return Reason::valence;
    for (const auto &[ab, m1] : links_)
        for (const auto &[cd, m2] : links_) {
            auto [a, b] = ab;
            auto [c, d] = cd;
            if (a < c && c < b && b < d) return Reason::crossing;
        }
    for (const auto &[ab, m] : links_)
        for (const auto &[c, cnt] : defects_)
            if (ab.first < c && c < ab.second) return Reason::trapped_defect;
    return Reason::ok;
}

const char *reason_name(LinkPattern::Reason r) {
    switch (r) {
    case LinkPattern::Reason::ok: return "ok";
    case LinkPattern::Reason::malformed: return "malformed";
    case LinkPattern::Reason::valence: return "valence mismatch";
    case LinkPattern::Reason::crossing: return "crossing links";
    case LinkPattern::Reason::trapped_defect: return "defect inside a link";
    }
    return "?";
}

std::string LinkPattern::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < valences_.size(); ++i) os << (i ? "," : "") << valences_[i];
    os << ")[";
    bool first = true;
    for (const auto &[ab, m] : links_) {
        os << (first ? "" : " ") << ab.first << "-" << ab.second;
        if (m > 1) os << "x" << m;
        first = false;
    }
    os << "]";
    if (!defects_.empty()) {
        os << "{";
        first = true;
        for (const auto &[i, c] : defects_) {
            os << (first ? "" : " ") << i << ":" << c;
            first = false;
        }
        os << "}";
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const LinkPattern &w) { return os << w.str(); }

bool LinkPattern::operator<(const LinkPattern &o) const {
    auto la = links(), lb = o.links();
    if (la != lb) return la < lb;
    if (defects_ != o.defects_) return defects_ < o.defects_;
    return valences_ < o.valences_;
}

namespace {

void check_universe(const std::vector<int> &valences, int s) {
    int n = std::accumulate(valences.begin(), valences.end(), 0);
    for (int v : valences)
        if (v < 1) throw std::invalid_argument("valences must be positive");
    if (s < 0 || s > n || (n - s) % 2 != 0) throw std::invalid_argument("defect count incompatible with valences");
}

// Build a pattern from raw data, deleting points whose valence is zero.
LinkPattern compact(const std::vector<int> &valences, const std::map<std::pair<int, int>, int> &links,
                    const std::map<int, int> &defects, std::vector<int> *old_to_new = nullptr) {
    std::vector<int> label(valences.size() + 1, 0), vals;
    for (std::size_t i = 0; i < valences.size(); ++i)
        if (valences[i] > 0) {
            vals.push_back(valences[i]);
            label[i + 1] = static_cast<int>(vals.size());
        }
    std::vector<Link> ls;
    for (const auto &[ab, m] : links)
        if (m > 0) ls.push_back({label[static_cast<std::size_t>(ab.first)], label[static_cast<std::size_t>(ab.second)], m});
    std::map<int, int> ds;
    for (const auto &[i, c] : defects)
        if (c > 0) ds[label[static_cast<std::size_t>(i)]] += c;
    if (old_to_new) *old_to_new = label;
    return LinkPattern(vals, ls, ds);
}

} // namespace

std::vector<LinkPattern> enumerate(const std::vector<int> &valences, int s) {
    check_universe(valences, s);
    const int P = static_cast<int>(valences.size());
    const int n = std::accumulate(valences.begin(), valences.end(), 0);
    const int ell = (n - s) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= P; ++a)
        for (int b = a + 1; b <= P; ++b) pairs.push_back({a, b});
    std::vector<int> rem(valences);
    std::vector<Link> chosen;
    std::vector<LinkPattern> out;
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (left == 0 || k == pairs.size()) {
            if (left != 0) return;
            std::map<int, int> ds;
            for (int i = 1; i <= P; ++i)
                if (rem[static_cast<std::size_t>(i - 1)] > 0) ds[i] = rem[static_cast<std::size_t>(i - 1)];
            LinkPattern w(valences, chosen, ds);
            if (w.valid()) out.push_back(std::move(w));
            return;
        }
        auto [a, b] = pairs[k];
        int &ra = rem[static_cast<std::size_t>(a - 1)], &rb = rem[static_cast<std::size_t>(b - 1)];
        int top = std::min({ra, rb, left});
        rec(k + 1, left);
        for (int m = 1; m <= top; ++m) {
            ra -= m;
            rb -= m;
            chosen.push_back({a, b, m});
            rec(k + 1, left - m);
            chosen.pop_back();
            ra += m;
            rb += m;
        }
    };
    rec(0, ell);
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class count(const std::vector<int> &valences, int s) {
    check_universe(valences, s);
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, int>, mpz_class> memo;
    std::function<mpz_class(const std::vector<int> &, int)> rec = [&](const std::vector<int> &v, int t) -> mpz_class {
        if (t < 0) return 0;
        if (v.empty()) return t == 0 ? 1 : 0;
        if (v.size() == 1) return t == v[0] ? 1 : 0;
        {
            std::lock_guard<std::mutex> lk(mu);
            auto it = memo.find({v, t});
            if (it != memo.end()) return it->second;
        }
        std::vector<int> head(v.begin(), v.end() - 1);
        int sp = v.back();
        mpz_class total = 0;
        for (int k = std::max(0, sp - t); k <= sp; ++k) total += rec(head, t - sp + 2 * k);
        std::lock_guard<std::mutex> lk(mu);
        memo[{v, t}] = total;
        return total;
    };
    return rec(valences, s);
}

mpz_class count_pp(int N, int s) {
    if (N < 0 || s < 0) throw std::invalid_argument("count_pp requires N, s >= 0");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * N + s), static_cast<unsigned long>(N + s));
    return b * (s + 1) / (N + s + 1);
}

std::vector<std::vector<int>> valence_lists(int n, int max_part) {
    if (max_part <= 0) max_part = n;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int a = 1; a <= std::min(left, max_part); ++a) {
            cur.push_back(a);
            self(self, left - a);
            cur.pop_back();
        }
    };
    if (n > 0) rec(rec, n);
    return out;
}

std::vector<int> admissible_defects(const std::vector<int> &valences) {
    int n = std::accumulate(valences.begin(), valences.end(), 0);
    std::vector<int> out;
    for (int s = n % 2; s <= n; s += 2)
        if (count(valences, s) > 0) out.push_back(s);
    return out;
}

LinkPattern remove_links(const LinkPattern &w, int j, int m) {
    if (m < 1 || w.links_between(j, j + 1) < m)
        throw std::invalid_argument("remove_links: pattern has fewer than m links (j, j+1)");
    std::vector<int> vals = w.valences();
    vals[static_cast<std::size_t>(j - 1)] -= m;
    vals[static_cast<std::size_t>(j)] -= m;
    auto links = w.link_map();
    links[{j, j + 1}] -= m;
    return compact(vals, links, w.defects());
}

std::vector<int> defect_partition(const LinkPattern &w) {
    std::vector<int> parts;
    for (const auto &[i, c] : w.defects()) parts.push_back(c);
    return parts;
}

LinkPattern shuffle_pattern(const std::vector<int> &parts) {
    std::map<int, int> ds;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        ds[static_cast<int>(i + 1)] = parts[i];
    }
    return LinkPattern(parts, {}, ds);
}

LinkPattern rainbow(int N) {
    if (N < 0) throw std::invalid_argument("rainbow requires N >= 0");
    std::vector<Link> ls;
    for (int i = 1; i <= N; ++i) ls.push_back({i, 2 * N + 1 - i, 1});
    return LinkPattern(std::vector<int>(static_cast<std::size_t>(2 * N), 1), ls);
}

LinkPattern split_points(const LinkPattern &w) {
    const int P = w.p();
    // Planar order of the lines at each point: links to the left (nearest
    // first), then defects, then links to the right (farthest first).
    std::vector<int> offset(static_cast<std::size_t>(P + 2), 0);
    for (int i = 1; i <= P; ++i) offset[static_cast<std::size_t>(i + 1)] = offset[static_cast<std::size_t>(i)] + w.valence(i);
    // slot[(i, other)] = first sub-point label of the group of lines from i to other (other = 0 for defects)
    std::map<std::pair<int, int>, int> slot;
    for (int i = 1; i <= P; ++i) {
        int next = offset[static_cast<std::size_t>(i)] + 1;
        std::vector<std::pair<int, int>> left, right;
        for (const auto &[ab, m] : w.link_map()) {
            if (ab.second == i) left.push_back({ab.first, m});
            if (ab.first == i) right.push_back({ab.second, m});
        }
        std::sort(left.begin(), left.end(), std::greater<>());
        std::sort(right.begin(), right.end(), std::greater<>());
        for (auto [o, m] : left) {
            slot[{i, o}] = next;
            next += m;
        }
        if (w.defects_at(i) > 0) {
            slot[{i, 0}] = next;
            next += w.defects_at(i);
        }
        for (auto [o, m] : right) {
            slot[{i, o}] = next;
            next += m;
        }
    }
    std::vector<Link> ls;
    for (const auto &[ab, m] : w.link_map()) {
        int sa = slot[{ab.first, ab.second}], sb = slot[{ab.second, ab.first}];
        for (int c = 0; c < m; ++c) ls.push_back({sa + c, sb + m - 1 - c, 1});
    }
    std::map<int, int> ds;
    for (const auto &[i, c] : w.defects())
        for (int k = 0; k < c; ++k) ds[slot[{i, 0}] + k] = 1;
    return LinkPattern(std::vector<int>(static_cast<std::size_t>(w.n()), 1), ls, ds);
}

LinkPattern open_up(const LinkPattern &w) { return split_points(r_plus_comb_inverse(w)); }

LinkPattern r_plus_comb(const LinkPattern &w) {
    if (!w.defects().empty()) throw std::invalid_argument("R+ requires a pattern without defects");
    if (w.p() == 0) throw std::invalid_argument("R+ requires at least one point");
    const int P = w.p();
    std::vector<int> vals(w.valences().begin(), w.valences().end() - 1);
    std::map<std::pair<int, int>, int> links;
    std::map<int, int> ds;
    for (const auto &[ab, m] : w.link_map()) {
        if (ab.second == P)
            ds[ab.first] += m;
        else
            links[ab] = m;
    }
    std::vector<Link> ls;
    for (const auto &[ab, m] : links) ls.push_back({ab.first, ab.second, m});
    return LinkPattern(vals, ls, ds);
}

LinkPattern r_plus_comb_inverse(const LinkPattern &w) {
    int s = w.s();
    if (s == 0) return w;
    std::vector<int> vals = w.valences();
    vals.push_back(s);
    std::vector<Link> ls = w.links();
    for (const auto &[i, c] : w.defects()) ls.push_back({i, w.p() + 1, c});
    return LinkPattern(vals, ls);
}

LinkPattern r_minus_comb(const LinkPattern &w) {
    if (!w.defects().empty()) throw std::invalid_argument("R- requires a pattern without defects");
    if (w.p() == 0) throw std::invalid_argument("R- requires at least one point");
    std::vector<int> vals(w.valences().begin() + 1, w.valences().end());
    std::vector<Link> ls;
    std::map<int, int> ds;
    for (const auto &[ab, m] : w.link_map()) {
        if (ab.first == 1)
            ds[ab.second - 1] += m;
        else
            ls.push_back({ab.first - 1, ab.second - 1, m});
    }
    return LinkPattern(vals, ls, ds);
}

LinkPattern r_minus_comb_inverse(const LinkPattern &w) {
    int s = w.s();
    if (s == 0) return w;
    std::vector<int> vals{s};
    vals.insert(vals.end(), w.valences().begin(), w.valences().end());
    std::vector<Link> ls;
    for (const auto &l : w.links()) ls.push_back({l.a + 1, l.b + 1, l.mult});
    for (const auto &[i, c] : w.defects()) ls.push_back({1, i + 1, c});
    return LinkPattern(vals, ls);
}

LinkPattern cyclic_S(const LinkPattern &w) {
    if (!w.defects().empty()) throw std::invalid_argument("cyclic_S requires a pattern without defects");
    if (w.p() == 0) return w;
    return r_minus_comb_inverse(r_plus_comb(w));
}

LinkPattern sub_pattern(const LinkPattern &w, int j, int k) {
    if (j < 1 || k > w.p() || j > k) throw std::invalid_argument("sub_pattern: bad index range");
    std::vector<int> vals(w.valences().begin() + (j - 1), w.valences().begin() + k);
    std::vector<Link> ls;
    std::map<int, int> ds;
    auto inside = [&](int i) { return j <= i && i <= k; };
    for (const auto &[ab, m] : w.link_map()) {
        bool ia = inside(ab.first), ib = inside(ab.second);
        if (ia && ib)
            ls.push_back({ab.first - j + 1, ab.second - j + 1, m});
        else if (ia)
            ds[ab.first - j + 1] += m;
        else if (ib)
            ds[ab.second - j + 1] += m;
    }
    for (const auto &[i, c] : w.defects())
        if (inside(i)) ds[i - j + 1] += c;
    return LinkPattern(vals, ls, ds);
}

LinkPattern quotient(const LinkPattern &w, int j, int k) {
    if (j < 1 || k > w.p() || j > k) throw std::invalid_argument("quotient: bad index range");
    auto inside = [&](int i) { return j <= i && i <= k; };
    // Collapse onto label j, then compact away empty points.
    std::vector<int> vals = w.valences();
    for (int i = j; i <= k; ++i) vals[static_cast<std::size_t>(i - 1)] = 0;
    int r = 0;
    std::map<std::pair<int, int>, int> links;
    std::map<int, int> ds;
    for (const auto &[ab, m] : w.link_map()) {
        bool ia = inside(ab.first), ib = inside(ab.second);
        if (ia && ib) continue;
        if (ia || ib) {
            r += m;
            int o = ia ? ab.second : ab.first;
            links[{std::min(o, j), std::max(o, j)}] += m;
        } else {
            links[ab] += m;
        }
    }
    for (const auto &[i, c] : w.defects()) {
        if (inside(i)) {
            r += c;
            ds[j] += c;
        } else {
            ds[i] += c;
        }
    }
    vals[static_cast<std::size_t>(j - 1)] = r;
    return compact(vals, links, ds);
}

std::vector<Ordering> allowable_orderings(const LinkPattern &w) {
    std::vector<Ordering> out;
    Ordering cur;
    std::vector<int> orig(static_cast<std::size_t>(w.p()));
    std::iota(orig.begin(), orig.end(), 1);
    std::function<void(const LinkPattern &, const std::vector<int> &)> rec = [&](const LinkPattern &u,
                                                                                 const std::vector<int> &lab) {
        if (u.num_links() == 0) {
            out.push_back(cur);
            return;
        }
        for (int j = 1; j < u.p(); ++j) {
            int m = u.links_between(j, j + 1);
            if (m == 0) continue;
            std::vector<int> vals = u.valences();
            vals[static_cast<std::size_t>(j - 1)] -= m;
            vals[static_cast<std::size_t>(j)] -= m;
            auto links = u.link_map();
            links.erase({j, j + 1});
            std::vector<int> relabel;
            LinkPattern next = compact(vals, links, u.defects(), &relabel);
            std::vector<int> nlab(static_cast<std::size_t>(next.p()));
            for (int i = 1; i <= u.p(); ++i)
                if (relabel[static_cast<std::size_t>(i)] > 0)
                    nlab[static_cast<std::size_t>(relabel[static_cast<std::size_t>(i)] - 1)] = lab[static_cast<std::size_t>(i - 1)];
            cur.push_back({lab[static_cast<std::size_t>(j - 1)], lab[static_cast<std::size_t>(j)], j, m});
            rec(next, nlab);
            cur.pop_back();
        }
    };
    rec(w, orig);
    if (out.empty()) throw std::logic_error("pattern has no allowable ordering: " + w.str());
    return out;
}

} // namespace qlp
