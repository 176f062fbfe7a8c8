#include "qlp/linkpat.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace qlp;

namespace {

// Independent count for unit valences: choose a partial matching of 2N+s
// points recursively on the leftmost free point, reject crossings and
// defects under an arc.
int brute_unit_count(int n, int s) {
    int result = 0;
    std::vector<int> partner(static_cast<std::size_t>(n), -2); // -2 unset, -1 defect
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            int defects = 0;
            for (int k = 0; k < n; ++k) defects += partner[static_cast<std::size_t>(k)] == -1;
            if (defects != s) return;
            for (int a = 0; a < n; ++a) {
                int b = partner[static_cast<std::size_t>(a)];
                if (b <= a) continue;
                for (int c = a + 1; c < b; ++c) {
                    int d = partner[static_cast<std::size_t>(c)];
                    if (d == -1 || d > b || d < a) return;
                }
            }
            ++result;
            return;
        }
        if (partner[static_cast<std::size_t>(i)] != -2) {
            rec(i + 1);
            return;
        }
        partner[static_cast<std::size_t>(i)] = -1;
        rec(i + 1);
        for (int j = i + 1; j < n; ++j) {
            if (partner[static_cast<std::size_t>(j)] != -2) continue;
            partner[static_cast<std::size_t>(i)] = j;
            partner[static_cast<std::size_t>(j)] = i;
            rec(i + 1);
            partner[static_cast<std::size_t>(j)] = -2;
        }
        partner[static_cast<std::size_t>(i)] = -2;
    };
    rec(0);
    return result;
}

std::vector<std::vector<int>> compositions(int n, int maxpart) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= std::min(left, maxpart); ++k) {
            cur.push_back(k);
            rec(left - k);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

} // namespace

TEST(LinkPattern, Validate) {
    EXPECT_TRUE(LinkPattern({1, 1}, {{1, 2, 1}}).valid());
    EXPECT_EQ(LinkPattern({1, 1, 1, 1}, {{1, 3, 1}, {2, 4, 1}}).check(), LinkPattern::Reason::crossing);
    EXPECT_EQ(LinkPattern({1, 1, 1}, {{1, 3, 1}}, {{2, 1}}).check(), LinkPattern::Reason::trapped_defect);
    EXPECT_EQ(LinkPattern({2, 1}, {{1, 2, 1}}).check(), LinkPattern::Reason::valence);
    EXPECT_TRUE(LinkPattern({2, 1, 1}, {{1, 2, 1}, {1, 3, 1}}).valid()); // shared endpoint
    EXPECT_TRUE(LinkPattern().valid());
}

TEST(LinkPattern, EnumerateSmall) {
    auto e = enumerate({1, 1}, 0);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0], LinkPattern({1, 1}, {{1, 2, 1}}));
    EXPECT_EQ(enumerate({1, 1, 1, 1}, 0).size(), 2u);
    auto f = enumerate({2, 1, 1}, 0);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0], LinkPattern({2, 1, 1}, {{1, 2, 1}, {1, 3, 1}}));
    EXPECT_THROW(enumerate({1, 1}, 1), std::invalid_argument);
    EXPECT_THROW(enumerate({1}, 3), std::invalid_argument);
}

TEST(LinkPattern, EnumerateIsCanonicalAndValid) {
    for (const auto &v : compositions(6, 3))
        for (int s : admissible_defects(v)) {
            auto e = enumerate(v, s);
            std::set<LinkPattern> uniq(e.begin(), e.end());
            EXPECT_EQ(uniq.size(), e.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                EXPECT_TRUE(e[i].valid());
                EXPECT_EQ(e[i].s(), s);
                if (i) EXPECT_TRUE(e[i - 1] < e[i]);
            }
        }
}

TEST(LinkPattern, CountMatchesEnumeration) {
    for (int n = 1; n <= 8; ++n)
        for (const auto &v : compositions(n, 4))
            for (int s = n % 2; s <= n; s += 2) EXPECT_EQ(count(v, s), enumerate(v, s).size());
    EXPECT_EQ(count({3}, 3), 1);
    EXPECT_EQ(count({3}, 1), 0);
    EXPECT_EQ(count({1, 1, 1, 1, 1, 1}, 0), 5);
}

TEST(LinkPattern, CountPairPartitions) {
    const int catalan[] = {1, 1, 2, 5, 14, 42};
    for (int N = 0; N <= 5; ++N) EXPECT_EQ(count_pp(N, 0), catalan[N]);
    EXPECT_EQ(count_pp(1, 2), brute_unit_count(4, 2));
    EXPECT_EQ(count_pp(1, 2), 3);
    for (int s = 0; s <= 5; ++s) EXPECT_EQ(count_pp(0, s), 1);
    for (int N = 0; 2 * N <= 10; ++N)
        for (int s = 0; 2 * N + s <= 10; ++s) {
            std::vector<int> ones(static_cast<std::size_t>(2 * N + s), 1);
            if (ones.empty()) continue;
            EXPECT_EQ(count_pp(N, s), count(ones, s));
            EXPECT_EQ(count_pp(N, s), brute_unit_count(2 * N + s, s));
        }
}

TEST(LinkPattern, RemoveLinks) {
    EXPECT_EQ(remove_links(LinkPattern({1, 1}, {{1, 2, 1}}), 1, 1), LinkPattern());
    LinkPattern w({1, 1, 2, 4, 3, 1}, {{1, 2, 1}, {3, 4, 1}, {3, 6, 1}, {4, 5, 3}});
    ASSERT_TRUE(w.valid());
    LinkPattern all = remove_links(w, 4, 3);
    EXPECT_EQ(all, LinkPattern({1, 1, 2, 1, 1}, {{1, 2, 1}, {3, 4, 1}, {3, 5, 1}}));
    EXPECT_TRUE(all.valid());
    LinkPattern two = remove_links(w, 4, 2);
    EXPECT_EQ(two, LinkPattern({1, 1, 2, 2, 1, 1}, {{1, 2, 1}, {3, 4, 1}, {3, 6, 1}, {4, 5, 1}}));
    EXPECT_THROW(remove_links(w, 4, 4), std::invalid_argument);
    EXPECT_THROW(remove_links(w, 2, 1), std::invalid_argument);
}

TEST(LinkPattern, DefectPartitionAndShuffle) {
    std::vector<int> lambda{4, 3, 2, 5, 1, 4};
    EXPECT_EQ(defect_partition(shuffle_pattern(lambda)), lambda);
    EXPECT_TRUE(defect_partition(LinkPattern({1, 1}, {{1, 2, 1}})).empty());
    EXPECT_EQ(defect_partition(LinkPattern({1, 1, 1}, {{1, 2, 1}}, {{3, 1}})), std::vector<int>{1});
    EXPECT_EQ(shuffle_pattern({}), LinkPattern());
    LinkPattern one = shuffle_pattern({3});
    EXPECT_EQ(one.p(), 1);
    EXPECT_EQ(one.defects_at(1), 3);
}

TEST(LinkPattern, Rainbow) {
    EXPECT_EQ(rainbow(0), LinkPattern());
    EXPECT_EQ(rainbow(1), LinkPattern({1, 1}, {{1, 2, 1}}));
    EXPECT_EQ(rainbow(2), LinkPattern({1, 1, 1, 1}, {{1, 4, 1}, {2, 3, 1}}));
}

TEST(LinkPattern, OpenUp) {
    for (const auto &lambda : compositions(4, 4)) EXPECT_EQ(open_up(shuffle_pattern(lambda)), rainbow(4));
    for (const auto &w : enumerate({1, 1, 1, 1, 1, 1}, 0)) EXPECT_EQ(open_up(w), w);
    // multiplicities split into nested arcs; defects go to the new last point
    LinkPattern w({2, 3, 1}, {{1, 2, 2}}, {{2, 1}, {3, 1}});
    ASSERT_TRUE(w.valid());
    LinkPattern a = open_up(w);
    EXPECT_EQ(a, LinkPattern(std::vector<int>(8, 1), {{1, 4, 1}, {2, 3, 1}, {5, 8, 1}, {6, 7, 1}}));
    for (int n = 1; n <= 6; ++n)
        for (const auto &v : compositions(n, 4))
            for (int s : admissible_defects(v))
                for (const auto &u : enumerate(v, s)) {
                    LinkPattern b = open_up(u);
                    EXPECT_TRUE(b.valid()) << u.str();
                    EXPECT_EQ(b.s(), 0);
                    EXPECT_EQ(b.num_links(), u.num_links() + s);
                    EXPECT_EQ(2 * b.num_links(), n + s);
                }
}

TEST(LinkPattern, RPlusMinus) {
    for (int n = 1; n <= 6; ++n)
        for (const auto &v : compositions(n, 4))
            for (int s : admissible_defects(v))
                for (const auto &u : enumerate(v, s)) {
                    if (s == 0) continue;
                    EXPECT_EQ(r_plus_comb(r_plus_comb_inverse(u)), u);
                    EXPECT_EQ(r_minus_comb(r_minus_comb_inverse(u)), u);
                }
    LinkPattern sh = shuffle_pattern({2, 1});
    EXPECT_EQ(r_plus_comb_inverse(sh), LinkPattern({2, 1, 3}, {{1, 3, 2}, {2, 3, 1}}));
    EXPECT_EQ(r_minus_comb_inverse(sh), LinkPattern({3, 2, 1}, {{1, 2, 2}, {1, 3, 1}}));
    EXPECT_THROW(r_plus_comb(sh), std::invalid_argument);
}

TEST(LinkPattern, CyclicS) {
    EXPECT_EQ(cyclic_S(LinkPattern({1, 1}, {{1, 2, 1}})), LinkPattern({1, 1}, {{1, 2, 1}}));
    // eight points, the last one moves to the front
    LinkPattern w({1, 1, 2, 1, 1, 1, 1, 2}, {{1, 8, 1}, {2, 3, 1}, {3, 8, 1}, {4, 7, 1}, {5, 6, 1}});
    ASSERT_TRUE(w.valid());
    LinkPattern sw = cyclic_S(w);
    EXPECT_EQ(sw, LinkPattern({2, 1, 1, 2, 1, 1, 1, 1}, {{1, 2, 1}, {1, 4, 1}, {3, 4, 1}, {5, 8, 1}, {6, 7, 1}}));
    for (int n = 2; n <= 6; n += 2)
        for (const auto &v : compositions(n, 4)) {
            auto universe = enumerate(v, 0);
            std::set<LinkPattern> image;
            for (const auto &u : universe) {
                LinkPattern c = u;
                for (int k = 0; k < u.p(); ++k) c = cyclic_S(c);
                EXPECT_EQ(c, u);
                image.insert(cyclic_S(u));
            }
            // bijection onto the rotated universe
            if (!universe.empty()) {
                std::vector<int> rv{v.back()};
                rv.insert(rv.end(), v.begin(), v.end() - 1);
                auto target = enumerate(rv, 0);
                EXPECT_EQ(image, std::set<LinkPattern>(target.begin(), target.end()));
            }
        }
    EXPECT_THROW(cyclic_S(shuffle_pattern({1})), std::invalid_argument);
}

TEST(LinkPattern, SubPatternAndQuotient) {
    // (1,2) inside, (3,6) crossing the right boundary of [2,4], defect at 7
    LinkPattern w({1, 2, 2, 1, 1, 1, 1}, {{1, 2, 1}, {2, 3, 1}, {3, 6, 1}, {4, 5, 1}}, {{7, 1}});
    ASSERT_TRUE(w.valid()) << reason_name(w.check());
    LinkPattern tau = sub_pattern(w, 2, 4);
    EXPECT_EQ(tau, LinkPattern({2, 2, 1}, {{1, 2, 1}}, {{1, 1}, {2, 1}, {3, 1}}));
    EXPECT_TRUE(tau.valid());
    LinkPattern q = quotient(w, 2, 4);
    EXPECT_EQ(q, LinkPattern({1, 3, 1, 1, 1}, {{1, 2, 1}, {2, 3, 1}, {2, 4, 1}}, {{5, 1}}));
    EXPECT_EQ(q.valence(2), tau.s());
    EXPECT_EQ(q.s(), w.s());
    EXPECT_TRUE(q.valid());
    // a range carrying only internal links collapses away
    LinkPattern r({1, 1, 1, 1}, {{1, 4, 1}, {2, 3, 1}});
    EXPECT_EQ(sub_pattern(r, 2, 3).s(), 0);
    EXPECT_EQ(quotient(r, 2, 3), LinkPattern({1, 1}, {{1, 2, 1}}));
}

TEST(LinkPattern, AllowableOrderings) {
    auto o = allowable_orderings(rainbow(2));
    ASSERT_EQ(o.size(), 1u);
    EXPECT_EQ(o[0][0].orig_a, 2);
    EXPECT_EQ(o[0][0].orig_b, 3);
    EXPECT_EQ(o[0][1].j, 1);
    auto e = allowable_orderings(shuffle_pattern({2, 1}));
    ASSERT_EQ(e.size(), 1u);
    EXPECT_TRUE(e[0].empty());
    // a fusion: removing (2,3) leaves points 1 and 4 adjacent after relabeling
    LinkPattern w({1, 1, 1, 2, 1}, {{1, 4, 1}, {2, 3, 1}, {4, 5, 1}});
    ASSERT_TRUE(w.valid());
    for (const auto &ord : allowable_orderings(w)) {
        LinkPattern cur = w;
        for (const auto &st : ord) {
            cur = remove_links(cur, st.j, st.m);
            EXPECT_TRUE(cur.valid());
        }
        EXPECT_EQ(cur, LinkPattern());
    }
    for (int n = 1; n <= 6; ++n)
        for (const auto &v : compositions(n, 4))
            for (int s : admissible_defects(v))
                for (const auto &u : enumerate(v, s))
                    for (const auto &ord : allowable_orderings(u)) {
                        LinkPattern cur = u;
                        for (const auto &st : ord) {
                            ASSERT_EQ(cur.links_between(st.j, st.j + 1), st.m);
                            cur = remove_links(cur, st.j, st.m);
                            EXPECT_TRUE(cur.valid());
                        }
                        EXPECT_EQ(cur, shuffle_pattern(defect_partition(u)));
                    }
}
