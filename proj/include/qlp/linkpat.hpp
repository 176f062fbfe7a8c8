#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qlp {

struct Link {
    int a = 0, b = 0, mult = 0; // 1 <= a < b <= p
    auto operator<=>(const Link &) const = default;
};

// Planar link pattern on points 1..p with valences s_i.
class LinkPattern {
public:
    enum class Reason { ok, malformed, valence, crossing, trapped_defect };

    LinkPattern() = default;
    LinkPattern(std::vector<int> valences, const std::vector<Link> &links, std::map<int, int> defects = {});

    int p() const { return static_cast<int>(valences_.size()); }
    const std::vector<int> &valences() const { return valences_; }
    int valence(int i) const { return valences_.at(static_cast<std::size_t>(i - 1)); }
    std::vector<Link> links() const; // sorted by (a, b)
    const std::map<std::pair<int, int>, int> &link_map() const { return links_; }
    int links_between(int a, int b) const;
    const std::map<int, int> &defects() const { return defects_; }
    int defects_at(int i) const;

    int n() const;
    int num_links() const;
    int s() const;

    Reason check() const;
    bool valid() const { return check() == Reason::ok; }

    std::string str() const;

    bool operator==(const LinkPattern &o) const {
        return valences_ == o.valences_ && links_ == o.links_ && defects_ == o.defects_;
    }
    bool operator!=(const LinkPattern &o) const { return !(*this == o); }
    // Canonical order: sorted link list, then defect counts, then valences.
    bool operator<(const LinkPattern &o) const;

private:
    std::vector<int> valences_;
    std::map<std::pair<int, int>, int> links_;
    std::map<int, int> defects_;
};

const char *reason_name(LinkPattern::Reason r);
std::ostream &operator<<(std::ostream &os, const LinkPattern &w);
inline bool validate(const LinkPattern &w) { return w.valid(); }

std::vector<LinkPattern> enumerate(const std::vector<int> &valences, int s);
mpz_class count(const std::vector<int> &valences, int s);
mpz_class count_pp(int N, int s);

// All valence lists (compositions) of n with entries at most max_part (0: unbounded), lexicographic.
std::vector<std::vector<int>> valence_lists(int n, int max_part = 0);

// Admissible defect counts s for the given valences (same parity as n, 0 <= s <= n, nonempty universe).
std::vector<int> admissible_defects(const std::vector<int> &valences);

LinkPattern remove_links(const LinkPattern &w, int j, int m);
std::vector<int> defect_partition(const LinkPattern &w);
LinkPattern shuffle_pattern(const std::vector<int> &parts);
LinkPattern rainbow(int N);

// Split every point i into s_i unit points, keeping the lines in planar order.
LinkPattern split_points(const LinkPattern &w);
// phi = I o R_+^{-1}
LinkPattern open_up(const LinkPattern &w);

LinkPattern r_plus_comb(const LinkPattern &w);
LinkPattern r_plus_comb_inverse(const LinkPattern &w);
LinkPattern r_minus_comb(const LinkPattern &w);
LinkPattern r_minus_comb_inverse(const LinkPattern &w);
LinkPattern cyclic_S(const LinkPattern &w);

LinkPattern sub_pattern(const LinkPattern &w, int j, int k);
LinkPattern quotient(const LinkPattern &w, int j, int k);

// One whole-class removal inside an allowable ordering, in current labels.
struct RemovalStep {
    int orig_a = 0, orig_b = 0; // link class in the labels of the starting pattern
    int j = 0;                  // current left index; the class joins j and j+1
    int m = 0;                  // multiplicity removed
};
using Ordering = std::vector<RemovalStep>;

std::vector<Ordering> allowable_orderings(const LinkPattern &w);

} // namespace qlp
