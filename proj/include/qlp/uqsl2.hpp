#pragma once

#include "qlp/qfield.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qlp {

// Coordinates (l_1, ..., l_p) indexed by point; point i is the i-th tensor
// factor counted from the right.
using MultiIndex = std::vector<int>;

class TensorVector {
public:
    TensorVector() = default;
    explicit TensorVector(std::vector<int> dims);

    static TensorVector scalar(const ExactScalar &c);
    static TensorVector basis(std::vector<int> dims, const MultiIndex &idx, const ExactScalar &c = ExactScalar(1));

    const std::vector<int> &dims() const { return dims_; }
    int p() const { return static_cast<int>(dims_.size()); }
    const std::map<MultiIndex, ExactScalar> &coeffs() const { return c_; }
    ExactScalar coeff(const MultiIndex &idx) const;
    bool is_zero() const { return c_.empty(); }
    std::size_t nnz() const { return c_.size(); }

    void add(const MultiIndex &idx, const ExactScalar &c);
    void set(const MultiIndex &idx, const ExactScalar &c);

    TensorVector &operator+=(const TensorVector &o);
    TensorVector &operator-=(const TensorVector &o);
    TensorVector &operator*=(const ExactScalar &c);
    friend TensorVector operator+(TensorVector a, const TensorVector &b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector &b) { return a -= b; }
    friend TensorVector operator*(const ExactScalar &c, TensorVector a) { return a *= c; }
    bool operator==(const TensorVector &o) const { return dims_ == o.dims_ && c_ == o.c_; }
    bool operator!=(const TensorVector &o) const { return !(*this == o); }

    // Scalar c with v = c w, or nullopt-like zero flag when not proportional.
    bool proportional_to(const TensorVector &w, ExactScalar &c) const;

    std::string pretty() const;

private:
    void check_index(const MultiIndex &idx) const;

    std::vector<int> dims_;
    std::map<MultiIndex, ExactScalar> c_;
};

std::ostream &operator<<(std::ostream &os, const TensorVector &v);

// Weight exponent sum_i (d_i - 1 - 2 l_i).
int weight(const std::vector<int> &dims, const MultiIndex &idx);

TensorVector act_E(const TensorVector &v);
TensorVector act_F(const TensorVector &v);
TensorVector act_K(const TensorVector &v, int power = 1);
TensorVector act_F_pow(const TensorVector &v, int k);

// Basis of highest-weight vectors of weight q^s in the tensor product with d_i = s_i + 1.
std::vector<TensorVector> hw_space(const std::vector<int> &valences, int s);

// Clebsch-Gordan data for M_{d2} (x) M_{d1}; d1 sits at the lower point.
struct CGData {
    int d1 = 0, d2 = 0;
    // tau[d][l] = F^l tau_0^{(d;d1,d2)} as a vector with dims {d1, d2}
    std::map<int, std::vector<TensorVector>> tau;
    // dual[{l1, l2}] = list of (d, l, c) with e_{l2} (x) e_{l1} = sum c tau_l^{(d)}
    struct Term {
        int d, l;
        ExactScalar c;
    };
    std::map<std::pair<int, int>, std::vector<Term>> dual;
};

// Dimensions d occurring in M_{d2} (x) M_{d1}, decreasing.
std::vector<int> cg_range(int d1, int d2);
TensorVector cg_hwv(int d, int d1, int d2);
const CGData &cg_basis(int d1, int d2);

// pi-hat_j^{(d)}: the factors j, j+1 are replaced by one factor M_d (kept even when d = 1).
TensorVector reduce_pair(const TensorVector &v, int j, int d);
// iota_j^{(d;d1,d2)}: factor j (of dimension d) is replaced by factors d1 at j and d2 at j+1.
TensorVector embed_pair(const TensorVector &v, int j, int d1, int d2);
// pi_j^{(d)} = iota o pi-hat, shape unchanged.
TensorVector project_pair(const TensorVector &v, int j, int d);
// pi-tilde_j^{(delta)} with delta = d_j + d_{j+1} - 1 - 2m; trivial factors are dropped.
TensorVector project_general(const TensorVector &v, int j, int m);
// Delete every factor of dimension 1 (identified with the scalars).
TensorVector drop_trivial(const TensorVector &v);

// theta_l^{(s)} in M_2^{(x)s}, from the closed formula.
TensorVector theta(int l, int s);

// p-hat^{(varsigma,s)}: blocks of sizes s_1..s_p then s, each fused onto its top component.
TensorVector project_blocks(const TensorVector &v, const std::vector<int> &valences, int s);
// Same with explicit block sizes in point order (zero-size blocks contribute no factor).
TensorVector project_block_sizes(const TensorVector &v, const std::vector<int> &sizes);
// I^{(varsigma,s)}: each factor M_{r+1} is expanded to r factors M_2 via e_l -> theta_l^{(r)}.
TensorVector embed_blocks(const TensorVector &v);

// R_+^{(s)}: the last factor has dimension s+1.  Throws if v is not of the required form.
TensorVector r_plus(const TensorVector &v, int s);
TensorVector r_plus_inverse(const TensorVector &tau, int s);
// R_-^{(s)}: the first factor has dimension s+1.
TensorVector r_minus(const TensorVector &v, int s);
TensorVector r_minus_inverse(const TensorVector &tau, int s);
// S = R_-^{-1} o R_+ for the last factor.
TensorVector smap(const TensorVector &v);

} // namespace qlp
