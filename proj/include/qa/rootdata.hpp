#pragma once

#include "qa/qseries.hpp"

#include <string>
#include <vector>

namespace qa {

using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Kac's tables, with the numbering of A_{2n}^{(2)} reversed so that
// (alpha_0, alpha_0) = 4.
struct AffineType {
    char family = 'A'; // A..G
    int N = 1;         // X_N
    int r = 1;         // twist
    int rank() const;  // |I_0|
    bool valid() const;
    bool untwisted() const { return r == 1; }
    bool is_a2n2() const { return family == 'A' && r == 2 && N % 2 == 0; }
    bool dual_untwisted() const { return r > 1 && !is_a2n2(); }
    std::string name() const; // "A2~2"
    static AffineType parse(const std::string& s);
    friend bool operator==(const AffineType&, const AffineType&) = default;
};

// Every affine type of rank between 1 and max_rank.
std::vector<AffineType> all_affine_types(int max_rank);

struct Root {
    std::vector<int> c; // coordinates over alpha_0..alpha_n
    friend auto operator<=>(const Root&, const Root&) = default;
    int delta_degree() const { return c[0]; } // a_0 = 1 in every table
};

// <h_i, lambda> for i in I and <d, lambda>.
struct Weight {
    std::vector<int> h;
    Rat d = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
};

// Coordinates over cl(varpi_i), i in I_0.
struct ClWeight {
    std::vector<Rat> c;
    friend bool operator==(const ClWeight&, const ClWeight&) = default;
    friend auto operator<=>(const ClWeight& a, const ClWeight& b) {
        return std::lexicographical_compare_three_way(a.c.begin(), a.c.end(), b.c.begin(), b.c.end(),
                                                      [](const Rat& x, const Rat& y) {
                                                          int k = cmp(x, y);
                                                          return k < 0 ? std::strong_ordering::less
                                                                 : k > 0 ? std::strong_ordering::greater
                                                                         : std::strong_ordering::equal;
                                                      });
    }
};

// Element of h^* in the basis alpha_0..alpha_n, Lambda_0.
struct HVec {
    std::vector<Rat> a;
    Rat lam0 = 0;
};

class RootDatum {
public:
    explicit RootDatum(AffineType t);

    const AffineType& type() const { return type_; }
    int n() const { return n_; }
    int size() const { return n_ + 1; }
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<int>& marks() const { return marks_; }
    const std::vector<int>& comarks() const { return comarks_; }
    const RatMatrix& gram() const { return gram_; }
    int d() const { return d_; }
    int coxeter() const { return h_; }
    int dual_coxeter() const { return hv_; }
    // q_i = q_s^{qexp(i)}
    int qexp(int i) const { return qexp_[i]; }
    int d_node(int i) const { return dnode_[i]; }

    // Root helpers.
    Root simple(int i) const;
    Root delta() const;
    Rat pair(const Root& a, const Root& b) const;
    int coroot_pair(int i, const Root& a) const; // <h_i, a>
    Root reflect(int i, const Root& a) const;
    bool is_positive(const Root& a) const;
    // Finite part over alpha_1..alpha_n, i.e. the coordinates of cl(a) in that basis.
    std::vector<int> finite_part(const Root& a) const;
    Root from_finite(const std::vector<int>& v, int m) const;

    // Weight helpers.
    Weight fundamental(int i) const;       // Lambda_i
    Weight level_zero_fundamental(int i) const; // varpi_i, i in I_0
    Weight delta_weight() const;
    Weight root_weight(const Root& a) const;
    HVec to_hvec(const Weight& w) const;
    Weight from_hvec(const HVec& v) const;
    Rat pair(const Weight& a, const Weight& b) const;
    Rat pair(const HVec& a, const HVec& b) const;
    int level(const Weight& w) const;

    // cl projection and the induced form.
    ClWeight cl(const Weight& w) const;
    ClWeight cl(const Root& a) const;
    Rat cl_pair(const ClWeight& a, const ClWeight& b) const;
    // <h_i, varpi_i> divisor used for the cl(varpi) coordinates.
    int varpi_scale(int i) const { return vscale_[i]; }

private:
    AffineType type_;
    int n_;
    IntMatrix cartan_;
    std::vector<int> marks_, comarks_, qexp_, dnode_, vscale_;
    RatMatrix gram_, clgram_;
    int d_, h_, hv_;
};

int q_i_exponent(const RootDatum& dat, int i);
LaurentPoly q_binomial(int n, int r, int i, const RootDatum& dat);

bool is_real_root(const Root& r, const RootDatum& dat);
Rat d_alpha(const Root& r, const RootDatum& dat);

enum class RootClass { Greater, Zero, Less };

struct ClassifiedRoot {
    RootClass cls;
    Root root;  // for Zero: m * delta
    int m = 0;  // for Zero
    int node = 0; // for Zero
};

std::vector<Root> positive_real_roots(const RootDatum& dat, int delta_cutoff);
std::vector<ClassifiedRoot> enumerate_positive_roots(const RootDatum& dat, int delta_cutoff);

ClWeight tilde_alpha(const Root& r, const RootDatum& dat);

// A section s: P_cl -> P of cl with s(cl(alpha_i)) = alpha_i for i in I_0.
// It is fixed by the delta coordinate assigned to each varpi_i.
struct Section {
    std::vector<Rat> offsets; // <d, s(cl(varpi_i))>, indexed by i in I_0 (0-based)
    static Section lowest(const RootDatum& dat);
    Weight lift(const ClWeight& w, const RootDatum& dat) const;
};

} // namespace qa
