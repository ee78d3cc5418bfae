#pragma once

#include "qa/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qa {

// Strictly increasing subset of {1..n+1}.
using Column = std::vector<int>;

std::optional<Column> column_f(int n, int i, const Column& c);
std::optional<Column> column_e(int n, int i, const Column& c);
// Entrywise +1 mod n+1, resorted.
Column promotion(int n, const Column& c);
Column promotion_inverse(int n, const Column& c);

// Which end of the tensor product the signature rule reads first.
// Anti: f_i(x (x) y) = f_i x (x) y iff phi_i(y) <= eps_i(x).
// Kashiwara: f_i(x (x) y) = f_i x (x) y iff phi_i(x) > eps_i(y).
enum class TensorRule { Anti, Kashiwara };

struct TensorElement {
    std::vector<Column> factors;
    friend auto operator<=>(const TensorElement&, const TensorElement&) = default;
    std::string str() const;
};

// B_W(lambda) for A_n^(1): the tensor product over i = 1..n of lambda_i copies
// of the column crystal of size i, with f_0 through promotion.
class TensorCrystal {
public:
    TensorCrystal(int n, std::vector<int> lambda, TensorRule rule = TensorRule::Anti);
    // Rejects every type except A_n^(1).
    static TensorCrystal build(const AffineType& t, std::vector<int> lambda, TensorRule rule = TensorRule::Anti);

    int n() const { return n_; }
    const std::vector<int>& lambda() const { return lambda_; }
    const RootDatum& datum() const { return dat_; }
    const WeylGroup& weyl() const { return W_; }
    size_t size() const { return elems_.size(); }
    const TensorElement& element(size_t x) const { return elems_[x]; }
    std::optional<size_t> index(const TensorElement& t) const;
    // Sizes of the columns, in tensor order.
    const std::vector<int>& column_sizes() const { return sizes_; }

    std::optional<size_t> f(int i, size_t x) const { return next_[i][x]; }
    std::optional<size_t> e(int i, size_t x) const { return prev_[i][x]; }
    int epsilon(int i, size_t x) const;
    int phi(int i, size_t x) const;
    // Factor index the operator acts on, if it acts.
    std::optional<int> acting_factor(int i, size_t x, bool raise) const;

    // <h_i, wt x> for i in I.
    std::vector<int> weight(size_t x) const;
    ClWeight cl_weight(size_t x) const;
    size_t highest() const;

    size_t s_action(int i, size_t x) const;
    size_t weyl_action(const std::vector<int>& word, size_t x) const;
    // Breadth-first search over the S_i-orbit. Throws if the orbit exceeds
    // 10 times the W_cl-orbit of the weight.
    bool is_extremal(size_t x) const;

    // Component id per element, under all e_i, f_i.
    std::vector<int> connected_components() const;
    int component_count() const;

    std::string dot() const;

private:
    int n_;
    std::vector<int> lambda_, sizes_;
    TensorRule rule_;
    RootDatum dat_;
    WeylGroup W_;
    std::vector<TensorElement> elems_;
    std::vector<std::vector<std::optional<size_t>>> next_, prev_;
    std::optional<TensorElement> act(int i, const TensorElement& t, bool raise, int* where) const;
};

// Element z^{k_1} b_1 (x) ... of the affinization, with exponents per factor.
struct AffineElement {
    size_t base;
    std::vector<int> z;
    friend auto operator<=>(const AffineElement&, const AffineElement&) = default;
};

// f_0 lowers the acted factor's exponent by 1 and e_0 raises it, so that the
// weight s(cl wt) + (sum z) delta changes by -alpha_0 and +alpha_0.
std::optional<AffineElement> affine_f(const TensorCrystal& B, int i, const AffineElement& x);
std::optional<AffineElement> affine_e(const TensorCrystal& B, int i, const AffineElement& x);
Weight affine_weight(const TensorCrystal& B, const AffineElement& x, const Section& s);

struct SimpleCrystalReport {
    size_t size = 0;
    bool size_ok = false;
    bool unique_top = false;         // exactly one element of weight cl(varpi_i)
    bool extremal_in_orbit = false;  // extremal weights lie in W_cl cl(varpi_i)
    bool support_ok = false;         // weights = hull of the orbit within its coset
    bool all_extremal = false;
    bool ok() const { return size_ok && unique_top && extremal_in_orbit && support_ok; }
};

SimpleCrystalReport simple_crystal_check(int n, int i);

// Dominant weights (as <h_j, .>, j = 1..n) below lambda in the dominance order
// of the finite type A_n root lattice.
std::vector<std::vector<int>> dominant_below(int n, const std::vector<int>& lambda);

long binomial(int n, int k);

} // namespace qa
