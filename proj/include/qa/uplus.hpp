#pragma once

#include "qa/errors.hpp"
#include "qa/symfun.hpp"
#include "qa/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qa {

// A word in the generators; letter i is stored as the character '0' + i.
using Word = std::string;
using RFMatrix = std::vector<std::vector<RationalFunc>>;

// Element of the free algebra on E_i with coefficients in Q(q_s).
class AlgElement {
public:
    AlgElement() = default;
    AlgElement(const RationalFunc& c); // NOLINT: scalar
    static AlgElement word(const Word& w, const RationalFunc& c = 1);
    static AlgElement gen(int i) { return word(Word(1, static_cast<char>('0' + i))); }

    const std::map<Word, RationalFunc>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    AlgElement& operator*=(const RationalFunc& c);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
    friend AlgElement operator*(AlgElement a, const RationalFunc& c) { return a *= c; }
    friend AlgElement operator*(const RationalFunc& c, AlgElement a) { return a *= c; }
    AlgElement operator-() const;
    friend bool operator==(const AlgElement&, const AlgElement&) = default;

    AlgElement star() const; // reverse every word
    AlgElement bar() const;  // conjugate every coefficient
    AlgElement pow(int n) const;

    std::string str() const;

private:
    std::map<Word, RationalFunc> t_;
    void add(const Word& w, const RationalFunc& c);
};

Root word_weight(const Word& w, int size);

// Form, derivations, braid operators and equality in U^+ for one root datum.
class UPlus {
public:
    explicit UPlus(const RootDatum& dat);
    const RootDatum& datum() const { return dat_; }

    // (alpha_i, alpha_j) scaled so that q^{(a,b)} = q_s^{pair_d(a,b)}.
    int pair_d(const Root& a, const Root& b) const;
    Root weight(const Word& w) const { return word_weight(w, dat_.size()); }

    AlgElement divided_power(int i, int n) const;
    AlgElement r(int i, const AlgElement& x) const;
    AlgElement ir(int i, const AlgElement& x) const;

    RationalFunc form(const Word& a, const Word& b) const;
    RationalFunc form(const AlgElement& x, const AlgElement& y) const;

    std::vector<Word> words_of_weight(const Root& nu) const;
    RFMatrix gram_matrix(const Root& nu) const;
    int dimension(const Root& nu) const;
    // Homogeneous components of x - y pair to zero with all words.
    bool equal(const AlgElement& x, const AlgElement& y) const;
    bool is_zero(const AlgElement& x) const { return equal(x, AlgElement()); }

    // inverse = false: T_i(E_j) = sum_{r+s=-a_ij} (-1)^r q_i^{-r} E_i^{(s)} E_j E_i^{(r)}
    // inverse = true:  T_i^{-1}(E_j) = sum_{r+s=-a_ij} (-1)^r q_i^{-r} E_i^{(r)} E_j E_i^{(s)}
    AlgElement braid_on_generator(int i, int j, bool inverse) const;
    // Multiplicative extension; throws NotComputable if some word contains i.
    AlgElement braid_apply(int i, const AlgElement& x, bool inverse) const;
    AlgElement serre(int i, int j) const;

private:
    RootDatum dat_;
    IntMatrix gd_; // d * gram
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, LaurentPoly> memo_;
    LaurentPoly form_poly(const Word& a, const Word& b) const;
};

// Index (c_+, c_0, c_-) in frame p: c maps k <= p to c_+(k) and k > p to c_-(k);
// c0 holds one partition per i in I_0.
struct PBWIndex {
    std::map<int, int> c;
    std::vector<Partition> c0;
    friend auto operator<=>(const PBWIndex&, const PBWIndex&) = default;
    int at(int k) const {
        auto it = c.find(k);
        return it == c.end() ? 0 : it->second;
    }
    bool real_plus(int p) const;  // c_{+p} nonzero
    bool real_minus(int p) const; // c_{-p} nonzero
    std::string str() const;
};

// c strictly precedes c' in the order attached to frame p.
bool precedes(const PBWIndex& a, const PBWIndex& b, int p);

// InverseForNonPositive: E_{beta_k} = T_{i_0}^{-1}...(E_{i_k}) for k <= 0 and
// T_{i_1}...(E_{i_k}) for k > 0. The other value swaps the two operators.
enum class BraidConvention { InverseForNonPositive, DirectForNonPositive };

struct CanonicalResult {
    std::vector<PBWIndex> indices;                  // sorted compatibly with precedes
    RFMatrix bar_matrix; // bar(L_c) = sum_c' M[c][c'] L_c'
    RFMatrix coeffs; // b_c = sum_c' A[c][c'] L_c'
    std::vector<AlgElement> elements;
};

class PBW {
public:
    PBW(const UPlus& U, HSequence h, BraidConvention conv = BraidConvention::InverseForNonPositive);
    const UPlus& algebra() const { return U_; }
    const HSequence& hseq() const { return h_; }

    // Root attached to position k in frame p (beta_k for p = 0).
    Root root(int k, int p = 0) const;
    int find_root(const Root& r, int p = 0) const; // throws if absent in range

    AlgElement real_root_vector(int k) const;
    AlgElement psi_tilde(int i, int k) const; // psi~_{i, k d_i}
    AlgElement p_tilde(int i, int k) const;   // P~_{i, k d_i}
    AlgElement schur(const std::vector<Partition>& c0) const;
    AlgElement element(const PBWIndex& c, int p = 0) const;

    Root index_weight(const PBWIndex& c, int p = 0) const;
    std::vector<PBWIndex> indices_at_weight(const Root& nu, int p = 0) const;
    // Coefficients of x in the basis L(c, p), c running over indices_at_weight.
    std::map<PBWIndex, RationalFunc> expand(const AlgElement& x, const Root& nu, int p = 0) const;

    CanonicalResult canonical_basis_at_weight(const Root& nu, int p = 0) const;
    // Gram matrix of the L(c, p) at nu, rows ordered as indices_at_weight.
    RFMatrix pbw_gram(const Root& nu, int p = 0) const;

    bool transposed_schur = false; // use the transposed Jacobi-Trudi determinant

private:
    const UPlus& U_;
    HSequence h_;
    BraidConvention conv_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, AlgElement> chain_cache_;
    mutable std::map<std::pair<int, int>, AlgElement> ptilde_cache_;
    struct Frame {
        std::vector<PBWIndex> indices;
        std::vector<AlgElement> elements;
        std::vector<Word> words;
        RFMatrix dual;  // dual[c][w] = (L_c, w)
        RFMatrix gram;  // gram[c][c'] = (L_c, L_c')
    };
    mutable std::map<std::pair<Root, int>, std::shared_ptr<const Frame>> frames_;
    std::shared_ptr<const Frame> frame(const Root& nu, int p) const;
    AlgElement chain_vector(int k, int p) const;
    AlgElement fallback(const Root& beta, int letter) const;
    AlgElement middle(const std::vector<Partition>& c0, int p) const;
    int bound(const Root& nu) const;
};

// Weights nu = sum c_i alpha_i with 0 <= c_i <= D a_i, nu != 0.
std::vector<Root> weights_up_to_degree(const RootDatum& dat, int D);

// Linear algebra over Q(q_s).
int rank(RFMatrix m);
std::optional<std::vector<RationalFunc>> solve(RFMatrix m, std::vector<RationalFunc> b);

} // namespace qa
