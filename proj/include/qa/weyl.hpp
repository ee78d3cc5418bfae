#pragma once

#include "qa/rootdata.hpp"

#include <vector>

namespace qa {

// Element t(xi) * wbar of the extended affine Weyl group.
// xi lies in P~ and is stored over the basis cl(alpha_1..alpha_n);
// wbar is the integer matrix of the finite Weyl group element on the same basis.
struct ExtendedWeylElement {
    std::vector<Rat> xi;
    IntMatrix wbar;
    friend bool operator==(const ExtendedWeylElement&, const ExtendedWeylElement&) = default;
};

using Perm = std::vector<int>; // diagram automorphism as a permutation of I

struct Decomposition {
    std::vector<Rat> xi_omega;    // xi in the basis omega~_i
    std::vector<int> finite_word; // reduced word for wbar in I_0
    Perm tau;                     // right length-zero factor
    std::vector<int> affine_word; // w = s_{affine_word} * tau, reduced
};

class WeylGroup {
public:
    explicit WeylGroup(const RootDatum& dat);
    const RootDatum& datum() const { return dat_; }
    int n() const { return dat_.n(); }

    ExtendedWeylElement identity() const;
    ExtendedWeylElement s(int i) const;
    ExtendedWeylElement translation(const std::vector<Rat>& xi) const;
    ExtendedWeylElement omega_tilde(int i) const; // t(d_i omega_i^vee)
    ExtendedWeylElement word(const std::vector<int>& letters) const;
    ExtendedWeylElement automorphism(const Perm& tau) const;

    ExtendedWeylElement mul(const ExtendedWeylElement& a, const ExtendedWeylElement& b) const;
    ExtendedWeylElement inverse(const ExtendedWeylElement& a) const;

    Root act(const ExtendedWeylElement& w, const Root& r) const;
    Weight act(const ExtendedWeylElement& w, const Weight& l) const;
    ClWeight act_cl(const ExtendedWeylElement& w, const ClWeight& l) const;

    int length(const ExtendedWeylElement& w) const;
    // Left descent greedy with the least admissible letter.
    Decomposition decompose(const ExtendedWeylElement& w) const;
    ExtendedWeylElement recompose(const Decomposition& d) const;
    // Permutation of I induced by a length-zero element.
    Perm as_automorphism(const ExtendedWeylElement& w) const;
    // The group T of length-zero elements.
    std::vector<Perm> automorphisms() const;
    bool is_reduced(const std::vector<int>& letters) const;

    // Pairing on the finite alpha basis.
    Rat fin_pair(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    ClWeight reflect_cl(int i, const ClWeight& l) const;
    std::vector<ClWeight> wcl_orbit(const ClWeight& l) const;

private:
    RootDatum dat_;
    RatMatrix fgram_;
    std::vector<IntMatrix> sfin_; // s_1..s_n, index 0 holds s_theta
    std::vector<Rat> xi0_;        // translation part of s_0
    struct RealClass {
        std::vector<int> v;
        int m0, step;
    };
    std::vector<RealClass> classes_;
    std::vector<std::pair<Perm, ExtendedWeylElement>> autos_;
    std::vector<Rat> cl_to_fin(const ClWeight& l) const;
    ClWeight fin_to_cl(const std::vector<Rat>& v) const;
    std::vector<Rat> apply(const IntMatrix& m, const std::vector<Rat>& v) const;
    std::vector<int> apply(const IntMatrix& m, const std::vector<int>& v) const;
};

// Doubly infinite sequence i_k with i_{k+N} = tau(i_k).
class HSequence {
public:
    HSequence(std::vector<int> window, Perm tau);
    int N() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }
    const Perm& tau() const { return tau_; }
    int operator[](long k) const;

private:
    std::vector<int> window_;
    Perm tau_, tau_inv_;
};

// Reduced expression of omega~_n ... omega~_1 = s_{i_1} ... s_{i_N} tau.
HSequence omega_word(const WeylGroup& W);
Root beta(long k, const HSequence& h, const RootDatum& dat);

} // namespace qa
