#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qa {

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p); // drops trailing zeros, validates
    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int operator[](int i) const { return i < length() ? parts[i] : 0; }
    Partition transpose() const;
    std::string str() const;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

// All partitions of n.
std::vector<Partition> partitions_of(int n);
// All partitions of n with at most max_len parts.
std::vector<Partition> partitions_of(int n, int max_len);

// Irreducible rational representation of GL_m, indexed by a weakly decreasing
// integer vector of length m. m = 0 is the trivial representation of the trivial group.
struct LaurentSchur {
    int m = 0;
    std::vector<int> shape;

    LaurentSchur() = default;
    LaurentSchur(int m, std::vector<int> shape);
    static LaurentSchur trivial(int m) { return LaurentSchur(m, std::vector<int>(m, 0)); }
    static LaurentSchur from(int m, const Partition& p, int det_power = 0);

    int det_power() const { return m == 0 ? 0 : shape.back(); }
    Partition polynomial_part() const;
    bool is_trivial() const;
    std::string str() const;
    friend auto operator<=>(const LaurentSchur&, const LaurentSchur&) = default;
};

using SchurSum = std::map<LaurentSchur, long>;

// c^nu_{lambda mu} for partitions.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// s_lambda s_mu as a sum of s_nu, all nu (no length bound).
std::map<Partition, long> lr_product(const Partition& lambda, const Partition& mu);

SchurSum lr_multiply(const LaurentSchur& a, const LaurentSchur& b);
SchurSum lr_multiply(const SchurSum& a, const SchurSum& b);
// Multiplication by the k-th elementary symmetric function.
SchurSum pieri_vertical(const LaurentSchur& a, int k);
LaurentSchur dual(const LaurentSchur& a);

// Independent check: expand into monomials over semistandard fillings and peel
// off the lex-largest dominant term. Guarded to at most 8 boxes in total.
SchurSum oracle_multiply(const LaurentSchur& a, const LaurentSchur& b);

// Weyl dimension formula.
long weyl_dimension(const LaurentSchur& a);

// Irr of GL_m truncated by polynomial-part size and |det power|.
std::vector<LaurentSchur> truncated_irreps(int m, int max_boxes, int max_det);

// An irreducible representation of prod_i GL_{m_i}.
struct GProdRep {
    std::vector<LaurentSchur> components;
    friend auto operator<=>(const GProdRep&, const GProdRep&) = default;
    std::string str() const;
};

using GProdSum = std::map<GProdRep, long>;

GProdRep gprod_trivial(const std::vector<int>& ms);
GProdSum gprod_multiply(const GProdRep& a, const GProdRep& b);
GProdRep gprod_dual(const GProdRep& a);
// Product of truncated_irreps over the factors; entries with m = 0 contribute only the trivial rep.
std::vector<GProdRep> truncated_gprod(const std::vector<int>& ms, int max_boxes, int max_det);

} // namespace qa
