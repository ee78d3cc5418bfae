#pragma once

#include "qa/crystals.hpp"
#include "qa/symfun.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qa {

// Basis element t_(b, s, b') of J_lambda.
struct CellTriple {
    size_t b;
    GProdRep s;
    size_t bp;
    friend auto operator<=>(const CellTriple&, const CellTriple&) = default;
};

using JElement = std::map<CellTriple, long>;
using V0Element = std::map<std::pair<size_t, GProdRep>, long>;

struct Truncation {
    int max_boxes = 3;
    int max_det = 2;
};

// B(lambda) identified with B_W(lambda) x Irr G_lambda through a fixed section
// B_W(lambda) -> B_0(lambda) in the affinized tensor crystal.
class CellModel {
public:
    CellModel(const AffineType& t, std::vector<int> lambda);

    const TensorCrystal& crystal() const { return B_; }
    const std::vector<int>& lambda() const { return B_.lambda(); }
    // GL ranks of the factors of G_lambda.
    const std::vector<int>& gl_ranks() const { return B_.lambda(); }
    // z-exponents chosen for b; each block of equal columns has minimum 0.
    const std::vector<int>& section(size_t b) const { return section_[b]; }

    GProdRep trivial_rep() const { return gprod_trivial(gl_ranks()); }
    std::vector<CellTriple> basis(const Truncation& tr) const;

    JElement multiply(const CellTriple& x, const CellTriple& y) const;
    JElement multiply(const JElement& x, const JElement& y) const;
    JElement unit() const;
    V0Element act(const CellTriple& x, const std::pair<size_t, GProdRep>& v) const;
    V0Element act(const JElement& x, const V0Element& v) const;

    std::vector<CellTriple> d_set() const;
    long d_count() const { return static_cast<long>(B_.size()); }

    // ((lambda, lambda) - (mu, mu)) / 2 with mu the weight of b'.
    Rat a_value(const CellTriple& x) const;
    ClWeight lambda_cl() const;

    // Crystal operators on the (b, s) pair; the second member is the
    // determinant drift per GL factor.
    std::optional<std::pair<size_t, GProdRep>> pair_op(int i, bool raise, size_t b, const GProdRep& s,
                                                      std::vector<int>* drift = nullptr) const;
    // which: 'e', 'f', 'E' (e^#), 'F' (f^#).
    std::optional<CellTriple> bicrystal_op(const CellTriple& x, int i, char which) const;
    Weight pair_weight(size_t b, const GProdRep& s) const;

private:
    TensorCrystal B_;
    std::vector<std::vector<int>> section_;
    std::vector<int> block_of_; // factor index -> GL factor index
};

enum class CellVerdict { Match, Inconclusive, Mismatch };

struct CellPartition {
    std::vector<CellTriple> basis;
    std::vector<int> left, right, two_sided; // class id per basis element
    int left_count = 0, right_count = 0, two_sided_count = 0;
    CellVerdict verdict = CellVerdict::Inconclusive;
};

CellPartition cell_partition(const CellModel& M, const Truncation& tr);

std::string verdict_name(CellVerdict v);

} // namespace qa
