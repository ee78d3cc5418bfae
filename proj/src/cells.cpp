#include "qa/cells.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qa {

namespace {

GProdRep shift_det(GProdRep s, const std::vector<int>& drift) {
    for (size_t i = 0; i < s.components.size(); ++i)
        for (auto& x : s.components[i].shape) x += drift[i];
    return s;
}

} // namespace

CellModel::CellModel(const AffineType& t, std::vector<int> lambda) : B_(TensorCrystal::build(t, std::move(lambda))) {
    for (int sz : B_.column_sizes()) block_of_.push_back(sz - 1);
    const size_t nf = block_of_.size();
    const int n = B_.n();
    auto normalize = [&](std::vector<int> z) {
        std::vector<int> lo(n, 0);
        std::vector<bool> seen(n, false);
        for (size_t k = 0; k < nf; ++k) {
            int g = block_of_[k];
            lo[g] = seen[g] ? std::min(lo[g], z[k]) : z[k];
            seen[g] = true;
        }
        for (size_t k = 0; k < nf; ++k) z[k] -= lo[block_of_[k]];
        return z;
    };
    // Breadth-first search of B_0 from the highest element; fibres differ by
    // block-constant shifts, which the normalization removes.
    section_.assign(B_.size(), {});
    std::vector<bool> done(B_.size(), false);
    std::vector<AffineElement> queue{{B_.highest(), std::vector<int>(nf, 0)}};
    done[B_.highest()] = true;
    section_[B_.highest()] = queue[0].z;
    for (size_t k = 0; k < queue.size(); ++k)
        for (int i = 0; i <= n; ++i)
            for (bool raise : {false, true}) {
                auto y = raise ? affine_e(B_, i, queue[k]) : affine_f(B_, i, queue[k]);
                if (!y) continue;
                auto z = normalize(y->z);
                if (!done[y->base]) {
                    done[y->base] = true;
                    section_[y->base] = z;
                    queue.push_back({y->base, z});
                } else if (section_[y->base] != z) {
                    throw std::logic_error("fibre of B_0 is not a determinant coset");
                }
            }
    if (std::find(done.begin(), done.end(), false) != done.end())
        throw std::logic_error("B_W(lambda) is not connected");
}

std::vector<CellTriple> CellModel::basis(const Truncation& tr) const {
    std::vector<CellTriple> out;
    auto reps = truncated_gprod(gl_ranks(), tr.max_boxes, tr.max_det);
    for (size_t b = 0; b < B_.size(); ++b)
        for (const auto& s : reps)
            for (size_t bp = 0; bp < B_.size(); ++bp) out.push_back({b, s, bp});
    return out;
}

JElement CellModel::multiply(const CellTriple& x, const CellTriple& y) const {
    JElement out;
    if (x.bp != y.b) return out;
    for (const auto& [s, c] : gprod_multiply(x.s, y.s)) out[{x.b, s, y.bp}] += c;
    return out;
}

JElement CellModel::multiply(const JElement& x, const JElement& y) const {
    JElement out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            for (const auto& [t, c] : multiply(a, b)) out[t] += ca * cb * c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

JElement CellModel::unit() const {
    JElement out;
    for (const auto& d : d_set()) out[d] = 1;
    return out;
}

V0Element CellModel::act(const CellTriple& x, const std::pair<size_t, GProdRep>& v) const {
    V0Element out;
    if (x.bp != v.first) return out;
    for (const auto& [s, c] : gprod_multiply(x.s, v.second)) out[{x.b, s}] += c;
    return out;
}

V0Element CellModel::act(const JElement& x, const V0Element& v) const {
    V0Element out;
    for (const auto& [a, ca] : x)
        for (const auto& [w, cw] : v)
            for (const auto& [t, c] : act(a, w)) out[t] += ca * cw * c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<CellTriple> CellModel::d_set() const {
    std::vector<CellTriple> out;
    for (size_t b = 0; b < B_.size(); ++b) out.push_back({b, trivial_rep(), b});
    return out;
}

ClWeight CellModel::lambda_cl() const {
    ClWeight w;
    for (int v : lambda()) w.c.push_back(Rat(v));
    return w;
}

Rat CellModel::a_value(const CellTriple& x) const {
    const auto& D = B_.datum();
    ClWeight lam = lambda_cl(), mu = B_.cl_weight(x.bp);
    return (D.cl_pair(lam, lam) - D.cl_pair(mu, mu)) / 2;
}

std::optional<std::pair<size_t, GProdRep>> CellModel::pair_op(int i, bool raise, size_t b, const GProdRep& s,
                                                             std::vector<int>* drift) const {
    AffineElement x{b, section_[b]};
    auto y = raise ? affine_e(B_, i, x) : affine_f(B_, i, x);
    if (!y) return std::nullopt;
    std::vector<int> d(B_.n(), 0);
    const auto& target = section_[y->base];
    for (size_t k = 0; k < block_of_.size(); ++k) d[block_of_[k]] = y->z[k] - target[k];
    if (drift) *drift = d;
    return std::make_pair(y->base, shift_det(s, d));
}

std::optional<CellTriple> CellModel::bicrystal_op(const CellTriple& x, int i, char which) const {
    const bool raise = which == 'e' || which == 'E';
    if (which == 'e' || which == 'f') {
        auto r = pair_op(i, raise, x.b, x.s);
        if (!r) return std::nullopt;
        return CellTriple{r->first, r->second, x.bp};
    }
    if (which == 'E' || which == 'F') {
        auto r = pair_op(i, raise, x.bp, gprod_dual(x.s));
        if (!r) return std::nullopt;
        return CellTriple{x.b, gprod_dual(r->second), r->first};
    }
    throw std::invalid_argument("bicrystal operator must be one of e, f, E, F");
}

Weight CellModel::pair_weight(size_t b, const GProdRep& s) const {
    Weight w = affine_weight(B_, AffineElement{b, section_[b]}, Section::lowest(B_.datum()));
    for (const auto& c : s.components)
        for (int v : c.shape) w.d += v;
    return w;
}

namespace {

// Strongly connected components, iterative Tarjan.
std::vector<int> scc(const std::vector<std::vector<int>>& g, int& count) {
    const int n = static_cast<int>(g.size());
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> on(n, false);
    int counter = 0;
    count = 0;
    for (int root = 0; root < n; ++root) {
        if (idx[root] >= 0) continue;
        std::vector<std::pair<int, size_t>> call{{root, 0}};
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        on[root] = true;
        while (!call.empty()) {
            auto& [v, k] = call.back();
            if (k < g[v].size()) {
                int w = g[v][k++];
                if (idx[w] < 0) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    on[w] = true;
                    call.push_back({w, 0});
                } else if (on[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
            } else {
                int done = v;
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
                if (low[done] == idx[done]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on[w] = false;
                        comp[w] = count;
                        if (w == done) break;
                    }
                    ++count;
                }
            }
        }
    }
    return comp;
}

// Compare a computed partition with the expected one.
CellVerdict compare(const std::vector<int>& got, const std::vector<int>& want) {
    std::map<int, int> g2w;
    std::set<int> got_ids(got.begin(), got.end()), want_ids(want.begin(), want.end());
    for (size_t k = 0; k < got.size(); ++k) {
        auto [it, fresh] = g2w.emplace(got[k], want[k]);
        if (!fresh && it->second != want[k]) return CellVerdict::Mismatch;
    }
    return got_ids.size() == want_ids.size() ? CellVerdict::Match : CellVerdict::Inconclusive;
}

} // namespace

CellPartition cell_partition(const CellModel& M, const Truncation& tr) {
    CellPartition P;
    P.basis = M.basis(tr);
    const int N = static_cast<int>(P.basis.size());
    std::map<CellTriple, int> pos;
    for (int k = 0; k < N; ++k) pos[P.basis[k]] = k;
    std::map<std::pair<GProdRep, GProdRep>, GProdSum> cache;
    auto prod = [&](const GProdRep& a, const GProdRep& b) -> const GProdSum& {
        auto key = std::make_pair(a, b);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, gprod_multiply(a, b)).first;
        return it->second;
    };
    // Group basis elements by their left and right crystal labels.
    std::map<size_t, std::vector<int>> by_b, by_bp;
    for (int k = 0; k < N; ++k) {
        by_b[P.basis[k].b].push_back(k);
        by_bp[P.basis[k].bp].push_back(k);
    }
    // Edge y -> x whenever x occurs in z y (left) or y z (right).
    std::vector<std::vector<int>> gl(N), gr(N), g2(N);
    for (int y = 0; y < N; ++y) {
        const auto& ty = P.basis[y];
        for (int z : by_bp[ty.b]) {
            const auto& tz = P.basis[z];
            for (const auto& [s, c] : prod(tz.s, ty.s)) {
                auto it = pos.find({tz.b, s, ty.bp});
                if (c != 0 && it != pos.end()) gl[y].push_back(it->second);
            }
        }
        for (int z : by_b[ty.bp]) {
            const auto& tz = P.basis[z];
            for (const auto& [s, c] : prod(ty.s, tz.s)) {
                auto it = pos.find({ty.b, s, tz.bp});
                if (c != 0 && it != pos.end()) gr[y].push_back(it->second);
            }
        }
        g2[y] = gl[y];
        g2[y].insert(g2[y].end(), gr[y].begin(), gr[y].end());
    }
    P.left = scc(gl, P.left_count);
    P.right = scc(gr, P.right_count);
    P.two_sided = scc(g2, P.two_sided_count);
    std::vector<int> want_left(N), want_right(N), want_two(N, 0);
    for (int k = 0; k < N; ++k) {
        want_left[k] = static_cast<int>(P.basis[k].bp);
        want_right[k] = static_cast<int>(P.basis[k].b);
    }
    CellVerdict v[3] = {compare(P.left, want_left), compare(P.right, want_right), compare(P.two_sided, want_two)};
    if (std::find(v, v + 3, CellVerdict::Mismatch) != v + 3) P.verdict = CellVerdict::Mismatch;
    else if (std::find(v, v + 3, CellVerdict::Inconclusive) != v + 3) P.verdict = CellVerdict::Inconclusive;
    else P.verdict = CellVerdict::Match;
    return P;
}

std::string verdict_name(CellVerdict v) {
    switch (v) {
    case CellVerdict::Match: return "match";
    case CellVerdict::Inconclusive: return "inconclusive";
    case CellVerdict::Mismatch: return "mismatch";
    }
    return "";
}

} // namespace qa
