#include "qa/symfun.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qa {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition not weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

Partition Partition::transpose() const {
    std::vector<int> t(parts.empty() ? 0 : parts[0], 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(t);
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

std::vector<Partition> partitions_of(int n, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

LaurentSchur::LaurentSchur(int m_, std::vector<int> s) : m(m_), shape(std::move(s)) {
    if (m < 0 || static_cast<int>(shape.size()) != m) throw std::invalid_argument("shape length must equal m");
    for (int i = 1; i < m; ++i)
        if (shape[i] > shape[i - 1]) throw std::invalid_argument("shape not weakly decreasing");
}

LaurentSchur LaurentSchur::from(int m, const Partition& p, int det_power) {
    if (p.length() > m) throw std::invalid_argument("partition has more than m parts");
    std::vector<int> s(m);
    for (int i = 0; i < m; ++i) s[i] = p[i] + det_power;
    return LaurentSchur(m, s);
}

Partition LaurentSchur::polynomial_part() const {
    std::vector<int> p(shape);
    for (auto& x : p) x -= det_power();
    return Partition(p);
}

bool LaurentSchur::is_trivial() const {
    return std::all_of(shape.begin(), shape.end(), [](int x) { return x == 0; });
}

std::string LaurentSchur::str() const {
    std::string s = "(";
    for (size_t i = 0; i < shape.size(); ++i) s += (i ? "," : "") + std::to_string(shape[i]);
    return s + ")";
}

namespace {

// Enumerate LR fillings of nu/lambda with content mu: letters k are added as
// horizontal strips, and the row reading word (right to left, top to bottom)
// must be a lattice word.
void lr_fill(const Partition& mu, std::vector<std::vector<int>>& rows, std::vector<int>& shape, int k,
             const std::function<void(const std::vector<int>&)>& emit) {
    if (k == mu.length()) {
        std::vector<int> count(mu.length() + 1, 0);
        for (const auto& row : rows)
            for (auto it = row.rbegin(); it != row.rend(); ++it) {
                int x = *it;
                if (x < 0) continue;
                ++count[x];
                if (x > 0 && count[x] > count[x - 1]) return;
            }
        emit(shape);
        return;
    }
    // Choose how many k's to add in each row: horizontal strip of size mu[k].
    const int rmax = static_cast<int>(shape.size()) + 1;
    std::vector<int> base = shape;
    base.resize(rmax, 0);
    std::vector<int> add(rmax, 0);
    std::function<void(int, int)> rec = [&](int r, int rest) {
        if (r == rmax) {
            if (rest != 0) return;
            std::vector<int> ns(rmax);
            for (int i = 0; i < rmax; ++i) ns[i] = base[i] + add[i];
            auto saved_rows = rows;
            auto saved_shape = shape;
            rows.resize(rmax);
            for (int i = 0; i < rmax; ++i)
                for (int j = 0; j < add[i]; ++j) rows[i].push_back(k);
            while (!ns.empty() && ns.back() == 0) ns.pop_back();
            while (rows.size() > ns.size()) rows.pop_back();
            shape = ns;
            lr_fill(mu, rows, shape, k + 1, emit);
            rows = saved_rows;
            shape = saved_shape;
            return;
        }
        // Horizontal strip: new row length at most the old length of the row above.
        int cap = r == 0 ? rest : std::min(rest, base[r - 1] - base[r]);
        // Lattice pruning: letter k never appears in a row above row k.
        if (r < k) cap = 0;
        for (int a = 0; a <= cap; ++a) {
            add[r] = a;
            rec(r + 1, rest - a);
        }
        add[r] = 0;
    };
    rec(0, mu[k]);
}

} // namespace

std::map<Partition, long> lr_product(const Partition& lambda, const Partition& mu) {
    std::map<Partition, long> out;
    std::vector<std::vector<int>> rows;
    for (int p : lambda.parts) rows.emplace_back(p, -1);
    std::vector<int> shape = lambda.parts;
    lr_fill(mu, rows, shape, 0, [&](const std::vector<int>& s) { ++out[Partition(s)]; });
    return out;
}

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    auto p = lr_product(lambda, mu);
    auto it = p.find(nu);
    return it == p.end() ? 0 : it->second;
}

SchurSum lr_multiply(const LaurentSchur& a, const LaurentSchur& b) {
    if (a.m != b.m) throw std::invalid_argument("mismatched GL rank");
    SchurSum out;
    const int det = a.det_power() + b.det_power();
    for (const auto& [nu, c] : lr_product(a.polynomial_part(), b.polynomial_part()))
        if (nu.length() <= a.m) out[LaurentSchur::from(a.m, nu, det)] += c;
    return out;
}

SchurSum lr_multiply(const SchurSum& a, const SchurSum& b) {
    SchurSum out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            for (const auto& [z, cz] : lr_multiply(x, y)) out[z] += cx * cy * cz;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SchurSum pieri_vertical(const LaurentSchur& a, int k) {
    if (k < 0 || k > a.m) throw std::invalid_argument("pieri_vertical needs 0 <= k <= m");
    return lr_multiply(a, LaurentSchur::from(a.m, Partition(std::vector<int>(k, 1))));
}

LaurentSchur dual(const LaurentSchur& a) {
    std::vector<int> s(a.shape.rbegin(), a.shape.rend());
    for (auto& x : s) x = -x;
    return LaurentSchur(a.m, s);
}

namespace {

using Monomials = std::map<std::vector<int>, long>;

// Character of an irreducible GL_m representation as a sum of monomials,
// by enumerating semistandard tableaux of the polynomial part.
Monomials character(const LaurentSchur& a) {
    Monomials out;
    const Partition p = a.polynomial_part();
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p[r]; ++c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> t(p.length());
    for (int r = 0; r < p.length(); ++r) t[r].assign(p[r], 0);
    std::vector<int> expo(a.m, a.det_power());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            ++out[expo];
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= a.m; ++v) {
            t[r][c] = v;
            ++expo[v - 1];
            rec(k + 1);
            --expo[v - 1];
        }
    };
    rec(0);
    return out;
}

} // namespace

SchurSum oracle_multiply(const LaurentSchur& a, const LaurentSchur& b) {
    if (a.m != b.m) throw std::invalid_argument("mismatched GL rank");
    if (a.polynomial_part().size() + b.polynomial_part().size() > 8)
        throw std::invalid_argument("oracle size guard exceeded");
    Monomials ca = character(a), cb = character(b), prod;
    for (const auto& [x, u] : ca)
        for (const auto& [y, v] : cb) {
            std::vector<int> z(a.m);
            for (int i = 0; i < a.m; ++i) z[i] = x[i] + y[i];
            prod[z] += u * v;
        }
    std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
    SchurSum out;
    while (!prod.empty()) {
        auto top = prod.rbegin();
        LaurentSchur s(a.m, top->first);
        long c = top->second;
        out[s] += c;
        for (const auto& [x, u] : character(s)) prod[x] -= c * u;
        std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
    }
    return out;
}

long weyl_dimension(const LaurentSchur& a) {
    __int128 num = 1, den = 1;
    for (int i = 0; i < a.m; ++i)
        for (int j = i + 1; j < a.m; ++j) {
            num *= a.shape[i] - a.shape[j] + j - i;
            den *= j - i;
        }
    return static_cast<long>(num / den);
}

std::vector<LaurentSchur> truncated_irreps(int m, int max_boxes, int max_det) {
    std::vector<LaurentSchur> out;
    if (m == 0) return {LaurentSchur::trivial(0)};
    for (int det = -max_det; det <= max_det; ++det)
        for (int n = 0; n <= max_boxes; ++n)
            for (const auto& p : partitions_of(n, m - 1)) out.push_back(LaurentSchur::from(m, p, det));
    std::sort(out.begin(), out.end());
    return out;
}

std::string GProdRep::str() const {
    std::string s = "[";
    for (size_t i = 0; i < components.size(); ++i) s += (i ? ";" : "") + components[i].str();
    return s + "]";
}

GProdRep gprod_trivial(const std::vector<int>& ms) {
    GProdRep r;
    for (int m : ms) r.components.push_back(LaurentSchur::trivial(m));
    return r;
}

GProdSum gprod_multiply(const GProdRep& a, const GProdRep& b) {
    if (a.components.size() != b.components.size()) throw std::invalid_argument("mismatched factor count");
    GProdSum acc{{GProdRep{}, 1}};
    for (size_t i = 0; i < a.components.size(); ++i) {
        GProdSum next;
        auto f = lr_multiply(a.components[i], b.components[i]);
        for (const auto& [r, c] : acc)
            for (const auto& [s, d] : f) {
                GProdRep x = r;
                x.components.push_back(s);
                next[x] += c * d;
            }
        acc = std::move(next);
    }
    return acc;
}

GProdRep gprod_dual(const GProdRep& a) {
    GProdRep r;
    for (const auto& c : a.components) r.components.push_back(dual(c));
    return r;
}

std::vector<GProdRep> truncated_gprod(const std::vector<int>& ms, int max_boxes, int max_det) {
    std::vector<GProdRep> acc{GProdRep{}};
    std::vector<int> used{0};
    for (int m : ms) {
        std::vector<GProdRep> next;
        std::vector<int> next_used;
        auto irr = truncated_irreps(m, max_boxes, max_det);
        for (size_t k = 0; k < acc.size(); ++k)
            for (const auto& s : irr) {
                int b = used[k] + s.polynomial_part().size();
                if (b > max_boxes) continue;
                GProdRep x = acc[k];
                x.components.push_back(s);
                next.push_back(x);
                next_used.push_back(b);
            }
        acc = std::move(next);
        used = std::move(next_used);
    }
    return acc;
}

} // namespace qa
