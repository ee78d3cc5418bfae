#include "qa/crystals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qa {

namespace {

bool has(const Column& c, int v) { return std::binary_search(c.begin(), c.end(), v); }

Column replaced(Column c, int from, int to) {
    *std::find(c.begin(), c.end(), from) = to;
    std::sort(c.begin(), c.end());
    return c;
}

int column_eps(int n, int i, const Column& c) {
    if (i == 0) return has(c, 1) && !has(c, n + 1);
    return has(c, i + 1) && !has(c, i);
}

int column_phi(int n, int i, const Column& c) {
    if (i == 0) return has(c, n + 1) && !has(c, 1);
    return has(c, i) && !has(c, i + 1);
}

void all_columns(int n, int k, int from, Column& cur, std::vector<Column>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v <= n + 1; ++v) {
        cur.push_back(v);
        all_columns(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::optional<Column> column_f(int n, int i, const Column& c) {
    if (!column_phi(n, i, c)) return std::nullopt;
    return i == 0 ? replaced(c, n + 1, 1) : replaced(c, i, i + 1);
}

std::optional<Column> column_e(int n, int i, const Column& c) {
    if (!column_eps(n, i, c)) return std::nullopt;
    return i == 0 ? replaced(c, 1, n + 1) : replaced(c, i + 1, i);
}

Column promotion(int n, const Column& c) {
    Column r;
    for (int v : c) r.push_back(v % (n + 1) + 1);
    std::sort(r.begin(), r.end());
    return r;
}

Column promotion_inverse(int n, const Column& c) {
    Column r;
    for (int v : c) r.push_back(v == 1 ? n + 1 : v - 1);
    std::sort(r.begin(), r.end());
    return r;
}

std::string TensorElement::str() const {
    std::string s;
    for (size_t k = 0; k < factors.size(); ++k) {
        if (k) s += "x";
        s += "{";
        for (size_t j = 0; j < factors[k].size(); ++j) s += (j ? "," : "") + std::to_string(factors[k][j]);
        s += "}";
    }
    return s;
}

TensorCrystal::TensorCrystal(int n, std::vector<int> lambda, TensorRule rule)
    : n_(n), lambda_(std::move(lambda)), rule_(rule), dat_(AffineType{'A', n, 1}), W_(dat_) {
    if (static_cast<int>(lambda_.size()) != n_) throw std::invalid_argument("lambda must have n entries");
    for (int i = 1; i <= n_; ++i) {
        if (lambda_[i - 1] < 0) throw std::invalid_argument("lambda must be dominant");
        for (int k = 0; k < lambda_[i - 1]; ++k) sizes_.push_back(i);
    }
    std::vector<std::vector<Column>> cols(n_ + 1);
    for (int i = 1; i <= n_; ++i) {
        Column cur;
        all_columns(n_, i, 1, cur, cols[i]);
    }
    elems_.push_back(TensorElement{});
    for (int sz : sizes_) {
        std::vector<TensorElement> next;
        for (const auto& t : elems_)
            for (const auto& c : cols[sz]) {
                TensorElement u = t;
                u.factors.push_back(c);
                next.push_back(std::move(u));
            }
        elems_ = std::move(next);
    }
    std::sort(elems_.begin(), elems_.end());
    next_.assign(n_ + 1, std::vector<std::optional<size_t>>(elems_.size()));
    prev_ = next_;
    for (int i = 0; i <= n_; ++i)
        for (size_t x = 0; x < elems_.size(); ++x) {
            if (auto y = act(i, elems_[x], false, nullptr)) next_[i][x] = index(*y);
            if (auto y = act(i, elems_[x], true, nullptr)) prev_[i][x] = index(*y);
        }
}

TensorCrystal TensorCrystal::build(const AffineType& t, std::vector<int> lambda, TensorRule rule) {
    if (!(t.family == 'A' && t.r == 1)) throw std::invalid_argument("unsupported type " + t.name());
    return TensorCrystal(t.N, std::move(lambda), rule);
}

std::optional<size_t> TensorCrystal::index(const TensorElement& t) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), t);
    if (it == elems_.end() || *it != t) return std::nullopt;
    return static_cast<size_t>(it - elems_.begin());
}

std::optional<TensorElement> TensorCrystal::act(int i, const TensorElement& t, bool raise, int* where) const {
    const int k = static_cast<int>(t.factors.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    if (rule_ == TensorRule::Anti) std::reverse(order.begin(), order.end());
    // Kashiwara signature: each factor reads -^eps +^phi; cancel (+,-) pairs.
    std::vector<int> plus, minus;
    for (int j : order) {
        if (column_eps(n_, i, t.factors[j])) {
            if (!plus.empty()) plus.pop_back();
            else minus.push_back(j);
        }
        if (column_phi(n_, i, t.factors[j])) plus.push_back(j);
    }
    int j;
    if (raise) {
        if (minus.empty()) return std::nullopt;
        j = minus.back();
    } else {
        if (plus.empty()) return std::nullopt;
        j = plus.front();
    }
    TensorElement u = t;
    u.factors[j] = raise ? *column_e(n_, i, t.factors[j]) : *column_f(n_, i, t.factors[j]);
    if (where) *where = j;
    return u;
}

std::optional<int> TensorCrystal::acting_factor(int i, size_t x, bool raise) const {
    int j = -1;
    if (!act(i, elems_[x], raise, &j)) return std::nullopt;
    return j;
}

int TensorCrystal::epsilon(int i, size_t x) const {
    int k = 0;
    for (auto y = e(i, x); y; y = e(i, *y)) ++k;
    return k;
}

int TensorCrystal::phi(int i, size_t x) const {
    int k = 0;
    for (auto y = f(i, x); y; y = f(i, *y)) ++k;
    return k;
}

std::vector<int> TensorCrystal::weight(size_t x) const {
    std::vector<int> h(n_ + 1, 0);
    for (const auto& c : elems_[x].factors) {
        h[0] += has(c, n_ + 1) - has(c, 1);
        for (int i = 1; i <= n_; ++i) h[i] += has(c, i) - has(c, i + 1);
    }
    return h;
}

ClWeight TensorCrystal::cl_weight(size_t x) const {
    auto h = weight(x);
    ClWeight w;
    for (int i = 1; i <= n_; ++i) w.c.push_back(Rat(h[i]) / dat_.varpi_scale(i));
    return w;
}

size_t TensorCrystal::highest() const {
    TensorElement t;
    for (int sz : sizes_) {
        Column c(sz);
        std::iota(c.begin(), c.end(), 1);
        t.factors.push_back(c);
    }
    return *index(t);
}

size_t TensorCrystal::s_action(int i, size_t x) const {
    int k = weight(x)[i];
    for (; k > 0; --k) x = *f(i, x);
    for (; k < 0; ++k) x = *e(i, x);
    return x;
}

size_t TensorCrystal::weyl_action(const std::vector<int>& word, size_t x) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = s_action(*it, x);
    return x;
}

bool TensorCrystal::is_extremal(size_t x) const {
    const size_t cap = 10 * W_.wcl_orbit(cl_weight(x)).size();
    std::set<size_t> seen{x};
    std::vector<size_t> queue{x};
    for (size_t k = 0; k < queue.size(); ++k) {
        size_t y = queue[k];
        auto h = weight(y);
        for (int i = 0; i <= n_; ++i) {
            if (h[i] >= 0 && e(i, y)) return false;
            if (h[i] <= 0 && f(i, y)) return false;
        }
        for (int i = 0; i <= n_; ++i) {
            size_t z = s_action(i, y);
            if (seen.insert(z).second) {
                if (seen.size() > cap) throw std::logic_error("extremality search exceeded its bound");
                queue.push_back(z);
            }
        }
    }
    return true;
}

std::vector<int> TensorCrystal::connected_components() const {
    std::vector<size_t> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i <= n_; ++i)
        for (size_t x = 0; x < size(); ++x)
            if (auto y = f(i, x)) parent[find(x)] = find(*y);
    std::map<size_t, int> ids;
    std::vector<int> out(size());
    for (size_t x = 0; x < size(); ++x) {
        auto [it, _] = ids.emplace(find(x), static_cast<int>(ids.size()));
        out[x] = it->second;
    }
    return out;
}

int TensorCrystal::component_count() const {
    auto c = connected_components();
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::string TensorCrystal::dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (size_t x = 0; x < size(); ++x) os << "  " << x << " [label=\"" << elems_[x].str() << "\"];\n";
    for (size_t x = 0; x < size(); ++x)
        for (int i = 0; i <= n_; ++i)
            if (auto y = f(i, x)) os << "  " << x << " -> " << *y << " [label=\"" << i << "\"];\n";
    os << "}\n";
    return os.str();
}

std::optional<AffineElement> affine_f(const TensorCrystal& B, int i, const AffineElement& x) {
    auto y = B.f(i, x.base);
    if (!y) return std::nullopt;
    AffineElement r{*y, x.z};
    if (i == 0) --r.z[*B.acting_factor(0, x.base, false)];
    return r;
}

std::optional<AffineElement> affine_e(const TensorCrystal& B, int i, const AffineElement& x) {
    auto y = B.e(i, x.base);
    if (!y) return std::nullopt;
    AffineElement r{*y, x.z};
    if (i == 0) ++r.z[*B.acting_factor(0, x.base, true)];
    return r;
}

Weight affine_weight(const TensorCrystal& B, const AffineElement& x, const Section& s) {
    Weight w = s.lift(B.cl_weight(x.base), B.datum());
    int k = std::accumulate(x.z.begin(), x.z.end(), 0);
    w.d += k; // <d, delta> = a_0 = 1
    return w;
}

std::vector<std::vector<int>> dominant_below(int n, const std::vector<int>& lambda) {
    // alpha-coordinates of lambda through the inverse Cartan matrix of A_n.
    std::vector<Rat> c(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) c[i - 1] += Rat(std::min(i, j) * (n + 1 - std::max(i, j)), n + 1) * lambda[j - 1];
    for (auto& x : c) x.canonicalize();
    std::vector<std::vector<int>> out;
    std::vector<int> k(n, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            std::vector<int> nu(lambda);
            for (int a = 0; a < n; ++a) {
                nu[a] -= 2 * k[a];
                if (a > 0) nu[a] += k[a - 1];
                if (a + 1 < n) nu[a] += k[a + 1];
            }
            if (std::all_of(nu.begin(), nu.end(), [](int v) { return v >= 0; })) out.push_back(nu);
            return;
        }
        for (k[j] = 0; k[j] <= c[j]; ++k[j]) rec(j + 1);
        k[j] = 0;
    };
    rec(0);
    return out;
}

SimpleCrystalReport simple_crystal_check(int n, int i) {
    std::vector<int> lam(n, 0);
    lam[i - 1] = 1;
    TensorCrystal B(n, lam);
    const auto& W = B.weyl();
    const auto& D = B.datum();
    SimpleCrystalReport rep;
    rep.size = B.size();
    rep.size_ok = static_cast<long>(B.size()) == binomial(n + 1, i);
    ClWeight top = D.cl(D.level_zero_fundamental(i));
    auto orbit = W.wcl_orbit(top);
    std::set<ClWeight> orb(orbit.begin(), orbit.end());
    int tops = 0;
    rep.extremal_in_orbit = true;
    rep.all_extremal = true;
    std::set<ClWeight> support;
    for (size_t x = 0; x < B.size(); ++x) {
        ClWeight w = B.cl_weight(x);
        support.insert(w);
        tops += w == top;
        if (B.is_extremal(x)) rep.extremal_in_orbit &= orb.count(w) > 0;
        else rep.all_extremal = false;
    }
    rep.unique_top = tops == 1;
    std::set<ClWeight> hull;
    for (const auto& nu : dominant_below(n, lam)) {
        ClWeight c;
        for (int j = 1; j <= n; ++j) c.c.push_back(Rat(nu[j - 1]) / D.varpi_scale(j));
        for (const auto& w : W.wcl_orbit(c)) hull.insert(w);
    }
    rep.support_ok = hull == support;
    return rep;
}

} // namespace qa
