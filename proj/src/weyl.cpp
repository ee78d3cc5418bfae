#include "qa/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qa {

namespace {

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    const int n = static_cast<int>(a.size());
    IntMatrix c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Inverse of a unimodular integer matrix by rational elimination.
IntMatrix matinv(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    RatMatrix m(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        Rat inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (int i = 0; i < n; ++i)
            if (i != c && m[i][c] != 0) {
                Rat f = m[i][c];
                for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
            }
    }
    IntMatrix r(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = static_cast<int>(m[i][n + j].get_num().get_si());
    return r;
}

int to_int(const Rat& r) {
    if (r.get_den() != 1) throw std::logic_error("expected an integer, got " + r.get_str());
    return static_cast<int>(r.get_num().get_si());
}

} // namespace

WeylGroup::WeylGroup(const RootDatum& dat) : dat_(dat) {
    const int n = dat_.n();
    fgram_.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fgram_[i][j] = dat_.gram()[i + 1][j + 1];
    const auto& A = dat_.cartan();
    std::vector<int> theta(n);
    for (int i = 0; i < n; ++i) theta[i] = dat_.marks()[i + 1];
    sfin_.assign(n + 1, identity_matrix(n));
    // s_theta v = v + <h_0, v> theta
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) sfin_[0][k][j] += A[0][j + 1] * theta[k];
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < n; ++j) sfin_[i][i - 1][j] -= A[i][j + 1];
    std::vector<Rat> th(theta.begin(), theta.end());
    Rat tt = fin_pair(th, th);
    xi0_.resize(n);
    for (int k = 0; k < n; ++k) xi0_[k] = 2 * th[k] / tt;

    int maxd = 1;
    for (int i = 0; i < dat_.size(); ++i) maxd = std::max(maxd, dat_.d_node(i));
    std::map<std::vector<int>, RealClass> cls;
    for (const Root& r : positive_real_roots(dat_, 2 * maxd + 2)) {
        auto v = dat_.finite_part(r);
        int m = r.delta_degree();
        auto it = cls.find(v);
        if (it == cls.end())
            cls.emplace(v, RealClass{v, m, to_int(d_alpha(r, dat_))});
        else
            it->second.m0 = std::min(it->second.m0, m);
    }
    for (auto& [v, c] : cls) classes_.push_back(c);

    // Length-zero group generated by the omega~_i tau_i^{-1} remainders.
    auto strip = [&](ExtendedWeylElement w) {
        while (true) {
            auto winv = inverse(w);
            int pick = -1;
            for (int i = 0; i < dat_.size() && pick < 0; ++i)
                if (!dat_.is_positive(act(winv, dat_.simple(i)))) pick = i;
            if (pick < 0) return w;
            w = mul(s(pick), w);
        }
    };
    std::vector<ExtendedWeylElement> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(strip(omega_tilde(i)));
    autos_.push_back({as_automorphism(identity()), identity()});
    for (size_t k = 0; k < autos_.size(); ++k)
        for (const auto& g : gens) {
            auto e = mul(autos_[k].second, g);
            bool seen = false;
            for (const auto& a : autos_) seen |= a.second == e;
            if (!seen) autos_.push_back({as_automorphism(e), e});
        }
}

Rat WeylGroup::fin_pair(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    Rat s = 0;
    const int n = dat_.n();
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) s += a[i] * fgram_[i][j] * b[j];
    }
    return s;
}

std::vector<Rat> WeylGroup::apply(const IntMatrix& m, const std::vector<Rat>& v) const {
    std::vector<Rat> r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0) r[i] += m[i][j] * v[j];
    return r;
}

std::vector<int> WeylGroup::apply(const IntMatrix& m, const std::vector<int>& v) const {
    std::vector<int> r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

ExtendedWeylElement WeylGroup::identity() const {
    return {std::vector<Rat>(dat_.n(), 0), identity_matrix(dat_.n())};
}

ExtendedWeylElement WeylGroup::s(int i) const {
    if (i == 0) return {xi0_, sfin_[0]};
    return {std::vector<Rat>(dat_.n(), 0), sfin_[i]};
}

ExtendedWeylElement WeylGroup::translation(const std::vector<Rat>& xi) const { return {xi, identity_matrix(dat_.n())}; }

ExtendedWeylElement WeylGroup::omega_tilde(int i) const {
    // omega_i^vee solves (alpha_j, x) = delta_ij on the finite block.
    const int n = dat_.n();
    RatMatrix m(n, std::vector<Rat>(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = fgram_[r][c];
        m[r][n] = r == i - 1 ? Rat(dat_.d_node(i)) : Rat(0);
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        Rat inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (int r = 0; r < n; ++r)
            if (r != c && m[r][c] != 0) {
                Rat f = m[r][c];
                for (int k = 0; k <= n; ++k) m[r][k] -= f * m[c][k];
            }
    }
    std::vector<Rat> xi(n);
    for (int r = 0; r < n; ++r) xi[r] = m[r][n];
    return translation(xi);
}

ExtendedWeylElement WeylGroup::word(const std::vector<int>& letters) const {
    ExtendedWeylElement w = identity();
    for (int i : letters) w = mul(w, s(i));
    return w;
}

ExtendedWeylElement WeylGroup::automorphism(const Perm& tau) const {
    for (const auto& [p, e] : autos_)
        if (p == tau) return e;
    throw std::invalid_argument("not a diagram automorphism of the extended group");
}

std::vector<Perm> WeylGroup::automorphisms() const {
    std::vector<Perm> out;
    for (const auto& a : autos_) out.push_back(a.first);
    return out;
}

ExtendedWeylElement WeylGroup::mul(const ExtendedWeylElement& a, const ExtendedWeylElement& b) const {
    ExtendedWeylElement c;
    c.xi = apply(a.wbar, b.xi);
    for (size_t k = 0; k < c.xi.size(); ++k) c.xi[k] += a.xi[k];
    c.wbar = matmul(a.wbar, b.wbar);
    return c;
}

ExtendedWeylElement WeylGroup::inverse(const ExtendedWeylElement& a) const {
    ExtendedWeylElement c;
    c.wbar = matinv(a.wbar);
    c.xi = apply(c.wbar, a.xi);
    for (auto& x : c.xi) x = -x;
    return c;
}

Root WeylGroup::act(const ExtendedWeylElement& w, const Root& r) const {
    auto v = apply(w.wbar, dat_.finite_part(r));
    std::vector<Rat> vr(v.begin(), v.end());
    int m = r.delta_degree() - to_int(fin_pair(vr, w.xi));
    return dat_.from_finite(v, m);
}

Weight WeylGroup::act(const ExtendedWeylElement& w, const Weight& l) const {
    const int n = dat_.n();
    HVec h = dat_.to_hvec(l);
    std::vector<Rat> u(n);
    for (int i = 1; i <= n; ++i) u[i - 1] = h.a[i] - h.a[0] * dat_.marks()[i];
    Rat dco = h.a[0];
    u = apply(w.wbar, u);
    Rat ld = h.lam0 * dat_.comarks()[0]; // (lambda, delta)
    Rat lx = fin_pair(u, w.xi);
    Rat xx = fin_pair(w.xi, w.xi);
    for (int k = 0; k < n; ++k) u[k] += ld * w.xi[k];
    dco -= lx + xx * ld / 2;
    HVec out;
    out.a.assign(dat_.size(), 0);
    out.a[0] = dco;
    for (int i = 1; i <= n; ++i) out.a[i] = u[i - 1] + dco * dat_.marks()[i];
    out.lam0 = h.lam0;
    return dat_.from_hvec(out);
}

std::vector<Rat> WeylGroup::cl_to_fin(const ClWeight& l) const {
    const int n = dat_.n();
    std::vector<Rat> u(n, 0);
    for (int j = 1; j <= n; ++j) {
        if (l.c[j - 1] == 0) continue;
        HVec h = dat_.to_hvec(dat_.level_zero_fundamental(j));
        for (int i = 1; i <= n; ++i) u[i - 1] += l.c[j - 1] * (h.a[i] - h.a[0] * dat_.marks()[i]);
    }
    return u;
}

ClWeight WeylGroup::fin_to_cl(const std::vector<Rat>& v) const {
    const int n = dat_.n();
    ClWeight c;
    c.c.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        Rat s = 0;
        for (int j = 1; j <= n; ++j) s += dat_.cartan()[i][j] * v[j - 1];
        c.c[i - 1] = s / dat_.varpi_scale(i);
    }
    return c;
}

ClWeight WeylGroup::act_cl(const ExtendedWeylElement& w, const ClWeight& l) const {
    return fin_to_cl(apply(w.wbar, cl_to_fin(l)));
}

ClWeight WeylGroup::reflect_cl(int i, const ClWeight& l) const {
    Rat hi = l.c[i - 1] * dat_.varpi_scale(i);
    ClWeight out = l;
    ClWeight ai = dat_.cl(dat_.simple(i));
    for (int j = 0; j < dat_.n(); ++j) out.c[j] -= hi * ai.c[j];
    return out;
}

std::vector<ClWeight> WeylGroup::wcl_orbit(const ClWeight& l) const {
    std::vector<ClWeight> orbit{l};
    std::set<ClWeight> seen{l};
    for (size_t k = 0; k < orbit.size(); ++k)
        for (int i = 1; i <= dat_.n(); ++i) {
            ClWeight m = reflect_cl(i, orbit[k]);
            if (seen.insert(m).second) orbit.push_back(m);
        }
    return orbit;
}

int WeylGroup::length(const ExtendedWeylElement& w) const {
    int len = 0;
    for (const auto& c : classes_) {
        auto wv = apply(w.wbar, c.v);
        std::vector<Rat> wr(wv.begin(), wv.end());
        int shift = to_int(fin_pair(wr, w.xi));
        bool wv_neg = std::all_of(wv.begin(), wv.end(), [](int x) { return x <= 0; });
        for (int m = c.m0; m <= shift; m += c.step)
            if (m < shift || wv_neg) ++len;
    }
    return len;
}

Perm WeylGroup::as_automorphism(const ExtendedWeylElement& w) const {
    Perm p(dat_.size(), -1);
    for (int i = 0; i < dat_.size(); ++i) {
        Root r = act(w, dat_.simple(i));
        for (int j = 0; j < dat_.size(); ++j)
            if (r == dat_.simple(j)) p[i] = j;
        if (p[i] < 0) throw std::logic_error("element does not permute simple roots");
    }
    return p;
}

Decomposition WeylGroup::decompose(const ExtendedWeylElement& w0) const {
    Decomposition d;
    const int n = dat_.n();
    d.xi_omega.resize(n);
    for (int i = 1; i <= n; ++i) {
        std::vector<Rat> ai(n, 0);
        ai[i - 1] = 1;
        d.xi_omega[i - 1] = fin_pair(ai, w0.xi) / dat_.d_node(i);
    }
    auto greedy = [&](ExtendedWeylElement w, int lo, std::vector<int>& out) {
        while (true) {
            auto winv = inverse(w);
            int pick = -1;
            for (int i = lo; i < dat_.size() && pick < 0; ++i)
                if (!dat_.is_positive(act(winv, dat_.simple(i)))) pick = i;
            if (pick < 0) return w;
            out.push_back(pick);
            w = mul(s(pick), w);
        }
    };
    ExtendedWeylElement fin{std::vector<Rat>(n, 0), w0.wbar};
    greedy(fin, 1, d.finite_word);
    d.tau = as_automorphism(greedy(w0, 0, d.affine_word));
    return d;
}

ExtendedWeylElement WeylGroup::recompose(const Decomposition& d) const {
    const int n = dat_.n();
    std::vector<Rat> xi(n, 0);
    for (int i = 1; i <= n; ++i) {
        auto om = omega_tilde(i);
        for (int k = 0; k < n; ++k) xi[k] += d.xi_omega[i - 1] * om.xi[k];
    }
    return mul(translation(xi), word(d.finite_word));
}

bool WeylGroup::is_reduced(const std::vector<int>& letters) const {
    return length(word(letters)) == static_cast<int>(letters.size());
}

HSequence::HSequence(std::vector<int> window, Perm tau) : window_(std::move(window)), tau_(std::move(tau)) {
    tau_inv_.assign(tau_.size(), 0);
    for (size_t i = 0; i < tau_.size(); ++i) tau_inv_[tau_[i]] = static_cast<int>(i);
}

int HSequence::operator[](long k) const {
    const long N = static_cast<long>(window_.size());
    long r = ((k - 1) % N + N) % N; // 0-based position in the window
    long q = (k - 1 - r) / N;
    int i = window_[r];
    for (long t = 0; t < q; ++t) i = tau_[i];
    for (long t = 0; t < -q; ++t) i = tau_inv_[i];
    return i;
}

HSequence omega_word(const WeylGroup& W) {
    const int n = W.n();
    const int sz = n + 1;
    std::vector<int> letters;
    Perm acc(sz);
    for (int i = 0; i < sz; ++i) acc[i] = i;
    // omega~_n ... omega~_1, each written s(word_i) tau_i, with the tau's pushed right.
    for (int i = n; i >= 1; --i) {
        Decomposition d = W.decompose(W.omega_tilde(i));
        for (int l : d.affine_word) letters.push_back(acc[l]);
        Perm next(sz);
        for (int k = 0; k < sz; ++k) next[k] = acc[d.tau[k]];
        acc = next;
    }
    ExtendedWeylElement prod = W.identity();
    for (int i = n; i >= 1; --i) prod = W.mul(prod, W.omega_tilde(i));
    if (!(W.mul(W.word(letters), W.automorphism(acc)) == prod) || !W.is_reduced(letters))
        throw std::logic_error("omega word construction failed");
    return HSequence(letters, acc);
}

Root beta(long k, const HSequence& h, const RootDatum& dat) {
    if (k <= 0) {
        Root r = dat.simple(h[k]);
        for (long j = k + 1; j <= 0; ++j) r = dat.reflect(h[j], r);
        return r;
    }
    Root r = dat.simple(h[k]);
    for (long j = k - 1; j >= 1; --j) r = dat.reflect(h[j], r);
    return r;
}

} // namespace qa
