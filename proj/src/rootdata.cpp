#include "qa/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace qa {

namespace {

IntMatrix blank(int size) {
    IntMatrix a(size, std::vector<int>(size, 0));
    for (int i = 0; i < size; ++i) a[i][i] = 2;
    return a;
}

void link(IntMatrix& a, int i, int j, int aij = -1, int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
    return t;
}

IntMatrix untwisted_cartan(char f, int n) {
    IntMatrix a = blank(n + 1);
    switch (f) {
    case 'A':
        if (n == 1) {
            link(a, 0, 1, -2, -2);
        } else {
            for (int i = 0; i < n; ++i) link(a, i, i + 1);
            link(a, n, 0);
        }
        break;
    case 'B':
        link(a, 0, 2);
        for (int i = 1; i < n - 1; ++i) link(a, i, i + 1);
        link(a, n - 1, n, -1, -2);
        break;
    case 'C':
        link(a, 0, 1, -1, -2);
        for (int i = 1; i < n - 1; ++i) link(a, i, i + 1);
        link(a, n - 1, n, -2, -1);
        break;
    case 'D':
        link(a, 0, 2);
        for (int i = 1; i < n - 1; ++i) link(a, i, i + 1);
        link(a, n - 2, n);
        break;
    case 'E':
        link(a, 1, 3);
        link(a, 2, 4);
        for (int i = 3; i < n; ++i) link(a, i, i + 1);
        link(a, 0, n == 6 ? 2 : (n == 7 ? 1 : 8));
        break;
    case 'F':
        link(a, 0, 1);
        link(a, 1, 2);
        link(a, 2, 3, -1, -2);
        link(a, 3, 4);
        break;
    case 'G':
        link(a, 0, 1);
        link(a, 1, 2, -1, -3);
        break;
    default:
        throw std::invalid_argument("unknown family");
    }
    return a;
}

IntMatrix cartan_of(const AffineType& t) {
    int n = t.rank();
    if (t.r == 1) return untwisted_cartan(t.family, n);
    if (t.is_a2n2()) {
        IntMatrix a = blank(n + 1);
        if (n == 1) {
            link(a, 0, 1, -1, -4);
        } else {
            link(a, 0, 1, -1, -2);
            for (int i = 1; i < n - 1; ++i) link(a, i, i + 1);
            link(a, n - 1, n, -1, -2);
        }
        return a;
    }
    // The remaining twisted types are transposes of untwisted ones.
    if (t.family == 'A') return transpose(untwisted_cartan('B', n));
    if (t.family == 'D' && t.r == 2) return transpose(untwisted_cartan('C', n));
    if (t.family == 'E') return transpose(untwisted_cartan('F', 4));
    if (t.family == 'D' && t.r == 3) return transpose(untwisted_cartan('G', 2));
    throw std::invalid_argument("invalid affine type");
}

// Primitive positive integer vector spanning the kernel of m (one-dimensional).
std::vector<int> kernel_vector(const IntMatrix& m) {
    const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    RatMatrix a(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m[i][j];
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        Rat inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (int i = 0; i < rows; ++i)
            if (i != r && a[i][c] != 0) {
                Rat f = a[i][c];
                for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            }
        pivcol.push_back(c);
        ++r;
    }
    if (r != cols - 1) throw std::logic_error("kernel is not one-dimensional");
    int freec = 0;
    while (std::find(pivcol.begin(), pivcol.end(), freec) != pivcol.end()) ++freec;
    std::vector<Rat> v(cols, 0);
    v[freec] = 1;
    for (int k = 0; k < r; ++k) v[pivcol[k]] = -a[k][freec];
    mpz_class l = 1;
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> z(cols);
    mpz_class g = 0;
    for (int j = 0; j < cols; ++j) {
        Rat t = v[j] * l;
        z[j] = t.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[j].get_mpz_t());
    }
    std::vector<int> out(cols);
    for (int j = 0; j < cols; ++j) out[j] = static_cast<int>(mpz_class(z[j] / g).get_si());
    if (out[0] < 0)
        for (auto& x : out) x = -x;
    return out;
}

// Solves the finite Cartan system sum_{i>=1} a_{ji} x_i = rhs_j, j >= 1.
std::vector<Rat> solve_finite(const IntMatrix& cart, const std::vector<Rat>& rhs) {
    const int n = static_cast<int>(rhs.size());
    RatMatrix a(n, std::vector<Rat>(n + 1));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a[j][i] = cart[j + 1][i + 1];
        a[j][n] = rhs[j];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        Rat inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (int i = 0; i < n; ++i)
            if (i != c && a[i][c] != 0) {
                Rat f = a[i][c];
                for (int j = 0; j <= n; ++j) a[i][j] -= f * a[c][j];
            }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

} // namespace

int AffineType::rank() const {
    if (r == 1) return N;
    if (family == 'A') return N % 2 == 0 ? N / 2 : (N + 1) / 2;
    if (family == 'D' && r == 2) return N - 1;
    if (family == 'E') return 4;
    if (family == 'D' && r == 3) return 2;
    return 0;
}

bool AffineType::valid() const {
    if (r == 1) {
        switch (family) {
        case 'A': return N >= 1;
        case 'B': return N >= 3;
        case 'C': return N >= 2;
        case 'D': return N >= 4;
        case 'E': return N >= 6 && N <= 8;
        case 'F': return N == 4;
        case 'G': return N == 2;
        default: return false;
        }
    }
    if (r == 2) {
        if (family == 'A') return (N % 2 == 0 && N >= 2) || (N % 2 == 1 && N >= 5);
        if (family == 'D') return N >= 3;
        if (family == 'E') return N == 6;
        return false;
    }
    if (r == 3) return family == 'D' && N == 4;
    return false;
}

std::string AffineType::name() const { return std::string(1, family) + std::to_string(N) + "~" + std::to_string(r); }

AffineType AffineType::parse(const std::string& s) {
    auto tilde = s.find('~');
    if (s.size() < 2 || tilde == std::string::npos || tilde < 2)
        throw std::invalid_argument("type must look like A2~1: " + s);
    AffineType t;
    t.family = s[0];
    try {
        size_t used = 0;
        t.N = std::stoi(s.substr(1, tilde - 1), &used);
        if (used != tilde - 1) throw std::invalid_argument("");
        t.r = std::stoi(s.substr(tilde + 1), &used);
        if (used != s.size() - tilde - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("type must look like A2~1: " + s);
    }
    if (!t.valid()) throw std::invalid_argument("not an affine Dynkin type: " + s);
    return t;
}

std::vector<AffineType> all_affine_types(int max_rank) {
    std::vector<AffineType> out;
    auto add = [&](char f, int N, int r) {
        AffineType t{f, N, r};
        if (t.valid() && t.rank() >= 1 && t.rank() <= max_rank) out.push_back(t);
    };
    for (int N = 1; N <= max_rank; ++N) add('A', N, 1);
    for (int N = 3; N <= max_rank; ++N) add('B', N, 1);
    for (int N = 2; N <= max_rank; ++N) add('C', N, 1);
    for (int N = 4; N <= max_rank; ++N) add('D', N, 1);
    for (int N = 6; N <= 8; ++N) add('E', N, 1);
    add('F', 4, 1);
    add('G', 2, 1);
    for (int N = 2; N <= 2 * max_rank; ++N) add('A', N, 2);
    for (int N = 3; N <= max_rank + 1; ++N) add('D', N, 2);
    add('E', 6, 2);
    add('D', 4, 3);
    return out;
}

RootDatum::RootDatum(AffineType t) : type_(t) {
    if (!t.valid()) throw std::invalid_argument("invalid affine type " + t.name());
    n_ = t.rank();
    cartan_ = cartan_of(t);
    marks_ = kernel_vector(cartan_);
    comarks_ = kernel_vector(transpose(cartan_));
    const int sz = n_ + 1;
    gram_.assign(sz, std::vector<Rat>(sz));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) gram_[i][j] = frac(comarks_[i] * cartan_[i][j], marks_[i]);
    d_ = 1;
    auto fits = [&](int d) {
        for (int i = 0; i < sz; ++i)
            if (Rat(d * gram_[i][i] / 2).get_den() != 1) return false;
        return true;
    };
    while (!fits(d_)) ++d_;
    qexp_.resize(sz);
    dnode_.resize(sz);
    for (int i = 0; i < sz; ++i) {
        Rat half = gram_[i][i] / 2;
        qexp_[i] = static_cast<int>(Rat(d_ * half).get_num().get_si());
        Rat dd = half > 1 ? half : Rat(1);
        dnode_[i] = static_cast<int>(dd.get_num().get_si());
    }
    h_ = std::accumulate(marks_.begin(), marks_.end(), 0);
    hv_ = std::accumulate(comarks_.begin(), comarks_.end(), 0);
    vscale_.assign(sz, 1);
    for (int i = 1; i < sz; ++i) vscale_[i] = comarks_[0] / std::gcd(comarks_[0], comarks_[i]);
    clgram_.assign(n_, std::vector<Rat>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            clgram_[i][j] = pair(level_zero_fundamental(i + 1), level_zero_fundamental(j + 1));
}

Root RootDatum::simple(int i) const {
    Root r{std::vector<int>(size(), 0)};
    r.c[i] = 1;
    return r;
}

Root RootDatum::delta() const { return Root{marks_}; }

Rat RootDatum::pair(const Root& a, const Root& b) const {
    Rat s = 0;
    for (int i = 0; i < size(); ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < size(); ++j)
            if (b.c[j] != 0) s += gram_[i][j] * a.c[i] * b.c[j];
    }
    return s;
}

int RootDatum::coroot_pair(int i, const Root& a) const {
    int s = 0;
    for (int j = 0; j < size(); ++j) s += cartan_[i][j] * a.c[j];
    return s;
}

Root RootDatum::reflect(int i, const Root& a) const {
    Root r = a;
    r.c[i] -= coroot_pair(i, a);
    return r;
}

bool RootDatum::is_positive(const Root& a) const {
    bool nz = false;
    for (int x : a.c) {
        if (x < 0) return false;
        nz |= x != 0;
    }
    return nz;
}

std::vector<int> RootDatum::finite_part(const Root& a) const {
    std::vector<int> v(n_);
    for (int i = 1; i <= n_; ++i) v[i - 1] = a.c[i] - a.c[0] * marks_[i];
    return v;
}

Root RootDatum::from_finite(const std::vector<int>& v, int m) const {
    Root r{std::vector<int>(size(), 0)};
    r.c[0] = m;
    for (int i = 1; i <= n_; ++i) r.c[i] = v[i - 1] + m * marks_[i];
    return r;
}

Weight RootDatum::fundamental(int i) const {
    Weight w{std::vector<int>(size(), 0), 0};
    w.h[i] = 1;
    return w;
}

Weight RootDatum::level_zero_fundamental(int i) const {
    Weight w{std::vector<int>(size(), 0), 0};
    int c = vscale_[i];
    w.h[i] = c;
    w.h[0] = -c * comarks_[i] / comarks_[0];
    return w;
}

Weight RootDatum::delta_weight() const { return root_weight(delta()); }

Weight RootDatum::root_weight(const Root& a) const {
    Weight w{std::vector<int>(size(), 0), a.c[0]};
    for (int j = 0; j < size(); ++j) w.h[j] = coroot_pair(j, a);
    return w;
}

HVec RootDatum::to_hvec(const Weight& w) const {
    HVec v;
    v.a.assign(size(), 0);
    v.a[0] = w.d;
    std::vector<Rat> rhs(n_);
    for (int j = 1; j <= n_; ++j) rhs[j - 1] = Rat(w.h[j]) - cartan_[j][0] * w.d;
    auto x = solve_finite(cartan_, rhs);
    for (int i = 1; i <= n_; ++i) v.a[i] = x[i - 1];
    Rat y = w.h[0];
    for (int i = 0; i < size(); ++i) y -= cartan_[0][i] * v.a[i];
    v.lam0 = y;
    return v;
}

Weight RootDatum::from_hvec(const HVec& v) const {
    Weight w{std::vector<int>(size(), 0), v.a[0]};
    for (int j = 0; j < size(); ++j) {
        Rat s = j == 0 ? v.lam0 : Rat(0);
        for (int i = 0; i < size(); ++i) s += cartan_[j][i] * v.a[i];
        if (s.get_den() != 1) throw std::domain_error("vector is not an integral weight");
        w.h[j] = static_cast<int>(s.get_num().get_si());
    }
    return w;
}

Rat RootDatum::pair(const HVec& a, const HVec& b) const {
    Rat s = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) s += a.a[i] * b.a[j] * gram_[i][j];
    // (Lambda_0, alpha_i) = delta_{i0} (alpha_0, alpha_0) / 2 and (Lambda_0, Lambda_0) = 0
    Rat l0 = gram_[0][0] / 2;
    s += a.lam0 * b.a[0] * l0 + b.lam0 * a.a[0] * l0;
    return s;
}

Rat RootDatum::pair(const Weight& a, const Weight& b) const { return pair(to_hvec(a), to_hvec(b)); }

int RootDatum::level(const Weight& w) const {
    int s = 0;
    for (int i = 0; i < size(); ++i) s += comarks_[i] * w.h[i];
    return s;
}

ClWeight RootDatum::cl(const Weight& w) const {
    ClWeight c;
    c.c.resize(n_);
    for (int i = 1; i <= n_; ++i) c.c[i - 1] = frac(w.h[i], vscale_[i]);
    return c;
}

ClWeight RootDatum::cl(const Root& a) const { return cl(root_weight(a)); }

Rat RootDatum::cl_pair(const ClWeight& a, const ClWeight& b) const {
    Rat s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += a.c[i] * b.c[j] * clgram_[i][j];
    return s;
}

int q_i_exponent(const RootDatum& dat, int i) { return dat.qexp(i); }

LaurentPoly q_binomial(int n, int r, int i, const RootDatum& dat) { return q_binomial_exp(n, r, dat.qexp(i)); }

bool is_real_root(const Root& r0, const RootDatum& dat) {
    Root r = r0;
    bool any = false, pos = true, neg = true;
    for (int x : r.c) {
        any |= x != 0;
        pos &= x >= 0;
        neg &= x <= 0;
    }
    if (!any) throw std::invalid_argument("zero is not a root");
    if (!pos && !neg) return false;
    if (neg)
        for (auto& x : r.c) x = -x;
    while (true) {
        int height = std::accumulate(r.c.begin(), r.c.end(), 0);
        if (height == 1) return true;
        int pick = -1;
        for (int i = 0; i < dat.size(); ++i)
            if (dat.coroot_pair(i, r) > 0) {
                pick = i;
                break;
            }
        if (pick < 0) return false;
        r = dat.reflect(pick, r);
        if (!dat.is_positive(r)) return false;
    }
}

Rat d_alpha(const Root& r, const RootDatum& dat) {
    if (!is_real_root(r, dat)) throw std::invalid_argument("d_alpha needs a real root");
    Rat half = dat.pair(r, r) / 2;
    return half > 1 ? half : Rat(1);
}

std::vector<Root> positive_real_roots(const RootDatum& dat, int cutoff) {
    std::set<Root> seen;
    std::queue<Root> todo;
    for (int i = 0; i < dat.size(); ++i) {
        Root s = dat.simple(i);
        if (s.delta_degree() <= cutoff) {
            seen.insert(s);
            todo.push(s);
        }
    }
    while (!todo.empty()) {
        Root r = todo.front();
        todo.pop();
        for (int i = 0; i < dat.size(); ++i) {
            if (dat.coroot_pair(i, r) >= 0) continue;
            Root s = dat.reflect(i, r);
            if (s.delta_degree() > cutoff) continue;
            if (seen.insert(s).second) todo.push(s);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<ClassifiedRoot> enumerate_positive_roots(const RootDatum& dat, int cutoff) {
    std::vector<ClassifiedRoot> out;
    for (const Root& r : positive_real_roots(dat, cutoff)) {
        auto v = dat.finite_part(r);
        bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
        out.push_back({nonneg ? RootClass::Greater : RootClass::Less, r});
    }
    for (int m = 1; m <= cutoff; ++m)
        for (int i = 1; i <= dat.n(); ++i)
            if (m % dat.d_node(i) == 0) {
                Root md = dat.delta();
                for (auto& x : md.c) x *= m;
                out.push_back({RootClass::Zero, md, m, i});
            }
    return out;
}

ClWeight tilde_alpha(const Root& r, const RootDatum& dat) {
    if (!is_real_root(r, dat)) throw std::invalid_argument("tilde_alpha needs a real root");
    ClWeight c = dat.cl(r);
    Rat len = dat.pair(r, r);
    Rat scale = 1;
    const AffineType& t = dat.type();
    if (t.untwisted())
        scale = 2 / len;
    else if (t.is_a2n2() && len == 4)
        scale = Rat(1, 2);
    for (auto& x : c.c) x *= scale;
    return c;
}

Section Section::lowest(const RootDatum& dat) { return Section{std::vector<Rat>(dat.n(), 0)}; }

Weight Section::lift(const ClWeight& w, const RootDatum& dat) const {
    HVec acc;
    acc.a.assign(dat.size(), 0);
    for (int i = 1; i <= dat.n(); ++i) {
        if (w.c[i - 1] == 0) continue;
        HVec v = dat.to_hvec(dat.level_zero_fundamental(i));
        for (int k = 0; k < dat.size(); ++k) v.a[k] += offsets[i - 1] * dat.marks()[k];
        for (int k = 0; k < dat.size(); ++k) acc.a[k] += w.c[i - 1] * v.a[k];
        acc.lam0 += w.c[i - 1] * v.lam0;
    }
    return dat.from_hvec(acc);
}

} // namespace qa
