#include "qa/uplus.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qa {

// ---------------------------------------------------------------- AlgElement

AlgElement::AlgElement(const RationalFunc& c) {
    if (!c.is_zero()) t_[Word()] = c;
}

AlgElement AlgElement::word(const Word& w, const RationalFunc& c) {
    AlgElement x;
    x.add(w, c);
    return x;
}

void AlgElement::add(const Word& w, const RationalFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
}

AlgElement& AlgElement::operator*=(const RationalFunc& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [w, v] : t_) v *= c;
    return *this;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
    AlgElement out;
    for (const auto& [u, x] : a.t_)
        for (const auto& [v, y] : b.t_) out.add(u + v, x * y);
    return out;
}

AlgElement AlgElement::operator-() const {
    AlgElement out = *this;
    for (auto& [w, v] : out.t_) v = -v;
    return out;
}

AlgElement AlgElement::star() const {
    AlgElement out;
    for (const auto& [w, c] : t_) out.add(Word(w.rbegin(), w.rend()), c);
    return out;
}

AlgElement AlgElement::bar() const {
    AlgElement out;
    for (const auto& [w, c] : t_) out.t_[w] = c.bar();
    return out;
}

AlgElement AlgElement::pow(int n) const {
    AlgElement out(RationalFunc(1));
    for (int k = 0; k < n; ++k) out = out * *this;
    return out;
}

std::string AlgElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (w.empty()) continue;
        for (char l : w) os << "*E" << (l - '0');
    }
    return os.str();
}

Root word_weight(const Word& w, int size) {
    Root r{std::vector<int>(size, 0)};
    for (char l : w) ++r.c[l - '0'];
    return r;
}

// --------------------------------------------------------------------- UPlus

UPlus::UPlus(const RootDatum& dat) : dat_(dat) {
    const int sz = dat_.size();
    gd_.assign(sz, std::vector<int>(sz, 0));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            Rat v = dat_.gram()[i][j] * dat_.d();
            if (v.get_den() != 1) throw std::logic_error("d * gram is not integral");
            gd_[i][j] = static_cast<int>(v.get_num().get_si());
        }
}

int UPlus::pair_d(const Root& a, const Root& b) const {
    int s = 0;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i])
            for (size_t j = 0; j < b.c.size(); ++j) s += a.c[i] * b.c[j] * gd_[i][j];
    return s;
}

AlgElement UPlus::divided_power(int i, int n) const {
    Word w(static_cast<size_t>(n), static_cast<char>('0' + i));
    return AlgElement::word(w, RationalFunc(1, q_factorial(n, dat_.qexp(i))));
}

namespace {

// Sum over the letters i of w, weighted by q_s to the given exponent.
template <class F>
void for_each_letter(const Word& w, int i, F&& f) {
    for (size_t p = 0; p < w.size(); ++p)
        if (w[p] == '0' + i) f(p, w.substr(0, p) + w.substr(p + 1));
}

} // namespace

AlgElement UPlus::r(int i, const AlgElement& x) const {
    AlgElement out;
    Root ai = dat_.simple(i);
    for (const auto& [w, c] : x.terms())
        for_each_letter(w, i, [&](size_t p, const Word& rest) {
            int e = pair_d(weight(w.substr(p + 1)), ai);
            out += AlgElement::word(rest, c * RationalFunc::q_pow(e));
        });
    return out;
}

AlgElement UPlus::ir(int i, const AlgElement& x) const {
    AlgElement out;
    Root ai = dat_.simple(i);
    for (const auto& [w, c] : x.terms())
        for_each_letter(w, i, [&](size_t p, const Word& rest) {
            int e = pair_d(weight(w.substr(0, p)), ai);
            out += AlgElement::word(rest, c * RationalFunc::q_pow(e));
        });
    return out;
}

// (E_i y, x) = (1 - q_i^{-2})^{-1} (y, _i r(x)); this is the polynomial part.
LaurentPoly UPlus::form_poly(const Word& a, const Word& b) const {
    if (a.empty()) return b.empty() ? LaurentPoly(1) : LaurentPoly();
    const std::string key = a + "|" + b;
    {
        std::lock_guard lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    const int i = a[0] - '0';
    const Word y = a.substr(1);
    Root ai = dat_.simple(i);
    LaurentPoly s;
    for_each_letter(b, i, [&](size_t p, const Word& rest) {
        LaurentPoly sub = form_poly(y, rest);
        if (!sub.is_zero()) s += sub.shifted(pair_d(weight(b.substr(0, p)), ai));
    });
    std::lock_guard lock(mu_);
    memo_.emplace(key, s);
    return s;
}

RationalFunc UPlus::form(const Word& a, const Word& b) const {
    if (a.size() != b.size() || weight(a) != weight(b)) return RationalFunc();
    LaurentPoly p = form_poly(a, b);
    if (p.is_zero()) return RationalFunc();
    LaurentPoly den(1);
    for (char l : a) den *= LaurentPoly(1) - LaurentPoly::monomial(-2 * dat_.qexp(l - '0'));
    return RationalFunc(p, den);
}

RationalFunc UPlus::form(const AlgElement& x, const AlgElement& y) const {
    RationalFunc s;
    for (const auto& [u, a] : x.terms())
        for (const auto& [v, b] : y.terms()) {
            RationalFunc f = form(u, v);
            if (!f.is_zero()) s += a * b * f;
        }
    return s;
}

std::vector<Word> UPlus::words_of_weight(const Root& nu) const {
    Word w;
    for (int i = 0; i < dat_.size(); ++i) w += Word(static_cast<size_t>(std::max(nu.c[i], 0)), static_cast<char>('0' + i));
    std::vector<Word> out;
    std::sort(w.begin(), w.end());
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

RFMatrix UPlus::gram_matrix(const Root& nu) const {
    auto ws = words_of_weight(nu);
    RFMatrix g(ws.size(), std::vector<RationalFunc>(ws.size()));
    for (size_t a = 0; a < ws.size(); ++a)
        for (size_t b = a; b < ws.size(); ++b) g[a][b] = g[b][a] = form(ws[a], ws[b]);
    return g;
}

int UPlus::dimension(const Root& nu) const { return rank(gram_matrix(nu)); }

bool UPlus::equal(const AlgElement& x, const AlgElement& y) const {
    AlgElement z = x - y;
    std::map<Root, AlgElement> parts;
    for (const auto& [w, c] : z.terms()) parts[weight(w)] += AlgElement::word(w, c);
    for (const auto& [nu, part] : parts)
        for (const auto& w : words_of_weight(nu))
            if (!form(part, AlgElement::word(w)).is_zero()) return false;
    return true;
}

AlgElement UPlus::braid_on_generator(int i, int j, bool inverse) const {
    if (i == j) throw NotComputable("T_i(E_i) does not lie in U^+");
    const int a = -dat_.coroot_pair(i, dat_.simple(j));
    const int e = dat_.qexp(i);
    AlgElement out;
    for (int r = 0; r <= a; ++r) {
        int s = a - r;
        RationalFunc c = RationalFunc::q_pow(-r * e);
        if (r % 2) c = -c;
        AlgElement left = divided_power(i, inverse ? r : s), right = divided_power(i, inverse ? s : r);
        out += c * (left * AlgElement::gen(j) * right);
    }
    return out;
}

AlgElement UPlus::braid_apply(int i, const AlgElement& x, bool inverse) const {
    std::vector<std::optional<AlgElement>> img(dat_.size());
    AlgElement out;
    for (const auto& [w, c] : x.terms()) {
        AlgElement t(c);
        for (char l : w) {
            int j = l - '0';
            if (j == i)
                throw NotComputable("braid operator T_" + std::to_string(i) + " met the letter E_" +
                                    std::to_string(i));
            if (!img[j]) img[j] = braid_on_generator(i, j, inverse);
            t = t * *img[j];
        }
        out += t;
    }
    return out;
}

AlgElement UPlus::serre(int i, int j) const {
    const int a = 1 - dat_.coroot_pair(i, dat_.simple(j));
    AlgElement out;
    for (int r = 0; r <= a; ++r) {
        AlgElement t = divided_power(i, r) * AlgElement::gen(j) * divided_power(i, a - r);
        out += (r % 2 ? RationalFunc(-1) : RationalFunc(1)) * t;
    }
    return out;
}

// ------------------------------------------------------------ linear algebra

int rank(RFMatrix m) {
    const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        RationalFunc inv = m[r][c].inverse();
        for (size_t k = r + 1; k < rows; ++k) {
            if (m[k][c].is_zero()) continue;
            RationalFunc f = m[k][c] * inv;
            for (size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<std::vector<RationalFunc>> solve(RFMatrix m, std::vector<RationalFunc> b) {
    const size_t n = m.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(b[piv], b[c]);
        RationalFunc inv = m[c][c].inverse();
        for (size_t k = 0; k < n; ++k) {
            if (k == c || m[k][c].is_zero()) continue;
            RationalFunc f = m[k][c] * inv;
            for (size_t j = c; j < n; ++j) m[k][j] -= f * m[c][j];
            b[k] -= f * b[c];
        }
    }
    for (size_t c = 0; c < n; ++c) b[c] /= m[c][c];
    return b;
}

// ------------------------------------------------------------------ PBWIndex

bool PBWIndex::real_plus(int p) const {
    return std::any_of(c.begin(), c.end(), [p](const auto& kv) { return kv.first <= p && kv.second; });
}

bool PBWIndex::real_minus(int p) const {
    return std::any_of(c.begin(), c.end(), [p](const auto& kv) { return kv.first > p && kv.second; });
}

std::string PBWIndex::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : c) {
        if (!v) continue;
        if (!first) os << ",";
        first = false;
        os << k << ":" << v;
    }
    os << "|";
    for (size_t i = 0; i < c0.size(); ++i) os << (i ? "," : "") << c0[i].str();
    os << "}";
    return os.str();
}

namespace {

// (c(p), c(p-1), ...) and (c(p+1), c(p+2), ...) over a common range.
std::pair<std::vector<int>, std::vector<int>> split(const PBWIndex& x, int p, int lo, int hi) {
    std::vector<int> plus, minus;
    for (int k = p; k >= lo; --k) plus.push_back(x.at(k));
    for (int k = p + 1; k <= hi; ++k) minus.push_back(x.at(k));
    return {plus, minus};
}

void key_range(const PBWIndex& a, const PBWIndex& b, int p, int& lo, int& hi) {
    lo = p;
    hi = p + 1;
    for (const auto* x : {&a, &b})
        for (const auto& [k, v] : x->c) {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
}

} // namespace

bool precedes(const PBWIndex& a, const PBWIndex& b, int p) {
    int lo, hi;
    key_range(a, b, p, lo, hi);
    auto [ap, am] = split(a, p, lo, hi);
    auto [bp, bm] = split(b, p, lo, hi);
    if (ap > bp || am > bm) return false;
    return ap < bp || am < bm;
}

// ----------------------------------------------------------------------- PBW

PBW::PBW(const UPlus& U, HSequence h, BraidConvention conv) : U_(U), h_(std::move(h)), conv_(conv) {}

Root PBW::root(int k, int p) const {
    const auto& D = U_.datum();
    Root r = D.simple(h_[k]);
    if (k <= p)
        for (int j = k + 1; j <= p; ++j) r = D.reflect(h_[j], r);
    else
        for (int j = k - 1; j >= p + 1; --j) r = D.reflect(h_[j], r);
    return r;
}

int PBW::bound(const Root& nu) const { return h_.N() * (nu.delta_degree() + 3) + 2 * h_.N(); }

int PBW::find_root(const Root& r, int p) const {
    const int B = bound(r);
    for (int t = 0; t <= B; ++t)
        for (int k : {p - t, p + 1 + t})
            if (root(k, p) == r) return k;
    throw std::out_of_range("root not reached by the h-sequence");
}

AlgElement PBW::fallback(const Root& beta, int letter) const {
    if (U_.dimension(beta) != 1)
        throw NotComputable("root vector needs a braid step outside U^+ and its weight space is not one-dimensional");
    RationalFunc norm_e = U_.form(AlgElement::gen(letter), AlgElement::gen(letter));
    for (const auto& w : U_.words_of_weight(beta)) {
        RationalFunc nw = U_.form(w, w);
        if (nw.is_zero()) continue;
        RationalFunc sq = norm_e / nw;
        auto sn = sq.num().sqrt();
        auto sd = sq.den().sqrt();
        if (!sn || !sd) throw NotComputable("normalizing scalar of a root vector is not a square");
        LaurentPoly num = *sn, den = *sd;
        if (num.leading() < 0) num = -num;
        if (den.leading() < 0) den = -den;
        return AlgElement::word(w, RationalFunc(num, den));
    }
    throw std::logic_error("one-dimensional weight space without a nonzero word");
}

namespace {

int simple_index(const Root& r) {
    int l = -1;
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (r.c[i] == 0) continue;
        if (r.c[i] != 1 || l >= 0) return -1;
        l = static_cast<int>(i);
    }
    return l;
}

} // namespace

AlgElement PBW::chain_vector(int k, int p) const {
    {
        std::lock_guard lock(mu_);
        auto it = chain_cache_.find({k, p});
        if (it != chain_cache_.end()) return it->second;
    }
    const bool inv_plus = conv_ == BraidConvention::InverseForNonPositive;
    const auto& D = U_.datum();
    AlgElement x = AlgElement::gen(h_[k]);
    Root r = D.simple(h_[k]);
    // T_w(E_i) = E_l whenever w(alpha_i) = alpha_l along a reduced chain.
    auto step = [&](int j, bool inv) {
        r = D.reflect(h_[j], r);
        int l = simple_index(r);
        x = l >= 0 ? AlgElement::gen(l) : U_.braid_apply(h_[j], x, inv);
    };
    try {
        if (k <= p)
            for (int j = k + 1; j <= p; ++j) step(j, inv_plus);
        else
            for (int j = k - 1; j >= p + 1; --j) step(j, !inv_plus);
    } catch (const NotComputable&) {
        x = fallback(root(k, p), h_[k]);
    }
    std::lock_guard lock(mu_);
    chain_cache_.emplace(std::make_pair(k, p), x);
    return x;
}

AlgElement PBW::real_root_vector(int k) const { return chain_vector(k, 0); }

AlgElement PBW::psi_tilde(int i, int k) const {
    const auto& D = U_.datum();
    Root im = D.delta();
    for (auto& v : im.c) v *= k * D.d_node(i);
    Root lower = im;
    lower.c[i] -= 1;
    int kp = find_root(lower, 0), k0 = find_root(D.simple(i), 0);
    if (kp <= 0 || k0 > 0) throw std::logic_error("unexpected position of a root in the h-sequence");
    AlgElement a = real_root_vector(kp), b = real_root_vector(k0);
    return a * b - RationalFunc::q_pow(-2 * D.qexp(i)) * (b * a);
}

AlgElement PBW::p_tilde(int i, int k) const {
    if (k == 0) return AlgElement(RationalFunc(1));
    {
        std::lock_guard lock(mu_);
        auto it = ptilde_cache_.find({i, k});
        if (it != ptilde_cache_.end()) return it->second;
    }
    const auto& D = U_.datum();
    const int e = D.qexp(i);
    const bool special = D.type().is_a2n2() && i == D.n();
    AlgElement s;
    for (int t = 1; t <= k; ++t) {
        int ex = special ? 2 * (t - k) * e : (t - k) * e;
        s += RationalFunc::q_pow(ex) * (psi_tilde(i, t) * p_tilde(i, k - t));
    }
    LaurentPoly qk = LaurentPoly::q_int(special ? 2 * k : k, e);
    s *= RationalFunc(LaurentPoly(1), qk);
    std::lock_guard lock(mu_);
    ptilde_cache_.emplace(std::make_pair(i, k), s);
    return s;
}

AlgElement PBW::schur(const std::vector<Partition>& c0) const {
    AlgElement out(RationalFunc(1));
    for (size_t idx = 0; idx < c0.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        Partition rho = transposed_schur ? c0[idx] : c0[idx].transpose();
        const int t = rho.length();
        if (t == 0) continue;
        auto entry = [&](int r, int m) -> AlgElement {
            int k = rho[r] - r + m;
            if (k < 0) return AlgElement();
            return p_tilde(i, k);
        };
        // Laplace expansion along the first row, entries commute in U^+.
        std::function<AlgElement(std::vector<int>, int)> det = [&](std::vector<int> cols, int row) -> AlgElement {
            if (cols.empty()) return AlgElement(RationalFunc(1));
            AlgElement s;
            for (size_t a = 0; a < cols.size(); ++a) {
                AlgElement e = entry(row, cols[a]);
                if (e.is_zero()) continue;
                std::vector<int> rest = cols;
                rest.erase(rest.begin() + static_cast<long>(a));
                AlgElement term = e * det(rest, row + 1);
                if (a % 2) s -= term;
                else s += term;
            }
            return s;
        };
        std::vector<int> cols(t);
        std::iota(cols.begin(), cols.end(), 0);
        out = out * det(cols, 0);
    }
    return out;
}

AlgElement PBW::middle(const std::vector<Partition>& c0, int p) const {
    AlgElement s = schur(c0);
    if (p == 0 || s.terms().size() == 1 && s.terms().begin()->first.empty()) return s;
    const bool inv_plus = conv_ == BraidConvention::InverseForNonPositive;
    if (p < 0)
        for (int j = 0; j >= p + 1; --j) s = U_.braid_apply(h_[j], s, !inv_plus);
    else
        for (int j = 1; j <= p; ++j) s = U_.braid_apply(h_[j], s, inv_plus);
    return s;
}

AlgElement PBW::element(const PBWIndex& c, int p) const {
    if (std::abs(p) > h_.N()) throw std::invalid_argument("frame p must satisfy |p| <= N");
    const auto& D = U_.datum();
    auto power = [&](int k, int m) {
        AlgElement x = chain_vector(k, p).pow(m);
        return x * RationalFunc(LaurentPoly(1), q_factorial(m, D.qexp(h_[k])));
    };
    AlgElement out(RationalFunc(1));
    // E_{c+}: positions p, p-1, ... from left to right.
    for (auto it = c.c.rbegin(); it != c.c.rend(); ++it)
        if (it->first <= p && it->second) out = out * power(it->first, it->second);
    out = out * middle(c.c0, p);
    // E_{c-}: positions ..., p+2, p+1 from left to right.
    for (auto it = c.c.rbegin(); it != c.c.rend(); ++it)
        if (it->first > p && it->second) out = out * power(it->first, it->second);
    return out;
}

Root PBW::index_weight(const PBWIndex& c, int p) const {
    const auto& D = U_.datum();
    Root w{std::vector<int>(D.size(), 0)};
    for (const auto& [k, m] : c.c) {
        Root r = root(k, p);
        for (int i = 0; i < D.size(); ++i) w.c[i] += m * r.c[i];
    }
    for (size_t idx = 0; idx < c.c0.size(); ++idx) {
        int t = c.c0[idx].size() * D.d_node(static_cast<int>(idx) + 1);
        for (int i = 0; i < D.size(); ++i) w.c[i] += t * D.marks()[i];
    }
    return w;
}

std::vector<PBWIndex> PBW::indices_at_weight(const Root& nu, int p) const {
    if (std::abs(p) > h_.N()) throw std::invalid_argument("frame p must satisfy |p| <= N");
    const auto& D = U_.datum();
    const int sz = D.size(), n = D.n();
    auto leq = [&](const Root& a, const Root& b) {
        for (int i = 0; i < sz; ++i)
            if (a.c[i] > b.c[i]) return false;
        return true;
    };
    std::vector<std::pair<int, Root>> cand;
    const int B = bound(nu);
    for (int k = p - B; k <= p + B; ++k) {
        Root r = root(k, p);
        if (leq(r, nu)) cand.emplace_back(k, r);
    }
    std::vector<PBWIndex> out;
    PBWIndex cur;
    cur.c0.assign(n, Partition());
    // Imaginary remainder t delta split as sum_i m_i d_i.
    auto imaginary = [&](const Root& rest) {
        int t = rest.c[0];
        for (int i = 0; i < sz; ++i)
            if (rest.c[i] != t * D.marks()[i]) return;
        std::function<void(int, int)> go = [&](int i, int left) {
            if (i > n) {
                if (left == 0) out.push_back(cur);
                return;
            }
            const int di = D.d_node(i);
            for (int m = 0; m * di <= left; ++m)
                for (const auto& part : partitions_of(m)) {
                    cur.c0[i - 1] = part;
                    go(i + 1, left - m * di);
                }
            cur.c0[i - 1] = Partition();
        };
        go(1, t);
    };
    std::function<void(size_t, Root)> rec = [&](size_t idx, Root rest) {
        if (idx == cand.size()) {
            imaginary(rest);
            return;
        }
        rec(idx + 1, rest);
        const auto& [k, r] = cand[idx];
        int m = 0;
        while (true) {
            for (int i = 0; i < sz; ++i) rest.c[i] -= r.c[i];
            if (std::any_of(rest.c.begin(), rest.c.end(), [](int v) { return v < 0; })) break;
            ++m;
            cur.c[k] = m;
            rec(idx + 1, rest);
        }
        cur.c.erase(k);
    };
    rec(0, nu);
    // A linear extension of the order attached to p.
    std::sort(out.begin(), out.end(), [&](const PBWIndex& a, const PBWIndex& b) {
        int lo, hi;
        key_range(a, b, p, lo, hi);
        auto ka = split(a, p, lo, hi), kb = split(b, p, lo, hi);
        if (ka != kb) return ka < kb;
        return a.c0 < b.c0;
    });
    return out;
}

std::shared_ptr<const PBW::Frame> PBW::frame(const Root& nu, int p) const {
    {
        std::lock_guard lock(mu_);
        auto it = frames_.find({nu, p});
        if (it != frames_.end()) return it->second;
    }
    auto f = std::make_shared<Frame>();
    f->indices = indices_at_weight(nu, p);
    f->words = U_.words_of_weight(nu);
    for (const auto& c : f->indices) f->elements.push_back(element(c, p));
    const size_t m = f->indices.size();
    f->dual.assign(m, std::vector<RationalFunc>(f->words.size()));
    for (size_t a = 0; a < m; ++a)
        for (size_t w = 0; w < f->words.size(); ++w)
            f->dual[a][w] = U_.form(f->elements[a], AlgElement::word(f->words[w]));
    std::map<Word, size_t> wpos;
    for (size_t w = 0; w < f->words.size(); ++w) wpos[f->words[w]] = w;
    f->gram.assign(m, std::vector<RationalFunc>(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            RationalFunc s;
            for (const auto& [w, c] : f->elements[b].terms()) s += c * f->dual[a][wpos.at(w)];
            f->gram[a][b] = s;
        }
    std::lock_guard lock(mu_);
    frames_.emplace(std::make_pair(nu, p), f);
    return f;
}

RFMatrix PBW::pbw_gram(const Root& nu, int p) const { return frame(nu, p)->gram; }

std::map<PBWIndex, RationalFunc> PBW::expand(const AlgElement& x, const Root& nu, int p) const {
    auto f = frame(nu, p);
    const size_t m = f->indices.size();
    std::map<Word, size_t> wpos;
    for (size_t w = 0; w < f->words.size(); ++w) wpos[f->words[w]] = w;
    std::vector<RationalFunc> rhs(m);
    for (size_t a = 0; a < m; ++a)
        for (const auto& [w, c] : x.terms()) {
            auto it = wpos.find(w);
            if (it != wpos.end()) rhs[a] += c * f->dual[a][it->second];
        }
    auto sol = solve(f->gram, rhs);
    if (!sol) throw std::logic_error("PBW elements at this weight are linearly dependent");
    std::map<PBWIndex, RationalFunc> out;
    for (size_t a = 0; a < m; ++a)
        if (!(*sol)[a].is_zero()) out[f->indices[a]] = (*sol)[a];
    return out;
}

CanonicalResult PBW::canonical_basis_at_weight(const Root& nu, int p) const {
    auto f = frame(nu, p);
    const size_t m = f->indices.size();
    CanonicalResult R;
    R.indices = f->indices;
    R.bar_matrix.assign(m, std::vector<RationalFunc>(m));
    for (size_t a = 0; a < m; ++a) {
        auto e = expand(f->elements[a].bar(), nu, p);
        for (size_t b = 0; b < m; ++b) {
            auto it = e.find(f->indices[b]);
            if (it != e.end()) R.bar_matrix[a][b] = it->second;
        }
    }
    R.coeffs.assign(m, std::vector<RationalFunc>(m));
    for (size_t a = 0; a < m; ++a) {
        auto& A = R.coeffs[a];
        A[a] = 1;
        for (size_t c = a + 1; c < m; ++c) {
            RationalFunc rhs;
            for (size_t b = a; b < c; ++b)
                if (!A[b].is_zero() && !R.bar_matrix[b][c].is_zero()) rhs += A[b].bar() * R.bar_matrix[b][c];
            if (rhs.is_zero()) continue;
            if (!rhs.is_laurent())
                throw NotComputable("bar transition is not integral at weight; canonical basis undefined here");
            LaurentPoly low, full = rhs.as_laurent();
            for (const auto& [ex, co] : full.terms())
                if (ex < 0) low += LaurentPoly::monomial(ex, co);
            A[c] = low;
        }
        AlgElement b;
        for (size_t c = a; c < m; ++c)
            if (!A[c].is_zero()) b += A[c] * f->elements[c];
        R.elements.push_back(b);
    }
    return R;
}

std::vector<Root> weights_up_to_degree(const RootDatum& dat, int D) {
    std::vector<Root> out;
    Root cur{std::vector<int>(dat.size(), 0)};
    std::function<void(int)> go = [&](int i) {
        if (i == dat.size()) {
            if (std::any_of(cur.c.begin(), cur.c.end(), [](int v) { return v; })) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= D * dat.marks()[i]; ++v) {
            cur.c[i] = v;
            go(i + 1);
        }
        cur.c[i] = 0;
    };
    go(0);
    return out;
}

} // namespace qa
