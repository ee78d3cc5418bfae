#include "qa/cli.hpp"

#include "qa/cells.hpp"
#include "qa/crystals.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace qa {

using nlohmann::json;

namespace {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rat_str(const Rat& r) { return r.get_str(); }

json rat_matrix(const RatMatrix& m) {
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rat_str(v));
        a.push_back(r);
    }
    return a;
}

json element_json(const AlgElement& x) {
    json a = json::array();
    for (const auto& [w, c] : x.terms()) a.push_back({w, c.str()});
    return a;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError("not an integer list: " + s);
        }
    }
    return out;
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw DomainError(std::string("bad value for ") + name);
    }
}

AffineType parse_type(const std::string& s) {
    try {
        return AffineType::parse(s);
    } catch (const std::exception& e) {
        throw DomainError(e.what());
    }
}

Root parse_weight(const std::string& s, const RootDatum& D) {
    auto v = parse_ints(s);
    if (static_cast<int>(v.size()) != D.size()) throw DomainError("weight needs one coordinate per node");
    for (int c : v)
        if (c < 0) throw DomainError("weight must lie in Q_+");
    return Root{v};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string triple_str(const TensorCrystal& B, const CellTriple& t) {
    return B.element(t.b).str() + "|" + t.s.str() + "|" + B.element(t.bp).str();
}

// ------------------------------------------------------------- element parser

class ElementParser {
public:
    ElementParser(const std::string& s, int size) : s_(s), size_(size) {}

    AlgElement parse() {
        AlgElement out;
        skip();
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            AlgElement t = term();
            out += neg ? -t : t;
            skip();
            if (pos_ == s_.size()) break;
            char c = s_[pos_++];
            if (c != '+' && c != '-') fail("expected + or -");
            neg = c == '-';
        }
        return out;
    }

private:
    const std::string& s_;
    int size_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("cannot parse element at position " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    int integer(bool allow_sign) {
        skip();
        size_t start = pos_;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string tok = s_.substr(start, pos_ - start);
        if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer");
        return std::stoi(tok);
    }
    AlgElement factor() {
        char c = peek();
        if (c == 'E') {
            ++pos_;
            int i = integer(false);
            if (i < 0 || i >= size_) fail("generator index out of range");
            return AlgElement::gen(i);
        }
        if (c == 'q') {
            ++pos_;
            int e = 1;
            if (peek() == '^') {
                ++pos_;
                e = integer(true);
            }
            return AlgElement(RationalFunc::q_pow(e));
        }
        if (c == '(') {
            size_t depth = 0, start = ++pos_;
            while (pos_ < s_.size() && (s_[pos_] != ')' || depth > 0)) {
                if (s_[pos_] == '(') ++depth;
                if (s_[pos_] == ')') --depth;
                ++pos_;
            }
            if (pos_ == s_.size()) fail("unbalanced parenthesis");
            std::string inner = s_.substr(start, pos_ - start);
            ++pos_;
            try {
                return AlgElement(RationalFunc::parse(inner));
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return AlgElement(RationalFunc(integer(false)));
        fail("expected E<i>, q^<n>, an integer or a parenthesized coefficient");
    }
    AlgElement term() {
        AlgElement t = factor();
        while (peek() == '*') {
            ++pos_;
            t = t * factor();
        }
        return t;
    }
};

// ----------------------------------------------------------------- commands

struct Options {
    std::string type, lambda, weight, x, y, word;
    int degree = 1, range = 6, frame = 0;
    int boxes = 3, det = 2;
    bool csv = false, dot = false;
};

json cmd_rootdata(const Options& o) {
    RootDatum D(parse_type(o.type));
    json j;
    j["type"] = D.type().name();
    j["n"] = D.n();
    j["cartan"] = D.cartan();
    j["marks"] = D.marks();
    j["comarks"] = D.comarks();
    j["gram"] = rat_matrix(D.gram());
    j["d"] = D.d();
    std::vector<int> qe, dn;
    for (int i = 0; i < D.size(); ++i) {
        qe.push_back(D.qexp(i));
        dn.push_back(D.d_node(i));
    }
    j["qexp"] = qe;
    j["d_node"] = dn;
    j["coxeter"] = D.coxeter();
    j["dual_coxeter"] = D.dual_coxeter();
    return j;
}

json cmd_roots(const Options& o) {
    RootDatum D(parse_type(o.type));
    json a = json::array();
    for (const auto& r : enumerate_positive_roots(D, o.degree)) {
        json e;
        e["root"] = r.root.c;
        e["class"] = r.cls == RootClass::Greater ? ">" : r.cls == RootClass::Zero ? "0" : "<";
        e["real"] = is_real_root(r.root, D);
        if (r.cls == RootClass::Zero) {
            e["m"] = r.m;
            e["node"] = r.node;
        } else {
            e["d_alpha"] = rat_str(d_alpha(r.root, D));
        }
        a.push_back(e);
    }
    return json{{"type", D.type().name()}, {"degree", o.degree}, {"roots", a}};
}

json cmd_weyl(const Options& o) {
    RootDatum D(parse_type(o.type));
    WeylGroup W(D);
    HSequence h = omega_word(W);
    json j;
    j["type"] = D.type().name();
    j["N"] = h.N();
    j["window"] = h.window();
    j["tau"] = h.tau();
    json betas = json::array();
    for (int k = -o.range; k <= o.range; ++k) betas.push_back({{"k", k}, {"i_k", h[k]}, {"beta", beta(k, h, D).c}});
    j["beta"] = betas;
    j["automorphism_group_order"] = W.automorphisms().size();
    if (!o.word.empty()) {
        auto letters = parse_ints(o.word);
        for (int l : letters)
            if (l < 0 || l >= D.size()) throw DomainError("letter out of range");
        auto w = W.word(letters);
        auto d = W.decompose(w);
        j["word"] = {{"letters", letters},
                     {"length", W.length(w)},
                     {"reduced", W.is_reduced(letters)},
                     {"reduced_word", d.affine_word},
                     {"tau", d.tau}};
    }
    return j;
}

struct Engine {
    RootDatum D;
    WeylGroup W;
    UPlus U;
    PBW P;
    explicit Engine(const std::string& t) : D(parse_type(t)), W(D), U(D), P(U, omega_word(W)) {}
};

json cmd_pbw(const Options& o) {
    Engine E(o.type);
    Root nu = parse_weight(o.weight, E.D);
    json a = json::array();
    for (const auto& c : E.P.indices_at_weight(nu, o.frame))
        a.push_back({{"index", c.str()}, {"element", element_json(E.P.element(c, o.frame))}});
    return json{{"type", E.D.type().name()}, {"weight", nu.c}, {"frame", o.frame}, {"dimension", E.U.dimension(nu)},
                {"pbw", a}};
}

json cmd_form(const Options& o) {
    Engine E(o.type);
    AlgElement x = parse_element(o.x, E.D.size()), y = parse_element(o.y, E.D.size());
    return json{{"type", E.D.type().name()}, {"x", o.x}, {"y", o.y}, {"form", E.U.form(x, y).str()}};
}

json cmd_canonical(const Options& o) {
    Engine E(o.type);
    Root nu = parse_weight(o.weight, E.D);
    auto R = E.P.canonical_basis_at_weight(nu, o.frame);
    json a = json::array();
    for (size_t k = 0; k < R.indices.size(); ++k) {
        json coeffs = json::object(), bar = json::object();
        for (size_t l = 0; l < R.indices.size(); ++l) {
            if (!R.coeffs[k][l].is_zero()) coeffs[R.indices[l].str()] = R.coeffs[k][l].str();
            if (!R.bar_matrix[k][l].is_zero()) bar[R.indices[l].str()] = R.bar_matrix[k][l].str();
        }
        a.push_back({{"index", R.indices[k].str()},
                     {"pbw_coefficients", coeffs},
                     {"bar_row", bar},
                     {"element", element_json(R.elements[k])}});
    }
    return json{{"type", E.D.type().name()}, {"weight", nu.c}, {"frame", o.frame}, {"canonical", a}};
}

TensorCrystal build_crystal(const Options& o) {
    AffineType t = parse_type(o.type);
    try {
        return TensorCrystal::build(t, parse_ints(o.lambda));
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception& e) {
        throw DomainError(e.what());
    }
}

CellModel build_cells(const Options& o) {
    AffineType t = parse_type(o.type);
    try {
        return CellModel(t, parse_ints(o.lambda));
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception& e) {
        throw DomainError(e.what());
    }
}

json cmd_crystal(const Options& o, std::string& text) {
    TensorCrystal B = build_crystal(o);
    if (o.dot) {
        text = B.dot();
        return {};
    }
    if (o.csv) {
        std::ostringstream os;
        os << "source,target,i\n";
        for (size_t x = 0; x < B.size(); ++x)
            for (int i = 0; i <= B.n(); ++i)
                if (auto y = B.f(i, x)) os << x << "," << *y << "," << i << "\n";
        text = os.str();
        return {};
    }
    json el = json::array(), edges = json::array();
    for (size_t x = 0; x < B.size(); ++x) {
        el.push_back({{"id", x}, {"element", B.element(x).str()}, {"weight", B.weight(x)}, {"extremal", B.is_extremal(x)}});
        for (int i = 0; i <= B.n(); ++i)
            if (auto y = B.f(i, x)) edges.push_back({x, *y, i});
    }
    return json{{"type", o.type},
                {"lambda", B.lambda()},
                {"size", B.size()},
                {"components", B.component_count()},
                {"highest", B.highest()},
                {"elements", el},
                {"f_edges", edges}};
}

json cmd_cells(const Options& o, std::string& text, int& code) {
    CellModel M = build_cells(o);
    auto P = cell_partition(M, {o.boxes, o.det});
    if (P.verdict == CellVerdict::Inconclusive) code = 3;
    if (P.verdict == CellVerdict::Mismatch) throw std::logic_error("cell partition contradicts the closed form");
    if (o.csv) {
        std::ostringstream os;
        os << "triple,left,right,two_sided\n";
        for (size_t k = 0; k < P.basis.size(); ++k)
            os << csv_field(triple_str(M.crystal(), P.basis[k])) << "," << P.left[k] << "," << P.right[k] << "," << P.two_sided[k]
               << "\n";
        text = os.str();
        return {};
    }
    return json{{"type", o.type},
                {"lambda", M.lambda()},
                {"truncation", {{"max_boxes", o.boxes}, {"max_det", o.det}}},
                {"basis_size", P.basis.size()},
                {"left_cells", P.left_count},
                {"right_cells", P.right_count},
                {"two_sided_cells", P.two_sided_count},
                {"verdict", verdict_name(P.verdict)}};
}

json cmd_jring(const Options& o, std::string& text) {
    CellModel M = build_cells(o);
    auto basis = M.basis({o.boxes, o.det});
    std::ostringstream os;
    json a = json::array();
    os << "x,y,z,coefficient\n";
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if (x.bp != y.b) continue;
            for (const auto& [z, c] : M.multiply(x, y)) {
                std::string xs = triple_str(M.crystal(), x), ys = triple_str(M.crystal(), y),
                            zs = triple_str(M.crystal(), z);
                os << csv_field(xs) << "," << csv_field(ys) << "," << csv_field(zs) << "," << c << "\n";
                a.push_back({{"x", xs}, {"y", ys}, {"z", zs}, {"c", c}});
            }
        }
    if (o.csv) {
        text = os.str();
        return {};
    }
    return json{{"type", o.type},
                {"lambda", M.lambda()},
                {"truncation", {{"max_boxes", o.boxes}, {"max_det", o.det}}},
                {"structure_constants", a}};
}

json cmd_afn(const Options& o) {
    CellModel M = build_cells(o);
    const auto& B = M.crystal();
    json a = json::array();
    for (size_t bp = 0; bp < B.size(); ++bp) {
        Rat v = M.a_value({B.highest(), M.trivial_rep(), bp});
        std::vector<std::string> cw;
        for (const auto& c : B.cl_weight(bp).c) cw.push_back(rat_str(c));
        a.push_back({{"b_prime", B.element(bp).str()}, {"cl_weight", cw}, {"a", rat_str(v)}});
    }
    return json{{"type", o.type}, {"lambda", M.lambda()}, {"a_values", a}};
}

json cmd_dcount(const Options& o) {
    CellModel M = build_cells(o);
    long formula = 1;
    const int n = M.crystal().n();
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k < M.lambda()[i - 1]; ++k) formula *= binomial(n + 1, i);
    return json{{"type", o.type}, {"lambda", M.lambda()}, {"dcount", M.d_count()}, {"product_formula", formula}};
}

} // namespace

AlgElement parse_element(const std::string& text, int size) { return ElementParser(text, size).parse(); }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Affine quantum groups, PBW and canonical bases, level-zero crystals and cells"};
    app.require_subcommand(1);
    Options o;
    o.boxes = 3;
    o.det = 2;
    try {
        o.boxes = env_int("QA_TRUNC_BOXES", 3);
        o.det = env_int("QA_TRUNC_DET", 2);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto add_type = [&](CLI::App* s) { s->add_option("--type", o.type, "affine type, e.g. A2~1")->required(); };
    auto add_lambda = [&](CLI::App* s) { s->add_option("--lambda", o.lambda, "comma list lambda_1..lambda_n")->required(); };
    auto add_trunc = [&](CLI::App* s) {
        s->add_option("--boxes", o.boxes, "truncation: total boxes");
        s->add_option("--det", o.det, "truncation: maximal |determinant power|");
    };
    auto add_weight = [&](CLI::App* s) {
        s->add_option("--weight", o.weight, "coordinates over alpha_0..alpha_n")->required();
        s->add_option("--frame", o.frame, "frame p with |p| <= N");
    };

    auto* rootdata = app.add_subcommand("rootdata", "Cartan data, marks and the invariant form");
    add_type(rootdata);
    auto* roots = app.add_subcommand("roots", "positive roots up to a delta-degree");
    add_type(roots);
    roots->add_option("--degree", o.degree, "delta-degree cutoff");
    auto* weyl = app.add_subcommand("weyl", "h-sequence, beta_k and word data");
    add_type(weyl);
    weyl->add_option("--range", o.range, "list beta_k for |k| <= range");
    weyl->add_option("--word", o.word, "comma list of letters to analyse");
    auto* pbw = app.add_subcommand("pbw", "PBW elements at a weight");
    add_type(pbw);
    add_weight(pbw);
    auto* form = app.add_subcommand("form", "bilinear form of two elements");
    add_type(form);
    form->add_option("--x", o.x)->required();
    form->add_option("--y", o.y)->required();
    auto* canonical = app.add_subcommand("canonical", "canonical basis at a weight");
    add_type(canonical);
    add_weight(canonical);
    auto* crystal = app.add_subcommand("crystal", "tensor product of level-zero fundamental crystals");
    add_type(crystal);
    add_lambda(crystal);
    auto* cells = app.add_subcommand("cells", "left, right and two-sided cells of the limit ring");
    add_type(cells);
    add_lambda(cells);
    add_trunc(cells);
    auto* jring = app.add_subcommand("jring", "structure constants of the limit ring");
    add_type(jring);
    add_lambda(jring);
    add_trunc(jring);
    auto* afn = app.add_subcommand("afn", "a-function values");
    add_type(afn);
    add_lambda(afn);
    auto* dcount = app.add_subcommand("dcount", "number of generalized units");
    add_type(dcount);
    add_lambda(dcount);
    for (auto* s : {crystal, cells, jring})
        s->add_flag("--csv", o.csv, "CSV output");
    crystal->add_flag("--dot", o.dot, "DOT output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        json j;
        std::string text;
        int code = 0;
        if (*rootdata) j = cmd_rootdata(o);
        else if (*roots) j = cmd_roots(o);
        else if (*weyl) j = cmd_weyl(o);
        else if (*pbw) j = cmd_pbw(o);
        else if (*form) j = cmd_form(o);
        else if (*canonical) j = cmd_canonical(o);
        else if (*crystal) j = cmd_crystal(o, text);
        else if (*cells) j = cmd_cells(o, text, code);
        else if (*jring) j = cmd_jring(o, text);
        else if (*afn) j = cmd_afn(o);
        else if (*dcount) j = cmd_dcount(o);
        if (!text.empty()) out << text;
        else out << j.dump(2) << "\n";
        return code;
    } catch (const NotComputable& e) {
        err << "not computable: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qa
