#include "dpva/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dpva/errors.hpp"
#include "dpva/jet_functor.hpp"

namespace dpva {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// one line of input with column tracking
class Cursor {
public:
    Cursor(std::string_view s, int line, int col0 = 1) : s_(s), line_(line), col0_(col0) {}

    int line() const { return line_; }
    int col() const { return col0_ + static_cast<int>(i_); }
    std::size_t pos() const { return i_; }
    void seek(std::size_t p) { i_ = p; }
    bool eof() {
        ws();
        return i_ >= s_.size();
    }
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(std::string_view lit) {
        ws();
        if (s_.substr(i_, lit.size()) == lit) {
            i_ += lit.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view lit) {
        if (!eat(lit)) fail("expected '" + std::string(lit) + "'");
    }
    std::string ident() {
        ws();
        std::size_t b = i_;
        while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
        if (b == i_) fail("expected a name");
        return std::string(s_.substr(b, i_ - b));
    }
    // name with an optional ^-1 suffix
    std::string arrow_name() {
        std::string n = ident();
        if (s_.substr(i_, 3) == "^-1") {
            i_ += 3;
            n += "^-1";
        }
        return n;
    }
    int integer() {
        ws();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected an integer");
        return std::stoi(std::string(s_.substr(b, i_ - b)));
    }
    // [A-Za-z0-9_/^] run, used for coefficient factors
    std::string lexeme() {
        ws();
        std::size_t b = i_;
        while (i_ < s_.size() && (ident_char(s_[i_]) || s_[i_] == '/' || s_[i_] == '^')) ++i_;
        return std::string(s_.substr(b, i_ - b));
    }
    std::string rest() {
        ws();
        std::string r(s_.substr(i_));
        i_ = s_.size();
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
        return r;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col(), msg); }
    [[noreturn]] void fail_at(int col, const std::string& msg) const { throw ParseError(line_, col, msg); }

private:
    std::string_view s_;
    int line_;
    int col0_;
    std::size_t i_ = 0;
};

using Params = std::map<std::string, Scalar>;

Scalar parse_rat(Cursor& c) {
    int col = (c.ws(), c.col());
    bool neg = false;
    while (c.peek() == '-' || c.peek() == '+') {
        if (c.peek() == '-') neg = !neg;
        c.seek(c.pos() + 1);
        c.ws();
    }
    std::string t = c.lexeme();
    try {
        if (t.empty() || !std::isdigit(static_cast<unsigned char>(t[0]))) throw Error("");
        Scalar r = parse_scalar(t);
        return neg ? Scalar(-r) : r;
    } catch (const Error&) {
        c.fail_at(col, "expected a rational number");
    }
}

Word parse_word(Cursor& c, const Quiver& q) {
    c.ws();
    int col = c.col();
    std::vector<Token> toks;
    do {
        c.ws();
        int tcol = c.col();
        if (c.eat("D^")) {
            int k = c.integer();
            c.expect("(");
            int acol = (c.ws(), c.col());
            std::string n = c.arrow_name();
            c.expect(")");
            int id = q.arrow(n);
            if (id < 0) c.fail_at(acol, "undeclared arrow '" + n + "'");
            if (q.arrow_at(id).inverse >= 0) c.fail_at(tcol, "jets of invertible arrow '" + n + "' are not supported");
            if (!q.jet()) c.fail_at(tcol, "jet letter in a dbracket algebra");
            if (k > q.jet_cap()) c.fail_at(tcol, "jet order exceeds the jets cap " + std::to_string(q.jet_cap()));
            toks.push_back({false, id, k});
            continue;
        }
        std::string n = c.arrow_name();
        int id = q.arrow(n);
        if (id >= 0) {
            toks.push_back({false, id, 0});
            continue;
        }
        if (n.size() > 2 && n.compare(0, 2, "e_") == 0) {
            int v = q.vertex(n.substr(2));
            if (v < 0) c.fail_at(tcol + 2, "undeclared vertex '" + n.substr(2) + "'");
            toks.push_back({true, v, 0});
            continue;
        }
        c.fail_at(tcol, "undeclared arrow '" + n + "'");
    } while (c.peek() == '.' && (c.seek(c.pos() + 1), true));
    auto w = normalize_word(q, toks);
    if (!w) c.fail_at(col, "incomposable word");
    return *w;
}

// coefficient factors of one term: rationals, parameters, l^k
struct Factors {
    Scalar coeff{1};
    int lpow = 0;
};

Factors parse_factors(Cursor& c, const Params& params, bool lambda_ok) {
    Factors f;
    for (;;) {
        c.ws();
        std::size_t save = c.pos();
        int col = c.col();
        bool neg = false;
        while (c.peek() == '-') {
            neg = !neg;
            c.seek(c.pos() + 1);
            c.ws();
        }
        std::string t = c.lexeme();
        c.ws();
        if (t.empty() || c.peek() != '*') {
            c.seek(save);
            return f;
        }
        c.seek(c.pos() + 1);
        if (neg) f.coeff = -f.coeff;
        if (std::isdigit(static_cast<unsigned char>(t[0]))) {
            try {
                f.coeff *= parse_scalar(t);
            } catch (const Error&) {
                c.fail_at(col, "bad rational '" + t + "'");
            }
        } else if (t == "l" || t.compare(0, 2, "l^") == 0) {
            if (!lambda_ok) c.fail_at(col, "lambda factor outside an lbracket rule");
            int k = 1;
            if (t.size() > 2) {
                try {
                    k = std::stoi(t.substr(2));
                } catch (...) {
                    c.fail_at(col, "bad lambda power");
                }
            }
            f.lpow += k;
        } else {
            auto it = params.find(t);
            if (it == params.end()) c.fail_at(col, "undeclared parameter '" + t + "'");
            f.coeff *= it->second;
        }
    }
}

template <std::size_t N>
LPoly<Tensor<N>> parse_sum(Cursor& c, const QuiverPtr& qp, const Params& params, bool lambda_ok) {
    LPoly<Tensor<N>> r;
    c.ws();
    {
        std::size_t save = c.pos();
        if (c.eat("0") && c.eof()) return r;
        c.seek(save);
    }
    Scalar sign(1);
    for (;;) {
        c.ws();
        while (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') sign = -sign;
            c.seek(c.pos() + 1);
            c.ws();
        }
        if (c.eof()) c.fail("expected a term");
        Factors f = parse_factors(c, params, lambda_ok);
        typename Tensor<N>::Key key;
        for (std::size_t s = 0; s < N; ++s) {
            if (s) c.expect("(x)");
            key[s] = parse_word(c, *qp);
        }
        Tensor<N> t(qp);
        t.add(key, sign * f.coeff);
        r.add(f.lpow, t);
        if (c.eof()) break;
        char p = c.peek();
        if (p != '+' && p != '-') c.fail("expected '+', '-' or end of line");
        sign = Scalar(1);
    }
    for (int n = 0; n <= r.degree(); ++n) r.mut(n).set_quiver(qp);
    return r;
}

struct Line {
    int no;
    std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int no = 0;
    std::size_t b = 0;
    while (b <= text.size()) {
        std::size_t e = text.find('\n', b);
        if (e == std::string_view::npos) e = text.size();
        ++no;
        std::string l(text.substr(b, e - b));
        if (auto h = l.find('#'); h != std::string::npos) l.erase(h);
        if (!l.empty() && l.back() == '\r') l.pop_back();
        out.push_back({no, l});
        if (e == text.size()) break;
        b = e + 1;
    }
    return out;
}

std::string keyword(const std::string& l) {
    std::size_t b = 0;
    while (b < l.size() && std::isspace(static_cast<unsigned char>(l[b]))) ++b;
    std::size_t e = b;
    while (e < l.size() && ident_char(l[e])) ++e;
    return l.substr(b, e - b);
}

Params param_map(const AlgebraFile& f) { return {f.params.begin(), f.params.end()}; }

DPAlgebra::RuleMap plain_rules(const AlgebraFile& f, std::size_t upto) {
    QuiverPtr q = f.quiver;
    DPAlgebra::RuleMap r;
    if (f.has_star()) r = double_quiver_rules(q);
    for (std::size_t i = 0; i < upto; ++i) {
        const auto& R = f.rules[i];
        r.erase({R.h, R.g});
        r[{R.g, R.h}] = R.value.is_zero() ? Tensor2(q) : R.value.at(0);
    }
    return r;
}

DPVAlgebra::RuleMap lambda_rules(const AlgebraFile& f, std::size_t upto) {
    DPVAlgebra::RuleMap r;
    for (std::size_t i = 0; i < upto; ++i) {
        const auto& R = f.rules[i];
        r.erase({R.h, R.g});
        r[{R.g, R.h}] = R.value;
    }
    return r;
}

}  // namespace

bool AlgebraFile::has_star() const {
    for (const auto& a : quiver->arrows())
        if (a.star >= 0) return true;
    return false;
}

AlgebraFile parse_algebra_file(std::string_view text, const Params& overrides) {
    AlgebraFile f;
    f.quiver = std::make_shared<Quiver>();
    Quiver& q = *f.quiver;
    auto lines = split_lines(text);

    struct PendingStar {
        int arrow;
        std::string partner;
        int line, col;
    };
    std::vector<PendingStar> stars;
    bool saw_name = false, saw_d = false;
    int jets_line = 0;

    // declarations first
    for (const auto& L : lines) {
        std::string kw = keyword(L.text);
        if (kw.empty()) {
            Cursor c(L.text, L.no);
            if (!c.eof()) c.fail("expected a keyword");
            continue;
        }
        Cursor c(L.text, L.no);
        c.ident();
        if (kw == "algebra") {
            if (saw_name) c.fail("duplicate algebra line");
            f.name = c.rest();
            if (f.name.empty()) c.fail("expected an algebra name");
            saw_name = true;
        } else if (kw == "param") {
            std::string n = c.ident();
            c.expect("=");
            Scalar v = parse_rat(c);
            if (!c.eof()) c.fail("unexpected text after parameter value");
            if (auto it = overrides.find(n); it != overrides.end()) v = it->second;
            for (const auto& [pn, pv] : f.params)
                if (pn == n) c.fail("duplicate parameter '" + n + "'");
            f.params.emplace_back(n, v);
        } else if (kw == "vertex") {
            int col = (c.ws(), c.col());
            std::string n = c.ident();
            if (q.vertex(n) >= 0) c.fail_at(col, "duplicate vertex '" + n + "'");
            q.add_vertex(n);
            if (!c.eof()) c.fail("unexpected text after vertex name");
        } else if (kw == "arrow") {
            int col = (c.ws(), c.col());
            std::string n = c.ident();
            if (q.arrow(n) >= 0) c.fail_at(col, "duplicate arrow '" + n + "'");
            c.expect(":");
            int tcol = (c.ws(), c.col());
            std::string t = c.ident();
            c.expect("->");
            int hcol = (c.ws(), c.col());
            std::string h = c.ident();
            int tv = q.vertex(t), hv = q.vertex(h);
            if (tv < 0) c.fail_at(tcol, "undeclared vertex '" + t + "'");
            if (hv < 0) c.fail_at(hcol, "undeclared vertex '" + h + "'");
            // a pending star partner may be declared here
            int id = q.add_arrow(n, tv, hv);
            while (!c.eof()) {
                int fcol = c.col();
                std::string flag = c.ident();
                if (flag == "inverse") {
                    q.make_invertible(id);
                } else if (flag == "star") {
                    int pcol = (c.ws(), c.col());
                    stars.push_back({id, c.ident(), L.no, pcol});
                } else {
                    c.fail_at(fcol, "unknown arrow flag '" + flag + "'");
                }
            }
        } else if (kw == "jets") {
            f.jets = c.integer();
            if (f.jets < 0 || f.jets > kMaxJetOrder) c.fail("jets cap out of range");
            if (!c.eof()) c.fail("unexpected text after jets cap");
            jets_line = L.no;
        } else if (kw == "lbracket") {
            f.lambda = true;
        } else if (kw == "dbracket") {
            saw_d = true;
        } else if (kw != "moment" && kw != "zeta") {
            c.fail_at(1 + static_cast<int>(L.text.find(kw)), "unknown keyword '" + kw + "'");
        }
    }
    if (!saw_name) throw ParseError(1, 1, "missing 'algebra NAME' line");
    if (q.num_vertices() == 0) throw ParseError(lines.back().no, 1, "no vertex declared");
    for (const auto& s : stars) {
        int p = q.arrow(s.partner);
        const Arrow& A = q.arrow_at(s.arrow);
        if (p < 0) p = q.add_arrow(s.partner, A.head, A.tail);
        if (q.arrow_at(p).star >= 0 || A.star >= 0) throw ParseError(s.line, s.col, "arrow already has a star partner");
        try {
            q.set_star(s.arrow, p);
        } catch (const Error& e) {
            throw ParseError(s.line, s.col, e.what());
        }
    }
    if (f.lambda) {
        if (saw_d) {
            for (const auto& L : lines)
                if (keyword(L.text) == "dbracket") throw ParseError(L.no, 1, "dbracket and lbracket rules cannot be mixed");
        }
        try {
            q.set_jet(f.jets);
        } catch (const Error& e) {
            throw ParseError(jets_line ? jets_line : 1, 1, e.what());
        }
    }

    QuiverPtr qp = f.quiver;
    Params params = param_map(f);
    for (const auto& L : lines) {
        std::string kw = keyword(L.text);
        Cursor c(L.text, L.no);
        if (kw == "dbracket" || kw == "lbracket") {
            c.ident();
            int gcol = (c.ws(), c.col());
            std::string g = c.arrow_name();
            int hcol = (c.ws(), c.col());
            std::string h = c.arrow_name();
            int gi = q.arrow(g), hi = q.arrow(h);
            if (gi < 0) c.fail_at(gcol, "undeclared arrow '" + g + "'");
            if (hi < 0) c.fail_at(hcol, "undeclared arrow '" + h + "'");
            if (q.arrow_at(gi).is_inverse) c.fail_at(gcol, "rules on inverse arrows are derived, not given");
            if (q.arrow_at(hi).is_inverse) c.fail_at(hcol, "rules on inverse arrows are derived, not given");
            c.expect("=");
            AlgebraFile::Rule R;
            R.g = gi;
            R.h = hi;
            R.line = L.no;
            R.value = parse_sum<2>(c, qp, params, kw == "lbracket");
            for (const auto& o : f.rules)
                if ((o.g == gi && o.h == hi) || (o.g == hi && o.h == gi))
                    c.fail_at(gcol, "rule for this pair already given on line " + std::to_string(o.line));
            f.rules.push_back(std::move(R));
        } else if (kw == "moment") {
            c.ident();
            c.expect("=");
            if (f.moment) c.fail("duplicate moment line");
            auto m = parse_sum<1>(c, qp, params, false);
            f.moment = m.is_zero() ? NCPoly(qp) : m.at(0);
            f.moment->set_quiver(qp);
            try {
                make_moment(*f.moment);
            } catch (const Error& e) {
                c.fail_at(1, e.what());
            }
        } else if (kw == "zeta") {
            c.ident();
            int vcol = (c.ws(), c.col());
            std::string v = c.ident();
            int vi = q.vertex(v);
            if (vi < 0) c.fail_at(vcol, "undeclared vertex '" + v + "'");
            c.expect("=");
            f.zeta[vi] = parse_rat(c);
            if (!c.eof()) c.fail("unexpected text after zeta value");
        }
    }

    // validate rules one at a time so an error points at its line
    for (std::size_t i = 1; i <= f.rules.size(); ++i) {
        try {
            if (f.lambda)
                DPVAlgebra(f.name, qp, lambda_rules(f, i));
            else
                DPAlgebra(f.name, qp, plain_rules(f, i));
        } catch (const Error& e) {
            const auto& L = lines.at(static_cast<std::size_t>(f.rules[i - 1].line - 1));
            throw ParseError(L.no, 1 + static_cast<int>(L.text.find('=')) + 2, e.what());
        }
    }
    if (f.rules.empty()) {
        try {
            if (f.lambda)
                DPVAlgebra(f.name, qp, {});
            else
                DPAlgebra(f.name, qp, plain_rules(f, 0));
        } catch (const Error& e) {
            throw ParseError(1, 1, e.what());
        }
    }
    return f;
}

AlgebraFile load_algebra_file(const std::string& path, const Params& overrides) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str(), overrides);
}

std::string ltensor_str(const LTensor2& P) {
    if (P.is_zero()) return "0";
    std::string s;
    for (int n = 0; n <= P.degree(); ++n) {
        if (P.at(n).is_zero()) continue;
        const Quiver& q = *P.at(n).quiver();
        for (const auto& [k, c] : P.at(n).terms()) {
            if (!s.empty()) s += " + ";
            s += scalar_str(c) + " * ";
            if (n == 1) s += "l * ";
            if (n > 1) s += "l^" + std::to_string(n) + " * ";
            s += word_str(q, k[0]) + " (x) " + word_str(q, k[1]);
        }
    }
    return s;
}

std::string serialize_algebra_file(const AlgebraFile& f) {
    const Quiver& q = *f.quiver;
    std::ostringstream o;
    o << "algebra " << f.name << "\n";
    for (const auto& [n, v] : f.params) o << "param " << n << " = " << scalar_str(v) << "\n";
    for (int v = 0; v < q.num_vertices(); ++v) o << "vertex " << q.vertex_name(v) << "\n";
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& A = q.arrow_at(a);
        if (A.is_inverse) continue;
        o << "arrow " << A.name << " : " << q.vertex_name(A.tail) << " -> " << q.vertex_name(A.head);
        if (A.inverse >= 0) o << " inverse";
        if (A.epsilon == 1) o << " star " << q.arrow_at(A.star).name;
        o << "\n";
    }
    if (f.lambda) o << "jets " << f.jets << "\n";
    for (const auto& R : f.rules) {
        o << (f.lambda ? "lbracket " : "dbracket ") << q.arrow_at(R.g).name << " " << q.arrow_at(R.h).name << " = ";
        o << (f.lambda ? ltensor_str(R.value) : (R.value.is_zero() ? "0" : tensor_str(R.value.at(0)))) << "\n";
    }
    if (f.moment) o << "moment = " << tensor_str(*f.moment) << "\n";
    for (const auto& [v, z] : f.zeta) o << "zeta " << q.vertex_name(v) << " = " << scalar_str(z) << "\n";
    return o.str();
}

AlgebraFile file_of(const DPAlgebra& A) {
    AlgebraFile f;
    f.name = A.name();
    f.quiver = std::make_shared<Quiver>(*base_quiver(*A.quiver()));
    QuiverPtr qp = f.quiver;
    DPAlgebra::RuleMap gen;
    if (f.has_star()) gen = double_quiver_rules(qp);
    for (const auto& [gh, d] : A.rules()) {
        auto it = gen.find(gh);
        if (it != gen.end() && it->second == d) continue;
        AlgebraFile::Rule R;
        R.g = gh.first;
        R.h = gh.second;
        R.value.mut(0) = rehome(d, qp);
        R.value.mut(0).set_quiver(qp);
        R.value.trim();
        f.rules.push_back(std::move(R));
    }
    return f;
}

AlgebraFile file_of(const DPVAlgebra& V) {
    AlgebraFile f;
    f.name = V.name();
    f.lambda = true;
    f.jets = V.quiver()->jet_cap();
    auto q = std::make_shared<Quiver>(*base_quiver(*V.quiver()));
    q->set_jet(f.jets);
    f.quiver = q;
    QuiverPtr qp = q;
    for (const auto& [gh, P] : V.rules()) {
        AlgebraFile::Rule R;
        R.g = gh.first;
        R.h = gh.second;
        for (int n = 0; n <= P.degree(); ++n) R.value.mut(n) = rehome(P.at(n), qp);
        R.value.trim();
        f.rules.push_back(std::move(R));
    }
    return f;
}

DPAlgebra to_dpa(const AlgebraFile& f) {
    if (f.lambda) throw Error("'" + f.name + "' is a lambda-bracket file; a double bracket is needed");
    return DPAlgebra(f.name, f.quiver, plain_rules(f, f.rules.size()));
}

DPVAlgebra to_dpva(const AlgebraFile& f, int jet_cap) {
    if (f.lambda) return DPVAlgebra(f.name, f.quiver, lambda_rules(f, f.rules.size()));
    return jet_of_dpa(to_dpa(f), jet_cap);
}

std::optional<MomentDatum> moment_of(const AlgebraFile& f, const QuiverPtr& q) {
    std::vector<Scalar> zeta(static_cast<std::size_t>(f.quiver->num_vertices()), Scalar(0));
    for (const auto& [v, z] : f.zeta) zeta[static_cast<std::size_t>(v)] = z;
    MomentDatum m;
    if (f.moment)
        m = make_moment(*f.moment, zeta);
    else if (f.quiver->is_double()) {
        m = quiver_moment(f.quiver);
        m.zeta = zeta;
    } else
        return std::nullopt;
    return rehome_moment(m, q);
}

NCPoly parse_nc_expr(const QuiverPtr& q, std::string_view text, const Params& params) {
    Cursor c(text, 1);
    auto r = parse_sum<1>(c, q, params, false);
    return r.is_zero() ? NCPoly(q) : r.at(0);
}

Tensor2 parse_tensor_expr(const QuiverPtr& q, std::string_view text, const Params& params) {
    Cursor c(text, 1);
    auto r = parse_sum<2>(c, q, params, false);
    return r.is_zero() ? Tensor2(q) : r.at(0);
}

LTensor2 parse_ltensor_expr(const QuiverPtr& q, std::string_view text, const Params& params) {
    Cursor c(text, 1);
    return parse_sum<2>(c, q, params, true);
}

CheckReport parser_roundtrip_check(const std::string& dir) {
    namespace fs = std::filesystem;
    CheckReport rep("parser_roundtrip");
    Stopwatch sw;
    auto sorted = [](const fs::path& d) {
        std::vector<fs::path> v;
        if (fs::is_directory(d))
            for (const auto& e : fs::directory_iterator(d))
                if (e.path().extension() == ".dpa") v.push_back(e.path());
        std::sort(v.begin(), v.end());
        return v;
    };
    auto files = sorted(dir);
    if (files.empty()) rep.fail({dir, "no .dpa files", ""});
    for (const auto& p : files) {
        ++rep.cases;
        try {
            AlgebraFile f = load_algebra_file(p.string());
            std::string s1 = serialize_algebra_file(f);
            AlgebraFile g = parse_algebra_file(s1);
            std::string s2 = serialize_algebra_file(g);
            if (s1 != s2) rep.fail({p.filename().string(), s1, s2});
            if (f.lambda) {
                if (!(to_dpva(f).rules() == to_dpva(g).rules())) rep.fail({p.filename().string(), "rules", "changed"});
            } else {
                DPAlgebra A = to_dpa(f);
                if (!(A.rules() == to_dpa(g).rules())) rep.fail({p.filename().string(), "rules", "changed"});
                // internal value -> text -> value
                std::string s3 = serialize_algebra_file(file_of(A));
                if (!(to_dpa(parse_algebra_file(s3)).rules() == A.rules()))
                    rep.fail({p.filename().string() + " (file_of)", s3, "rules changed"});
            }
        } catch (const Error& e) {
            rep.fail({p.filename().string(), "parse error", e.what()});
        }
    }
    auto bad = sorted(fs::path(dir) / "malformed");
    if (bad.empty()) rep.fail({dir + "/malformed", "no fixtures", ""});
    for (const auto& p : bad) {
        ++rep.cases;
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        int el = 0, ec = 0;
        if (std::sscanf(text.c_str(), "# expect %d:%d", &el, &ec) != 2) {
            rep.fail({p.filename().string(), "missing '# expect L:C' header", ""});
            continue;
        }
        std::string want = std::to_string(el) + ":" + std::to_string(ec);
        try {
            parse_algebra_file(text);
            rep.fail({p.filename().string(), want, "parsed without error"});
        } catch (const ParseError& e) {
            std::string got = std::to_string(e.line) + ":" + std::to_string(e.col);
            if (got != want) rep.fail({p.filename().string(), want, e.what()});
        } catch (const Error& e) {
            rep.fail({p.filename().string(), want, std::string("unpositioned: ") + e.what()});
        }
    }
    rep.millis = sw.millis();
    return rep;
}

}  // namespace dpva
