#include "dpva/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "dpva/catalog.hpp"
#include "dpva/dsl.hpp"
#include "dpva/errors.hpp"
#include "dpva/h0.hpp"
#include "dpva/jet_functor.hpp"
#include "dpva/reduction.hpp"
#include "dpva/suite.hpp"

namespace dpva {

namespace {

using nlohmann::json;

json report_json(const CheckReport& r) {
    json w = json::array();
    for (const auto& x : r.witnesses) w.push_back({{"input", x.input}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return {{"check", r.check}, {"verdict", verdict_str(r.verdict)}, {"witnesses", w},
            {"seed", r.seed},   {"millis", r.millis},                {"notes", r.notes}};
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("DPVA_SEED")) {
        try {
            return std::stoull(s);
        } catch (...) {
            throw Error(std::string("DPVA_SEED is not an unsigned integer: ") + s);
        }
    }
    return 0;
}

std::string default_catalog() {
    if (const char* s = std::getenv("DPVA_CATALOG")) return s;
    return DPVA_CATALOG_DIR;
}

struct Usage : Error {
    using Error::Error;
};

std::pair<int, int> parse_orders(const std::string& s) {
    auto c = s.find(',');
    if (c == std::string::npos) throw Usage("--orders expects r,s");
    try {
        return {std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
    } catch (...) {
        throw Usage("--orders expects r,s");
    }
}

std::vector<Scalar> parse_zeta(const std::string& s) {
    std::vector<Scalar> z;
    std::stringstream ss(s);
    std::string t;
    while (std::getline(ss, t, ',')) z.push_back(parse_scalar(t));
    return z;
}

std::map<std::string, Scalar> parse_params(const std::vector<std::string>& kv) {
    std::map<std::string, Scalar> r;
    for (const auto& s : kv) {
        auto e = s.find('=');
        if (e == std::string::npos) throw Usage("--param expects NAME=RAT");
        r[s.substr(0, e)] = parse_scalar(s.substr(e + 1));
    }
    return r;
}

std::string matrix_str(const Quiver& q, const PolyMatrix& M) {
    std::string s = "[";
    for (int i = 0; i < M.N; ++i) {
        if (i) s += " ;";
        for (int j = 0; j < M.N; ++j) s += " " + cpoly_str(q, M.at(i, j));
    }
    return s + " ]";
}

struct Ctx {
    std::ostream& out;
    ReportFormat fmt;
    std::uint64_t seed;
    Exec ex;
    std::vector<CheckReport> reports;

    void emit(CheckReport r) {
        out << serialize_report(r, fmt);
        reports.push_back(std::move(r));
    }
    // plain values: "key = value" lines, or one json object
    void value(const std::string& label, const std::string& v) {
        if (fmt == ReportFormat::Json)
            out << json{{"expr", label}, {"value", v}}.dump() << "\n";
        else
            out << label << " = " << v << "\n";
    }
};

}  // namespace

std::string serialize_report(const CheckReport& r, ReportFormat f) {
    if (f == ReportFormat::Json) return report_json(r).dump() + "\n";
    std::ostringstream o;
    std::string v = verdict_str(r.verdict);
    for (auto& c : v) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    o << "[" << v << "] " << r.check << " (" << r.cases << " cases, " << static_cast<long>(r.millis) << " ms, seed "
      << r.seed << ")\n";
    for (const auto& w : r.witnesses) o << "  witness: " << w.input << "\n    lhs: " << w.lhs << "\n    rhs: " << w.rhs << "\n";
    for (const auto& n : r.notes) o << "  note: " << n << "\n";
    return o.str();
}

int exit_code(const std::vector<CheckReport>& reports) {
    Verdict v = Verdict::Pass;
    for (const auto& r : reports) v = combine(v, r.verdict);
    return v == Verdict::Pass ? 0 : v == Verdict::Fail ? 1 : 2;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Double Poisson (vertex) algebras: checks, brackets, representations, reduction", "dpva"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "human";
    std::vector<std::string> param_kv;
    bool serial = false;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"human", "json"}));
    auto* seed_opt = app.add_option("--seed", seed, "seed (default: DPVA_SEED or 0)");
    app.add_option("--param", param_kv, "override a file parameter, NAME=RAT");
    app.add_flag("--serial", serial, "run checks on one thread");

    std::string file, dims_s, zeta_s, lhs, rhs, which, suite = "paper", orders_s, dir;
    std::vector<std::string> lie;
    int order = 2, jets = -1, degree_cap = 6, len = 3;
    bool lambda = false, vertex = false, check_qj = false;
    std::string emit = "brackets";

    auto* c_dpa = app.add_subcommand("check-dpa", "skewsymmetry and double Jacobi");
    c_dpa->add_option("FILE", file)->required();
    auto* c_dpva = app.add_subcommand("check-dpva", "sesquilinearity, skewsymmetry and Jacobi of the lambda-bracket");
    c_dpva->add_option("FILE", file)->required();
    c_dpva->add_option("--jets", jets, "jet cap when FILE holds a double bracket");
    auto* c_jet = app.add_subcommand("jet", "print the jet algebra as a file");
    c_jet->add_option("FILE", file)->required();
    c_jet->add_option("--order", order, "jet cap")->required();
    c_jet->add_flag("--check", check_qj, "also check the Q o J round trip");
    auto* c_rep = app.add_subcommand("rep", "representation algebra brackets or matrices");
    c_rep->add_option("FILE", file)->required();
    c_rep->add_option("--dims", dims_s)->required();
    c_rep->add_option("--jets", jets);
    c_rep->add_option("--emit", emit)->check(CLI::IsMember({"brackets", "matrices"}));
    auto* c_br = app.add_subcommand("bracket", "double (lambda-)bracket of two expressions");
    c_br->add_option("FILE", file)->required();
    c_br->add_option("--lhs", lhs)->required();
    c_br->add_option("--rhs", rhs)->required();
    c_br->add_flag("--lambda", lambda);
    c_br->add_option("--jets", jets);
    auto* c_h0 = app.add_subcommand("h0", "necklace (vertex) Lie bracket");
    c_h0->add_option("FILE", file)->required();
    c_h0->add_option("--lie", lie)->expected(2)->required();
    c_h0->add_flag("--lambda", lambda);
    c_h0->add_option("--orders", orders_s, "r,s");
    auto* c_face = app.add_subcommand("face", "one face of the commutative cube");
    c_face->add_option("FILE", file)->required();
    c_face->add_option("--which", which)
        ->required()
        ->check(CLI::IsMember({"top", "front", "left", "bottom", "back", "right"}));
    c_face->add_option("--dims", dims_s);
    c_face->add_option("--order", order);
    c_face->add_option("--len", len, "closed word length");
    auto* c_mom = app.add_subcommand("moment-check", "moment map conditions");
    c_mom->add_option("FILE", file)->required();
    c_mom->add_flag("--vertex", vertex);
    c_mom->add_option("--dims", dims_s);
    c_mom->add_option("--order", order, "generator jet order for --vertex");
    auto* c_red = app.add_subcommand("reduce", "Hamiltonian reduction, jets against reduction");
    c_red->add_option("FILE", file)->required();
    c_red->add_option("--dims", dims_s)->required();
    c_red->add_option("--zeta", zeta_s);
    c_red->add_option("--degree-cap", degree_cap);
    c_red->add_option("--jets", jets);
    c_red->add_option("--len", len, "closed word length");
    auto* c_cat = app.add_subcommand("catalog", "bundled suites");
    c_cat->require_subcommand(1);
    auto* c_run = c_cat->add_subcommand("run", "run a suite");
    c_run->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    c_run->add_option("--dir", dir, "catalog directory");
    auto* c_list = c_cat->add_subcommand("list", "list suite items");
    c_list->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    c_list->add_option("--dir", dir, "catalog directory");

    std::vector<std::string> argv_s{"dpva"};
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_s) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 3;
    }

    try {
        Ctx ctx{out, format == "json" ? ReportFormat::Json : ReportFormat::Human, 0, serial ? Exec::Serial : Exec::Parallel, {}};
        ctx.seed = seed_opt->count() ? seed : default_seed();
        auto params = parse_params(param_kv);
        if (dir.empty()) dir = default_catalog();

        if (c_cat->parsed()) {
            auto items = suite_items(suite, dir);
            if (c_list->parsed()) {
                for (const auto& it : items) ctx.value(it.id, it.title);
                return 0;
            }
            for (const auto& it : items) ctx.emit(run_suite_item(it, ctx.seed, ctx.ex));
            return exit_code(ctx.reports);
        }

        AlgebraFile f = load_algebra_file(file, params);
        auto dims = [&]() {
            if (dims_s.empty()) throw Usage("--dims is required here");
            DimVector d = parse_dims(dims_s);
            if (static_cast<int>(d.n.size()) != f.quiver->num_vertices())
                throw Usage("--dims needs one entry per vertex");
            return d;
        };
        int cap = jets >= 0 ? jets : 8;

        if (c_dpa->parsed()) {
            DPAlgebra A = to_dpa(f);
            ctx.emit(db_check_skew(A, 3, ctx.seed, ctx.ex));
            ctx.emit(db_check_jacobi(A, ctx.seed, ctx.ex));
        } else if (c_dpva->parsed()) {
            ctx.emit(dpva_check(to_dpva(f, cap), ctx.seed, ctx.ex));
        } else if (c_jet->parsed()) {
            DPAlgebra A = to_dpa(f);
            DPVAlgebra J = jet_of_dpa(A, order);
            std::string text = serialize_algebra_file(file_of(J));
            if (ctx.fmt == ReportFormat::Json)
                out << json{{"file", text}}.dump() << "\n";
            else
                out << text;
            if (check_qj) ctx.emit(check_QJ_roundtrip(A, order));
        } else if (c_rep->parsed()) {
            DimVector d = dims();
            bool jet = f.lambda || jets > 0;
            int k = f.lambda ? (jets >= 0 ? jets : 1) : std::max(jets, 0);
            if (emit == "matrices") {
                QuiverPtr q = jet ? to_dpva(f, k).quiver() : QuiverPtr(f.quiver);
                RepSpace R{q, d};
                for (Letter l : [&] {
                         std::vector<Letter> ls;
                         for (int a = 0; a < q->num_arrows(); ++a)
                             for (int o = 0; o <= (q->arrow_at(a).inverse >= 0 || !jet ? 0 : k); ++o)
                                 ls.push_back(make_letter(a, o));
                         return ls;
                     }())
                    ctx.value("X(" + q->letter_name(l) + ")", matrix_str(*q, letter_matrix(R, l)));
            } else if (jet) {
                DPVAlgebra V = to_dpva(f, std::max(k, 1));
                CommPVA W = rep_pva(V, d);
                const Quiver& q = *V.quiver();
                auto vars = W.space().vars(k);
                for (Var x : vars)
                    for (Var y : vars) {
                        LCPoly p = W.pair(x, y);
                        if (!p.is_zero()) ctx.value("{" + var_str(q, x) + " _l " + var_str(q, y) + "}", lcpoly_str(q, p));
                    }
            } else {
                CommPA P = rep_pa(to_dpa(f), d);
                const Quiver& q = *f.quiver;
                auto vars = P.space().vars(0);
                for (Var x : vars)
                    for (Var y : vars) {
                        CommDiffPoly p = P.pair(x, y);
                        if (!p.is_zero()) ctx.value("{" + var_str(q, x) + ", " + var_str(q, y) + "}", cpoly_str(q, p));
                    }
            }
        } else if (c_br->parsed()) {
            auto pm = std::map<std::string, Scalar>(f.params.begin(), f.params.end());
            if (lambda || f.lambda) {
                DPVAlgebra V = to_dpva(f, cap);
                NCPoly x = parse_nc_expr(V.quiver(), lhs, pm), y = parse_nc_expr(V.quiver(), rhs, pm);
                ctx.value("<<" + lhs + " _l " + rhs + ">>", ltensor_str(lb_eval(V, x, y)));
            } else {
                DPAlgebra A = to_dpa(f);
                NCPoly x = parse_nc_expr(A.quiver(), lhs, pm), y = parse_nc_expr(A.quiver(), rhs, pm);
                ctx.value("<<" + lhs + ", " + rhs + ">>", tensor_str(db_eval(A, x, y)));
            }
        } else if (c_h0->parsed()) {
            auto pm = std::map<std::string, Scalar>(f.params.begin(), f.params.end());
            if (lambda || f.lambda || !orders_s.empty()) {
                auto [r, s] = orders_s.empty() ? std::pair{0, 0} : parse_orders(orders_s);
                DPVAlgebra V = to_dpva(f, std::max(cap, r + s + 4));
                NCPoly x = parse_nc_expr(V.quiver(), lie[0], pm), y = parse_nc_expr(V.quiver(), lie[1], pm);
                ctx.value("[D^" + std::to_string(r) + "(" + lie[0] + ") _l D^" + std::to_string(s) + "(" + lie[1] + ")]",
                          lh0_str(h0v_lie(V, apply_del(x, r), apply_del(y, s))));
            } else {
                DPAlgebra A = to_dpa(f);
                NCPoly x = parse_nc_expr(A.quiver(), lie[0], pm), y = parse_nc_expr(A.quiver(), lie[1], pm);
                ctx.value("[" + lie[0] + ", " + lie[1] + "]", tensor_str(h0_lie(A, x, y)));
            }
        } else if (c_face->parsed()) {
            if (which == "right") {
                ctx.emit(invariance_check(to_dpva(f, std::max(order, 1) + 2), dims()));
            } else {
                DPAlgebra A = to_dpa(f);
                if (which == "top") ctx.emit(phi_iso_check(A, dims(), order));
                if (which == "left") ctx.emit(face_left_check(A, order, len, ctx.ex));
                if (which == "bottom") ctx.emit(face_bottom_check(A, dims(), order, len, ctx.ex));
                if (which == "back") ctx.emit(face_back_check(A, dims(), order, len, ctx.ex));
                if (which == "front") {
                    DimVector d = dims();
                    CheckReport r = face_front_check(A, d, len, ctx.ex);
                    RepSpace R{A.quiver(), d};
                    const Quiver& q = *A.quiver();
                    auto nk = necklaces(q, 2);
                    for (const auto& x : nk)
                        for (const auto& y : nk) {
                            NCPoly px = nc_word(A.quiver(), x), py = nc_word(A.quiver(), y);
                            r.note("{tr(" + word_str(q, x) + "), tr(" + word_str(q, y) + ")} = " +
                                   cpoly_str(q, cpoisson_eval(A, d, trace(R, px), trace(R, py))));
                        }
                    ctx.emit(std::move(r));
                }
            }
        } else if (c_mom->parsed()) {
            QuiverPtr q = f.quiver;
            if (f.lambda) {
                DPVAlgebra V = to_dpva(f);
                auto m = moment_of(f, V.quiver());
                if (!m) throw Usage("no moment declared and the quiver is not a double quiver");
                ctx.emit(vertex_moment_check(V, *m, order));
                if (!dims_s.empty()) ctx.emit(invariance_check(V, dims()));
            } else {
                DPAlgebra A = to_dpa(f);
                auto m = moment_of(f, A.quiver());
                if (!m) throw Usage("no moment declared and the quiver is not a double quiver");
                ctx.emit(nc_moment_check(A, *m));
                if (vertex) {
                    DPVAlgebra J = jet_of_dpa(A, order + 4);
                    ctx.emit(vertex_moment_check(J, rehome_moment(*m, J.quiver()), order));
                }
                if (!dims_s.empty()) {
                    ctx.emit(comm_comoment_check(A, *m, dims()));
                    if (vertex) ctx.emit(comm_comoment_jet_check(A, *m, dims(), order));
                }
            }
        } else if (c_red->parsed()) {
            DPAlgebra A = to_dpa(f);
            auto m = moment_of(f, A.quiver());
            if (!m) throw Usage("no moment declared and the quiver is not a double quiver");
            if (!zeta_s.empty()) {
                m->zeta = parse_zeta(zeta_s);
                if (static_cast<int>(m->zeta.size()) != f.quiver->num_vertices())
                    throw Usage("--zeta needs one value per vertex");
            }
            ctx.emit(hamred_commute_check(A, *m, dims(), std::max(jets, 0), degree_cap, len, ctx.ex));
        }
        return exit_code(ctx.reports);
    } catch (const ParseError& e) {
        err << file << ":" << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace dpva
