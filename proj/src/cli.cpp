#include "branchroots/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "branchroots/approx.hpp"
#include "branchroots/budget.hpp"
#include "branchroots/contact.hpp"
#include "branchroots/corpus.hpp"
#include "branchroots/errors.hpp"
#include "branchroots/parse.hpp"
#include "branchroots/report.hpp"
#include "branchroots/resultant.hpp"
#include "branchroots/verify_suites.hpp"

namespace branchroots {

namespace {

// `@path` arguments name a file holding the actual value.
std::string load_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw Error("cannot read input file " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

void apply_env_budget() {
    if (const char* cap = std::getenv("BRANCHROOTS_MAX_DEGREE")) {
        const long long v = std::atoll(cap);
        if (v > 0) {
            budget().max_xdeg = v;
            budget().max_ydeg = v;
        }
    }
}

struct CommonOpts {
    std::string format = "text";
    bool timing = false;

    ReportFormat fmt() const {
        return format == "json" ? ReportFormat::json : ReportFormat::text;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--timing", opts.timing, "Attach wall-clock timing to the report");
}

BranchParam param_from(const std::string& n_str, const std::string& y_str) {
    std::int64_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoll(n_str, &used);
        if (used != n_str.size()) throw Error("bad order: " + n_str);
    } catch (const std::logic_error&) {
        throw Error("bad order: " + n_str);
    }
    return BranchParam(n, parse_unipoly(load_arg(y_str), Var::t));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    apply_env_budget();
    CLI::App app{"Invariants of irreducible plane-curve branches: characteristic "
                 "sequences, semigroups, approximate roots, intersection numbers, "
                 "and machine checks of the classical identities"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Full report for a branch or a polynomial");
    std::string a_n, a_y, a_f;
    CommonOpts a_opts;
    analyze->add_option("--n", a_n, "Order of x = t^n");
    analyze->add_option("--y", a_y, "Parametrization curve y(t)");
    analyze->add_option("--f", a_f, "Polynomial in x, y");
    bool a_noverify = false;
    analyze->add_flag("--no-verify", a_noverify, "Skip the verification block");
    add_common(analyze, a_opts);

    // minpoly
    auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of a parametrization");
    std::string m_n, m_y;
    minpoly->add_option("--n", m_n)->required();
    minpoly->add_option("--y", m_y)->required();

    // approx-root
    auto* aroot = app.add_subcommand("approx-root", "Approximate d-th root");
    std::string r_f;
    std::int64_t r_d = 0;
    aroot->add_option("--f", r_f)->required();
    aroot->add_option("--d", r_d)->required();

    // intersect
    auto* intersect = app.add_subcommand(
        "intersect", "Intersection number by two independent routes; fails on disagreement");
    std::string i_f, i_g, i_n, i_y;
    intersect->add_option("--f", i_f, "First curve as a polynomial");
    intersect->add_option("--n", i_n, "First curve as a parametrization: order");
    intersect->add_option("--y", i_y, "First curve as a parametrization: curve");
    intersect->add_option("--g", i_g, "Second curve")->required();

    // contact
    auto* contact = app.add_subcommand("contact", "Contact order of two branches");
    std::string c_nf, c_yf, c_ng, c_yg;
    contact->add_option("--nf", c_nf)->required();
    contact->add_option("--yf", c_yf)->required();
    contact->add_option("--ng", c_ng)->required();
    contact->add_option("--yg", c_yg)->required();

    // irreducible
    auto* irred = app.add_subcommand("irreducible", "Irreducibility verdict with trace");
    std::string ir_f;
    CommonOpts ir_opts;
    irred->add_option("--f", ir_f)->required();
    add_common(irred, ir_opts);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite over a seeded corpus");
    std::string v_suite;
    CorpusSpec v_spec;
    v_spec.seed = 1;
    v_spec.count = 50;
    verify->add_option("--suite", v_suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"thm11", "thm14", "prop32", "lemma51", "noether", "nested", "am"}));
    verify->add_option("--seed", v_spec.seed);
    verify->add_option("--count", v_spec.count);
    verify->add_option("--max-n", v_spec.max_n);
    verify->add_option("--max-exponent", v_spec.max_exponent);
    verify->add_option("--max-h", v_spec.max_h);

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a deterministic corpus");
    CorpusSpec g_spec;
    g_spec.seed = 1;
    g_spec.count = 10;
    CommonOpts g_opts;
    gen->add_option("--seed", g_spec.seed);
    gen->add_option("--count", g_spec.count);
    gen->add_option("--max-n", g_spec.max_n);
    gen->add_option("--max-exponent", g_spec.max_exponent);
    gen->add_option("--max-h", g_spec.max_h);
    add_common(gen, g_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::stringstream so, se;
        const int code = app.exit(e, so, se);
        out << so.str();
        err << se.str();
        return code;
    }

    try {
        if (*analyze) {
            const auto t0 = std::chrono::steady_clock::now();
            Report rep;
            if (!a_f.empty()) {
                rep = analyze_poly(parse_bipoly(load_arg(a_f)));
            } else if (!a_n.empty() && !a_y.empty()) {
                rep = analyze_param(param_from(a_n, a_y), !a_noverify);
            } else {
                err << "analyze needs either --f or both --n and --y\n";
                return 2;
            }
            bool all_hold = true;
            for (const auto& o : rep.verification)
                all_hold = all_hold && o.status != VerifyStatus::failed;
            if (rep.verdict == "REDUCIBLE") all_hold = true;  // informative, not a failure
            if (a_opts.timing) {
                const auto dt = std::chrono::steady_clock::now() - t0;
                rep.timing_ms = std::chrono::duration<double, std::milli>(dt).count();
            }
            out << rep.render(a_opts.fmt());
            return all_hold ? 0 : 1;
        }
        if (*minpoly) {
            out << minimal_polynomial(param_from(m_n, m_y)).str() << "\n";
            return 0;
        }
        if (*aroot) {
            out << approx_root(parse_bipoly(load_arg(r_f)), r_d).str() << "\n";
            return 0;
        }
        if (*intersect) {
            const BiPoly g = parse_bipoly(load_arg(i_g));
            if (!i_n.empty() && !i_y.empty()) {
                const BranchParam p = param_from(i_n, i_y);
                const Ord a = intersection_param(p, g);
                const Ord b = intersection_resultant(minimal_polynomial(p), g);
                out << "parametric: " << a.str() << "\n";
                out << "resultant:  " << b.str() << "\n";
                if (a != b) {
                    err << "intersection routes disagree\n";
                    return 1;
                }
                return 0;
            }
            if (i_f.empty()) {
                err << "intersect needs either --f or both --n and --y\n";
                return 2;
            }
            const BiPoly f = parse_bipoly(load_arg(i_f));
            const Ord a = intersection_resultant(f, g);
            out << "resultant:  " << a.str() << "\n";
            // Cross-check against the determinant route when it stays small.
            if (f.ydeg() <= 6 && g.ydeg() <= 6 && !f.is_zero() && !g.is_zero()) {
                const UniPoly det = resultant_y_sylvester(f, g);
                const Ord b = det.ord();
                out << "sylvester:  " << b.str() << "\n";
                if (a != b) {
                    err << "intersection routes disagree\n";
                    return 1;
                }
            }
            return 0;
        }
        if (*contact) {
            const BranchParam pf = param_from(c_nf, c_yf);
            const BranchParam pg = param_from(c_ng, c_yg);
            const ContactOrder o = contact_order(pf, pg);
            out << "contact: " << o.value.str() << "\n";
            out << "intersection: "
                << intersection_param(pf, minimal_polynomial(pg)).str() << "\n";
            out << "symmetric: " << (check_symmetry(pf, pg) ? "yes" : "no") << "\n";
            return 0;
        }
        if (*irred) {
            Report rep = analyze_poly(parse_bipoly(load_arg(ir_f)));
            out << rep.render(ir_opts.fmt());
            return 0;
        }
        if (*verify) {
            const bool ok = run_suite(v_suite, v_spec, out);
            out << "suite " << v_suite << ": " << (ok ? "all hold" : "FAILURES") << "\n";
            return ok ? 0 : 1;
        }
        if (*gen) {
            const auto corpus = gen_corpus(g_spec);
            if (g_opts.fmt() == ReportFormat::json) {
                out << "[\n";
                for (std::size_t i = 0; i < corpus.size(); ++i)
                    out << "  {\"n\": " << corpus[i].n << ", \"y\": \"" << corpus[i].y.str()
                        << "\"}" << (i + 1 < corpus.size() ? "," : "") << "\n";
                out << "]\n";
            } else {
                for (const auto& p : corpus)
                    out << "n=" << p.n << " y=" << p.y.str() << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace branchroots
