#include "branchroots/report.hpp"

#include <json.hpp>

#include <sstream>

#include "branchroots/approx.hpp"
#include "branchroots/contact.hpp"

namespace branchroots {

namespace {

nlohmann::ordered_json seq_json(const std::vector<std::int64_t>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

std::string seq_text(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

std::string Report::render(ReportFormat fmt) const {
    if (fmt == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["input"] = {{"kind", input_kind}, {"value", input}};
        nlohmann::ordered_json inv;
        if (n) inv["n"] = *n;
        if (!b.empty()) {
            inv["b"] = seq_json(b);
            inv["B"] = seq_json(B);
            inv["beta"] = seq_json(beta);
            inv["nk"] = seq_json(nk);
        }
        if (conductor) inv["conductor"] = *conductor;
        j["invariants"] = std::move(inv);
        nlohmann::ordered_json polys;
        if (!minpoly.empty()) polys["minimal_polynomial"] = minpoly;
        nlohmann::ordered_json rootsj = nlohmann::ordered_json::array();
        for (const auto& r : roots)
            rootsj.push_back({{"k", r.k}, {"order", r.order}, {"root", r.poly}});
        polys["approximate_roots"] = std::move(rootsj);
        j["polynomials"] = std::move(polys);
        nlohmann::ordered_json inters = nlohmann::ordered_json::array();
        for (const auto& r : roots)
            inters.push_back({{"k", r.k},
                              {"parametric", r.i_param},
                              {"resultant", r.i_resultant}});
        j["intersections"] = std::move(inters);
        if (!verdict.empty()) {
            j["irreducibility"] = {{"verdict", verdict}, {"trace", trace}};
        }
        nlohmann::ordered_json ver = nlohmann::ordered_json::array();
        for (const auto& o : verification) {
            nlohmann::ordered_json w;
            for (const auto& [k, v] : o.witness) w[k] = v;
            ver.push_back({{"claim", o.claim}, {"status", to_string(o.status)},
                           {"witness", std::move(w)}});
        }
        j["verification"] = std::move(ver);
        if (timing_ms) j["timing_ms"] = *timing_ms;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "input: " << input_kind << " " << input << "\n";
    if (n) os << "n: " << *n << "\n";
    if (!b.empty()) {
        os << "b: " << seq_text(b) << "\n";
        os << "B: " << seq_text(B) << "\n";
        os << "beta: " << seq_text(beta) << "\n";
        os << "nk: " << seq_text(nk) << "\n";
    }
    if (conductor) os << "conductor: " << *conductor << "\n";
    if (!minpoly.empty()) os << "minimal polynomial: " << minpoly << "\n";
    for (const auto& r : roots)
        os << "root[" << r.k << "] order " << r.order << ": " << r.poly
           << "   intersection " << r.i_param << " (parametric) " << r.i_resultant
           << " (resultant)\n";
    if (!verdict.empty()) {
        os << "verdict: " << verdict << "\n";
        for (const auto& t : trace) os << "  " << t << "\n";
    }
    for (const auto& o : verification) {
        os << o.claim << ": " << to_string(o.status) << "\n";
        for (const auto& [k, v] : o.witness) os << "    " << k << " = " << v << "\n";
    }
    if (timing_ms) os << "timing_ms: " << *timing_ms << "\n";
    return os.str();
}

Report analyze_param(const BranchParam& p, bool with_verification) {
    Report rep;
    rep.input_kind = "parametrization";
    rep.input = "x = t^" + std::to_string(p.n) + ", y = " + p.y.str();
    const CharSeq cf = characteristic(p);
    rep.n = p.n;
    rep.b = cf.b;
    rep.B = cf.B;
    rep.beta = cf.beta;
    rep.nk = cf.nk;
    rep.conductor = Semigroup(cf.beta).conductor();
    const BiPoly f = minimal_polynomial(p);
    rep.minpoly = f.str();
    for (int k = 1; k <= cf.h() + 1; ++k) {
        const std::int64_t order = cf.B[static_cast<std::size_t>(k) - 1];
        const BiPoly r = approx_root(f, order);
        Report::RootLine line;
        line.k = k;
        line.order = order;
        line.poly = r.str();
        line.i_param = intersection_param(p, r).str();
        line.i_resultant = intersection_resultant(f, r).str();
        rep.roots.push_back(std::move(line));
    }
    if (with_verification) rep.verification = verify_am_roots(p);
    return rep;
}

Report analyze_poly(const BiPoly& phi) {
    Report rep;
    rep.input_kind = "polynomial";
    rep.input = phi.str();
    const IrreducibilityVerdict v = irreducibility_test(phi);
    rep.verdict = to_string(v.status);
    for (const auto& s : v.trace) {
        std::ostringstream os;
        os << "step " << s.k << ": gcd " << s.gcd_before << ", root degree " << s.root_deg
           << ", intersection " << s.c.str() << ", gcd -> " << s.gcd_after;
        rep.trace.push_back(os.str());
    }
    if (!v.reason.empty()) rep.trace.push_back(v.reason);
    if (v.status == IrredStatus::irreducible) {
        rep.n = phi.ydeg();
        rep.beta = v.semigroup->gens();
        rep.B = v.semigroup->B();
        rep.nk = v.semigroup->nk();
        rep.b = beta_to_b(v.semigroup->gens());
        rep.conductor = v.semigroup->conductor();
    }
    return rep;
}

}  // namespace branchroots
