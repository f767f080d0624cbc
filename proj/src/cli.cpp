#include "fptkit/cli.hpp"

#include "fptkit/ci_hilbert.hpp"
#include "fptkit/classify.hpp"
#include "fptkit/errors.hpp"
#include "fptkit/frobenius.hpp"
#include "fptkit/groebner.hpp"
#include "fptkit/json_io.hpp"
#include "fptkit/monomial.hpp"
#include "fptkit/parse.hpp"
#include "fptkit/poly.hpp"
#include "fptkit/polytope.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#ifndef FPTKIT_GOLDEN_DIR
#define FPTKIT_GOLDEN_DIR "golden"
#endif

namespace fptkit {
namespace {

struct CapSet {
    NuCaps nu{};
    GBCaps gb{};
    uint64_t max_points = 2000000;
    uint64_t product_cap = 200000;
};

// "--caps max-terms=500000,max-degree=30" style key=value list.
CapSet parse_caps(const std::string& text) {
    CapSet caps;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("caps entries take the form key=value");
        std::string key = item.substr(0, eq);
        uint64_t value = 0;
        try {
            size_t used = 0;
            value = std::stoull(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("cap value for " + key + " must be a nonnegative integer");
        }
        if (key == "max-terms") caps.nu.max_terms = value;
        else if (key == "max-degree") caps.gb.max_degree = uint32_t(value);
        else if (key == "max-pairs") caps.gb.max_pairs = value;
        else if (key == "max-points") caps.max_points = value;
        else if (key == "product-cap") caps.product_cap = value;
        else throw ParseError("unknown cap " + key);
        pos = end + 1;
    }
    return caps;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(sep, pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
        pos = end + 1;
    }
    return out;
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("expected a rational number");
    Rat r;
    try {
        r = Rat(text, 10);
    } catch (const std::exception&) {
        throw ParseError("invalid rational " + text);
    }
    if (r.get_den() == 0) throw ParseError("rational denominator must be nonzero");
    r.canonicalize();
    return r;
}

QVec parse_qvec(const std::string& text) {
    QVec v;
    for (const auto& part : split(text, ',')) v.push_back(parse_rat(part));
    return v;
}

// "0,0;1,0;0,1" -> one coordinate vector per ';' group.
std::vector<QVec> parse_points(const std::string& text, size_t dim) {
    std::vector<QVec> pts;
    for (const auto& part : split(text, ';')) {
        QVec v = parse_qvec(part);
        if (v.size() != dim)
            throw ParseError("point " + part + " does not have " + std::to_string(dim) +
                             " coordinates");
        pts.push_back(std::move(v));
    }
    if (pts.empty()) throw ParseError("expected at least one point");
    return pts;
}

HalfSpace parse_cut(const std::string& text, size_t dim) {
    auto parts = split(text, ';');
    if (parts.size() != 2) throw ParseError("a cut takes the form a0,a1,...;b");
    HalfSpace H;
    H.a = parse_qvec(parts[0]);
    if (H.a.size() != dim)
        throw ParseError("cut normal does not have " + std::to_string(dim) + " coordinates");
    H.b = parse_rat(parts[1]);
    return H;
}

Ring build_ring(uint32_t p, uint32_t ext, const std::string& vars_text) {
    auto names = split(vars_text, ',');
    if (names.empty()) throw ParseError("--vars must name at least one variable");
    return make_ring(FieldCfg{p, ext, {}}, names);
}

MonomialOrder pick_order(const std::string& name) {
    if (name == "lex") return lex_order();
    if (name == "grevlex") return grevlex_order();
    throw ParseError("--order must be lex or grevlex");
}

MonomialIdeal to_monomial_ideal(const Ring& R, const std::vector<Poly>& gens) {
    std::vector<ExpVec> ms;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.t.size() != 1)
            throw DomainError("this operation needs monomial generators");
        ms.push_back(g.t[0].m);
    }
    if (ms.empty()) throw DomainError("generators must span a nonzero ideal");
    return monomial_ideal(uint32_t(R.nvars()), std::move(ms));
}

Json poly_list_json(const Ring& R, const std::vector<Poly>& fs) {
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back(to_string(R, f));
    return arr;
}

struct Opts {
    uint32_t p = 2;
    uint32_t ext = 1;
    std::string vars;
    std::string order = "lex";
    uint64_t seed = 0;
    std::string caps_text;
    uint32_t e_max = 0; // 0 means subcommand default
    uint32_t ext_max = 2;
    std::string input;
    std::string c_text;
    std::string second;
    std::string primes_text;
    std::string ell_text;
    std::string cut_text;
    uint64_t q = 0;
    uint64_t t = 0;
    int64_t ci_t = -1;
    uint32_t n = 0;
    uint32_t d = 0;
    uint32_t s = 0;
    std::string name;
    std::string golden_dir = FPTKIT_GOLDEN_DIR;
    CapSet caps;
};

uint32_t eff_e_max(const Opts& o, uint32_t dflt) { return o.e_max ? o.e_max : dflt; }

Json ring_config(const Opts& o) {
    return Json{{"p", o.p},      {"ext", o.ext},   {"vars", o.vars},
                {"order", o.order}, {"seed", o.seed}, {"caps", o.caps_text}};
}

struct Outcome {
    Json report;
    int code = 0;
};

Outcome cmd_fpt_monomial(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    MonomialIdeal a = to_monomial_ideal(R, parse_ideal(R, o.input));
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    Json result{{"fpt", j_rat(monomial_fpt(a))}};
    return {make_report("fpt-monomial", cfg, result), 0};
}

Outcome cmd_nu(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    uint32_t em = eff_e_max(o, 1);
    Json levels = Json::array();
    uint64_t q = 1;
    for (uint32_t e = 1; e <= em; ++e) {
        q *= o.p;
        levels.push_back(Json{{"e", e}, {"q", q}, {"nu", nu(R, gens, e, o.caps.nu)}});
    }
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    cfg["e_max"] = em;
    Json result{{"levels", levels}};
    return {make_report("nu", cfg, result), 0};
}

Outcome cmd_fpt_bounds(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    uint32_t em = eff_e_max(o, 3);
    auto b = fpt_bounds(R, gens, em, o.caps.nu, o.caps.gb);
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    cfg["e_max"] = em;
    return {make_report("fpt-bounds", cfg, j_bounds(b)), 0};
}

Outcome cmd_sharp_test(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    Rat c = parse_rat(o.c_text);
    uint32_t em = eff_e_max(o, 1);
    Json levels = Json::array();
    bool any = false;
    for (uint32_t e = 1; e <= em; ++e) {
        bool sharp = sharply_f_pure_at(R, gens, c, e, o.caps.nu);
        levels.push_back(Json{{"e", e}, {"sharp", sharp}});
        any = any || sharp;
    }
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    cfg["c"] = o.c_text;
    cfg["e_max"] = em;
    Json result{{"c", j_rat(c)}, {"levels", levels}, {"any_sharp", any}};
    return {make_report("sharp-test", cfg, result), 0};
}

Outcome cmd_colon(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto forms = parse_ideal(R, o.input);
    ColonIdeal C = o.second.empty()
                       ? colon_linear_prime(R, forms, o.q)
                       : two_prime_colon_intersection(R, forms, parse_ideal(R, o.second), o.q);
    Json cfg = ring_config(o);
    cfg["forms"] = o.input;
    cfg["q"] = o.q;
    if (!o.second.empty()) cfg["second"] = o.second;
    Json result{{"q", o.q},
                {"frame", j_fmat(R.F, C.frame)},
                {"part", j_monomial_ideal(C.part)}};
    return {make_report("colon", cfg, result), 0};
}

Outcome cmd_gb(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    MonomialOrder ord = pick_order(o.order);
    auto basis = buchberger(R, gens, ord, o.caps.gb);
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    Json result{{"order", o.order}, {"basis", poly_list_json(R, basis)}};
    return {make_report("gb", cfg, result), 0};
}

Outcome cmd_ini(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    MonomialOrder ord = pick_order(o.order);
    auto basis = buchberger(R, gens, ord, o.caps.gb);
    MonomialIdeal ini = initial_ideal(R, basis, ord);
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    Json result{{"order", o.order}, {"ideal", j_monomial_ideal(ini)}};
    return {make_report("ini", cfg, result), 0};
}

Outcome cmd_hilbert(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    cfg["t"] = o.t;
    Json result{{"t", o.t}, {"value", hilbert_value(R, gens, o.t, o.caps.gb)}};
    return {make_report("hilbert", cfg, result), 0};
}

Outcome cmd_height(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    Json result{{"height", height(R, gens, o.caps.gb)}};
    return {make_report("height", cfg, result), 0};
}

Outcome cmd_ci_hilbert(const Opts& o) {
    Json cfg{{"n", o.n}, {"d", o.d}, {"s", o.s}, {"seed", o.seed}};
    Json result;
    if (o.ci_t >= 0) {
        cfg["t"] = o.ci_t;
        result = Json{{"n", o.n},
                      {"d", o.d},
                      {"s", o.s},
                      {"t", o.ci_t},
                      {"value", ci_power_hilbert(o.n, o.d, o.s, uint64_t(o.ci_t))}};
    } else {
        CIStable st = ci_power_hilbert_stable(o.n, o.d, o.s);
        result = Json{{"n", o.n},
                      {"d", o.d},
                      {"s", o.s},
                      {"threshold", st.threshold},
                      {"value", st.value}};
    }
    return {make_report("ci-hilbert", cfg, result), 0};
}

EssConfig ess_config(const Opts& o) {
    EssConfig cfg;
    cfg.ext_max = o.ext_max;
    cfg.max_points = o.caps.max_points;
    cfg.gb = o.caps.gb;
    return cfg;
}

Outcome cmd_ess(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    EssResult ess = essential_codim(R, gens, ess_config(o));
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    cfg["ext_max"] = o.ext_max;
    return {make_report("ess", cfg, j_ess(R, ess)), 0};
}

Outcome cmd_theorem_a(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    uint32_t em = eff_e_max(o, 3);
    TheoremACfg cfg;
    cfg.ess = ess_config(o);
    cfg.nu = o.caps.nu;
    cfg.gb = o.caps.gb;
    TheoremAReport rep = theorem_a_verdict(R, gens, em, cfg);
    Json rc = ring_config(o);
    rc["ideal"] = o.input;
    rc["e_max"] = em;
    rc["ext_max"] = o.ext_max;
    Json result{{"h", rep.h},
                {"d", rep.d},
                {"ess", j_ess(R, rep.ess)},
                {"bounds", j_bounds(rep.bounds)},
                {"verdict", rep.verdict}};
    result["closure_witness"] =
        rep.closure_witness ? j_monomial_ideal(*rep.closure_witness) : Json(nullptr);
    return {make_report("theorem-a", rc, result), 0};
}

Json theorem_b_json(const Ring& R, const TheoremBReport& rep) {
    Json primes = Json::array();
    for (const auto& pc : rep.primes) {
        primes.push_back(Json{{"forms", poly_list_json(R, pc.forms)},
                              {"h", pc.h},
                              {"compatible", pc.compatible},
                              {"degree_inequality", pc.degree_inequality},
                              {"witness_found", pc.witness_found}});
    }
    return Json{{"c", j_rat(rep.c)},
                {"d", rep.d},
                {"e_probed", rep.e_probed},
                {"sharp_probe", rep.sharp_probe},
                {"primes", primes},
                {"h", rep.h},
                {"bound_holds", rep.bound_holds},
                {"conclusion", rep.conclusion}};
}

Outcome cmd_theorem_b(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    Rat c = parse_rat(o.c_text);
    std::vector<std::vector<Poly>> primes;
    for (const auto& entry : split(o.primes_text, ';'))
        primes.push_back(parse_ideal(R, entry));
    uint32_t em = eff_e_max(o, 3);
    TheoremBReport rep = theorem_b_check(R, gens, c, primes, em, o.caps.nu, o.caps.product_cap);
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    cfg["c"] = o.c_text;
    cfg["primes"] = o.primes_text;
    cfg["e_max"] = em;
    return {make_report("theorem-b", cfg, theorem_b_json(R, rep)), 0};
}

Json grunbaum_json(const GrunbaumReport& rep) {
    return Json{{"ratio", j_rat(rep.ratio)},
                {"bound", j_rat(rep.bound)},
                {"holds", rep.holds},
                {"equality", rep.equality}};
}

Outcome cmd_grunbaum(const Opts& o) {
    if (o.n == 0) throw ParseError("--n must be positive");
    auto pts = parse_points(o.input, o.n);
    QPolytope P = convex_hull(o.n, pts);
    HalfSpace H = parse_cut(o.cut_text, o.n);
    GrunbaumReport rep = grunbaum_check(P, H);
    Json cfg{{"n", o.n}, {"points", o.input}, {"cut", o.cut_text}, {"seed", o.seed}};
    return {make_report("grunbaum", cfg, grunbaum_json(rep)), 0};
}

Json davenport_json(const DavenportReport& rep) {
    return Json{{"lattice_count", j_int(rep.lattice_count)},
                {"proj_volume", j_rat(rep.proj_volume)},
                {"bound_paper", j_rat(rep.bound_paper)},
                {"bound_corrected", j_rat(rep.bound_corrected)},
                {"gap", j_rat(rep.gap)},
                {"holds_paper", rep.holds_paper},
                {"holds_corrected", rep.holds_corrected}};
}

Outcome cmd_davenport(const Opts& o) {
    if (o.n == 0) throw ParseError("--n must be positive");
    auto pts = parse_points(o.input, o.n);
    QPolytope P = convex_hull(o.n, pts);
    DavenportReport rep = davenport_check(P, o.t, o.n);
    Json cfg{{"n", o.n}, {"t", o.t}, {"points", o.input}, {"seed", o.seed}};
    return {make_report("davenport", cfg, davenport_json(rep)), 0};
}

Outcome cmd_closure(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    MonomialIdeal a = to_monomial_ideal(R, parse_ideal(R, o.input));
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    Json result{{"closure", j_monomial_ideal(integral_closure(a))}};
    return {make_report("closure", cfg, result), 0};
}

Outcome cmd_restrict(const Opts& o) {
    Ring R = build_ring(o.p, o.ext, o.vars);
    auto gens = parse_ideal(R, o.input);
    Poly ell = parse_poly(R, o.ell_text);
    auto [R2, gens2] = restrict_hyperplane(R, gens, ell);
    Json cfg = ring_config(o);
    cfg["ideal"] = o.input;
    cfg["ell"] = o.ell_text;
    Json result{{"vars", R2.vars}, {"gens", poly_list_json(R2, gens2)}};
    return {make_report("restrict", cfg, result), 0};
}

// --- reproduce pipelines --------------------------------------------------
// Each pipeline recomputes a named record from scratch and must match the
// checked-in golden file byte for byte (after canonical JSON ordering).

void check_pin(const char* name, const char* flag, uint64_t given, uint64_t pinned) {
    if (given != 0 && given != pinned)
        throw DomainError(std::string("reproduce ") + name + " pins " + flag + " to " +
                          std::to_string(pinned));
}

Json reproduce_fermat(const Opts& o) {
    check_pin("fermat", "--p", o.p == 2 ? 0 : o.p, 2);
    check_pin("fermat", "--e-max", o.e_max, 4);
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y", "z"});
    auto gens = parse_ideal(R, "x^3 + y^3 + z^3");
    Json nus = Json::array();
    for (uint32_t e = 1; e <= 4; ++e) nus.push_back(nu(R, gens, e, o.caps.nu));
    Json sharp = Json::array();
    for (uint32_t e = 2; e <= 4; ++e)
        sharp.push_back(sharply_f_pure_at(R, gens, rat(1, 2), e, o.caps.nu));
    auto b = fpt_bounds(R, gens, 4, o.caps.nu, o.caps.gb);
    return Json{{"name", "fermat"},
                {"p", 2},
                {"f", "x^3 + y^3 + z^3"},
                {"nu", nus},
                {"sharp_at_half", sharp},
                {"bounds", j_bounds(b)}};
}

Json reproduce_chsw(const Opts& o) {
    check_pin("chsw", "--p", o.p == 2 ? 0 : o.p, 2);
    check_pin("chsw", "--q", o.q, 4);
    std::vector<std::string> names{"x1", "x2", "x3", "x4", "y1", "y2",
                                   "y3", "y4", "y5", "y6", "y7"};
    Ring R = make_ring(FieldCfg{2, 1, {}}, names);
    Poly f = parse_poly(
        R, "y1 y2 y3 y4 y5 y6 y7 (x1^5 + x2^5 + x3^5 + x4^5) + (x1 x2 x3 x4)^3");
    auto forms = parse_ideal(R, "x1, x2, x3, x4");
    ColonIdeal C = colon_linear_prime(R, forms, 4);
    bool f_in_mq = in_frobenius_max(f, 4);
    bool f_in_colon = colon_contains(R, C, f);
    TheoremBReport rep =
        theorem_b_check(R, {f}, rat(1, 3), {forms}, 2, o.caps.nu, o.caps.product_cap);
    return Json{{"name", "chsw"},
                {"p", 2},
                {"q", 4},
                {"c", j_rat(rat(1, 3))},
                {"d", rep.d},
                {"f_in_mq", f_in_mq},
                {"f_in_colon", f_in_colon},
                {"sharp_probe", rep.sharp_probe},
                {"e_probed", rep.e_probed},
                {"compatible", rep.primes.at(0).compatible},
                {"h", rep.h},
                {"equality", rat(1, 3) * rat(long(rep.d)) == rat(long(rep.h))},
                {"conclusion", rep.conclusion}};
}

Json reproduce_remark_slice(const Opts& o) {
    check_pin("remark-slice", "--p", o.p == 2 ? 0 : o.p, 5);
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    auto gens = parse_ideal(R, "x y - z^2");
    LimitingProbeConfig cfg;
    cfg.step = 1;
    cfg.m_max = 2;
    cfg.t_scale = 3;
    cfg.product_cap = o.caps.product_cap;
    cfg.term_cap = o.caps.nu.max_terms;
    auto levels = limiting_probe(R, gens, lex_order(), cfg);
    Json arr = Json::array();
    for (const auto& L : levels) {
        Json verts = Json::array();
        for (const auto& v : L.scaled_slice.vertices) verts.push_back(j_qvec(v));
        arr.push_back(Json{{"s", L.s},
                           {"t", L.t},
                           {"graded_ok", L.graded_ok},
                           {"chain_ok", L.chain_ok},
                           {"vertices", verts}});
    }
    return Json{{"name", "remark-slice"}, {"p", 5}, {"f", "x y - z^2"}, {"levels", arr}};
}

Json reproduce_grunbaum_simplex(const Opts&) {
    QPolytope T2 = convex_hull(2, {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}});
    HalfSpace H2{{rat(1), rat(1)}, rat(2, 3)};
    GrunbaumReport r2 = grunbaum_check(T2, H2);
    QPolytope T3 = convex_hull(3, {{rat(0), rat(0), rat(0)},
                                   {rat(1), rat(0), rat(0)},
                                   {rat(0), rat(1), rat(0)},
                                   {rat(0), rat(0), rat(1)}});
    HalfSpace H3{{rat(1), rat(1), rat(1)}, rat(3, 4)};
    GrunbaumReport r3 = grunbaum_check(T3, H3);
    Json i2 = grunbaum_json(r2);
    i2["n"] = 2;
    Json i3 = grunbaum_json(r3);
    i3["n"] = 3;
    return Json{{"name", "grunbaum-simplex"}, {"instances", Json::array({i2, i3})}};
}

Json reproduce_davenport_gap(const Opts&) {
    Json instances = Json::array();
    for (uint64_t t : {uint64_t(1), uint64_t(2)}) {
        Rat tt = rat(long(t));
        QPolytope P = convex_hull(2, {{rat(0), rat(0)}, {tt, rat(0)}, {rat(0), tt}});
        DavenportReport rep = davenport_check(P, t, 2);
        Json inst = davenport_json(rep);
        inst["t"] = t;
        instances.push_back(inst);
    }
    return Json{{"name", "davenport-gap"}, {"n", 2}, {"instances", instances}};
}

Outcome cmd_reproduce(const Opts& o) {
    Json computed;
    if (o.name == "fermat") computed = reproduce_fermat(o);
    else if (o.name == "chsw") computed = reproduce_chsw(o);
    else if (o.name == "remark-slice") computed = reproduce_remark_slice(o);
    else if (o.name == "grunbaum-simplex") computed = reproduce_grunbaum_simplex(o);
    else if (o.name == "davenport-gap") computed = reproduce_davenport_gap(o);
    else throw DomainError("unknown record " + o.name);
    Json golden = load_json_file(o.golden_dir + "/" + o.name + ".json");
    Json cfg{{"name", o.name}, {"golden_dir", o.golden_dir}, {"seed", o.seed},
             {"caps", o.caps_text}};
    auto diff = json_diff(golden, computed);
    if (!diff) return {make_report("reproduce", cfg, computed), 0};
    Json body{{"computed", computed},
              {"diff", Json{{"path", diff->path},
                            {"expected", diff->expected},
                            {"actual", diff->actual}}}};
    return {make_report("reproduce", cfg, body), 4};
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"thresholds and certificates for equigenerated graded ideals"};
    app.require_subcommand(1);
    Opts o;

    auto add_ring = [&o](CLI::App* sub, bool with_order = false) {
        sub->add_option("--p", o.p, "prime characteristic")->default_val(2);
        sub->add_option("--ext", o.ext, "field extension degree over the prime field")
            ->default_val(1);
        sub->add_option("--vars", o.vars, "comma separated variable names")->required();
        if (with_order)
            sub->add_option("--order", o.order, "monomial order, lex or grevlex")
                ->default_val("lex");
    };
    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "seed echoed into the run record")->default_val(0);
        sub->add_option("--caps", o.caps_text,
                        "resource caps as key=value pairs, comma separated");
    };

    CLI::App* fpt_monomial = app.add_subcommand(
        "fpt-monomial", "threshold of a monomial ideal from its Newton polyhedron");
    add_ring(fpt_monomial);
    add_common(fpt_monomial);
    fpt_monomial->add_option("ideal", o.input, "comma separated monomial generators")
        ->required();

    CLI::App* nu_cmd =
        app.add_subcommand("nu", "largest power outside the level-e Frobenius power");
    add_ring(nu_cmd);
    add_common(nu_cmd);
    nu_cmd->add_option("--e-max", o.e_max, "probe levels 1..e-max");
    nu_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* bounds_cmd =
        app.add_subcommand("fpt-bounds", "certified lower and upper threshold bounds");
    add_ring(bounds_cmd);
    add_common(bounds_cmd);
    bounds_cmd->add_option("--e-max", o.e_max, "deepest probe level");
    bounds_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* sharp_cmd =
        app.add_subcommand("sharp-test", "sharp containment probe at a candidate threshold");
    add_ring(sharp_cmd);
    add_common(sharp_cmd);
    sharp_cmd->add_option("--c", o.c_text, "candidate threshold, a rational like 1/3")
        ->required();
    sharp_cmd->add_option("--e-max", o.e_max, "probe levels 1..e-max");
    sharp_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* colon_cmd = app.add_subcommand(
        "colon", "Frobenius colon of a linear prime, optionally intersected with a second");
    add_ring(colon_cmd);
    add_common(colon_cmd);
    colon_cmd->add_option("--q", o.q, "Frobenius level, a power of p")->required();
    colon_cmd->add_option("--second", o.second, "second list of linear forms");
    colon_cmd->add_option("forms", o.input, "comma separated linear forms")->required();

    CLI::App* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis");
    add_ring(gb_cmd, true);
    add_common(gb_cmd);
    gb_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* ini_cmd = app.add_subcommand("ini", "initial ideal under the chosen order");
    add_ring(ini_cmd, true);
    add_common(ini_cmd);
    ini_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* hilbert_cmd =
        app.add_subcommand("hilbert", "dimension of the degree-t graded quotient piece");
    add_ring(hilbert_cmd, true);
    add_common(hilbert_cmd);
    hilbert_cmd->add_option("--t", o.t, "degree to evaluate")->required();
    hilbert_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* height_cmd = app.add_subcommand("height", "codimension of the vanishing locus");
    add_ring(height_cmd, true);
    add_common(height_cmd);
    height_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* ci_cmd = app.add_subcommand(
        "ci-hilbert", "Hilbert function of a power of a generic complete intersection");
    ci_cmd->add_option("--n", o.n, "number of forms and ambient codimension")->required();
    ci_cmd->add_option("--d", o.d, "common degree of the forms")->required();
    ci_cmd->add_option("--s", o.s, "power to expand")->required();
    ci_cmd->add_option("--t", o.ci_t, "optional single degree, otherwise report the plateau");
    add_common(ci_cmd);

    CLI::App* ess_cmd = app.add_subcommand(
        "ess", "fewest variables supporting the ideal after a linear change");
    add_ring(ess_cmd);
    add_common(ess_cmd);
    ess_cmd->add_option("--ext-max", o.ext_max, "largest extension degree searched")
        ->default_val(2);
    ess_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* ta_cmd = app.add_subcommand(
        "theorem-a", "equality test for the threshold against height over degree");
    add_ring(ta_cmd);
    add_common(ta_cmd);
    ta_cmd->add_option("--e-max", o.e_max, "deepest probe level");
    ta_cmd->add_option("--ext-max", o.ext_max, "largest extension degree searched")
        ->default_val(2);
    ta_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* tb_cmd = app.add_subcommand(
        "theorem-b", "lower bound certificate from sharp containment at a compatible prime");
    add_ring(tb_cmd);
    add_common(tb_cmd);
    tb_cmd->add_option("--c", o.c_text, "candidate threshold, a rational like 1/3")
        ->required();
    tb_cmd->add_option("--primes", o.primes_text,
                       "semicolon separated lists of linear forms")
        ->required();
    tb_cmd->add_option("--e-max", o.e_max, "deepest probe level");
    tb_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* gr_cmd = app.add_subcommand(
        "grunbaum", "volume ratio of a centroid halfspace cut against the dimension bound");
    gr_cmd->add_option("--n", o.n, "ambient dimension")->required();
    gr_cmd->add_option("--cut", o.cut_text, "halfspace a0,a1,...;b meaning a.x >= b")
        ->required();
    add_common(gr_cmd);
    gr_cmd->add_option("points", o.input, "semicolon separated vertex list")->required();

    CLI::App* dav_cmd = app.add_subcommand(
        "davenport", "lattice point count of a subpolytope of the scaled simplex");
    dav_cmd->add_option("--n", o.n, "ambient dimension, at most 3")->required();
    dav_cmd->add_option("--t", o.t, "simplex scale")->required();
    add_common(dav_cmd);
    dav_cmd->add_option("points", o.input, "semicolon separated vertex list")->required();

    CLI::App* cl_cmd = app.add_subcommand("closure", "integral closure of a monomial ideal");
    add_ring(cl_cmd);
    add_common(cl_cmd);
    cl_cmd->add_option("ideal", o.input, "comma separated monomial generators")->required();

    CLI::App* re_cmd =
        app.add_subcommand("restrict", "restriction to the hyperplane cut out by a form");
    add_ring(re_cmd);
    add_common(re_cmd);
    re_cmd->add_option("--ell", o.ell_text, "linear form to cut along")->required();
    re_cmd->add_option("ideal", o.input, "comma separated generators")->required();

    CLI::App* rep_cmd = app.add_subcommand(
        "reproduce", "recompute a named record and diff it against the checked-in copy");
    rep_cmd->add_option("name", o.name, "record name")->required();
    rep_cmd->add_option("--p", o.p, "must match the record when given");
    rep_cmd->add_option("--q", o.q, "must match the record when given");
    rep_cmd->add_option("--e-max", o.e_max, "must match the record when given");
    rep_cmd->add_option("--golden-dir", o.golden_dir, "directory holding the records");
    add_common(rep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        o.caps = parse_caps(o.caps_text);
        Outcome out;
        if (app.got_subcommand(fpt_monomial)) out = cmd_fpt_monomial(o);
        else if (app.got_subcommand(nu_cmd)) out = cmd_nu(o);
        else if (app.got_subcommand(bounds_cmd)) out = cmd_fpt_bounds(o);
        else if (app.got_subcommand(sharp_cmd)) out = cmd_sharp_test(o);
        else if (app.got_subcommand(colon_cmd)) out = cmd_colon(o);
        else if (app.got_subcommand(gb_cmd)) out = cmd_gb(o);
        else if (app.got_subcommand(ini_cmd)) out = cmd_ini(o);
        else if (app.got_subcommand(hilbert_cmd)) out = cmd_hilbert(o);
        else if (app.got_subcommand(height_cmd)) out = cmd_height(o);
        else if (app.got_subcommand(ci_cmd)) out = cmd_ci_hilbert(o);
        else if (app.got_subcommand(ess_cmd)) out = cmd_ess(o);
        else if (app.got_subcommand(ta_cmd)) out = cmd_theorem_a(o);
        else if (app.got_subcommand(tb_cmd)) out = cmd_theorem_b(o);
        else if (app.got_subcommand(gr_cmd)) out = cmd_grunbaum(o);
        else if (app.got_subcommand(dav_cmd)) out = cmd_davenport(o);
        else if (app.got_subcommand(cl_cmd)) out = cmd_closure(o);
        else if (app.got_subcommand(re_cmd)) out = cmd_restrict(o);
        else if (app.got_subcommand(rep_cmd)) out = cmd_reproduce(o);
        else return 2;
        std::cout << dump_report(out.report);
        return out.code;
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fptkit
