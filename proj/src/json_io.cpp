#include "fptkit/json_io.hpp"

#include "fptkit/errors.hpp"

#include <fstream>
#include <sstream>

namespace fptkit {

namespace {

long long checked_si(const Int& v) {
    if (!v.fits_slong_p()) throw ResourceCapError("report integer exceeds 64 bits");
    return v.get_si();
}

} // namespace

Json j_int(const Int& v) { return checked_si(v); }

Json j_rat(const Rat& r) {
    return Json{{"num", checked_si(Int(r.get_num()))}, {"den", checked_si(Int(r.get_den()))}};
}

Json j_qvec(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(j_rat(x));
    return a;
}

Json j_exps(const ExpVec& m) {
    Json a = Json::array();
    for (auto x : m.e) a.push_back(x);
    return a;
}

Json j_monomial_ideal(const MonomialIdeal& a) {
    Json gens = Json::array();
    for (const auto& g : a.gens) gens.push_back(j_exps(g));
    return Json{{"nvars", a.nvars}, {"gens", gens}};
}

Json j_polytope(const QPolytope& P) {
    Json vertices = Json::array();
    for (const auto& v : P.vertices) vertices.push_back(j_qvec(v));
    Json rays = Json::array();
    for (const auto& r : P.rays) rays.push_back(j_qvec(r));
    Json facets = Json::array();
    for (const auto& f : P.facets) facets.push_back(Json{{"a", j_qvec(f.a)}, {"b", j_rat(f.b)}});
    return Json{{"dim", P.dim},
                {"affine_dim", P.affine_dim},
                {"vertices", vertices},
                {"rays", rays},
                {"facets", facets}};
}

Json j_poly(const Ring& R, const Poly& f) { return to_string(R, f); }

Json j_fmat(const Field& F, const FMat& M) {
    Json rows = Json::array();
    for (const auto& r : M) {
        Json row = Json::array();
        for (const auto& c : r) row.push_back(F.to_string(c));
        rows.push_back(row);
    }
    return rows;
}

Json j_bounds(const FptBounds& b) {
    Json j{{"lower", j_rat(b.lower)},
           {"e_used", b.e_used},
           {"lower_provenance", b.lower_provenance},
           {"upper_provenance", b.upper_provenance}};
    j["upper"] = b.upper ? j_rat(*b.upper) : Json(nullptr);
    return j;
}

Json j_ess(const Ring& R, const EssResult& e) {
    Json cert = Json::array();
    for (const auto& step : e.certificate) {
        Field F(FieldCfg{R.F.p(), step.s, step.s == R.F.s() ? R.F.modulus() : std::vector<uint32_t>{}});
        cert.push_back(Json{{"s", step.s}, {"matrix", j_fmat(F, step.M)}});
    }
    return Json{{"lower", e.lower},
                {"upper", e.upper},
                {"exact", e.exact},
                {"method", e.method},
                {"certificate", cert}};
}

Json make_report(const std::string& command, Json run_config, Json result) {
    run_config["version"] = "0.1.0";
    return Json{{"schema", "fptkit-report/1"},
                {"command", command},
                {"run_config", run_config},
                {"result", result}};
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

namespace {

bool diff_walk(const Json& expected, const Json& actual, std::string& path,
               std::optional<JsonDiff>& out) {
    // Signed and unsigned storage of the same integer compare equal.
    if (expected.is_number_integer() && actual.is_number_integer()) {
        if (expected != actual) {
            out = JsonDiff{path.empty() ? "/" : path, expected, actual};
            return false;
        }
        return true;
    }
    if (expected.type() != actual.type()) {
        out = JsonDiff{path.empty() ? "/" : path, expected, actual};
        return false;
    }
    if (expected.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            std::string sub = path + "/" + it.key();
            if (!actual.contains(it.key())) {
                out = JsonDiff{sub, it.value(), Json(nullptr)};
                return false;
            }
            std::string saved = path;
            path = sub;
            if (!diff_walk(it.value(), actual.at(it.key()), path, out)) return false;
            path = saved;
        }
        for (auto it = actual.begin(); it != actual.end(); ++it)
            if (!expected.contains(it.key())) {
                out = JsonDiff{path + "/" + it.key(), Json(nullptr), it.value()};
                return false;
            }
        return true;
    }
    if (expected.is_array()) {
        size_t n = std::min(expected.size(), actual.size());
        for (size_t i = 0; i < n; ++i) {
            std::string saved = path;
            path += "/" + std::to_string(i);
            if (!diff_walk(expected[i], actual[i], path, out)) return false;
            path = saved;
        }
        if (expected.size() != actual.size()) {
            std::string sub = path + "/" + std::to_string(n);
            if (expected.size() > actual.size())
                out = JsonDiff{sub, expected[n], Json(nullptr)};
            else
                out = JsonDiff{sub, Json(nullptr), actual[n]};
            return false;
        }
        return true;
    }
    if (expected != actual) {
        out = JsonDiff{path.empty() ? "/" : path, expected, actual};
        return false;
    }
    return true;
}

} // namespace

std::optional<JsonDiff> json_diff(const Json& expected, const Json& actual) {
    std::optional<JsonDiff> out;
    std::string path;
    diff_walk(expected, actual, path, out);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

} // namespace fptkit
