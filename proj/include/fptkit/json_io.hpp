#pragma once

#include "fptkit/classify.hpp"
#include "fptkit/frobenius.hpp"
#include "fptkit/monomial.hpp"
#include "fptkit/poly.hpp"
#include "fptkit/polytope.hpp"
#include "fptkit/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace fptkit {

using Json = nlohmann::json;

// Exact serialization: integers and rationals become 64-bit num/den pairs,
// anything larger is refused rather than rounded.
Json j_int(const Int& v);
Json j_rat(const Rat& r);
Json j_qvec(const QVec& v);
Json j_exps(const ExpVec& m);
Json j_monomial_ideal(const MonomialIdeal& a);
Json j_polytope(const QPolytope& P);
Json j_poly(const Ring& R, const Poly& f);
Json j_fmat(const Field& F, const FMat& M);
Json j_bounds(const FptBounds& b);
Json j_ess(const Ring& R, const EssResult& e);

// Report envelope: schema tag, subcommand, echoed configuration (library
// version added here), and the result body. Keys are emitted sorted, so
// identical inputs dump byte-identically.
Json make_report(const std::string& command, Json run_config, Json result);
std::string dump_report(const Json& report);

struct JsonDiff {
    std::string path;
    Json expected;
    Json actual;
};

// First structural mismatch in a depth-first walk, or nullopt when equal.
std::optional<JsonDiff> json_diff(const Json& expected, const Json& actual);

Json load_json_file(const std::string& path);

} // namespace fptkit
