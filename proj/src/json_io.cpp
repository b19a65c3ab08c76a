#include "sharptop/json_io.hpp"

namespace sharptop {

namespace {

Rational rational_from(const Json& j, const char* field) {
    if (!j.is_string())
        throw ParseError(std::string(field) + " must be a rational string \"p/q\"", 0);
    return Rational::parse(j.get<std::string>());
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'", 0);
    return *it;
}

} // namespace

Json to_json(const SymbolicNet& net) {
    Json terms = Json::array();
    for (const auto& t : net.terms()) {
        terms.push_back(Json{{"re", t.coeff.re.str()},
                             {"im", t.coeff.im.str()},
                             {"exp", t.exponent.str()}});
    }
    return Json{{"terms", std::move(terms)}};
}

SymbolicNet symbolic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms")) throw ParseError("expected {\"terms\": [...]}", 0);
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("'terms' must be an array", 0);
    std::vector<Monomial> parsed;
    parsed.reserve(terms.size());
    for (const auto& t : terms) {
        QComplex c{rational_from(field(t, "re"), "re"), rational_from(field(t, "im"), "im")};
        parsed.push_back({c, rational_from(field(t, "exp"), "exp")});
    }
    return normalize(std::move(parsed));
}

Json to_json(const PiecewiseNet& net) {
    Json bps = Json::array();
    for (const auto& b : net.breakpoints()) bps.push_back(b.str());
    Json pieces = Json::array();
    for (const auto& p : net.pieces()) pieces.push_back(to_json(p));
    return Json{{"breakpoints", std::move(bps)}, {"pieces", std::move(pieces)}, {"tail", to_json(net.tail())}};
}

PiecewiseNet piecewise_from_json(const Json& j) {
    const Json& bps = field(j, "breakpoints");
    const Json& pieces = field(j, "pieces");
    if (!bps.is_array() || !pieces.is_array())
        throw ParseError("'breakpoints' and 'pieces' must be arrays", 0);
    std::vector<Rational> breakpoints;
    for (const auto& b : bps) breakpoints.push_back(rational_from(b, "breakpoint"));
    std::vector<SymbolicNet> parsed;
    for (const auto& p : pieces) parsed.push_back(symbolic_from_json(p));
    return PiecewiseNet(std::move(breakpoints), std::move(parsed), symbolic_from_json(field(j, "tail")));
}

Json to_json(const GenScalar& s) {
    return s.is_symbolic() ? to_json(s.symbolic()) : to_json(s.piecewise());
}

GenScalar gen_scalar_from_json(const Json& j) {
    if (j.is_object() && j.contains("breakpoints")) return GenScalar(piecewise_from_json(j));
    return GenScalar(symbolic_from_json(j));
}

Json to_json(const GenVec& u) {
    Json out = Json::array();
    for (const auto& c : u) out.push_back(to_json(c));
    return out;
}

GenVec gen_vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of nets", 0);
    GenVec u;
    u.reserve(j.size());
    for (const auto& c : j) u.push_back(gen_scalar_from_json(c));
    return u;
}

Json to_json(const CompactBox& box) {
    Json iv = Json::array();
    for (const auto& [a, b] : box.intervals) iv.push_back(Json::array({a.str(), b.str()}));
    return Json{{"intervals", std::move(iv)}};
}

CompactBox box_from_json(const Json& j) {
    const Json& iv = field(j, "intervals");
    if (!iv.is_array()) throw ParseError("'intervals' must be an array of [a, b] pairs", 0);
    std::vector<std::pair<Rational, Rational>> intervals;
    for (const auto& pair_j : iv) {
        if (!pair_j.is_array() || pair_j.size() != 2)
            throw ParseError("box interval must be a pair", 0);
        intervals.emplace_back(rational_from(pair_j[0], "a"), rational_from(pair_j[1], "b"));
    }
    return CompactBox(std::move(intervals));
}

Json to_json(const Functional& f) {
    if (f.is_pairing()) return Json{{"kind", "pairing_vector"}, {"w", to_json(f.vector())}};
    return Json{{"kind", "blackbox"}, {"id", f.id()}, {"dim", f.dim()}};
}

Functional functional_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "pairing_vector") return Functional::pairing_vector(gen_vec_from_json(field(j, "w")));
    if (kind == "blackbox") {
        const std::string id = field(j, "id").get<std::string>();
        const std::size_t dim = field(j, "dim").get<std::size_t>();
        if (id == "quadratic_self_pairing") {
            return Functional::blackbox(id, dim, [](const GenVec& u) { return pair(u, u); });
        }
        throw ParseError("unknown blackbox id '" + id + "'", 0);
    }
    throw ParseError("unknown functional kind '" + kind + "'", 0);
}

namespace {

UltraSeminorm seminorm_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "abs_e") {
        std::size_t coord = field(j, "coord").get<std::size_t>();
        Rational shift = j.contains("shift") ? rational_from(j["shift"], "shift") : Rational(0);
        return UltraSeminorm::abs_e_coord(coord, shift);
    }
    if (kind == "max") {
        std::size_t dim = field(j, "dim").get<std::size_t>();
        std::vector<Rational> shifts;
        if (j.contains("shifts"))
            for (const auto& s : j["shifts"]) shifts.push_back(rational_from(s, "shift"));
        return UltraSeminorm::max_ultranorm(dim, std::move(shifts));
    }
    throw ParseError("unknown seminorm kind '" + kind + "'", 0);
}

} // namespace

SeminormFamily family_from_json(const Json& j) {
    const Json& list = field(j, "seminorms");
    if (!list.is_array() || list.empty())
        throw ParseError("'seminorms' must be a nonempty array", 0);
    std::vector<UltraSeminorm> members;
    for (const auto& s : list) members.push_back(seminorm_from_json(s));
    return SeminormFamily(std::move(members));
}

ConvexSetSpec convex_spec_from_json(const Json& j) {
    const Json& list = field(j, "balls");
    if (!list.is_array() || list.empty()) throw ParseError("'balls' must be a nonempty array", 0);
    std::vector<BallSpec> balls;
    for (const auto& b : list) {
        double eta = field(b, "eta").get<double>();
        Rational shift = b.contains("shift") ? rational_from(b["shift"], "shift") : Rational(0);
        balls.push_back({seminorm_from_json(field(b, "seminorm")), eta, shift});
    }
    return ConvexSetSpec(std::move(balls));
}

Json to_json(const ValEstimate& v) {
    Json out;
    out["infinite"] = v.infinite;
    if (!v.infinite) {
        out["estimate"] = v.estimate;
        out["half_width"] = v.half_width;
    }
    out["window"] = Json::array({v.window_k_lo, v.window_k_hi});
    return out;
}

Json to_json(const Classification& c) {
    Json out;
    switch (c.kind) {
    case NetClass::Moderate:
        out["class"] = "Moderate";
        out["N"] = c.order;
        break;
    case NetClass::Negligible:
        out["class"] = "Negligible";
        out["q_max"] = c.order;
        break;
    case NetClass::Undecided:
        out["class"] = "Undecided";
        break;
    }
    out["val"] = to_json(c.val);
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

} // namespace sharptop
