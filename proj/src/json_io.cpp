#include "rigidity/json_io.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace rigidity {

namespace {

Rat64 rational_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw InputError(std::string(what) + " must be a [numerator, denominator] pair");
    return Rat64(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

std::int64_t to_int64(const boost::multiprecision::cpp_int& v, const char* what) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw InputError(std::string(what) + " does not fit a 64-bit integer");
    return v.convert_to<std::int64_t>();
}

json big_rational_to_json(const BigRational& q) {
    return json::array({to_int64(boost::multiprecision::numerator(q), "rational numerator"),
                        to_int64(boost::multiprecision::denominator(q), "rational denominator")});
}

BigRational big_rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw InputError("rational coordinate must be a [numerator, denominator] pair");
    const auto den = j[1].get<std::int64_t>();
    if (den == 0) throw InputError("rational with zero denominator");
    return BigRational(j[0].get<std::int64_t>(), den);
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph JSON must be an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw InputError("graph \"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (!j["edges"].is_array()) throw InputError("graph \"edges\" must be an array");
    std::vector<Edge> edges;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("each edge must be a pair of integer vertex labels");
        const int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 1 || v < 1) throw InputError("vertex labels are 1-based");
        edges.emplace_back(u - 1, v - 1);
    }
    return Graph(n, std::move(edges));
}

json surface_to_json(const Surface& s) {
    json j = {{"kind", surface_name(s.kind)}};
    if (s.kind == SurfaceKind::Ellipsoid) {
        j["a"] = {s.a.num, s.a.den};
        j["b"] = {s.b.num, s.b.den};
    }
    return j;
}

Surface surface_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("surface JSON must be an object with a \"kind\" string");
    const SurfaceKind kind = surface_kind_from_name(j["kind"].get<std::string>());
    if (kind != SurfaceKind::Ellipsoid) return Surface(kind);
    Rat64 a{2, 1}, b{3, 1};
    if (j.contains("a")) a = rational_from_json(j["a"], "ellipsoid parameter a");
    if (j.contains("b")) b = rational_from_json(j["b"], "ellipsoid parameter b");
    return Surface(kind, a, b);
}

json framework_to_json(const Framework& fw) {
    json config = json::array();
    for (const Vec3& p : fw.config) config.push_back({p.x(), p.y(), p.z()});
    json j = {{"surface", surface_to_json(fw.surface)},
              {"graph", graph_to_json(fw.graph)},
              {"config", config}};
    if (fw.rational_config) {
        json rc = json::array();
        for (const Vec3Q& p : *fw.rational_config)
            rc.push_back({big_rational_to_json(p[0]), big_rational_to_json(p[1]),
                          big_rational_to_json(p[2])});
        j["rational_config"] = rc;
    }
    return j;
}

Framework framework_from_json(const json& j) {
    if (!j.is_object() || !j.contains("surface") || !j.contains("graph"))
        throw InputError("framework JSON must be an object with \"surface\" and \"graph\"");
    const Surface s = surface_from_json(j["surface"]);
    Graph g = graph_from_json(j["graph"]);

    if (j.contains("rational_config")) {
        const json& rc = j["rational_config"];
        if (!rc.is_array()) throw InputError("\"rational_config\" must be an array");
        std::vector<Vec3Q> points;
        for (const json& p : rc) {
            if (!p.is_array() || p.size() != 3)
                throw InputError("each rational point must have three coordinates");
            points.push_back(
                {big_rational_from_json(p[0]), big_rational_from_json(p[1]),
                 big_rational_from_json(p[2])});
        }
        return Framework(std::move(g), s, std::move(points));
    }

    if (!j.contains("config") || !j["config"].is_array())
        throw InputError("framework JSON needs a \"config\" array (or \"rational_config\")");
    Config config;
    for (const json& p : j["config"]) {
        if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() ||
            !p[2].is_number())
            throw InputError("each configuration point must be a triple of numbers");
        config.emplace_back(p[0].get<double>(), p[1].get<double>(), p[2].get<double>());
    }
    return Framework(std::move(g), s, std::move(config));
}

json report_to_json(const RigidityReport& rep) {
    json j = {{"rank_dF", rep.rank_dF},
              {"nullity", rep.nullity},
              {"trivial_dim", rep.trivial_dim},
              {"nontrivial_flex_dim", rep.nontrivial_flex_dim},
              {"is_infinitesimally_rigid", rep.is_infinitesimally_rigid},
              {"is_independent", rep.is_independent},
              {"is_isostatic", rep.is_isostatic},
              {"is_rigid_generic", rep.is_rigid_generic}};
    if (!rep.warning.empty()) j["warning"] = rep.warning;
    return j;
}

RigidityReport report_from_json(const json& j) {
    RigidityReport rep;
    rep.rank_dF = j.at("rank_dF").get<int>();
    rep.nullity = j.at("nullity").get<int>();
    rep.trivial_dim = j.at("trivial_dim").get<int>();
    rep.nontrivial_flex_dim = j.at("nontrivial_flex_dim").get<int>();
    rep.is_infinitesimally_rigid = j.at("is_infinitesimally_rigid").get<bool>();
    rep.is_independent = j.at("is_independent").get<bool>();
    rep.is_isostatic = j.at("is_isostatic").get<bool>();
    rep.is_rigid_generic = j.at("is_rigid_generic").get<bool>();
    if (j.contains("warning")) rep.warning = j["warning"].get<std::string>();
    return rep;
}

json verdict_to_json(const GlobalRigidityVerdict& v) {
    json j = {{"connectivity_ok", v.connectivity_ok},
              {"required_k", v.required_k},
              {"redundancy_ok", v.redundancy_ok},
              {"small_complete_exception", v.small_complete_exception},
              {"verdict", verdict_name(v.verdict)},
              {"notes", v.notes}};
    j["conjecture_note"] = v.conjecture_note ? json(*v.conjecture_note) : json(nullptr);
    return j;
}

GlobalRigidityVerdict verdict_from_json(const json& j) {
    GlobalRigidityVerdict v;
    v.connectivity_ok = j.at("connectivity_ok").get<bool>();
    v.required_k = j.at("required_k").get<int>();
    v.redundancy_ok = j.at("redundancy_ok").get<bool>();
    v.small_complete_exception = j.at("small_complete_exception").get<bool>();
    v.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    if (j.contains("conjecture_note") && !j["conjecture_note"].is_null())
        v.conjecture_note = j["conjecture_note"].get<std::string>();
    if (j.contains("notes")) v.notes = j["notes"].get<std::vector<std::string>>();
    return v;
}

void write_trajectory(std::ostream& os, const FlexPath& path, int crossings,
                      const std::optional<Framework>& witness) {
    for (std::size_t k = 0; k < path.points.size(); ++k) {
        const Config config = unflatten(path.points[k]);
        json pts = json::array();
        for (const Vec3& p : config) pts.push_back({p.x(), p.y(), p.z()});
        const json record = {{"t", k}, {"config", pts}, {"f_e", path.edge_values[k]}};
        os << record.dump() << '\n';
    }
    const json summary = {{"closed", path.closed},
                          {"crossings", crossings},
                          {"witness", witness ? framework_to_json(*witness) : json(nullptr)}};
    os << summary.dump() << '\n';
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_json(const std::string& path) {
    try {
        return json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

}  // namespace rigidity
