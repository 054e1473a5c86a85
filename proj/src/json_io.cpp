#include "mvhom/json_io.hpp"

#include <fstream>

#include "mvhom/errors.hpp"

namespace mvhom {

json space_to_json(const FinSpace& space) {
    json j;
    j["points"] = space.points();
    json leq = json::array();
    for (int i = 0; i < space.size(); ++i)
        for (int k = 0; k < space.size(); ++k)
            if (i != k && space.leq(i, k)) leq.push_back({space.point(i), space.point(k)});
    j["leq"] = leq;
    j["t0"] = space.t0();
    return j;
}

FinSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw InputError("space: expected {\"points\": [...], \"leq\": [[x,y],...]}");
    std::vector<std::string> points;
    for (const auto& p : j["points"]) {
        if (!p.is_string()) throw InputError("space: points must be strings");
        points.push_back(p.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> gens;
    if (j.contains("leq")) {
        for (const auto& pair : j["leq"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw InputError("space: leq entries must be [x, y] pairs");
            gens.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
        }
    }
    bool t0 = j.value("t0", false);
    return make_space(std::move(points), gens, t0);
}

json corr_to_json(const Corr& corr) {
    json j;
    j["source"] = space_to_json(corr.source());
    j["target"] = space_to_json(corr.target());
    json pairs = json::array();
    for (const auto& [x, y] : corr.pairs())
        pairs.push_back({corr.source().point(x), corr.target().point(y)});
    j["pairs"] = pairs;
    return j;
}

void graph_from_json(const json& j, FinSpace& source, FinSpace& target,
                     std::vector<std::pair<int, int>>& pairs) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.contains("pairs"))
        throw InputError("correspondence: expected {source, target, pairs}");
    source = space_from_json(j["source"]);
    target = space_from_json(j["target"]);
    pairs.clear();
    for (const auto& pair : j["pairs"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw InputError("correspondence: pairs entries must be [x, y]");
        pairs.push_back({source.index_of(pair[0].get<std::string>()),
                         target.index_of(pair[1].get<std::string>())});
    }
}

Corr corr_from_json(const json& j) {
    FinSpace source, target;
    std::vector<std::pair<int, int>> pairs;
    graph_from_json(j, source, target, pairs);
    return Corr(std::move(source), std::move(target), std::move(pairs));
}

json validity_to_json(const Validity& v) {
    json j;
    j["is_valid"] = v.is_valid;
    json failures = json::array();
    for (const auto& f : v.failures) failures.push_back({{"criterion", f.criterion},
                                                         {"witness", f.witness}});
    j["failures"] = failures;
    return j;
}

json chain_to_json(const Chain& chain) {
    json j;
    j["degree"] = chain.degree;
    json terms = json::array();
    for (const auto& [simplex, coeff] : chain.terms)
        terms.push_back({{"simplex", corr_to_json(simplex)}, {"coeff", coeff}});
    j["terms"] = terms;
    return j;
}

Chain chain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
        throw InputError("chain: expected {degree, terms}");
    Chain chain(j["degree"].get<int>());
    if (chain.degree < 0) throw InputError("chain: degree must be >= 0");
    const FinSpace& model = *delta_fin(chain.degree).space;
    for (const auto& term : j["terms"]) {
        if (!term.contains("simplex") || !term.contains("coeff"))
            throw InputError("chain: terms need simplex and coeff");
        Corr simplex = corr_from_json(term["simplex"]);
        if (simplex.source() != model)
            throw InputError("chain: simplex source is not the simplex model of the degree");
        chain.add(simplex, term["coeff"].get<long long>());
    }
    return chain;
}

json identity_report_to_json(const IdentityReport& report) {
    json out = json::array();
    for (const auto& c : report.checks) {
        json item;
        item["identity"] = c.identity;
        item["n"] = c.n;
        item["i"] = c.i >= 0 ? json(c.i) : json(nullptr);
        item["j"] = c.j >= 0 ? json(c.j) : json(nullptr);
        item["status"] = c.ok ? "ok" : "fail";
        out.push_back(item);
    }
    return out;
}

json homology_report_to_json(const HomologyReport& report) {
    json j;
    j["model"] = "finite";
    json groups = json::array();
    for (const auto& g : report.groups) {
        json item;
        item["n"] = g.n;
        if (g.computed) {
            item["rank"] = g.group.rank;
            json torsion = json::array();
            for (const auto& t : g.group.torsion) torsion.push_back(t.convert_to<long long>());
            item["torsion"] = torsion;
        } else {
            item["skipped"] = g.skipped_reason;
        }
        groups.push_back(item);
    }
    j["groups"] = groups;
    j["bound_exceeded"] = report.bound_exceeded;
    return j;
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["cycle"] = chain_to_json(cert.cycle);
    j["filling"] = chain_to_json(cert.filling);
    j["steps"] = cert.steps;
    j["verified"] = cert.verified;
    return j;
}

json fixed_set_report_to_json(const FixedSetReport& report, const FinSpace& space) {
    json j;
    j["fixed_set"] = point_names(space, report.fixed_set);
    json iterations = json::array();
    for (const auto& it : report.iterations) iterations.push_back(point_names(space, it));
    j["iterations"] = iterations;
    j["stabilized_at"] = report.stabilized_at;
    return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace mvhom
