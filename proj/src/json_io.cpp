#include "exg/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace exg {

double round9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return std::strtod(buf, nullptr);
}

namespace {

Json matrix_to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(round9(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing required key '") + key + "'");
    return j.at(key);
}

}  // namespace

Json graph_to_json(const VertexWeightedGraph& g) {
    Json j;
    j["n"] = g.order();
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    Json weights = Json::array();
    for (const auto& w : g.weights()) weights.push_back(format_rational(w));
    j["weights"] = std::move(weights);
    return j;
}

VertexWeightedGraph graph_from_json(const Json& j) {
    const int n = require(j, "n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : require(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("edge entries must be [i, j] pairs");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    std::vector<Rational> weights;
    if (j.contains("weights")) {
        for (const auto& w : j.at("weights")) weights.push_back(parse_rational(w.get<std::string>()));
    }
    return VertexWeightedGraph::from_edge_list(n, edges, weights);
}

Scenario scenario_from_json(const Json& j) {
    std::vector<Scenario::Test> tests;
    for (const auto& t : require(j, "tests")) {
        Scenario::Test test;
        test.id = require(t, "id").get<std::string>();
        for (const auto& o : require(t, "outcomes")) test.outcomes.push_back(o.get<std::string>());
        tests.push_back(std::move(test));
    }
    // Contexts reference tests by id; resolve to indices.
    std::vector<std::vector<int>> contexts;
    Scenario tmp(tests, {});
    for (const auto& ctx : require(j, "contexts")) {
        std::vector<int> c;
        for (const auto& id : ctx) c.push_back(tmp.test_index(id.get<std::string>()));
        contexts.push_back(std::move(c));
    }
    return Scenario(std::move(tests), std::move(contexts));
}

SExpression sexpression_from_json(const Json& j, const Scenario& s) {
    std::vector<SExpression::Term> terms;
    for (const auto& t : require(j, "terms")) {
        SExpression::Term term;
        term.weight = parse_rational(require(t, "weight").get<std::string>());
        std::map<int, int> assignment;
        for (const auto& [id, outcome] : require(t, "event").items()) {
            const int test = s.test_index(id);
            assignment[test] = s.outcome_index(test, outcome.get<std::string>());
        }
        term.event = Event(std::move(assignment));
        terms.push_back(std::move(term));
    }
    return SExpression(std::move(terms));
}

std::vector<double> assignment_from_json(const Json& j) {
    std::vector<double> p;
    for (const auto& v : require(j, "p")) p.push_back(v.get<double>());
    return p;
}

Json or_to_json(const OrthonormalRepresentation& rep) {
    Json j;
    j["dim"] = rep.dim;
    Json handle = Json::array();
    for (Eigen::Index k = 0; k < rep.handle.size(); ++k) handle.push_back(round9(rep.handle(k)));
    j["handle"] = std::move(handle);
    Json vectors = Json::array();
    for (const auto& v : rep.vectors) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < v.size(); ++k) row.push_back(round9(v(k)));
        vectors.push_back(std::move(row));
    }
    j["vectors"] = std::move(vectors);
    if (!rep.degenerate.empty()) j["degenerate"] = rep.degenerate;
    return j;
}

OrthonormalRepresentation or_from_json(const Json& j) {
    OrthonormalRepresentation rep;
    rep.dim = require(j, "dim").get<int>();
    if (rep.dim < 1) throw InputError("representation dimension must be >= 1");
    const auto& handle = require(j, "handle");
    rep.handle.resize(static_cast<Eigen::Index>(handle.size()));
    for (std::size_t k = 0; k < handle.size(); ++k)
        rep.handle(static_cast<Eigen::Index>(k)) = handle.at(k).get<double>();
    for (const auto& vec : require(j, "vectors")) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(vec.size()));
        for (std::size_t k = 0; k < vec.size(); ++k) v(static_cast<Eigen::Index>(k)) = vec.at(k).get<double>();
        rep.vectors.push_back(std::move(v));
    }
    return rep;
}

Json bounds_report_to_json(const BoundsReport& rep) {
    Json j;
    j["alpha"] = format_rational(rep.alpha);
    j["alpha_witness"] = rep.alpha_witness.members();
    j["theta"] = Json{{"lower", round9(rep.theta_lower)}, {"upper", round9(rep.theta_upper)}};
    j["alpha_star"] = format_rational(rep.alpha_star);
    Json witness = Json::array();
    for (const auto& v : rep.alpha_star_witness) witness.push_back(format_rational(v));
    j["alpha_star_witness"] = std::move(witness);
    if (!rep.theta_converged) j["theta_converged"] = false;
    return j;
}

Json verdict_to_json(const MembershipVerdict& v) {
    Json j;
    j["body"] = body_name(v.body);
    if (v.indeterminate) {
        j["indeterminate"] = true;
        j["slack"] = round9(v.slack);
        return j;
    }
    j["inside"] = v.inside;
    j["boundary"] = v.boundary;
    Json cert;
    switch (v.body) {
        case Body::QSTAB:
            if (!v.inside && v.violated_clique) {
                cert = Json{{"violated_clique", v.violated_clique->members()}};
            } else {
                cert = Json{{"max_clique_slack", round9(v.slack)}};
            }
            break;
        case Body::STAB:
            if (v.inside) {
                Json comb = Json::array();
                for (const auto& [set, coeff] : v.convex_combination)
                    comb.push_back(Json{{"set", set.members()}, {"coefficient", format_rational(coeff)}});
                cert = Json{{"combination", std::move(comb)}};
            } else {
                Json f = Json::array();
                for (const auto& y : v.separating_functional) f.push_back(format_rational(y));
                cert = Json{{"separating_functional", std::move(f)}};
            }
            break;
        case Body::TH:
            if (v.inside) {
                cert = Json{{"moment_matrix", matrix_to_json(v.feasibility_matrix)}};
            } else {
                cert = Json{{"separating_matrix", matrix_to_json(v.separating_matrix)},
                            {"value", round9(v.separation_value)}};
            }
            break;
    }
    j["certificate"] = std::move(cert);
    return j;
}

Json event_to_json(const Scenario& s, const Event& e) {
    Json j = Json::object();
    for (const auto& [test, outcome] : e.assignment()) {
        const auto& t = s.tests()[static_cast<std::size_t>(test)];
        j[t.id] = t.outcomes[static_cast<std::size_t>(outcome)];
    }
    return j;
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON");
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

}  // namespace exg
