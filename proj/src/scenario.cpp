#include "exg/scenario.hpp"

#include <algorithm>
#include <set>

namespace exg {

Scenario::Scenario(std::vector<Test> tests, std::vector<std::vector<int>> contexts)
    : tests_(std::move(tests)), contexts_(std::move(contexts)) {
    std::set<std::string> ids;
    for (const auto& t : tests_) {
        if (t.outcomes.size() < 2)
            throw InputError("test '" + t.id + "' needs at least 2 outcomes");
        if (!ids.insert(t.id).second) throw InputError("duplicate test id '" + t.id + "'");
        std::set<std::string> outs(t.outcomes.begin(), t.outcomes.end());
        if (outs.size() != t.outcomes.size())
            throw InputError("duplicate outcome label in test '" + t.id + "'");
    }
    const int n = static_cast<int>(tests_.size());
    for (auto& ctx : contexts_) {
        std::set<int> seen;
        for (int t : ctx) {
            if (t < 0 || t >= n) throw InputError("context references unknown test index");
            if (!seen.insert(t).second) throw InputError("context repeats a test");
        }
        if (ctx.empty()) throw InputError("empty context");
    }
}

int Scenario::test_index(const std::string& id) const {
    for (std::size_t i = 0; i < tests_.size(); ++i) {
        if (tests_[i].id == id) return static_cast<int>(i);
    }
    throw InputError("unknown test id '" + id + "'");
}

int Scenario::outcome_index(int test, const std::string& outcome) const {
    if (test < 0 || test >= static_cast<int>(tests_.size())) throw InputError("test index out of range");
    const auto& outs = tests_[static_cast<std::size_t>(test)].outcomes;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        if (outs[i] == outcome) return static_cast<int>(i);
    }
    throw InputError("unknown outcome '" + outcome + "' for test '" + tests_[static_cast<std::size_t>(test)].id + "'");
}

std::vector<std::vector<int>> Scenario::maximal_contexts() const {
    std::vector<std::set<int>> as_sets;
    for (const auto& c : contexts_) as_sets.emplace_back(c.begin(), c.end());
    std::vector<std::vector<int>> out;
    std::set<std::set<int>> taken;
    for (std::size_t i = 0; i < contexts_.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < contexts_.size(); ++j) {
            if (i == j) continue;
            const bool subset = std::includes(as_sets[j].begin(), as_sets[j].end(),
                                              as_sets[i].begin(), as_sets[i].end());
            if (subset && as_sets[i] != as_sets[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal && taken.insert(as_sets[i]).second) out.push_back(contexts_[i]);
    }
    return out;
}

Event::Event(std::map<int, int> assignment) : assignment_(std::move(assignment)) {}

void Event::validate(const Scenario& s) const {
    if (assignment_.empty()) throw InputError("event with empty domain");
    const int n = static_cast<int>(s.tests().size());
    for (const auto& [t, o] : assignment_) {
        if (t < 0 || t >= n) throw InputError("event references unknown test");
        const auto& outs = s.tests()[static_cast<std::size_t>(t)].outcomes;
        if (o < 0 || o >= static_cast<int>(outs.size()))
            throw InputError("event outcome out of range for test '" + s.tests()[static_cast<std::size_t>(t)].id + "'");
    }
    for (const auto& ctx : s.contexts()) {
        const std::set<int> cset(ctx.begin(), ctx.end());
        bool inside = true;
        for (const auto& [t, o] : assignment_) {
            if (!cset.count(t)) {
                inside = false;
                break;
            }
        }
        if (inside) return;
    }
    throw InputError("event domain is not jointly measurable (not inside any context)");
}

SExpression::SExpression(std::vector<Term> terms) {
    for (const auto& term : terms) {
        if (term.weight <= 0)
            throw InputError("S-expression weight must be positive, got " + format_rational(term.weight));
        bool merged = false;
        for (auto& existing : terms_) {
            if (existing.event == term.event) {
                existing.weight += term.weight;
                merged = true;
                break;
            }
        }
        if (!merged) terms_.push_back(term);
    }
    if (terms_.empty()) throw InputError("S-expression needs at least one term");
}

bool events_exclusive(const Scenario& s, const Event& e1, const Event& e2) {
    e1.validate(s);
    e2.validate(s);
    for (const auto& [t, o] : e1.assignment()) {
        const auto it = e2.assignment().find(t);
        if (it != e2.assignment().end() && it->second != o) return true;
    }
    return false;
}

ExperimentGraph experiment_graph(const Scenario& s) {
    std::vector<Event> events;
    std::map<Event, int> index;
    for (const auto& ctx : s.maximal_contexts()) {
        // Odometer over outcome tuples, last test in the context fastest.
        std::vector<int> counters(ctx.size(), 0);
        bool done = false;
        while (!done) {
            std::map<int, int> assignment;
            for (std::size_t k = 0; k < ctx.size(); ++k)
                assignment[ctx[k]] = counters[k];
            Event e(std::move(assignment));
            if (!index.count(e)) {
                index.emplace(e, static_cast<int>(events.size()));
                events.push_back(e);
            }
            int k = static_cast<int>(ctx.size()) - 1;
            while (k >= 0) {
                const int arity =
                    static_cast<int>(s.tests()[static_cast<std::size_t>(ctx[static_cast<std::size_t>(k)])].outcomes.size());
                if (++counters[static_cast<std::size_t>(k)] < arity) break;
                counters[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) done = true;
        }
    }
    const int n = static_cast<int>(events.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (events_exclusive(s, events[static_cast<std::size_t>(i)], events[static_cast<std::size_t>(j)]))
                edges.emplace_back(i, j);
        }
    }
    return {VertexWeightedGraph::from_edge_list(n, edges), std::move(events)};
}

VertexWeightedGraph exclusivity_subgraph(const Scenario& s, const SExpression& expr) {
    const auto& terms = expr.terms();
    const int n = static_cast<int>(terms.size());
    std::vector<Rational> weights;
    weights.reserve(terms.size());
    for (const auto& t : terms) {
        t.event.validate(s);
        weights.push_back(t.weight);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (events_exclusive(s, terms[static_cast<std::size_t>(i)].event, terms[static_cast<std::size_t>(j)].event))
                edges.emplace_back(i, j);
        }
    }
    return VertexWeightedGraph::from_edge_list(n, edges, weights);
}

namespace {

Scenario binary_cycle_scenario(int n_tests, int modulus) {
    std::vector<Scenario::Test> tests;
    for (int i = 0; i < n_tests; ++i) tests.push_back({std::to_string(i), {"0", "1"}});
    std::vector<std::vector<int>> contexts;
    for (int i = 0; i < n_tests; ++i) contexts.push_back({i, (i + 1) % modulus});
    return Scenario(std::move(tests), std::move(contexts));
}

}  // namespace

std::pair<Scenario, SExpression> chsh_expression() {
    Scenario s = binary_cycle_scenario(4, 4);
    std::vector<SExpression::Term> terms;
    for (int i = 0; i < 4; ++i) {
        // a = b except on the (2,3) context, where a != b.
        const std::vector<std::pair<int, int>> pairs =
            (i != 2) ? std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}
                     : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}};
        for (const auto& [a, b] : pairs) {
            terms.push_back({Rational(1), Event({{i, a}, {(i + 1) % 4, b}})});
        }
    }
    return {std::move(s), SExpression(std::move(terms))};
}

std::pair<Scenario, SExpression> ncycle_expression(int n) {
    if (n < 5 || n % 2 == 0) throw InputError("n-cycle expression needs odd n >= 5");
    Scenario s = binary_cycle_scenario(n, n);
    std::vector<SExpression::Term> terms;
    for (int i = 0; i < n; ++i) {
        terms.push_back({Rational(1), Event({{i, 0}, {(i + 1) % n, 1}})});
    }
    return {std::move(s), SExpression(std::move(terms))};
}

std::pair<Scenario, SExpression> kcbs_expression() { return ncycle_expression(5); }

}  // namespace exg
