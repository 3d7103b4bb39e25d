#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exg/graph.hpp"

namespace exg {

// A correlation experiment: named tests with finite outcome sets, plus the
// contexts (subsets of tests) declared jointly measurable.
class Scenario {
public:
    struct Test {
        std::string id;
        std::vector<std::string> outcomes;
    };

    Scenario(std::vector<Test> tests, std::vector<std::vector<int>> contexts);

    const std::vector<Test>& tests() const { return tests_; }
    const std::vector<std::vector<int>>& contexts() const { return contexts_; }
    int test_index(const std::string& id) const;  // InputError if unknown
    int outcome_index(int test, const std::string& outcome) const;

    // Contexts maximal under inclusion, deduplicated, in declaration order.
    std::vector<std::vector<int>> maximal_contexts() const;

private:
    std::vector<Test> tests_;
    std::vector<std::vector<int>> contexts_;
};

// Partial outcome assignment whose domain lies inside some context.
// Equivalence is syntactic identity of the (test -> outcome) map.
class Event {
public:
    Event() = default;
    explicit Event(std::map<int, int> assignment);
    const std::map<int, int>& assignment() const { return assignment_; }
    bool operator==(const Event& o) const { return assignment_ == o.assignment_; }
    bool operator<(const Event& o) const { return assignment_ < o.assignment_; }

    // Checks domain nonempty, tests/outcomes in range, domain inside a context.
    void validate(const Scenario& s) const;

private:
    std::map<int, int> assignment_;
};

// S = sum_i w_i P(e_i) with w_i > 0; duplicate events are merged by summing
// their weights (first occurrence keeps its position).
class SExpression {
public:
    struct Term {
        Rational weight;
        Event event;
    };

    explicit SExpression(std::vector<Term> terms);
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
};

// True iff the events assign different outcomes to at least one shared test.
bool events_exclusive(const Scenario& s, const Event& e1, const Event& e2);

struct ExperimentGraph {
    VertexWeightedGraph graph;  // unit weights
    std::vector<Event> events;  // vertex -> event
};

// One vertex per full-context outcome tuple, merged across equivalent
// events; edges join exclusive pairs.
ExperimentGraph experiment_graph(const Scenario& s);

// The weighted exclusivity graph of S: one vertex per term.
VertexWeightedGraph exclusivity_subgraph(const Scenario& s, const SExpression& expr);

std::pair<Scenario, SExpression> chsh_expression();
std::pair<Scenario, SExpression> kcbs_expression();
std::pair<Scenario, SExpression> ncycle_expression(int n);  // odd n >= 5

}  // namespace exg
