#ifndef DIFFALG_SCENARIO_HPP
#define DIFFALG_SCENARIO_HPP

#include <map>
#include <string>

#include "diffalg/quotient_ring.hpp"

namespace diffalg {

struct ParseError : algebra_error {
    ParseError(const std::string& what, int line, int col)
        : algebra_error(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line),
          col(col) {}
    int line;
    int col;
};

// Grammar: integers, variable identifiers, + - * ^ and parentheses; implicit
// multiplication is a syntax error. Coefficients land in the ring's field.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

struct TaskSpec {
    int number = 0;
    std::string kind;
    std::map<std::string, std::string> params;
    int line = 0;

    bool has(const std::string& key) const { return params.count(key) > 0; }
    const std::string& get(const std::string& key) const;
};

struct Scenario {
    std::string name;
    RingPtr ring;
    std::vector<Polynomial> ideal;
    bool is_domain = false;
    std::string order = "grevlex";
    std::vector<std::pair<std::string, std::vector<Polynomial>>> derivations;
    std::vector<TaskSpec> tasks;

    const std::vector<Polynomial>* derivation_images(const std::string& name) const;
};

Scenario parse_scenario_text(const std::string& text, const std::string& name);
Scenario parse_scenario_file(const std::string& path);

struct TaskOutcome {
    int number = 0;
    std::string kind;
    // ordered key/value facts; values are canonical (integers, true/false,
    // PASS/FAIL, or quoted generator lists)
    std::vector<std::pair<std::string, std::string>> facts;
    std::string status = "INFO";  // PASS | FAIL | INFO
    std::string message;
    double millis = 0;
};

struct Report {
    std::string scenario_name;
    std::vector<TaskOutcome> tasks;

    bool all_pass() const;
    std::string machine_text() const;  // byte-stable across runs
    std::string human_text() const;    // includes timings
};

struct RunOptions {
    long bound = 12;            // nominal degree bound, scaled by the max weight
    int ext_bound_artinian = 10;
    int ext_bound_graded = 5;
    int frobenius_max = 3;
};

Report run_scenario(const Scenario& s, const RunOptions& options = {});

bool is_known_task_kind(const std::string& kind);

namespace scenario_detail {
// shared between the file parser and task parameter handling
std::vector<std::string> split_list(const std::string& value);
std::string unquote(const std::string& value);
}  // namespace scenario_detail

}  // namespace diffalg

#endif
