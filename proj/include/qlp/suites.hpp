#pragma once

#include "qlp/json_io.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qlp {

struct CheckRecord {
    std::string id; // unique, sorts in generation order
    std::string pattern;
    std::string check;
    bool pass = false;
    std::string detail;
    std::optional<json> residual;
};

struct Task {
    std::string id;
    std::function<CheckRecord()> run;
};

struct SuiteOptions {
    std::optional<int> max_n; // suite default when unset
    std::optional<std::vector<int>> valences;
    std::optional<int> s;
    // perturb one coefficient in the first check able to observe it
    bool inject_fault = false;
};

// projections, cyclic, duals, identities, pde, dimensions, pairs
const std::vector<std::string> &suite_names();
std::vector<Task> build_suite(const std::string &name, const SuiteOptions &opt);

// Check groups; each suite is a concatenation of these.
std::vector<Task> dimension_tasks(int max_sum, int max_part);
std::vector<Task> count_pp_tasks(int max_size);
std::vector<Task> catalan_tasks(int max_N);
std::vector<Task> pair_partition_tasks(int max_N, bool fault = false);
std::vector<Task> projection_tasks(const SuiteOptions &opt);
std::vector<Task> normalization_tasks(int max_s);
std::vector<Task> rank_tasks(const SuiteOptions &opt);
std::vector<Task> cyclic_tasks(const SuiteOptions &opt);
std::vector<Task> r_minus_tasks(const SuiteOptions &opt);
std::vector<Task> dual_tasks(const SuiteOptions &opt);
std::vector<Task> q_identity_tasks(bool fault = false);
std::vector<Task> projection_formula_tasks(int max_s, int max_m);
std::vector<Task> bsa_tasks(int max_size, bool fault = false);
std::vector<Task> sle_tasks();

struct Universe {
    std::vector<int> valences;
    int s = 0;
};
// Every universe with 1 <= n <= max_n (or the single requested one), admissible s only.
std::vector<Universe> universes(int max_n, const std::optional<std::vector<int>> &valences = {},
                                const std::optional<int> &s = {});

// Runs tasks on `jobs` threads; results come back in task order, and `on_result`
// sees them in that order as soon as each prefix is complete.
std::vector<CheckRecord> run_tasks(const std::vector<Task> &tasks, int jobs,
                                   const std::function<void(const CheckRecord &)> &on_result = {});

} // namespace qlp
