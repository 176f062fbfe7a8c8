// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include "qlp/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <thread>

using namespace qlp;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<std::vector<Task>()> tasks;
};

std::vector<Task> concat(std::initializer_list<std::vector<Task>> parts) {
    std::vector<Task> out;
    for (const auto &p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

int main() {
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char *env = std::getenv("QLP_JOBS")) jobs = std::max(1, std::atoi(env));

    SuiteOptions n6;
    n6.max_n = 6;
    SuiteOptions n5;
    n5.max_n = 5;
    const std::vector<Criterion> criteria{
        {1, "dimension theorem and count_pp closed form", [] { return concat({dimension_tasks(8, 4), count_pp_tasks(10)}); }},
        {2, "Catalan dimensions for N <= 4", [] { return catalan_tasks(4); }},
        {3, "pair-partition vectors for N <= 4", [] { return pair_partition_tasks(4); }},
        {4, "projection conditions n <= 6, normalization s <= 4, basis rank",
         [=] { return concat({projection_tasks(n6), normalization_tasks(4), rank_tasks(n6)}); }},
        {5, "cyclic symmetry n <= 6 and R- construction n <= 5", [=] { return concat({cyclic_tasks(n6), r_minus_tasks(n5)}); }},
        {6, "dual functionals n <= 6", [=] { return dual_tasks(n6); }},
        {7, "q-identities (a)-(d)", [] { return q_identity_tasks(); }},
        {8, "m-fold projection formula and hwv constant, s <= 4, m <= 3", [] { return projection_formula_tasks(4, 3); }},
        {9, "BSA annihilation, translation and Euler degree for |lambda| <= 3", [] { return bsa_tasks(3); }},
        {10, "N = 1 second-order system and Mobius generators", [] { return sle_tasks(); }},
    };

    int failed_criteria = 0;
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        auto tasks = c.tasks();
        std::size_t failed = 0;
        std::vector<std::string> shown;
        run_tasks(tasks, jobs, [&](const CheckRecord &r) {
            if (r.pass) return;
            ++failed;
            if (shown.size() < 5) shown.push_back(r.id + " " + r.pattern + " " + r.check + (r.detail.empty() ? "" : " [" + r.detail + "]"));
        });
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = failed == 0 && !tasks.empty();
        failed_criteria += !pass;
        std::printf("%s criterion %d: %s (%zu checks, %zu failed, %.1f s)\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    tasks.size(), failed, secs);
        for (const auto &s : shown) std::printf("    %s\n", s.c_str());
        if (failed > shown.size()) std::printf("    ... %zu more\n", failed - shown.size());
        std::fflush(stdout);
    }
    return failed_criteria == 0 ? 0 : 1;
}
