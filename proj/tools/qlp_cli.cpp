#include "qlp/basis.hpp"
#include "qlp/json_io.hpp"
#include "qlp/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>

using namespace qlp;

namespace {

struct RunConfig {
    std::vector<int> valences;
    std::optional<int> s;
    std::string suite;
    std::optional<int> max_n;
    std::string out;
    std::string format = "json";
    int jobs = 1;
    std::string pattern;
    std::vector<int> shuffle;
    int rainbow = -1;
    bool inject_fault = false;
};

class Output {
public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path);
        }
    }
    std::ostream &os() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int cmd_enumerate(const RunConfig &cfg) {
    std::vector<int> ss;
    if (cfg.s) {
        ss.push_back(*cfg.s);
    } else {
        ss = admissible_defects(cfg.valences);
    }
    const bool unit = std::all_of(cfg.valences.begin(), cfg.valences.end(), [](int v) { return v == 1; });
    const int n = std::accumulate(cfg.valences.begin(), cfg.valences.end(), 0);
    Output out(cfg.out);
    json doc = json::array();
    for (int s : ss) {
        // parity violations and s > n are empty universes here, not errors
        std::vector<LinkPattern> ws;
        if (s <= n && (n - s) % 2 == 0) ws = enumerate(cfg.valences, s);
        if (cfg.format == "text") {
            out.os() << "valences " << json(cfg.valences).dump() << " s=" << s << " count "
                     << ws.size() << "\n";
            for (const auto &w : ws) out.os() << "  " << w << "\n";
            continue;
        }
        json u{{"valences", cfg.valences}, {"s", s}, {"count", ws.size()}};
        if (unit && s <= n && (n - s) % 2 == 0) u["count_pp"] = count_pp((n - s) / 2, s).get_str();
        json list = json::array();
        for (const auto &w : ws) list.push_back(to_json(w));
        u["patterns"] = list;
        doc.push_back(u);
    }
    if (cfg.format == "json") out.os() << doc.dump(2) << "\n";
    return 0;
}

int cmd_vector(const RunConfig &cfg) {
    int given = !cfg.pattern.empty() + !cfg.shuffle.empty() + (cfg.rainbow >= 0);
    if (given != 1) throw CLI::ValidationError("vector", "give exactly one of --pattern, --shuffle, --rainbow");
    LinkPattern w;
    TensorVector v;
    if (!cfg.pattern.empty()) {
        w = parse_pattern(cfg.pattern);
        if (!w.valid()) throw std::invalid_argument(std::string("invalid pattern: ") + reason_name(w.check()));
        v = build_v_omega(w);
    } else if (!cfg.shuffle.empty()) {
        w = shuffle_pattern(cfg.shuffle);
        v = shuffle_vector(cfg.shuffle);
    } else {
        w = rainbow(cfg.rainbow);
        v = rainbow_vector(cfg.rainbow);
    }
    Output out(cfg.out);
    if (cfg.format == "text")
        out.os() << w << "\n" << v << "\n";
    else
        out.os() << json{{"pattern", to_json(w)}, {"vector", to_json(v)}}.dump(2) << "\n";
    return 0;
}

int cmd_verify(const RunConfig &cfg) {
    SuiteOptions opt;
    opt.max_n = cfg.max_n;
    if (!cfg.valences.empty()) opt.valences = cfg.valences;
    opt.s = cfg.s;
    opt.inject_fault = cfg.inject_fault;
    auto tasks = build_suite(cfg.suite, opt);

    Output out(cfg.out);
    const bool text = cfg.format == "text";
    std::size_t failed = 0;
    json checks = json::array();
    run_tasks(tasks, cfg.jobs, [&](const CheckRecord &r) {
        failed += !r.pass;
        if (text) {
            out.os() << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.pattern << "  " << r.check;
            if (!r.detail.empty()) out.os() << "  [" << r.detail << "]";
            out.os() << std::endl;
            return;
        }
        json c{{"id", r.id}, {"pattern", r.pattern}, {"check", r.check}, {"pass", r.pass}};
        if (!r.detail.empty()) c["detail"] = r.detail;
        if (r.residual) c["residual"] = *r.residual;
        checks.push_back(std::move(c));
    });
    json summary{{"total", tasks.size()}, {"passed", tasks.size() - failed}, {"failed", failed}};
    if (text)
        out.os() << "suite " << cfg.suite << ": " << tasks.size() << " checks, " << failed << " failed\n";
    else
        out.os() << json{{"suite", cfg.suite}, {"checks", checks}, {"summary", summary}}.dump(2) << "\n";
    if (!cfg.out.empty())
        std::cerr << "suite " << cfg.suite << ": " << tasks.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Link-pattern basis vectors for U_q(sl2) tensor products: enumeration, construction and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    int s = -1;
    app.add_option("--out", cfg.out, "Write the result to this file instead of stdout");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto *en = app.add_subcommand("enumerate", "List the planar link patterns of a universe");
    en->add_option("--valences", cfg.valences, "Valences, comma separated")->delimiter(',')->required();
    en->add_option("--defects", s, "Number of defects (default: every admissible value)")->check(CLI::NonNegativeNumber);

    auto *vec = app.add_subcommand("vector", "Build a basis vector");
    vec->add_option("--pattern", cfg.pattern, "Pattern as JSON or text, e.g. \"(2,1,1)[1-2x2]\"");
    vec->add_option("--shuffle", cfg.shuffle, "Defect partition for the shuffle vector")->delimiter(',');
    vec->add_option("--rainbow", cfg.rainbow, "Nested pair partition on 2N points")->check(CLI::NonNegativeNumber);

    auto *ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--max-n", cfg.max_n, "Bound on the total valence (suite default otherwise)")->check(CLI::PositiveNumber);
    ver->add_option("--valences", cfg.valences, "Restrict to one valence list")->delimiter(',');
    ver->add_option("--defects", s, "Restrict to one defect count")->check(CLI::NonNegativeNumber);
    ver->add_flag("--inject-fault", cfg.inject_fault, "Flip one coefficient in one check (negative control)");

    CLI11_PARSE(app, argc, argv);
    if (s >= 0) cfg.s = s;
    for (int v : cfg.valences)
        if (v < 1) {
            std::cerr << "error: valences must be positive\n";
            return 2;
        }
    try {
        if (*en) return cmd_enumerate(cfg);
        if (*vec) return cmd_vector(cfg);
        return cmd_verify(cfg);
    } catch (const CLI::Error &e) {
        return app.exit(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
