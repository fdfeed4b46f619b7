// irratio: decide pi-irrationality of concrete finite groups and run the
// named verification suites. Exact arithmetic throughout; deterministic
// output given (--seed, --max-order).

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irratio/report.hpp"
#include "irratio/spec_parser.hpp"
#include "irratio/suites.hpp"

using namespace irratio;

namespace {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

uint64_t env_budget_default() {
    if (const char* v = std::getenv("IRRATIO_MAX_ORDER")) {
        char* end = nullptr;
        uint64_t b = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && b > 0) return b;
    }
    return kDefaultBudget;
}

/// Parses "2,3", "2'" (odd primes of |G|) or "all" into a prime set.
std::vector<uint32_t> parse_pi(const std::string& text, const Group& g) {
    if (text == "all" || text.empty()) return primes_of_order(g);
    if (text == "2'") {
        std::vector<uint32_t> pi;
        for (uint32_t p : primes_of_order(g))
            if (p != 2) pi.push_back(p);
        if (pi.empty()) throw InvalidArgument("2' is empty: the group is a 2-group");
        return pi;
    }
    std::vector<uint32_t> pi;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        pi.push_back(uint32_t(std::stoul(text.substr(pos, comma - pos))));
        pos = comma + 1;
    }
    return pi;
}

void print_report_text(const IrrationalityReport& rep, const Group& g) {
    std::printf("group %s of order %llu\n", g.spec().c_str(), (unsigned long long)g.order());
    std::printf("%-6s %-10s %-12s %-24s %-6s %s\n", "order", "class size", "field degree", "B",
                "real", "representative");
    for (const ReportRow& row : rep.rows) {
        std::string b = "{";
        for (size_t i = 0; i < row.B.size(); ++i) b += (i ? "," : "") + std::to_string(row.B[i]);
        b += "}";
        std::printf("%-6llu %-10llu %-12llu %-24s %-6s %s\n", (unsigned long long)row.order,
                    (unsigned long long)row.class_size, (unsigned long long)row.field_degree,
                    b.c_str(), row.real ? "yes" : "no", row.rep.str().c_str());
    }
    for (auto [p, verdict] : rep.prime_verdicts)
        std::printf("%u-irrational: %s\n", p, verdict ? "true" : "false");
    std::printf("irrational: %s\n", rep.irrational ? "true" : "false");
    if (rep.witness) {
        WitnessInfo w = witness_info(*rep.witness);
        std::printf("witness: x=%s k=%llu g=%s\n", w.x.c_str(), (unsigned long long)w.k,
                    w.g.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irratio: pi-irrationality engine for concrete finite groups"};
    app.require_subcommand(1);

    uint64_t budget = env_budget_default();
    std::string format = "text";
    uint64_t seed = 0;

    std::string check_spec, check_pi;
    CLI::App* check = app.add_subcommand("check", "decide (pi-)irrationality of a group spec");
    check->add_option("spec", check_spec, "group spec, e.g. psl(2,13)")->required();
    check->add_option("--pi", check_pi, "prime set: '2,3', \"2'\" or 'all' (default)");
    check->add_option("--max-order", budget, "element budget");
    check->add_option("--format", format, "text|json");

    std::string suite_name;
    CLI::App* suite = app.add_subcommand("suite", "run a named verification suite (or 'all')");
    suite->add_option("name", suite_name, "suite name or 'all'")->required();
    suite->add_option("--seed", seed, "seed for the sampled checks");
    suite->add_option("--max-order", budget, "element budget");
    suite->add_option("--format", format, "text|json");

    std::string classes_spec;
    CLI::App* classes = app.add_subcommand("classes", "print the conjugacy class table");
    classes->add_option("spec", classes_spec, "group spec")->required();
    classes->add_option("--max-order", budget, "element budget");
    classes->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*check) {
            Group g = build_group(check_spec, budget);
            IrrationalityReport rep = irrationality_report(g);
            bool verdict;
            if (check_pi.empty() || check_pi == "all") {
                verdict = rep.irrational;
            } else {
                verdict = is_pi_irrational(g, parse_pi(check_pi, g)).irrational;
            }
            if (format == "json") {
                auto j = to_json(rep, g.spec(), g.order());
                j["verdict"] = verdict;
                if (!check_pi.empty()) j["pi"] = check_pi;
                std::cout << j.dump(2) << "\n";
            } else {
                print_report_text(rep, g);
                if (!check_pi.empty())
                    std::printf("pi=%s verdict: %s\n", check_pi.c_str(),
                                verdict ? "true" : "false");
            }
            return verdict ? kPass : kFail;
        }
        if (*suite) {
            std::vector<SuiteResult> results;
            if (suite_name == "all") {
                results = run_all_suites(budget, seed);
            } else {
                results.push_back(run_suite(suite_name, budget, seed));
            }
            bool all_pass = true;
            bool any_budget_skip = false;
            for (const SuiteResult& r : results) {
                if (!r.pass) all_pass = false;
                for (const SuiteItem& it : r.items)
                    if (it.skipped && !it.optional_item) any_budget_skip = true;
            }
            if (format == "json") {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const SuiteResult& r : results) j.push_back(to_json(r));
                std::cout << (results.size() == 1 ? to_json(results[0]).dump(2) : j.dump(2))
                          << "\n";
            } else {
                for (const SuiteResult& r : results) std::cout << to_text(r);
            }
            if (any_budget_skip) return kBudget;
            return all_pass ? kPass : kFail;
        }
        if (*classes) {
            Group g = build_group(classes_spec, budget);
            const ConjClasses& cc = conjugacy_classes(g);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["spec"] = g.spec();
                j["order"] = g.order();
                j["classes"] = nlohmann::ordered_json::array();
                for (uint32_t c = 0; c < cc.count(); ++c) {
                    j["classes"].push_back({{"rep", g.element(cc.reps[c]).str()},
                                            {"order", g.element_order(g.element(cc.reps[c]))},
                                            {"size", cc.sizes[c]}});
                }
                j["version"] = kSchemaVersion;
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf("group %s of order %llu: %u classes\n", g.spec().c_str(),
                            (unsigned long long)g.order(), cc.count());
                for (uint32_t c = 0; c < cc.count(); ++c)
                    std::printf("%-6llu %-8llu %s\n",
                                (unsigned long long)g.element_order(g.element(cc.reps[c])),
                                (unsigned long long)cc.sizes[c],
                                g.element(cc.reps[c]).str().c_str());
            }
            return kPass;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
