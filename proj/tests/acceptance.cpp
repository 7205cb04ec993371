// Acceptance runner: one line per criterion, nonzero exit on any failure.
// Each criterion maps to reference suites over the built-in families; the two
// timed criteria also enforce their wall-clock budgets.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <toriml/verify.hpp>

namespace {

struct Criterion {
    int number;
    std::string description;
    std::vector<std::string> suites;
    double budget_seconds;  // 0 disables the budget check
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "sixteen reflexive polygons: (ml_degree, degree) table", {"polygons"}, 120.0},
        {2, "cube family d=1..3: degrees and closed-form critical points", {"cube"}, 0.0},
        {3, "cross polytopes d=1..4: ml_degree = degree = 2^d", {"cross"}, 0.0},
        {4, "ml-degree-one scaling of the 3-cube: single critical point", {"ml1"}, 0.0},
        {5, "scaled models with dropped ml_degree", {"scaled-drops"}, 0.0},
        {6, "extremal simplices: base and extended families", {"simplices", "simplices-extended"}, 600.0},
        {7, "constructions A, B, C on polygon seeds", {"constructions"}, 0.0},
        {8, "iterated construction B with binomial drops", {"b-iteration"}, 0.0},
        {9, "discriminant verdicts vs ml_degree drops", {"adet"}, 0.0},
        {10, "bounds, multiplicativity, parity, residuals, determinism", {"properties"}, 0.0},
    };
    return list;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    toriml::TrackerConfig cfg;
    int failed_criteria = 0;
    for (const Criterion& c : criteria()) {
        auto t0 = clock::now();
        toriml::verify::Rows failed;
        long long checks = 0;
        std::string error;
        for (const std::string& suite : c.suites) {
            try {
                toriml::verify::Rows rows = toriml::verify::run_suite(suite, cfg);
                checks += static_cast<long long>(rows.size());
                for (toriml::verify::CheckResult& r : rows) {
                    if (r.pass) continue;
                    r.name = suite + " / " + r.name;
                    failed.push_back(std::move(r));
                }
            } catch (const std::exception& e) {
                error = suite + ": " + e.what();
                break;
            }
        }
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        bool in_budget = c.budget_seconds <= 0.0 || secs <= c.budget_seconds;
        bool pass = failed.empty() && error.empty() && in_budget;
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.description << " ("
                  << checks << " checks, " << std::fixed << std::setprecision(1) << secs << "s)\n";
        if (!error.empty()) std::cout << "    error: " << error << '\n';
        for (const toriml::verify::CheckResult& r : failed)
            std::cout << "    failed: " << r.name << ": " << r.detail << '\n';
        if (!in_budget)
            std::cout << "    over budget: " << secs << "s > " << c.budget_seconds << "s\n";
        std::cout.flush();
        if (!pass) ++failed_criteria;
    }
    if (failed_criteria == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failed_criteria << " criterion(s) failed\n";
    return 1;
}
