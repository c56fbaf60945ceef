// One PASS/FAIL line per acceptance criterion, with the measured runtime.
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include "ndmax/checks.hpp"
#include "ndmax/util.hpp"

int main(int argc, char** argv) {
    using namespace ndmax;
    const std::string report_dir = argc > 1 ? argv[1] : "";
    // Runtime budgets in seconds; zero means none is required.
    const struct {
        const char* id;
        double budget;
    } criteria[] = {{"star-weak", 5},   {"t-centered", 10}, {"basic-star-grid", 30}, {"segment", 0},
                    {"fiber-identity", 0}, {"scaling-slope", 0}, {"w-trichotomy", 0}, {"bmo", 60},
                    {"dichotomy", 0},   {"interp", 0},      {"oracle", 0}};
    int failed = 0, k = 0;
    for (const auto& c : criteria) {
        ++k;
        const auto t0 = std::chrono::steady_clock::now();
        std::string verdict, detail;
        try {
            const auto res = checks::verify(c.id);
            verdict = checks::verdict_name(res.verdict);
            if (!res.failures.empty()) detail = res.failures.front();
            if (!report_dir.empty()) std::ofstream(report_dir + "/" + c.id + ".json") << res.to_json().dump(2) << '\n';
        } catch (const BuildError& e) {
            verdict = "fail";
            detail = std::string("build error: ") + e.what();
        } catch (const std::exception& e) {
            verdict = "fail";
            detail = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = verdict != "fail";
        if (ok && c.budget > 0 && secs > c.budget) {
            ok = false;
            detail = "runtime above budget";
        }
        failed += !ok;
        std::printf("%s criterion %d (%s): %s, %.2f s%s%s\n", ok ? "PASS" : "FAIL", k, c.id, verdict.c_str(), secs,
                    detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
