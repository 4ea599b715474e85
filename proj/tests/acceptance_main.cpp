// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one pass/fail line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>

#include "vekua/verification.hpp"

using namespace vekua;

namespace {

struct Criterion {
    const char* label;
    CheckResult (*fn)(const VerifyOptions&);
    double time_limit_s; // 0 = no limit
};

CheckResult run_intertwining(const VerifyOptions& opt) { return check_intertwining(opt, 50); }

} // namespace

int main() {
    const VerifyOptions opt{20240917ull, false};
    const Criterion criteria[] = {
        {"1. intertwining identity", run_intertwining, 10.0},
        {"2. classical limit", check_classical_limit, 5.0},
        {"3. closed-form Z1 cross-check", check_closed_form_z1, 0.0},
        {"4. pseudoanalyticity of powers", check_pseudoanalyticity, 0.0},
        {"5. asymptotic order", check_asymptotic_order, 0.0},
        {"6. differential relation", check_differential_relation, 0.0},
        {"7. path independence", check_path_independence, 0.0},
        {"8. Schroedinger conjugate parts", check_schrodinger_conjugate, 0.0},
        {"9. Taylor round trip", check_taylor_roundtrip, 0.0},
        {"10. zero-divisor preservation", check_zero_divisor_preservation, 0.0},
        {"11. end-to-end Dirac residual", check_dirac_residual, 0.0},
        {"12. similarity principle", check_similarity, 30.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult res;
        try {
            res = c.fn(opt);
        } catch (const std::exception& e) {
            res.name = c.label;
            res.pass = false;
            res.details = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = res.pass;
        std::string note = res.details;
        if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
            ok = false;
            note += (note.empty() ? "" : "; ") + std::string("time limit exceeded");
        }
        std::printf("[%s] %-33s max=%.3e tol=%.3e (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.label,
                    res.max_residual, res.tolerance, secs, note.empty() ? "" : " -- ",
                    note.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures;
}
