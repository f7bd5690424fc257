// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "jacobi/ds_rep.hpp"
#include "jacobi/observables.hpp"
#include "jacobi/squeezed_states.hpp"
#include "jacobi/sw_rep.hpp"
#include "jacobi/verification.hpp"

using namespace jacobi;
using verify::SuiteResult;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass;
    std::string detail;
};

std::vector<Criterion> results;

void report(int id, const std::string& label, bool pass, const std::string& detail) {
    results.push_back({id, label, pass, detail});
    std::printf("[%s] %2d %-38s %s\n", pass ? "PASS" : "FAIL", id, label.c_str(), detail.c_str());
}

double timed_seconds(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double check_value(const SuiteResult& suite, const std::string& name) {
    const verify::CheckResult* c = suite.find(name);
    return c ? c->deviation : std::nan("");
}

std::string fmt_dev(double dev, double seconds = -1.0) {
    char buf[128];
    if (seconds >= 0.0)
        std::snprintf(buf, sizeof(buf), "max dev %.3e, %.2f s", dev, seconds);
    else
        std::snprintf(buf, sizeof(buf), "max dev %.3e", dev);
    return buf;
}

} // namespace

int main() {
    // 1. Structure constants: exact integer arithmetic, deviation 0, < 1 s.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const SuiteResult suite = verify::run_structure_suite();
        const double sec = timed_seconds(t0);
        const double dev = suite.max_deviation();
        report(1, "structure constants (exact)", dev == 0.0 && sec < 1.0, fmt_dev(dev, sec));
    }

    // 2. Boson/su(1,1) relations on interior blocks, SW N=32 and DS D=10
    //    at k in {1.7, 2.5, 3, 4.25}; tolerance 1e-12, < 5 s.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const SuiteResult suite = verify::run_boson_suite(32, 10, {1.7, 2.5, 3.0, 4.25});
        const double sec = timed_seconds(t0);
        const double dev = suite.max_deviation();
        report(2, "boson/su(1,1) relations", dev <= 1e-12 && sec < 5.0, fmt_dev(dev, sec));
    }

    // 3. Casimir scalar (k-1/2)(k-5/2)/4 at D=10: 1e-10 overall, and exactly
    //    zero (1e-12) at k = 5/2.
    {
        const SuiteResult suite = verify::run_casimir_suite({1.7, 2.5, 3.0, 4.25}, 10);
        const double dev = suite.max_deviation();
        const CasimirReport at_25 = ds_casimir(DSWeight(2.5), 10);
        const bool pass =
            dev <= 1e-10 && at_25.expected == 0.0 && at_25.max_interior_deviation <= 1e-12;
        char detail[128];
        std::snprintf(detail, sizeof(detail), "max dev %.3e, k=5/2 dev %.3e (expected %g)", dev,
                      at_25.max_interior_deviation, at_25.expected);
        report(3, "discrete-series Casimir", pass, detail);
    }

    // 4. Intertwining of the holomorphic models, N=16, D=8, 1e-12.
    {
        const double sw_dev = intertwine_check_sw(16);
        const double ds_dev =
            std::max(intertwine_check_ds(DSWeight(3.0), 8), intertwine_check_ds(DSWeight(1.7), 8));
        const double dev = std::max(sw_dev, ds_dev);
        report(4, "holomorphic model intertwining", dev <= 1e-12, fmt_dev(dev));
    }

    // 5. Generating function residual < 1e-10 (40 terms, |z|,|alpha| <= 1,
    //    |w| <= 0.5) and the heat equation exactly in coefficient arithmetic
    //    for n <= 20.
    {
        double gen_dev = 0.0;
        const cplx zs[] = {{1.0, 0.0}, {0.0, 1.0}, {-0.6, 0.8}, {0.7, -0.7}};
        const cplx alphas[] = {{1.0, 0.0}, {-0.5, 0.5}, {0.0, -1.0}};
        const cplx wss[] = {{0.5, 0.0}, {-0.3, 0.4}, {0.0, -0.5}};
        for (const cplx& z : zs)
            for (const cplx& alpha : alphas)
                for (const cplx& w : wss)
                    gen_dev = std::max(gen_dev, generating_residual(z, alpha, w, 40));
        bool heat_exact = true;
        for (int n = 0; n <= 20; ++n)
            heat_exact = heat_exact && heat_pde_residual(f_poly_exact(n)).is_zero();
        char detail[128];
        std::snprintf(detail, sizeof(detail), "residual %.3e, heat PDE exact: %s", gen_dev,
                      heat_exact ? "yes" : "no");
        report(5, "generating function + heat PDE", gen_dev < 1e-10 && heat_exact, detail);
    }

    // 6. Unitarity of the factored forms at N=64 (1e-8) and agreement of the
    //    factored displacement with the dense exponential oracle (1e-9).
    {
        const SuiteResult suite = verify::run_unitarity_suite(64);
        const double unit_dev = std::max(check_value(suite, "displacement_unitary"),
                                         check_value(suite, "squeeze_unitary"));
        const double expm_dev = check_value(suite, "displacement_vs_expm");
        char detail[128];
        std::snprintf(detail, sizeof(detail), "U+U dev %.3e, expm dev %.3e", unit_dev, expm_dev);
        report(6, "factored-form unitarity + expm", unit_dev <= 1e-8 && expm_dev <= 1e-9, detail);
    }

    // Shared run of the closed-vs-oracle suite for criteria 7, 8, 10.
    const SuiteResult oracle_suite = verify::run_closed_vs_oracle_suite(64, 0);

    // 7. Squeeze matrix elements: closed/oracle ratio w-independent to 1e-9
    //    for n <= n' <= 6, k in {2, 3, 4.25}; constant reported.
    {
        const double spread = check_value(oracle_suite, "squeeze_me_ratio_spread");
        const double const_dev = check_value(oracle_suite, "squeeze_me_constant_is_one");
        std::string note;
        for (const auto& n : oracle_suite.notes)
            if (n.rfind("squeeze_me", 0) == 0) note = n;
        char detail[256];
        std::snprintf(detail, sizeof(detail), "spread %.3e; %s", spread, note.c_str());
        report(7, "squeeze element closed form", spread <= 1e-9 && const_dev <= 1e-9, detail);
    }

    // 8. Transformed generators vs the conjugation oracle, N=96, 1e-8.
    {
        const double dev = check_value(oracle_suite, "transformed_generators");
        report(8, "transformed generators", dev <= 1e-8, fmt_dev(dev));
    }

    // 9. Covariances: closed vs numeric 1e-8 for n <= 3 at N=128; the
    //    Schroedinger equality at n=0 to 1e-12; predicate vs disk with zero
    //    disagreements on a 32x32 grid.
    {
        const SuiteResult suite = verify::run_covariance_suite(128);
        const double closed_vs_num = check_value(suite, "closed_vs_numeric");
        const double schr = check_value(suite, "schrodinger_equality_n0");
        const double disagreements = check_value(suite, "predicate_vs_disk");
        const bool pass = closed_vs_num <= 1e-8 && schr <= 1e-12 && disagreements == 0.0;
        char detail[160];
        std::snprintf(detail, sizeof(detail),
                      "closed-vs-numeric %.3e, equality %.3e, disagreements %g", closed_vs_num,
                      schr, disagreements);
        report(9, "covariances + squeezing region", pass, detail);
    }

    // 10. Mandel: closed vs numeric 1e-6 at N=128 (n <= 3, |alpha| <= 2,
    //     |w| <= 0.6); Q(alpha,0) zeros to 1e-10; the zero radius annihilates
    //     Q with a verified sign change (n = 1..3; n = 0 is the degenerate
    //     vacuum point, where the zero-locus identity is checked instead).
    {
        const double sweep = check_value(oracle_suite, "mandel_closed_vs_numeric");
        const double zeros = check_value(oracle_suite, "mandel_q_alpha_zeros");
        const double radius_q = check_value(oracle_suite, "mandel_zero_radius_q");
        const double locus = check_value(oracle_suite, "mandel_zero_radius_locus");
        const double signs = check_value(oracle_suite, "mandel_zero_radius_sign_change");
        const bool pass = sweep <= 1e-6 && zeros <= 1e-10 && radius_q <= 1e-10 &&
                          locus <= 1e-12 && signs == 0.0;
        char detail[200];
        std::snprintf(detail, sizeof(detail),
                      "sweep %.3e, zeros %.3e, radius %.3e, locus %.3e, signs ok: %s", sweep,
                      zeros, radius_q, locus, signs == 0.0 ? "yes" : "no");
        report(10, "Mandel parameter", pass, detail);
    }

    // 11. Full verification (all suites at CLI defaults) completes in < 60 s.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto all = verify::run_suites({"all"}, verify::VerifyConfig{});
        const double sec = timed_seconds(t0);
        double worst = 0.0;
        for (const auto& s : all) worst = std::max(worst, s.max_deviation());
        char detail[128];
        std::snprintf(detail, sizeof(detail), "%.1f s for %zu suites, worst dev %.3e", sec,
                      all.size(), worst);
        report(11, "full verify under 60 s", sec < 60.0 && worst <= 1e-8, detail);
    }

    int failures = 0;
    for (const auto& c : results)
        if (!c.pass) ++failures;
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
