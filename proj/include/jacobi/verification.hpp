#ifndef JACOBI_VERIFICATION_HPP
#define JACOBI_VERIFICATION_HPP

#include <string>
#include <vector>

namespace jacobi::verify {

struct CheckResult {
    std::string name;
    double deviation;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    double seconds = 0.0;

    double max_deviation() const;
    const CheckResult* find(const std::string& name) const;
};

// Structure constants of the 4x4 algebra basis; integer arithmetic, so the
// deviation is exactly zero when everything is right.
SuiteResult run_structure_suite();

// Boson/su(1,1) relations plus hermiticity on interior blocks, for the SW
// basis at sw_cutoff and the DS bases at each weight in ks.
SuiteResult run_boson_suite(int sw_cutoff, int ds_level, const std::vector<double>& ks,
                            double m_index = 0.15915494309189535);

// Casimir scalar (k-1/2)(k-5/2)/4 on interior states.
SuiteResult run_casimir_suite(const std::vector<double>& ks, int ds_level);

// Differential-operator matrices vs the Fock/DS matrices.
SuiteResult run_intertwine_suite(int sw_cutoff, int ds_level);

// Unitarity of the factored D and S, the inverse symmetry S(w)+ = S(-w),
// the expm oracle cross-check, and the leakage of T on the vacuum.
SuiteResult run_unitarity_suite(int sw_cutoff);

// Closed forms against matrix oracles: displacement and squeeze matrix
// elements, transformed generators vs the conjugation oracle, the two
// expectation routes, the Mandel formula, and its special zeros.
SuiteResult run_closed_vs_oracle_suite(int sw_cutoff, unsigned seed,
                                       double m_index = 0.15915494309189535);

// Closed covariances vs numeric moments, the Schroedinger equality, and the
// squeezing predicate against the disk.
SuiteResult run_covariance_suite(int sw_cutoff, double m_index = 0.15915494309189535);

// Squeezing disk geometry and boundary saturation.
SuiteResult run_disk_suite();

struct VerifyConfig {
    int cutoff = 64;
    double tol = 1e-8;
    double k = 3.0;
    bool k_explicit = false;
    double m = 0.15915494309189535;  // 1/(2 pi), so hbar = 1/2
    unsigned seed = 0;
};

const std::vector<std::string>& suite_names();

// Runs the named suites ("all" expands to every suite) and stamps runtimes.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyConfig& config);

} // namespace jacobi::verify

#endif
