#ifndef JACOBI_CLI_COMMANDS_HPP
#define JACOBI_CLI_COMMANDS_HPP

#include <complex>
#include <ostream>
#include <string>

namespace jacobi::cli {

enum class Command { verify, mandel_grid, squeeze_disk, matrix_element, covariance, casimir };
enum class OutputFormat { csv, json };
enum class RepChoice { sw, ds };

struct RunConfig {
    Command command = Command::verify;
    int cutoff = 64;
    double tol = 1e-8;
    double k = 3.0;
    bool k_explicit = false;
    double m = 0.15915494309189535;  // 1/(2 pi)
    int n = 0;
    int n_prime = 0;
    double alpha_re = 0.0, alpha_im = 0.0;
    double w_re = 0.0, w_im = 0.0;
    int grid_r = 0, grid_theta = 0;  // 0: single point from the w flags
    OutputFormat format = OutputFormat::json;
    std::string out_path;            // empty: stdout
    std::string suite = "all";
    unsigned seed = 0;
    RepChoice rep = RepChoice::sw;
};

// Exit codes: 0 all checks passed, 1 tolerance failure, 2 invalid config.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

// Validates the config invariants shared by all commands; returns an error
// message for exit code 2, or the empty string.
std::string validate(const RunConfig& config);

int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_mandel_grid(const RunConfig& config, std::ostream& out);
int cmd_squeeze_disk(const RunConfig& config, std::ostream& out);
int cmd_matrix_element(const RunConfig& config, std::ostream& out);
int cmd_covariance(const RunConfig& config, std::ostream& out);
int cmd_casimir(const RunConfig& config, std::ostream& out);

// Dispatch plus --out handling; used by the binary.
int run(const RunConfig& config);

} // namespace jacobi::cli

#endif
