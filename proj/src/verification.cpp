#include "jacobi/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "jacobi/ds_rep.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/group_core.hpp"
#include "jacobi/observables.hpp"
#include "jacobi/operator_core.hpp"
#include "jacobi/special_functions.hpp"
#include "jacobi/squeezed_states.hpp"
#include "jacobi/sw_rep.hpp"

namespace jacobi::verify {

double SuiteResult::max_deviation() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.deviation);
    return m;
}

const CheckResult* SuiteResult::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    cplx on_disk(double rmin, double rmax) {
        const double r = uniform(rmin, rmax);
        const double t = uniform(0.0, 2.0 * M_PI);
        return {r * std::cos(t), r * std::sin(t)};
    }
};

double zero_dev_interior(const TruncatedOperator& x, int max_grade) {
    return max_abs_diff_interior(x, zero_op(x.basis), max_grade);
}

// Common boson / su(1,1) relation block shared by SW and DS.
void boson_relation_checks(SuiteResult& suite, const std::string& tag, const AlgebraOps& ops,
                           int interior_grade) {
    const Basis& basis = ops.a.basis;
    const TruncatedOperator id = identity_op(basis);
    suite.checks.push_back(
        {tag + ".comm_a_adag", max_abs_diff_interior(commutator(ops.a, ops.a_dag), id, interior_grade)});
    suite.checks.push_back(
        {tag + ".comm_k0_kplus",
         max_abs_diff_interior(commutator(ops.K0, ops.K_plus), ops.K_plus, interior_grade)});
    suite.checks.push_back(
        {tag + ".comm_k0_kminus",
         max_abs_diff_interior(commutator(ops.K0, ops.K_minus), -1.0 * ops.K_minus, interior_grade)});
    suite.checks.push_back(
        {tag + ".comm_kminus_kplus",
         max_abs_diff_interior(commutator(ops.K_minus, ops.K_plus), 2.0 * ops.K0, interior_grade)});
    suite.checks.push_back(
        {tag + ".comm_a_kplus",
         max_abs_diff_interior(commutator(ops.a, ops.K_plus), ops.a_dag, interior_grade)});
    suite.checks.push_back(
        {tag + ".comm_kminus_a", zero_dev_interior(commutator(ops.K_minus, ops.a), interior_grade)});
    suite.checks.push_back(
        {tag + ".comm_a_k0_twice",
         max_abs_diff_interior(2.0 * commutator(ops.a, ops.K0), ops.a, interior_grade)});
    suite.checks.push_back(
        {tag + ".adjoint_kpair",
         max_abs_diff(ops.K_plus.mat, ops.K_minus.mat.adjoint())});
    suite.checks.push_back(
        {tag + ".selfadjoint_k0", max_abs_diff(ops.K0.mat, ops.K0.mat.adjoint())});
}

} // namespace

SuiteResult run_structure_suite() {
    SuiteResult suite{"structure", {}, {}, 0.0};
    const StructureReport report = check_structure_constants();
    suite.checks.push_back({"brackets", report.max_deviation});
    suite.notes.push_back("pairs checked: " + std::to_string(report.pairs_checked));
    return suite;
}

SuiteResult run_boson_suite(int sw_cutoff, int ds_level, const std::vector<double>& ks,
                            double m_index) {
    SuiteResult suite{"boson", {}, {}, 0.0};

    const SWGenerators sw = build_sw_generators(sw_cutoff, SWIndex(m_index));
    const int sw_interior = sw_cutoff - 2;
    boson_relation_checks(suite, "sw", ops_view(sw), sw_interior);
    suite.checks.push_back({"sw.selfadjoint_q", max_abs_diff(sw.q.mat, sw.q.mat.adjoint())});
    suite.checks.push_back({"sw.selfadjoint_p", max_abs_diff(sw.p.mat, sw.p.mat.adjoint())});
    suite.checks.push_back({"sw.selfadjoint_num", max_abs_diff(sw.num.mat, sw.num.mat.adjoint())});
    const TruncatedOperator qp = commutator(sw.q, sw.p);
    suite.checks.push_back(
        {"sw.comm_q_p",
         max_abs_diff_interior(qp, cplx(0.0, sw.index.hbar) * identity_op(sw.basis), sw_interior)});
    suite.checks.push_back({"sw.w_sector_zero",
                            std::max({sw.W0.mat.max_abs(), sw.W_plus.mat.max_abs(),
                                      sw.W_minus.mat.max_abs()})});

    for (double k : ks) {
        const DSGenerators ds = build_ds_generators(DSWeight(k), ds_level);
        const int interior = 2 * ds_level - 2;
        const std::string tag = "ds[k=" + fmt(k) + "]";
        boson_relation_checks(suite, tag, ops_view(ds), interior);

        suite.checks.push_back(
            {tag + ".comm_w0_wplus",
             max_abs_diff_interior(commutator(ds.W0, ds.W_plus), ds.W_plus, interior)});
        suite.checks.push_back(
            {tag + ".comm_wminus_wplus",
             max_abs_diff_interior(commutator(ds.W_minus, ds.W_plus), 2.0 * ds.W0, interior)});
        suite.checks.push_back(
            {tag + ".comm_a_w",
             std::max({zero_dev_interior(commutator(ds.a, ds.W0), interior),
                       zero_dev_interior(commutator(ds.a, ds.W_plus), interior),
                       zero_dev_interior(commutator(ds.a, ds.W_minus), interior)})});

        // Lowest-weight relations and the 2K0 spectrum k + n' + 2n.
        const int lw = ds.basis.ds_index(0, 0);
        const StateVector e0 = basis_state(ds.basis, lw);
        const StateVector k0e0 = apply(ds.K0, e0);
        double lw_dev = 0.0;
        for (int i = 0; i < ds.basis.dim(); ++i) {
            const cplx want = (i == lw) ? cplx(0.5 * k) : cplx(0.0);
            lw_dev = std::max(lw_dev, std::abs(k0e0.coeffs[i] - want));
        }
        lw_dev = std::max(lw_dev, std::sqrt(norm2(apply(ds.a, e0).coeffs)));
        lw_dev = std::max(lw_dev, std::sqrt(norm2(apply(ds.K_minus, e0).coeffs)));
        suite.checks.push_back({tag + ".lowest_weight", lw_dev});

        double spec_dev = 0.0;
        for (int i = 0; i < ds.basis.dim(); ++i) {
            const DsLabel l = ds.basis.ds_label(i);
            spec_dev = std::max(spec_dev,
                                std::abs(2.0 * ds.K0.mat(i, i) - (k + l.n_prime + 2.0 * l.n)));
        }
        suite.checks.push_back({tag + ".k0_spectrum", spec_dev});
    }
    return suite;
}

SuiteResult run_casimir_suite(const std::vector<double>& ks, int ds_level) {
    SuiteResult suite{"casimir", {}, {}, 0.0};
    for (double k : ks) {
        const CasimirReport report = ds_casimir(DSWeight(k), ds_level);
        suite.checks.push_back({"casimir[k=" + fmt(k) + "]", report.max_interior_deviation});
        suite.notes.push_back("k=" + fmt(k) + " expected=" + fmt(report.expected));
    }
    return suite;
}

SuiteResult run_intertwine_suite(int sw_cutoff, int ds_level) {
    SuiteResult suite{"intertwine", {}, {}, 0.0};
    suite.checks.push_back({"sw", intertwine_check_sw(sw_cutoff)});
    for (double k : {1.7, 3.0}) {
        suite.checks.push_back(
            {"ds[k=" + fmt(k) + "]", intertwine_check_ds(DSWeight(k), ds_level)});
    }

    // Generating function of the f_n and the heat equation they satisfy.
    double gen_dev = 0.0;
    const cplx zs[] = {{1.0, 0.0}, {0.0, 1.0}, {-0.6, 0.8}, {0.3, -0.4}};
    const cplx alphas[] = {{1.0, 0.0}, {-0.5, 0.5}, {0.0, -1.0}};
    const cplx ws[] = {{0.5, 0.0}, {-0.3, 0.4}, {0.0, -0.5}};
    for (const cplx& z : zs)
        for (const cplx& alpha : alphas)
            for (const cplx& w : ws)
                gen_dev = std::max(gen_dev, generating_residual(z, alpha, w, 40));
    suite.checks.push_back({"generating_residual", gen_dev});

    double heat_exact = 0.0;
    for (int n = 0; n <= 20; ++n)
        if (!heat_pde_residual(f_poly_exact(n)).is_zero()) heat_exact = 1.0;
    suite.checks.push_back({"heat_pde_exact", heat_exact});

    double heat_dbl = 0.0;
    for (int n = 0; n <= 20; ++n)
        heat_dbl = std::max(heat_dbl, heat_pde_residual(f_poly(n)).max_abs_coeff());
    suite.checks.push_back({"heat_pde_double", heat_dbl});
    return suite;
}

SuiteResult run_unitarity_suite(int sw_cutoff) {
    SuiteResult suite{"unitarity", {}, {}, 0.0};
    const Basis basis = Basis::sw(sw_cutoff);
    const TruncatedOperator id = identity_op(basis);
    // Interior budgets, measured at the box corners: displaced columns keep
    // leakage ~1e-12 up to grade N/4 for |alpha| <= 2; squeezed columns
    // spread much harder (column N/16 leaks ~3e-10 at |w| = 0.6, N = 64,
    // and column N/8 already ~3e-8), so the squeeze assertions stop there.
    const int disp_interior = sw_cutoff / 4;
    const int sq_interior = sw_cutoff / 16;

    const cplx alphas[] = {{2.0, 0.0}, {1.4, 1.4}, {-1.2, 0.9}, {0.0, -2.0}};
    const cplx ws[] = {{0.6, 0.0}, {-0.6, 0.0}, {0.0, 0.52}, {-0.3, 0.5}, {0.3, 0.3}};

    double disp_unitary = 0.0;
    double disp_vs_expm = 0.0;
    auto [a, a_dag] = build_ladder(sw_cutoff);
    for (const cplx& alpha : alphas) {
        const TruncatedOperator d = displacement(alpha, basis);
        disp_unitary = std::max(
            disp_unitary, max_abs_diff_interior(adjoint(d) * d, id, disp_interior));
        const TruncatedOperator gen = alpha * a_dag - std::conj(alpha) * a;
        disp_vs_expm =
            std::max(disp_vs_expm, max_abs_diff_interior(expm_dense(gen), d, disp_interior));
    }
    suite.checks.push_back({"displacement_unitary", disp_unitary});
    suite.checks.push_back({"displacement_vs_expm", disp_vs_expm});

    double sq_unitary = 0.0;
    double sq_inverse = 0.0;
    for (const cplx& w : ws) {
        const TruncatedOperator s = squeeze(w, basis);
        const TruncatedOperator s_adj = adjoint(s);
        sq_unitary = std::max(sq_unitary, max_abs_diff_interior(s_adj * s, id, sq_interior));
        sq_unitary = std::max(sq_unitary, max_abs_diff_interior(s * s_adj, id, sq_interior));
        // Retained entries are exact in exact arithmetic; round-off in the
        // large factor entries near the cutoff corner limits the entrywise
        // comparison, so it runs on grades <= N/4.
        sq_inverse = std::max(sq_inverse,
                              max_abs_diff_interior(s_adj, squeeze(-w, basis), sw_cutoff / 4));
    }
    suite.checks.push_back({"squeeze_unitary", sq_unitary});
    suite.checks.push_back({"squeeze_inverse_symmetry", sq_inverse});

    // Leakage of T(alpha, w) on the vacuum at the corners of the parameter box.
    double leak = 0.0;
    for (const cplx& alpha : alphas)
        for (const cplx& w : ws)
            leak = std::max(leak, apply_squeezed(SqueezeParams(alpha, w), basis, 0).leakage);
    suite.checks.push_back({"squeezed_vacuum_leakage", leak});
    return suite;
}

namespace {

// Ratio model for the closed squeeze matrix element against the matrix
// oracle.  The closed form is the pure su(1,1) (W-sector) expression; the
// operator built from the K generators carries the oscillator vacuum factor
// (1-|w|^2)^(1/4) on top of it, so the quotient is tested under both
// normalizations and the matching one is reported.
struct Eq13Result {
    double spread = 0.0;       // relative spread of the ratio under the better model
    double constant = 0.0;     // |mean ratio| under that model
    bool metaplectic_factor;   // true when oracle = closed * (1-|w|^2)^(1/4)
};

Eq13Result eq13_ratio_check(double k, int n, int n_prime, const std::vector<cplx>& ws,
                            const TruncatedOperator* cached_squeezes, const Basis& basis) {
    std::vector<cplx> plain, adjusted;
    const int row = basis.ds_index(0, n_prime);
    const int col = basis.ds_index(0, n);
    for (size_t i = 0; i < ws.size(); ++i) {
        const cplx w = ws[i];
        const cplx closed = squeeze_me_closed(DSWeight(k), n, n_prime, w);
        const cplx oracle = cached_squeezes[i].mat(row, col);
        const cplx ratio = closed / oracle;
        plain.push_back(ratio);
        adjusted.push_back(ratio * std::pow(1.0 - std::norm(w), 0.25));
    }
    auto spread_of = [](const std::vector<cplx>& r) {
        cplx mean = 0.0;
        for (const cplx& x : r) mean += x;
        mean /= static_cast<double>(r.size());
        double s = 0.0;
        for (const cplx& x : r) s = std::max(s, std::abs(x - mean) / std::abs(mean));
        return std::make_pair(s, std::abs(mean));
    };
    const auto [s_plain, c_plain] = spread_of(plain);
    const auto [s_adj, c_adj] = spread_of(adjusted);
    if (s_plain <= s_adj) return {s_plain, c_plain, false};
    return {s_adj, c_adj, true};
}

} // namespace

SuiteResult run_closed_vs_oracle_suite(int sw_cutoff, unsigned seed, double m_index) {
    SuiteResult suite{"closed-vs-oracle", {}, {}, 0.0};
    Rng rng(seed);

    // --- Discrete-series squeeze matrix elements (closed hypergeometric form).
    {
        const int level = 10;
        double worst_spread = 0.0;
        double worst_const_dev = 0.0;
        bool any_plain = false, any_metaplectic = false;
        for (double k : {2.0, 3.0, 4.25}) {
            const Basis basis = Basis::ds(k, level);
            std::vector<cplx> ws;
            while (ws.size() < 20) {
                const cplx w = rng.on_disk(0.1, 0.75);
                // Steer clear of zeros of the hypergeometric factor, where
                // the ratio of two vanishing quantities loses precision.
                bool ok = true;
                for (int n = 0; n <= 6 && ok; ++n) {
                    const HalfWeight hw(k);
                    for (int np = n; np <= 6 && ok; ++np)
                        if (std::abs(hyp2f1_terminating(n, np - n + n + 2.0 * hw.h, np - n + 1.0,
                                                        std::norm(w))) < 1e-3)
                            ok = false;
                }
                if (ok) ws.push_back(w);
            }
            std::vector<TruncatedOperator> squeezes;
            squeezes.reserve(ws.size());
            for (const cplx& w : ws) squeezes.push_back(squeeze(w, basis));
            for (int n = 0; n <= 6; ++n) {
                for (int n_prime = n; n_prime <= 6; ++n_prime) {
                    const Eq13Result r =
                        eq13_ratio_check(k, n, n_prime, ws, squeezes.data(), basis);
                    worst_spread = std::max(worst_spread, r.spread);
                    worst_const_dev = std::max(worst_const_dev, std::abs(r.constant - 1.0));
                    (r.metaplectic_factor ? any_metaplectic : any_plain) = true;
                }
            }
        }
        suite.checks.push_back({"squeeze_me_ratio_spread", worst_spread});
        suite.notes.push_back(std::string("squeeze_me normalization: ") +
                              (any_metaplectic && !any_plain
                                   ? "oracle = closed * (1-|w|^2)^(1/4) (metaplectic vacuum factor)"
                                   : "mixed/plain") +
                              ", constant = 1 within " + fmt(worst_const_dev));
        suite.checks.push_back({"squeeze_me_constant_is_one", worst_const_dev});
    }

    // --- Displacement matrix elements vs the factored operator.
    {
        const int cutoff = std::max(sw_cutoff, 32);
        const Basis basis = Basis::sw(cutoff);
        double dev = 0.0;
        for (int trial = 0; trial < 12; ++trial) {
            const cplx alpha = rng.on_disk(0.05, 2.0);
            const TruncatedOperator d = displacement(alpha, basis);
            for (int row = 0; row <= 10; ++row)
                for (int col = 0; col <= 10; ++col)
                    dev = std::max(dev,
                                   std::abs(displacement_me_closed(row, col, alpha) - d.mat(row, col)));
        }
        suite.checks.push_back({"displacement_me", dev});
    }

    // --- Transformed generators vs the conjugation oracle at N = 96.
    {
        const int cutoff = 96;
        // The oracle's edge corruption is driven by the squeezed-state tails:
        // at the box corner (alpha aligned with w, |alpha| = 1.5, |w| = 0.5)
        // grade-10 columns of T already leak ~1e-9, which the sandwich
        // amplifies by ||K||.  Grade <= 8 keeps the comparison at ~7e-10.
        const int interior = 8;
        const SWGenerators gens = build_sw_generators(cutoff, SWIndex(m_index));
        const AlgebraOps ops = ops_view(gens);
        double dev = 0.0;
        const std::pair<cplx, cplx> samples[] = {
            {{1.5, 0.0}, {0.5, 0.0}},
            {{1.0, 1.0}, {-0.5, 0.0}},
            {{-0.7, 1.2}, {0.0, 0.3}},
            {{0.5, -1.0}, {-0.25, 0.4}},
        };
        for (const auto& [alpha, w] : samples) {
            const SqueezeParams params(alpha, w);
            const TransformedGenerators hat = transformed_generators(params, ops);
            const TruncatedOperator right = displacement(alpha, gens.basis) * squeeze(w, gens.basis);
            const TruncatedOperator left = squeeze(-w, gens.basis) * displacement(-alpha, gens.basis);
            const auto conjugate = [&](const TruncatedOperator& x) { return left * (x * right); };
            dev = std::max(dev, max_abs_diff_interior(hat.a_hat, conjugate(gens.a), interior));
            dev = std::max(dev, max_abs_diff_interior(hat.a_dag_hat, conjugate(gens.a_dag), interior));
            dev = std::max(dev, max_abs_diff_interior(hat.K0_hat, conjugate(gens.K0), interior));
            dev = std::max(dev, max_abs_diff_interior(hat.Kp_hat, conjugate(gens.K_plus), interior));
            dev = std::max(dev, max_abs_diff_interior(hat.Km_hat, conjugate(gens.K_minus), interior));
        }
        suite.checks.push_back({"transformed_generators", dev});

        // Expectation engine vs the direct sandwich <T state| A |T state>.
        double route_dev = 0.0;
        const PolyWord words[] = {
            {1, 0, 0, 0, 1},  // a+ a
            {0, 0, 2, 0, 0},  // K0^2
            {1, 1, 0, 1, 1},  // a+ K+ K- a
            {2, 0, 0, 0, 2},  // a+^2 a^2
            {0, 1, 1, 1, 0},  // K+ K0 K-
        };
        for (const auto& [alpha, w] : samples) {
            const SqueezeParams params(alpha, w);
            for (int n : {0, 2}) {
                const StateVector tv = apply_squeezed(params, gens.basis, n);
                for (const PolyWord& word : words) {
                    const cplx via_engine = expectation_poly(word, params, ops, gens.basis, n);
                    StateVector av = tv;
                    for (int i = 0; i < word.n_a; ++i) av = apply(gens.a, av);
                    for (int i = 0; i < word.n_kminus; ++i) av = apply(gens.K_minus, av);
                    for (int i = 0; i < word.n_k0; ++i) av = apply(gens.K0, av);
                    for (int i = 0; i < word.n_kplus; ++i) av = apply(gens.K_plus, av);
                    for (int i = 0; i < word.n_adag; ++i) av = apply(gens.a_dag, av);
                    const cplx via_sandwich = inner(tv, av);
                    route_dev = std::max(route_dev, std::abs(via_engine - via_sandwich));
                }
            }
        }
        suite.checks.push_back({"expectation_two_routes", route_dev});
    }

    // --- Mandel Q closed form vs the expectation engine at N = 128.
    {
        const int cutoff = std::max(sw_cutoff, 128);
        const SWGenerators gens = build_sw_generators(cutoff, SWIndex(m_index));
        double dev = 0.0;
        const cplx alphas[] = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}, {0.3, -0.9}};
        const double radii[] = {0.0, 0.3, 0.6};
        const double angles[] = {0.0, 2.0 * M_PI / 3.0, 4.0 * M_PI / 3.0, 1.1};
        for (int n = 0; n <= 3; ++n) {
            for (const cplx& alpha : alphas) {
                for (double rad : radii) {
                    for (double ang : angles) {
                        const cplx w = rad * cplx(std::cos(ang), std::sin(ang));
                        if (n == 0 && alpha == 0.0 && w == 0.0) continue;  // vacuum: Q undefined
                        dev = std::max(dev, std::abs(mandel_q_closed(alpha, w, n) -
                                                     mandel_q_numeric(alpha, w, n, gens)));
                    }
                }
            }
        }
        suite.checks.push_back({"mandel_closed_vs_numeric", dev});
    }

    // --- Mandel special values from the closed form alone.
    {
        double dev = 0.0;
        for (double t : {0.0, 0.7, 1.9, 4.0})
            dev = std::max(dev, std::abs(mandel_q_closed(cplx(0.3 + t, 0.0), 0.0, 0)));
        for (int n = 1; n <= 4; ++n)
            for (double ang : {0.0, 1.0, 2.5})
                dev = std::max(dev,
                               std::abs(mandel_q_closed(
                                   cplx(std::cos(ang), std::sin(ang)) / std::sqrt(2.0), 0.0, n)));
        suite.checks.push_back({"mandel_q_alpha_zeros", dev});

        // Q(alpha, 0) = n (2|alpha|^2 - 1)/(n + |alpha|^2).
        double red_dev = 0.0;
        for (int n = 0; n <= 5; ++n)
            for (double t = 0.1; t < 2.05; t += 0.25) {
                const cplx alpha(t * 0.8, -t * 0.6);
                const double want =
                    n * (2.0 * std::norm(alpha) - 1.0) / (n + std::norm(alpha));
                red_dev = std::max(red_dev, std::abs(mandel_q_closed(alpha, 0.0, n) - want));
            }
        suite.checks.push_back({"mandel_q_w0_reduction", red_dev});

        // Joint phase covariance alpha -> e^{it} alpha, w -> e^{2it} w.
        double phase_dev = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const cplx alpha = rng.on_disk(0.0, 2.0);
            const cplx w = rng.on_disk(0.0, 0.9);
            const double t = rng.uniform(0.0, 2.0 * M_PI);
            const cplx ph(std::cos(t), std::sin(t));
            for (int n = 0; n <= 3; ++n) {
                if (std::abs(alpha) < 1e-3 && std::abs(w) < 1e-3 && n == 0) continue;
                phase_dev = std::max(phase_dev, std::abs(mandel_q_closed(alpha, w, n) -
                                                         mandel_q_closed(ph * alpha, ph * ph * w, n)));
            }
        }
        suite.checks.push_back({"mandel_q_phase_covariance", phase_dev});

        // The closed zero radius annihilates Q(0, ., n) and separates its signs.
        // n = 0 degenerates: the radius is 0, the vacuum, where Q itself is
        // 0/0; there the zero-locus identity is checked in polynomial form.
        double zero_dev = 0.0;
        double locus_dev = 0.0;
        bool signs_ok = true;
        for (int n = 0; n <= 3; ++n) {
            const double radius = mandel_zero_radius(n);
            const double n0 = n + 0.5;
            const double w2 = radius * radius;
            const double numer = (4.0 * n0 * n0 + 3.0) * w2;
            const double denom = 2.0 * n0 * (1.0 - w2 * w2) - (1.0 - w2) * (1.0 - w2);
            locus_dev = std::max(locus_dev, std::abs(numer - denom));
            if (n == 0) continue;
            zero_dev = std::max(zero_dev, std::abs(mandel_q_closed(0.0, radius, n)));
            const double below = mandel_q_closed(0.0, radius - 1e-3, n);
            const double above = mandel_q_closed(0.0, radius + 1e-3, n);
            if (!(below < 0.0 && above > 0.0)) signs_ok = false;
        }
        suite.checks.push_back({"mandel_zero_radius_q", zero_dev});
        suite.checks.push_back({"mandel_zero_radius_locus", locus_dev});
        suite.checks.push_back({"mandel_zero_radius_sign_change", signs_ok ? 0.0 : 1.0});
        suite.notes.push_back("mandel zero radius at n=0 is 0 (vacuum point, Q degenerate 0/0); "
                              "zero-locus identity checked in polynomial form there");
    }

    return suite;
}

SuiteResult run_covariance_suite(int sw_cutoff, double m_index) {
    SuiteResult suite{"covariance", {}, {}, 0.0};
    const int cutoff = std::max(sw_cutoff, 128);
    const SWGenerators gens = build_sw_generators(cutoff, SWIndex(m_index));
    const double hbar = gens.index.hbar;

    // Closed vs numeric, and numeric alpha-independence along the way.
    double dev = 0.0;
    const cplx alphas[] = {{0.0, 0.0}, {1.0, 1.0}, {-2.0, 0.0}};
    const double radii[] = {0.0, 0.2, 0.45, 0.6};
    for (int n = 0; n <= 3; ++n) {
        for (double rad : radii) {
            for (int ia = 0; ia < 6; ++ia) {
                const double ang = ia * M_PI / 3.0;
                const cplx w = rad * cplx(std::cos(ang), std::sin(ang));
                const CovarianceTriple closed = covariance_closed(n, w, hbar);
                for (const cplx& alpha : alphas) {
                    const CovarianceTriple numeric =
                        covariance_numeric(n, SqueezeParams(alpha, w), gens);
                    dev = std::max({dev, std::abs(closed.sigma_qq - numeric.sigma_qq),
                                    std::abs(closed.sigma_pp - numeric.sigma_pp),
                                    std::abs(closed.sigma_pq - numeric.sigma_pq)});
                }
            }
        }
    }
    suite.checks.push_back({"closed_vs_numeric", dev});

    // Schroedinger equality at n = 0 and the algebraic uncertainty identity.
    double schr_dev = 0.0;
    double ident_dev = 0.0;
    for (int n = 0; n <= 5; ++n) {
        for (double rad : {0.0, 0.3, 0.6, 0.9}) {
            for (int ia = 0; ia < 8; ++ia) {
                const double ang = ia * M_PI / 4.0 + 0.2;
                const cplx w = rad * cplx(std::cos(ang), std::sin(ang));
                const CovarianceTriple c = covariance_closed(n, w, hbar);
                const double product = c.sigma_qq * c.sigma_pp - c.sigma_pq * c.sigma_pq;
                ident_dev = std::max(ident_dev,
                                     std::abs(product - c.n0 * c.n0 * hbar * hbar));
                if (n == 0)
                    schr_dev = std::max(schr_dev, std::abs(product - hbar * hbar / 4.0));
            }
        }
    }
    suite.checks.push_back({"schrodinger_equality_n0", schr_dev});
    suite.checks.push_back({"uncertainty_identity", ident_dev});

    // Squeezing predicate vs disk membership on a 32 x 32 grid.
    int disagreements = 0;
    for (int n = 0; n <= 3; ++n) {
        const SqueezeDisk disk = squeezing_disk(n);
        for (int i = 0; i < 32; ++i) {
            for (int j = 0; j < 32; ++j) {
                const cplx w(-0.95 + 1.9 * i / 31.0, -0.95 + 1.9 * j / 31.0);
                if (std::norm(w) >= 1.0) continue;
                const bool via_predicate = is_squeezed(n, w);
                const bool via_disk = std::abs(w - disk.center) < disk.radius;
                if (via_predicate != via_disk) ++disagreements;
            }
        }
    }
    suite.checks.push_back({"predicate_vs_disk", static_cast<double>(disagreements)});

    // Discrete-series covariances, reported only: the a-ladder index n'
    // plays the role of n in the closed form.
    {
        const DSGenerators ds = build_ds_generators(DSWeight(3.0), 18);
        double ds_dev = 0.0;
        for (const DsLabel state : {DsLabel{0, 0}, DsLabel{1, 1}, DsLabel{2, 0}, DsLabel{0, 2}}) {
            for (const cplx w : {cplx(0.0, 0.0), cplx(0.3, 0.0), cplx(-0.1, 0.25)}) {
                const CovarianceTriple numeric = covariance_numeric_ds(
                    state, SqueezeParams(cplx(0.5, -0.5), w), ds, hbar);
                const CovarianceTriple closed = covariance_closed(state.n_prime, w, hbar);
                ds_dev = std::max({ds_dev, std::abs(closed.sigma_qq - numeric.sigma_qq),
                                   std::abs(closed.sigma_pp - numeric.sigma_pp),
                                   std::abs(closed.sigma_pq - numeric.sigma_pq)});
            }
        }
        suite.notes.push_back(
            "ds covariances (reported, not asserted): closed form with n := n' (a-ladder index) "
            "matches numeric within " + fmt(ds_dev) + ", independent of the W index and k");
    }
    return suite;
}

SuiteResult run_disk_suite() {
    SuiteResult suite{"disk", {}, {}, 0.0};

    double geom_dev = 0.0;
    const SqueezeDisk d0 = squeezing_disk(0);
    geom_dev = std::max(geom_dev, std::abs(d0.center - cplx(-0.5, 0.0)));
    geom_dev = std::max(geom_dev, std::abs(d0.radius - 0.5));
    const SqueezeDisk d1 = squeezing_disk(1);
    geom_dev = std::max(geom_dev, std::abs(d1.center - cplx(-0.75, 0.0)));
    geom_dev = std::max(geom_dev, std::abs(d1.radius - 0.25));
    suite.checks.push_back({"disk_geometry", geom_dev});

    // Boundary saturation 2 n0 u+ = 1 on 64 samples (offset to avoid the
    // tangency point w = -1 where u+ degenerates to 0/0).
    double boundary_dev = 0.0;
    for (int n = 0; n <= 3; ++n) {
        const SqueezeDisk disk = squeezing_disk(n);
        const double n0 = n + 0.5;
        for (int j = 0; j < 64; ++j) {
            const double t = 2.0 * M_PI * (j + 0.5) / 64.0;
            const cplx w = disk.center + disk.radius * cplx(std::cos(t), std::sin(t));
            const double u_plus = std::norm(1.0 + w) / (1.0 - std::norm(w));
            boundary_dev = std::max(boundary_dev, std::abs(2.0 * n0 * u_plus - 1.0));
        }
    }
    suite.checks.push_back({"boundary_saturation", boundary_dev});

    // w = 0 is never squeezed, and the two named spot checks at n = 0.
    double spot_dev = 0.0;
    for (int n = 0; n <= 5; ++n)
        if (is_squeezed(n, 0.0)) spot_dev = 1.0;
    if (!is_squeezed(0, cplx(-0.5, 0.0))) spot_dev = 1.0;
    if (is_squeezed(0, cplx(0.3, 0.0))) spot_dev = 1.0;
    suite.checks.push_back({"spot_predicates", spot_dev});
    return suite;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "structure", "boson",            "casimir",    "intertwine",
        "unitarity", "closed-vs-oracle", "covariance", "disk"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyConfig& config) {
    std::vector<std::string> wanted = names;
    if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) wanted = suite_names();

    const std::vector<double> default_ks = {1.7, 2.5, 3.0, 4.25};
    const int ds_level = std::clamp(config.cutoff, 3, 12);

    std::vector<SuiteResult> results;
    for (const std::string& name : wanted) {
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r;
        if (name == "structure") {
            r = run_structure_suite();
        } else if (name == "boson") {
            r = run_boson_suite(config.cutoff, ds_level, default_ks, config.m);
        } else if (name == "casimir") {
            r = run_casimir_suite(config.k_explicit ? std::vector<double>{config.k} : default_ks,
                                  ds_level);
        } else if (name == "intertwine") {
            r = run_intertwine_suite(std::clamp(config.cutoff, 8, 24),
                                     std::clamp(config.cutoff / 2, 4, 10));
        } else if (name == "unitarity") {
            r = run_unitarity_suite(config.cutoff);
        } else if (name == "closed-vs-oracle") {
            r = run_closed_vs_oracle_suite(config.cutoff, config.seed, config.m);
        } else if (name == "covariance") {
            r = run_covariance_suite(config.cutoff, config.m);
        } else if (name == "disk") {
            r = run_disk_suite();
        } else {
            throw Error(Errc::invalid_argument, "unknown suite: " + name);
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace jacobi::verify
