#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "core/concurrence.hpp"
#include "core/format.hpp"
#include "core/lindblad.hpp"
#include "core/linalg.hpp"
#include "core/magnet.hpp"
#include "core/steady.hpp"
#include "core/version.hpp"

namespace spinpair {

namespace {

std::string metric_tokens(const std::map<std::string, double> &metrics) {
    std::string out;
    for (const auto &[k, v] : metrics) {
        out += ' ';
        out += k;
        out += '=';
        out += fmt17(v);
    }
    return out;
}

SuiteResult finish(const std::string &name, bool passed,
                   std::map<std::string, double> metrics) {
    SuiteResult r;
    r.name = name;
    r.passed = passed;
    r.metrics = std::move(metrics);
    r.line = "suite=" + name + metric_tokens(r.metrics) + (passed ? " pass=1" : " pass=0");
    return r;
}

double max_entry_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

} // namespace

SuiteResult verify_kms() {
    const double kTol = 1e-10;
    const double b_grid[] = {0.6, 1.0, 1.7};
    const double tE_grid[] = {0.07, 0.3, 1.0, 2.5};
    const double dmu_grid[] = {0.15, 0.8, 2.0}; // mu = -b - dmu stays below the band
    const double r_grid[] = {0.0, 0.4, 1.3, 2.9, 5.7, 11.3};
    double worst = 0.0;
    long points = 0;
    for (double b : b_grid) {
        const double omega_grid[] = {-0.9 * b, -0.4 * b, 0.01, 0.6, 1.0, 1.9};
        for (double tE : tE_grid)
            for (double dmu : dmu_grid) {
                MagnetParams m;
                m.b = b;
                m.T_E = tE;
                m.mu = -b - dmu;
                m.validate();
                for (double omega : omega_grid)
                    for (double r : r_grid)
                        for (int n : {+1, -1}) {
                            if (corr_plus(m, n, omega, r) == 0.0)
                                continue; // out of band for this channel
                            worst = std::max(worst, kms_residual(m, n, omega, r));
                            ++points;
                        }
            }
    }
    return finish("kms", worst <= kTol,
                  {{"points", static_cast<double>(points)}, {"worst_residual", worst},
                   {"tol", kTol}});
}

SuiteResult verify_psd() {
    const double kMarginTol = -1e-12;
    const double kSpectrumTol = 1e-10;
    const double b_grid[] = {0.6, 1.0, 1.1, 1.4, 2.2};
    const double tE_grid[] = {0.0, 0.15, 0.9};
    const double dmu_grid[] = {0.4, 1.6};
    const double ratio_grid[] = {0.135, 0.5, 1.0, 2.0};
    const double r_grid[] = {0.0, 0.5, 1.0, 2.0, 5.0, 8.0};
    const double r_spec_grid[] = {0.0, 1.0, 5.0}; // spectra are pricier; thin grid

    double min_margin = 0.0;
    double min_corr_eig = 0.0;
    double max_re = -1.0;
    long unphysical = 0;
    long points = 0;

    for (double b : b_grid)
        for (double tE : tE_grid)
            for (double dmu : dmu_grid) {
                MagnetParams m;
                m.b = b;
                m.T_E = tE;
                m.mu = -b - dmu;
                m.validate();
                const double omega_grid[] = {-0.9 * b, -0.3 * b, 0.2, 1.0, 1.7};
                for (double ratio : ratio_grid) {
                    CouplingParams c;
                    c.lambda_plus = ratio;
                    c.lambda_minus = 1.0;
                    const double lref = std::max(c.lambda_plus, c.lambda_minus);
                    const double scale = m.A / (lref * lref);
                    for (double r : r_grid) {
                        SystemParams sys;
                        sys.delta = 1.0;
                        sys.r = r;
                        RateSet rates = magnet_rates(m, c, sys);
                        rates.gamma_e_local *= scale;
                        rates.gamma_e_nonlocal *= scale;
                        rates.gamma_a_local *= scale;
                        rates.gamma_a_nonlocal *= scale;
                        const PsdReport psd = validate_psd(rates);
                        min_margin = std::min({min_margin, psd.margin_e, psd.margin_a});
                        if (!psd.physical)
                            ++unphysical;
                        ++points;

                        const bool want_spectrum =
                            psd.physical &&
                            std::find(std::begin(r_spec_grid), std::end(r_spec_grid), r) !=
                                std::end(r_spec_grid);
                        if (want_spectrum) {
                            const GapResult g =
                                spectral_gap(build_liouvillian(rates, 1.0));
                            for (const cplx &ev : g.spectrum)
                                max_re = std::max(max_re, ev.real());
                        }
                    }
                    // 2x2 spatial correlation matrices [[c(0), c(r)], [c(r), c(0)]]
                    // must be PSD for every frequency and channel.
                    for (double r : r_grid) {
                        if (r == 0.0)
                            continue;
                        for (double omega : omega_grid)
                            for (int n : {+1, -1})
                                for (int side : {0, 1}) {
                                    const double c0 = side == 0 ? corr_plus(m, n, omega, 0.0)
                                                                : corr_minus(m, n, omega, 0.0);
                                    if (c0 == 0.0)
                                        continue;
                                    const double cr = side == 0 ? corr_plus(m, n, omega, r)
                                                                : corr_minus(m, n, omega, r);
                                    ComplexMatrix cm(2, 2);
                                    cm(0, 0) = cm(1, 1) = c0;
                                    cm(0, 1) = cm(1, 0) = cr;
                                    const HermitianEig eig = hermitian_eig(cm);
                                    const double lo =
                                        eig.values[0] / std::max(1.0, std::abs(c0));
                                    min_corr_eig = std::min(min_corr_eig, lo);
                                }
                    }
                }
            }

    const bool passed = min_margin >= kMarginTol && unphysical == 0 &&
                        min_corr_eig >= -1e-12 && max_re <= kSpectrumTol;
    return finish("psd", passed,
                  {{"points", static_cast<double>(points)},
                   {"unphysical", static_cast<double>(unphysical)},
                   {"min_margin", min_margin},
                   {"min_corr_eig", min_corr_eig},
                   {"max_re_lambda", max_re}});
}

SuiteResult verify_detailed_balance() {
    const double kResidualTol = 1e-12;
    const double kGibbsTol = 1e-8;
    const double kConcTol = 1e-9;
    const double kT_grid[] = {0.2, 0.5, 1.0, 5.0, -0.2, -0.5, -1.0, -5.0};
    const double f_grid[] = {0.0, 0.3, 0.7, 0.99};

    double worst_residual = 0.0;
    double worst_gibbs = 0.0;
    double worst_conc = 0.0;
    long points = 0;
    for (double kT : kT_grid)
        for (double f : f_grid) {
            const RateSet rates = rates_from_temperatures(1.0, f, kT, kT, 1);
            worst_residual = std::max(worst_residual, detailed_balance_residual(rates, kT));
            const SteadyStateResult ss = steady_state(build_liouvillian(rates, 1.0));
            worst_gibbs = std::max(worst_gibbs, max_entry_diff(ss.rho, thermal_state(kT)));
            worst_conc = std::max(worst_conc, concurrence(ss.rho).value);
            ++points;
        }
    const bool passed =
        worst_residual <= kResidualTol && worst_gibbs <= kGibbsTol && worst_conc <= kConcTol;
    return finish("detailed-balance", passed,
                  {{"points", static_cast<double>(points)},
                   {"worst_residual", worst_residual},
                   {"worst_gibbs", worst_gibbs},
                   {"worst_concurrence", worst_conc}});
}

SuiteResult verify_oracles(std::uint64_t seed, int sets) {
    const double kStateTol = 1e-6;
    const double kJumpTol = 1e-12;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

    double worst_state = 0.0;
    double worst_jump = 0.0;
    int accepted = 0;
    int attempts = 0;
    while (accepted < sets && attempts < 200 * sets) {
        ++attempts;
        RateSet rates;
        rates.gamma_e_local = uniform(0.3, 1.2);
        rates.gamma_a_local = uniform(0.3, 1.2);
        rates.gamma_e_nonlocal = rates.gamma_e_local * uniform(-0.9, 0.9);
        rates.gamma_a_nonlocal = rates.gamma_a_local * uniform(-0.9, 0.9);
        const double delta = uniform(0.5, 2.0);

        const ComplexMatrix l = build_liouvillian(rates, delta);
        const GapResult gap = spectral_gap(l);
        // Keep the relaxation time and the step count of the explicit
        // integrator both moderate; rejected draws are simply redrawn.
        if (gap.zero_count != 1 || gap.gap < 0.08)
            continue;

        const SteadyStateResult ns = steady_state(l);
        if (ns.multiplicity != 1)
            continue;
        const SteadyStateResult blk = steady_state_block(l);
        worst_state = std::max(worst_state, max_entry_diff(ns.rho, blk.rho));

        ComplexMatrix rho0(4, 4);
        for (int i = 0; i < 4; ++i)
            rho0(i, i) = 0.25;
        const ComplexMatrix longt = propagate(l, rho0, 20.0 / gap.gap);
        worst_state = std::max(worst_state, max_entry_diff(ns.rho, longt));

        worst_jump = std::max(
            worst_jump,
            max_entry_diff(build_dissipator(rates), dissipator_from_jumps(jump_decomposition(rates))));
        ++accepted;
    }

    const bool passed =
        accepted == sets && worst_state <= kStateTol && worst_jump <= kJumpTol;
    return finish("oracles", passed,
                  {{"sets", static_cast<double>(accepted)},
                   {"worst_state_diff", worst_state},
                   {"worst_jump_diff", worst_jump}});
}

VerifyReport run_verify(const std::string &suite, std::uint64_t seed) {
    std::vector<SuiteResult> results;
    if (suite == "kms" || suite == "all")
        results.push_back(verify_kms());
    if (suite == "psd" || suite == "all")
        results.push_back(verify_psd());
    if (suite == "detailed-balance" || suite == "all")
        results.push_back(verify_detailed_balance());
    if (suite == "oracles" || suite == "all")
        results.push_back(verify_oracles(seed));
    if (results.empty())
        throw invalid_input("unknown suite '" + suite +
                            "'; choose kms, psd, detailed-balance, oracles, or all");

    VerifyReport report;
    report.passed = true;
    report.text = "# spinpair " SPINPAIR_VERSION_STRING " verify\n";
    for (const SuiteResult &r : results) {
        report.passed = report.passed && r.passed;
        report.text += r.line;
        report.text += '\n';
    }
    report.text += report.passed ? "pass=1\n" : "pass=0\n";
    return report;
}

} // namespace spinpair
