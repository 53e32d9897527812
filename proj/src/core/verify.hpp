#ifndef SPINPAIR_VERIFY_HPP
#define SPINPAIR_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>

namespace spinpair {

// One self-checking suite run: `line` is a machine-readable key=value report
// row, `metrics` the named worst-case numbers behind it.
struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string line;
    std::map<std::string, double> metrics;
};

// Generalized detailed-balance identity of the environment correlations,
// swept over band shift, temperature, chemical potential, separation and
// both coupling channels.  Residuals are relative for large ratios.
SuiteResult verify_kms();

// Complete-positivity guarantees of magnet-derived rates: rate margins,
// 2x2 correlation-matrix eigenvalues, and Liouvillian spectra staying in
// the closed left half plane.
SuiteResult verify_psd();

// Equal local and nonlocal temperatures force the Gibbs state: residual of
// the pairwise cancellation, distance of the steady state from the thermal
// state, and its concurrence.
SuiteResult verify_detailed_balance();

// Randomized cross-validation of the three steady-state solvers and of the
// jump decomposition against the directly assembled dissipator.
SuiteResult verify_oracles(std::uint64_t seed, int sets = 50);

struct VerifyReport {
    bool passed = false;
    std::string text; // full printable report, one line per suite
};

// suite in {kms, psd, detailed-balance, oracles, all}; throws invalid_input
// on anything else.  seed feeds the randomized suite only.
VerifyReport run_verify(const std::string &suite, std::uint64_t seed);

} // namespace spinpair

#endif
