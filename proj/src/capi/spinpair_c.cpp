#include "spinpair.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/format.hpp"
#include "core/params.hpp"
#include "core/sweep.hpp"
#include "core/verify.hpp"
#include "core/version.hpp"

using namespace spinpair;

// The opaque handle is just the C++ parameter bag.
struct spinpair_params {
    ParamSet ps;
};

namespace {

thread_local std::string g_last_error = "";

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Exceptions never cross the C boundary; they become status codes plus a
// thread-local message.
template <typename Fn> spinpair_status guarded(Fn &&fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const invalid_input &e) {
        g_last_error = e.what();
        return SPINPAIR_ERR_VALIDATION;
    } catch (const numerical_failure &e) {
        g_last_error = e.what();
        return SPINPAIR_ERR_NUMERICAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return SPINPAIR_ERR_NUMERICAL;
    }
}

void fill_rates(const ModelPoint &m, spinpair_rates_report *out) {
    out->gamma_e_local = m.rates.gamma_e_local;
    out->gamma_e_nonlocal = m.rates.gamma_e_nonlocal;
    out->gamma_a_local = m.rates.gamma_a_local;
    out->gamma_a_nonlocal = m.rates.gamma_a_nonlocal;
    out->kT0 = m.kT0.kT;
    out->kTr = m.kTr.kT;
    out->ratio0 = m.kT0.ratio;
    out->ratior = m.kTr.ratio;
    out->margin_e = m.psd.margin_e;
    out->margin_a = m.psd.margin_a;
    out->physical = m.psd.physical ? 1 : 0;
}

} // namespace

extern "C" {

spinpair_params *spinpair_params_new(void) { return new (std::nothrow) spinpair_params(); }

void spinpair_params_free(spinpair_params *p) { delete p; }

spinpair_status spinpair_params_set(spinpair_params *p, const char *key, const char *value) {
    if (!p || !key || !value) {
        g_last_error = "null argument";
        return SPINPAIR_ERR_VALIDATION;
    }
    return guarded([&] {
        p->ps.set(key, value);
        return SPINPAIR_OK;
    });
}

spinpair_status spinpair_params_load_file(spinpair_params *p, const char *path) {
    if (!p || !path) {
        g_last_error = "null argument";
        return SPINPAIR_ERR_VALIDATION;
    }
    return guarded([&] {
        const ParamSet loaded = ParamSet::from_file(path);
        for (const auto &[k, v] : loaded.entries())
            p->ps.set(k, v);
        return SPINPAIR_OK;
    });
}

spinpair_status spinpair_compute_rates(const spinpair_params *p, spinpair_rates_report *out) {
    if (!p || !out) {
        g_last_error = "null argument";
        return SPINPAIR_ERR_VALIDATION;
    }
    return guarded([&] {
        fill_rates(resolve_point(p->ps), out);
        return SPINPAIR_OK;
    });
}

spinpair_status spinpair_compute_steady(const spinpair_params *p, spinpair_steady_report *out) {
    if (!p || !out) {
        g_last_error = "null argument";
        return SPINPAIR_ERR_VALIDATION;
    }
    return guarded([&] {
        *out = spinpair_steady_report{};
        const PointReport rep = compute_point(p->ps);
        fill_rates(rep.model, &out->rates);
        out->physical = rep.solved ? 1 : 0;
        if (!rep.solved)
            return SPINPAIR_OK;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                out->rho_re[4 * i + j] = rep.steady.rho(i, j).real();
                out->rho_im[4 * i + j] = rep.steady.rho(i, j).imag();
            }
        out->concurrence = rep.conc.value;
        for (int i = 0; i < 4; ++i)
            out->lambdas[i] = rep.conc.lambdas[i];
        out->gap = rep.gap.gap;
        out->multiplicity = rep.steady.multiplicity;
        out->purity = rep.purity;
        out->residual = rep.steady.residual;
        out->cross_check = rep.cross_check;
        return SPINPAIR_OK;
    });
}

spinpair_status spinpair_compute_gap(const spinpair_params *p, spinpair_gap_report *out) {
    if (!p || !out) {
        g_last_error = "null argument";
        return SPINPAIR_ERR_VALIDATION;
    }
    return guarded([&] {
        *out = spinpair_gap_report{};
        const ModelPoint m = resolve_point(p->ps);
        fill_rates(m, &out->rates);
        out->physical = m.psd.physical ? 1 : 0;
        if (!m.psd.physical)
            return SPINPAIR_OK;
        const GapResult g = spectral_gap(build_liouvillian(m.rates, m.delta));
        out->gap = g.gap;
        out->zero_count = g.zero_count;
        out->no_decay = g.no_decay ? 1 : 0;
        for (int i = 0; i < 16 && i < static_cast<int>(g.spectrum.size()); ++i) {
            out->spectrum_re[i] = g.spectrum[i].real();
            out->spectrum_im[i] = g.spectrum[i].imag();
        }
        return SPINPAIR_OK;
    });
}

spinpair_status spinpair_sweep_csv(const spinpair_params *p, int workers, char **csv) {
    if (!p || !csv) {
        g_last_error = "null argument";
        return SPINPAIR_ERR_VALIDATION;
    }
    return guarded([&] {
        const std::string text = run_sweep(p->ps, workers);
        *csv = dup_string(text);
        if (!*csv) {
            g_last_error = "out of memory";
            return SPINPAIR_ERR_NUMERICAL;
        }
        return SPINPAIR_OK;
    });
}

spinpair_status spinpair_verify(const char *suite, uint64_t seed, char **report, int *passed) {
    if (!suite || !report || !passed) {
        g_last_error = "null argument";
        return SPINPAIR_ERR_VALIDATION;
    }
    return guarded([&] {
        const VerifyReport rep = run_verify(suite, seed);
        *report = dup_string(rep.text);
        if (!*report) {
            g_last_error = "out of memory";
            return SPINPAIR_ERR_NUMERICAL;
        }
        *passed = rep.passed ? 1 : 0;
        if (!rep.passed) {
            g_last_error = "verification suite failed";
            return SPINPAIR_ERR_VERIFY;
        }
        return SPINPAIR_OK;
    });
}

void spinpair_string_free(char *s) { std::free(s); }

const char *spinpair_last_error(void) { return g_last_error.c_str(); }

const char *spinpair_version(void) { return SPINPAIR_VERSION_STRING; }

} // extern "C"
