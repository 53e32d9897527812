// Command-line front end.  Talks to the solver exclusively through the
// public C interface in spinpair.h; everything here is argument plumbing
// and text assembly.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinpair.h"

namespace {

std::string fmt(double v) {
    char buf[64];
    const std::to_chars_result r =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

std::string join16(const double *v, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (i)
            out += ',';
        out += fmt(v[i]);
    }
    return out;
}

struct CommonArgs {
    std::string config;
    std::string out = "stdout";
    std::vector<std::string> overrides;
};

void attach_common(CLI::App *sub, CommonArgs &args, bool with_params) {
    sub->add_option("--config", args.config, "key=value parameter file");
    sub->add_option("--out", args.out, "output path, or 'stdout'");
    if (with_params)
        sub->add_option("params", args.overrides, "key=value overrides (applied after --config)");
}

int fail(spinpair_status st) {
    std::fprintf(stderr, "error: %s\n", spinpair_last_error());
    return static_cast<int>(st);
}

// Builds the parameter bag; returns nullptr after printing the error.
spinpair_params *build_params(const CommonArgs &args, spinpair_status *st) {
    spinpair_params *p = spinpair_params_new();
    if (!p) {
        std::fprintf(stderr, "error: out of memory\n");
        *st = SPINPAIR_ERR_NUMERICAL;
        return nullptr;
    }
    if (!args.config.empty()) {
        *st = spinpair_params_load_file(p, args.config.c_str());
        if (*st != SPINPAIR_OK) {
            std::fprintf(stderr, "error: %s\n", spinpair_last_error());
            spinpair_params_free(p);
            return nullptr;
        }
    }
    for (const std::string &kv : args.overrides) {
        const size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::fprintf(stderr, "error: expected key=value argument, got '%s'\n", kv.c_str());
            spinpair_params_free(p);
            *st = SPINPAIR_ERR_VALIDATION;
            return nullptr;
        }
        *st = spinpair_params_set(p, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
        if (*st != SPINPAIR_OK) {
            std::fprintf(stderr, "error: %s\n", spinpair_last_error());
            spinpair_params_free(p);
            return nullptr;
        }
    }
    *st = SPINPAIR_OK;
    return p;
}

int write_out(const std::string &path, const std::string &text) {
    if (path == "stdout" || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open output file: %s\n", path.c_str());
        return static_cast<int>(SPINPAIR_ERR_VALIDATION);
    }
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    f.flush();
    if (!f) {
        std::fprintf(stderr, "error: short write to %s\n", path.c_str());
        return static_cast<int>(SPINPAIR_ERR_VALIDATION);
    }
    return 0;
}

std::string rates_block(const spinpair_rates_report &r) {
    std::string t;
    t += "gamma_e_local=" + fmt(r.gamma_e_local) + "\n";
    t += "gamma_e_nonlocal=" + fmt(r.gamma_e_nonlocal) + "\n";
    t += "gamma_a_local=" + fmt(r.gamma_a_local) + "\n";
    t += "gamma_a_nonlocal=" + fmt(r.gamma_a_nonlocal) + "\n";
    t += "kT0=" + fmt(r.kT0) + "\n";
    t += "kTr=" + fmt(r.kTr) + "\n";
    t += "ratio0=" + fmt(r.ratio0) + "\n";
    t += "ratior=" + fmt(r.ratior) + "\n";
    t += "margin_e=" + fmt(r.margin_e) + "\n";
    t += "margin_a=" + fmt(r.margin_a) + "\n";
    t += std::string("physical=") + (r.physical ? "1" : "0") + "\n";
    return t;
}

int cmd_rates(const CommonArgs &args) {
    spinpair_status st;
    spinpair_params *p = build_params(args, &st);
    if (!p)
        return static_cast<int>(st);
    spinpair_rates_report rep;
    st = spinpair_compute_rates(p, &rep);
    spinpair_params_free(p);
    if (st != SPINPAIR_OK)
        return fail(st);
    std::string text = std::string("# spinpair ") + spinpair_version() + " rates\n";
    text += rates_block(rep);
    return write_out(args.out, text);
}

int cmd_steady(const CommonArgs &args) {
    spinpair_status st;
    spinpair_params *p = build_params(args, &st);
    if (!p)
        return static_cast<int>(st);
    spinpair_steady_report rep;
    st = spinpair_compute_steady(p, &rep);
    spinpair_params_free(p);
    if (st != SPINPAIR_OK)
        return fail(st);
    std::string text = std::string("# spinpair ") + spinpair_version() + " steady\n";
    text += rates_block(rep.rates);
    if (rep.physical) {
        text += "rho_re=" + join16(rep.rho_re, 16) + "\n";
        text += "rho_im=" + join16(rep.rho_im, 16) + "\n";
        text += "concurrence=" + fmt(rep.concurrence) + "\n";
        text += "lambdas=" + join16(rep.lambdas, 4) + "\n";
        text += "gap=" + fmt(rep.gap) + "\n";
        text += "multiplicity=" + std::to_string(rep.multiplicity) + "\n";
        text += "purity=" + fmt(rep.purity) + "\n";
        text += "residual=" + fmt(rep.residual) + "\n";
        text += "cross_check=" + fmt(rep.cross_check) + "\n";
    }
    return write_out(args.out, text);
}

int cmd_gap(const CommonArgs &args) {
    spinpair_status st;
    spinpair_params *p = build_params(args, &st);
    if (!p)
        return static_cast<int>(st);
    spinpair_gap_report rep;
    st = spinpair_compute_gap(p, &rep);
    spinpair_params_free(p);
    if (st != SPINPAIR_OK)
        return fail(st);
    std::string text = std::string("# spinpair ") + spinpair_version() + " gap\n";
    text += rates_block(rep.rates);
    if (rep.physical) {
        text += "gap=" + fmt(rep.gap) + "\n";
        text += "zero_count=" + std::to_string(rep.zero_count) + "\n";
        text += std::string("no_decay=") + (rep.no_decay ? "1" : "0") + "\n";
        text += "spectrum_re=" + join16(rep.spectrum_re, 16) + "\n";
        text += "spectrum_im=" + join16(rep.spectrum_im, 16) + "\n";
    }
    return write_out(args.out, text);
}

int cmd_sweep(const CommonArgs &args, int workers) {
    spinpair_status st;
    spinpair_params *p = build_params(args, &st);
    if (!p)
        return static_cast<int>(st);
    char *csv = nullptr;
    st = spinpair_sweep_csv(p, workers, &csv);
    spinpair_params_free(p);
    if (st != SPINPAIR_OK)
        return fail(st);
    const int rc = write_out(args.out, csv);
    spinpair_string_free(csv);
    return rc;
}

int cmd_verify(const std::string &suite, std::uint64_t seed, const std::string &out) {
    char *report = nullptr;
    int passed = 0;
    const spinpair_status st = spinpair_verify(suite.c_str(), seed, &report, &passed);
    if (!report)
        return fail(st);
    const int rc = write_out(out, report);
    spinpair_string_free(report);
    if (rc != 0)
        return rc;
    return static_cast<int>(st);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"two-qubit steady states, concurrence, and relaxation spectra"};
    app.require_subcommand(1);

    CommonArgs rates_args, steady_args, gap_args, sweep_args;
    int workers = 0;
    std::string suite = "all";
    std::uint64_t seed = 12345;
    std::string verify_out = "stdout";

    attach_common(app.add_subcommand("rates", "emission/absorption rates and temperatures"),
                  rates_args, true);
    attach_common(app.add_subcommand("steady", "steady state, concurrence, gap"), steady_args,
                  true);
    attach_common(app.add_subcommand("gap", "full relaxation spectrum"), gap_args, true);
    CLI::App *sweep = app.add_subcommand("sweep", "grid sweep to CSV");
    attach_common(sweep, sweep_args, true);
    sweep->add_option("--workers", workers, "thread count; 0 = hardware parallelism");
    CLI::App *verify = app.add_subcommand("verify", "run self-check suites");
    verify->add_option("suite", suite, "kms, psd, detailed-balance, oracles, or all");
    verify->add_option("--seed", seed, "seed for the randomized suite");
    verify->add_option("--out", verify_out, "output path, or 'stdout'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return static_cast<int>(SPINPAIR_ERR_VALIDATION);
    }

    if (app.got_subcommand("rates"))
        return cmd_rates(rates_args);
    if (app.got_subcommand("steady"))
        return cmd_steady(steady_args);
    if (app.got_subcommand("gap"))
        return cmd_gap(gap_args);
    if (app.got_subcommand("sweep"))
        return cmd_sweep(sweep_args, workers);
    return cmd_verify(suite, seed, verify_out);
}
