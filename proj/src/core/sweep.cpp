#include "core/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "core/format.hpp"
#include "core/version.hpp"

namespace spinpair {

namespace {

// Selectable data columns, in the order they appear in every CSV.
const char *const kColumns[] = {
    "gamma_e_local", "gamma_e_nonlocal", "gamma_a_local", "gamma_a_nonlocal",
    "kT0",           "kTr",              "concurrence",   "gap",
    "multiplicity",  "purity",
};

std::vector<std::string> split_on(const std::string &text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string sanitize(const std::string &msg) {
    std::string out = msg;
    for (char &c : out)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return out;
}

// Fill in defaulted keys so the metadata block states every value the run
// actually used, not just the ones the caller typed.
ParamSet resolved_base(const ParamSet &ps) {
    ParamSet out = ps;
    auto ensure = [&out](const char *key, const char *value) {
        if (!out.has(key))
            out.set(key, value);
    };
    ensure("mode", "phenomenological");
    ensure("Delta", "1");
    if (out.raw("mode") == "magnet") {
        ensure("A", "1");
        ensure("s", "1");
        ensure("T_E", "0");
        ensure("r", "0");
    } else {
        if (!out.has("f_a")) {
            ensure("gamma_e0", "1");
            ensure("sign_a", "1");
        } else {
            ensure("gamma_a0", "1");
            ensure("sign_e", "1");
        }
    }
    return out;
}

std::string make_row(const SweepPlan &plan, int index) {
    const int n2 = plan.axis2 ? plan.axis2->count : 1;
    const int i1 = index / n2;
    const int i2 = index % n2;

    ParamSet pt = plan.base;
    const double v1 = axis_value(plan.axis1, i1);
    pt.set(plan.axis1.name, fmt17(v1));
    std::string row = fmt17(v1);
    if (plan.axis2) {
        const double v2 = axis_value(*plan.axis2, i2);
        pt.set(plan.axis2->name, fmt17(v2));
        row += ',';
        row += fmt17(v2);
    }

    std::string error;
    PointReport rep;
    bool resolved = false;
    try {
        rep = compute_point(pt);
        resolved = true;
    } catch (const std::exception &e) {
        error = sanitize(e.what());
    }

    auto field = [&](const std::string &name) -> std::string {
        if (!resolved)
            return "";
        const ModelPoint &m = rep.model;
        if (name == "gamma_e_local")
            return fmt17(m.rates.gamma_e_local);
        if (name == "gamma_e_nonlocal")
            return fmt17(m.rates.gamma_e_nonlocal);
        if (name == "gamma_a_local")
            return fmt17(m.rates.gamma_a_local);
        if (name == "gamma_a_nonlocal")
            return fmt17(m.rates.gamma_a_nonlocal);
        if (name == "kT0")
            return fmt17(m.kT0.kT);
        if (name == "kTr")
            return fmt17(m.kTr.kT);
        if (!rep.solved)
            return ""; // unphysical point: no steady-state quantities
        if (name == "concurrence")
            return fmt17(rep.conc.value);
        if (name == "gap")
            return fmt17(rep.gap.gap);
        if (name == "multiplicity")
            return std::to_string(rep.steady.multiplicity);
        if (name == "purity")
            return fmt17(rep.purity);
        return "";
    };

    for (const std::string &name : plan.columns) {
        row += ',';
        row += field(name);
    }
    row += ',';
    row += resolved ? (rep.model.psd.physical ? "1" : "0") : "";
    row += ',';
    row += error;
    row += '\n';
    return row;
}

} // namespace

AxisSpec parse_axis(const std::string &text) {
    const std::vector<std::string> parts = split_on(text, ':');
    if (parts.size() != 4)
        throw invalid_input("axis must be name:min:max:count (got '" + text + "')");
    AxisSpec axis;
    axis.name = parts[0];
    const auto &keys = sweepable_keys();
    if (std::find(keys.begin(), keys.end(), axis.name) == keys.end())
        throw invalid_input("'" + axis.name + "' is not a sweepable parameter");
    double count = 0.0;
    if (!parse_double(parts[1], axis.min) || !std::isfinite(axis.min))
        throw invalid_input("axis min is not a finite number: '" + parts[1] + "'");
    if (!parse_double(parts[2], axis.max) || !std::isfinite(axis.max))
        throw invalid_input("axis max is not a finite number: '" + parts[2] + "'");
    if (!parse_double(parts[3], count) || count != std::floor(count) || count < 1.0 ||
        count > 1e7)
        throw invalid_input("axis count must be an integer >= 1: '" + parts[3] + "'");
    axis.count = static_cast<int>(count);
    return axis;
}

double axis_value(const AxisSpec &axis, int i) {
    if (axis.count == 1)
        return axis.min;
    if (i == 0)
        return axis.min;
    if (i == axis.count - 1)
        return axis.max;
    return axis.min + (axis.max - axis.min) * static_cast<double>(i) /
                          static_cast<double>(axis.count - 1);
}

SweepPlan make_plan(const ParamSet &ps) {
    if (!ps.has("axis1"))
        throw invalid_input("sweep needs axis1=name:min:max:count");
    SweepPlan plan;
    plan.base = resolved_base(ps);
    plan.axis1 = parse_axis(ps.raw("axis1"));
    if (ps.has("axis2")) {
        plan.axis2 = parse_axis(ps.raw("axis2"));
        if (plan.axis2->name == plan.axis1.name)
            throw invalid_input("axis1 and axis2 sweep the same parameter '" + plan.axis1.name +
                                "'");
    }

    std::vector<std::string> wanted;
    if (ps.has("outputs")) {
        for (const std::string &name : split_on(ps.raw("outputs"), ',')) {
            if (name.empty())
                throw invalid_input("outputs has an empty column name");
            bool known = false;
            for (const char *col : kColumns)
                known = known || name == col;
            if (!known)
                throw invalid_input("unknown output column '" + name + "'");
            wanted.push_back(name);
        }
    }
    for (const char *col : kColumns) {
        // an axis already prints this value as its own column
        if (col == plan.axis1.name || (plan.axis2 && col == plan.axis2->name))
            continue;
        if (wanted.empty() ||
            std::find(wanted.begin(), wanted.end(), col) != wanted.end())
            plan.columns.push_back(col);
    }
    return plan;
}

std::string run_sweep(const ParamSet &ps, int workers) {
    const SweepPlan plan = make_plan(ps);
    const int n2 = plan.axis2 ? plan.axis2->count : 1;
    const long total_l = static_cast<long>(plan.axis1.count) * n2;
    if (total_l > 4000000)
        throw invalid_input("sweep has " + std::to_string(total_l) + " points; cap is 4000000");
    const int total = static_cast<int>(total_l);

    std::string head = "# spinpair " SPINPAIR_VERSION_STRING " sweep\n";
    {
        const std::string desc = plan.base.describe();
        size_t start = 0;
        while (start < desc.size()) {
            size_t nl = desc.find('\n', start);
            head += "# ";
            head += desc.substr(start, nl - start);
            head += '\n';
            start = nl + 1;
        }
    }
    head += plan.axis1.name;
    if (plan.axis2) {
        head += ',';
        head += plan.axis2->name;
    }
    for (const std::string &name : plan.columns) {
        head += ',';
        head += name;
    }
    head += ",physical,error\n";

    std::vector<std::string> rows(total);
    int nthreads = workers;
    if (nthreads <= 0)
        nthreads = static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, total));

    std::atomic<int> next{0};
    auto pump = [&] {
        for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1))
            rows[i] = make_row(plan, i);
    };
    if (nthreads == 1) {
        pump();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(pump);
        for (std::thread &t : pool)
            t.join();
    }

    size_t bytes = head.size();
    for (const std::string &r : rows)
        bytes += r.size();
    std::string out;
    out.reserve(bytes);
    out += head;
    for (const std::string &r : rows)
        out += r;
    return out;
}

} // namespace spinpair
