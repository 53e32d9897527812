#include "core/params.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "core/format.hpp"

namespace spinpair {

namespace {

enum class KeyKind { number, mode, axis, list };

struct KeyInfo {
    const char *name;
    KeyKind kind;
};

// Full registry.  Values are kept as strings; numeric syntax is checked on
// insertion so a typo fails at set() time, range checks wait until
// resolve_point() where the mode is known.
const KeyInfo kRegistry[] = {
    {"mode", KeyKind::mode},
    {"Delta", KeyKind::number},
    {"axis1", KeyKind::axis},
    {"axis2", KeyKind::axis},
    {"outputs", KeyKind::list},
    // phenomenological mode
    {"gamma_e0", KeyKind::number},
    {"f_e", KeyKind::number},
    {"sign_a", KeyKind::number},
    {"gamma_a0", KeyKind::number},
    {"f_a", KeyKind::number},
    {"sign_e", KeyKind::number},
    {"kT0", KeyKind::number},
    {"kTr", KeyKind::number},
    // magnet mode
    {"A", KeyKind::number},
    {"s", KeyKind::number},
    {"b", KeyKind::number},
    {"T_E", KeyKind::number},
    {"mu", KeyKind::number},
    {"r", KeyKind::number},
    {"lambda_plus", KeyKind::number},
    {"lambda_minus", KeyKind::number},
    {"lambda_ratio", KeyKind::number},
    {"exchange_J", KeyKind::number},
    {"exchange_theta", KeyKind::number},
};

const KeyInfo *find_key(const std::string &name) {
    for (const KeyInfo &k : kRegistry)
        if (name == k.name)
            return &k;
    return nullptr;
}

std::string known_keys() {
    std::string out;
    for (const KeyInfo &k : kRegistry) {
        if (!out.empty())
            out += ", ";
        out += k.name;
    }
    return out;
}

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

void ParamSet::set(const std::string &key, const std::string &value) {
    const KeyInfo *info = find_key(key);
    if (!info)
        throw invalid_input("unknown key '" + key + "'; known keys: " + known_keys());
    if (value.empty())
        throw invalid_input("empty value for key '" + key + "'");
    if (info->kind == KeyKind::number) {
        double v = 0.0;
        if (!parse_double(value, v))
            throw invalid_input("value for '" + key + "' is not a number: '" + value + "'");
    } else if (info->kind == KeyKind::mode) {
        if (value != "phenomenological" && value != "magnet")
            throw invalid_input("mode must be 'phenomenological' or 'magnet' (got '" + value +
                                "')");
    }
    kv_[key] = value;
}

bool ParamSet::has(const std::string &key) const { return kv_.count(key) != 0; }

const std::string &ParamSet::raw(const std::string &key) const {
    auto it = kv_.find(key);
    if (it == kv_.end())
        throw invalid_input("missing key '" + key + "'");
    return it->second;
}

std::string ParamSet::describe() const {
    std::string out;
    for (const auto &[k, v] : kv_) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

ParamSet ParamSet::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_input("cannot open config file: " + path);
    ParamSet ps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw invalid_input(path + ":" + std::to_string(lineno) +
                                ": expected key=value, got '" + line + "'");
        try {
            ps.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const invalid_input &e) {
            throw invalid_input(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return ps;
}

namespace {

double number_of(const ParamSet &ps, const std::string &key) {
    double v = 0.0;
    parse_double(ps.raw(key), v); // syntax vetted at set() time
    return v;
}

double number_or(const ParamSet &ps, const std::string &key, double def) {
    return ps.has(key) ? number_of(ps, key) : def;
}

double require_number(const ParamSet &ps, const std::string &key, const char *why) {
    if (!ps.has(key))
        throw invalid_input("missing required key '" + key + "' (" + why + ")");
    return number_of(ps, key);
}

int sign_of(const ParamSet &ps, const std::string &key) {
    double v = number_or(ps, key, 1.0);
    if (v != 1.0 && v != -1.0)
        throw invalid_input(key + " must be +1 or -1 (got " + fmt17(v) + ")");
    return v > 0 ? 1 : -1;
}

void check_mode_keys(const ParamSet &ps, const std::string &mode) {
    static const std::set<std::string> common = {"mode", "Delta", "axis1", "axis2", "outputs"};
    static const std::set<std::string> phenom = {"gamma_e0", "f_e",    "sign_a", "gamma_a0",
                                                 "f_a",      "sign_e", "kT0",    "kTr"};
    static const std::set<std::string> magnet = {"A",           "s",
                                                 "b",           "T_E",
                                                 "mu",          "r",
                                                 "lambda_plus", "lambda_minus",
                                                 "lambda_ratio", "exchange_J",
                                                 "exchange_theta"};
    const std::set<std::string> &mine = (mode == "magnet") ? magnet : phenom;
    const std::set<std::string> &other = (mode == "magnet") ? phenom : magnet;
    for (const auto &[k, v] : ps.entries()) {
        if (common.count(k) || mine.count(k))
            continue;
        if (other.count(k))
            throw invalid_input("key '" + k + "' does not apply in mode=" + mode);
        throw invalid_input("unknown key '" + k + "'");
    }
}

ModelPoint resolve_phenomenological(const ParamSet &ps) {
    ModelPoint mp;
    mp.mode = "phenomenological";
    mp.delta = number_or(ps, "Delta", 1.0);
    if (!(mp.delta > 0.0))
        throw invalid_input("Delta must be > 0 (got " + fmt17(mp.delta) + ")");

    const bool has_fe = ps.has("f_e");
    const bool has_fa = ps.has("f_a");
    if (has_fe == has_fa)
        throw invalid_input("set exactly one of f_e (emission anchored) or f_a "
                            "(absorption anchored)");

    const double kT0 = require_number(ps, "kT0", "local effective temperature in units of Delta");
    const double kTr =
        require_number(ps, "kTr", "nonlocal effective temperature in units of Delta");

    if (has_fe) {
        if (ps.has("gamma_a0") || ps.has("sign_e"))
            throw invalid_input("gamma_a0/sign_e belong to the absorption-anchored form; "
                                "with f_e use gamma_e0/sign_a");
        mp.rates = rates_from_temperatures(number_or(ps, "gamma_e0", 1.0), number_of(ps, "f_e"),
                                           kT0, kTr, sign_of(ps, "sign_a"));
    } else {
        if (ps.has("gamma_e0") || ps.has("sign_a"))
            throw invalid_input("gamma_e0/sign_a belong to the emission-anchored form; "
                                "with f_a use gamma_a0/sign_e");
        mp.rates =
            rates_from_temperatures_absorption(number_or(ps, "gamma_a0", 1.0),
                                               number_of(ps, "f_a"), kT0, kTr, sign_of(ps, "sign_e"));
    }
    return mp;
}

ModelPoint resolve_magnet(const ParamSet &ps) {
    ModelPoint mp;
    mp.mode = "magnet";
    mp.delta = number_or(ps, "Delta", 1.0);
    if (!(mp.delta > 0.0))
        throw invalid_input("Delta must be > 0 (got " + fmt17(mp.delta) + ")");

    MagnetParams m;
    m.A = number_or(ps, "A", 1.0);
    m.s = number_or(ps, "s", 1.0);
    // b, T_E, mu are given in units of Delta; r in units of the natural
    // length sqrt(A*s/Delta).
    const double b = require_number(ps, "b", "band shift in units of Delta");
    const double T_E = number_or(ps, "T_E", 0.0);
    m.b = b * mp.delta;
    m.T_E = T_E * mp.delta;
    if (T_E > 0.0) {
        const double mu = require_number(ps, "mu", "chemical potential, required when T_E > 0");
        m.mu = mu * mp.delta;
    } else {
        m.mu = -m.b - 1.0; // unused at T_E = 0; any value below the band works
    }
    m.validate();

    const bool has_pair = ps.has("lambda_plus") || ps.has("lambda_minus");
    const bool has_ratio = ps.has("lambda_ratio");
    const bool has_exch = ps.has("exchange_J") || ps.has("exchange_theta");
    if ((has_pair ? 1 : 0) + (has_ratio ? 1 : 0) + (has_exch ? 1 : 0) != 1)
        throw invalid_input("give couplings exactly one way: lambda_plus+lambda_minus, "
                            "lambda_ratio, or exchange_J+exchange_theta");

    CouplingParams c;
    if (has_pair) {
        if (!ps.has("lambda_plus") || !ps.has("lambda_minus"))
            throw invalid_input("lambda_plus and lambda_minus must be given together");
        c.lambda_plus = number_of(ps, "lambda_plus");
        c.lambda_minus = number_of(ps, "lambda_minus");
    } else if (has_ratio) {
        const double ratio = number_of(ps, "lambda_ratio");
        if (!(ratio >= 0.0))
            throw invalid_input("lambda_ratio must be >= 0 (got " + fmt17(ratio) + ")");
        c.lambda_plus = ratio;
        c.lambda_minus = 1.0;
    } else {
        if (!ps.has("exchange_J") || !ps.has("exchange_theta"))
            throw invalid_input("exchange_J and exchange_theta must be given together");
        const double J = number_of(ps, "exchange_J");
        if (J == 0.0)
            throw invalid_input("exchange_J must be nonzero");
        c = couplings_magnitudes(couplings_from_angle(J, number_of(ps, "exchange_theta")));
    }
    c.validate();

    SystemParams sys;
    sys.delta = mp.delta;
    const double ell = std::sqrt(m.A * m.s / mp.delta);
    sys.r = number_or(ps, "r", 0.0) * ell;
    sys.validate();

    const RateSet raw = magnet_rates(m, c, sys);
    // Report rates in units of 4 pi s * g2D * lambda_ref^2 = lambda_ref^2 / A
    // so the local emission rate is O(1) regardless of coupling strength.
    const double lambda_ref = std::max(c.lambda_plus, c.lambda_minus);
    const double scale = m.A / (lambda_ref * lambda_ref);
    mp.rates.gamma_e_local = raw.gamma_e_local * scale;
    mp.rates.gamma_e_nonlocal = raw.gamma_e_nonlocal * scale;
    mp.rates.gamma_a_local = raw.gamma_a_local * scale;
    mp.rates.gamma_a_nonlocal = raw.gamma_a_nonlocal * scale;
    return mp;
}

} // namespace

ModelPoint resolve_point(const ParamSet &ps) {
    const std::string mode = ps.has("mode") ? ps.raw("mode") : "phenomenological";
    check_mode_keys(ps, mode);
    ModelPoint mp = (mode == "magnet") ? resolve_magnet(ps) : resolve_phenomenological(ps);
    mp.kT0 = effective_temperature(mp.rates.gamma_e_local, mp.rates.gamma_a_local);
    mp.kTr = effective_temperature(mp.rates.gamma_e_nonlocal, mp.rates.gamma_a_nonlocal);
    mp.psd = validate_psd(mp.rates);
    return mp;
}

PointReport compute_point(const ParamSet &ps) {
    PointReport out;
    out.model = resolve_point(ps);
    if (!out.model.psd.physical)
        return out;

    const ComplexMatrix l = build_liouvillian(out.model.rates, out.model.delta);
    out.steady = steady_state(l);
    out.gap = spectral_gap(l);
    out.conc = concurrence(out.steady.rho);
    out.purity = (out.steady.rho * out.steady.rho).trace().real();

    out.cross_check = std::numeric_limits<double>::quiet_NaN();
    if (!out.steady.degenerate) {
        try {
            const SteadyStateResult blk = steady_state_block(l);
            double worst = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    worst = std::max(worst, std::abs(out.steady.rho(i, j) - blk.rho(i, j)));
            out.cross_check = worst;
        } catch (const std::exception &) {
            // reduced solver declined (borderline degeneracy); keep NaN
        }
    }
    out.solved = true;
    return out;
}

const std::vector<std::string> &sweepable_keys() {
    static const std::vector<std::string> keys = {
        "Delta",        "gamma_e0",     "f_e",          "gamma_a0",   "f_a",
        "kT0",          "kTr",          "A",            "s",          "b",
        "T_E",          "mu",           "r",            "lambda_plus", "lambda_minus",
        "lambda_ratio", "exchange_J",   "exchange_theta"};
    return keys;
}

} // namespace spinpair
