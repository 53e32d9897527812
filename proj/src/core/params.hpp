#ifndef SPINPAIR_PARAMS_HPP
#define SPINPAIR_PARAMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/concurrence.hpp"
#include "core/lindblad.hpp"
#include "core/magnet.hpp"
#include "core/steady.hpp"

namespace spinpair {

// Flat key=value parameter bag.  Values stay strings until resolve_point()
// interprets them, so a sweep can overwrite one key per grid point without
// caring about types.  Keys are checked against the registry on insertion.
class ParamSet {
  public:
    // Throws invalid_input on unknown key or malformed value syntax.
    void set(const std::string &key, const std::string &value);

    bool has(const std::string &key) const;
    const std::string &raw(const std::string &key) const; // throws if missing

    // key=value lines, keys sorted, one per line (used for CSV metadata).
    std::string describe() const;

    // Parses a config file: one key=value per line, '#' comments, blank
    // lines ignored, whitespace around tokens tolerated.
    static ParamSet from_file(const std::string &path);

    const std::map<std::string, std::string> &entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

// Everything needed to build the Liouvillian at one parameter point, plus
// the diagnostic quantities reported alongside it.
struct ModelPoint {
    std::string mode;      // "phenomenological" or "magnet"
    RateSet rates;         // magnet mode: normalized to lambda_ref^2 / A units
    double delta = 1.0;    // qubit splitting entering the coherent part
    EffectiveTemperature kT0;  // recomputed from the local rate ratio
    EffectiveTemperature kTr;  // recomputed from the nonlocal rate ratio
    PsdReport psd;
};

// Interprets the bag as physics parameters.  Throws invalid_input with an
// actionable message on missing/conflicting/out-of-range keys.
ModelPoint resolve_point(const ParamSet &ps);

// Full single-point computation: steady state, concurrence, gap, purity.
// When the rate set is unphysical (psd.physical == false) nothing past the
// ModelPoint is computed and `solved` stays false.
struct PointReport {
    ModelPoint model;
    bool solved = false;
    SteadyStateResult steady;
    ConcurrenceResult conc;
    GapResult gap;
    double purity = 0.0;
    // Largest entrywise gap between the kernel solver and the closed
    // population/coherence-sector solver; NaN when the point is degenerate
    // and the reduced system is singular.
    double cross_check = 0.0;
};

PointReport compute_point(const ParamSet &ps);

// Names accepted as sweep axes (numeric registry keys).
const std::vector<std::string> &sweepable_keys();

} // namespace spinpair

#endif
