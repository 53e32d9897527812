#ifndef SPINPAIR_SWEEP_HPP
#define SPINPAIR_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/params.hpp"

namespace spinpair {

// Linear grid over one registry key, parsed from "name:min:max:count".
struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

AxisSpec parse_axis(const std::string &text);

// i-th grid value; endpoints are taken exactly (no accumulated rounding).
double axis_value(const AxisSpec &axis, int i);

struct SweepPlan {
    ParamSet base;
    AxisSpec axis1;
    std::optional<AxisSpec> axis2; // inner (fastest varying) axis
    std::vector<std::string> columns;
};

// Validates axis1/axis2/outputs keys of the bag and freezes the column list.
SweepPlan make_plan(const ParamSet &ps);

// Full CSV text: '#' metadata (version + resolved base parameters), header,
// then rows in row-major order (axis1 outer).  Rows where the rate set is
// unphysical keep their rate/temperature columns but leave concurrence, gap,
// multiplicity and purity empty; rows where the solver throws put the
// message in the error column instead of aborting the sweep.  Output bytes
// are independent of the worker count.
std::string run_sweep(const ParamSet &ps, int workers);

} // namespace spinpair

#endif
