#include "gssel/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gssel/errors.hpp"

namespace gssel {

Instance build_instance(std::vector<Site> sites, double threshold) {
    if (sites.empty()) {
        throw EmptyCatalog("instance has no candidate sites");
    }
    if (!(threshold > 0.0) || threshold > 1.0 || !std::isfinite(threshold)) {
        throw ThresholdOutOfRange("threshold must lie in (0, 1], got " +
                                  std::to_string(threshold));
    }
    for (const Site& s : sites) {
        if (s.cost <= 0) {
            throw NonPositiveCost("site '" + s.id + "' has cost " +
                                  std::to_string(s.cost) + "; costs must be positive");
        }
        if (!(s.outage_prob > 0.0) || s.outage_prob > 1.0 || !std::isfinite(s.outage_prob)) {
            throw ProbabilityOutOfRange("site '" + s.id + "' has outage probability " +
                                        std::to_string(s.outage_prob) +
                                        "; must lie in (0, 1]");
        }
    }

    Instance inst;
    inst.threshold = threshold;

    // Stable sort by cost so equal-cost sites keep the caller's order, and
    // remember where each internal slot came from.
    std::vector<std::size_t> perm(sites.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t l, std::size_t r) {
        return sites[l].cost < sites[r].cost;
    });

    inst.sites.reserve(sites.size());
    inst.original_order = perm;
    for (std::size_t src : perm) {
        inst.sites.push_back(std::move(sites[src]));
    }
    return inst;
}

Instance with_threshold(Instance inst, double threshold) {
    if (!(threshold > 0.0) || threshold > 1.0 || !std::isfinite(threshold)) {
        throw ThresholdOutOfRange("threshold must lie in (0, 1], got " +
                                  std::to_string(threshold));
    }
    inst.threshold = threshold;
    return inst;
}

LinearForm to_linear_form(const Instance& inst) {
    LinearForm lf;
    lf.a.reserve(inst.size());
    for (const Site& s : inst.sites) {
        lf.a.push_back(-std::log(s.outage_prob));
    }
    lf.b = -std::log(inst.threshold);
    return lf;
}

bool check_feasible(const Instance& inst) {
    const LinearForm lf = to_linear_form(inst);
    const double total = std::accumulate(lf.a.begin(), lf.a.end(), 0.0);
    return total >= lf.b - kFeasTol;
}

Selection evaluate(const Instance& inst, std::span<const std::uint8_t> chosen) {
    if (chosen.size() != inst.size()) {
        throw LengthMismatch("selection has " + std::to_string(chosen.size()) +
                             " entries for an instance with " +
                             std::to_string(inst.size()) + " sites");
    }
    Selection sel;
    sel.chosen.assign(chosen.begin(), chosen.end());
    for (std::size_t k = 0; k < inst.size(); ++k) {
        if (chosen[k]) {
            sel.cost += inst.sites[k].cost;
            sel.log_margin += -std::log(inst.sites[k].outage_prob);
        }
    }
    return sel;
}

double outage_probability(const Instance& inst, std::span<const std::uint8_t> chosen) {
    if (chosen.size() != inst.size()) {
        throw LengthMismatch("selection has " + std::to_string(chosen.size()) +
                             " entries for an instance with " +
                             std::to_string(inst.size()) + " sites");
    }
    double prod = 1.0;
    for (std::size_t k = 0; k < inst.size(); ++k) {
        if (chosen[k]) {
            prod *= inst.sites[k].outage_prob;
        }
    }
    return prod;
}

GcdReduced gcd_reduce(const Instance& inst) {
    std::int64_t zeta = 0;
    for (const Site& s : inst.sites) {
        zeta = std::gcd(zeta, s.cost);
    }
    GcdReduced out;
    out.zeta = zeta == 0 ? 1 : zeta;
    out.instance = inst;
    for (Site& s : out.instance.sites) {
        s.cost /= out.zeta;
    }
    return out;
}

}  // namespace gssel
