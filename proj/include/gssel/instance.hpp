#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gssel {

/// Absolute tolerance for log-domain constraint comparisons. Margins that
/// land exactly on the requirement (e.g. a selection whose outage product
/// equals the threshold) must not flip to infeasible through floating-point
/// rounding, so every constraint test in the library compares against
/// b - kFeasTol.
inline constexpr double kFeasTol = 1e-9;

/// One candidate ground-station site.
struct Site {
    std::string id;           // stable user-visible label
    std::int64_t cost = 0;    // installation cost, positive integer
    double outage_prob = 0;   // annual outage probability, in (0, 1]
};

/// A validated problem instance.
///
/// Sites are stored sorted by nondecreasing cost (stable, so equal costs
/// keep the user's order). original_order[i] is the position the i-th
/// internal site had in the user-supplied list; results are mapped through
/// it so callers see their own indexing.
struct Instance {
    std::vector<Site> sites;              // cost-ascending
    double threshold = 1.0;               // network outage requirement, in (0, 1]
    std::vector<std::size_t> original_order;

    std::size_t size() const { return sites.size(); }
};

/// Log-domain coefficients of the equivalent covering constraint
///   sum_k a_k z_k >= b,   a_k = -ln(p_k),  b = -ln(threshold).
/// All entries are finite and nonnegative; a_k = 0 exactly when p_k = 1.
struct LinearForm {
    std::vector<double> a;
    double b = 0;
};

/// A binary site selection with its exact integer cost and accumulated
/// log margin sum_k a_k z_k. `chosen` is in the internal (cost-ascending)
/// index space of the instance it was evaluated against.
struct Selection {
    std::vector<std::uint8_t> chosen;
    std::int64_t cost = 0;
    double log_margin = 0;
};

/// Validates the catalog and threshold, sorts sites cost-ascending and
/// records the permutation back to the caller's order.
/// Throws EmptyCatalog, NonPositiveCost, ProbabilityOutOfRange,
/// ThresholdOutOfRange.
Instance build_instance(std::vector<Site> sites, double threshold);

/// Copy of `inst` with a different outage threshold.
Instance with_threshold(Instance inst, double threshold);

LinearForm to_linear_form(const Instance& inst);

/// True iff some selection meets the threshold, which (all coefficients
/// being nonnegative) holds exactly when selecting every site does:
/// sum_k a_k >= b - kFeasTol.
bool check_feasible(const Instance& inst);

/// Cost and log margin of a selection. Throws LengthMismatch when `chosen`
/// does not have one entry per site.
Selection evaluate(const Instance& inst, std::span<const std::uint8_t> chosen);

/// Network outage probability of a selection: the product of the chosen
/// sites' outage probabilities (1 for the empty selection).
double outage_probability(const Instance& inst, std::span<const std::uint8_t> chosen);

struct GcdReduced {
    Instance instance;
    std::int64_t zeta = 1;
};

/// Divides all costs by their greatest common divisor. Probabilities and
/// threshold are untouched, so the feasible set is preserved exactly and
/// every selection's cost scales by 1/zeta; optimal selections coincide.
GcdReduced gcd_reduce(const Instance& inst);

}  // namespace gssel
