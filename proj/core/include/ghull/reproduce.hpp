#ifndef GHULL_REPRODUCE_HPP
#define GHULL_REPRODUCE_HPP

/**
 * @file reproduce.hpp
 * @brief Reproduction harness for the published parameter tables.
 *
 * Printed rows are embedded as fixtures and never treated as recomputable
 * truth: the family formulas are the contract, the fixture is evidence. Rows
 * whose printed values disagree with their own inputs are reported as
 * discrepancies, never silently corrected. Tables 1-3 and 5 are pure
 * parameter arithmetic; Table 4 drives the construction pipeline at desk
 * scale (strict closure), including a substitute run on valid constituents
 * where the printed defining sets fail q-closure.
 *
 * Reports are deterministic byte-for-byte for a fixed (seed, budget, version).
 */

#include "ghull/serialize.hpp"

namespace ghull {

struct ReproduceOptions {
    std::uint64_t seed = 0;
    std::uint64_t distance_budget = std::uint64_t(1) << 22;
    bool strict_closure = true;
};

/// Full report for one of the five tables (table_id in 1..5).
json reproduce_table(int table_id, const ReproduceOptions& opt);

}  // namespace ghull

#endif
