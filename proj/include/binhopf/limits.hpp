#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "binhopf/error.hpp"

namespace binhopf {

/// Size guards for the exhaustive routines. Anything above a bound is refused
/// with ResourceLimit instead of running for an unpredictable amount of time.
struct Limits {
    std::size_t max_tree_leaves = 12;       // enumerate_trees
    std::size_t max_forest_leaves = 10;     // enumerate_forests
    std::size_t max_cut_leaves = 16;        // explicit cut enumeration
    std::size_t max_iterations = 8;         // iterated coproduct rank
    std::size_t max_exp_degree = 8;         // pre-Lie exponential
    std::size_t max_duality_leaves = 5;     // duality sweep
    std::uint64_t max_grafts = 10'000'000;  // triangle / star
};

inline void require_within(std::size_t value, std::size_t bound, const char* what)
{
    if (value > bound)
        throw ResourceLimit(std::string(what) + ": " + std::to_string(value) + " exceeds bound " +
                            std::to_string(bound));
}

} // namespace binhopf
