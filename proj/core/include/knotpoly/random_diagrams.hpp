#pragma once

/**
 * @file random_diagrams.hpp
 * @brief Seeded generator of small planar link diagrams for property sweeps.
 *
 * Diagrams are closures of random braids, so they are planar by
 * construction. Labels and crossing order are scrambled afterwards so that
 * nothing downstream can rely on the generator's numbering.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "knotpoly/diagram.hpp"

namespace knotpoly {

class RandomDiagrams {
public:
    explicit RandomDiagrams(std::uint64_t seed) : rng_(seed) {}

    std::vector<int> braid_word(int strands, int length);

    /// Closure of a random braid on 2..max_strands strands with
    /// 1..max_crossings generators, labels scrambled.
    Diagram any(int max_crossings, int max_strands = 4);

    /// Retries any() until the diagram has exactly `components` components.
    Diagram with_components(std::size_t components, int max_crossings, int max_strands = 4);
    Diagram knot(int max_crossings) { return with_components(1, max_crossings); }

    /// Random injective relabeling and crossing order.
    Diagram scramble(const Diagram& d);

    /// Moves every component's minimal label to a random arc of that
    /// component, which changes the traversal basepoints.
    Diagram rotate_basepoints(const Diagram& d);

    ArcId random_arc(const Diagram& d);
    std::size_t random_index(std::size_t n);

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    int uniform(int lo, int hi);

    std::mt19937_64 rng_;
};

}  // namespace knotpoly
