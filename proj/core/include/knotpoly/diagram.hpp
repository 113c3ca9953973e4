#pragma once

/**
 * @file diagram.hpp
 * @brief Oriented link diagrams in planar-diagram (PD) form.
 *
 * A crossing lists its four arc labels counterclockwise starting at the
 * incoming understrand: (a, b, c, d), so the understrand runs a -> c. The
 * overstrand occupies b and d; which of the two is incoming is resolved
 * once (at parse time, or by construction in the moves below) and kept as
 * the crossing's orientation bit. The crossing is positive exactly when the
 * overstrand enters at d.
 *
 * Crossingless circles cannot be written as PD tuples, so a diagram also
 * carries a count of free loops. Everything derived from the crossings
 * (arc endpoints, succession, components) is computed once in the
 * constructor; a Diagram is an immutable value.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/error.hpp"

namespace knotpoly {

using ArcId = std::int32_t;

enum class CrossingSign : int { negative = -1, positive = 1 };

constexpr int value(CrossingSign s) noexcept { return static_cast<int>(s); }
constexpr CrossingSign operator-(CrossingSign s) noexcept {
    return s == CrossingSign::positive ? CrossingSign::negative : CrossingSign::positive;
}

/// Slot indices around a crossing.
enum Slot : int { slot_a = 0, slot_b = 1, slot_c = 2, slot_d = 3 };

struct Crossing {
    std::array<ArcId, 4> arcs{};
    bool over_enters_at_d = true;

    int over_in_slot() const noexcept { return over_enters_at_d ? slot_d : slot_b; }
    int over_out_slot() const noexcept { return over_enters_at_d ? slot_b : slot_d; }

    ArcId under_in() const noexcept { return arcs[slot_a]; }
    ArcId under_out() const noexcept { return arcs[slot_c]; }
    ArcId over_in() const noexcept { return arcs[over_in_slot()]; }
    ArcId over_out() const noexcept { return arcs[over_out_slot()]; }

    bool is_incoming(int slot) const noexcept { return slot == slot_a || slot == over_in_slot(); }
    bool is_over(int slot) const noexcept { return slot == slot_b || slot == slot_d; }

    CrossingSign sign() const noexcept {
        return over_enters_at_d ? CrossingSign::positive : CrossingSign::negative;
    }

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// One end of an arc: the crossing index and the slot it occupies there.
struct ArcEnd {
    std::size_t crossing = 0;
    int slot = 0;
};

/// An oriented component: its arcs in traversal order starting at the
/// minimal label. Free loops have no arcs.
struct Component {
    std::vector<ArcId> arcs;
    bool is_free_loop() const noexcept { return arcs.empty(); }
};

class Diagram {
public:
    /// Validates and builds the arc topology. Throws ValidationError when a
    /// label is not used exactly once as incoming and once as outgoing.
    Diagram(std::vector<Crossing> crossings, int free_loops);

    static Diagram unknot() { return Diagram({}, 1); }

    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const Crossing& crossing(std::size_t i) const { return crossings_.at(i); }
    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    int free_loops() const noexcept { return free_loops_; }

    /// Sorted arc labels.
    const std::vector<ArcId>& arcs() const noexcept { return arcs_; }
    bool has_arc(ArcId arc) const noexcept;
    ArcId max_arc() const noexcept { return arcs_.empty() ? 0 : arcs_.back(); }

    /// Where the arc starts (an outgoing slot) and ends (an incoming slot).
    ArcEnd tail(ArcId arc) const;
    ArcEnd head(ArcId arc) const;
    /// The arc that continues the strand after `arc` passes its head crossing.
    ArcId successor(ArcId arc) const;

    /// Components ordered by minimal arc label; free loops come last.
    const std::vector<Component>& components() const noexcept { return components_; }
    std::size_t component_count() const noexcept { return components_.size(); }
    std::size_t component_of(ArcId arc) const;

    friend bool operator==(const Diagram& x, const Diagram& y) {
        return x.free_loops_ == y.free_loops_ && x.crossings_ == y.crossings_;
    }

private:
    std::size_t index_of(ArcId arc) const;

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;

    std::vector<ArcId> arcs_;
    std::vector<ArcEnd> tails_;
    std::vector<ArcEnd> heads_;
    std::vector<std::size_t> arc_component_;
    std::vector<Component> components_;
};

/**
 * Parses `item (';' item)*` with `item := 'X(' int ',' int ',' int ',' int ')'
 * | 'O'`. Each `O` is one free loop. The overstrand direction at every
 * crossing is inferred from arc succession: each label must end up incoming
 * exactly once and outgoing exactly once. A component that never passes
 * under anything is not oriented by that rule; it gets the orientation in
 * which its labels increase, as in the usual table convention. Such a
 * component lies above the rest of the diagram, so the choice never changes
 * an invariant.
 *
 * Throws ParseError on malformed text and ValidationError when labels are
 * not used exactly twice or succession is inconsistent.
 */
Diagram parse_pd(std::string_view text);

/// Plain PD text. parse_pd(format_pd(d)) == d when every component passes
/// under somewhere.
std::string format_pd(const Diagram& d);
/// format_pd followed by the crossing signs, e.g. "X(4,2,3,1);X(2,4,1,3) [++]".
std::ostream& operator<<(std::ostream& os, const Diagram& d);

std::vector<Component> components(const Diagram& d);

CrossingSign sign(const Diagram& d, std::size_t crossing);
int writhe(const Diagram& d);

/// Half the signed count of crossings between components c1 and c2.
int linking_number(const Diagram& d, std::size_t c1, std::size_t c2);

/// Number of connected pieces of the 4-valent graph, free loops included.
std::size_t piece_count(const Diagram& d);

Diagram switch_crossing(const Diagram& d, std::size_t crossing);
Diagram smooth_crossing(const Diagram& d, std::size_t crossing);
Diagram mirror(const Diagram& d);

/// Splices arc1 of d1 to arc2 of d2. Both inputs must be knot diagrams; a
/// bare free loop acts as the identity.
Diagram connected_sum(const Diagram& d1, ArcId arc1, const Diagram& d2, ArcId arc2);

Diagram disjoint_union(const Diagram& d1, const Diagram& d2);

/// Removes Reidemeister I kinks and Reidemeister II bigons until none remain.
Diagram reduce(const Diagram& d);

/// Closure of the two-strand braid sigma_1^m, all crossings positive.
Diagram torus2_diagram(int m);

/**
 * Closure of a braid on `strands` strands. Generator +i is sigma_i (the
 * strand coming from position i passes over, positive crossing), -i its
 * inverse. Strands that never cross become free loops.
 */
Diagram braid_closure(int strands, const std::vector<int>& word);

/// Adds an unknotted circle clasping `arc` with linking number +1.
Diagram meridian_link(const Diagram& d, ArcId arc);

/// Applies an injective relabeling to every arc.
Diagram relabel(const Diagram& d, const std::function<ArcId(ArcId)>& map);

/// Relabels arcs 1, 2, ... along the components in order, each from its
/// minimal label, and sorts the crossings.
Diagram canonicalize(const Diagram& d);

/// Serialization of canonicalize(d), including each crossing's orientation.
/// Used as the memo key of the skein evaluator.
std::string canonical_code(const Diagram& d);

}  // namespace knotpoly
