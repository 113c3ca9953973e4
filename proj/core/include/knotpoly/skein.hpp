#pragma once

/**
 * @file skein.hpp
 * @brief Conway polynomials by descending-diagram skein recursion.
 *
 * Components are ordered by minimal arc label and each is traversed from its
 * minimal arc. A diagram in which every crossing is first met on its
 * overstrand is descending and presents an unlink. Otherwise the first
 * crossing met on its understrand is switched and smoothed, using
 *
 *     conway(L+) - conway(L-) = z * conway(L0).
 *
 * Each node is simplified with reduce() and memoized on canonical_code().
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "knotpoly/diagram.hpp"
#include "knotpoly/poly.hpp"

namespace knotpoly {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

struct SkeinStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t cache_hits = 0;
};

/// Memo table, node budget and counters for one line of computation.
/// Not synchronized: confine a context to one thread.
class SkeinContext {
public:
    explicit SkeinContext(std::uint64_t node_budget = kDefaultNodeBudget) : node_budget_(node_budget) {}

    std::uint64_t node_budget() const noexcept { return node_budget_; }
    void set_node_budget(std::uint64_t budget) noexcept { node_budget_ = budget; }

    /// When false, nodes are expanded without reduce() or the split-diagram
    /// shortcut. Slower; used to cross-check the simplifier.
    bool simplify() const noexcept { return simplify_; }
    void set_simplify(bool on) noexcept { simplify_ = on; }

    const SkeinStats& stats() const noexcept { return stats_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }
    const IntPoly* lookup(const std::string& code) const;
    void clear();

private:
    friend class SkeinEvaluator;

    std::uint64_t node_budget_;
    bool simplify_ = true;
    SkeinStats stats_;
    std::unordered_map<std::string, IntPoly> memo_;
};

/// Throws BudgetExceeded when the context's node budget runs out.
IntPoly conway(const Diagram& d, SkeinContext& ctx);
IntPoly conway(const Diagram& d);

/// Closed form for T(2, m): P(0) = 0, P(1) = 1, P(m) = z P(m-1) + P(m-2).
IntPoly conway_torus2(int m);

/// T(2, 2n+3) # T(-2, 2n+1); mirroring leaves a knot's polynomial unchanged.
IntPoly conway_Kn(int n);

/// z^2 coefficient of a knot's Conway polynomial.
BigInt a2(const Diagram& d, SkeinContext& ctx);
BigInt a2(const Diagram& d);

/// Evaluates both sides of the skein relation at one crossing.
bool check_skein_identity(const Diagram& d, std::size_t crossing, SkeinContext& ctx);

/// a2(K+) - a2(K-) == lk(L0) at a positive crossing of a knot diagram.
bool check_a2_skein(const Diagram& d_plus, std::size_t crossing, SkeinContext& ctx);

/// Crossing count and number of crossings first met on the understrand:
/// the recursion measure, which strictly decreases from a node to its children.
struct SkeinMeasure {
    std::size_t crossings = 0;
    std::size_t first_under = 0;
    friend auto operator<=>(const SkeinMeasure&, const SkeinMeasure&) = default;
};

SkeinMeasure skein_measure(const Diagram& d);

/// True when every crossing is first reached on its overstrand.
bool is_descending(const Diagram& d);

}  // namespace knotpoly
