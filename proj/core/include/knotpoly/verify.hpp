#pragma once

/**
 * @file verify.hpp
 * @brief Exact checks of the a2/a3 computations for the K_n family.
 *
 * Every check produces VerificationReport records holding exact expected
 * and computed values rendered as text; a record passes exactly when the two
 * strings agree. Failures are reported, never thrown, so one bad table entry
 * cannot hide the rest of the run.
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "knotpoly/knot_table.hpp"
#include "knotpoly/poly.hpp"
#include "knotpoly/skein.hpp"

namespace knotpoly {

struct VerificationReport {
    std::string check_name;
    std::string inputs;
    std::string expected;
    std::string computed;
    bool passed = false;
};

VerificationReport make_report(std::string name, std::string inputs, std::string expected, std::string computed);

/// a2 of the A-family knots: 4l^2 + r^2 + 2lr + 6l + 5r - 2n + 6.
BigInt a2_A(std::int64_t n, std::int64_t l, std::int64_t r);
/// a2 of the B-family knots: 2l^2 + r^2 + 2lr + 10l + 5r - 2n + 6.
BigInt a2_B(std::int64_t n, std::int64_t l, std::int64_t r);

/// Sum over k = 1..n of a2_A(n, n-k, k-1) - a2_B(n, n-k, k-1).
BigInt a3_of(std::int64_t n);

/// n(n-1)(2n-7)/3, asserting the division by 3 is exact.
BigInt a3_closed_form(std::int64_t n);

/// Sum over j = 0..n-1 of 2j^2 - 4j.
BigInt a3_reindexed_sum(std::int64_t n);

/**
 * The six induction increments (l, r and n steps for both families), each
 * checked two ways: as differences of the closed forms, and as the signed
 * sum of the linking numbers recorded for the crossing changes of that step.
 * Also rebuilds both closed forms from their base value by accumulating
 * increments alone.
 */
std::vector<VerificationReport> check_recurrences(int max_n, int max_l, int max_r);

/// Per n in 1..max_n: closed form, reindexed sum and nonvanishing for n >= 2.
std::vector<VerificationReport> theorem_sum_check(int max_n);

/// The explicit K_1 chain: A_1^{0,0}, B_1^{0,0}, their difference and its
/// z-multiple, each from published table polynomials and from the engine.
std::vector<VerificationReport> k1_chain(const KnotTable& table, SkeinContext& ctx);

/// Closed forms at (1,0,0) against the K_1 polynomials and at (0,0,0)
/// against the table knots the base cases reduce to.
std::vector<VerificationReport> closed_form_crosscheck(const KnotTable& table, SkeinContext& ctx);

/// One report per table entry, recomputed with the engine.
std::vector<VerificationReport> table_checks(const KnotTable& table, SkeinContext& ctx);

/// conway_torus2(m) against conway(torus2_diagram(m)) for 1..max_m, and
/// conway_Kn(1) against an explicit connected-sum diagram.
std::vector<VerificationReport> oracle_checks(int max_m, SkeinContext& ctx);

struct PropertyConfig {
    std::uint64_t seed = 0x5eed'2a3bULL;
    int diagrams = 100;        // per suite
    int max_crossings = 8;
    int knot_pairs = 50;
    int pair_max_crossings = 6;
    int basepoint_diagrams = 50;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Structural facts checked on random planar diagrams: skein identity at
/// every crossing, parity and normalization, a1 = lk, multiplicativity,
/// split vanishing, basepoint invariance, reduce invariance, the a2 skein
/// formula and memo consistency.
std::vector<VerificationReport> property_suites(const PropertyConfig& cfg);

struct VerifyConfig {
    int max_n = 1000;
    int max_l = 50;
    int max_r = 50;
    int max_torus_m = 11;
    bool run_properties = true;
    PropertyConfig properties;
    std::filesystem::path table_path;   // empty: default_table_path()
    /// (entry name, replacement polynomial text) applied after loading.
    std::vector<std::pair<std::string, std::string>> corrupt_conway;
};

/// Runs every check, sorted by check_name.
std::vector<VerificationReport> run_all(const VerifyConfig& cfg);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace knotpoly
