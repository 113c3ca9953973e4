#include "knotpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "knotpoly/random_diagrams.hpp"

namespace knotpoly {

namespace {

// Expected values along the K_1 chain.
constexpr const char* kA1 = "1+4z^2+8z^4+6z^6+z^8";
constexpr const char* kB1 = "1+4z^2+3z^4+z^6";
constexpr const char* kDifference = "5z^4+5z^6+z^8";
constexpr const char* kZDifference = "5z^5+5z^7+z^9";

// Reference entries the chain reads from the table.
constexpr const char* k8_19 = "8_19";
constexpr const char* k3_1 = "3_1";
constexpr const char* k5_2 = "5_2";
constexpr const char* k10_148 = "10_148";
constexpr const char* k6_2_3 = "6^2_3";

std::string str(const BigInt& v) { return v.str(); }

std::string padded(std::int64_t v, int width) {
    std::string s = std::to_string(v);
    if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
    return s;
}

// Runs a check whose computed side may throw; the exception text becomes the
// computed value so the report fails instead of aborting the run.
VerificationReport guarded(std::string name, std::string inputs, std::string expected,
                           const std::function<std::string()>& compute) {
    std::string computed;
    try {
        computed = compute();
    } catch (const std::exception& e) {
        computed = std::string("error: ") + e.what();
    }
    return make_report(std::move(name), std::move(inputs), std::move(expected), std::move(computed));
}

/// Counts how many index tuples satisfy a predicate; the first failure is
/// described in the computed field.
class Tally {
public:
    void record(bool ok, const std::function<std::string()>& describe) {
        ++total_;
        if (ok) {
            ++matched_;
        } else if (first_failure_.empty()) {
            first_failure_ = describe();
        }
    }

    VerificationReport report(std::string name, std::string inputs) const {
        std::string expected = std::to_string(total_) + " of " + std::to_string(total_);
        std::string computed = std::to_string(matched_) + " of " + std::to_string(total_);
        if (!first_failure_.empty()) computed += "; first failure: " + first_failure_;
        return make_report(std::move(name), std::move(inputs), std::move(expected), std::move(computed));
    }

private:
    std::size_t total_ = 0;
    std::size_t matched_ = 0;
    std::string first_failure_;
};

void check_nonnegative(std::int64_t n, std::int64_t l, std::int64_t r) {
    if (n < 0 || l < 0 || r < 0) throw ValidationError("family indices must be nonnegative");
}

// A linking number recorded for one crossing change, linear in (l, r), and
// the sign with which it enters the a2 skein bookkeeping.
struct LkTerm {
    int sign;
    std::int64_t constant;
    std::int64_t per_l;
    std::int64_t per_r;
};

BigInt ledger_sum(const std::vector<LkTerm>& terms, std::int64_t l, std::int64_t r) {
    BigInt total = 0;
    for (const LkTerm& t : terms) total += t.sign * (BigInt(t.constant) + BigInt(t.per_l) * l + BigInt(t.per_r) * r);
    return total;
}

using Family = BigInt (*)(std::int64_t, std::int64_t, std::int64_t);

struct FamilySteps {
    const char* name;
    Family a2;
    std::int64_t l_slope;       // l step increment = l_slope * l + l_offset
    std::int64_t l_offset;
    std::vector<LkTerm> l_ledger;
    std::vector<LkTerm> r_ledger;
    std::vector<LkTerm> n_ledger;
};

const std::vector<FamilySteps>& families() {
    static const std::vector<FamilySteps> fs = {
        {"A", &a2_A, 8, 2,
         {{-1, -2, 0, 0}, {+1, 4, 0, 0}, {-1, 5, -3, 0}, {+1, -1, 3, 0}, {-1, 1, -1, 0}, {+1, 3, 1, 0}},
         {{-1, -1, -1, 0}, {+1, 2, 1, 2}, {+1, 1, 0, 0}},
         {{-1, 2, 0, 0}}},
        {"B", &a2_B, 4, 8,
         {{-1, -2, 0, 0}, {+1, 4, 0, 0}, {-1, -1, -1, 0}, {+1, 1, 1, 0}, {-1, 1, 1, 0}, {+1, 1, 3, 0}},
         {{-1, 1, 1, 0}, {+1, 4, 3, 2}, {+1, 1, 0, 0}},
         {{-1, 2, 0, 0}}},
    };
    return fs;
}

std::string range(const char* var, std::int64_t lo, std::int64_t hi) {
    return std::to_string(lo) + "<=" + var + "<=" + std::to_string(hi);
}

}  // namespace

VerificationReport make_report(std::string name, std::string inputs, std::string expected, std::string computed) {
    bool passed = expected == computed;
    return {std::move(name), std::move(inputs), std::move(expected), std::move(computed), passed};
}

BigInt a2_A(std::int64_t n, std::int64_t l, std::int64_t r) {
    check_nonnegative(n, l, r);
    BigInt L = l, R = r, N = n;
    return 4 * L * L + R * R + 2 * L * R + 6 * L + 5 * R - 2 * N + 6;
}

BigInt a2_B(std::int64_t n, std::int64_t l, std::int64_t r) {
    check_nonnegative(n, l, r);
    BigInt L = l, R = r, N = n;
    return 2 * L * L + R * R + 2 * L * R + 10 * L + 5 * R - 2 * N + 6;
}

BigInt a3_of(std::int64_t n) {
    if (n < 0) throw ValidationError("a3_of needs n >= 0");
    BigInt total = 0;
    for (std::int64_t k = 1; k <= n; ++k) total += a2_A(n, n - k, k - 1) - a2_B(n, n - k, k - 1);
    return total;
}

BigInt a3_closed_form(std::int64_t n) {
    BigInt N = n;
    BigInt numerator = N * (N - 1) * (2 * N - 7);
    if (numerator % 3 != 0) throw std::logic_error("n(n-1)(2n-7) not divisible by 3 at n=" + std::to_string(n));
    return numerator / 3;
}

BigInt a3_reindexed_sum(std::int64_t n) {
    BigInt total = 0;
    for (std::int64_t j = 0; j < n; ++j) {
        BigInt J = j;
        total += 2 * J * J - 4 * J;
    }
    return total;
}

std::vector<VerificationReport> check_recurrences(int max_n, int max_l, int max_r) {
    if (max_n < 1 || max_l < 1 || max_r < 1) throw ValidationError("recurrence bounds must be >= 1");
    std::vector<VerificationReport> out;
    for (const FamilySteps& f : families()) {
        const std::string fam = std::string("recurrence.") + f.name;
        const std::string l_inc = std::to_string(f.l_slope) + "l+" + std::to_string(f.l_offset);

        Tally l_step, l_ledger;
        for (std::int64_t l = 1; l <= max_l; ++l) {
            BigInt want = BigInt(f.l_slope) * l + f.l_offset;
            BigInt diff = f.a2(0, l, 0) - f.a2(0, l - 1, 0);
            BigInt lk = ledger_sum(f.l_ledger, l, 0);
            l_step.record(diff == want, [&] { return "l=" + std::to_string(l) + ": " + str(diff); });
            l_ledger.record(lk == want, [&] { return "l=" + std::to_string(l) + ": " + str(lk); });
        }
        out.push_back(l_step.report(fam + ".l_step", "n=0, r=0, " + range("l", 1, max_l) + ", increment " + l_inc));
        out.push_back(l_ledger.report(fam + ".l_step.lk_ledger", "n=0, r=0, " + range("l", 1, max_l) + ", sum = " + l_inc));

        Tally r_step, r_ledger;
        for (std::int64_t l = 0; l <= max_l; ++l) {
            for (std::int64_t r = 1; r <= max_r; ++r) {
                BigInt want = BigInt(2) * l + 2 * r + 4;
                BigInt diff = f.a2(0, l, r) - f.a2(0, l, r - 1);
                BigInt lk = ledger_sum(f.r_ledger, l, r);
                auto at = [&] { return "l=" + std::to_string(l) + ",r=" + std::to_string(r) + ": "; };
                r_step.record(diff == want, [&] { return at() + str(diff); });
                r_ledger.record(lk == want, [&] { return at() + str(lk); });
            }
        }
        std::string r_in = "n=0, " + range("l", 0, max_l) + ", " + range("r", 1, max_r);
        out.push_back(r_step.report(fam + ".r_step", r_in + ", increment 2l+2r+4"));
        out.push_back(r_ledger.report(fam + ".r_step.lk_ledger", r_in + ", sum = 2l+2r+4"));

        Tally n_step, n_ledger;
        for (std::int64_t n = 1; n <= max_n; ++n) {
            n_ledger.record(ledger_sum(f.n_ledger, 0, 0) == -2, [&] { return "n=" + std::to_string(n); });
            for (std::int64_t l = 0; l <= max_l; ++l) {
                for (std::int64_t r = 0; r <= max_r; ++r) {
                    BigInt diff = f.a2(n, l, r) - f.a2(n - 1, l, r);
                    n_step.record(diff == -2, [&] {
                        return "n=" + std::to_string(n) + ",l=" + std::to_string(l) + ",r=" + std::to_string(r) +
                               ": " + str(diff);
                    });
                }
            }
        }
        std::string n_in = range("n", 1, max_n) + ", " + range("l", 0, max_l) + ", " + range("r", 0, max_r);
        out.push_back(n_step.report(fam + ".n_step", n_in + ", increment -2"));
        out.push_back(n_ledger.report(fam + ".n_step.lk_ledger", range("n", 1, max_n) + ", sum = -2"));

        // Rebuild the closed form from its base value using the increments only.
        Tally rebuilt;
        for (std::int64_t l = 0; l <= max_l; ++l) {
            BigInt at_l = 6;
            for (std::int64_t k = 1; k <= l; ++k) at_l += BigInt(f.l_slope) * k + f.l_offset;
            BigInt at_lr = at_l;
            for (std::int64_t r = 0; r <= max_r; ++r) {
                if (r > 0) at_lr += BigInt(2) * l + 2 * r + 4;
                for (std::int64_t n = 0; n <= max_n; ++n) {
                    BigInt value = at_lr - 2 * BigInt(n);
                    BigInt closed = f.a2(n, l, r);
                    rebuilt.record(value == closed, [&] {
                        return "n=" + std::to_string(n) + ",l=" + std::to_string(l) + ",r=" + std::to_string(r) +
                               ": " + str(value) + " vs " + str(closed);
                    });
                }
            }
        }
        out.push_back(rebuilt.report(fam + ".closed_form_by_induction",
                                     "base 6, " + range("n", 0, max_n) + ", " + range("l", 0, max_l) + ", " +
                                         range("r", 0, max_r)));
    }
    return out;
}

std::vector<VerificationReport> theorem_sum_check(int max_n) {
    if (max_n < 1) throw ValidationError("theorem_sum_check needs max_n >= 1");
    int width = std::max(4, static_cast<int>(std::to_string(max_n).size()));
    std::vector<VerificationReport> out;
    out.reserve(3 * static_cast<std::size_t>(max_n));
    for (std::int64_t n = 1; n <= max_n; ++n) {
        std::string tag = "[n=" + padded(n, width) + "]";
        std::string inputs = "n=" + std::to_string(n);
        BigInt a3 = a3_of(n);

        std::string closed;
        try {
            closed = str(a3_closed_form(n));
        } catch (const std::exception& e) {
            closed = std::string("error: ") + e.what();
        }
        out.push_back(make_report("theorem.closed_form" + tag, inputs + ", n(n-1)(2n-7)/3", closed, str(a3)));
        out.push_back(make_report("theorem.reindexed_sum" + tag, inputs + ", sum_{j<n} (2j^2-4j)", str(a3),
                                  str(a3_reindexed_sum(n))));
        out.push_back(make_report("theorem.nonzero" + tag, inputs, n >= 2 ? "nonzero" : "zero",
                                  a3 == 0 ? "zero" : "nonzero"));
    }
    return out;
}

std::vector<VerificationReport> k1_chain(const KnotTable& table, SkeinContext& ctx) {
    std::vector<VerificationReport> out;
    const IntPoly z = IntPoly::monomial(1, 1);

    auto a1_table = [&] {
        return table.published(k8_19) * table.published(k3_1) - z * table.published(k6_2_3);
    };
    auto a0_engine = [&] {
        Diagram a = table.diagram(k8_19);
        Diagram b = mirror(table.diagram(k3_1));
        return conway(connected_sum(a, a.arcs().front(), b, b.arcs().front()), ctx);
    };
    auto a1_engine = [&] { return a0_engine() - z * conway(table.diagram(k6_2_3), ctx); };
    auto b1_table = [&] { return table.published(k10_148); };
    auto b1_engine = [&] { return conway(mirror(table.diagram(k10_148)), ctx); };

    out.push_back(guarded("k1.step1.A1.table", "conway(8_19)*conway(mirror 3_1) - z*conway(6^2_3), published values",
                          kA1, [&] { return format_poly(a1_table()); }));
    out.push_back(guarded("k1.step1.A1.engine",
                          "conway(8_19 # mirror 3_1) - z*conway(6^2_3), skein engine on table PD codes", kA1,
                          [&] { return format_poly(a1_engine()); }));
    out.push_back(guarded("k1.step1.A0.product", "engine conway(8_19 # mirror 3_1) vs published product",
                          format_poly(IntPoly{1, 0, 5, 0, 5, 0, 1} * IntPoly{1, 0, 1}),
                          [&] { return format_poly(a0_engine()); }));
    out.push_back(guarded("k1.step2.B1.table", "published conway(10_148)", kB1,
                          [&] { return format_poly(b1_table()); }));
    out.push_back(guarded("k1.step2.B1.engine", "engine conway(mirror 10_148)", kB1,
                          [&] { return format_poly(b1_engine()); }));
    out.push_back(guarded("k1.step3.difference.table", "A1 - B1 from published values", kDifference,
                          [&] { return format_poly(a1_table() - b1_table()); }));
    out.push_back(guarded("k1.step3.difference.engine", "A1 - B1 from the engine", kDifference,
                          [&] { return format_poly(a1_engine() - b1_engine()); }));
    out.push_back(guarded("k1.step3.nonzero", "A1 - B1 != 0", "nonzero",
                          [&] { return (a1_engine() - b1_engine()).is_zero() ? "zero" : "nonzero"; }));
    out.push_back(guarded("k1.step4.link_difference", "z*(A1 - B1)", kZDifference,
                          [&] { return format_poly((a1_engine() - b1_engine()).shift(1)); }));
    return out;
}

std::vector<VerificationReport> closed_form_crosscheck(const KnotTable& table, SkeinContext& ctx) {
    std::vector<VerificationReport> out;
    const IntPoly z = IntPoly::monomial(1, 1);
    out.push_back(guarded("crosscheck.A(1,0,0)", "a2_A(1,0,0) vs z^2 coefficient of engine A1", str(a2_A(1, 0, 0)),
                          [&] {
                              Diagram a = table.diagram(k8_19);
                              Diagram b = mirror(table.diagram(k3_1));
                              IntPoly a0 = conway(connected_sum(a, a.arcs().front(), b, b.arcs().front()), ctx);
                              return str((a0 - z * conway(table.diagram(k6_2_3), ctx)).coeff(2));
                          }));
    out.push_back(guarded("crosscheck.B(1,0,0)", "a2_B(1,0,0) vs z^2 coefficient of engine conway(mirror 10_148)",
                          str(a2_B(1, 0, 0)),
                          [&] { return str(conway(mirror(table.diagram(k10_148)), ctx).coeff(2)); }));
    out.push_back(guarded("crosscheck.A(0,0,0)", "a2_A(0,0,0) vs a2(8_19) + a2(mirror 3_1)", str(a2_A(0, 0, 0)),
                          [&] {
                              return str(a2(table.diagram(k8_19), ctx) + a2(mirror(table.diagram(k3_1)), ctx));
                          }));
    out.push_back(guarded("crosscheck.A(0,0,0).connected_sum", "a2_A(0,0,0) vs a2(8_19 # mirror 3_1)",
                          str(a2_A(0, 0, 0)), [&] {
                              Diagram a = table.diagram(k8_19);
                              Diagram b = mirror(table.diagram(k3_1));
                              return str(a2(connected_sum(a, a.arcs().back(), b, b.arcs().back()), ctx));
                          }));
    out.push_back(guarded("crosscheck.B(0,0,0)", "a2_B(0,0,0) vs a2(mirror 5_2) + 4", str(a2_B(0, 0, 0)),
                          [&] { return str(a2(mirror(table.diagram(k5_2)), ctx) + 4); }));
    return out;
}

std::vector<VerificationReport> table_checks(const KnotTable& table, SkeinContext& ctx) {
    std::vector<VerificationReport> out;
    for (const EntryCheck& c : validate(table, ctx)) {
        const KnotTableEntry& e = table.at(c.name);
        out.push_back(make_report("table." + c.name, e.pd, c.expected, c.computed));
    }
    return out;
}

std::vector<VerificationReport> oracle_checks(int max_m, SkeinContext& ctx) {
    std::vector<VerificationReport> out;
    for (int m = 1; m <= max_m; ++m) {
        out.push_back(guarded("oracle.torus2[m=" + padded(m, 2) + "]", "closed form vs conway(torus2_diagram(m))",
                              format_poly(conway_torus2(m)),
                              [&] { return format_poly(conway(torus2_diagram(m), ctx)); }));
    }
    for (int n = 1; n <= 2; ++n) {
        out.push_back(guarded("oracle.Kn[n=" + std::to_string(n) + "]",
                              "conway_Kn vs conway(torus2(2n+3) # mirror torus2(2n+1))", format_poly(conway_Kn(n)),
                              [&] {
                                  Diagram big = torus2_diagram(2 * n + 3);
                                  Diagram small = mirror(torus2_diagram(2 * n + 1));
                                  return format_poly(conway(connected_sum(big, 1, small, 1), ctx));
                              }));
    }
    return out;
}

std::vector<VerificationReport> property_suites(const PropertyConfig& cfg) {
    std::vector<VerificationReport> out;
    auto suite = [&](std::string name, std::string inputs, std::uint64_t salt,
                     const std::function<void(RandomDiagrams&, SkeinContext&, Tally&)>& body) {
        RandomDiagrams gen(cfg.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
        SkeinContext ctx(cfg.node_budget);
        Tally tally;
        try {
            body(gen, ctx, tally);
            out.push_back(tally.report(std::move(name), std::move(inputs)));
        } catch (const std::exception& e) {
            out.push_back(make_report(std::move(name), std::move(inputs), "completed", std::string("error: ") + e.what()));
        }
    };
    const std::string n_diag = std::to_string(cfg.diagrams) + " random diagrams <= " +
                               std::to_string(cfg.max_crossings) + " crossings";

    suite("property.skein_identity", n_diag + ", every crossing", 1, [&](auto& gen, auto& ctx, auto& t) {
        for (int i = 0; i < cfg.diagrams; ++i) {
            Diagram d = gen.any(cfg.max_crossings);
            for (std::size_t x = 0; x < d.crossing_count(); ++x) {
                t.record(check_skein_identity(d, x, ctx), [&] { return format_pd(d) + " at " + std::to_string(x); });
            }
        }
    });

    suite("property.knot_even_normalized", std::to_string(cfg.diagrams) + " random knot diagrams", 2,
          [&](auto& gen, auto& ctx, auto& t) {
              for (int i = 0; i < cfg.diagrams; ++i) {
                  Diagram d = gen.knot(cfg.max_crossings);
                  IntPoly p = conway(d, ctx);
                  bool ok = p.coeff(0) == 1 && (p.parity() == Parity::even);
                  t.record(ok, [&] { return format_pd(d) + " -> " + format_poly(p); });
              }
          });

    suite("property.link_odd_a1_is_lk", std::to_string(cfg.diagrams) + " random 2-component diagrams", 3,
          [&](auto& gen, auto& ctx, auto& t) {
              for (int i = 0; i < cfg.diagrams; ++i) {
                  Diagram d = gen.with_components(2, cfg.max_crossings);
                  IntPoly p = conway(d, ctx);
                  int lk = linking_number(d, 0, 1);
                  bool ok = (p.parity() == Parity::odd || p.parity() == Parity::zero) && p.coeff(1) == lk;
                  t.record(ok, [&] { return format_pd(d) + " -> " + format_poly(p) + ", lk " + std::to_string(lk); });
              }
          });

    suite("property.connected_sum_multiplicative",
          std::to_string(cfg.knot_pairs) + " random knot pairs <= " + std::to_string(cfg.pair_max_crossings) +
              " crossings, random splice arcs",
          4, [&](auto& gen, auto& ctx, auto& t) {
              for (int i = 0; i < cfg.knot_pairs; ++i) {
                  Diagram a = gen.knot(cfg.pair_max_crossings);
                  Diagram b = gen.knot(cfg.pair_max_crossings);
                  Diagram s = connected_sum(a, gen.random_arc(a), b, gen.random_arc(b));
                  IntPoly lhs = conway(s, ctx);
                  IntPoly rhs = conway(a, ctx) * conway(b, ctx);
                  t.record(lhs == rhs && s.component_count() == 1, [&] { return format_pd(s); });
              }
          });

    suite("property.split_union_vanishes", n_diag + ", unions of pairs", 5, [&](auto& gen, auto& ctx, auto& t) {
        for (int i = 0; i < cfg.diagrams; ++i) {
            Diagram a = gen.any(cfg.max_crossings);
            Diagram b = i % 5 == 0 ? Diagram::unknot() : gen.any(cfg.max_crossings);
            Diagram u = disjoint_union(a, b);
            t.record(conway(u, ctx).is_zero() && u.component_count() == a.component_count() + b.component_count(),
                     [&] { return format_pd(u); });
        }
    });

    suite("property.basepoint_invariance",
          std::to_string(cfg.basepoint_diagrams) + " random diagrams, rotated basepoints, fresh contexts", 6,
          [&](auto& gen, auto&, auto& t) {
              for (int i = 0; i < cfg.basepoint_diagrams; ++i) {
                  Diagram d = gen.any(cfg.max_crossings);
                  Diagram rotated = gen.rotate_basepoints(d);
                  SkeinContext first(cfg.node_budget);
                  SkeinContext second(cfg.node_budget);
                  t.record(conway(d, first) == conway(rotated, second), [&] { return format_pd(d); });
              }
          });

    suite("property.reduce_invariance", n_diag + ", simplified vs unsimplified recursion", 7,
          [&](auto& gen, auto& ctx, auto& t) {
              SkeinContext raw(cfg.node_budget);
              raw.set_simplify(false);
              for (int i = 0; i < cfg.diagrams; ++i) {
                  Diagram d = gen.any(cfg.max_crossings);
                  Diagram r = reduce(d);
                  IntPoly plain = conway(d, raw);
                  bool ok = r.crossing_count() <= d.crossing_count() && conway(d, ctx) == plain &&
                            conway(r, raw) == plain;
                  t.record(ok, [&] { return format_pd(d); });
              }
          });

    suite("property.a2_skein", std::to_string(cfg.diagrams) + " random knot diagrams, every positive crossing", 8,
          [&](auto& gen, auto& ctx, auto& t) {
              for (int i = 0; i < cfg.diagrams; ++i) {
                  Diagram d = gen.knot(cfg.max_crossings);
                  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
                      if (d.crossing(x).sign() != CrossingSign::positive) continue;
                      t.record(check_a2_skein(d, x, ctx), [&] { return format_pd(d) + " at " + std::to_string(x); });
                  }
              }
          });

    suite("property.memo_consistency", n_diag + ", shared memo vs fresh recomputation", 9,
          [&](auto& gen, auto& ctx, auto& t) {
              std::vector<Diagram> ds;
              for (int i = 0; i < cfg.diagrams; ++i) ds.push_back(gen.any(cfg.max_crossings));
              for (const Diagram& d : ds) conway(d, ctx);
              for (const Diagram& d : ds) {
                  const IntPoly* cached = ctx.lookup(canonical_code(reduce(d)));
                  SkeinContext fresh(cfg.node_budget);
                  t.record(cached && *cached == conway(d, fresh), [&] { return format_pd(d); });
              }
          });

    suite("property.switch_smooth_structure", n_diag + ", every crossing", 10, [&](auto& gen, auto&, auto& t) {
        for (int i = 0; i < cfg.diagrams; ++i) {
            Diagram d = gen.any(cfg.max_crossings);
            for (std::size_t x = 0; x < d.crossing_count(); ++x) {
                Diagram sw = switch_crossing(d, x);
                Diagram sm = smooth_crossing(d, x);
                auto diff = static_cast<long>(sm.component_count()) - static_cast<long>(d.component_count());
                bool ok = switch_crossing(sw, x) == d && sign(sw, x) == -sign(d, x) &&
                          sw.crossing_count() == d.crossing_count() &&
                          sm.crossing_count() + 1 == d.crossing_count() && (diff == 1 || diff == -1);
                t.record(ok, [&] { return format_pd(d) + " at " + std::to_string(x); });
            }
        }
    });

    suite("property.lk_symmetric_mirror_negates", n_diag + " with >= 2 components", 11,
          [&](auto& gen, auto&, auto& t) {
              for (int i = 0; i < cfg.diagrams; ++i) {
                  Diagram d = gen.any(cfg.max_crossings);
                  if (d.component_count() < 2) continue;
                  Diagram m = mirror(d);
                  for (std::size_t a = 0; a < d.component_count(); ++a) {
                      for (std::size_t b = a + 1; b < d.component_count(); ++b) {
                          int lk = linking_number(d, a, b);
                          bool ok = linking_number(d, b, a) == lk && linking_number(m, a, b) == -lk;
                          t.record(ok, [&] { return format_pd(d); });
                      }
                  }
              }
          });
    return out;
}

std::vector<VerificationReport> run_all(const VerifyConfig& cfg) {
    std::vector<VerificationReport> out;
    auto append = [&out](std::vector<VerificationReport> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };

    std::filesystem::path path = cfg.table_path.empty() ? default_table_path() : cfg.table_path;
    SkeinContext ctx(cfg.properties.node_budget);
    try {
        KnotTable table = KnotTable::load(path);
        for (const auto& [name, poly] : cfg.corrupt_conway) table.set_conway(name, poly);
        append(table_checks(table, ctx));
        append(k1_chain(table, ctx));
        append(closed_form_crosscheck(table, ctx));
    } catch (const std::exception& e) {
        out.push_back(make_report("table.load", path.string(), "loaded", std::string("error: ") + e.what()));
    }

    append(check_recurrences(cfg.max_n, cfg.max_l, cfg.max_r));
    append(theorem_sum_check(cfg.max_n));
    append(oracle_checks(cfg.max_torus_m, ctx));
    if (cfg.run_properties) append(property_suites(cfg.properties));

    std::stable_sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
        return a.check_name < b.check_name;
    });
    return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; });
}

}  // namespace knotpoly
