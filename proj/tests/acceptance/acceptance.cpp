// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/knot_table.hpp"
#include "knotpoly/skein.hpp"
#include "knotpoly/verify.hpp"

using namespace knotpoly;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome from_reports(const std::vector<VerificationReport>& rs) {
    std::size_t bad = 0;
    std::string first;
    for (const auto& r : rs) {
        if (r.passed) continue;
        if (bad++ == 0) first = r.check_name + ": expected " + r.expected + ", computed " + r.computed;
    }
    std::string detail = std::to_string(rs.size() - bad) + "/" + std::to_string(rs.size()) + " checks";
    if (bad) detail += "; " + first;
    return {bad == 0 && !rs.empty(), detail};
}

// Compares exact strings and collects mismatches.
class Expect {
public:
    void eq(const std::string& what, const std::string& expected, const std::string& computed) {
        ++count_;
        if (expected != computed) misses_.push_back(what + " = " + computed + " (want " + expected + ")");
    }

    Outcome outcome() const {
        std::string detail = std::to_string(count_ - misses_.size()) + "/" + std::to_string(count_) + " values";
        for (const auto& m : misses_) detail += "; " + m;
        return {misses_.empty(), detail};
    }

private:
    std::size_t count_ = 0;
    std::vector<std::string> misses_;
};

Outcome table_reproduction(const KnotTable& t, SkeinContext& ctx) {
    Expect e;
    e.eq("conway(3_1)", "1+z^2", format_poly(conway(t.diagram("3_1"), ctx)));
    e.eq("conway(8_19)", "1+5z^2+5z^4+z^6", format_poly(conway(t.diagram("8_19"), ctx)));
    e.eq("conway(mirror 10_148)", "1+4z^2+3z^4+z^6", format_poly(conway(mirror(t.diagram("10_148")), ctx)));
    e.eq("conway(6^2_3)", "2z+2z^3", format_poly(conway(t.diagram("6^2_3"), ctx)));
    e.eq("a2(5_2)", "2", a2(t.diagram("5_2"), ctx).str());
    Outcome o = e.outcome();
    Outcome table = from_reports(table_checks(t, ctx));
    return {o.passed && table.passed, o.detail + "; table entries " + table.detail};
}

Outcome k1(const KnotTable& t, SkeinContext& ctx) {
    auto rs = k1_chain(t, ctx);
    Expect e;
    auto computed = [&rs](const std::string& name) {
        for (const auto& r : rs) {
            if (r.check_name == name) return r.computed;
        }
        return std::string("missing");
    };
    e.eq("step 1", "1+4z^2+8z^4+6z^6+z^8", computed("k1.step1.A1.engine"));
    e.eq("step 2", "1+4z^2+3z^4+z^6", computed("k1.step2.B1.engine"));
    e.eq("step 3", "5z^4+5z^6+z^8", computed("k1.step3.difference.engine"));
    e.eq("nonzero", "nonzero", computed("k1.step3.nonzero"));
    Outcome o = e.outcome();
    Outcome all = from_reports(rs);
    return {o.passed && all.passed, o.detail + "; chain " + all.detail};
}

Outcome theorem() {
    auto rs = theorem_sum_check(1000);
    Outcome o = from_reports(rs);
    bool one_is_zero = a3_of(1) == 0;
    bool nonzero = true;
    for (std::int64_t n = 2; n <= 1000; ++n) nonzero = nonzero && a3_closed_form(n) != 0 && a3_of(n) != 0;
    o.passed = o.passed && one_is_zero && nonzero;
    o.detail += std::string("; a3(1) ") + (one_is_zero ? "= 0" : "!= 0") + ", a3(n) != 0 for 2<=n<=1000: " +
                (nonzero ? "yes" : "no");
    return o;
}

Outcome crosscheck(const KnotTable& t, SkeinContext& ctx) {
    Expect e;
    e.eq("a2_A(1,0,0)", "4", a2_A(1, 0, 0).str());
    e.eq("a2_B(1,0,0)", "4", a2_B(1, 0, 0).str());
    e.eq("a2_A(0,0,0)", "6", a2_A(0, 0, 0).str());
    e.eq("a2_B(0,0,0)", "6", a2_B(0, 0, 0).str());
    Outcome o = e.outcome();
    Outcome rs = from_reports(closed_form_crosscheck(t, ctx));
    return {o.passed && rs.passed, o.detail + "; against polynomials " + rs.detail};
}

Outcome properties() {
    PropertyConfig cfg;   // 100 diagrams <= 8 crossings, 50 knot pairs
    auto rs = property_suites(cfg);
    const char* required[] = {"property.skein_identity",          "property.knot_even_normalized",
                              "property.link_odd_a1_is_lk",       "property.connected_sum_multiplicative",
                              "property.split_union_vanishes",    "property.basepoint_invariance"};
    Outcome o = from_reports(rs);
    for (const char* name : required) {
        bool found = std::any_of(rs.begin(), rs.end(), [&](const auto& r) { return r.check_name == name; });
        if (!found) {
            o.passed = false;
            o.detail += std::string("; missing ") + name;
        }
    }
    if (cfg.diagrams < 100 || cfg.max_crossings < 8 || cfg.knot_pairs < 50) {
        o.passed = false;
        o.detail += "; sample below required size";
    }
    return o;
}

}  // namespace

int main() {
    SkeinContext ctx;
    std::optional<KnotTable> table;
    std::string table_error;
    try {
        table = KnotTable::load(default_table_path());
    } catch (const std::exception& e) {
        table_error = e.what();
    }

    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    auto needs_table = [&](auto fn) {
        return [&, fn]() -> Outcome {
            if (!table) return {false, "table unavailable: " + table_error};
            return fn(*table, ctx);
        };
    };
    const std::vector<Criterion> criteria = {
        {"table reproduction", needs_table(table_reproduction)},
        {"K_1 chain", needs_table(k1)},
        {"recurrence sweep 1<=n,l,r<=50", [] { return from_reports(check_recurrences(50, 50, 50)); }},
        {"a3 identity 1<=n<=1000", theorem},
        {"closed forms vs polynomials", needs_table(crosscheck)},
        {"oracle equivalence", [&] { return from_reports(oracle_checks(11, ctx)); }},
        {"property suites", properties},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].name
                  << "): " << o.detail << '\n';
    }
    std::cout << (failed == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << '\n';
    return failed == 0 ? 0 : 1;
}
