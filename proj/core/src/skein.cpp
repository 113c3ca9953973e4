#include "knotpoly/skein.hpp"

#include <optional>
#include <stdexcept>

namespace knotpoly {

namespace {

struct Scan {
    std::optional<std::size_t> first_under;
    std::size_t under_count = 0;
};

Scan scan(const Diagram& d) {
    Scan out;
    std::vector<bool> seen(d.crossing_count(), false);
    for (const Component& c : d.components()) {
        for (ArcId arc : c.arcs) {
            ArcEnd h = d.head(arc);
            if (seen[h.crossing]) continue;
            seen[h.crossing] = true;
            if (h.slot == slot_a) {
                ++out.under_count;
                if (!out.first_under) out.first_under = h.crossing;
            }
        }
    }
    return out;
}

}  // namespace

const IntPoly* SkeinContext::lookup(const std::string& code) const {
    auto it = memo_.find(code);
    return it == memo_.end() ? nullptr : &it->second;
}

void SkeinContext::clear() {
    memo_.clear();
    stats_ = {};
}

SkeinMeasure skein_measure(const Diagram& d) { return {d.crossing_count(), scan(d).under_count}; }

bool is_descending(const Diagram& d) { return !scan(d).first_under; }

class SkeinEvaluator {
public:
    explicit SkeinEvaluator(SkeinContext& ctx) : ctx_(ctx) {}

    IntPoly eval(const Diagram& d) { return eval_prepared(prepare(d)); }

private:
    Diagram prepare(const Diagram& d) const { return ctx_.simplify_ ? reduce(d) : d; }

    IntPoly eval_prepared(const Diagram& d) {
        std::string key = canonical_code(d);
        if (auto it = ctx_.memo_.find(key); it != ctx_.memo_.end()) {
            ++ctx_.stats_.cache_hits;
            return it->second;
        }
        if (++ctx_.stats_.nodes_expanded > ctx_.node_budget_) {
            throw BudgetExceeded("skein recursion exceeded node budget of " + std::to_string(ctx_.node_budget_));
        }
        IntPoly value = expand(d);
        ctx_.memo_.emplace(std::move(key), value);
        return value;
    }

    IntPoly expand(const Diagram& d) {
        if (d.crossing_count() == 0) return d.free_loops() == 1 ? IntPoly{1} : IntPoly{};
        if (ctx_.simplify_ && piece_count(d) >= 2) return {};

        Scan s = scan(d);
        if (!s.first_under) return d.component_count() == 1 ? IntPoly{1} : IntPoly{};

        std::size_t x = *s.first_under;
        SkeinMeasure here{d.crossing_count(), s.under_count};
        Diagram switched = prepare(switch_crossing(d, x));
        Diagram smoothed = prepare(smooth_crossing(d, x));
        if (!(skein_measure(switched) < here) || !(skein_measure(smoothed) < here)) {
            throw std::logic_error("skein recursion measure failed to decrease");
        }

        IntPoly other = eval_prepared(switched);
        IntPoly zero = eval_prepared(smoothed).shift(1);
        return d.crossing(x).sign() == CrossingSign::positive ? other + zero : other - zero;
    }

    SkeinContext& ctx_;
};

IntPoly conway(const Diagram& d, SkeinContext& ctx) { return SkeinEvaluator(ctx).eval(d); }

IntPoly conway(const Diagram& d) {
    SkeinContext ctx;
    return conway(d, ctx);
}

IntPoly conway_torus2(int m) {
    if (m < 0) throw ValidationError("conway_torus2 needs m >= 0");
    IntPoly prev{};   // P(0)
    IntPoly cur{1};   // P(1)
    if (m == 0) return prev;
    for (int k = 2; k <= m; ++k) {
        IntPoly next = cur.shift(1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly conway_Kn(int n) {
    if (n < 1) throw ValidationError("conway_Kn needs n >= 1");
    return conway_torus2(2 * n + 3) * conway_torus2(2 * n + 1);
}

BigInt a2(const Diagram& d, SkeinContext& ctx) {
    if (d.component_count() != 1) throw ValidationError("a2 is defined for knot diagrams only");
    return conway(d, ctx).coeff(2);
}

BigInt a2(const Diagram& d) {
    SkeinContext ctx;
    return a2(d, ctx);
}

bool check_skein_identity(const Diagram& d, std::size_t crossing, SkeinContext& ctx) {
    Diagram flipped = switch_crossing(d, crossing);
    bool positive = d.crossing(crossing).sign() == CrossingSign::positive;
    const Diagram& plus = positive ? d : flipped;
    const Diagram& minus = positive ? flipped : d;
    IntPoly lhs = conway(plus, ctx) - conway(minus, ctx);
    IntPoly rhs = conway(smooth_crossing(d, crossing), ctx).shift(1);
    return lhs == rhs;
}

bool check_a2_skein(const Diagram& d_plus, std::size_t crossing, SkeinContext& ctx) {
    if (d_plus.component_count() != 1) throw ValidationError("check_a2_skein needs a knot diagram");
    if (d_plus.crossing(crossing).sign() != CrossingSign::positive) {
        throw ValidationError("check_a2_skein needs a positive crossing");
    }
    Diagram resolved = smooth_crossing(d_plus, crossing);
    BigInt drop = a2(d_plus, ctx) - a2(switch_crossing(d_plus, crossing), ctx);
    return drop == linking_number(resolved, 0, 1);
}

}  // namespace knotpoly
