#include "knotpoly/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

namespace knotpoly {

namespace {

struct SlotRef {
    ArcId arc;
    std::size_t crossing;
    int slot;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw ValidationError("negative free loop count");
    if (crossings_.empty() && free_loops_ == 0) throw ValidationError("diagram has no components");

    std::vector<SlotRef> refs;
    refs.reserve(4 * crossings_.size());
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        for (int s = 0; s < 4; ++s) {
            ArcId arc = crossings_[i].arcs[s];
            if (arc <= 0) throw ValidationError("arc label " + std::to_string(arc) + " is not positive");
            refs.push_back({arc, i, s});
        }
    }
    std::sort(refs.begin(), refs.end(), [](const SlotRef& x, const SlotRef& y) {
        return std::tie(x.arc, x.crossing, x.slot) < std::tie(y.arc, y.crossing, y.slot);
    });

    for (std::size_t i = 0; i < refs.size();) {
        std::size_t j = i;
        while (j < refs.size() && refs[j].arc == refs[i].arc) ++j;
        ArcId arc = refs[i].arc;
        if (j - i != 2) {
            throw ValidationError("arc label " + std::to_string(arc) + " occurs " + std::to_string(j - i) +
                                  " times, expected 2");
        }
        const SlotRef& p = refs[i];
        const SlotRef& q = refs[i + 1];
        bool p_in = crossings_[p.crossing].is_incoming(p.slot);
        bool q_in = crossings_[q.crossing].is_incoming(q.slot);
        if (p_in == q_in) {
            throw ValidationError("arc label " + std::to_string(arc) + " is " + (p_in ? "incoming" : "outgoing") +
                                  " at both ends");
        }
        arcs_.push_back(arc);
        const SlotRef& in = p_in ? p : q;
        const SlotRef& out = p_in ? q : p;
        heads_.push_back({in.crossing, in.slot});
        tails_.push_back({out.crossing, out.slot});
        i = j;
    }

    arc_component_.assign(arcs_.size(), static_cast<std::size_t>(-1));
    for (std::size_t start = 0; start < arcs_.size(); ++start) {
        if (arc_component_[start] != static_cast<std::size_t>(-1)) continue;
        Component comp;
        std::size_t idx = start;
        do {
            arc_component_[idx] = components_.size();
            comp.arcs.push_back(arcs_[idx]);
            idx = index_of(successor(arcs_[idx]));
        } while (idx != start);
        components_.push_back(std::move(comp));
    }
    for (int k = 0; k < free_loops_; ++k) components_.emplace_back();
}

std::size_t Diagram::index_of(ArcId arc) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc);
    if (it == arcs_.end() || *it != arc) throw ValidationError("no arc labelled " + std::to_string(arc));
    return static_cast<std::size_t>(it - arcs_.begin());
}

bool Diagram::has_arc(ArcId arc) const noexcept { return std::binary_search(arcs_.begin(), arcs_.end(), arc); }

ArcEnd Diagram::tail(ArcId arc) const { return tails_[index_of(arc)]; }
ArcEnd Diagram::head(ArcId arc) const { return heads_[index_of(arc)]; }

ArcId Diagram::successor(ArcId arc) const {
    ArcEnd h = heads_[index_of(arc)];
    const Crossing& x = crossings_[h.crossing];
    return h.slot == slot_a ? x.under_out() : x.over_out();
}

std::size_t Diagram::component_of(ArcId arc) const { return arc_component_[index_of(arc)]; }

std::vector<Component> components(const Diagram& d) { return d.components(); }

CrossingSign sign(const Diagram& d, std::size_t crossing) { return d.crossing(crossing).sign(); }

int writhe(const Diagram& d) {
    int w = 0;
    for (const Crossing& x : d.crossings()) w += value(x.sign());
    return w;
}

int linking_number(const Diagram& d, std::size_t c1, std::size_t c2) {
    if (c1 >= d.component_count() || c2 >= d.component_count()) {
        throw ValidationError("component index out of range");
    }
    if (c1 == c2) throw ValidationError("linking number needs two distinct components");
    int sum = 0;
    for (const Crossing& x : d.crossings()) {
        std::size_t under = d.component_of(x.under_in());
        std::size_t over = d.component_of(x.over_in());
        if ((under == c1 && over == c2) || (under == c2 && over == c1)) sum += value(x.sign());
    }
    if (sum % 2 != 0) throw ValidationError("odd inter-component crossing sum (non-planar diagram?)");
    return sum / 2;
}

std::size_t piece_count(const Diagram& d) {
    std::size_t n = d.crossing_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (ArcId arc : d.arcs()) {
        std::size_t a = find_root(parent, d.tail(arc).crossing);
        std::size_t b = find_root(parent, d.head(arc).crossing);
        if (a != b) parent[a] = b;
    }
    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) roots += find_root(parent, i) == i;
    return roots + static_cast<std::size_t>(d.free_loops());
}

Diagram relabel(const Diagram& d, const std::function<ArcId(ArcId)>& map) {
    std::vector<Crossing> xs = d.crossings();
    for (Crossing& x : xs) {
        for (ArcId& a : x.arcs) a = map(a);
    }
    return Diagram(std::move(xs), d.free_loops());
}

Diagram canonicalize(const Diagram& d) {
    std::unordered_map<ArcId, ArcId> fresh;
    ArcId next = 1;
    for (const Component& c : d.components()) {
        for (ArcId a : c.arcs) fresh[a] = next++;
    }
    std::vector<Crossing> xs = d.crossings();
    for (Crossing& x : xs) {
        for (ArcId& a : x.arcs) a = fresh.at(a);
    }
    std::sort(xs.begin(), xs.end(), [](const Crossing& p, const Crossing& q) {
        return std::tie(p.arcs, p.over_enters_at_d) < std::tie(q.arcs, q.over_enters_at_d);
    });
    return Diagram(std::move(xs), d.free_loops());
}

std::string canonical_code(const Diagram& d) {
    Diagram c = canonicalize(d);
    std::string out;
    out.reserve(16 * c.crossing_count() + 2 * static_cast<std::size_t>(c.free_loops()));
    for (const Crossing& x : c.crossings()) {
        if (!out.empty()) out += ';';
        out += "X(";
        for (int s = 0; s < 4; ++s) {
            if (s) out += ',';
            out += std::to_string(x.arcs[s]);
        }
        out += x.over_enters_at_d ? ")+" : ")-";
    }
    for (int k = 0; k < c.free_loops(); ++k) {
        if (!out.empty()) out += ';';
        out += 'O';
    }
    return out;
}

}  // namespace knotpoly
