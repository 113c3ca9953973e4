#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "knotpoly/diagram.hpp"

namespace knotpoly {

namespace {

/// Strand continuation through a crossing that is being deleted: whatever
/// arrives on `in` carries on along `out`.
struct Junction {
    ArcId in;
    ArcId out;
};

class LabelUnion {
public:
    ArcId find(ArcId a) {
        auto it = parent_.find(a);
        if (it == parent_.end()) return a;
        if (it->second == a) return a;
        ArcId root = find(it->second);
        parent_[a] = root;
        return root;
    }

    // the smaller label wins, so every fused run keeps its minimal label
    void unite(ArcId a, ArcId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[a] = a;
        parent_[b] = a;
    }

private:
    std::unordered_map<ArcId, ArcId> parent_;
};

// Deletes the crossings in `removed` and fuses arcs along the junctions.
// Fused runs that no longer touch any crossing close up into free loops.
Diagram splice(const Diagram& d, const std::set<std::size_t>& removed, const std::vector<Junction>& junctions) {
    LabelUnion uf;
    for (const Junction& j : junctions) uf.unite(j.in, j.out);

    std::vector<Crossing> kept;
    std::set<ArcId> present;
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
        if (removed.count(i)) continue;
        Crossing x = d.crossing(i);
        for (ArcId& a : x.arcs) {
            a = uf.find(a);
            present.insert(a);
        }
        kept.push_back(x);
    }

    std::set<ArcId> runs;
    for (const Junction& j : junctions) runs.insert(uf.find(j.in));
    int loops = d.free_loops();
    for (ArcId r : runs) loops += present.count(r) ? 0 : 1;
    return Diagram(std::move(kept), loops);
}

// Removes crossings, letting both strands pass straight through each one.
Diagram pass_through(const Diagram& d, const std::set<std::size_t>& removed) {
    std::vector<Junction> js;
    for (std::size_t i : removed) {
        const Crossing& x = d.crossing(i);
        js.push_back({x.under_in(), x.under_out()});
        js.push_back({x.over_in(), x.over_out()});
    }
    return splice(d, removed, js);
}

Diagram shifted(const Diagram& d, ArcId by) {
    if (by == 0 || d.crossing_count() == 0) return d;
    return relabel(d, [by](ArcId a) { return a + by; });
}

std::optional<std::size_t> find_kink(const Diagram& d) {
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
        const auto& arcs = d.crossing(i).arcs;
        for (int s = 0; s < 4; ++s) {
            if (arcs[s] == arcs[(s + 1) % 4]) return i;
        }
    }
    return std::nullopt;
}

int rotation(int from, int to) { return ((to - from) % 4 + 4) % 4; }

// Two crossings joined by an arc that is over at both ends and an arc that
// is under at both ends, bounding a bigon face.
std::optional<std::pair<std::size_t, std::size_t>> find_bigon(const Diagram& d) {
    for (ArcId e1 : d.arcs()) {
        ArcEnd t1 = d.tail(e1);
        ArcEnd h1 = d.head(e1);
        if (t1.crossing == h1.crossing) continue;
        const Crossing& x = d.crossing(t1.crossing);
        const Crossing& y = d.crossing(h1.crossing);
        if (!x.is_over(t1.slot) || !y.is_over(h1.slot)) continue;
        if (x.sign() == y.sign()) continue;
        for (int sx : {int(slot_a), int(slot_c)}) {
            ArcId e2 = x.arcs[sx];
            ArcEnd other = sx == slot_a ? d.tail(e2) : d.head(e2);
            if (other.crossing != h1.crossing || y.is_over(other.slot)) continue;
            // face condition: e2 sits on the same side of e1 at both ends
            int rx = rotation(t1.slot, sx);
            int ry = rotation(h1.slot, other.slot);
            if ((rx + ry) % 4 != 0) continue;
            return std::pair{t1.crossing, h1.crossing};
        }
    }
    return std::nullopt;
}

}  // namespace

Diagram switch_crossing(const Diagram& d, std::size_t crossing) {
    std::vector<Crossing> xs = d.crossings();
    Crossing& x = xs.at(crossing);
    const auto [a, b, c, dd] = x.arcs;
    // rotate so the old overstrand's incoming arc leads
    if (x.over_enters_at_d) {
        x.arcs = {dd, a, b, c};
        x.over_enters_at_d = false;
    } else {
        x.arcs = {b, c, dd, a};
        x.over_enters_at_d = true;
    }
    return Diagram(std::move(xs), d.free_loops());
}

Diagram smooth_crossing(const Diagram& d, std::size_t crossing) {
    const Crossing& x = d.crossing(crossing);
    return splice(d, {crossing}, {{x.under_in(), x.over_out()}, {x.over_in(), x.under_out()}});
}

Diagram mirror(const Diagram& d) {
    std::vector<Crossing> xs = d.crossings();
    for (Crossing& x : xs) {
        const auto [a, b, c, dd] = x.arcs;
        if (x.over_enters_at_d) {
            x.arcs = {dd, a, b, c};
        } else {
            x.arcs = {b, c, dd, a};
        }
        x.over_enters_at_d = !x.over_enters_at_d;
    }
    return Diagram(std::move(xs), d.free_loops());
}

Diagram connected_sum(const Diagram& d1, ArcId arc1, const Diagram& d2, ArcId arc2) {
    if (d1.component_count() != 1 || d2.component_count() != 1) {
        throw ValidationError("connected sum needs two knot diagrams");
    }
    if (d1.crossing_count() == 0) return d2;
    if (d2.crossing_count() == 0) return d1;
    if (!d1.has_arc(arc1)) throw ValidationError("no arc labelled " + std::to_string(arc1) + " in first diagram");
    if (!d2.has_arc(arc2)) throw ValidationError("no arc labelled " + std::to_string(arc2) + " in second diagram");

    ArcId offset = d1.max_arc();
    Diagram right = shifted(d2, offset);
    ArcId arc2s = arc2 + offset;
    ArcEnd h1 = d1.head(arc1);
    ArcEnd h2 = right.head(arc2s);

    std::vector<Crossing> xs = d1.crossings();
    xs.insert(xs.end(), right.crossings().begin(), right.crossings().end());
    xs[h1.crossing].arcs[h1.slot] = arc2s;
    xs[d1.crossing_count() + h2.crossing].arcs[h2.slot] = arc1;
    return Diagram(std::move(xs), 0);
}

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
    Diagram right = shifted(d2, d1.max_arc());
    std::vector<Crossing> xs = d1.crossings();
    xs.insert(xs.end(), right.crossings().begin(), right.crossings().end());
    return Diagram(std::move(xs), d1.free_loops() + d2.free_loops());
}

Diagram reduce(const Diagram& d) {
    Diagram cur = d;
    for (;;) {
        if (auto k = find_kink(cur)) {
            cur = pass_through(cur, {*k});
            continue;
        }
        if (auto b = find_bigon(cur)) {
            cur = pass_through(cur, {b->first, b->second});
            continue;
        }
        return cur;
    }
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw ValidationError("braid needs at least one strand");
    std::vector<ArcId> pos(static_cast<std::size_t>(strands));
    for (int p = 0; p < strands; ++p) pos[p] = p + 1;
    ArcId next = strands + 1;

    std::vector<Crossing> xs;
    for (int g : word) {
        int i = std::abs(g) - 1;
        if (g == 0 || i + 1 >= strands) throw ValidationError("braid generator " + std::to_string(g) + " out of range");
        ArcId left = pos[i];
        ArcId right = pos[i + 1];
        ArcId ne = next++;  // continuation of the strand from the left
        ArcId nw = next++;  // continuation of the strand from the right
        if (g > 0) {
            xs.push_back(Crossing{{right, ne, nw, left}, true});
        } else {
            xs.push_back(Crossing{{left, right, ne, nw}, false});
        }
        pos[i] = nw;
        pos[i + 1] = ne;
    }

    std::map<ArcId, ArcId> closing;
    int loops = 0;
    for (int p = 0; p < strands; ++p) {
        if (pos[p] == p + 1) {
            ++loops;
        } else {
            closing[pos[p]] = p + 1;
        }
    }
    for (Crossing& x : xs) {
        for (ArcId& a : x.arcs) {
            if (auto it = closing.find(a); it != closing.end()) a = it->second;
        }
    }
    return canonicalize(Diagram(std::move(xs), loops));
}

Diagram torus2_diagram(int m) {
    if (m < 1) throw ValidationError("torus2_diagram needs m >= 1 (use \"O;O\" for m = 0)");
    return braid_closure(2, std::vector<int>(static_cast<std::size_t>(m), 1));
}

Diagram meridian_link(const Diagram& d, ArcId arc) {
    if (d.component_count() != 1) throw ValidationError("meridian_link needs a knot diagram");
    if (d.crossing_count() == 0) return torus2_diagram(2);
    if (!d.has_arc(arc)) throw ValidationError("no arc labelled " + std::to_string(arc));

    // The knot runs upward through two new crossings; the circle passes over
    // it going right at the lower one and under it going left at the upper.
    ArcId top = d.max_arc();
    ArcId between = top + 1;
    ArcId after = top + 2;
    ArcId m_right = top + 3;
    ArcId m_left = top + 4;
    ArcEnd h = d.head(arc);

    std::vector<Crossing> xs = d.crossings();
    xs[h.crossing].arcs[h.slot] = after;
    xs.push_back(Crossing{{arc, m_right, between, m_left}, true});
    xs.push_back(Crossing{{m_right, after, m_left, between}, true});
    return Diagram(std::move(xs), d.free_loops());
}

}  // namespace knotpoly
