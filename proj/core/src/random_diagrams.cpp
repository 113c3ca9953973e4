#include "knotpoly/random_diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace knotpoly {

int RandomDiagrams::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

std::size_t RandomDiagrams::random_index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

std::vector<int> RandomDiagrams::braid_word(int strands, int length) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k) {
        int g = uniform(1, strands - 1);
        word.push_back(uniform(0, 1) ? g : -g);
    }
    return word;
}

Diagram RandomDiagrams::any(int max_crossings, int max_strands) {
    int strands = uniform(2, std::max(2, max_strands));
    int length = uniform(1, std::max(1, max_crossings));
    return scramble(braid_closure(strands, braid_word(strands, length)));
}

Diagram RandomDiagrams::with_components(std::size_t components, int max_crossings, int max_strands) {
    for (;;) {
        Diagram d = any(max_crossings, max_strands);
        if (d.component_count() == components) return d;
    }
}

Diagram RandomDiagrams::scramble(const Diagram& d) {
    std::vector<ArcId> fresh(d.arcs().size());
    std::iota(fresh.begin(), fresh.end(), ArcId{1});
    // spread labels out a little so gaps and large values get exercised
    for (ArcId& a : fresh) a = a * 3 + uniform(0, 2);
    std::shuffle(fresh.begin(), fresh.end(), rng_);
    std::unordered_map<ArcId, ArcId> map;
    for (std::size_t i = 0; i < fresh.size(); ++i) map[d.arcs()[i]] = fresh[i];

    std::vector<Crossing> xs = d.crossings();
    for (Crossing& x : xs) {
        for (ArcId& a : x.arcs) a = map.at(a);
    }
    std::shuffle(xs.begin(), xs.end(), rng_);
    return Diagram(std::move(xs), d.free_loops());
}

Diagram RandomDiagrams::rotate_basepoints(const Diagram& d) {
    std::unordered_map<ArcId, ArcId> map;
    for (const Component& c : d.components()) {
        std::size_t k = c.arcs.size();
        if (k == 0) continue;
        std::size_t r = random_index(k);
        for (std::size_t i = 0; i < k; ++i) map[c.arcs[i]] = c.arcs[(i + r) % k];
    }
    return relabel(d, [&map](ArcId a) { return map.at(a); });
}

ArcId RandomDiagrams::random_arc(const Diagram& d) { return d.arcs()[random_index(d.arcs().size())]; }

}  // namespace knotpoly
