#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>

#include "knotpoly/diagram.hpp"

namespace knotpoly {

namespace {

using Tuple = std::array<ArcId, 4>;

class PdParser {
public:
    explicit PdParser(std::string_view text) : text_(text) {}

    void parse(std::vector<Tuple>& tuples, int& loops) {
        for (;;) {
            item(tuples, loops);
            skip_ws();
            if (at_end()) return;
            expect(';');
        }
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    ArcId integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected arc label", start);
        if (pos_ - start > 9) throw ParseError("arc label too large", start);
        return static_cast<ArcId>(std::stol(std::string(text_.substr(start, pos_ - start))));
    }

    void item(std::vector<Tuple>& tuples, int& loops) {
        skip_ws();
        if (peek() == 'O') {
            ++pos_;
            ++loops;
            return;
        }
        if (peek() != 'X') throw ParseError("expected 'X(' or 'O'", pos_);
        ++pos_;
        expect('(');
        Tuple t{};
        for (int s = 0; s < 4; ++s) {
            if (s) expect(',');
            t[s] = integer();
        }
        expect(')');
        tuples.push_back(t);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

enum class Role { in, out, unknown };

// Resolves which over slot is incoming at every crossing by propagating the
// rule that each label is incoming once and outgoing once.
std::vector<Crossing> orient(const std::vector<Tuple>& tuples) {
    std::map<ArcId, std::vector<std::pair<std::size_t, int>>> uses;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (int s = 0; s < 4; ++s) uses[tuples[i][s]].emplace_back(i, s);
    }
    for (const auto& [arc, u] : uses) {
        if (arc <= 0) throw ValidationError("arc label " + std::to_string(arc) + " is not positive");
        if (u.size() != 2) {
            throw ValidationError("arc label " + std::to_string(arc) + " occurs " + std::to_string(u.size()) +
                                  " times, expected 2");
        }
    }

    std::vector<std::optional<bool>> enters_at_d(tuples.size());
    auto role = [&](std::size_t i, int s) {
        if (s == slot_a) return Role::in;
        if (s == slot_c) return Role::out;
        if (!enters_at_d[i]) return Role::unknown;
        return (s == slot_d) == *enters_at_d[i] ? Role::in : Role::out;
    };

    // Over-only components: pick the direction in which labels increase
    // (b -> b+1, or max -> min at the wrap), then let propagation finish.
    auto guess = [&]() {
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            if (enters_at_d[i]) continue;
            ArcId b = tuples[i][slot_b];
            ArcId d = tuples[i][slot_d];
            if (d == b + 1) {
                enters_at_d[i] = false;
            } else if (b == d + 1) {
                enters_at_d[i] = true;
            } else {
                enters_at_d[i] = d > b;
            }
            return true;
        }
        return false;
    };

    bool changed = true;
    while (changed || guess()) {
        changed = false;
        for (const auto& [arc, u] : uses) {
            auto [i, s] = u[0];
            auto [j, t] = u[1];
            Role ri = role(i, s);
            Role rj = role(j, t);
            if (ri != Role::unknown && rj != Role::unknown) {
                if (ri == rj) {
                    throw ValidationError("arc label " + std::to_string(arc) + " is " +
                                          (ri == Role::in ? "incoming" : "outgoing") + " at both ends");
                }
                continue;
            }
            if (ri == Role::unknown && rj == Role::unknown) continue;
            // exactly one end is undetermined, and it sits in an over slot
            auto [k, slot, want] = ri == Role::unknown ? std::tuple{i, s, rj == Role::in ? Role::out : Role::in}
                                                       : std::tuple{j, t, ri == Role::in ? Role::out : Role::in};
            enters_at_d[k] = (slot == slot_d) == (want == Role::in);
            changed = true;
        }
    }

    std::vector<Crossing> out;
    out.reserve(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) out.push_back(Crossing{tuples[i], *enters_at_d[i]});
    return out;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
    std::vector<Tuple> tuples;
    int loops = 0;
    PdParser(text).parse(tuples, loops);
    return Diagram(orient(tuples), loops);
}

std::string format_pd(const Diagram& d) {
    std::string out;
    for (const Crossing& x : d.crossings()) {
        if (!out.empty()) out += ';';
        out += "X(";
        for (int s = 0; s < 4; ++s) {
            if (s) out += ',';
            out += std::to_string(x.arcs[s]);
        }
        out += ')';
    }
    for (int k = 0; k < d.free_loops(); ++k) {
        if (!out.empty()) out += ';';
        out += 'O';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Diagram& d) {
    os << format_pd(d);
    if (d.crossing_count() == 0) return os;
    os << " [";
    for (const Crossing& x : d.crossings()) os << (x.sign() == CrossingSign::positive ? '+' : '-');
    return os << ']';
}

}  // namespace knotpoly
