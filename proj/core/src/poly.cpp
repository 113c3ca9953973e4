#include "knotpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace knotpoly {

std::string_view to_string(Parity p) {
    switch (p) {
        case Parity::zero: return "zero";
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::mixed: return "mixed";
    }
    return "?";
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    std::vector<BigInt> cs(k + 1);
    cs[k] = std::move(c);
    return IntPoly(std::move(cs));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt{0}; }

IntPoly IntPoly::shift(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> cs(k);
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    IntPoly out;
    out.coeffs_ = std::move(cs);
    return out;
}

Parity IntPoly::parity() const {
    bool even = false;
    bool odd = false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        (k % 2 == 0 ? even : odd) = true;
    }
    if (even && odd) return Parity::mixed;
    if (even) return Parity::even;
    if (odd) return Parity::odd;
    return Parity::zero;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> cs(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) cs[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(cs));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly sub(const IntPoly& p, const IntPoly& q) { return p - q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }
IntPoly shift(const IntPoly& p, std::size_t k) { return p.shift(k); }
BigInt coeff(const IntPoly& p, std::size_t k) { return p.coeff(k); }
Parity parity(const IntPoly& p) { return p.parity(); }

namespace {

// Exponents beyond this are certainly typos, and would otherwise allocate
// an absurd dense vector.
constexpr std::size_t kMaxExponent = 1u << 20;

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    IntPoly parse() {
        std::vector<BigInt> acc;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            term(negative, acc);
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            negative = c == '-';
            ++pos_;
        }
        return IntPoly(std::move(acc));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void term(bool negative, std::vector<BigInt>& acc) {
        skip_ws();
        std::size_t start = pos_;
        BigInt c{1};
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = BigInt(digits());
            have_coeff = true;
            skip_ws();
        }
        std::size_t power = 0;
        if (peek() == 'z') {
            ++pos_;
            power = 1;
            if (peek() == '^') {
                ++pos_;
                std::size_t epos = pos_;
                std::string e = digits();
                if (e.empty()) throw ParseError("expected exponent", epos);
                if (e.size() > 7 || std::stoul(e) > kMaxExponent) throw ParseError("exponent too large", epos);
                power = std::stoul(e);
            }
        } else if (!have_coeff) {
            throw ParseError("expected term", start);
        }
        if (negative) c = -c;
        if (acc.size() <= power) acc.resize(power + 1);
        acc[power] += c;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const BigInt& c = cs[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (c < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << 'z';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << format_poly(p); }

}  // namespace knotpoly
