#pragma once

/**
 * @file poly.hpp
 * @brief Exact integer polynomials in one variable z.
 *
 * Conway polynomials live here. Coefficients are arbitrary precision and the
 * storage is dense: coeffs()[k] is the coefficient of z^k. The zero
 * polynomial stores no coefficients; every other value has a nonzero leading
 * coefficient.
 */

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotpoly/error.hpp"

namespace knotpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Which powers of z carry nonzero coefficients.
enum class Parity { zero, even, odd, mixed };

std::string_view to_string(Parity p);

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(BigInt c);
    /// c * z^k
    static IntPoly monomial(BigInt c, std::size_t k);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; -1 for zero.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of z^k; zero beyond the degree.
    BigInt coeff(std::size_t k) const;

    IntPoly shift(std::size_t k) const;
    Parity parity() const;

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    IntPoly& operator*=(const IntPoly& other);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly shift(const IntPoly& p, std::size_t k);
BigInt coeff(const IntPoly& p, std::size_t k);
Parity parity(const IntPoly& p);

/**
 * Parses `term (('+'|'-') term)*` where a term is `int`, `int? 'z'` or
 * `int? 'z^' int`. The first term may carry a leading sign, whitespace
 * between tokens is ignored and repeated powers are summed.
 *
 * Throws ParseError carrying the offending character offset.
 */
IntPoly parse_poly(std::string_view text);

/// Ascending powers, zero terms omitted, `z^k` style; zero renders as "0".
std::string format_poly(const IntPoly& p);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace knotpoly
