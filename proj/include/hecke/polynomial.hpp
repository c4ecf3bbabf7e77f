#pragma once

#include <string>
#include <vector>

#include "hecke/bigint.hpp"
#include "hecke/errors.hpp"

/*
  Dense univariate polynomials in t over arbitrary-precision integers.
  Canonical form never stores a trailing zero coefficient; the zero
  polynomial is the empty coefficient sequence (degree -1).
*/

namespace hecke {

class IntPolynomial {
public:
    IntPolynomial() = default;                         // zero
    explicit IntPolynomial(std::vector<Int> ascending_coefficients);

    static IntPolynomial constant(Int value);
    static IntPolynomial monomial(Int value, int exponent);

    bool is_zero() const { return coefficients_.empty(); }
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coefficients_; }
    Int coefficient(int exponent) const;               // 0 past the degree

    Int evaluate(const Int& value) const;

    // Drops every term of exponent > max_degree.
    IntPolynomial truncated(int max_degree) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const IntPolynomial& other);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

    bool operator==(const IntPolynomial&) const = default;

    // Ascending-exponent text: "1 + t^2", "-1 + t", "0".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Int> coefficients_;
};

// Quotient of an exact division. A nonzero remainder throws
// divisibility_error; a zero divisor throws precondition_error.
IntPolynomial exact_divide(const IntPolynomial& numerator, const IntPolynomial& denominator);

} // namespace hecke
