#include "hecke/polynomial.hpp"

#include <sstream>

namespace hecke {

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coefficients)
    : coefficients_(std::move(ascending_coefficients)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coefficients_.empty() && coefficients_.back() == 0)
        coefficients_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int value) {
    IntPolynomial p;
    if (value != 0)
        p.coefficients_.push_back(std::move(value));
    return p;
}

IntPolynomial IntPolynomial::monomial(Int value, int exponent) {
    if (exponent < 0)
        throw precondition_error("monomial: exponent must be >= 0");
    IntPolynomial p;
    if (value != 0) {
        p.coefficients_.assign(exponent + 1, Int(0));
        p.coefficients_[exponent] = std::move(value);
    }
    return p;
}

Int IntPolynomial::coefficient(int exponent) const {
    if (exponent < 0 || exponent > degree())
        return 0;
    return coefficients_[exponent];
}

Int IntPolynomial::evaluate(const Int& value) const {
    Int result = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        result = result * value + *it;
    return result;
}

IntPolynomial IntPolynomial::truncated(int max_degree) const {
    if (max_degree < 0)
        return {};
    if (degree() <= max_degree)
        return *this;
    IntPolynomial p;
    p.coefficients_.assign(coefficients_.begin(), coefficients_.begin() + max_degree + 1);
    p.normalize();
    return p;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (coefficients_.size() < other.coefficients_.size())
        coefficients_.resize(other.coefficients_.size(), Int(0));
    for (size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i] += other.coefficients_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (coefficients_.size() < other.coefficients_.size())
        coefficients_.resize(other.coefficients_.size(), Int(0));
    for (size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i] -= other.coefficients_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<Int> product(coefficients_.size() + other.coefficients_.size() - 1, Int(0));
    for (size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] == 0)
            continue;
        for (size_t j = 0; j < other.coefficients_.size(); ++j)
            product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
    coefficients_ = std::move(product);
    normalize();
    return *this;
}

std::string IntPolynomial::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = 0; e <= degree(); ++e) {
        const Int& c = coefficients_[e];
        if (c == 0)
            continue;
        Int magnitude = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << magnitude;
        } else {
            if (magnitude != 1)
                out << magnitude << "*";
            out << (e == 1 ? "t" : "t^" + std::to_string(e));
        }
    }
    return out.str();
}

IntPolynomial exact_divide(const IntPolynomial& numerator, const IntPolynomial& denominator) {
    if (denominator.is_zero())
        throw precondition_error("exact_divide: division by the zero polynomial");
    if (numerator.is_zero())
        return {};
    if (numerator.degree() < denominator.degree())
        throw divisibility_error("exact_divide: nonzero remainder (degree too small)");

    std::vector<Int> rem(numerator.coefficients());
    const auto& den = denominator.coefficients();
    const Int& lead = den.back();
    const int quot_degree = numerator.degree() - denominator.degree();
    std::vector<Int> quot(quot_degree + 1, Int(0));

    for (int k = quot_degree; k >= 0; --k) {
        const Int& head = rem[k + denominator.degree()];
        if (head == 0)
            continue;
        if (head % lead != 0)
            throw divisibility_error("exact_divide: leading coefficient does not divide");
        Int factor = head / lead;
        for (size_t j = 0; j < den.size(); ++j)
            rem[k + j] -= factor * den[j];
        quot[k] = std::move(factor);
    }
    for (const Int& c : rem)
        if (c != 0)
            throw divisibility_error("exact_divide: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

} // namespace hecke
