#include "hecke/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

#include "hecke/abacus.hpp"

namespace hecke {

IntPolynomial t_integer(int n) {
    if (n < 0)
        throw precondition_error("t_integer: n must be >= 0");
    return IntPolynomial(std::vector<Int>(n, Int(1)));
}

namespace {

// mu(n) by trial factorization; n stays tiny here.
int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            mu = -mu;
        }
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

IntPolynomial t_power_minus_one(int d) {
    IntPolynomial p = IntPolynomial::monomial(1, d);
    return p - IntPolynomial::constant(1);
}

IntPolynomial compute_cyclotomic(int l) {
    IntPolynomial numerator = IntPolynomial::constant(1);
    std::vector<int> denominators;
    for (int d = 1; d <= l; ++d) {
        if (l % d != 0)
            continue;
        switch (moebius(l / d)) {
        case 1: numerator *= t_power_minus_one(d); break;
        case -1: denominators.push_back(d); break;
        default: break;
        }
    }
    for (int d : denominators)
        numerator = exact_divide(numerator, t_power_minus_one(d));
    return numerator;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> primes;
    for (int p = 2; p <= n; ++p) {
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (prime)
            primes.push_back(p);
    }
    return primes;
}

} // namespace

const IntPolynomial& cyclotomic(int l) {
    if (l < 1)
        throw precondition_error("cyclotomic: l must be >= 1");
    static std::mutex mutex;
    static std::unordered_map<int, IntPolynomial> memo;
    {
        std::scoped_lock lock(mutex);
        auto it = memo.find(l);
        if (it != memo.end())
            return it->second;
    }
    IntPolynomial value = compute_cyclotomic(l);
    std::scoped_lock lock(mutex);
    return memo.try_emplace(l, std::move(value)).first->second;
}

IntPolynomial graded_dim_specht(const Partition& lambda) {
    const int n = lambda.size();
    // Multiset cancellation of t-integer indices before any division.
    std::vector<int> numerator_multiplicity(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        numerator_multiplicity[i] += 1;
    for (int h : hook_lengths(lambda))
        numerator_multiplicity[h] -= 1;

    IntPolynomial result = IntPolynomial::constant(1);
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k < numerator_multiplicity[i]; ++k)
            result *= t_integer(i);
    // Division by a monic [h]_t stays in Z[t]; overall exactness is the
    // hook content of the quotient, checked by exact_divide throwing.
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k > numerator_multiplicity[i]; --k)
            result = exact_divide(result, t_integer(i));
    return result;
}

CyclotomicFactorization cyclotomic_factorization(const Partition& lambda) {
    CyclotomicFactorization factorization;
    const int n = lambda.size();
    for (int l = 2; l <= n; ++l) {
        const int exponent = n / l - l_weight(lambda, l);
        if (exponent < 0)
            throw internal_error("cyclotomic_factorization: weight exceeded floor(n/l)");
        if (exponent > 0)
            factorization.exponents.emplace(l, exponent);
    }
    return factorization;
}

IntPolynomial expand_factorization(const CyclotomicFactorization& factorization) {
    IntPolynomial product = IntPolynomial::constant(1);
    for (const auto& [l, exponent] : factorization.exponents)
        for (int k = 0; k < exponent; ++k)
            product *= cyclotomic(l);
    return product;
}

SpechtDim specht_dim(const Partition& lambda) {
    const int n = lambda.size();

    Int factorial = 1;
    for (int i = 2; i <= n; ++i)
        factorial *= i;
    Int hook_product = 1;
    for (int h : hook_lengths(lambda))
        hook_product *= h;
    if (factorial % hook_product != 0)
        throw internal_error("specht_dim: hook product does not divide the factorial");

    SpechtDim dim;
    dim.value = factorial / hook_product;

    Int factored = 1;
    for (int p : primes_up_to(n)) {
        int exponent = 0;
        // exponent of p is sum over r of wt_{p^r} |core_{p^r} lambda|
        for (long long power = p; power <= n; power *= p) {
            const int l = static_cast<int>(power);
            exponent += l_core(lambda, l).size() / l;
        }
        if (exponent > 0) {
            dim.prime_factorization.emplace(p, exponent);
            for (int k = 0; k < exponent; ++k)
                factored *= p;
        }
    }
    if (factored != dim.value)
        throw internal_error("specht_dim: hook formula and core factorization disagree for " +
                             std::to_string(n) + "-cell partition");
    return dim;
}

namespace {

Int count_syt_from(std::vector<int>& shape) {
    if (shape.empty())
        return 1;
    Int total = 0;
    // Remove each outer corner; the recursion walks chains of shapes,
    // i.e. places n, n-1, ... back row by row.
    for (size_t i = 0; i < shape.size(); ++i) {
        const bool corner = (i + 1 == shape.size()) || shape[i] > shape[i + 1];
        if (!corner)
            continue;
        shape[i] -= 1;
        if (shape[i] == 0) {
            std::vector<int> smaller(shape.begin(), shape.begin() + i);
            total += count_syt_from(smaller);
        } else {
            total += count_syt_from(shape);
        }
        shape[i] += 1;
    }
    return total;
}

} // namespace

Int count_syt(const Partition& lambda) {
    std::vector<int> shape = lambda.parts();
    return count_syt_from(shape);
}

} // namespace hecke
