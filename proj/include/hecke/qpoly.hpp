#pragma once

#include <map>

#include "hecke/partition.hpp"
#include "hecke/polynomial.hpp"

/*
  t-analogues attached to a partition.

  The t-integer is [n]_t = 1 + t + ... + t^{n-1}, and the graded dimension
  of the Specht module labelled by lambda is the hook quotient

      dim_t S^lambda = prod_{i=1..|lambda|} [i]_t / prod_{hooks h} [h]_t,

  a polynomial with nonnegative integer coefficients whose value at t = 1
  is dim S^lambda. It factors as prod_l Phi_l(t)^{e_l} with exponent
  e_l = wt_l |lambda| - wt_l lambda computed combinatorially from cores
  and weights; expanding that product back out is the verification route,
  never the computation route.
*/

namespace hecke {

IntPolynomial t_integer(int n);                    // n >= 0

// l-th cyclotomic polynomial via the Moebius divisor product
// Phi_l = prod_{d | l} (t^d - 1)^{mu(l/d)}, memoized per process.
const IntPolynomial& cyclotomic(int l);            // l >= 1

IntPolynomial graded_dim_specht(const Partition& lambda);

struct CyclotomicFactorization {
    // l >= 2 mapped to a positive exponent; absent keys mean exponent 0.
    std::map<int, int> exponents;

    bool operator==(const CyclotomicFactorization&) const = default;
};

CyclotomicFactorization cyclotomic_factorization(const Partition& lambda);
IntPolynomial expand_factorization(const CyclotomicFactorization& factorization);

struct SpechtDim {
    Int value;                                     // |lambda|! / prod hooks
    std::map<int, int> prime_factorization;        // prime -> exponent
};

// Both routes of the dimension: the hook length formula and the prime
// factorization through p^r-cores. Disagreement throws internal_error.
SpechtDim specht_dim(const Partition& lambda);

// Standard Young tableaux counted by backtracking over corner removals;
// the hook-free oracle for specht_dim at desk scale.
Int count_syt(const Partition& lambda);

} // namespace hecke
