#pragma once

#include <compare>
#include <vector>

#include "hecke/errors.hpp"

/*
  Exact combinatorics of integer partitions and compositions.

  Conventions used throughout the library:

  - A partition stores its positive parts in weakly decreasing order.
    Zero parts are stripped on construction; out-of-order input is an
    error, never silently sorted.
  - A composition keeps the order of its (positive) parts.
  - l-restricted: consecutive differences, including last part against 0,
    are at most l - 1.
  - l-regular: the transpose is l-restricted; equivalently no part is
    repeated l or more times.
  - l-parabolic: every part is 1 or l.
  - The l-adic expansion writes lambda = lambda0 + l * lambda1 with
    lambda0 l-restricted and lambda1 a partition; it is unique, and the
    bottom-up residue rule below realizes it row by row.
*/

namespace hecke {

class Partition {
public:
    Partition() = default;

    // Strips zero parts; rejects negative or increasing input.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }               // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Row value with zero padding past the last part; rows count from 1.
    int row(int i) const;

    bool operator==(const Partition&) const = default;

    // Lexicographic on the part sequences; descending-lex equals the
    // reverse-lexicographic enumeration order used for output sorting.
    std::strong_ordering operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);     // strips zeros, keeps order

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct LAdicExpansion {
    Partition lambda0;   // l-restricted part
    Partition lambda1;
    int l = 2;
};

// Transpose: lambda'_j = #{ i : lambda_i >= j }. Involutive.
Partition conjugate(const Partition& lambda);

// All |lambda| hook lengths, sorted descending (canonical multiset form).
std::vector<int> hook_lengths(const Partition& lambda);

// Number of hook lengths divisible by l; the hook-side route to the
// l-weight, kept separate from the abacus so the two can be compared.
int count_hooks_divisible(const Partition& lambda, int l);

bool is_l_restricted(const Partition& lambda, int l);
bool is_l_regular(const Partition& lambda, int l);
bool is_l_parabolic(const Composition& lambda, int l);

// lambda dominance-below mu: every prefix sum of lambda is <= the one of mu.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// All partitions of n exactly once, reverse-lexicographic (descending lex).
std::vector<Partition> enumerate_partitions(int n);

// Unique decomposition lambda = lambda0 + l * lambda1, computed bottom-up:
// with lambda0[k+1] := 0 below the last row,
//   lambda0[i] := lambda0[i+1] + ((lambda[i] - lambda0[i+1]) mod l)
//   lambda1[i] := (lambda[i] - lambda0[i]) / l.
// Requires l >= 2. Throws internal_error if lambda1 fails to be a partition.
LAdicExpansion l_adic_expansion(const Partition& lambda, int l);

// Canonical l-parabolic partition (l^{|lambda1|}, 1^{|lambda0|}).
Partition rho(const Partition& lambda, int l);

// The partition (l^a, 1^s), parts sorted decreasingly.
Partition parabolic_partition(int l, int a, int s);

} // namespace hecke
