#pragma once

#include <optional>
#include <vector>

#include "hecke/partition.hpp"
#include "hecke/polynomial.hpp"

/*
  Homological invariants at a primitive l-th root of unity, reduced to
  closed-form combinatorics:

  - complexity of the trivial module in degree d is floor(d / l), the
    Krull dimension of the cohomology ring;
  - permutation modules: sum of floor(lambda_i / l);
  - Young modules: |lambda1| from the l-adic expansion, with Young vertex
    the parabolic rho(lambda) = (l^{|lambda1|}, 1^{|lambda0|});
  - blocks: classified by the l-core, of weight w, with every complexity
    in {0, ..., w} realized by some Young module and w bounding the
    complexity of every module in the block;
  - Specht vertices (l prime): a parabolic (l^a, 1^{d-al}) with
    wt_l lambda - sum_{r>=2} wt_{l^r}|core_{l^r} lambda| <= a <= wt_l lambda,
    pinned exactly whenever |lambda| < l^2;
  - the cohomology ring of a Young subalgebra: invariants of a tensor
    power of the rank-one ring on one even generator of degree 2l - 2 and
    one odd generator of degree 2l - 3 (a single polynomial generator of
    degree 1 when l = 2), whose Hilbert series this module computes.

  Support varieties appear only through their canonical parabolic datum
  (l^a, 1^s) and dimension a; complexity equals that dimension.
*/

namespace hecke {

// Canonical form of a support variety: the defining parabolic (l^a, 1^s)
// inside degree d = a*l + s, of dimension a.
struct SupportDatum {
    int d = 0;
    int l = 2;
    int a = 0;
    int s = 0;
    int dim = 0;

    Partition parabolic() const { return parabolic_partition(l, a, s); }
    bool operator==(const SupportDatum&) const = default;
};

struct BlockDescriptor {
    Partition core;
    int weight = 0;
    Partition rho_max;      // (l^w, 1^{d - lw})

    bool operator==(const BlockDescriptor&) const = default;
};

struct VertexBounds {
    int a_min = 0;
    int a_max = 0;
    bool exact = false;
    std::optional<Partition> vertex;   // present iff exact
};

struct PoincareSpec {
    int l = 2;
    int even_generator_degree = 2;     // 2l - 2
    int odd_generator_degree = 1;      // 2l - 3; a plain degree-1 generator when l = 2
    int m = 0;                         // tensor multiplicity sum floor(lambda_i / l)
};

int trivial_complexity(int d, int l);                       // floor(d/l), l >= 2

struct PermComplexity {
    int complexity = 0;
    SupportDatum support;
};
PermComplexity perm_module_complexity(const Composition& lambda, int l);

struct YoungComplexity {
    int complexity = 0;
    Partition rho;
    SupportDatum support;
};
YoungComplexity young_module_complexity(const Partition& lambda, int l);

bool is_young_projective(const Partition& lambda, int l);

// Complexity one via the l-adic expansion, cross-checked against the
// shape test lambda = (mu_1 + l, mu_2, ...) with mu l-restricted; the two
// must agree or internal_error is thrown.
bool has_complexity_one(const Partition& lambda, int l);

BlockDescriptor block_descriptor(const Partition& lambda, int l);

// Same l-core at equal size; sizes must match.
bool same_block(const Partition& lambda, const Partition& mu, int l);

struct Block {
    BlockDescriptor descriptor;
    std::vector<Partition> members;           // reverse-lexicographic
    std::vector<int> young_complexities;      // aligned with members
};

// All partitions of d grouped by l-core, blocks sorted by descending-lex
// core. Throws verification_error if some block misses a complexity in
// {0, ..., w}.
std::vector<Block> blocks_of(int d, int l);

struct BlockBound {
    int bound = 0;            // the weight w of lambda's block
    SupportDatum support;     // block support, a = w
};
BlockBound block_complexity_bound(const Partition& lambda, int l);

// The parabolic (l^{wt_l lambda}, 1^{|core_l lambda|}) relative to which
// every module of lambda's block is projective.
Partition specht_relative_vertex_upper(const Partition& lambda, int l);

VertexBounds specht_vertex_bounds(const Partition& lambda, int l);   // l prime

PoincareSpec poincare_spec(const Composition& lambda, int l);

// Hilbert series of the invariant ring, coefficients of degrees
// 0..degree_bound. Per part of multiplicity m: the u^m coefficient of
//   prod_{a>=0} (1 - u t^{a(2l-2)})^{-1} (1 + u t^{a(2l-2)+(2l-3)})
// for l > 2, and of prod_{a>=0} (1 - u t^a)^{-1} for l = 2; factors
// combine multiplicatively across parts.
IntPolynomial poincare_series(const Composition& lambda, int l, int degree_bound);

// Independent route: explicit enumeration of monomial multisets, even
// monomials with repetition and odd monomials pairwise distinct.
IntPolynomial poincare_series_bruteforce(const Composition& lambda, int l, int degree_bound);

int support_dim(const Composition& lambda, int l);          // sum floor(lambda_i / l)

} // namespace hecke
