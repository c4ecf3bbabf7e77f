#include "hecke/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hecke/abacus.hpp"

namespace hecke {

namespace {

void require_l(int l, const char* where) {
    if (l < 2)
        throw precondition_error(std::string(where) + ": l must be >= 2");
}

SupportDatum support_from_parts(int d, int l, int a) {
    SupportDatum datum;
    datum.d = d;
    datum.l = l;
    datum.a = a;
    datum.s = d - l * a;
    datum.dim = a;
    if (datum.s < 0)
        throw internal_error("support datum with negative 1-part count");
    return datum;
}

bool is_prime(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

int trivial_complexity(int d, int l) {
    require_l(l, "trivial_complexity");
    if (d < 0)
        throw precondition_error("trivial_complexity: d must be >= 0");
    return d / l;
}

PermComplexity perm_module_complexity(const Composition& lambda, int l) {
    require_l(l, "perm_module_complexity");
    int complexity = 0;
    for (int part : lambda.parts())
        complexity += part / l;
    return {complexity, support_from_parts(lambda.size(), l, complexity)};
}

YoungComplexity young_module_complexity(const Partition& lambda, int l) {
    const LAdicExpansion expansion = l_adic_expansion(lambda, l);
    const int complexity = expansion.lambda1.size();
    YoungComplexity result;
    result.complexity = complexity;
    result.rho = parabolic_partition(l, complexity, expansion.lambda0.size());
    result.support = support_from_parts(lambda.size(), l, complexity);
    return result;
}

bool is_young_projective(const Partition& lambda, int l) {
    const bool restricted = is_l_restricted(lambda, l);
    if (restricted != (young_module_complexity(lambda, l).complexity == 0))
        throw internal_error("is_young_projective: restrictedness disagrees with complexity 0");
    return restricted;
}

bool has_complexity_one(const Partition& lambda, int l) {
    const bool by_expansion = young_module_complexity(lambda, l).complexity == 1;

    // Shape route: lambda = (mu_1 + l, mu_2, ...) with mu l-restricted.
    bool by_shape = false;
    if (!lambda.empty() && lambda.row(1) >= l) {
        std::vector<int> mu = lambda.parts();
        mu[0] -= l;
        const bool decreasing = mu.size() < 2 || mu[0] >= mu[1];
        const bool positive_tail = mu[0] > 0 || mu.size() == 1;
        if (decreasing && positive_tail)
            by_shape = is_l_restricted(Partition(std::move(mu)), l);
    }

    if (by_expansion != by_shape)
        throw internal_error("has_complexity_one: expansion and shape tests disagree");
    return by_expansion;
}

BlockDescriptor block_descriptor(const Partition& lambda, int l) {
    require_l(l, "block_descriptor");
    BlockDescriptor descriptor;
    descriptor.core = l_core(lambda, l);
    descriptor.weight = l_weight(lambda, l);
    descriptor.rho_max = parabolic_partition(l, descriptor.weight,
                                             lambda.size() - l * descriptor.weight);
    return descriptor;
}

bool same_block(const Partition& lambda, const Partition& mu, int l) {
    require_l(l, "same_block");
    if (lambda.size() != mu.size())
        throw precondition_error("same_block: partitions must have equal size");
    return l_core(lambda, l) == l_core(mu, l);
}

std::vector<Block> blocks_of(int d, int l) {
    require_l(l, "blocks_of");
    // Keyed by core; descending-lex core order for the output.
    std::map<Partition, Block, std::greater<Partition>> by_core;
    for (const Partition& lambda : enumerate_partitions(d)) {
        const BlockDescriptor descriptor = block_descriptor(lambda, l);
        auto [it, inserted] = by_core.try_emplace(descriptor.core);
        if (inserted)
            it->second.descriptor = descriptor;
        else if (it->second.descriptor.weight != descriptor.weight)
            throw internal_error("blocks_of: one core with two weights");
        it->second.members.push_back(lambda);
        it->second.young_complexities.push_back(young_module_complexity(lambda, l).complexity);
    }
    std::vector<Block> blocks;
    blocks.reserve(by_core.size());
    for (auto& [core, block] : by_core) {
        std::set<int> seen(block.young_complexities.begin(), block.young_complexities.end());
        for (int c = 0; c <= block.descriptor.weight; ++c) {
            if (!seen.count(c))
                throw verification_error("block of weight " +
                                         std::to_string(block.descriptor.weight) +
                                         " misses Young complexity " + std::to_string(c));
        }
        if (!seen.empty() && (*seen.begin() < 0 || *seen.rbegin() > block.descriptor.weight))
            throw verification_error("block complexity outside {0..w}");
        blocks.push_back(std::move(block));
    }
    return blocks;
}

BlockBound block_complexity_bound(const Partition& lambda, int l) {
    const BlockDescriptor descriptor = block_descriptor(lambda, l);
    BlockBound bound;
    bound.bound = descriptor.weight;
    bound.support = support_from_parts(lambda.size(), l, descriptor.weight);
    return bound;
}

Partition specht_relative_vertex_upper(const Partition& lambda, int l) {
    require_l(l, "specht_relative_vertex_upper");
    return parabolic_partition(l, l_weight(lambda, l), l_core(lambda, l).size());
}

VertexBounds specht_vertex_bounds(const Partition& lambda, int l) {
    if (!is_prime(l))
        throw precondition_error("specht_vertex_bounds: l = " + std::to_string(l) +
                                 " is not prime");
    VertexBounds bounds;
    bounds.a_max = l_weight(lambda, l);
    int correction = 0;
    // Powers beyond |lambda| contribute wt 0 and are dropped.
    for (long long power = static_cast<long long>(l) * l; power <= lambda.size(); power *= l) {
        const int lr = static_cast<int>(power);
        correction += l_core(lambda, lr).size() / lr;
    }
    bounds.a_min = std::max(0, bounds.a_max - correction);
    const bool small = static_cast<long long>(lambda.size()) < static_cast<long long>(l) * l;
    bounds.exact = bounds.a_min == bounds.a_max || small;
    if (bounds.exact)
        bounds.vertex = parabolic_partition(l, bounds.a_max, l_core(lambda, l).size());
    return bounds;
}

PoincareSpec poincare_spec(const Composition& lambda, int l) {
    require_l(l, "poincare_spec");
    PoincareSpec spec;
    spec.l = l;
    spec.even_generator_degree = 2 * l - 2;
    spec.odd_generator_degree = 2 * l - 3;
    spec.m = 0;
    for (int part : lambda.parts())
        spec.m += part / l;
    return spec;
}

namespace {

// Coefficient of u^m in the generating product, everything truncated at
// t-degree bound. Series slots are indexed by u-degree.
IntPolynomial invariant_factor_series(int l, int m, int bound) {
    std::vector<IntPolynomial> by_u(m + 1);
    by_u[0] = IntPolynomial::constant(1);

    const int even_step = l == 2 ? 1 : 2 * l - 2;
    // Even monomials x^a: degree a * even_step, unlimited repetition.
    // (1 - u t^g)^{-1} applied through new[u] = old[u] + t^g * new[u-1],
    // so ascending u reuses the already-updated slot below.
    for (int degree = 0; degree <= bound; degree += even_step) {
        for (int u = 1; u <= m; ++u) {
            if (by_u[u - 1].is_zero())
                continue;
            by_u[u] += (by_u[u - 1] * IntPolynomial::monomial(1, degree)).truncated(bound);
            by_u[u] = by_u[u].truncated(bound);
        }
    }
    if (l > 2) {
        // Odd monomials x^a y: degree a(2l-2) + (2l-3), each at most once.
        const int odd_offset = 2 * l - 3;
        for (int degree = odd_offset; degree <= bound; degree += even_step) {
            for (int u = m; u >= 1; --u) {
                if (by_u[u - 1].is_zero())
                    continue;
                by_u[u] += (by_u[u - 1] * IntPolynomial::monomial(1, degree)).truncated(bound);
                by_u[u] = by_u[u].truncated(bound);
            }
        }
    }
    return by_u[m];
}

} // namespace

IntPolynomial poincare_series(const Composition& lambda, int l, int degree_bound) {
    require_l(l, "poincare_series");
    if (degree_bound < 0)
        throw precondition_error("poincare_series: degree bound must be >= 0");
    IntPolynomial series = IntPolynomial::constant(1);
    for (int part : lambda.parts()) {
        const int m = part / l;
        if (m == 0)
            continue;
        series *= invariant_factor_series(l, m, degree_bound);
        series = series.truncated(degree_bound);
    }
    return series;
}

namespace {

// Degree counts for multisets of exactly m factor monomials.
void enumerate_multisets(const std::vector<int>& even_degrees,
                         const std::vector<int>& odd_degrees,
                         int m, int bound, size_t even_from, size_t odd_from,
                         int total, std::vector<Int>& counts) {
    if (m == 0) {
        counts[total] += 1;
        return;
    }
    for (size_t i = even_from; i < even_degrees.size(); ++i) {
        const int next = total + even_degrees[i];
        if (next > bound)
            break;
        enumerate_multisets(even_degrees, odd_degrees, m - 1, bound, i,
                            odd_from, next, counts);
    }
    for (size_t i = odd_from; i < odd_degrees.size(); ++i) {
        const int next = total + odd_degrees[i];
        if (next > bound)
            break;
        // Odd monomials are pairwise distinct: advance past i, and keep
        // evens out of later slots so each multiset is built once.
        enumerate_multisets(even_degrees, odd_degrees, m - 1, bound,
                            even_degrees.size(), i + 1, next, counts);
    }
}

} // namespace

IntPolynomial poincare_series_bruteforce(const Composition& lambda, int l, int degree_bound) {
    require_l(l, "poincare_series_bruteforce");
    if (degree_bound < 0)
        throw precondition_error("poincare_series_bruteforce: degree bound must be >= 0");

    std::vector<Int> series(degree_bound + 1, Int(0));
    series[0] = 1;
    for (int part : lambda.parts()) {
        const int m = part / l;
        if (m == 0)
            continue;

        std::vector<int> even_degrees, odd_degrees;
        const int even_step = l == 2 ? 1 : 2 * l - 2;
        for (int degree = 0; degree <= degree_bound; degree += even_step)
            even_degrees.push_back(degree);
        if (l > 2)
            for (int degree = 2 * l - 3; degree <= degree_bound; degree += 2 * l - 2)
                odd_degrees.push_back(degree);

        std::vector<Int> factor(degree_bound + 1, Int(0));
        enumerate_multisets(even_degrees, odd_degrees, m, degree_bound, 0, 0, 0, factor);

        // Truncated convolution, kept separate from IntPolynomial on purpose.
        std::vector<Int> next(degree_bound + 1, Int(0));
        for (int i = 0; i <= degree_bound; ++i) {
            if (series[i] == 0)
                continue;
            for (int j = 0; i + j <= degree_bound; ++j)
                next[i + j] += series[i] * factor[j];
        }
        series = std::move(next);
    }
    return IntPolynomial(std::move(series));
}

int support_dim(const Composition& lambda, int l) {
    require_l(l, "support_dim");
    int dim = 0;
    for (int part : lambda.parts())
        dim += part / l;
    return dim;
}

} // namespace hecke
