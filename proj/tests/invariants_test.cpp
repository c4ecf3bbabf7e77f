#include <doctest.h>

#include <set>

#include "hecke/abacus.hpp"
#include "hecke/invariants.hpp"

using namespace hecke;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

IntPolynomial poly(std::vector<long long> coefficients) {
    std::vector<Int> c(coefficients.begin(), coefficients.end());
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("trivial complexity") {
    CHECK(trivial_complexity(6, 3) == 2);
    CHECK(trivial_complexity(1, 2) == 0);
    CHECK(trivial_complexity(5, 2) == 2);
    CHECK_THROWS_AS(trivial_complexity(5, 1), precondition_error);
    CHECK_THROWS_AS(trivial_complexity(-1, 2), precondition_error);
}

TEST_CASE("permutation module complexity") {
    const PermComplexity perm = perm_module_complexity(Composition({4, 2, 1}), 2);
    CHECK(perm.complexity == 3);
    CHECK(perm.support == SupportDatum{7, 2, 3, 1, 3});
    CHECK(perm.support.parabolic() == P({2, 2, 2, 1}));

    const std::vector<int> ones(9, 1);
    CHECK(perm_module_complexity(Composition(ones), 4).complexity == 0);
    CHECK(perm_module_complexity(Composition({7}), 3).complexity ==
          trivial_complexity(7, 3));
    // composition order does not change the sum
    CHECK(perm_module_complexity(Composition({1, 4, 2}), 2).complexity == 3);
}

TEST_CASE("Young module complexity") {
    const YoungComplexity a = young_module_complexity(P({4, 2, 1}), 2);
    CHECK(a.complexity == 1);
    CHECK(a.rho == P({2, 1, 1, 1, 1, 1}));
    CHECK(a.support.dim == 1);

    const YoungComplexity b = young_module_complexity(P({5}), 2);
    CHECK(b.complexity == 2);
    CHECK(b.rho == P({2, 2, 1}));

    for (const Partition& lambda : enumerate_partitions(8))
        if (is_l_restricted(lambda, 3))
            CHECK(young_module_complexity(lambda, 3).complexity == 0);
}

TEST_CASE("young projectivity and complexity one") {
    CHECK(is_young_projective(P({2, 2, 1}), 2));
    CHECK_FALSE(is_young_projective(P({3, 1}), 2));
    CHECK(is_young_projective(P({}), 2));

    CHECK(has_complexity_one(P({3, 1}), 2));
    CHECK_FALSE(has_complexity_one(P({5}), 2));
    CHECK_FALSE(has_complexity_one(P({2, 2, 1}), 2));
    CHECK(has_complexity_one(P({2}), 2));        // (2) = (0) + 2*(1)
    CHECK(has_complexity_one(P({5, 1}), 4));     // (5,1) = (1,1) + 4*(1)
    CHECK_FALSE(has_complexity_one(P({2, 2}), 4)); // (2,2) is 4-restricted

    // the two routes agree everywhere in range (would throw otherwise)
    for (int n = 0; n <= 12; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int l : {2, 3})
                has_complexity_one(lambda, l);
}

TEST_CASE("block descriptor and same_block") {
    const BlockDescriptor a = block_descriptor(P({4, 1}), 2);
    CHECK(a.core == P({2, 1}));
    CHECK(a.weight == 1);
    CHECK(a.rho_max == P({2, 1, 1, 1}));

    const BlockDescriptor b = block_descriptor(P({2, 1}), 2);
    CHECK(b.core == P({2, 1}));
    CHECK(b.weight == 0);
    CHECK(b.rho_max == P({1, 1, 1}));

    const BlockDescriptor c = block_descriptor(P({5}), 2);
    CHECK(c.core == P({1}));
    CHECK(c.weight == 2);
    CHECK(c.rho_max == P({2, 2, 1}));

    CHECK(same_block(P({4, 1}), P({2, 1, 1, 1}), 2));
    CHECK_FALSE(same_block(P({4, 1}), P({3, 2}), 2));
    CHECK(same_block(P({3, 2}), P({3, 2}), 2));
    CHECK_THROWS_AS(same_block(P({3}), P({2}), 2), precondition_error);

    SUBCASE("same_block is an equivalence relation") {
        const auto all = enumerate_partitions(7);
        for (const Partition& x : all) {
            CHECK(same_block(x, x, 2));
            for (const Partition& y : all) {
                CHECK(same_block(x, y, 2) == same_block(y, x, 2));
                for (const Partition& z : all)
                    if (same_block(x, y, 2) && same_block(y, z, 2))
                        CHECK(same_block(x, z, 2));
            }
        }
    }
}

TEST_CASE("blocks_of") {
    const std::vector<Block> blocks = blocks_of(5, 2);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].descriptor.core == P({2, 1}));
    CHECK(blocks[0].descriptor.weight == 1);
    CHECK(blocks[0].members == std::vector<Partition>{P({4, 1}), P({2, 1, 1, 1})});
    CHECK(blocks[0].young_complexities == std::vector<int>{1, 0});
    CHECK(blocks[1].descriptor.core == P({1}));
    CHECK(blocks[1].descriptor.weight == 2);
    CHECK(blocks[1].young_complexities == std::vector<int>{2, 2, 1, 0, 0});

    const std::vector<Block> small = blocks_of(3, 2);
    REQUIRE(small.size() == 2);
    CHECK(small[0].descriptor.core == P({2, 1}));
    CHECK(small[0].descriptor.weight == 0);
    CHECK(small[1].descriptor.core == P({1}));
    CHECK(small[1].descriptor.weight == 1);
    CHECK(small[1].young_complexities == std::vector<int>{1, 0});

    SUBCASE("semisimple range: every block has weight zero") {
        for (const Block& block : blocks_of(3, 5)) {
            CHECK(block.descriptor.weight == 0);
            CHECK(block.young_complexities == std::vector<int>{0});
        }
    }

    SUBCASE("coverage and bounds across the range") {
        for (int d = 0; d <= 12; ++d)
            for (int l : {2, 3}) {
                size_t total = 0;
                for (const Block& block : blocks_of(d, l)) {
                    total += block.members.size();
                    const std::set<int> seen(block.young_complexities.begin(),
                                             block.young_complexities.end());
                    for (int c = 0; c <= block.descriptor.weight; ++c)
                        CHECK(seen.count(c) == 1);
                    for (size_t i = 0; i < block.members.size(); ++i) {
                        CHECK(block.young_complexities[i] <= block.descriptor.weight);
                        CHECK(block_complexity_bound(block.members[i], l).bound ==
                              block.descriptor.weight);
                    }
                }
                CHECK(total == enumerate_partitions(d).size());
            }
    }
}

TEST_CASE("block complexity bound") {
    CHECK(block_complexity_bound(P({3, 2}), 2).bound == 2);
    CHECK(block_complexity_bound(P({2, 1}), 2).bound == 0);
    CHECK(block_complexity_bound(P({4, 1}), 2).bound == 1);
    CHECK(block_complexity_bound(P({3, 2}), 2).support.dim == 2);

    for (int n = 0; n <= 12; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int l : {2, 3})
                CHECK(young_module_complexity(lambda, l).complexity <=
                      block_complexity_bound(lambda, l).bound);
}

TEST_CASE("relative vertex upper bound") {
    CHECK(specht_relative_vertex_upper(P({3, 2}), 2) == P({2, 2, 1}));
    CHECK(specht_relative_vertex_upper(P({2, 1}), 2) == P({1, 1, 1}));
    CHECK(specht_relative_vertex_upper(P({3, 1}), 2) == P({2, 2}));
}

TEST_CASE("specht vertex bounds") {
    const VertexBounds a = specht_vertex_bounds(P({3, 1}), 2);
    CHECK(a.a_min == 2);
    CHECK(a.a_max == 2);
    CHECK(a.exact);
    CHECK(a.vertex == P({2, 2}));

    const VertexBounds b = specht_vertex_bounds(P({2, 1}), 2);
    CHECK(b.a_min == 0);
    CHECK(b.a_max == 0);
    CHECK(b.exact);
    CHECK(b.vertex == P({1, 1, 1}));

    const VertexBounds c = specht_vertex_bounds(P({2, 2}), 2);
    CHECK(c.a_min == 1);
    CHECK(c.a_max == 2);
    CHECK_FALSE(c.exact);
    CHECK_FALSE(c.vertex.has_value());

    CHECK_THROWS_AS(specht_vertex_bounds(P({3, 1}), 4), precondition_error);
    CHECK_THROWS_AS(specht_vertex_bounds(P({3, 1}), 6), precondition_error);

    for (int n = 0; n <= 12; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int l : {2, 3, 5}) {
                const VertexBounds bounds = specht_vertex_bounds(lambda, l);
                CHECK(bounds.a_min >= 0);
                CHECK(bounds.a_min <= bounds.a_max);
                CHECK(bounds.a_max == l_weight(lambda, l));
                if (n < l * l) {
                    CHECK(bounds.exact);
                    CHECK(bounds.vertex == specht_relative_vertex_upper(lambda, l));
                }
                CHECK(bounds.exact == (bounds.a_min == bounds.a_max));
            }
}

TEST_CASE("poincare spec and series") {
    const PoincareSpec spec = poincare_spec(Composition({3}), 3);
    CHECK(spec.even_generator_degree == 4);
    CHECK(spec.odd_generator_degree == 3);
    CHECK(spec.m == 1);

    // (1 + t^3) / (1 - t^4) truncated at degree 8
    CHECK(poincare_series(Composition({3}), 3, 8) ==
          poly({1, 0, 0, 1, 1, 0, 0, 1, 1}));
    CHECK(poincare_series(Composition({6}), 3, 8) ==
          poly({1, 0, 0, 1, 1, 0, 0, 2, 2}));
    CHECK(poincare_series(Composition({2, 1}), 3, 8) == poly({1}));     // m = 0
    CHECK(poincare_series(Composition(), 5, 4) == poly({1}));

    SUBCASE("l = 2 counts partitions into at most m parts") {
        CHECK(poincare_series(Composition({5}), 2, 5) == poly({1, 1, 2, 2, 3, 3}));
        CHECK(poincare_series(Composition({2}), 2, 6) == poly({1, 1, 1, 1, 1, 1, 1}));
    }

    SUBCASE("generating function matches the multiset enumeration") {
        for (int l : {2, 3, 4})
            for (int m = 0; m <= 3; ++m) {
                const Composition c({m * l});
                CHECK(poincare_series(c, l, 24) == poincare_series_bruteforce(c, l, 24));
            }
        const Composition mixed({3, 7, 1});
        CHECK(poincare_series(mixed, 3, 20) ==
              poincare_series_bruteforce(mixed, 3, 20));
    }

    SUBCASE("partial sums grow like N^m") {
        for (int m : {1, 2, 3}) {
            auto partial = [&](int bound) {
                const IntPolynomial s = poincare_series(Composition({m * 3}), 3, bound);
                Int total = 0;
                for (int e = 0; e <= bound; ++e)
                    total += s.coefficient(e);
                return total;
            };
            const Int at = partial(48), half = partial(24);
            // doubling the window scales the mass by about 2^m
            const Int ratio_floor = at / half;
            CHECK(ratio_floor >= (m == 1 ? 1 : (1 << (m - 1))));
            CHECK(ratio_floor <= (1 << (m + 1)));
        }
    }
}

TEST_CASE("support dimension") {
    CHECK(support_dim(Composition({4, 2, 1}), 2) == 3);
    CHECK(support_dim(Composition({3}), 3) == 1);
    CHECK(support_dim(Composition(std::vector<int>{1, 1, 1, 1, 1, 1}), 3) == 0);
    for (int l : {2, 3}) {
        const Composition c({5, 4, 2});
        CHECK(support_dim(c, l) == perm_module_complexity(c, l).support.dim);
    }
}
