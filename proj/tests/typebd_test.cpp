#include <doctest.h>

#include "hecke/textio.hpp"
#include "hecke/typebd.hpp"

using namespace hecke;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

} // namespace

TEST_CASE("f_D invertibility") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(f_D_invertible(n, 3));
        CHECK(f_D_invertible(n, 5));
    }
    CHECK_FALSE(f_D_invertible(3, 4));    // q^2 = -1
    CHECK(f_D_invertible(2, 4));
    CHECK(f_D_invertible(1, 2));
    CHECK_FALSE(f_D_invertible(2, 2));    // q = -1 kills 1 + q
}

TEST_CASE("f_B invertibility") {
    for (int n = 1; n <= 6; ++n)
        for (int l = 2; l <= 6; ++l)
            CHECK_FALSE(f_B_invertible(n, l, QSpec{-1, 0}));   // i = 0 factor
    CHECK_FALSE(f_B_invertible(2, 2, QSpec{1, 0}));
    CHECK(f_B_invertible(2, 3, QSpec{1, 1}));
    CHECK(f_B_invertible(1, 2, QSpec{1, 0}));                  // only i = 0: 1 + 1
    CHECK_FALSE(f_B_invertible(1, 2, QSpec{1, 1}));            // Q = -1, factor Q + 1

    SUBCASE("power is reduced mod l") {
        CHECK(f_B_invertible(2, 3, QSpec{1, 4}) == f_B_invertible(2, 3, QSpec{1, 1}));
        CHECK(f_B_invertible(3, 5, QSpec{-1, 7}) == f_B_invertible(3, 5, QSpec{-1, 2}));
    }
}

TEST_CASE("closed forms agree with the cyclotomic evaluation oracle") {
    for (int l = 2; l <= 12; ++l)
        for (int n = 1; n <= 14; ++n) {
            CHECK(f_D_invertible(n, l) == f_D_invertible_eval(n, l));
            for (int m = 0; m < l; ++m)
                for (int sign : {1, -1}) {
                    const QSpec Q{sign, m};
                    CHECK(f_B_invertible(n, l, Q) == f_B_invertible_eval(n, l, Q));
                }
        }
}

TEST_CASE("morita component") {
    CHECK(morita_component(Bipartition{P({2, 1}), P({1})}) == 3);
    CHECK(morita_component(Bipartition{P({}), P({6})}) == 0);
    CHECK(morita_component(Bipartition{P({6}), P({})}) == 6);

    SUBCASE("component determines the size split") {
        const int n = 6;
        for (int j = 0; j <= n; ++j) {
            const Bipartition b{P(j ? std::vector<int>{j} : std::vector<int>{}),
                                P(n - j ? std::vector<int>{n - j} : std::vector<int>{})};
            CHECK(morita_component(b) == j);
        }
    }
}

TEST_CASE("type B Young complexity") {
    const QSpec good{1, 1};
    const Bipartition b{P({3, 1}), P({2})};
    CHECK(typeB_young_complexity(b, 3, good).complexity == 0);   // both 3-restricted
    CHECK(typeB_young_complexity(Bipartition{P({4, 1}), P({3})}, 3, good).complexity == 2);
    CHECK(typeB_young_complexity(Bipartition{P({6}), P({3})}, 3, good).complexity == 3);
    CHECK(typeB_young_complexity(Bipartition{P({6}), P({})}, 3, good).complexity == 2);

    CHECK_THROWS_AS(typeB_young_complexity(b, 2, QSpec{-1, 0}), precondition_error);
    CHECK_THROWS_WITH_AS(typeB_young_complexity(Bipartition{P({1}), P({})}, 2, QSpec{-1, 0}),
                         doctest::Contains("Q + q^0"), precondition_error);

    SUBCASE("bounded by floor(n/l) across all bipartitions") {
        for (int n = 0; n <= 12; ++n)
            for (int j = 0; j <= n; ++j)
                for (const Partition& left : enumerate_partitions(j))
                    for (const Partition& right : enumerate_partitions(n - j))
                        for (int l : {2, 3}) {
                            const QSpec Q{1, 1};
                            if (!f_B_invertible(std::max(n, 1), l, Q))
                                continue;
                            const Bipartition bp{left, right};
                            CHECK(typeB_young_complexity(bp, l, Q).complexity <= n / l);
                        }
    }
}

TEST_CASE("trivial complexity for types B and D") {
    CHECK(typeBD_trivial_complexity(7, 3, ClassicalType::D) == 2);
    CHECK(typeBD_trivial_complexity(2, 3, ClassicalType::D) == 0);
    CHECK(typeBD_trivial_complexity(6, 3, ClassicalType::B, QSpec{1, 1}) == 2);
    CHECK_THROWS_AS(typeBD_trivial_complexity(6, 3, ClassicalType::B), precondition_error);
    CHECK_THROWS_AS(typeBD_trivial_complexity(4, 2, ClassicalType::D), precondition_error);
    CHECK_THROWS_AS(typeBD_trivial_complexity(2, 2, ClassicalType::B, QSpec{1, 0}),
                    precondition_error);

    SUBCASE("matches the type B Young complexity of ((n), empty)") {
        for (int n = 1; n <= 12; ++n)
            for (int l = 2; l <= 5; ++l)
                for (int m = 0; m < l; ++m) {
                    const QSpec Q{1, m};
                    if (!f_B_invertible(n, l, Q))
                        continue;
                    const Bipartition trivial{P({n}), P({})};
                    CHECK(typeB_young_complexity(trivial, l, Q).complexity ==
                          typeBD_trivial_complexity(n, l, ClassicalType::B, Q));
                }
    }
}

TEST_CASE("type D Clifford complexity") {
    CHECK(typeD_clifford_complexity(P({2}), P({2}), 2) == 2);
    CHECK(typeD_clifford_complexity(P({2, 1}), P({1, 1, 1}), 2) == 0);
    CHECK(typeD_clifford_complexity(P({3}), P({1, 1, 1}), 3) == 1);
    CHECK_THROWS_AS(typeD_clifford_complexity(P({2}), P({1}), 2), precondition_error);
}

TEST_CASE("QSpec text forms") {
    CHECK(parse_qspec("+q^2").sign == 1);
    CHECK(parse_qspec("+q^2").power == 2);
    CHECK(parse_qspec("-q^0").sign == -1);
    CHECK(parse_qspec("-q^0").power == 0);
    CHECK(parse_qspec("q").power == 1);
    CHECK(parse_qspec("-1").power == 0);
    CHECK(parse_qspec("1").sign == 1);
    CHECK(format_qspec(QSpec{-1, 3}) == "-q^3");
    CHECK(format_qspec(parse_qspec("+q^2")) == "+q^2");
    CHECK_THROWS_AS(parse_qspec("q^"), usage_error);
    CHECK_THROWS_AS(parse_qspec("2q"), usage_error);
    CHECK_THROWS_AS(parse_qspec(""), usage_error);
}
