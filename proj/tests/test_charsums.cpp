#include <doctest.h>

#include <array>

#include "fwcodes/charsums.hpp"

using namespace fwcodes;

TEST_CASE("cyclotomic integers canonicalize through the all-ones relation") {
    // 1 + zeta + zeta^2 = 0 for p = 3
    CHECK(CycInt::from_counts(3, {1, 1, 1}) == CycInt(3));
    CHECK(CycInt::from_counts(3, {5, 5, 5}) == CycInt(3));
    CHECK(CycInt::from_counts(3, {2, 1, 1}) == CycInt::integer(3, 1));
    CHECK(CycInt::integer(3, 7).is_rational());
    CHECK(CycInt::integer(3, 7).rational_value() == 7);
    CHECK_FALSE(CycInt::from_counts(3, {0, 1, 0}).is_rational());
    CHECK_THROWS_AS(CycInt::from_counts(3, {0, 1, 0}).rational_value(), NonRationalOmegaError);
    // p = 2: zeta = -1, everything rational
    CHECK(CycInt::from_counts(2, {3, 1}) == CycInt::integer(2, 2));
}

TEST_CASE("cyclotomic multiplication") {
    // zeta * zeta^2 = 1 for p = 3
    CycInt z = CycInt::from_counts(3, {0, 1, 0});
    CycInt z2 = CycInt::from_counts(3, {0, 0, 1});
    CHECK(z * z2 == CycInt::integer(3, 1));
    // (1 + zeta)(1 + zeta^2) = 1 + zeta + zeta^2 + 1 = 1
    CycInt a = CycInt::integer(3, 1) + z;
    CycInt b = CycInt::integer(3, 1) + z2;
    CHECK(a * b == CycInt::integer(3, 1));
    // norm of 1 - zeta for p = 5 is 5: (1-z)(1-z^2)(1-z^3)(1-z^4) = 5
    auto zeta5 = [&](uint32_t e) {
        std::vector<long long> c(5, 0);
        c[e] = 1;
        return CycInt::from_counts(5, c);
    };
    CycInt prod = CycInt::integer(5, 1);
    for (uint32_t e = 1; e <= 4; ++e) prod = prod * (CycInt::integer(5, 1) - zeta5(e));
    CHECK(prod == CycInt::integer(5, 5));
    // addition and multiplication stay inside Z[zeta]: spot associativity
    CHECK((z + z2) * a == z * a + z2 * a);
}

TEST_CASE("char_sum basics") {
    auto t = FieldTower::build(3, 1, 2);
    auto dA = build_delta(t, ComplexSpec(2, {1}));
    CHECK(char_sum(t, dA, 0) == CycInt::integer(3, static_cast<long long>(dA.size())));
    // Lemma 2 both cases, exhaustively
    auto dual = build_dual(t, ComplexSpec(2, {1}));
    for (uint64_t y = 0; y < t.qm(); ++y) {
        CycInt got = char_sum(t, dA, y);
        if (dual.contains(y))
            CHECK(got == CycInt::integer(3, 3));
        else
            CHECK(got == CycInt(3));
    }
}

TEST_CASE("lemma 2 holds for every support set") {
    for (auto psm : {std::array<uint32_t, 3>{2, 1, 4}, {3, 1, 3}, {2, 2, 2}}) {
        auto [p, s, m] = psm;
        auto t = FieldTower::build(p, s, m);
        for (uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<uint32_t> sup;
            for (uint32_t i = 0; i < m; ++i)
                if (mask & (1u << i)) sup.push_back(i + 1);
            auto rep = verify_lemma2(t, ComplexSpec(m, sup));
            CHECK(rep.pass());
            CHECK(rep.checked == t.qm());
        }
    }
}

TEST_CASE("displayed case evaluations of the three sums") {
    {
        auto t = FieldTower::build(2, 1, 4);
        auto rep = verify_sum_identities(t, ComplexSpec(4, {1}), ComplexSpec(4, {1, 2}), ComplexSpec(4, {1}));
        CHECK(rep.pass());
        CHECK(rep.checked == 3 * t.qm());  // q = 2: one unit scalar
    }
    {
        // B' empty: its dual is everything, so the last case of eq (5) never shows
        auto t = FieldTower::build(3, 1, 3);
        auto rep = verify_sum_identities(t, ComplexSpec(3, {1}), ComplexSpec(3, {1, 2}), ComplexSpec(3, {}));
        CHECK(rep.pass());
    }
    {
        // tower with s > 1: the character runs through Tr_p^q
        auto t = FieldTower::build(2, 2, 2);
        auto rep = verify_sum_identities(t, ComplexSpec(2, {2}), ComplexSpec(2, {1, 2}), ComplexSpec(2, {1}));
        CHECK(rep.pass());
    }
    {
        // deterministic sampling path, forced by a tiny threshold
        auto t = FieldTower::build(2, 1, 4);
        auto rep = verify_sum_identities(t, ComplexSpec(4, {1}), ComplexSpec(4, {1, 2}), ComplexSpec(4, {2}),
                                         /*sample_threshold=*/4, /*samples=*/200);
        CHECK(rep.pass());
        CHECK(rep.checked == 3 * 200);
    }
}

TEST_CASE("omega identity on single messages") {
    auto t = FieldTower::build(2, 1, 3);
    auto L = build_defining_set(t, 1, ComplexSpec(3, {1}), ComplexSpec(3, {1, 2}), ComplexSpec(3, {}));
    auto zero = omega_check(t, L, 0, 0);
    CHECK(zero.pass);
    CHECK(zero.lee == 0);
    CHECK(zero.omega == BigInt(2) * BigInt(static_cast<unsigned long long>(L.n)));
    auto some = omega_check(t, L, 3, 5);
    CHECK(some.pass);
}

TEST_CASE("omega identity exhaustive at small scale") {
    // q = 2, m = 3, family 1
    auto t2 = FieldTower::build(2, 1, 3);
    auto L1 = build_defining_set(t2, 1, ComplexSpec(3, {1}), ComplexSpec(3, {1, 2}), ComplexSpec(3, {}));
    auto rep1 = omega_check_all(t2, L1);
    CHECK(rep1.pass());
    CHECK(rep1.checked == 64);  // all q^{2m} messages
    // q = 3, m = 2, family 3: all 81 messages
    auto t3 = FieldTower::build(3, 1, 2);
    auto L3 = build_defining_set(t3, 3, ComplexSpec(2, {1}), ComplexSpec(2, {1}), ComplexSpec(2, {}));
    auto rep3 = omega_check_all(t3, L3);
    CHECK(rep3.pass());
    CHECK(rep3.checked == 81);  // all q^{2m} messages
    // the budget guard
    auto big = FieldTower::build(2, 1, 6);
    auto Lbig = build_defining_set(big, 1, ComplexSpec(6, {1}), ComplexSpec(6, {1, 2}), ComplexSpec(6, {}));
    CHECK_THROWS_AS(omega_check_all(big, Lbig, 32), BudgetExceededError);
}
