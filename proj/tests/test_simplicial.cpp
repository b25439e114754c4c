#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "fwcodes/bigint.hpp"
#include "fwcodes/simplicial.hpp"

using namespace fwcodes;

namespace {

std::set<uint32_t> support_of(const FieldTower& t, uint64_t code) {
    std::set<uint32_t> s;
    auto coords = t.fqm_coords(code);
    for (uint32_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) s.insert(i + 1);
    }
    return s;
}

std::vector<uint32_t> range1(uint32_t n) {
    std::vector<uint32_t> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

std::vector<ComplexSpec> all_subsets(uint32_t m) {
    std::vector<ComplexSpec> out;
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<uint32_t> sup;
        for (uint32_t i = 0; i < m; ++i) {
            if (mask & (1u << i)) sup.push_back(i + 1);
        }
        out.emplace_back(m, sup);
    }
    return out;
}

}  // namespace

TEST_CASE("complex spec validation") {
    CHECK_THROWS_AS(ComplexSpec(3, {0}), OutOfRangeError);
    CHECK_THROWS_AS(ComplexSpec(3, {4}), OutOfRangeError);
    CHECK_THROWS_AS(ComplexSpec(3, {1, 1}), OutOfRangeError);
    ComplexSpec s(3, {3, 1});
    CHECK(s.support == std::vector<uint32_t>{1, 3});  // sorted
}

TEST_CASE("delta spans") {
    auto t = FieldTower::build(2, 1, 3);
    CHECK(build_delta(t, ComplexSpec(3, {})).points == std::vector<uint64_t>{0});
    auto d12 = build_delta(t, ComplexSpec(3, {1, 2}));
    CHECK(d12.points == std::vector<uint64_t>{0, 1, 2, 3});  // 0, a1, a2, a1+a2
    auto full = build_delta(t, ComplexSpec(3, range1(3)));
    CHECK(full.size() == 8);
    CHECK_THROWS_AS(build_delta(t, ComplexSpec(4, {1})), DimensionMismatchError);
}

TEST_CASE("delta is closed under support shrinking") {
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 3}}) {
        auto t = FieldTower::build(p, 1, m);
        for (const auto& A : all_subsets(m)) {
            auto dA = build_delta(t, A);
            CHECK(dA.size() == BigInt::pow(BigInt(p), A.size()).as_u64());
            CHECK(dA.contains(0));
            for (uint64_t u : dA.points) {
                auto sup_u = support_of(t, u);
                CHECK(std::includes(A.support.begin(), A.support.end(), sup_u.begin(), sup_u.end()));
                // every v covered by u stays inside
                for (uint64_t v = 0; v < t.qm(); ++v) {
                    auto sup_v = support_of(t, v);
                    if (std::includes(sup_u.begin(), sup_u.end(), sup_v.begin(), sup_v.end()))
                        CHECK(dA.contains(v));
                }
            }
        }
    }
}

TEST_CASE("dual spans are trace-orthogonal complements") {
    auto t = FieldTower::build(2, 1, 3);
    CHECK(build_dual(t, ComplexSpec(3, range1(3))).points == std::vector<uint64_t>{0});
    CHECK(build_dual(t, ComplexSpec(3, {})).size() == 8);
    auto dual1 = build_dual(t, ComplexSpec(3, {1}));
    CHECK(dual1.size() == 4);
    for (uint64_t v : dual1.points) CHECK(t.trace_qm_to_q(t.mul_m(t.basis()[0], v)) == 0);
    // exhaustively: v is in the dual iff orthogonal to every element of Delta_A
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 2}}) {
        auto tw = FieldTower::build(p, 1, m);
        for (const auto& A : all_subsets(m)) {
            auto dA = build_delta(tw, A);
            auto dual = build_dual(tw, A);
            CHECK(dual.size() * dA.size() == tw.qm());
            for (uint64_t v = 0; v < tw.qm(); ++v) {
                bool orth = std::all_of(dA.points.begin(), dA.points.end(), [&](uint64_t u) {
                    return tw.trace_qm_to_q(tw.mul_m(u, v)) == 0;
                });
                CHECK(orth == dual.contains(v));
            }
        }
    }
}

TEST_CASE("intersection cardinalities match the subspace laws") {
    auto t = FieldTower::build(3, 1, 3);
    for (const auto& A : all_subsets(3)) {
        for (const auto& B : all_subsets(3)) {
            auto dA = build_delta(t, A), dB = build_delta(t, B);
            std::vector<uint64_t> inter;
            std::set_intersection(dA.points.begin(), dA.points.end(), dB.points.begin(), dB.points.end(),
                                  std::back_inserter(inter));
            std::vector<uint32_t> cap;
            std::set_intersection(A.support.begin(), A.support.end(), B.support.begin(), B.support.end(),
                                  std::back_inserter(cap));
            CHECK(inter.size() == BigInt::pow(BigInt(3), cap.size()).as_u64());

            auto uA = build_dual(t, A), uB = build_dual(t, B);
            std::vector<uint64_t> dinter;
            std::set_intersection(uA.points.begin(), uA.points.end(), uB.points.begin(), uB.points.end(),
                                  std::back_inserter(dinter));
            std::vector<uint32_t> cup;
            std::set_union(A.support.begin(), A.support.end(), B.support.begin(), B.support.end(),
                           std::back_inserter(cup));
            CHECK(dinter.size() == BigInt::pow(BigInt(3), 3 - cup.size()).as_u64());
        }
    }
}

TEST_CASE("family set shapes") {
    auto t = FieldTower::build(2, 1, 6);
    ComplexSpec B(6, {1, 2, 3, 4}), Bp(6, {2});
    CHECK(build_family_set(t, SetShape::Difference, B, Bp).size() == 14);  // 16 - 2
    CHECK(build_family_set(t, SetShape::DifferenceComplement, B, Bp).size() == 64 - 14);
    // B = B': empty difference, complement is everything
    CHECK(build_family_set(t, SetShape::Difference, B, B).size() == 0);
    CHECK(build_family_set(t, SetShape::DifferenceComplement, B, B).size() == 64);
    CHECK(build_family_set(t, SetShape::DeltaComplement, ComplexSpec(6, {})).size() == 63);
    CHECK(build_family_set(t, SetShape::Full, ComplexSpec(6, {})).size() == 64);
    CHECK_THROWS_AS(build_family_set(t, SetShape::Difference, Bp, B), NotASubsetError);
}

TEST_CASE("set stats") {
    ComplexSpec A(6, {1, 2, 3, 5}), B(6, {1, 2, 3, 4}), Bp(6, {2});
    SetStats st = set_stats(A, B, Bp);
    CHECK(st == SetStats{4, 4, 1, 5, 4});
    ComplexSpec empty(6, {});
    CHECK(set_stats(empty, B, Bp).ab == 4);  // |A u B| = |B|
    ComplexSpec sub(6, {2}), bigger(6, {1, 2});
    CHECK(set_stats(sub, B, bigger).abp == 2);  // A inside B': |A u B'| = |B'|
    CHECK_THROWS_AS(set_stats(A, Bp, B), NotASubsetError);
}

TEST_CASE("stats classes enumerate exactly the realizable tuples") {
    for (uint32_t m = 1; m <= 4; ++m) {
        auto classes = enumerate_stats_classes(m);
        CHECK(!classes.empty());
        // each class is hit by its representative
        for (const auto& st : classes) {
            auto sets = representative_sets(st, m);
            CHECK(set_stats(sets.A, sets.B, sets.Bp) == st);
        }
        // and the enumeration agrees with brute force over all set triples
        std::set<std::array<uint32_t, 5>> brute;
        for (const auto& A : all_subsets(m)) {
            for (const auto& B : all_subsets(m)) {
                for (const auto& Bp : all_subsets(m)) {
                    if (!Bp.subset_of(B)) continue;
                    auto st = set_stats(A, B, Bp);
                    brute.insert({st.a, st.b, st.bp, st.ab, st.abp});
                }
            }
        }
        CHECK(brute.size() == classes.size());
    }
}
