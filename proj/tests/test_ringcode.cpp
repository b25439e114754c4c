#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "fwcodes/ringcode.hpp"

using namespace fwcodes;

namespace {

RingCodeword add_words(const FieldTower& t, const RingCodeword& x, const RingCodeword& y) {
    RingCodeword r;
    r.entries.reserve(x.entries.size());
    for (size_t i = 0; i < x.entries.size(); ++i) {
        r.entries.emplace_back(t.add_q(x.entries[i].first, y.entries[i].first),
                               t.add_q(x.entries[i].second, y.entries[i].second));
    }
    return r;
}

RingCodeword sub_words(const FieldTower& t, const RingCodeword& x, const RingCodeword& y) {
    RingCodeword r;
    r.entries.reserve(x.entries.size());
    for (size_t i = 0; i < x.entries.size(); ++i) {
        r.entries.emplace_back(t.sub_q(x.entries[i].first, y.entries[i].first),
                               t.sub_q(x.entries[i].second, y.entries[i].second));
    }
    return r;
}

// Ring scalar action (r_a + u r_b) * (c_a + u c_b) per coordinate.
RingCodeword scale_word(const FieldTower& t, uint32_t ra, uint32_t rb, const RingCodeword& x) {
    RingCodeword r;
    r.entries.reserve(x.entries.size());
    for (auto [ca, cb] : x.entries)
        r.entries.emplace_back(t.mul_q(ra, ca), t.add_q(t.mul_q(ra, cb), t.mul_q(rb, ca)));
    return r;
}

uint64_t rng_next(uint64_t& state) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
}

}  // namespace

TEST_CASE("defining set lengths per family") {
    auto t = FieldTower::build(2, 1, 6);
    ComplexSpec A(6, {1, 2, 3, 5}), B(6, {1, 2, 3, 4}), Bp(6, {2});
    CHECK(build_defining_set(t, 1, A, B, Bp).n == 224);
    CHECK(build_defining_set(t, 2, A, B, Bp).n == 672);
    CHECK(build_defining_set(t, 3, A, B, Bp).n == 800);
    CHECK(build_defining_set(t, 4, A, B, Bp).n == 2400);
    // family 4 with B = B': n = (q^m - q^|A|) q^m
    CHECK(build_defining_set(t, 4, A, B, B).n == (64 - 16) * 64);
}

TEST_CASE("defining set precondition errors") {
    auto t = FieldTower::build(2, 1, 3);
    ComplexSpec all(3, {1, 2, 3}), B(3, {1, 2}), empty(3, {});
    CHECK_THROWS_AS(build_defining_set(t, 1, empty, B, B), EmptyComponentError);  // B' = B
    CHECK_THROWS_AS(build_defining_set(t, 2, all, B, empty), EmptyComponentError);  // A = [m]
    CHECK_THROWS_AS(build_defining_set(t, 1, empty, B, all), NotASubsetError);
    CHECK_THROWS_AS(build_defining_set(t, 5, empty, B, empty), ConfigError);
}

TEST_CASE("pairs are ordered lexicographically") {
    auto t = FieldTower::build(2, 1, 3);
    auto L = build_defining_set(t, 1, ComplexSpec(3, {1, 2}), ComplexSpec(3, {1, 2}), ComplexSpec(3, {}));
    CHECK(L.n == L.first.size() * L.second.size());
    for (uint64_t i = 1; i < L.n; ++i) {
        auto prev = L.pair_at(i - 1), cur = L.pair_at(i);
        CHECK(prev < cur);
    }
}

TEST_CASE("encode is additive and R-linear") {
    auto t = FieldTower::build(3, 1, 2);
    auto L = build_defining_set(t, 1, ComplexSpec(2, {1}), ComplexSpec(2, {1, 2}), ComplexSpec(2, {1}));
    auto zero = encode(t, L, 0, 0);
    CHECK(lee_weight(t, zero) == 0);
    uint64_t state = 7;
    for (int i = 0; i < 50; ++i) {
        uint64_t a1 = rng_next(state) % t.qm(), b1 = rng_next(state) % t.qm();
        uint64_t a2 = rng_next(state) % t.qm(), b2 = rng_next(state) % t.qm();
        auto lhs = encode(t, L, t.add_m(a1, a2), t.add_m(b1, b2));
        auto rhs = add_words(t, encode(t, L, a1, b1), encode(t, L, a2, b2));
        CHECK(lhs.entries == rhs.entries);
        // scalar closure under r = r_a + u r_b
        uint32_t ra = static_cast<uint32_t>(rng_next(state) % t.q());
        uint32_t rb = static_cast<uint32_t>(rng_next(state) % t.q());
        // r * (a + ub) = r_a a + u(r_a b + r_b a)
        uint64_t sa = t.scalar_mul_m(ra, a1);
        uint64_t sb = t.add_m(t.scalar_mul_m(ra, b1), t.scalar_mul_m(rb, a1));
        CHECK(encode(t, L, sa, sb).entries == scale_word(t, ra, rb, encode(t, L, a1, b1)).entries);
    }
}

TEST_CASE("lee weight of single coordinates") {
    auto t = FieldTower::build(2, 1, 1);
    RingCodeword w;
    w.entries = {{1, 0}};
    CHECK(lee_weight(t, w) == 1);
    w.entries = {{0, 1}};
    CHECK(lee_weight(t, w) == 2);
    w.entries = {{1, 1}};  // cb = 1, ca + cb = 0
    CHECK(lee_weight(t, w) == 1);
}

TEST_CASE("gray map shape and weight preservation") {
    auto t = FieldTower::build(2, 1, 6);
    ComplexSpec A(6, {1, 2, 3, 5}), B(6, {1, 2, 3, 4}), Bp(6, {2});
    auto L = build_defining_set(t, 1, A, B, Bp);
    auto zero = gray(t, encode(t, L, 0, 0));
    CHECK(zero.size() == 2 * L.n);
    CHECK(std::all_of(zero.begin(), zero.end(), [](uint32_t v) { return v == 0; }));
    // single (1,1) coordinate over F2: b-half carries 1, (a+b)-half carries 0
    RingCodeword one;
    one.entries = {{1, 1}};
    auto img = gray(t, one);
    CHECK(img == std::vector<uint32_t>{1, 0});

    uint64_t state = 99;
    for (int i = 0; i < 100; ++i) {
        uint64_t a = rng_next(state) % t.qm(), b = rng_next(state) % t.qm();
        auto w = encode(t, L, a, b);
        auto g = gray(t, w);
        uint64_t hamming = 0;
        for (uint32_t v : g) hamming += v != 0;
        CHECK(hamming == lee_weight(t, w));
    }
}

TEST_CASE("gray map is an isometry") {
    auto t = FieldTower::build(3, 1, 2);
    auto L = build_defining_set(t, 2, ComplexSpec(2, {1}), ComplexSpec(2, {1, 2}), ComplexSpec(2, {}));
    uint64_t state = 4242;
    for (int i = 0; i < 50; ++i) {
        uint64_t a1 = rng_next(state) % t.qm(), b1 = rng_next(state) % t.qm();
        uint64_t a2 = rng_next(state) % t.qm(), b2 = rng_next(state) % t.qm();
        auto x = encode(t, L, a1, b1), y = encode(t, L, a2, b2);
        auto gx = gray(t, x), gy = gray(t, y);
        uint64_t dist = 0;
        for (size_t j = 0; j < gx.size(); ++j) dist += gx[j] != gy[j];
        CHECK(dist == lee_weight(t, sub_words(t, x, y)));
    }
}

TEST_CASE("enumeration visits every message once, in order") {
    auto t = FieldTower::build(2, 1, 2);
    auto L = build_defining_set(t, 1, ComplexSpec(2, {1}), ComplexSpec(2, {1, 2}), ComplexSpec(2, {}));
    uint64_t count = 0, prev_key = 0;
    enumerate_code(t, L, [&](uint64_t a, uint64_t b, uint64_t lee) {
        uint64_t key = a * t.qm() + b;
        if (count > 0) CHECK(key == prev_key + 1);
        prev_key = key;
        ++count;
        CHECK(lee == lee_weight(t, encode(t, L, a, b)));  // census equals direct evaluation
    });
    CHECK(count == 16);
    auto t3 = FieldTower::build(3, 1, 4);
    auto L3 = build_defining_set(t3, 1, ComplexSpec(4, {1}), ComplexSpec(4, {1, 2}), ComplexSpec(4, {}));
    uint64_t count3 = 0;
    enumerate_code(t3, L3, [&](uint64_t, uint64_t, uint64_t) { ++count3; });
    CHECK(count3 == 6561);
}

TEST_CASE("census is independent of the thread count") {
    auto t = FieldTower::build(2, 1, 4);
    auto L = build_defining_set(t, 4, ComplexSpec(4, {1}), ComplexSpec(4, {2, 3}), ComplexSpec(4, {2}));
    auto one = lee_weight_counts(t, L, 1);
    auto four = lee_weight_counts(t, L, 4);
    auto seven = lee_weight_counts(t, L, 7);
    CHECK(one == four);
    CHECK(one == seven);
}

TEST_CASE("every distinct codeword appears equally often") {
    auto t = FieldTower::build(2, 1, 3);
    ComplexSpec A(3, {1}), B(3, {1, 2}), Bp(3, {});
    for (uint32_t fam : {1u, 2u, 3u, 4u}) {
        auto L = build_defining_set(t, fam, A, B, Bp);
        std::map<std::vector<std::pair<uint32_t, uint32_t>>, uint64_t> seen;
        for (uint64_t a = 0; a < t.qm(); ++a) {
            for (uint64_t b = 0; b < t.qm(); ++b) ++seen[encode(t, L, a, b).entries];
        }
        uint64_t a0 = seen.at(encode(t, L, 0, 0).entries);
        for (const auto& [word, count] : seen) CHECK(count == a0);
        CHECK(seen.size() * a0 == t.qm() * t.qm());
    }
}

TEST_CASE("example 1 weights and generator matrix") {
    auto t = FieldTower::build(2, 1, 6);
    ComplexSpec A(6, {1, 2, 3, 5}), B(6, {1, 2, 3, 4}), Bp(6, {2});
    auto L = build_defining_set(t, 1, A, B, Bp);
    std::set<uint64_t> weights;
    enumerate_code(t, L, [&](uint64_t, uint64_t, uint64_t lee) { weights.insert(lee); });
    CHECK(weights == std::set<uint64_t>{0, 112, 224, 240, 256});

    auto g = gray_generator_matrix(t, L);
    CHECK(g.columns == 448);
    CHECK(g.rank == 9);  // log2 of the code size 2^9
    CHECK(g.rows.size() == 9);
    auto text = format_generator_matrix(t, L, g);
    std::istringstream is(text);
    std::string header;
    std::getline(is, header);
    CHECK(header == "2 6 1 1,2,3,5 1,2,3,4 2 224 9");
}
