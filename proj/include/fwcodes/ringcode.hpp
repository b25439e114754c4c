#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fwcodes/simplicial.hpp"

namespace fwcodes {

// Defining set L = L1 + u L2 of one of the four families:
//   1) Delta_A + u(Delta_B \ Delta_B')      2) Delta_A^c + u(Delta_B \ Delta_B')
//   3) Delta_A + u(Delta_B \ Delta_B')^c    4) Delta_A^c + u(Delta_B \ Delta_B')^c
// The n = |L1| |L2| elements x + uy are ordered lexicographically by
// (codec(x), codec(y)); the Cartesian product is kept implicit.
struct DefiningSet {
    uint32_t family = 0;
    ComplexSpec A, B, Bp;
    PointSet first, second;  // L1 and L2, each sorted ascending
    uint64_t n = 0;

    std::pair<uint64_t, uint64_t> pair_at(uint64_t i) const {
        return {first.points[i / second.points.size()], second.points[i % second.points.size()]};
    }
};

DefiningSet build_defining_set(const FieldTower& t, uint32_t family, const ComplexSpec& A, const ComplexSpec& B,
                               const ComplexSpec& Bp);

// Codeword entries as (c_a, c_b) pairs over Fq, meaning c_a + u c_b.
struct RingCodeword {
    std::vector<std::pair<uint32_t, uint32_t>> entries;
};

// c_{a+ub} at position x + uy is Tr(ax) + u Tr(ay + bx).
RingCodeword encode(const FieldTower& t, const DefiningSet& L, uint64_t a, uint64_t b);

// wt(b-part) + wt((a+b)-part), the Hamming weight of the Gray image.
uint64_t lee_weight(const FieldTower& t, const RingCodeword& w);

// Gray map a + ub -> (b, a+b), applied entry-wise; length doubles.
std::vector<uint32_t> gray(const FieldTower& t, const RingCodeword& w);

// Visits every message (a, b) in Fq^m x Fq^m exactly once, in row-major order
// (a outer, b inner), reporting the Lee weight of its codeword.
void enumerate_code(const FieldTower& t, const DefiningSet& L,
                    const std::function<void(uint64_t a, uint64_t b, uint64_t lee)>& sink);

// Exhaustive Lee-weight census over all q^{2m} messages: weight -> number of
// messages. The (a, b) grid is split into contiguous chunks processed on
// `threads` workers (0 = hardware concurrency); per-chunk counts merge by
// addition, so the result does not depend on the chunking.
std::map<uint64_t, uint64_t> lee_weight_counts(const FieldTower& t, const DefiningSet& L, unsigned threads = 0);

// Rows spanning the Gray image: Gray images of encode() at the message-space
// basis (alpha_j, 0) and (0, alpha_j), reduced to an independent set.
struct GrayGeneratorMatrix {
    uint64_t columns = 0;  // 2n
    uint32_t rank = 0;     // k
    std::vector<std::vector<uint32_t>> rows;
};

GrayGeneratorMatrix gray_generator_matrix(const FieldTower& t, const DefiningSet& L);

// Plain-text export: header "q m family A B B' n k", then one row per line,
// codec integers separated by single spaces.
std::string format_generator_matrix(const FieldTower& t, const DefiningSet& L, const GrayGeneratorMatrix& g);

}  // namespace fwcodes
