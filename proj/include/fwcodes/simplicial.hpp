#pragma once

#include <cstdint>
#include <vector>

#include "fwcodes/gf.hpp"

namespace fwcodes {

// Support of a simplicial complex with a single maximal element: a sorted,
// duplicate-free subset of [m] = {1,...,m}.
struct ComplexSpec {
    uint32_t m = 0;
    std::vector<uint32_t> support;

    ComplexSpec() = default;
    ComplexSpec(uint32_t m_, std::vector<uint32_t> support_);  // validates and sorts

    uint32_t size() const { return static_cast<uint32_t>(support.size()); }
    bool contains(uint32_t i) const;
    bool subset_of(const ComplexSpec& other) const;
};

enum class OriginTag { Delta, DeltaComplement, Difference, DifferenceComplement, Dual, Full };

enum class SetShape { Delta, DeltaComplement, Difference, DifferenceComplement, Full };

// An explicit subset of Fq^m, points sorted ascending by codec integer.
struct PointSet {
    std::vector<uint64_t> points;
    OriginTag tag = OriginTag::Delta;

    uint64_t size() const { return points.size(); }
    bool contains(uint64_t code) const;  // binary search
};

// The Fq-span of {alpha_i : i in A}; contains 0, has q^|A| points.
PointSet build_delta(const FieldTower& t, const ComplexSpec& spec);

// The Fq-span of {beta_j : j not in A}; everything trace-orthogonal to Delta_A.
PointSet build_dual(const FieldTower& t, const ComplexSpec& spec);

// The five point-set shapes appearing in the defining-set families.
// `primary` is A for the Delta shapes and B for the difference shapes;
// `secondary` is B' for the difference shapes and ignored otherwise.
PointSet build_family_set(const FieldTower& t, SetShape shape, const ComplexSpec& primary,
                          const ComplexSpec& secondary = ComplexSpec{});

// The five cardinalities every weight table is parameterized by.
struct SetStats {
    uint32_t a = 0;    // |A|
    uint32_t b = 0;    // |B|
    uint32_t bp = 0;   // |B'|
    uint32_t ab = 0;   // |A u B|
    uint32_t abp = 0;  // |A u B'|

    bool operator==(const SetStats&) const = default;
};

SetStats set_stats(const ComplexSpec& A, const ComplexSpec& B, const ComplexSpec& Bp);

// True iff some (A, B, B') inside [m] realizes these cardinalities.
bool stats_realizable(const SetStats& st, uint32_t m);

// All realizable stats classes for [m], in lexicographic order.
std::vector<SetStats> enumerate_stats_classes(uint32_t m);

struct SetTriple {
    ComplexSpec A, B, Bp;
};

// A canonical representative (A, B, B') realizing the given stats class.
SetTriple representative_sets(const SetStats& st, uint32_t m);

}  // namespace fwcodes
