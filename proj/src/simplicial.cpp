#include "fwcodes/simplicial.hpp"

#include <algorithm>
#include <string>

namespace fwcodes {

ComplexSpec::ComplexSpec(uint32_t m_, std::vector<uint32_t> support_) : m(m_), support(std::move(support_)) {
    std::sort(support.begin(), support.end());
    for (size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 1 || support[i] > m)
            throw OutOfRangeError("support index " + std::to_string(support[i]) + " outside [1," + std::to_string(m) +
                                  "]");
        if (i > 0 && support[i] == support[i - 1])
            throw OutOfRangeError("duplicate support index " + std::to_string(support[i]));
    }
}

bool ComplexSpec::contains(uint32_t i) const {
    return std::binary_search(support.begin(), support.end(), i);
}

bool ComplexSpec::subset_of(const ComplexSpec& other) const {
    return std::includes(other.support.begin(), other.support.end(), support.begin(), support.end());
}

bool PointSet::contains(uint64_t code) const {
    return std::binary_search(points.begin(), points.end(), code);
}

namespace {

// Span of the given Fq^m elements over Fq, sorted by code.
std::vector<uint64_t> fq_span(const FieldTower& t, const std::vector<uint64_t>& gens) {
    std::vector<uint64_t> pts{0};
    for (uint64_t g : gens) {
        std::vector<uint64_t> next;
        next.reserve(pts.size() * t.q());
        for (uint32_t c = 0; c < t.q(); ++c) {
            uint64_t cg = t.scalar_mul_m(c, g);
            for (uint64_t p : pts) next.push_back(t.add_m(p, cg));
        }
        pts = std::move(next);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<uint64_t> complement_points(const FieldTower& t, const std::vector<uint64_t>& sorted_pts) {
    std::vector<uint64_t> out;
    out.reserve(t.qm() - sorted_pts.size());
    size_t i = 0;
    for (uint64_t x = 0; x < t.qm(); ++x) {
        if (i < sorted_pts.size() && sorted_pts[i] == x) {
            ++i;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

void check_dimension(const FieldTower& t, const ComplexSpec& spec) {
    if (spec.m != t.m())
        throw DimensionMismatchError("complex lives in [" + std::to_string(spec.m) + "] but the tower has m = " +
                                     std::to_string(t.m()));
}

}  // namespace

PointSet build_delta(const FieldTower& t, const ComplexSpec& spec) {
    check_dimension(t, spec);
    std::vector<uint64_t> gens;
    gens.reserve(spec.support.size());
    for (uint32_t i : spec.support) gens.push_back(t.basis()[i - 1]);
    return PointSet{fq_span(t, gens), OriginTag::Delta};
}

PointSet build_dual(const FieldTower& t, const ComplexSpec& spec) {
    check_dimension(t, spec);
    std::vector<uint64_t> gens;
    for (uint32_t j = 1; j <= t.m(); ++j) {
        if (!spec.contains(j)) gens.push_back(t.dual_basis()[j - 1]);
    }
    return PointSet{fq_span(t, gens), OriginTag::Dual};
}

PointSet build_family_set(const FieldTower& t, SetShape shape, const ComplexSpec& primary,
                          const ComplexSpec& secondary) {
    switch (shape) {
        case SetShape::Delta:
            return build_delta(t, primary);
        case SetShape::DeltaComplement: {
            PointSet d = build_delta(t, primary);
            return PointSet{complement_points(t, d.points), OriginTag::DeltaComplement};
        }
        case SetShape::Difference:
        case SetShape::DifferenceComplement: {
            check_dimension(t, primary);
            check_dimension(t, secondary);
            if (!secondary.subset_of(primary)) throw NotASubsetError("B' must be a subset of B");
            PointSet db = build_delta(t, primary);
            PointSet dbp = build_delta(t, secondary);
            std::vector<uint64_t> diff;
            diff.reserve(db.points.size() - dbp.points.size());
            std::set_difference(db.points.begin(), db.points.end(), dbp.points.begin(), dbp.points.end(),
                                std::back_inserter(diff));
            if (shape == SetShape::Difference) return PointSet{std::move(diff), OriginTag::Difference};
            return PointSet{complement_points(t, diff), OriginTag::DifferenceComplement};
        }
        case SetShape::Full: {
            std::vector<uint64_t> all(t.qm());
            for (uint64_t x = 0; x < t.qm(); ++x) all[x] = x;
            return PointSet{std::move(all), OriginTag::Full};
        }
    }
    throw ConfigError("unknown set shape");
}

SetStats set_stats(const ComplexSpec& A, const ComplexSpec& B, const ComplexSpec& Bp) {
    if (A.m != B.m || B.m != Bp.m) throw DimensionMismatchError("A, B, B' must live in the same [m]");
    if (!Bp.subset_of(B)) throw NotASubsetError("B' must be a subset of B");
    auto union_size = [](const ComplexSpec& x, const ComplexSpec& y) {
        std::vector<uint32_t> u;
        std::set_union(x.support.begin(), x.support.end(), y.support.begin(), y.support.end(),
                       std::back_inserter(u));
        return static_cast<uint32_t>(u.size());
    };
    return SetStats{A.size(), B.size(), Bp.size(), union_size(A, B), union_size(A, Bp)};
}

bool stats_realizable(const SetStats& st, uint32_t m) {
    if (st.a > m || st.b > m || st.bp > st.b) return false;
    if (st.ab > m || st.ab < std::max(st.a, st.b) || st.ab > st.a + st.b) return false;
    if (st.abp < std::max(st.a, st.bp) || st.abp > st.a + st.bp || st.abp > st.ab) return false;
    // A u B = (A u B') u (B \ B')
    if (st.ab > st.abp + (st.b - st.bp)) return false;
    return true;
}

std::vector<SetStats> enumerate_stats_classes(uint32_t m) {
    std::vector<SetStats> out;
    for (uint32_t a = 0; a <= m; ++a) {
        for (uint32_t b = 0; b <= m; ++b) {
            for (uint32_t bp = 0; bp <= b; ++bp) {
                for (uint32_t ab = std::max(a, b); ab <= std::min(m, a + b); ++ab) {
                    for (uint32_t abp = std::max(a, bp); abp <= std::min(a + bp, ab); ++abp) {
                        SetStats st{a, b, bp, ab, abp};
                        if (stats_realizable(st, m)) out.push_back(st);
                    }
                }
            }
        }
    }
    return out;
}

SetTriple representative_sets(const SetStats& st, uint32_t m) {
    if (!stats_realizable(st, m))
        throw HypothesisError("no sets inside [" + std::to_string(m) + "] realize the requested cardinalities");
    // B = {1..b}, B' = {1..bp}; A takes |A n B'| elements from B', then
    // |A n B| - |A n B'| from B \ B', then the rest outside B.
    uint32_t in_b = st.a + st.b - st.ab;
    uint32_t in_bp = st.a + st.bp - st.abp;
    std::vector<uint32_t> a_sup;
    for (uint32_t i = 1; i <= in_bp; ++i) a_sup.push_back(i);
    for (uint32_t i = 0; i < in_b - in_bp; ++i) a_sup.push_back(st.bp + 1 + i);
    for (uint32_t i = 0; i < st.a - in_b; ++i) a_sup.push_back(st.b + 1 + i);
    std::vector<uint32_t> b_sup, bp_sup;
    for (uint32_t i = 1; i <= st.b; ++i) b_sup.push_back(i);
    for (uint32_t i = 1; i <= st.bp; ++i) bp_sup.push_back(i);
    SetTriple triple{ComplexSpec(m, std::move(a_sup)), ComplexSpec(m, std::move(b_sup)),
                     ComplexSpec(m, std::move(bp_sup))};
    if (set_stats(triple.A, triple.B, triple.Bp) != st) throw InternalError("representative sets have wrong stats");
    return triple;
}

}  // namespace fwcodes
