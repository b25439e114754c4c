#include "fwcodes/ringcode.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace fwcodes {

DefiningSet build_defining_set(const FieldTower& t, uint32_t family, const ComplexSpec& A, const ComplexSpec& B,
                               const ComplexSpec& Bp) {
    if (family < 1 || family > 4) throw ConfigError("family must be 1..4");
    if (!Bp.subset_of(B)) throw NotASubsetError("B' must be a subset of B");
    SetShape first_shape = (family == 1 || family == 3) ? SetShape::Delta : SetShape::DeltaComplement;
    SetShape second_shape = (family == 1 || family == 2) ? SetShape::Difference : SetShape::DifferenceComplement;
    DefiningSet L;
    L.family = family;
    L.A = A;
    L.B = B;
    L.Bp = Bp;
    L.first = build_family_set(t, first_shape, A);
    L.second = build_family_set(t, second_shape, B, Bp);
    if (L.first.points.empty())
        throw EmptyComponentError("family " + std::to_string(family) + " requires A to be a proper subset of [m]" +
                                  " (Delta_A^c is empty)");
    if (L.second.points.empty())
        throw EmptyComponentError("family " + std::to_string(family) + " requires B' to be a proper subset of B" +
                                  " (Delta_B \\ Delta_B' is empty)");
    L.n = L.first.size() * L.second.size();
    return L;
}

RingCodeword encode(const FieldTower& t, const DefiningSet& L, uint64_t a, uint64_t b) {
    t.fqm_check(a);
    t.fqm_check(b);
    RingCodeword w;
    w.entries.reserve(L.n);
    for (uint64_t x : L.first.points) {
        uint32_t tr_ax = t.trace_qm_to_q(t.mul_m(a, x));
        uint32_t tr_bx = t.trace_qm_to_q(t.mul_m(b, x));
        for (uint64_t y : L.second.points) {
            uint32_t tr_ay = t.trace_qm_to_q(t.mul_m(a, y));
            w.entries.emplace_back(tr_ax, t.add_q(tr_ay, tr_bx));
        }
    }
    return w;
}

uint64_t lee_weight(const FieldTower& t, const RingCodeword& w) {
    uint64_t wt = 0;
    for (auto [ca, cb] : w.entries) {
        if (cb != 0) ++wt;
        if (t.add_q(ca, cb) != 0) ++wt;
    }
    return wt;
}

std::vector<uint32_t> gray(const FieldTower& t, const RingCodeword& w) {
    std::vector<uint32_t> out;
    out.reserve(2 * w.entries.size());
    for (auto [ca, cb] : w.entries) out.push_back(cb);
    for (auto [ca, cb] : w.entries) out.push_back(t.add_q(ca, cb));
    return out;
}

namespace {

// Shared read-only context for the exhaustive census. A coordinate of
// c_{a+ub} at x + uy has b-part Tr(ay) + Tr(bx) and (a+b)-part
// Tr(ay) + Tr((a+b)x), so with per-element trace histograms
//   G_c[s] = #{x in L1 : Tr(cx) = s},   H_a[s] = #{y in L2 : Tr(ay) = s}
// the Lee weight of the message (a, b) is
//   sum_s H_a[s] (2|L1| - G_b[-s] - G_{a+b}[-s]).
struct CensusContext {
    const FieldTower& t;
    const DefiningSet& L;
    std::vector<uint64_t> g_table;  // q^m rows of q counts

    explicit CensusContext(const FieldTower& t_, const DefiningSet& L_) : t(t_), L(L_) {
        const uint64_t q = t.q(), qm = t.qm();
        if (qm > (1ull << 26) / q)
            throw BudgetExceededError("census histograms need q^m * q <= 2^26; this q is too large for m");
        g_table.assign(qm * q, 0);
        for (uint64_t c = 0; c < qm; ++c) {
            uint64_t* row = &g_table[c * q];
            for (uint64_t x : L.first.points) ++row[t.trace_qm_to_q(t.mul_m(c, x))];
        }
    }

    // Lee weights for all b at a fixed a, invoking f(b, weight).
    template <typename F>
    void row(uint64_t a, F&& f) const {
        const uint64_t q = t.q(), qm = t.qm();
        const uint64_t two_l1 = 2 * L.first.size();
        std::vector<uint64_t> h(q, 0);
        for (uint64_t y : L.second.points) ++h[t.trace_qm_to_q(t.mul_m(a, y))];
        for (uint64_t b = 0; b < qm; ++b) {
            const uint64_t* gb = &g_table[b * q];
            const uint64_t* gab = &g_table[t.add_m(a, b) * q];
            uint64_t wt = 0;
            for (uint32_t s = 0; s < q; ++s) {
                uint64_t hs = h[s];
                if (hs == 0) continue;
                uint32_t ns = t.neg_q(s);
                wt += hs * (two_l1 - gb[ns] - gab[ns]);
            }
            f(b, wt);
        }
    }
};

}  // namespace

void enumerate_code(const FieldTower& t, const DefiningSet& L,
                    const std::function<void(uint64_t, uint64_t, uint64_t)>& sink) {
    CensusContext ctx(t, L);
    for (uint64_t a = 0; a < t.qm(); ++a) {
        ctx.row(a, [&](uint64_t b, uint64_t wt) { sink(a, b, wt); });
    }
}

std::map<uint64_t, uint64_t> lee_weight_counts(const FieldTower& t, const DefiningSet& L, unsigned threads) {
    CensusContext ctx(t, L);
    const uint64_t qm = t.qm();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, qm));

    std::vector<std::map<uint64_t, uint64_t>> partial(threads);
    auto worker = [&](unsigned id) {
        uint64_t begin = qm * id / threads;
        uint64_t end = qm * (id + 1) / threads;
        auto& counts = partial[id];
        for (uint64_t a = begin; a < end; ++a) {
            ctx.row(a, [&](uint64_t, uint64_t wt) { ++counts[wt]; });
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
        for (auto& th : pool) th.join();
    }
    std::map<uint64_t, uint64_t> total;
    for (const auto& part : partial) {
        for (auto [w, c] : part) total[w] += c;
    }
    return total;
}

GrayGeneratorMatrix gray_generator_matrix(const FieldTower& t, const DefiningSet& L) {
    GrayGeneratorMatrix g;
    g.columns = 2 * L.n;
    std::vector<std::vector<uint32_t>> echelon;  // reduced rows for the rank test
    std::vector<size_t> pivots;
    for (uint32_t j = 0; j < 2 * t.m(); ++j) {
        uint64_t a = j < t.m() ? t.basis()[j] : 0;
        uint64_t b = j < t.m() ? 0 : t.basis()[j - t.m()];
        std::vector<uint32_t> row = gray(t, encode(t, L, a, b));
        std::vector<uint32_t> reduced = row;
        for (size_t r = 0; r < echelon.size(); ++r) {
            uint32_t c = reduced[pivots[r]];
            if (c == 0) continue;
            uint32_t f = t.mul_q(c, t.inv_q(echelon[r][pivots[r]]));
            for (size_t i = 0; i < reduced.size(); ++i)
                reduced[i] = t.sub_q(reduced[i], t.mul_q(f, echelon[r][i]));
        }
        auto nz = std::find_if(reduced.begin(), reduced.end(), [](uint32_t v) { return v != 0; });
        if (nz == reduced.end()) continue;  // dependent on earlier rows
        pivots.push_back(static_cast<size_t>(nz - reduced.begin()));
        echelon.push_back(std::move(reduced));
        g.rows.push_back(std::move(row));
    }
    g.rank = static_cast<uint32_t>(g.rows.size());
    return g;
}

std::string format_generator_matrix(const FieldTower& t, const DefiningSet& L, const GrayGeneratorMatrix& g) {
    std::ostringstream os;
    auto join = [](const std::vector<uint32_t>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s.empty() ? "-" : s;
    };
    os << t.q() << ' ' << t.m() << ' ' << L.family << ' ' << join(L.A.support) << ' ' << join(L.B.support) << ' '
       << join(L.Bp.support) << ' ' << L.n << ' ' << g.rank << '\n';
    for (const auto& row : g.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ' ';
            os << row[i];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace fwcodes
