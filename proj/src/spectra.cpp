#include "fwcodes/spectra.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace fwcodes {

namespace {

// Exact value num / q^shift. The theorem tables are written with factors like
// q^(|A|-1) whose exponent can dip below zero; carrying the denominator makes
// it possible to transcribe the formulas literally and only demand
// integrality where a row actually survives.
class QVal {
public:
    QVal(uint64_t q, BigInt num, uint64_t shift = 0) : q_(q), num_(std::move(num)), shift_(shift) { normalize(); }

    static QVal integer(uint64_t q, long long v) { return QVal(q, BigInt(v)); }

    QVal operator+(const QVal& o) const {
        auto [a, b, sh] = align(o);
        return QVal(q_, a + b, sh);
    }
    QVal operator-(const QVal& o) const {
        auto [a, b, sh] = align(o);
        return QVal(q_, a - b, sh);
    }
    QVal operator*(const QVal& o) const { return QVal(q_, num_ * o.num_, shift_ + o.shift_); }

    bool is_integer() const { return shift_ == 0; }
    int sign() const { return num_.sign(); }

    const BigInt& value() const {
        if (shift_ != 0) throw InternalError("QVal::value() on a non-integer");
        return num_;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            shift_ = 0;
            return;
        }
        while (shift_ > 0) {
            auto [quot, rem] = num_.divmod(static_cast<uint32_t>(q_));
            if (rem != 0) break;
            num_ = quot;
            --shift_;
        }
    }
    std::tuple<BigInt, BigInt, uint64_t> align(const QVal& o) const {
        uint64_t sh = std::max(shift_, o.shift_);
        BigInt a = num_ * BigInt::pow(BigInt(static_cast<unsigned long long>(q_)), sh - shift_);
        BigInt b = o.num_ * BigInt::pow(BigInt(static_cast<unsigned long long>(q_)), sh - o.shift_);
        return {std::move(a), std::move(b), sh};
    }

    uint64_t q_;
    BigInt num_;
    uint64_t shift_;
};

struct TableRow {
    QVal weight;
    QVal mult;
};

// One evaluation context per (family, q, stats): P(e) = q^e as an exact value
// for any integer e, plus the shorthand cardinalities.
struct RowBuilder {
    uint64_t q;
    int64_t m, a, b, bp, ab, abp;

    QVal P(int64_t e) const {
        BigInt qq(static_cast<unsigned long long>(q));
        if (e >= 0) return QVal(q, BigInt::pow(qq, static_cast<uint64_t>(e)));
        return QVal(q, BigInt(1), static_cast<uint64_t>(-e));
    }
    QVal C(long long v) const { return QVal::integer(q, v); }
    QVal qm1() const { return C(static_cast<long long>(q) - 1); }  // q - 1
};

// Lee weight tables of the four families, transcribed row by row. Zero-weight
// row excluded; it is added by the caller.
std::vector<TableRow> family_rows(uint32_t family, const RowBuilder& r) {
    const auto q1 = r.qm1();
    const auto two = r.C(2);
    const auto one = r.C(1);
    std::vector<TableRow> rows;
    switch (family) {
        case 1: {
            auto span = r.P(r.b) - r.P(r.bp);  // q^|B| - q^|B'|
            rows = {
                {two * q1 * r.P(r.a + r.b - 1), r.P(r.ab - r.abp) - one},
                {two * q1 * r.P(r.a - 1) * span, r.P(r.a + r.ab) - two * r.P(r.ab - r.bp) + r.P(r.ab - r.abp)},
                {q1 * r.P(r.a - 1) * span, two * (r.P(r.ab - r.b) - one)},
                {q1 * r.P(r.a - 1) * (two * r.P(r.b) - r.P(r.bp)),
                 two * (r.P(r.ab - r.bp) - r.P(r.ab - r.b) - r.P(r.ab - r.abp) + one)},
            };
            break;
        }
        case 2: {
            auto span = r.P(r.b) - r.P(r.bp);
            auto w5_mult = r.P(2 * r.m) - r.P(r.m - r.a) * (two * r.P(r.m - r.bp) - r.P(r.m - r.abp));
            rows = {
                {q1 * r.P(r.m - 1) * span, two * (r.P(r.m - r.ab) - one)},
                {q1 * (r.P(r.m - 1) - r.P(r.a - 1)) * span, two * (r.P(r.m - r.b) - r.P(r.m - r.ab))},
                {two * q1 * r.P(r.m - 1) * span,
                 r.P(r.m - r.ab) * (r.P(r.m - r.a) - one) - (r.P(r.m - r.ab) - one)},
                {q1 * (two * r.P(r.m - 1) - r.P(r.a - 1)) * span,
                 two * (r.P(r.m - r.b) - r.P(r.m - r.ab)) * (r.P(r.m - r.a) - one)},
                {two * q1 * (r.P(r.m - 1) - r.P(r.a - 1)) * span, w5_mult},
                {two * q1 * (r.P(r.m) - r.P(r.a)) * r.P(r.b - 1), r.C(0)},  // A_{w6} = 0
                {q1 * (two * (r.P(r.m) - r.P(r.a)) * r.P(r.b - 1) - r.P(r.m + r.bp - 1)),
                 two * (r.P(r.m - r.abp) - r.P(r.m - r.ab))},
                {q1 * (r.P(r.m - 1) - r.P(r.a - 1)) * (two * r.P(r.b) - r.P(r.bp)),
                 two * (r.P(r.m - r.bp) - r.P(r.m - r.b)) - two * (r.P(r.m - r.abp) - r.P(r.m - r.ab))},
                {two * q1 * ((r.P(r.m - 1) - r.P(r.a - 1)) * r.P(r.b) - r.P(r.m + r.bp - 1)),
                 (r.P(r.m - r.abp) - r.P(r.m - r.ab)) * (r.P(r.m - r.a) - two)},
                {q1 * (two * (r.P(r.m - 1) - r.P(r.a - 1)) * span - r.P(r.a + r.bp - 1)),
                 two * (r.P(r.m - r.bp) - r.P(r.m - r.b) - r.P(r.m - r.abp) + r.P(r.m - r.ab)) *
                     (r.P(r.m - r.a) - one)},
            };
            break;
        }
        case 3: {
            auto comp = r.P(r.m) - r.P(r.b) + r.P(r.bp);  // q^m - q^|B| + q^|B'|
            rows = {
                {two * q1 * r.P(r.a - 1) * comp, r.P(r.m + r.a) - two * r.P(r.m - r.bp) + r.P(r.m - r.abp)},
                {two * q1 * r.P(r.m + r.a - 1), r.P(r.m - r.ab) - one},
                {q1 * r.P(r.a - 1) * (two * r.P(r.m) - r.P(r.b) + r.P(r.bp)),
                 two * (r.P(r.m - r.b) - r.P(r.m - r.ab))},
                {two * q1 * r.P(r.a - 1) * (r.P(r.m) - r.P(r.b)), r.P(r.m - r.abp) - r.P(r.m - r.ab)},
                {q1 * r.P(r.a - 1) * (two * r.P(r.m) - two * r.P(r.b) + r.P(r.bp)),
                 two * (r.P(r.m - r.bp) - r.P(r.m - r.b) - r.P(r.m - r.abp) + r.P(r.m - r.ab))},
            };
            break;
        }
        case 4: {
            auto comp = r.P(r.m) - r.P(r.b) + r.P(r.bp);
            auto span = r.P(r.b) - r.P(r.bp);
            rows = {
                {two * q1 * r.P(r.m - 1) * comp, r.P(r.m - r.a) - one},
                {two * q1 * (r.P(r.m - 1) - r.P(r.a - 1)) * comp,
                 r.P(2 * r.m) - r.P(r.m - r.a) * (two * r.P(r.m - r.bp) - r.P(r.m - r.abp))},
                {q1 * r.P(r.m - 1) * (two * r.P(r.m) - two * r.P(r.a) - r.P(r.b) + r.P(r.bp)),
                 two * (r.P(r.m - r.ab) - one)},
                {q1 * (r.P(r.m - 1) - r.P(r.a - 1)) * (two * r.P(r.m) - r.P(r.b) + r.P(r.bp)),
                 two * (r.P(r.m - r.b) - r.P(r.m - r.ab))},
                {two * q1 * r.P(r.m - 1) * (r.P(r.m) - r.P(r.a) - r.P(r.b) + r.P(r.bp)),
                 (r.P(r.m - r.ab) - one) * (r.P(r.m - r.a) - two)},
                {q1 * (two * r.P(r.m - 1) * (r.P(r.m) - r.P(r.a)) - (two * r.P(r.m - 1) - r.P(r.a - 1)) * span),
                 two * (r.P(r.m - r.b) - r.P(r.m - r.ab)) * (r.P(r.m - r.a) - one)},
                {q1 * (two * (r.P(r.m - 1) - r.P(r.a - 1)) * (r.P(r.m) - r.P(r.b)) + r.P(r.m + r.bp - 1)),
                 two * (r.P(r.m - r.abp) - r.P(r.m - r.ab))},
                {q1 * (r.P(r.m - 1) - r.P(r.a - 1)) * (two * r.P(r.m) - two * r.P(r.b) + r.P(r.bp)),
                 two * (r.P(r.m - r.bp) - r.P(r.m - r.b) - r.P(r.m - r.abp) + r.P(r.m - r.ab))},
                {q1 * (two * (r.P(r.m - 1) - r.P(r.a - 1)) * (r.P(r.m) - r.P(r.b)) + two * r.P(r.m + r.bp - 1)),
                 (r.P(r.m - r.abp) - r.P(r.m - r.ab)) * (r.P(r.m - r.a) - two)},
                {q1 * (two * (r.P(r.m - 1) - r.P(r.a - 1)) * (r.P(r.m) - r.P(r.b)) +
                       (two * r.P(r.m) - r.P(r.a)) * r.P(r.bp - 1)),
                 two * (r.P(r.m - r.bp) - r.P(r.m - r.b) - r.P(r.m - r.abp) + r.P(r.m - r.ab)) *
                     (r.P(r.m - r.a) - one)},
            };
            break;
        }
        default:
            throw ConfigError("family must be 1..4");
    }
    return rows;
}

RowBuilder make_builder(uint64_t q, uint32_t m, const SetStats& st) {
    if (q < 2 || q > 0xffffffffull) throw ConfigError("q must be a prime power in [2, 2^32)");
    return RowBuilder{q, m, st.a, st.b, st.bp, st.ab, st.abp};
}

// Merge rows into a canonical table. Strict mode treats any fractional or
// negative entry as an implementation error; lenient mode reports failure.
std::optional<std::map<BigInt, BigInt>> assemble_table(const std::vector<TableRow>& rows, bool strict) {
    std::map<BigInt, BigInt> table;
    table[BigInt(0)] = BigInt(1);
    for (const auto& row : rows) {
        if (!row.mult.is_integer()) {
            if (strict) throw InternalError("table row has fractional multiplicity");
            return std::nullopt;
        }
        int sgn = row.mult.sign();
        if (sgn == 0) continue;  // drop empty rows
        if (sgn < 0) {
            if (strict) throw InternalError("table row has negative multiplicity");
            return std::nullopt;
        }
        if (!row.weight.is_integer() || row.weight.sign() <= 0) {
            if (strict) throw InternalError("populated table row has non-positive or fractional weight");
            return std::nullopt;
        }
        table[row.weight.value()] += row.mult.value();
    }
    return table;
}

void check_hypotheses(uint32_t family, uint32_t m, const SetStats& st) {
    if (!stats_realizable(st, m)) throw HypothesisError("cardinality stats are not realizable inside [m]");
    switch (family) {
        case 1:
            if (st.bp >= st.b) throw HypothesisError("family 1 requires B' to be a proper subset of B");
            if (st.a + st.bp == 0) throw HypothesisError("family 1 requires |A| + |B'| > 0");
            break;
        case 2:
            if (st.a >= m) throw HypothesisError("family 2 requires A to be a proper subset of [m]");
            if (st.bp >= st.b) throw HypothesisError("family 2 requires B' to be a proper subset of B");
            break;
        case 3:
            if (st.b >= m) throw HypothesisError("family 3 requires B to be a proper subset of [m]");
            break;
        case 4:
            if (st.a >= m) throw HypothesisError("family 4 requires A to be a proper subset of [m]");
            if (st.b >= m) throw HypothesisError("family 4 requires B to be a proper subset of [m]");
            break;
        default:
            throw ConfigError("family must be 1..4");
    }
}

uint64_t size_log(const BigInt& size, uint64_t q) {
    BigInt t = size;
    uint64_t k = 0;
    while (t > BigInt(1)) {
        auto [quot, rem] = t.divmod(static_cast<uint32_t>(q));
        if (rem != 0) throw NonIntegralDimensionError("code size " + size.to_string() + " is not a power of q");
        t = quot;
        ++k;
    }
    if (t != BigInt(1)) throw NonIntegralDimensionError("code size " + size.to_string() + " is not a power of q");
    return k;
}

void validate_spectrum(const LeeSpectrum& s) {
    auto it = s.table.find(BigInt(0));
    if (it == s.table.end() || it->second != BigInt(1))
        throw InternalError("spectrum must contain weight 0 with multiplicity 1");
    BigInt mass(0);
    BigInt two_n = s.n * BigInt(2);
    for (const auto& [w, mult] : s.table) {
        if (w.is_negative() || w > two_n) throw InternalError("spectrum weight outside [0, 2n]");
        if (mult.sign() <= 0) throw InternalError("spectrum multiplicity must be positive");
        mass += mult;
    }
    if (mass != s.size) throw InternalError("spectrum multiplicities sum to " + mass.to_string() +
                                            ", expected size " + s.size.to_string());
}

}  // namespace

LeeSpectrum empirical_spectrum(const FieldTower& t, const DefiningSet& L, unsigned threads) {
    auto counts = lee_weight_counts(t, L, threads);
    uint64_t a0 = counts.at(0);  // (0,0) always encodes to the zero codeword
    LeeSpectrum s;
    s.source = Source::Empirical;
    s.n = BigInt(static_cast<unsigned long long>(L.n));
    uint64_t messages = t.qm() * t.qm();
    for (auto [w, c] : counts) {
        if (c % a0 != 0)
            throw NonIntegralDivisionError("weight bucket " + std::to_string(w) + " not divisible by A_0 = " +
                                           std::to_string(a0));
        s.table[BigInt(static_cast<unsigned long long>(w))] = BigInt(static_cast<unsigned long long>(c / a0));
    }
    s.size = BigInt(static_cast<unsigned long long>(messages / a0));
    s.size_log_q = size_log(s.size, t.q());
    validate_spectrum(s);
    return s;
}

BigInt predicted_length(uint32_t family, uint64_t q, uint32_t m, const SetStats& st) {
    auto r = make_builder(q, m, st);
    QVal n = r.C(0);
    switch (family) {
        case 1: n = r.P(st.a) * (r.P(st.b) - r.P(st.bp)); break;
        case 2: n = (r.P(m) - r.P(st.a)) * (r.P(st.b) - r.P(st.bp)); break;
        case 3: n = r.P(st.a) * (r.P(m) - r.P(st.b) + r.P(st.bp)); break;
        case 4: n = (r.P(m) - r.P(st.a)) * (r.P(m) - r.P(st.b) + r.P(st.bp)); break;
        default: throw ConfigError("family must be 1..4");
    }
    return n.value();
}

BigInt predicted_size(uint32_t family, uint64_t q, uint32_t m, const SetStats& st) {
    auto r = make_builder(q, m, st);
    switch (family) {
        case 1: return r.P(st.a + st.ab).value();
        case 2: return r.P(2 * m).value();
        case 3: return r.P(m + st.a).value();
        case 4: return r.P(2 * m).value();
        default: throw ConfigError("family must be 1..4");
    }
}

LeeSpectrum predicted_spectrum(uint32_t family, uint64_t q, uint32_t m, const SetStats& st) {
    check_hypotheses(family, m, st);
    auto rows = family_rows(family, make_builder(q, m, st));
    auto table = assemble_table(rows, /*strict=*/true);
    LeeSpectrum s;
    s.source = Source::Predicted;
    s.n = predicted_length(family, q, m, st);
    s.size = predicted_size(family, q, m, st);
    s.size_log_q = size_log(s.size, q);
    s.table = std::move(*table);
    validate_spectrum(s);
    return s;
}

std::optional<std::map<BigInt, BigInt>> predicted_table_raw(uint32_t family, uint64_t q, uint32_t m,
                                                            const SetStats& st) {
    auto rows = family_rows(family, make_builder(q, m, st));
    return assemble_table(rows, /*strict=*/false);
}

DiffReport compare(const LeeSpectrum& empirical, const LeeSpectrum& predicted) {
    DiffReport d;
    d.n_equal = empirical.n == predicted.n;
    d.size_equal = empirical.size == predicted.size;
    auto ei = empirical.table.begin();
    auto pi = predicted.table.begin();
    while (ei != empirical.table.end() || pi != predicted.table.end()) {
        if (pi == predicted.table.end() || (ei != empirical.table.end() && ei->first < pi->first)) {
            d.entries.push_back({ei->first, ei->second, BigInt(0)});
            ++ei;
        } else if (ei == empirical.table.end() || pi->first < ei->first) {
            d.entries.push_back({pi->first, BigInt(0), pi->second});
            ++pi;
        } else {
            if (ei->second != pi->second) d.entries.push_back({ei->first, ei->second, pi->second});
            ++ei;
            ++pi;
        }
    }
    return d;
}

BigInt min_nonzero_weight(const LeeSpectrum& s) {
    for (const auto& [w, mult] : s.table) {
        if (w.sign() > 0) return w;
    }
    throw ZeroCodeError("spectrum has no nonzero weight");
}

std::string weight_enumerator_string(const std::map<BigInt, BigInt>& table) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, mult] : table) {
        if (!first) os << " + ";
        first = false;
        if (w.is_zero()) {
            os << mult.to_string();
        } else {
            if (mult != BigInt(1)) os << mult.to_string();
            os << "z^" << w.to_string();
        }
    }
    return os.str();
}

std::string weight_enumerator_string(const LeeSpectrum& s) { return weight_enumerator_string(s.table); }

namespace {

nlohmann::json big_to_json(const BigInt& v) {
    if (v.fits_u64()) return v.as_u64();
    return v.to_string();
}

}  // namespace

nlohmann::json spectrum_to_json(const LeeSpectrum& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [w, mult] : s.table) rows.push_back({big_to_json(w), big_to_json(mult)});
    return {{"n", big_to_json(s.n)},
            {"size_log_q", s.size_log_q},
            {"table", rows},
            {"source", s.source == Source::Empirical ? "empirical" : "predicted"}};
}

nlohmann::json diff_to_json(const DiffReport& d) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : d.entries)
        rows.push_back({big_to_json(e.weight), big_to_json(e.empirical), big_to_json(e.predicted)});
    return {{"equal", d.equal()}, {"n_equal", d.n_equal}, {"size_equal", d.size_equal}, {"rows", rows}};
}

}  // namespace fwcodes
