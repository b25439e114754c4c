#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fwcodes/bigint.hpp"
#include "fwcodes/ringcode.hpp"

#include <json.hpp>

namespace fwcodes {

enum class Source { Empirical, Predicted };

// Lee weight distribution over distinct codewords. The table always contains
// the zero weight with multiplicity one, and the multiplicities sum to the
// code size.
struct LeeSpectrum {
    BigInt n;                        // ring-code length |L|
    BigInt size;                     // number of distinct codewords, a power of q
    uint64_t size_log_q = 0;         // log_q(size)
    std::map<BigInt, BigInt> table;  // weight -> multiplicity
    Source source = Source::Empirical;
};

// Counts messages per Lee weight by exhaustive enumeration, then divides by
// the zero-weight message count A_0 (which must divide every bucket exactly).
LeeSpectrum empirical_spectrum(const FieldTower& t, const DefiningSet& L, unsigned threads = 0);

// Evaluates the closed-form weight table of the given family at the five
// cardinalities. Rows with equal weights are merged, rows with multiplicity
// zero are dropped. Throws HypothesisError when the family's theorem
// hypotheses do not hold for these stats.
LeeSpectrum predicted_spectrum(uint32_t family, uint64_t q, uint32_t m, const SetStats& stats);

// Same table evaluation with no hypothesis checking, for negative controls:
// returns the canonical table, or nullopt when the stats produce something
// that cannot be an integer spectrum (fractional or negative entries).
std::optional<std::map<BigInt, BigInt>> predicted_table_raw(uint32_t family, uint64_t q, uint32_t m,
                                                            const SetStats& stats);

// Length and size claimed by the family's theorem, as formulas in the stats.
BigInt predicted_length(uint32_t family, uint64_t q, uint32_t m, const SetStats& stats);
BigInt predicted_size(uint32_t family, uint64_t q, uint32_t m, const SetStats& stats);

struct DiffEntry {
    BigInt weight;
    BigInt empirical;  // 0 when the weight is absent on that side
    BigInt predicted;
};

struct DiffReport {
    std::vector<DiffEntry> entries;
    bool n_equal = true;
    bool size_equal = true;

    bool equal() const { return entries.empty() && n_equal && size_equal; }
};

DiffReport compare(const LeeSpectrum& empirical, const LeeSpectrum& predicted);

// Smallest weight with positive multiplicity; the minimum distance for a
// linear code. Throws ZeroCodeError when only the zero codeword exists.
BigInt min_nonzero_weight(const LeeSpectrum& s);

// Weight enumerator in the usual notation, e.g. "1 + 2z^112 + 482z^224 + 26z^240 + z^256".
std::string weight_enumerator_string(const LeeSpectrum& s);
std::string weight_enumerator_string(const std::map<BigInt, BigInt>& table);

nlohmann::json spectrum_to_json(const LeeSpectrum& s);
nlohmann::json diff_to_json(const DiffReport& d);

}  // namespace fwcodes
