#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fwcodes/spectra.hpp"

namespace fwcodes {

// g(k, d) = sum_{i=0}^{k-1} ceil(d / q^i).
BigInt griesmer_sum(uint64_t q, uint64_t k, const BigInt& d);

struct OptimalityVerdict {
    BigInt n;
    uint64_t k = 0;
    BigInt d;
    BigInt g_kd, g_kd1;
    BigInt slack;  // n - g(k, d)
    bool is_griesmer = false;             // n == g(k, d)
    bool is_near_griesmer = false;        // n - 1 == g(k, d)
    bool is_distance_optimal = false;     // n < g(k, d+1), so no [n, k, d+1] code exists
};

// Distance-optimality here is always the Griesmer-bound sufficient condition,
// never a general nonexistence claim.
OptimalityVerdict classify(uint64_t q, const BigInt& n, uint64_t k, const BigInt& d);

struct GrayClaims {
    bool near_griesmer = false;
    bool griesmer = false;
    bool distance_optimal = false;
};

// What one of the Gray-image theorems asserts for a parameter set satisfying
// its hypotheses: the [n, k, d] triple of phi(C_L), its Hamming weight table,
// the optimality flags, and the closed-form Griesmer sums the construction
// comes with (absent for theorem 7, which claims Griesmer equality directly).
struct GrayPrediction {
    uint32_t theorem = 0;
    uint32_t family = 0;
    BigInt n;  // Gray length 2|L|
    uint64_t k = 0;
    BigInt d;
    std::map<BigInt, BigInt> table;
    GrayClaims claims;
    std::optional<BigInt> g_kd_closed, g_kd1_closed;
};

// Theorems 5..9 map to families 1, 2, 2, 3, 4.
uint32_t theorem_family(uint32_t theorem);

GrayPrediction gray_image_prediction(uint32_t theorem, uint64_t q, uint32_t m, const SetStats& stats);

struct ClaimCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct GrayReport {
    GrayPrediction predicted;
    BigInt emp_n;
    uint64_t emp_k = 0;
    BigInt emp_d;
    std::map<BigInt, BigInt> emp_table;
    OptimalityVerdict verdict;
    std::vector<ClaimCheck> checks;

    bool all_pass() const;
};

// Builds the code, Gray-maps it, measures (n, k, d) and the Hamming spectrum,
// and diffs everything against the theorem's prediction and against classify.
GrayReport verify_gray_claims(const FieldTower& t, uint32_t theorem, const ComplexSpec& A, const ComplexSpec& B,
                              const ComplexSpec& Bp, unsigned threads = 0);

nlohmann::json verdict_to_json(const OptimalityVerdict& v);
nlohmann::json gray_report_to_json(const GrayReport& r);

}  // namespace fwcodes
