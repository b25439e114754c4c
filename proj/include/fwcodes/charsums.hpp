#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fwcodes/bigint.hpp"
#include "fwcodes/ringcode.hpp"

namespace fwcodes {

// Element of Z[zeta_p], zeta_p a primitive complex p-th root of unity.
// Canonical coordinates are on the integral basis 1, zeta, ..., zeta^(p-2);
// the missing power is folded in through 1 + zeta + ... + zeta^(p-1) = 0.
// Exact integer arithmetic throughout, no floating point anywhere.
class CycInt {
public:
    explicit CycInt(uint32_t p);  // zero
    static CycInt integer(uint32_t p, long long v);
    // From occurrence counts of zeta^0 .. zeta^(p-1).
    static CycInt from_counts(uint32_t p, const std::vector<long long>& counts);

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    bool operator==(const CycInt& o) const = default;

    uint32_t prime() const { return p_; }
    const std::vector<long long>& coords() const { return coords_; }
    bool is_rational() const;
    long long rational_value() const;  // throws NonRationalOmegaError when not rational

private:
    uint32_t p_;
    std::vector<long long> coords_;  // length p-1
};

// sum_{x in S} zeta_p^(Tr_{q^m -> p}(y x)).
CycInt char_sum(const FieldTower& t, const PointSet& S, uint64_t y);

struct IdentityReport {
    uint64_t checked = 0;
    std::vector<std::string> counterexamples;

    bool pass() const { return counterexamples.empty(); }
};

// sum over Delta_A equals q^|A| on the dual and 0 elsewhere, for every y.
IdentityReport verify_lemma2(const FieldTower& t, const ComplexSpec& A);

// The three displayed case evaluations: the sums over Delta_B \ Delta_B',
// Delta_A^c and (Delta_B \ Delta_B')^c against their case values, for every
// scalar u in Fq^* and every argument (exhaustive up to `sample_threshold`
// field elements, deterministically sampled beyond that).
IdentityReport verify_sum_identities(const FieldTower& t, const ComplexSpec& A, const ComplexSpec& B,
                                     const ComplexSpec& Bp, uint64_t sample_threshold = 1ull << 14,
                                     uint64_t samples = 10000);

// Lee weight via the character sum: wt_L(c_{a+ub}) = 2|L| - Omega, with Omega
// assembled exactly in Z[zeta_p] and required to be a rational integer.
struct OmegaResult {
    bool pass = false;
    BigInt omega;
    uint64_t lee = 0;
    std::string detail;
};

OmegaResult omega_check(const FieldTower& t, const DefiningSet& L, uint64_t a, uint64_t b);

// omega_check across every message; enforces the q^m budget for the cubic cost.
IdentityReport omega_check_all(const FieldTower& t, const DefiningSet& L, uint64_t qm_budget = 1ull << 10);

}  // namespace fwcodes
