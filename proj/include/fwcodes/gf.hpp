#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fwcodes/errors.hpp"

namespace fwcodes {

inline constexpr uint64_t kDefaultBudget = 1ull << 26;  // max number of messages q^{2m}
inline constexpr uint64_t kLogTableLimit = 1ull << 20;  // build log/exp tables up to this field size

bool is_prime(uint64_t n);

// Splits q into (p, s) with q = p^s, p prime. Empty if q is not a prime power.
struct PrimePower {
    uint32_t p;
    uint32_t s;
};
std::optional<PrimePower> prime_power_split(uint64_t q);

// The tower Fp < Fq < Fq^m with a fixed deterministic representation:
//   * modulus_q  = lexicographically smallest monic irreducible of degree s over Fp,
//   * modulus_qm = lexicographically smallest monic irreducible of degree m over Fq,
//     coefficients compared low-degree-first in both cases,
//   * basis alpha_i = alpha^(i-1) where alpha is the residue of the indeterminate,
//   * dual basis obtained by inverting the trace Gram matrix over Fq.
//
// Elements are handled by their codec integers: an Fq element is the base-p
// integer of its coefficient vector (low degree least significant), an Fq^m
// element the base-q integer of its coordinates in the polynomial basis.
// The tower is immutable after construction and safe to share across threads.
class FieldTower {
public:
    static FieldTower build(uint32_t p, uint32_t s, uint32_t m, uint64_t budget = kDefaultBudget);

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }
    uint64_t qm() const { return qm_; }

    const std::vector<uint32_t>& modulus_q() const { return modulus_q_; }
    const std::vector<uint32_t>& modulus_qm() const { return modulus_qm_; }
    const std::vector<uint64_t>& basis() const { return basis_; }
    const std::vector<uint64_t>& dual_basis() const { return dual_basis_; }

    // --- Fq arithmetic on codes in [0, q) ---
    uint32_t add_q(uint32_t a, uint32_t b) const;
    uint32_t neg_q(uint32_t a) const { return neg_q_[a]; }
    uint32_t sub_q(uint32_t a, uint32_t b) const { return add_q(a, neg_q(b)); }
    uint32_t mul_q(uint32_t a, uint32_t b) const;
    uint32_t inv_q(uint32_t a) const;

    // --- Fq^m arithmetic on codes in [0, q^m) ---
    uint64_t add_m(uint64_t a, uint64_t b) const;
    uint64_t neg_m(uint64_t a) const;
    uint64_t sub_m(uint64_t a, uint64_t b) const { return add_m(a, neg_m(b)); }
    uint64_t mul_m(uint64_t a, uint64_t b) const;
    uint64_t pow_m(uint64_t a, uint64_t e) const;
    uint64_t scalar_mul_m(uint32_t c, uint64_t x) const;  // c in Fq

    // --- traces ---
    uint32_t trace_qm_to_q(uint64_t x) const { return trace_table_[x]; }
    uint32_t trace_q_to_p(uint32_t x) const { return trace_p_table_[x]; }
    uint32_t abs_trace(uint64_t x) const { return trace_p_table_[trace_table_[x]]; }

    // --- codec helpers ---
    uint32_t fq_check(uint64_t code) const;
    uint64_t fqm_check(uint64_t code) const;
    std::vector<uint32_t> fq_coeffs(uint32_t x) const;               // base-p digits, length s
    uint32_t fq_from_coeffs(const std::vector<uint32_t>& c) const;   // throws OutOfRangeError
    std::vector<uint32_t> fqm_coords(uint64_t x) const;              // base-q digits (Fq codes), length m
    uint64_t fqm_from_coords(const std::vector<uint32_t>& c) const;

private:
    FieldTower() = default;
    void build_fq_tables();
    void build_fqm_tables();
    uint64_t mul_m_poly(uint64_t a, uint64_t b) const;  // schoolbook fallback

    uint32_t p_ = 0, s_ = 0, m_ = 0;
    uint64_t q_ = 0, qm_ = 0;
    std::vector<uint32_t> modulus_q_, modulus_qm_;
    std::vector<uint64_t> basis_, dual_basis_;

    bool char2_ = false;  // p == 2: addition is xor at every level
    std::vector<uint32_t> exp_q_, log_q_, neg_q_, trace_p_table_;
    std::vector<uint32_t> add_q_table_;  // q*q entries when q small, else empty
    std::vector<uint32_t> trace_table_;  // Tr_{q^m -> q} for every code
    std::vector<uint64_t> exp_m_;        // empty when qm > kLogTableLimit
    std::vector<uint32_t> log_m_;
};

}  // namespace fwcodes
