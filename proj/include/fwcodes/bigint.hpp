#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace fwcodes {

// Arbitrary-precision signed integer. Just the operations the weight tables
// and Griesmer sums need: add, subtract, multiply, divide by a machine word,
// powers, comparisons and decimal I/O. Magnitude is stored little-endian in
// base 2^32.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(unsigned long long v);
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}

    static BigInt from_string(const std::string& decimal);
    static BigInt pow(const BigInt& base, uint64_t exp);

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Quotient and remainder for a word divisor; remainder carries the sign
    // of *this (truncated division).
    std::pair<BigInt, int64_t> divmod(uint32_t divisor) const;
    // Division by `divisor` that must be exact; throws NonIntegralDivisionError.
    BigInt div_exact(uint32_t divisor) const;
    // ceil(*this / divisor) for nonnegative *this.
    BigInt ceil_div(uint32_t divisor) const;

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    bool operator==(const BigInt& o) const = default;
    std::strong_ordering operator<=>(const BigInt& o) const;

    bool fits_u64() const;
    uint64_t as_u64() const;  // throws OutOfRangeError if negative or too big
    std::string to_string() const;

private:
    static BigInt from_mag(int sign, std::vector<uint32_t> mag);
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    void trim();

    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> mag_;    // empty iff zero
};

inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }

}  // namespace fwcodes
