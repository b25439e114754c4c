#include "fwcodes/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "fwcodes/errors.hpp"

namespace fwcodes {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (mag != 0) {
        mag_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt::BigInt(unsigned long long v) {
    if (v == 0) return;
    sign_ = 1;
    while (v != 0) {
        mag_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

BigInt BigInt::from_mag(int sign, std::vector<uint32_t> mag) {
    BigInt r;
    r.sign_ = sign;
    r.mag_ = std::move(mag);
    r.trim();
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Requires |a| >= |b|.
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (s < 0) {
            s += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    if (sign_ == o.sign_) return from_mag(sign_, add_mag(mag_, o.mag_));
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return from_mag(sign_, sub_mag(mag_, o.mag_));
    return from_mag(o.sign_, sub_mag(o.mag_, mag_));
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    std::vector<uint32_t> r(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = r[i + j] + static_cast<uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry != 0) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    return from_mag(sign_ * o.sign_, std::move(r));
}

std::pair<BigInt, int64_t> BigInt::divmod(uint32_t divisor) const {
    if (divisor == 0) throw OutOfRangeError("BigInt: division by zero");
    std::vector<uint32_t> q(mag_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | mag_[i];
        q[i] = static_cast<uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    BigInt quot = from_mag(sign_, std::move(q));
    return {quot, sign_ < 0 ? -static_cast<int64_t>(rem) : static_cast<int64_t>(rem)};
}

BigInt BigInt::div_exact(uint32_t divisor) const {
    auto [q, r] = divmod(divisor);
    if (r != 0) {
        throw NonIntegralDivisionError("BigInt: expected exact division of " + to_string() + " by " +
                                       std::to_string(divisor));
    }
    return q;
}

BigInt BigInt::ceil_div(uint32_t divisor) const {
    if (sign_ < 0) throw OutOfRangeError("BigInt: ceil_div of negative value");
    auto [q, r] = divmod(divisor);
    if (r != 0) q += BigInt(1);
    return q;
}

BigInt BigInt::pow(const BigInt& base, uint64_t exp) {
    BigInt r(1);
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

bool BigInt::fits_u64() const {
    return sign_ >= 0 && mag_.size() <= 2;
}

uint64_t BigInt::as_u64() const {
    if (!fits_u64()) throw OutOfRangeError("BigInt: value does not fit in uint64: " + to_string());
    uint64_t v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return v;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string digits;
    BigInt t = *this;
    t.sign_ = 1;
    while (!t.is_zero()) {
        auto [q, r] = t.divmod(1000000000u);
        std::string chunk = std::to_string(r);
        if (!q.is_zero()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        digits = chunk + digits;
        t = q;
    }
    return sign_ < 0 ? "-" + digits : digits;
}

BigInt BigInt::from_string(const std::string& decimal) {
    size_t i = 0;
    int sign = 1;
    if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
        if (decimal[i] == '-') sign = -1;
        ++i;
    }
    if (i == decimal.size()) throw OutOfRangeError("BigInt: empty numeral");
    BigInt r;
    for (; i < decimal.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(decimal[i])))
            throw OutOfRangeError("BigInt: bad digit in numeral: " + decimal);
        r = r * BigInt(10) + BigInt(decimal[i] - '0');
    }
    if (sign < 0) r = -r;
    return r;
}

}  // namespace fwcodes
