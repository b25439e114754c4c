#include "fwcodes/gf.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>

namespace fwcodes {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<PrimePower> prime_power_split(uint64_t q) {
    if (q < 2) return std::nullopt;
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t s = 0;
    uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++s;
    }
    if (t != 1) return std::nullopt;  // a second prime divides q
    return PrimePower{static_cast<uint32_t>(p), s};
}

namespace {

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Minimal coefficient-field interface for the polynomial helpers below.
// Everything here runs only at tower construction time.
struct CoeffOps {
    uint64_t size;
    std::function<uint64_t(uint64_t, uint64_t)> add;
    std::function<uint64_t(uint64_t, uint64_t)> mul;
    std::function<uint64_t(uint64_t)> neg;
};

using Poly = std::vector<uint64_t>;  // codes, ascending degree

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Reduces f modulo the monic polynomial g in place.
void poly_mod(Poly& f, const Poly& g, const CoeffOps& ops) {
    const size_t d = g.size() - 1;
    poly_trim(f);
    while (f.size() > d) {
        uint64_t c = f.back();
        size_t k = f.size() - 1 - d;
        if (c != 0) {
            for (size_t i = 0; i <= d; ++i) f[k + i] = ops.add(f[k + i], ops.neg(ops.mul(c, g[i])));
        }
        f.pop_back();
        poly_trim(f);
    }
}

Poly poly_mul(const Poly& a, const Poly& b, const CoeffOps& ops) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, const CoeffOps& ops) {
    Poly r = poly_mul(a, b, ops);
    poly_mod(r, f, ops);
    return r;
}

Poly code_to_poly(uint64_t code, uint64_t radix) {
    Poly f;
    while (code != 0) {
        f.push_back(code % radix);
        code /= radix;
    }
    return f;
}

uint64_t poly_to_code(const Poly& f, uint64_t radix) {
    uint64_t code = 0;
    for (size_t i = f.size(); i-- > 0;) code = code * radix + f[i];
    return code;
}

// Monic irreducibility by trial division with every monic polynomial of
// degree 1..deg/2; fine at the sizes this library allows.
bool is_irreducible(const Poly& f, const CoeffOps& ops) {
    const size_t deg = f.size() - 1;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= ops.size;
        for (uint64_t lower = 0; lower < count; ++lower) {
            Poly g = code_to_poly(lower, ops.size);
            g.resize(d + 1, 0);
            g[d] = 1;
            Poly r = f;
            poly_mod(r, g, ops);
            if (r.empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of the given degree,
// comparing coefficient vectors low-degree-first.
Poly smallest_irreducible(size_t deg, const CoeffOps& ops) {
    uint64_t count = 1;
    for (size_t i = 0; i < deg; ++i) count *= ops.size;
    for (uint64_t rank = 0; rank < count; ++rank) {
        Poly f(deg + 1, 0);
        f[deg] = 1;
        // decode rank with c_0 in the highest place, so c_0 is the first
        // comparison key
        uint64_t t = rank;
        for (size_t i = 0; i < deg; ++i) {
            uint64_t place = 1;
            for (size_t j = 0; j + 1 < deg - i; ++j) place *= ops.size;
            f[i] = t / place;
            t %= place;
        }
        if (is_irreducible(f, ops)) return f;
    }
    throw InternalError("irreducible polynomial search exhausted");
}

uint64_t poly_powmod(Poly base, uint64_t e, const Poly& f, const CoeffOps& ops, uint64_t radix) {
    Poly r{1};
    while (e != 0) {
        if (e & 1) r = poly_mulmod(r, base, f, ops);
        base = poly_mulmod(base, base, f, ops);
        e >>= 1;
    }
    return poly_to_code(r, radix);
}

// Smallest multiplicative generator, found by checking the order criterion
// against the prime factorization of size-1.
uint64_t find_generator(const Poly& modulus, const CoeffOps& ops, uint64_t size) {
    if (size == 2) return 1;
    auto primes = distinct_prime_factors(size - 1);
    for (uint64_t g = 2; g < size; ++g) {
        Poly gp = code_to_poly(g, ops.size);
        bool ok = true;
        for (uint64_t r : primes) {
            if (poly_powmod(gp, (size - 1) / r, modulus, ops, ops.size) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw InternalError("no multiplicative generator found");
}

}  // namespace

FieldTower FieldTower::build(uint32_t p, uint32_t s, uint32_t m, uint64_t budget) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (s < 1 || m < 1) throw ConfigError("s and m must be positive");

    FieldTower t;
    t.p_ = p;
    t.s_ = s;
    t.m_ = m;
    t.char2_ = (p == 2);

    // q = p^s and q^m, with the message budget q^{2m} enforced up front.
    uint64_t q = 1;
    for (uint32_t i = 0; i < s; ++i) {
        if (q > budget / p) throw BudgetExceededError("q = p^s exceeds the enumeration budget");
        q *= p;
    }
    uint64_t messages = 1;
    uint64_t qm = 1;
    for (uint32_t i = 0; i < 2 * m; ++i) {
        if (messages > budget / q)
            throw BudgetExceededError("q^{2m} = " + std::to_string(q) + "^" + std::to_string(2 * m) +
                                      " exceeds the enumeration budget of " + std::to_string(budget) + " messages");
        messages *= q;
        if (i < m) qm *= q;
    }
    t.q_ = q;
    t.qm_ = qm;

    t.build_fq_tables();
    t.build_fqm_tables();
    return t;
}

void FieldTower::build_fq_tables() {
    const uint64_t p = p_, q = q_;
    CoeffOps fp{p, [p](uint64_t a, uint64_t b) { return (a + b) % p; },
                [p](uint64_t a, uint64_t b) { return a * b % p; },
                [p](uint64_t a) { return a == 0 ? 0 : p - a; }};

    Poly mod = smallest_irreducible(s_, fp);
    modulus_q_.assign(mod.begin(), mod.end());

    neg_q_.resize(q);
    for (uint64_t x = 0; x < q; ++x) {
        uint64_t code = 0, place = 1;
        uint64_t v = x;
        for (uint32_t i = 0; i < s_; ++i) {
            code += fp.neg(v % p) * place;
            v /= p;
            place *= p;
        }
        neg_q_[x] = static_cast<uint32_t>(code);
    }

    uint64_t g = find_generator(mod, fp, q);
    exp_q_.assign(2 * (q - 1), 1);
    log_q_.assign(q, 0);
    Poly acc{1};
    Poly gp = code_to_poly(g, p);
    for (uint64_t i = 0; i < q - 1; ++i) {
        uint64_t code = poly_to_code(acc, p);
        exp_q_[i] = exp_q_[i + (q - 1)] = static_cast<uint32_t>(code);
        log_q_[code] = static_cast<uint32_t>(i);
        acc = poly_mulmod(acc, gp, mod, fp);
    }

    if (q <= 1024) {
        add_q_table_.resize(q * q);
        for (uint64_t a = 0; a < q; ++a) {
            for (uint64_t b = 0; b < q; ++b) {
                uint64_t code = 0, place = 1, x = a, y = b;
                for (uint32_t i = 0; i < s_; ++i) {
                    code += ((x % p) + (y % p)) % p * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                add_q_table_[a * q + b] = static_cast<uint32_t>(code);
            }
        }
    }

    // Tr_{q -> p} per element; the result is a constant, so its code is < p.
    trace_p_table_.resize(q);
    for (uint64_t x = 0; x < q; ++x) {
        uint64_t acc_tr = 0;
        uint64_t y = x;
        for (uint32_t i = 0; i < s_; ++i) {
            acc_tr = add_q(static_cast<uint32_t>(acc_tr), static_cast<uint32_t>(y));
            // Frobenius: y <- y^p
            uint32_t yp = 1;
            uint32_t base = static_cast<uint32_t>(y);
            for (uint64_t e = p; e != 0; e >>= 1) {
                if (e & 1) yp = mul_q(yp, base);
                base = mul_q(base, base);
            }
            y = yp;
        }
        if (acc_tr >= p) throw InternalError("trace to Fp left the prime subfield");
        trace_p_table_[x] = static_cast<uint32_t>(acc_tr);
    }
}

uint32_t FieldTower::add_q(uint32_t a, uint32_t b) const {
    if (char2_) return a ^ b;
    if (!add_q_table_.empty()) return add_q_table_[static_cast<uint64_t>(a) * q_ + b];
    uint64_t code = 0, place = 1;
    uint64_t x = a, y = b;
    for (uint32_t i = 0; i < s_; ++i) {
        code += ((x % p_) + (y % p_)) % p_ * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return static_cast<uint32_t>(code);
}

uint32_t FieldTower::mul_q(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_q_[log_q_[a] + log_q_[b]];
}

uint32_t FieldTower::inv_q(uint32_t a) const {
    if (a == 0) throw OutOfRangeError("inverse of zero in Fq");
    return exp_q_[(q_ - 1) - log_q_[a]];
}

void FieldTower::build_fqm_tables() {
    const uint64_t q = q_, qm = qm_;
    CoeffOps fq{q, [this](uint64_t a, uint64_t b) { return add_q(static_cast<uint32_t>(a), static_cast<uint32_t>(b)); },
                [this](uint64_t a, uint64_t b) { return mul_q(static_cast<uint32_t>(a), static_cast<uint32_t>(b)); },
                [this](uint64_t a) { return neg_q(static_cast<uint32_t>(a)); }};

    Poly mod = smallest_irreducible(m_, fq);
    modulus_qm_.assign(mod.begin(), mod.end());

    basis_.resize(m_);
    uint64_t place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        basis_[i] = place;  // alpha^i has a single coordinate
        if (i + 1 < m_) place *= q;
    }

    if (qm <= kLogTableLimit) {
        uint64_t g = find_generator(mod, fq, qm);
        exp_m_.assign(2 * (qm - 1), 1);
        log_m_.assign(qm, 0);
        Poly acc{1};
        Poly gp = code_to_poly(g, q);
        for (uint64_t i = 0; i < qm - 1; ++i) {
            uint64_t code = poly_to_code(acc, q);
            exp_m_[i] = exp_m_[i + (qm - 1)] = code;
            log_m_[code] = static_cast<uint32_t>(i);
            acc = poly_mulmod(acc, gp, mod, fq);
        }
    }

    // Traces of the basis elements, then extend Fq-linearly to everything.
    std::vector<uint32_t> tr_basis(m_);
    for (uint32_t j = 0; j < m_; ++j) {
        uint64_t acc_tr = 0;
        uint64_t y = basis_[j];
        for (uint32_t i = 0; i < m_; ++i) {
            acc_tr = add_m(acc_tr, y);
            y = pow_m(y, q);
        }
        if (acc_tr >= q) throw InternalError("trace to Fq left the base field");
        tr_basis[j] = static_cast<uint32_t>(acc_tr);
    }
    trace_table_.resize(qm);
    for (uint64_t x = 0; x < qm; ++x) {
        uint32_t tr = 0;
        uint64_t v = x;
        for (uint32_t j = 0; j < m_; ++j) {
            tr = add_q(tr, mul_q(static_cast<uint32_t>(v % q), tr_basis[j]));
            v /= q;
        }
        trace_table_[x] = tr;
    }

    // Dual basis from the inverse of the Gram matrix G_ij = Tr(alpha_i alpha_j).
    std::vector<std::vector<uint32_t>> aug(m_, std::vector<uint32_t>(2 * m_, 0));
    for (uint32_t i = 0; i < m_; ++i) {
        for (uint32_t j = 0; j < m_; ++j) aug[i][j] = trace_qm_to_q(mul_m(basis_[i], basis_[j]));
        aug[i][m_ + i] = 1;
    }
    for (uint32_t col = 0; col < m_; ++col) {
        uint32_t pivot = col;
        while (pivot < m_ && aug[pivot][col] == 0) ++pivot;
        if (pivot == m_) throw InternalError("trace Gram matrix is singular");
        std::swap(aug[col], aug[pivot]);
        uint32_t inv = inv_q(aug[col][col]);
        for (uint32_t j = 0; j < 2 * m_; ++j) aug[col][j] = mul_q(aug[col][j], inv);
        for (uint32_t r = 0; r < m_; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            uint32_t f = aug[r][col];
            for (uint32_t j = 0; j < 2 * m_; ++j) aug[r][j] = sub_q(aug[r][j], mul_q(f, aug[col][j]));
        }
    }
    dual_basis_.resize(m_);
    for (uint32_t j = 0; j < m_; ++j) {
        uint64_t beta = 0;
        for (uint32_t i = 0; i < m_; ++i) beta = add_m(beta, scalar_mul_m(aug[i][m_ + j], basis_[i]));
        dual_basis_[j] = beta;
    }
    for (uint32_t i = 0; i < m_; ++i) {
        for (uint32_t j = 0; j < m_; ++j) {
            uint32_t want = i == j ? 1u : 0u;
            if (trace_qm_to_q(mul_m(basis_[i], dual_basis_[j])) != want)
                throw InternalError("dual basis fails Tr(alpha_i beta_j) = delta_ij");
        }
    }
}

uint64_t FieldTower::add_m(uint64_t a, uint64_t b) const {
    if (char2_) return a ^ b;
    uint64_t code = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        code += static_cast<uint64_t>(add_q(static_cast<uint32_t>(a % q_), static_cast<uint32_t>(b % q_))) * place;
        a /= q_;
        b /= q_;
        place *= q_;
    }
    return code;
}

uint64_t FieldTower::neg_m(uint64_t a) const {
    if (char2_) return a;
    uint64_t code = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        code += static_cast<uint64_t>(neg_q(static_cast<uint32_t>(a % q_))) * place;
        a /= q_;
        place *= q_;
    }
    return code;
}

uint64_t FieldTower::mul_m(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_m_.empty()) return exp_m_[static_cast<uint64_t>(log_m_[a]) + log_m_[b]];
    return mul_m_poly(a, b);
}

uint64_t FieldTower::mul_m_poly(uint64_t a, uint64_t b) const {
    CoeffOps fq{q_, [this](uint64_t x, uint64_t y) { return add_q(static_cast<uint32_t>(x), static_cast<uint32_t>(y)); },
                [this](uint64_t x, uint64_t y) { return mul_q(static_cast<uint32_t>(x), static_cast<uint32_t>(y)); },
                [this](uint64_t x) { return neg_q(static_cast<uint32_t>(x)); }};
    Poly mod(modulus_qm_.begin(), modulus_qm_.end());
    return poly_to_code(poly_mulmod(code_to_poly(a, q_), code_to_poly(b, q_), mod, fq), q_);
}

uint64_t FieldTower::pow_m(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e != 0) {
        if (e & 1) r = mul_m(r, a);
        a = mul_m(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t FieldTower::scalar_mul_m(uint32_t c, uint64_t x) const {
    if (c == 0 || x == 0) return 0;
    uint64_t code = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        code += static_cast<uint64_t>(mul_q(c, static_cast<uint32_t>(x % q_))) * place;
        x /= q_;
        place *= q_;
    }
    return code;
}

uint32_t FieldTower::fq_check(uint64_t code) const {
    if (code >= q_) throw OutOfRangeError("Fq code out of range: " + std::to_string(code));
    return static_cast<uint32_t>(code);
}

uint64_t FieldTower::fqm_check(uint64_t code) const {
    if (code >= qm_) throw OutOfRangeError("Fq^m code out of range: " + std::to_string(code));
    return code;
}

std::vector<uint32_t> FieldTower::fq_coeffs(uint32_t x) const {
    std::vector<uint32_t> c(s_);
    for (uint32_t i = 0; i < s_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

uint32_t FieldTower::fq_from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() != s_) throw OutOfRangeError("Fq coefficient vector has wrong length");
    uint64_t code = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw OutOfRangeError("Fq coefficient out of range");
        code = code * p_ + c[i];
    }
    return static_cast<uint32_t>(code);
}

std::vector<uint32_t> FieldTower::fqm_coords(uint64_t x) const {
    std::vector<uint32_t> c(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        c[i] = static_cast<uint32_t>(x % q_);
        x /= q_;
    }
    return c;
}

uint64_t FieldTower::fqm_from_coords(const std::vector<uint32_t>& c) const {
    if (c.size() != m_) throw OutOfRangeError("Fq^m coordinate vector has wrong length");
    uint64_t code = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= q_) throw OutOfRangeError("Fq^m coordinate out of range");
        code = code * q_ + c[i];
    }
    return code;
}

}  // namespace fwcodes
