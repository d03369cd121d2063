#pragma once

// Prime field F_q (q odd prime) and the fixed character conventions used
// throughout: the additive character is t -> zeta_q^t, multiplicative
// characters are expressed through discrete logarithms to the smallest
// primitive root.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace borelsc {

class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Residue in [0, q). The modulus lives in the FieldSpec, not in the value.
struct FieldElem {
    std::uint32_t value = 0;

    constexpr FieldElem() = default;
    constexpr explicit FieldElem(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class FieldSpec {
  public:
    explicit FieldSpec(std::uint32_t q) : q_(q) {
        if (q < 3 || q >= (1u << 16) || !is_prime(q))
            throw DomainError("q must be an odd prime with 3 <= q < 65536, got " + std::to_string(q));
        dlog_.assign(q, 0);
        exp_.assign(q - 1, 0);
        for (std::uint32_t g = 2; g < q; ++g) {
            if (is_primitive_root(g)) {
                g0_ = g;
                break;
            }
        }
        std::uint32_t x = 1;
        for (std::uint32_t k = 0; k < q - 1; ++k) {
            exp_[k] = x;
            dlog_[x] = k;
            x = static_cast<std::uint32_t>((std::uint64_t{x} * g0_) % q);
        }
    }

    std::uint32_t q() const { return q_; }
    std::uint32_t primitive_root() const { return g0_; }

    FieldElem elem(std::int64_t v) const {
        auto r = v % static_cast<std::int64_t>(q_);
        if (r < 0) r += q_;
        return FieldElem(static_cast<std::uint32_t>(r));
    }
    FieldElem zero() const { return FieldElem(0); }
    FieldElem one() const { return FieldElem(1); }

    FieldElem add(FieldElem a, FieldElem b) const {
        auto s = a.value + b.value;
        return FieldElem(s >= q_ ? s - q_ : s);
    }
    FieldElem sub(FieldElem a, FieldElem b) const {
        return FieldElem(a.value >= b.value ? a.value - b.value : a.value + q_ - b.value);
    }
    FieldElem neg(FieldElem a) const { return FieldElem(a.value == 0 ? 0 : q_ - a.value); }
    FieldElem mul(FieldElem a, FieldElem b) const {
        return FieldElem(static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % q_));
    }
    FieldElem inv(FieldElem a) const {
        if (a.is_zero()) throw DomainError("inverse of zero in F_" + std::to_string(q_));
        return FieldElem(exp_[(q_ - 1 - dlog_[a.value]) % (q_ - 1)]);
    }
    FieldElem div(FieldElem a, FieldElem b) const {
        if (b.is_zero()) throw DomainError("division by zero in F_" + std::to_string(q_));
        return mul(a, inv(b));
    }
    FieldElem pow(FieldElem a, std::uint64_t e) const {
        FieldElem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Exponent k with g0^k = a, for nonzero a.
    std::uint32_t dlog(FieldElem a) const {
        if (a.is_zero()) throw DomainError("discrete log of zero");
        return dlog_[a.value];
    }
    FieldElem generator_power(std::uint64_t k) const { return FieldElem(exp_[k % (q_ - 1)]); }

    /// epsilon^t = zeta_q^(returned exponent).
    std::uint32_t additive_char_exponent(FieldElem t) const { return t.value % q_; }

    /// theta_e(h) = zeta_{q-1}^(returned exponent) for the character h -> zeta^(e*dlog h).
    std::uint32_t mult_char_exponent(FieldElem h, std::uint64_t e) const {
        if (h.is_zero()) throw DomainError("multiplicative character evaluated at zero");
        return static_cast<std::uint32_t>((e % (q_ - 1)) * dlog_[h.value] % (q_ - 1));
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.q_ == b.q_; }

  private:
    bool is_primitive_root(std::uint32_t g) const {
        std::uint32_t m = q_ - 1;
        for (std::uint32_t p = 2; p * p <= m || m > 1; ++p) {
            if (p * p > m) p = m;
            if (m % p == 0) {
                if (pow(FieldElem(g), (q_ - 1) / p) == one()) return false;
                while (m % p == 0) m /= p;
            }
        }
        return true;
    }

    std::uint32_t q_;
    std::uint32_t g0_ = 0;
    std::vector<std::uint32_t> dlog_;
    std::vector<std::uint32_t> exp_;
};

}  // namespace borelsc
