#pragma once

// Exact arithmetic in Q(zeta_M). A value is stored in the power basis
// 1, zeta, ..., zeta^(phi(M)-1) reduced modulo the M-th cyclotomic
// polynomial, with GMP rationals as coefficients.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace borelsc {

namespace detail {

using IntPoly = std::vector<mpz_class>;

inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
    // den is monic
    std::size_t dn = den.size() - 1;
    if (num.size() <= dn) return {};
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        mpz_class c = num[k];
        quot[k - dn] = c;
        if (c != 0)
            for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    return quot;
}

/// Computes Phi_M by dividing x^M - 1 by Phi_d for every proper divisor d.
class CyclotomicPolys {
  public:
    static const IntPoly& get(std::uint64_t m) {
        static CyclotomicPolys cache;
        std::lock_guard lock(cache.mu_);
        return cache.compute(m);
    }

  private:
    const IntPoly& compute(std::uint64_t m) {
        auto it = table_.find(m);
        if (it != table_.end()) return it->second;
        IntPoly p(m + 1, 0);
        p[0] = -1;
        p[m] = 1;
        for (std::uint64_t d = 1; d < m; ++d)
            if (m % d == 0) p = poly_divide_exact(p, compute(d));
        return table_.emplace(m, std::move(p)).first->second;
    }

    std::mutex mu_;
    std::map<std::uint64_t, IntPoly> table_;
};

inline std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t r = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

/// Reduces a polynomial with rational coefficients modulo Phi_M in place.
inline void reduce_mod_phi(std::vector<mpq_class>& c, std::uint64_t m) {
    const IntPoly& phi = CyclotomicPolys::get(m);
    std::size_t deg = phi.size() - 1;
    for (std::size_t k = c.size(); k-- > deg;) {
        if (c[k] == 0) continue;
        mpq_class lead = c[k];
        for (std::size_t i = 0; i < deg; ++i)
            if (phi[i] != 0) c[k - deg + i] -= lead * phi[i];
        c[k] = 0;
    }
    c.resize(deg, 0);
}

}  // namespace detail

class CyclotomicNumber {
  public:
    /// Zero in Q(zeta_1) = Q.
    CyclotomicNumber() : order_(1), coeffs_(1, 0) {}

    CyclotomicNumber(long v) : order_(1), coeffs_(1, mpq_class(v)) {}  // NOLINT: implicit by design of arithmetic
    CyclotomicNumber(const mpq_class& v) : order_(1), coeffs_(1, v) {}  // NOLINT

    /// zeta_M^k.
    static CyclotomicNumber root(std::uint64_t m, std::int64_t k) {
        if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
        auto e = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(m)) + m) % m);
        std::vector<mpq_class> c(e + 1, 0);
        c[e] = 1;
        return from_unreduced(m, std::move(c));
    }

    /// sum_k counts[k] * zeta_M^k, with counts.size() == M.
    static CyclotomicNumber from_exponent_counts(std::uint64_t m, const std::vector<std::int64_t>& counts) {
        std::vector<mpq_class> c(counts.size(), 0);
        for (std::size_t k = 0; k < counts.size(); ++k) c[k] = static_cast<long>(counts[k]);
        return from_unreduced(m, std::move(c));
    }

    /// Coefficients in the power basis of zeta_M (any length; reduced here).
    static CyclotomicNumber from_unreduced(std::uint64_t m, std::vector<mpq_class> c) {
        CyclotomicNumber r;
        r.order_ = m;
        detail::reduce_mod_phi(c, m);
        r.coeffs_ = std::move(c);
        return r;
    }

    std::uint64_t order() const { return order_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    /// Constant coefficient; meaningful when is_rational().
    mpq_class rational_part() const { return coeffs_.empty() ? mpq_class(0) : coeffs_[0]; }

    /// Same value expressed in Q(zeta_L); L must be a multiple of the order.
    CyclotomicNumber lift(std::uint64_t l) const {
        if (l % order_ != 0) throw std::invalid_argument("lift target is not a multiple of the order");
        if (l == order_) return *this;
        std::uint64_t step = l / order_;
        std::vector<mpq_class> c(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
        return from_unreduced(l, std::move(c));
    }

    /// Expresses the value in the smallest Q(zeta_d), d | M, that contains it.
    CyclotomicNumber normalized() const;

    CyclotomicNumber conj() const {
        // zeta^i -> zeta^(M-i)
        std::vector<mpq_class> c(order_ + 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[(order_ - i) % order_] += coeffs_[i];
        return from_unreduced(order_, std::move(c));
    }

    std::complex<double> to_complex() const {
        std::complex<double> z = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
            z += coeffs_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return z;
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return combine(a, b, +1);
    }
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return combine(a, b, -1);
    }
    friend CyclotomicNumber operator-(const CyclotomicNumber& a) { return CyclotomicNumber(0L) - a; }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        std::uint64_t l = std::lcm(a.order_, b.order_);
        CyclotomicNumber x = a.lift(l), y = b.lift(l);
        if (x.is_rational() || y.is_rational()) {
            const CyclotomicNumber& v = x.is_rational() ? y : x;
            mpq_class s = x.is_rational() ? x.rational_part() : y.rational_part();
            CyclotomicNumber r = v;
            for (auto& c : r.coeffs_) c *= s;
            return r;
        }
        std::vector<mpq_class> c(x.coeffs_.size() + y.coeffs_.size(), 0);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                if (y.coeffs_[j] != 0) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return from_unreduced(l, std::move(c));
    }

    /// Division by a nonzero rational.
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const mpq_class& d) {
        if (d == 0) throw std::domain_error("cyclotomic division by zero");
        CyclotomicNumber r = a;
        for (auto& c : r.coeffs_) c /= d;
        return r;
    }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        std::uint64_t l = std::lcm(a.order_, b.order_);
        return a.lift(l).coeffs_ == b.lift(l).coeffs_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += coeffs_[i].get_str();
            if (i > 0) s += "*z" + std::to_string(order_) + "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

  private:
    static CyclotomicNumber combine(const CyclotomicNumber& a, const CyclotomicNumber& b, int sign) {
        std::uint64_t l = std::lcm(a.order_, b.order_);
        CyclotomicNumber x = a.lift(l);
        const CyclotomicNumber y = b.lift(l);
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) {
            if (sign > 0)
                x.coeffs_[i] += y.coeffs_[i];
            else
                x.coeffs_[i] -= y.coeffs_[i];
        }
        return x;
    }

    std::uint64_t order_;
    std::vector<mpq_class> coeffs_;
};

inline CyclotomicNumber CyclotomicNumber::normalized() const {
    if (is_rational()) return CyclotomicNumber(rational_part());
    // Candidate subfields Q(zeta_d), d | M ascending; solve lift(y) = x exactly.
    for (std::uint64_t d = 2; d < order_; ++d) {
        if (order_ % d != 0) continue;
        std::size_t rows = coeffs_.size();
        std::size_t cols = detail::euler_phi(d);
        // columns: lifts of zeta_d^j
        std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1, 0));
        for (std::size_t j = 0; j < cols; ++j) {
            CyclotomicNumber basis = root(d, static_cast<std::int64_t>(j)).lift(order_);
            for (std::size_t i = 0; i < rows; ++i) a[i][j] = basis.coeffs_[i];
        }
        for (std::size_t i = 0; i < rows; ++i) a[i][cols] = coeffs_[i];
        std::size_t r = 0;
        std::vector<std::size_t> pivcol;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t p = r;
            while (p < rows && a[p][c] == 0) ++p;
            if (p == rows) continue;
            std::swap(a[p], a[r]);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || a[i][c] == 0) continue;
                mpq_class f = a[i][c] / a[r][c];
                for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
            }
            pivcol.push_back(c);
            ++r;
        }
        bool consistent = true;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][cols] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<mpq_class> y(cols, 0);
        for (std::size_t i = 0; i < r; ++i) y[pivcol[i]] = a[i][cols] / a[i][pivcol[i]];
        return from_unreduced(d, std::move(y));
    }
    return *this;
}

}  // namespace borelsc
