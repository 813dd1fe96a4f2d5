/*
   Copyright 2026 The qcurv developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an arbitrary coefficient field.
 *
 * Coefficients are stored in ascending degree; the zero polynomial is the
 * empty list and no trailing zero coefficient is ever kept, so equality is
 * structural. The same template serves polynomials in q over the base
 * scalars and polynomials in x over any of the tower rings.
 */

#ifndef QCURV_POLYNOMIAL_HPP
#define QCURV_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qcurv/errors.hpp"
#include "qcurv/rational.hpp"

namespace qcurv {

template <RingScalar K>
class Poly {
   public:
    Poly() = default;
    Poly(long c) {
        if (c != 0) c_.push_back(K(c));
    }
    Poly(const K& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// c * t^e
    static Poly monomial(const K& c, int e) {
        Poly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<size_t>(e) + 1, K());
            p.c_.back() = c;
        }
        return p;
    }
    static Poly variable() { return monomial(K(1), 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// Degree, with deg 0 = -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : K();
    }
    const K& leading() const {
        if (is_zero()) throw ZeroArgument();
        return c_.back();
    }
    /// Index of the lowest nonzero coefficient (order at 0); -1 for zero.
    int order_at_zero() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K());
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) {
        if (s.is_zero()) return Poly();
        Poly r(a);
        for (auto& c : r.c_) c = s * c;
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Multiply by t^e (e >= 0).
    Poly shifted(int e) const {
        if (is_zero() || e == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + static_cast<size_t>(e), K());
        std::copy(c_.begin(), c_.end(), r.c_.begin() + e);
        return r;
    }

    /// t^(deg) * p(1/t).
    Poly reversed() const {
        Poly r(*this);
        std::reverse(r.c_.begin(), r.c_.end());
        r.trim();
        return r;
    }

    /// p(c * t): coefficient i is scaled by c^i.
    Poly scaled_arg(const K& c) const {
        Poly r(*this);
        K power(1);
        for (size_t i = 1; i < r.c_.size(); ++i) {
            power = power * c;
            r.c_[i] = r.c_[i] * power;
        }
        r.trim();
        return r;
    }

    K eval(const K& t) const {
        K acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return leading().inv() * *this;
    }

    Poly pow(long e) const {
        if (e < 0) throw ZeroArgument();
        Poly r(1), base(*this);
        while (e > 0) {
            if (e & 1) r *= base;
            if ((e >>= 1) != 0) base *= base;
        }
        return r;
    }

    std::string to_string(const std::string& var) const;

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Euclidean division; the divisor's leading coefficient must be a unit.
template <RingScalar K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Poly<K>(), a};
    const K lead_inv = b.leading().inv();
    std::vector<K> rem(a.coeffs());
    std::vector<K> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, K());
    for (int i = a.degree(); i >= b.degree(); --i) {
        K c = rem[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        c = c * lead_inv;
        quot[static_cast<size_t>(i - b.degree())] = c;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(i - b.degree() + j)] -= c * b.coeff(j);
    }
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

/// Monic gcd by the Euclidean algorithm, normalizing every remainder to
/// keep coefficient growth in check.
template <RingScalar K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly<K> r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a;
}

/// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
template <RingScalar K>
std::array<Poly<K>, 3> ext_gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0(1), u1, v0, v1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    const K s = r0.leading().inv();
    return {s * r0, s * u0, s * v0};
}

template <RingScalar K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    return divmod(a * b, gcd(a, b)).first.monic();
}

template <RingScalar K>
std::string Poly<K>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        const K& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        const bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        const bool needs_paren = cs.find_first_of("+- /") != std::string::npos;
        if (i == 0) {
            out += needs_paren ? "(" + cs + ")" : cs;
        } else {
            if (!(cs == "1")) out += (needs_paren ? "(" + cs + ")" : cs) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qcurv

#endif  // QCURV_POLYNOMIAL_HPP
