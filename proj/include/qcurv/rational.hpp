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
 * @file rational.hpp
 * @brief Base scalars of the coefficient tower: arbitrary-precision
 *        rationals (GMP-backed) and a prime field with a session modulus.
 *
 * Both types model the same small field interface (arithmetic operators,
 * inv(), is_zero(), is_one(), characteristic(), to_string()) so the whole
 * polynomial / rational-function tower can be instantiated over either.
 * Values are immutable in spirit: every operation returns a fresh canonical
 * value, nothing is shared, and concurrent use is safe.
 */

#ifndef QCURV_RATIONAL_HPP
#define QCURV_RATIONAL_HPP

#include <gmp.h>

#include <cstdlib>
#include <cstring>
#include <ostream>
#include <string>
#include <utility>

#include "qcurv/errors.hpp"

namespace qcurv {

/// Arbitrary-precision rational number in canonical form
/// (reduced fraction, positive denominator).
class Rat {
   public:
    Rat() { mpq_init(v_); }
    Rat(int n) : Rat(static_cast<long>(n)) {}
    Rat(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rat(long num, long den) {
        if (den == 0) throw DivisionByZero();
        mpq_init(v_);
        mpq_set_si(v_, num, den);
        mpq_canonicalize(v_);
    }
    /// Parses "a" or "a/b" with arbitrary-size decimal integers.
    explicit Rat(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw InputError("invalid rational literal: " + s);
        }
        mpq_canonicalize(v_);
    }

    Rat(const Rat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rat() { mpq_clear(v_); }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    int sgn() const { return mpq_sgn(v_); }

    static constexpr long characteristic() { return 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DivisionByZero();
        Rat r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    Rat operator-() const {
        Rat r;
        mpq_neg(r.v_, v_);
        return r;
    }
    Rat& operator+=(const Rat& b) {
        mpq_add(v_, v_, b.v_);
        return *this;
    }
    Rat& operator-=(const Rat& b) {
        mpq_sub(v_, v_, b.v_);
        return *this;
    }
    Rat& operator*=(const Rat& b) {
        mpq_mul(v_, v_, b.v_);
        return *this;
    }
    Rat& operator/=(const Rat& b) {
        if (b.is_zero()) throw DivisionByZero();
        mpq_div(v_, v_, b.v_);
        return *this;
    }

    Rat inv() const {
        if (is_zero()) throw DivisionByZero();
        Rat r;
        mpq_inv(r.v_, v_);
        return r;
    }

    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        Rat base = e < 0 ? inv() : *this;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        Rat r;
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), n);
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), n);
        return r;  // powers of a canonical fraction stay canonical
    }

    Rat abs() const {
        Rat r;
        mpq_abs(r.v_, v_);
        return r;
    }

    double to_double() const { return mpq_get_d(v_); }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_) < 0; }

    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, std::strlen(s) + 1);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

   private:
    mpq_t v_;
};

/// Prime field F_p with a session-wide modulus. The modulus is set once at
/// startup (or per test section); elements are canonical representatives
/// in [0, p).
class Fp {
   public:
    Fp() : v_(0) {}
    Fp(int n) : Fp(static_cast<long>(n)) {}
    Fp(long n) {
        const long p = modulus();
        v_ = n % p;
        if (v_ < 0) v_ += p;
    }
    explicit Fp(const std::string& s) {
        const long p = modulus();
        // reduce a decimal literal of arbitrary size mod p
        long acc = 0;
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        if (i == s.size()) throw InputError("invalid integer literal: " + s);
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw InputError("invalid integer literal: " + s);
            acc = (acc * 10 + (s[i] - '0')) % p;
        }
        v_ = neg && acc != 0 ? p - acc : acc;
    }

    static void set_modulus(long p) {
        if (p < 2) throw InputError("characteristic must be a prime >= 2");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw InputError("characteristic must be prime: " + std::to_string(p));
        modulus_ref() = p;
    }
    static long modulus() {
        const long p = modulus_ref();
        if (p == 0) throw std::logic_error("Fp used before set_modulus()");
        return p;
    }
    static long characteristic() { return modulus(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    long value() const { return v_; }

    friend Fp operator+(const Fp& a, const Fp& b) { return from_raw((a.v_ + b.v_) % modulus()); }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long r = a.v_ - b.v_;
        if (r < 0) r += modulus();
        return from_raw(r);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        return from_raw(static_cast<long>(static_cast<__int128>(a.v_) * b.v_ % modulus()));
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    Fp operator-() const { return v_ == 0 ? *this : from_raw(modulus() - v_); }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    Fp inv() const {
        if (v_ == 0) throw DivisionByZero();
        // extended Euclid on (v, p)
        long a = v_, m = modulus(), u = 1, w = 0;
        while (a != 0) {
            long qq = m / a;
            m -= qq * a;
            std::swap(a, m);
            w -= qq * u;
            std::swap(u, w);
        }
        // m holds gcd = 1, w its Bezout coefficient for v_
        long r = w % modulus();
        if (r < 0) r += modulus();
        return from_raw(r);
    }

    Fp pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Fp base = *this, r = from_raw(1 % modulus());
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    std::string to_string() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

   private:
    static Fp from_raw(long v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    static long& modulus_ref() {
        static long p = 0;
        return p;
    }
    long v_;
};

/// The interface both base scalars (and the derived tower rings) satisfy.
template <class T>
concept RingScalar = requires(const T a, const T b) {
    T();
    T(1);
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a* b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a.inv() } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

}  // namespace qcurv

#endif  // QCURV_RATIONAL_HPP
