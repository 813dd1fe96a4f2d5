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

#ifndef QCURV_ERRORS_HPP
#define QCURV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcurv {

/// Bad user input: file syntax, inconsistent headers, invalid flag values.
/// CLI exit code 1.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A computation hit a configured window or budget (shearing window,
/// truncation cap, resonance). CLI exit code 2.
class LimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
   public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class ZeroArgument : public std::domain_error {
   public:
    ZeroArgument() : std::domain_error("zero argument") {}
};

/// Element is not a unit in its ring. Over k = Q this only happens for zero;
/// in characteristic p the cyclotomic quotient has zero divisors.
class NotInvertible : public std::domain_error {
   public:
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

/// A cyclotomic order at which the system does not reduce. Scans convert
/// this into a skip-and-report verdict instead of failing.
class BadPlace : public std::runtime_error {
   public:
    long ell;
    std::string reason;
    BadPlace(long l, std::string r)
        : std::runtime_error("bad place at ell=" + std::to_string(l) + ": " + r),
          ell(l),
          reason(std::move(r)) {}
};

class SingularMatrix : public std::domain_error {
   public:
    SingularMatrix() : std::domain_error("singular matrix") {}
};

class SingularGauge : public InputError {
   public:
    SingularGauge() : InputError("gauge matrix is singular") {}
};

class RankMismatch : public InputError {
   public:
    explicit RankMismatch(const std::string& what) : InputError(what) {}
};

class ZeroDeterminant : public InputError {
   public:
    ZeroDeterminant() : InputError("system matrix has zero determinant") {}
};

class ZeroLeadingCoefficient : public InputError {
   public:
    ZeroLeadingCoefficient() : InputError("leading coefficient of the scalar equation is zero") {}
};

/// No regularizing lattice was found within the search window: the
/// singularity at 0 is irregular, or the window is too small.
class ShearingFailed : public LimitError {
   public:
    long window;
    explicit ShearingFailed(long w)
        : LimitError("no regularizing shearing found within window " + std::to_string(w)),
          window(w) {}
};

/// Two exponent candidates differ by a nonzero power of q; the recursive
/// normalization has a singular step and shearing preparation is required.
class Resonant : public LimitError {
   public:
    Resonant() : LimitError("resonant exponents: normalization step is singular") {}
};

class SingularLinearSolve : public LimitError {
   public:
    SingularLinearSolve() : LimitError("singular linear solve") {}
};

class NotNormalized : public std::logic_error {
   public:
    NotNormalized() : std::logic_error("system is not normalized: A1(0) must be the identity") {}
};

class SingularAtZero : public std::domain_error {
   public:
    SingularAtZero() : std::domain_error("matrix has a pole or singular constant term at x=0") {}
};

class NotPrepared : public LimitError {
   public:
    explicit NotPrepared(const std::string& what) : LimitError(what) {}
};

class UnitModulus : public InputError {
   public:
    UnitModulus() : InputError("|q| must be > 1 for numeric evaluation") {}
};

class NearPole : public std::domain_error {
   public:
    NearPole() : std::domain_error("evaluation point is too close to a pole orbit") {}
};

class NoConvergence : public LimitError {
   public:
    long max_factors;
    explicit NoConvergence(long mf)
        : LimitError("product did not converge within " + std::to_string(mf) + " factors"),
          max_factors(mf) {}
};

}  // namespace qcurv

#endif  // QCURV_ERRORS_HPP
