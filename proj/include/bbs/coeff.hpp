/*
   Copyright 2026 The bbs authors

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

#ifndef BBS_COEFF_HPP
#define BBS_COEFF_HPP

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "bbs/error.hpp"

namespace bbs {

/// Coefficient field descriptor: the rationals or a prime field F_p (p < 2^31).
class Field {
  public:
    Field() : p_(0) {}
    static Field rationals() { return Field(); }
    static Field prime(long p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    long characteristic() const { return p_; }

    bool operator==(const Field& other) const { return p_ == other.p_; }
    bool operator!=(const Field& other) const { return p_ != other.p_; }

    std::string to_string() const;
    /// Parses "QQ" or "Fp:<p>".
    static Field parse(const std::string& s);

  private:
    explicit Field(long p) : p_(p) {}
    long p_;  // 0 = QQ
};

/// An element of the coefficient field, self-describing (carries its field).
///
/// Canonical form: rationals are reduced fractions with positive denominator
/// (GMP keeps mpq_class canonical); F_p values lie in [0, p).
class FieldElem {
  public:
    FieldElem() : p_(0), r_(0) {}  // 0 in QQ

    static FieldElem zero(const Field& k);
    static FieldElem one(const Field& k);
    static FieldElem from_int(long n, const Field& k);
    static FieldElem rational(const mpq_class& q);
    static FieldElem mod_p(long value, long p);
    /// Parses "a", "-a" or "a/b" in the given field.
    static FieldElem parse(const std::string& s, const Field& k);

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;  // div-by-zero -> MathError
    FieldElem inverse() const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// Total order for deterministic output (QQ: numeric; F_p: residue).
    int cmp(const FieldElem& o) const;

    const mpq_class& rational_value() const { return q_; }
    long residue() const { return r_; }

    std::string to_string() const;

  private:
    void check_same_field(const FieldElem& o) const;
    long p_;        // 0 = QQ
    mpq_class q_;   // used when p_ == 0
    long r_;        // used when p_ != 0, in [0, p)
};

}  // namespace bbs

#endif
