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

#include "bbs/coeff.hpp"

namespace bbs {

namespace {

long mod_reduce(long v, long p) {
    long r = v % p;
    if (r < 0) r += p;
    return r;
}

// Inverse mod p via extended Euclid.
long mod_inverse(long a, long p) {
    long t = 0, newt = 1;
    long r = p, newr = mod_reduce(a, p);
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw MathError("not invertible mod " + std::to_string(p));
    return mod_reduce(t, p);
}

bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(long p) {
    if (p <= 1 || p >= (1L << 31) || !is_small_prime(p))
        throw InputError("field characteristic must be a prime < 2^31, got " + std::to_string(p));
    return Field(p);
}

std::string Field::to_string() const {
    return is_rationals() ? "QQ" : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& s) {
    if (s == "QQ" || s == "Q" || s.empty()) return rationals();
    if (s.rfind("Fp:", 0) == 0) return prime(std::stol(s.substr(3)));
    if (s.rfind("F", 0) == 0 && s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1])))
        return prime(std::stol(s.substr(1)));
    throw InputError("cannot parse field descriptor '" + s + "' (expected QQ or Fp:<p>)");
}

FieldElem FieldElem::zero(const Field& k) { return from_int(0, k); }
FieldElem FieldElem::one(const Field& k) { return from_int(1, k); }

FieldElem FieldElem::from_int(long n, const Field& k) {
    FieldElem e;
    if (k.is_rationals()) {
        e.p_ = 0;
        e.q_ = mpq_class(n);
    } else {
        e.p_ = k.characteristic();
        e.r_ = mod_reduce(n, e.p_);
    }
    return e;
}

FieldElem FieldElem::rational(const mpq_class& q) {
    FieldElem e;
    e.p_ = 0;
    e.q_ = q;
    e.q_.canonicalize();
    return e;
}

FieldElem FieldElem::mod_p(long value, long p) {
    return from_int(value, Field::prime(p));
}

FieldElem FieldElem::parse(const std::string& s, const Field& k) {
    if (s.empty()) throw InputError("empty coefficient literal");
    if (k.is_rationals()) {
        try {
            mpq_class q(s);
            q.canonicalize();
            return rational(q);
        } catch (const std::invalid_argument&) {
            throw InputError("cannot parse rational '" + s + "'");
        }
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_int(std::stol(s), k);
    FieldElem num = from_int(std::stol(s.substr(0, slash)), k);
    FieldElem den = from_int(std::stol(s.substr(slash + 1)), k);
    return num / den;
}

bool FieldElem::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool FieldElem::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void FieldElem::check_same_field(const FieldElem& o) const {
    if (p_ != o.p_)
        throw ContextError("field mismatch: " + field().to_string() + " vs " + o.field().to_string());
}

FieldElem FieldElem::operator-() const {
    FieldElem e(*this);
    if (p_ == 0)
        e.q_ = -q_;
    else
        e.r_ = r_ == 0 ? 0 : p_ - r_;
    return e;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(o);
    FieldElem e(*this);
    if (p_ == 0)
        e.q_ = q_ + o.q_;
    else
        e.r_ = mod_reduce(r_ + o.r_, p_);
    return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(o);
    FieldElem e(*this);
    if (p_ == 0)
        e.q_ = q_ - o.q_;
    else
        e.r_ = mod_reduce(r_ - o.r_, p_);
    return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(o);
    FieldElem e(*this);
    if (p_ == 0)
        e.q_ = q_ * o.q_;
    else
        e.r_ = mod_reduce(r_ * o.r_, p_);  // p < 2^31 so the product fits in long
    return e;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw MathError("inverse of zero");
    FieldElem e(*this);
    if (p_ == 0)
        e.q_ = 1 / q_;
    else
        e.r_ = mod_inverse(r_, p_);
    return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(o);
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

int FieldElem::cmp(const FieldElem& o) const {
    check_same_field(o);
    if (p_ == 0) return ::cmp(q_, o.q_);
    return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

std::string FieldElem::to_string() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_);
}

}  // namespace bbs
