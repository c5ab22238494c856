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

#ifndef BBS_POLYNOMIAL_HPP
#define BBS_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bbs/ring.hpp"

namespace bbs {

/// Sparse exact-coefficient multivariate polynomial. Terms are kept in a
/// canonical storage order (no term ordering is baked in; orderings sort
/// views on demand). No zero coefficients are stored; zero is the empty set.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const FieldElem& c, const Ring& ring);
    static Polynomial from_int(long n, const Ring& ring);
    static Polynomial monomial(const FieldElem& c, const Term& t, const Ring& ring);
    static Polynomial term(const Term& t, const Ring& ring);
    static Polynomial variable(int i, const Ring& ring);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    bool is_one() const;
    int num_terms() const { return static_cast<int>(terms_.size()); }
    /// Total degree; MathError on 0.
    int degree() const;
    /// Total degree in a variable subset.
    int degree_in(const std::vector<int>& vars) const;

    const std::vector<std::pair<Term, FieldElem>>& terms() const { return terms_; }
    FieldElem coefficient(const Term& t) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator*(const FieldElem& c) const;
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial multiplied_by_term(const Term& t) const;
    Polynomial multiplied_by_monomial(const FieldElem& c, const Term& t) const;

    /// The ord-maximal term with its coefficient; MathError on 0.
    std::pair<Term, FieldElem> leading_term(const TermOrdering& ord) const;
    Polynomial monic(const TermOrdering& ord) const;
    /// Sign-normalized: leading coefficient positive (QQ) / as-is (F_p monic).
    Polynomial normalized_sign(const TermOrdering& ord) const;

    /// Sum of the terms of top total degree; MathError on 0.
    Polynomial degree_form() const;
    /// Terms grouped by total degree, ascending.
    std::vector<Polynomial> homogeneous_components() const;
    bool is_homogeneous() const;

    /// Each term multiplied by z^(deg f - deg term); z must not occur in f.
    Polynomial homogenized(int z_var) const;

    /// Ring homomorphism image; unlisted variables map to themselves.
    /// Assignment targets live in `target` (defaults to this ring).
    Polynomial substituted(const std::map<int, Polynomial>& assignment) const;
    /// Substitute constants for a variable subset.
    Polynomial evaluated(const std::map<int, FieldElem>& values) const;

    /// True if the polynomial only involves the given variables.
    bool supported_on(const std::vector<int>& vars) const;
    /// The set of variables with nonzero exponent somewhere.
    std::vector<int> support_vars() const;

    /// Coefficient extraction: group terms by their sub-term on `vars`;
    /// returns (sub-term on vars, cofactor polynomial) pairs, deterministic
    /// (descending DegRevLex on the sub-terms).
    std::vector<std::pair<Term, Polynomial>> coefficients_on(const std::vector<int>& vars) const;

    /// Map into a compatible ring with the same variables prefix plus extras.
    Polynomial promoted(const Ring& bigger) const;
    /// Map back from an extended ring; fails if extra variables occur.
    Polynomial restricted(const Ring& smaller) const;

    /// Canonical text: terms in descending DegRevLex, reduced coefficients.
    std::string to_string() const;
    std::string to_string(const TermOrdering& ord) const;

    /// Terms sorted descending by ord.
    std::vector<std::pair<Term, FieldElem>> sorted_terms(const TermOrdering& ord) const;

    /// Parses "x^2*y - 4*x^2 - x*y + 4*x" (also juxtaposed "x^2y", unicode
    /// minus tolerated).
    static Polynomial parse(const std::string& text, const Ring& ring);

    /// Builds from an accumulator map (drops zeros).
    static Polynomial from_map(std::map<Term, FieldElem>&& acc, const Ring& ring);

  private:
    void check_ring(const Polynomial& g, const char* where) const;
    Ring ring_;
    std::vector<std::pair<Term, FieldElem>> terms_;  // sorted by Term::operator<
};

Polynomial operator*(const FieldElem& c, const Polynomial& f);

/// Parses a single power product like "x^2y", "x*y^3", "1".
Term parse_term(const std::string& text, const Ring& ring);

}  // namespace bbs

#endif
