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

#ifndef BBS_ORDER_IDEAL_HPP
#define BBS_ORDER_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "bbs/polynomial.hpp"

namespace bbs {

/// A factor-closed finite term set with its border, both canonically sorted:
/// degree ascending, descending DegRevLex within a degree (explicit lists may
/// override either, e.g. to align indices with externally printed data).
/// Field-agnostic: carries only the ambient variable names.
class OrderIdeal {
  public:
    /// Canonical sort for both the terms and the computed border.
    static OrderIdeal make(std::vector<Term> terms, std::vector<std::string> xvars,
                           std::optional<std::vector<Term>> border_override = std::nullopt);
    /// Keeps the given term order (must be degree-nondecreasing).
    static OrderIdeal make_with_term_order(std::vector<Term> terms, std::vector<std::string> xvars,
                                           std::optional<std::vector<Term>> border_override = std::nullopt);
    /// Parses comma-separated term lists like "1,x,y,x^2".
    static OrderIdeal parse(const std::string& terms_csv, const std::vector<std::string>& xvars,
                            const std::string& border_csv = "");

    int n() const { return static_cast<int>(xvars_.size()); }
    int mu() const { return static_cast<int>(terms_.size()); }
    int nu() const { return static_cast<int>(border_.size()); }
    const std::vector<std::string>& xvars() const { return xvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    const std::vector<Term>& border() const { return border_; }
    const Term& term(int i) const { return terms_[i]; }         // 0-based
    const Term& border_term(int j) const { return border_[j]; }  // 0-based

    /// 0-based index, -1 if absent.
    int index_of(const Term& t) const;
    int border_index_of(const Term& b) const;
    bool contains(const Term& t) const { return index_of(t) >= 0; }

    int max_degree() const { return terms_.back().degree(); }
    /// Count of terms of maximal degree (the Delta of the locus algorithms).
    int top_degree_count() const;
    /// deg(t_i) <= deg(b_j) for all i,j.
    bool has_maxdeg_border() const;

    bool operator==(const OrderIdeal& o) const { return xvars_ == o.xvars_ && terms_ == o.terms_; }

    std::string to_string() const;

    /// Descending DegRevLex comparison used for the canonical intra-degree sort.
    static bool canonical_term_less(const Term& a, const Term& b);

  private:
    OrderIdeal() = default;
    static std::vector<Term> compute_border(const std::vector<Term>& terms, int n);
    void validate_factor_closed() const;
    void apply_border(std::optional<std::vector<Term>> border_override);

    std::vector<std::string> xvars_;
    std::vector<Term> terms_;
    std::vector<Term> border_;
};

/// All terms of the given degree in n variables, descending DegRevLex.
std::vector<Term> terms_of_degree(int degree, int n);
/// All terms of degree <= bound, (degree asc, descending DegRevLex within).
std::vector<Term> terms_up_to_degree(int bound, int n);

}  // namespace bbs

#endif
