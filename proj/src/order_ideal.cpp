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

#include "bbs/order_ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bbs {

namespace {

// degree ascending, then descending DegRevLex (declaration-order priority)
bool canonical_less(const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    TermOrdering drl = TermOrdering::degrevlex(a.nvars());
    return drl.greater(a, b);
}

}  // namespace

bool OrderIdeal::canonical_term_less(const Term& a, const Term& b) { return canonical_less(a, b); }

std::vector<Term> OrderIdeal::compute_border(const std::vector<Term>& terms, int n) {
    std::set<Term> inside(terms.begin(), terms.end());
    std::set<Term> border;
    for (const Term& t : terms)
        for (int k = 0; k < n; ++k) {
            Term shifted = t * Term::variable(k, n);
            if (!inside.count(shifted)) border.insert(shifted);
        }
    std::vector<Term> out(border.begin(), border.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

void OrderIdeal::validate_factor_closed() const {
    std::set<Term> inside(terms_.begin(), terms_.end());
    for (const Term& t : terms_) {
        for (int k = 0; k < n(); ++k) {
            if (t.exponent(k) == 0) continue;
            Term divisor = Term::variable(k, n()).quotient_into(t);
            if (!inside.count(divisor))
                throw InputError("not an order ideal: missing divisor " +
                                 divisor.to_string(Ring(xvars_, Field::rationals())) + " of " +
                                 t.to_string(Ring(xvars_, Field::rationals())));
        }
    }
}

void OrderIdeal::apply_border(std::optional<std::vector<Term>> border_override) {
    std::vector<Term> computed = compute_border(terms_, n());
    if (!border_override) {
        border_ = std::move(computed);
        return;
    }
    std::set<Term> a(computed.begin(), computed.end());
    std::set<Term> b(border_override->begin(), border_override->end());
    if (a != b || border_override->size() != computed.size())
        throw InputError("border override is not a permutation of the true border");
    border_ = std::move(*border_override);
}

OrderIdeal OrderIdeal::make(std::vector<Term> terms, std::vector<std::string> xvars,
                            std::optional<std::vector<Term>> border_override) {
    std::sort(terms.begin(), terms.end(), canonical_less);
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return make_with_term_order(std::move(terms), std::move(xvars), std::move(border_override));
}

OrderIdeal OrderIdeal::make_with_term_order(std::vector<Term> terms, std::vector<std::string> xvars,
                                            std::optional<std::vector<Term>> border_override) {
    if (terms.empty()) throw InputError("empty order ideal");
    OrderIdeal O;
    O.xvars_ = std::move(xvars);
    for (const Term& t : terms)
        if (t.nvars() != static_cast<int>(O.xvars_.size()))
            throw InputError("term arity does not match the variable list");
    for (size_t i = 0; i + 1 < terms.size(); ++i)
        if (terms[i].degree() > terms[i + 1].degree())
            throw InputError("order ideal term list must be degree-nondecreasing");
    std::set<Term> dedup(terms.begin(), terms.end());
    if (dedup.size() != terms.size()) throw InputError("duplicate term in order ideal");
    O.terms_ = std::move(terms);
    if (!O.terms_[0].is_one()) throw InputError("not an order ideal: 1 missing");
    O.validate_factor_closed();
    O.apply_border(std::move(border_override));
    return O;
}

OrderIdeal OrderIdeal::parse(const std::string& terms_csv, const std::vector<std::string>& xvars,
                             const std::string& border_csv) {
    Ring ring(xvars, Field::rationals());
    auto split = [&](const std::string& csv) {
        std::vector<Term> out;
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            out.push_back(parse_term(item, ring));
        }
        return out;
    };
    std::optional<std::vector<Term>> border;
    if (!border_csv.empty()) border = split(border_csv);
    return make(split(terms_csv), xvars, std::move(border));
}

int OrderIdeal::index_of(const Term& t) const {
    for (int i = 0; i < mu(); ++i)
        if (terms_[i] == t) return i;
    return -1;
}

int OrderIdeal::border_index_of(const Term& b) const {
    for (int j = 0; j < nu(); ++j)
        if (border_[j] == b) return j;
    return -1;
}

int OrderIdeal::top_degree_count() const {
    int d = max_degree();
    int count = 0;
    for (const Term& t : terms_)
        if (t.degree() == d) ++count;
    return count;
}

bool OrderIdeal::has_maxdeg_border() const {
    int max_t = max_degree();
    for (const Term& b : border_)
        if (b.degree() < max_t) return false;
    return true;
}

std::string OrderIdeal::to_string() const {
    Ring ring(xvars_, Field::rationals());
    std::ostringstream os;
    for (int i = 0; i < mu(); ++i) {
        if (i) os << ",";
        os << terms_[i].to_string(ring);
    }
    return os.str();
}

std::vector<Term> terms_of_degree(int degree, int n) {
    std::vector<Term> out;
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            e[pos] = left;
            out.push_back(Term(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[pos] = k;
            rec(pos + 1, left - k);
        }
        e[pos] = 0;
    };
    if (n == 0) {
        if (degree == 0) out.push_back(Term(0));
        return out;
    }
    rec(0, degree);
    TermOrdering drl = TermOrdering::degrevlex(n);
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return drl.greater(a, b); });
    return out;
}

std::vector<Term> terms_up_to_degree(int bound, int n) {
    std::vector<Term> out;
    for (int d = 0; d <= bound; ++d) {
        auto level = terms_of_degree(d, n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace bbs
