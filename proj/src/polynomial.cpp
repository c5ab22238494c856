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

#include "bbs/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bbs {

Polynomial Polynomial::constant(const FieldElem& c, const Ring& ring) {
    Polynomial f(ring);
    if (!c.is_zero()) f.terms_.emplace_back(Term::one(ring.nvars()), c);
    return f;
}

Polynomial Polynomial::from_int(long n, const Ring& ring) {
    return constant(FieldElem::from_int(n, ring.field()), ring);
}

Polynomial Polynomial::monomial(const FieldElem& c, const Term& t, const Ring& ring) {
    Polynomial f(ring);
    if (!c.is_zero()) f.terms_.emplace_back(t, c);
    return f;
}

Polynomial Polynomial::term(const Term& t, const Ring& ring) {
    return monomial(FieldElem::one(ring.field()), t, ring);
}

Polynomial Polynomial::variable(int i, const Ring& ring) {
    return term(Term::variable(i, ring.nvars()), ring);
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one();
}

int Polynomial::degree() const {
    if (is_zero()) throw MathError("degree of the zero polynomial");
    int d = 0;
    for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
    return d;
}

int Polynomial::degree_in(const std::vector<int>& vars) const {
    int d = 0;
    for (const auto& [t, c] : terms_) {
        int s = 0;
        for (int v : vars) s += t.exponent(v);
        d = std::max(d, s);
    }
    return d;
}

FieldElem Polynomial::coefficient(const Term& t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [](const auto& a, const Term& b) { return a.first < b; });
    if (it != terms_.end() && it->first == t) return it->second;
    return FieldElem::zero(ring_.field());
}

void Polynomial::check_ring(const Polynomial& g, const char* where) const {
    ring_.require_compatible(g.ring_, where);
}

Polynomial Polynomial::operator-() const {
    Polynomial f(*this);
    for (auto& [t, c] : f.terms_) c = -c;
    return f;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    check_ring(g, "poly add");
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin(), b = g.terms_.begin();
    while (a != terms_.end() && b != g.terms_.end()) {
        if (a->first == b->first) {
            FieldElem c = a->second + b->second;
            if (!c.is_zero()) r.terms_.emplace_back(a->first, c);
            ++a;
            ++b;
        } else if (a->first < b->first) {
            r.terms_.push_back(*a++);
        } else {
            r.terms_.push_back(*b++);
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, g.terms_.end());
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_ring(g, "poly mul");
    if (is_zero() || g.is_zero()) return zero(ring_);
    if (g.terms_.size() == 1) return multiplied_by_monomial(g.terms_[0].second, g.terms_[0].first);
    if (terms_.size() == 1) return g.multiplied_by_monomial(terms_[0].second, terms_[0].first);
    std::map<Term, FieldElem> acc;
    for (const auto& [ta, ca] : terms_) {
        for (const auto& [tb, cb] : g.terms_) {
            Term t = ta * tb;
            auto [it, inserted] = acc.emplace(t, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    return from_map(std::move(acc), ring_);
}

Polynomial Polynomial::operator*(const FieldElem& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial f(*this);
    for (auto& [t, k] : f.terms_) k *= c;
    return f;
}

Polynomial operator*(const FieldElem& c, const Polynomial& f) { return f * c; }

bool Polynomial::operator==(const Polynomial& g) const {
    check_ring(g, "poly compare");
    if (terms_.size() != g.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != g.terms_[i].first || terms_[i].second != g.terms_[i].second) return false;
    return true;
}

Polynomial Polynomial::multiplied_by_term(const Term& t) const {
    Polynomial f(ring_);
    f.terms_.reserve(terms_.size());
    for (const auto& [u, c] : terms_) f.terms_.emplace_back(u * t, c);
    // storage order is preserved under multiplication by a fixed term
    std::sort(f.terms_.begin(), f.terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

Polynomial Polynomial::multiplied_by_monomial(const FieldElem& c, const Term& t) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial f = multiplied_by_term(t);
    for (auto& [u, k] : f.terms_) k *= c;
    return f;
}

Polynomial Polynomial::from_map(std::map<Term, FieldElem>&& acc, const Ring& ring) {
    Polynomial f(ring);
    f.terms_.reserve(acc.size());
    for (auto& [t, c] : acc)
        if (!c.is_zero()) f.terms_.emplace_back(t, c);
    return f;
}

std::pair<Term, FieldElem> Polynomial::leading_term(const TermOrdering& ord) const {
    if (is_zero()) throw MathError("leading term of the zero polynomial");
    const std::pair<Term, FieldElem>* best = &terms_[0];
    for (const auto& tc : terms_)
        if (ord.greater(tc.first, best->first)) best = &tc;
    return *best;
}

Polynomial Polynomial::monic(const TermOrdering& ord) const {
    if (is_zero()) return *this;
    FieldElem lc = leading_term(ord).second;
    return *this * lc.inverse();
}

Polynomial Polynomial::normalized_sign(const TermOrdering& ord) const {
    if (is_zero()) return *this;
    FieldElem lc = leading_term(ord).second;
    if (ring_.field().is_rationals() && lc.rational_value() < 0) return -*this;
    return *this;
}

Polynomial Polynomial::degree_form() const {
    int d = degree();
    Polynomial f(ring_);
    for (const auto& [t, c] : terms_)
        if (t.degree() == d) f.terms_.emplace_back(t, c);
    return f;
}

std::vector<Polynomial> Polynomial::homogeneous_components() const {
    if (is_zero()) return {};
    int d = degree();
    std::vector<Polynomial> comps(d + 1, Polynomial(ring_));
    for (const auto& [t, c] : terms_) comps[t.degree()].terms_.emplace_back(t, c);
    std::vector<Polynomial> out;
    for (auto& f : comps)
        if (!f.is_zero()) out.push_back(std::move(f));
    return out;
}

bool Polynomial::is_homogeneous() const {
    if (is_zero()) return true;
    int d = terms_[0].first.degree();
    for (const auto& [t, c] : terms_)
        if (t.degree() != d) return false;
    return true;
}

Polynomial Polynomial::homogenized(int z_var) const {
    if (is_zero()) return *this;
    for (const auto& [t, c] : terms_)
        if (t.exponent(z_var) != 0)
            throw InputError("homogenization variable already occurs in the polynomial");
    int d = degree();
    Polynomial f(ring_);
    for (const auto& [t, c] : terms_) {
        std::vector<int> e = t.exponents();
        e[z_var] += d - t.degree();
        f.terms_.emplace_back(Term(std::move(e)), c);
    }
    std::sort(f.terms_.begin(), f.terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

Polynomial Polynomial::substituted(const std::map<int, Polynomial>& assignment) const {
    for (const auto& [v, g] : assignment) ring_.require_compatible(g.ring(), "substitute");
    Polynomial result = zero(ring_);
    // Power cache shared across terms.
    std::map<std::pair<int, int>, Polynomial> pow_cache;
    auto power_of = [&](int v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = pow_cache.find(key);
        if (it != pow_cache.end()) return it->second;
        const Polynomial& base = assignment.at(v);
        Polynomial p = from_int(1, ring_);
        for (int k = 0; k < e; ++k) p *= base;
        return pow_cache.emplace(key, std::move(p)).first->second;
    };
    for (const auto& [t, c] : terms_) {
        Polynomial prod = constant(c, ring_);
        std::vector<int> kept(ring_.nvars(), 0);
        bool any_kept = false;
        for (int v = 0; v < ring_.nvars(); ++v) {
            int e = t.exponent(v);
            if (e == 0) continue;
            if (assignment.count(v)) {
                prod *= power_of(v, e);
            } else {
                kept[v] = e;
                any_kept = true;
            }
        }
        if (any_kept) prod = prod.multiplied_by_term(Term(std::move(kept)));
        result += prod;
    }
    return result;
}

Polynomial Polynomial::evaluated(const std::map<int, FieldElem>& values) const {
    std::map<Term, FieldElem> acc;
    for (const auto& [t, c] : terms_) {
        FieldElem v = c;
        std::vector<int> kept(ring_.nvars(), 0);
        bool dead = false;
        for (int i = 0; i < ring_.nvars() && !dead; ++i) {
            int e = t.exponent(i);
            if (e == 0) continue;
            auto it = values.find(i);
            if (it == values.end()) {
                kept[i] = e;
            } else {
                for (int k = 0; k < e; ++k) v *= it->second;
                if (v.is_zero()) dead = true;
            }
        }
        if (dead || v.is_zero()) continue;
        Term u{std::move(kept)};
        auto [pos, inserted] = acc.emplace(u, v);
        if (!inserted) pos->second += v;
    }
    return from_map(std::move(acc), ring_);
}

bool Polynomial::supported_on(const std::vector<int>& vars) const {
    std::vector<bool> ok(ring_.nvars(), false);
    for (int v : vars) ok[v] = true;
    for (const auto& [t, c] : terms_)
        for (int i = 0; i < ring_.nvars(); ++i)
            if (t.exponent(i) > 0 && !ok[i]) return false;
    return true;
}

std::vector<int> Polynomial::support_vars() const {
    std::vector<bool> seen(ring_.nvars(), false);
    for (const auto& [t, c] : terms_)
        for (int i = 0; i < ring_.nvars(); ++i)
            if (t.exponent(i) > 0) seen[i] = true;
    std::vector<int> out;
    for (int i = 0; i < ring_.nvars(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

std::vector<std::pair<Term, Polynomial>> Polynomial::coefficients_on(const std::vector<int>& vars) const {
    std::vector<bool> in(ring_.nvars(), false);
    for (int v : vars) in[v] = true;
    std::map<Term, std::map<Term, FieldElem>> groups;
    for (const auto& [t, c] : terms_) {
        std::vector<int> sub(ring_.nvars(), 0), rest(ring_.nvars(), 0);
        for (int i = 0; i < ring_.nvars(); ++i)
            (in[i] ? sub[i] : rest[i]) = t.exponent(i);
        groups[Term(std::move(sub))].emplace(Term(std::move(rest)), c);
    }
    std::vector<std::pair<Term, Polynomial>> out;
    out.reserve(groups.size());
    for (auto& [sub, acc] : groups) {
        std::map<Term, FieldElem> m(std::move(acc));
        out.emplace_back(sub, from_map(std::move(m), ring_));
    }
    TermOrdering drl = TermOrdering::degrevlex(ring_.nvars());
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return drl.greater(a.first, b.first); });
    return out;
}

Polynomial Polynomial::promoted(const Ring& bigger) const {
    if (bigger.nvars() < ring_.nvars()) throw ContextError("promoted: target ring is smaller");
    for (int i = 0; i < ring_.nvars(); ++i)
        if (bigger.var_name(i) != ring_.var_name(i))
            throw ContextError("promoted: target ring is not an extension");
    Polynomial f(bigger);
    for (const auto& [t, c] : terms_) {
        std::vector<int> e = t.exponents();
        e.resize(bigger.nvars(), 0);
        f.terms_.emplace_back(Term(std::move(e)), c);
    }
    std::sort(f.terms_.begin(), f.terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

Polynomial Polynomial::restricted(const Ring& smaller) const {
    if (smaller.nvars() > ring_.nvars()) throw ContextError("restricted: target ring is larger");
    for (int i = 0; i < smaller.nvars(); ++i)
        if (smaller.var_name(i) != ring_.var_name(i))
            throw ContextError("restricted: target ring is not a prefix");
    Polynomial f(smaller);
    for (const auto& [t, c] : terms_) {
        for (int i = smaller.nvars(); i < ring_.nvars(); ++i)
            if (t.exponent(i) != 0)
                throw ContextError("restricted: polynomial involves variable " + ring_.var_name(i));
        std::vector<int> e(t.exponents().begin(), t.exponents().begin() + smaller.nvars());
        f.terms_.emplace_back(Term(std::move(e)), c);
    }
    std::sort(f.terms_.begin(), f.terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

std::vector<std::pair<Term, FieldElem>> Polynomial::sorted_terms(const TermOrdering& ord) const {
    auto out = terms_;
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    return out;
}

std::string Polynomial::to_string() const {
    return to_string(TermOrdering::degrevlex(ring_.nvars()));
}

std::string Polynomial::to_string(const TermOrdering& ord) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : sorted_terms(ord)) {
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) cs = cs.substr(1);
        if (t.is_one()) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << t.to_string(ring_);
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Lexer {
    std::string s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

// Variable names are matched longest-first so e.g. "c[1][2]" or "x12" work.
int match_var(const std::string& s, size_t pos, const Ring& ring, size_t* len) {
    int best = -1;
    size_t best_len = 0;
    for (int i = 0; i < ring.nvars(); ++i) {
        const std::string& v = ring.var_name(i);
        if (s.compare(pos, v.size(), v) == 0 && v.size() > best_len) {
            best = i;
            best_len = v.size();
        }
    }
    *len = best_len;
    return best;
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const Ring& ring) {
    std::string s;
    // Normalize unicode minus signs to ASCII.
    for (size_t i = 0; i < text.size();) {
        if (text.compare(i, 3, "−") == 0) {
            s += '-';
            i += 3;
        } else {
            s += text[i++];
        }
    }
    Lexer lx{s};
    std::map<Term, FieldElem> acc;
    const Field& k = ring.field();
    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        char ch = lx.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -sign;
            ++lx.pos;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw InputError("unexpected token at '" + s.substr(lx.pos) + "'");
        // One product: [coefficient] [vars...]
        FieldElem coeff = FieldElem::one(k);
        bool have_coeff = false;
        std::vector<int> exps(ring.nvars(), 0);
        bool have_var = false;
        while (!lx.eof()) {
            char c = lx.peek();
            if (c == '+' || c == '-') break;
            if (c == '*') {
                ++lx.pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = lx.pos;
                while (lx.pos < s.size() &&
                       (std::isdigit(static_cast<unsigned char>(s[lx.pos])) || s[lx.pos] == '/'))
                    ++lx.pos;
                FieldElem v = FieldElem::parse(s.substr(start, lx.pos - start), k);
                coeff = have_coeff ? coeff * v : v;
                have_coeff = true;
                continue;
            }
            size_t len = 0;
            int var = match_var(s, lx.pos, ring, &len);
            if (var < 0) throw InputError("unknown variable at '" + s.substr(lx.pos) + "'");
            lx.pos += len;
            int e = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                size_t start = lx.pos;
                while (lx.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[lx.pos]))) ++lx.pos;
                if (start == lx.pos) throw InputError("missing exponent after '^'");
                e = std::stoi(s.substr(start, lx.pos - start));
            }
            exps[var] += e;
            have_var = true;
        }
        if (!have_coeff && !have_var) throw InputError("empty summand in '" + text + "'");
        if (sign < 0) coeff = -coeff;
        Term t{std::move(exps)};
        auto [it, inserted] = acc.emplace(t, coeff);
        if (!inserted) it->second += coeff;
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !acc.empty()) throw InputError("dangling sign in '" + text + "'");
    return from_map(std::move(acc), ring);
}

Term parse_term(const std::string& text, const Ring& ring) {
    Polynomial f = Polynomial::parse(text, ring);
    if (f.num_terms() != 1 || !f.terms()[0].second.is_one())
        throw InputError("'" + text + "' is not a single monic term");
    return f.terms()[0].first;
}

}  // namespace bbs
