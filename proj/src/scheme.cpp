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

#include "bbs/scheme.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bbs {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Full: return "full";
        case Flavor::Df: return "df";
        case Flavor::Hom: return "hom";
    }
    return "?";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "full" || s.empty()) return Flavor::Full;
    if (s == "df") return Flavor::Df;
    if (s == "hom") return Flavor::Hom;
    throw InputError("unknown flavor '" + s + "' (expected full|df|hom)");
}

SchemeContext::SchemeContext(OrderIdeal O, Field field) : O_(std::move(O)), field_(field) {
    ncvars_ = O_.mu() * O_.nu();
    std::vector<std::string> cnames;
    cnames.reserve(ncvars_);
    for (int i = 0; i < O_.mu(); ++i)
        for (int j = 0; j < O_.nu(); ++j)
            cnames.push_back("c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
    cring_ = Ring(cnames, field_);
    std::vector<std::string> all = cnames;
    for (const auto& xv : O_.xvars()) all.push_back(xv);
    cxring_ = Ring(all, field_);
    cache_ = std::make_shared<Cache>();
}

CellClass SchemeContext::cell_class(int i, int j) const {
    int dt = O_.term(i).degree(), db = O_.border_term(j).degree();
    if (dt == db) return CellClass::Hom;
    return dt < db ? CellClass::Df : CellClass::NonDf;
}

int SchemeContext::arrow_degree(int i, int j) const {
    return O_.border_term(j).degree() - O_.term(i).degree();
}

long SchemeContext::arrow_degree(const Term& t) const {
    long d = 0;
    for (int i = 0; i < mu(); ++i)
        for (int j = 0; j < nu(); ++j) {
            int e = t.exponent(cvar(i, j));
            if (e) d += static_cast<long>(e) * arrow_degree(i, j);
        }
    if (t.nvars() == cxring_.nvars())
        for (int k = 0; k < n(); ++k) d += t.exponent(xvar(k));
    return d;
}

bool SchemeContext::is_arrow_homogeneous(const Polynomial& f) const {
    if (f.is_zero()) return true;
    bool first = true;
    long d0 = 0;
    for (const auto& [t, c] : f.terms()) {
        long d = arrow_degree(t);
        if (first) {
            d0 = d;
            first = false;
        } else if (d != d0) {
            return false;
        }
    }
    return true;
}

long SchemeContext::arrow_degree_of(const Polynomial& f) const {
    if (f.is_zero()) throw MathError("arrow degree of zero");
    if (!is_arrow_homogeneous(f)) throw MathError("polynomial is not arrow-homogeneous");
    return arrow_degree(f.terms()[0].first);
}

Term SchemeContext::lift_xterm(const Term& t) const {
    std::vector<int> e(cxring_.nvars(), 0);
    for (int k = 0; k < n(); ++k) e[xvar(k)] = t.exponent(k);
    return Term(std::move(e));
}

Polynomial SchemeContext::lift_xpoly(const Polynomial& f) const {
    Polynomial out(cxring_);
    std::map<Term, FieldElem> acc;
    for (const auto& [t, c] : f.terms()) acc.emplace(lift_xterm(t), c);
    return Polynomial::from_map(std::move(acc), cxring_);
}

const std::vector<Polynomial>& SchemeContext::generic_prebasis(Flavor flavor) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->prebasis.find(flavor);
    if (it != cache_->prebasis.end()) return it->second;
    std::vector<Polynomial> G;
    for (int j = 0; j < nu(); ++j) {
        Polynomial g = Polynomial::term(lift_xterm(O_.border_term(j)), cxring_);
        for (int i = 0; i < mu(); ++i) {
            CellClass cls = cell_class(i, j);
            bool keep = flavor == Flavor::Full ? true
                        : flavor == Flavor::Df ? cls != CellClass::NonDf
                                               : cls == CellClass::Hom;
            if (!keep) continue;
            Term cv = Term::variable(cvar(i, j), cxring_.nvars());
            g -= Polynomial::term(cv * lift_xterm(O_.term(i)), cxring_);
        }
        G.push_back(std::move(g));
    }
    return cache_->prebasis.emplace(flavor, std::move(G)).first->second;
}

void SchemeContext::build_matrices(Flavor flavor) const {
    // caller holds the lock
    if (cache_->matrices.count(flavor)) return;
    std::vector<PolyMatrix> mats;
    for (int r = 0; r < n(); ++r) {
        PolyMatrix A(mu(), mu(), cring_);
        for (int col = 0; col < mu(); ++col) {
            Term prod = O_.term(col) * Term::variable(r, n());
            int m = O_.index_of(prod);
            if (m >= 0) {
                A.at(m, col) = Polynomial::from_int(1, cring_);
                continue;
            }
            int b = O_.border_index_of(prod);
            if (b < 0) throw MathError("x_r * t_col escaped O and its border");
            for (int i = 0; i < mu(); ++i) {
                CellClass cls = cell_class(i, b);
                bool keep = flavor == Flavor::Full ? true
                            : flavor == Flavor::Df ? cls != CellClass::NonDf
                                                   : cls == CellClass::Hom;
                if (keep) A.at(i, col) = Polynomial::variable(cvar(i, b), cring_);
            }
        }
        mats.push_back(std::move(A));
    }
    cache_->matrices.emplace(flavor, std::move(mats));
}

const std::vector<PolyMatrix>& SchemeContext::generic_matrices(Flavor flavor) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    build_matrices(flavor);
    return cache_->matrices.at(flavor);
}

std::vector<Polynomial> SchemeContext::excluded_variables(Flavor flavor) const {
    std::vector<Polynomial> vars;
    if (flavor == Flavor::Full) return vars;
    for (int i = 0; i < mu(); ++i)
        for (int j = 0; j < nu(); ++j) {
            CellClass cls = cell_class(i, j);
            bool excluded = flavor == Flavor::Df ? cls == CellClass::NonDf : cls != CellClass::Hom;
            if (excluded) vars.push_back(Polynomial::variable(cvar(i, j), cring_));
        }
    return vars;
}

const Ideal& SchemeContext::defining_ideal(Flavor flavor) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->defining.find(flavor);
        if (it != cache_->defining.end()) return it->second;
    }
    // Commutators of the flavor's own matrices: same ideal as zeroing the
    // excluded variables inside the full commutators, since those variables
    // are generators here anyway.
    const auto& mats = generic_matrices(flavor);
    std::vector<Polynomial> gens;
    auto push = [&](const Polynomial& g) {
        if (!g.is_zero()) gens.push_back(g);
    };
    for (const auto& v : excluded_variables(flavor)) push(v);
    for (int r = 0; r < n(); ++r)
        for (int s = r + 1; s < n(); ++s) {
            PolyMatrix comm = mats[r] * mats[s] - mats[s] * mats[r];
            for (int row = 0; row < mu(); ++row)
                for (int col = 0; col < mu(); ++col) push(comm.at(row, col));
        }
    Ideal I(std::move(gens), cring_);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->defining.emplace(flavor, std::move(I));
    return it->second;
}

PolyMatrix SchemeContext::mult_matrix_of_term(const Term& xterm, Flavor flavor) const {
    const auto& mats = generic_matrices(flavor);
    PolyMatrix result = PolyMatrix::identity(mu(), cring_);
    // Ordered product A_1^{e_1} ... A_n^{e_n}.
    for (int r = 0; r < n(); ++r) {
        int e = xterm.nvars() == n() ? xterm.exponent(r) : xterm.exponent(xvar(r));
        for (int k = 0; k < e; ++k) result = result * mats[r];
    }
    return result;
}

PolyMatrix SchemeContext::mult_matrix_of_poly(const Polynomial& f, Flavor flavor) const {
    PolyMatrix result(mu(), mu(), cring_);
    for (const auto& [t, c] : f.sorted_terms(TermOrdering::degrevlex(f.ring().nvars()))) {
        PolyMatrix m = mult_matrix_of_term(t, flavor);
        result = result + m.scaled(Polynomial::constant(c, cring_));
    }
    return result;
}

const std::vector<Polynomial>& SchemeContext::coordinates_of_term(const Term& xterm) const {
    Term t = xterm.nvars() == n() ? xterm : Term(std::vector<int>(0));
    if (xterm.nvars() != n()) {
        std::vector<int> e(n(), 0);
        for (int k = 0; k < n(); ++k) e[k] = xterm.exponent(xvar(k));
        t = Term(std::move(e));
    }
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->coords.find(t);
        if (it != cache_->coords.end()) return it->second;
    }
    std::vector<Polynomial> col;
    if (t.is_one()) {
        col.assign(mu(), Polynomial::zero(cring_));
        col[0] = Polynomial::from_int(1, cring_);
    } else {
        int r = 0;
        while (t.exponent(r) == 0) ++r;
        Term reduced = Term::variable(r, n()).quotient_into(t);
        const auto& sub = coordinates_of_term(reduced);
        const auto& A = generic_matrices(Flavor::Full)[r];
        col.assign(mu(), Polynomial::zero(cring_));
        for (int row = 0; row < mu(); ++row)
            for (int k = 0; k < mu(); ++k)
                if (!A.at(row, k).is_zero() && !sub[k].is_zero()) col[row] += A.at(row, k) * sub[k];
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->coords.emplace(t, std::move(col));
    return it->second;
}

Polynomial SchemeContext::recombine(const std::vector<Polynomial>& coordinates) const {
    Polynomial f(cxring_);
    for (int i = 0; i < mu(); ++i) {
        if (coordinates[i].is_zero()) continue;
        f += coordinates[i].promoted(cxring_) * Polynomial::term(lift_xterm(O_.term(i)), cxring_);
    }
    return f;
}

SchemeContext::BorderDivision SchemeContext::border_divide(const Polynomial& f, Flavor flavor) const {
    cxring_.require_compatible(f.ring(), "border_divide");
    const auto& G = generic_prebasis(flavor);
    Polynomial rem = f;
    std::vector<Polynomial> quotients(nu(), Polynomial::zero(cxring_));

    auto xpart = [&](const Term& t) {
        std::vector<int> e(n(), 0);
        for (int k = 0; k < n(); ++k) e[k] = t.exponent(xvar(k));
        return Term(std::move(e));
    };

    // Index of a term outside O: 1 + min deg(u/b) over dividing border terms.
    auto index_of_term = [&](const Term& u, int* arg_j) -> int {
        int best = -1;
        for (int j = 0; j < nu(); ++j) {
            if (!O_.border_term(j).divides(u)) continue;
            int d = u.degree() - O_.border_term(j).degree();
            if (best < 0 || d < best) {
                best = d;
                *arg_j = j;
            }
        }
        if (best < 0) throw MathError("term outside O has no border divisor (O not factor-closed?)");
        return best + 1;
    };

    TermOrdering xdrl = TermOrdering::degrevlex(n());
    while (true) {
        // Pick the remaining x-monomial outside O of maximal index (ties by
        // the ordering); rewrite all its occurrences through g_j at once.
        bool found = false;
        Term pick(n());
        int pick_idx = -1, pick_j = -1;
        for (const auto& [t, c] : rem.terms()) {
            Term u = xpart(t);
            if (O_.contains(u)) continue;
            int j = -1;
            int idx = index_of_term(u, &j);
            if (!found || idx > pick_idx || (idx == pick_idx && xdrl.greater(u, pick))) {
                pick = u;
                pick_idx = idx;
                pick_j = j;
                found = true;
            }
        }
        if (!found) break;
        // Collect the full coefficient (a K[C]-polynomial) of the monomial.
        Polynomial coeff(cxring_);
        for (const auto& [t, c] : rem.terms())
            if (xpart(t) == pick) {
                std::vector<int> e = t.exponents();
                for (int k = 0; k < n(); ++k) e[xvar(k)] = 0;
                coeff += Polynomial::monomial(c, Term(std::move(e)), cxring_);
            }
        Term v = O_.border_term(pick_j).quotient_into(pick);  // pick = v * b_j
        Polynomial factor = coeff.multiplied_by_term(lift_xterm(v));
        rem -= factor * G[pick_j];
        quotients[pick_j] += factor;
    }

    std::vector<Polynomial> coords(mu(), Polynomial::zero(cring_));
    for (const auto& [t, c] : rem.terms()) {
        Term u = xpart(t);
        int i = O_.index_of(u);
        if (i < 0) throw MathError("border division left a term outside O");
        std::vector<int> e = t.exponents();
        for (int k = 0; k < n(); ++k) e[xvar(k)] = 0;
        coords[i] += Polynomial::monomial(c, Term(std::move(e)), cxring_).restricted(cring_);
    }
    return {std::move(coords), std::move(quotients)};
}

}  // namespace bbs
