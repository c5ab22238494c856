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

#include "bbs/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>
#include <cstdio>
#include <cstdlib>

namespace bbs {

namespace {

struct BasisElem {
    Polynomial poly;
    Term lt;
    FieldElem lc;
    int sugar;
};

struct Pair {
    int i, j;
    Term lcm;
    int sugar;
};

// Normal selection order: minimal lcm in the ordering, sugar tiebreak.
struct PairLess {
    const TermOrdering* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Working polynomial for division: terms keyed descending in the ordering,
// so the leading term is begin() and tail updates are logarithmic.
struct OrdDescLess {
    const TermOrdering* ord;
    bool operator()(const Term& a, const Term& b) const { return ord->compare(a, b) > 0; }
};
using WorkPoly = std::map<Term, FieldElem, OrdDescLess>;

WorkPoly to_work(const Polynomial& f, const TermOrdering& ord) {
    WorkPoly w(OrdDescLess{&ord});
    for (const auto& [t, c] : f.terms()) w.emplace(t, c);
    return w;
}

// Full reduction against a basis given by (poly, lt) entries.
Polynomial reduce_full(const Polynomial& f, const std::vector<BasisElem>& basis, const TermOrdering& ord,
                       const std::vector<int>* active = nullptr, const Budget* budget = nullptr,
                       const std::string* tag = nullptr) {
    if (f.is_zero()) return f;
    WorkPoly work = to_work(f, ord);
    std::map<Term, FieldElem> out;
    long steps = 0;
    while (!work.empty()) {
        if (budget && (++steps & 1023) == 0) budget->check_time(*tag);
        auto head = work.begin();
        const Term t = head->first;
        const FieldElem c = head->second;
        const BasisElem* reducer = nullptr;
        if (active) {
            for (int idx : *active) {
                if (basis[idx].lt.divides(t)) {
                    reducer = &basis[idx];
                    break;
                }
            }
        } else {
            for (const auto& b : basis) {
                if (b.lt.divides(t)) {
                    reducer = &b;
                    break;
                }
            }
        }
        if (!reducer) {
            out.emplace(t, c);
            work.erase(head);
            continue;
        }
        // subtract (c / lc) * (t / lt) * reducer; its leading term cancels
        FieldElem factor = reducer->lc.is_one() ? c : c / reducer->lc;
        Term shift = reducer->lt.quotient_into(t);
        work.erase(head);
        for (const auto& [u, d] : reducer->poly.terms()) {
            if (u == reducer->lt) continue;
            Term target = shift.is_one() ? u : u * shift;
            FieldElem delta = factor * d;
            auto [pos, inserted] = work.emplace(std::move(target), -delta);
            if (!inserted) {
                pos->second -= delta;
                if (pos->second.is_zero()) work.erase(pos);
            }
        }
    }
    Polynomial result = Polynomial::from_map(std::move(out), f.ring());
    return result;
}

int sugar_of(const Polynomial& f) { return f.is_zero() ? 0 : f.degree(); }

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrdering& ord) {
    std::vector<BasisElem> b;
    b.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        auto [lt, lc] = g.leading_term(ord);
        b.push_back({g, lt, lc, sugar_of(g)});
    }
    return reduce_full(f, b, ord);
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const TermOrdering& ord,
                                       const Budget& budget, const std::string& tag) {
    Ring ring;
    std::vector<BasisElem> basis;
    std::vector<int> active;  // indices of basis elements not superseded
    std::set<Pair, PairLess> pairs(PairLess{&ord});

    auto make_pair = [&](int i, int j) {
        Term l = basis[i].lt.lcm(basis[j].lt);
        int sugar = std::max(basis[i].sugar + l.degree() - basis[i].lt.degree(),
                             basis[j].sugar + l.degree() - basis[j].lt.degree());
        return Pair{i, j, l, sugar};
    };

    // Gebauer-Moeller update: add element k, prune old and new pairs.
    auto update = [&](int k) {
        const Term& ltk = basis[k].lt;
        // Drop old pairs (i,j) whose lcm is strictly divisible by lt(k).
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (ltk.divides(it->lcm) && basis[it->i].lt.lcm(ltk) != it->lcm &&
                basis[it->j].lt.lcm(ltk) != it->lcm) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }
        // Build new pairs (i,k) for active i, with M and F criteria.
        std::vector<Pair> fresh;
        for (int i : active) {
            fresh.push_back(make_pair(i, k));
        }
        // M criterion: discard (i,k) if some other (j,k) has lcm properly dividing it.
        std::vector<bool> keep(fresh.size(), true);
        for (size_t a = 0; a < fresh.size(); ++a) {
            for (size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || !keep[a] || !keep[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) keep[a] = false;
            }
        }
        // F criterion: among equal lcms keep one.
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = a + 1; b < fresh.size(); ++b) {
                if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
            }
        }
        // B criterion (product criterion): coprime leading terms drop the pair.
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (keep[a] && basis[fresh[a].i].lt.coprime(ltk)) keep[a] = false;
        }
        for (size_t a = 0; a < fresh.size(); ++a)
            if (keep[a]) pairs.insert(fresh[a]);
        // Supersede active elements whose lt is divisible by lt(k).
        std::vector<int> still;
        for (int i : active)
            if (!ltk.divides(basis[i].lt)) still.push_back(i);
        still.push_back(k);
        active = std::move(still);
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ring.valid()) ring = g.ring();
        ring.require_compatible(g.ring(), "groebner_basis");
        Polynomial r = reduce_full(g, basis, ord, &active, &budget, &tag);
        if (r.is_zero()) continue;
        Polynomial m = r.monic(ord);
        basis.push_back({m, m.leading_term(ord).first, FieldElem::one(ring.field()), sugar_of(r)});
        update(static_cast<int>(basis.size()) - 1);
    }
    if (basis.empty()) return {};

    const bool trace = std::getenv("BBS_GB_TRACE") != nullptr;
    long steps = 0;
    while (!pairs.empty()) {
        budget.check_time(tag);
        // Normal selection: minimal lcm w.r.t. the ordering, sugar tiebreak.
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        budget.check_degree(p.lcm.degree(), tag);
        if (trace && ++steps % 200 == 0)
            std::fprintf(stderr, "[gb] step %ld basis %zu active %zu pairs %zu lcm-deg %d\n", steps,
                         basis.size(), active.size(), pairs.size(), p.lcm.degree());

        const BasisElem& f = basis[p.i];
        const BasisElem& g = basis[p.j];
        Polynomial s = f.poly.multiplied_by_term(f.lt.quotient_into(p.lcm)) -
                       g.poly.multiplied_by_term(g.lt.quotient_into(p.lcm));
        Polynomial r = reduce_full(s, basis, ord, &active, &budget, &tag);
        if (r.is_zero()) continue;
        Polynomial m = r.monic(ord);
        basis.push_back(
            {m, m.leading_term(ord).first, FieldElem::one(ring.field()), std::max(p.sugar, sugar_of(r))});
        update(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: keep active elements only, then fully interreduce tails.
    std::vector<BasisElem> minimal;
    for (int i : active) minimal.push_back(basis[i]);
    std::sort(minimal.begin(), minimal.end(),
              [&](const BasisElem& a, const BasisElem& b) { return ord.greater(a.lt, b.lt); });
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisElem> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_full(minimal[i].poly, others, ord);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return reduced;
}

bool is_groebner_basis(const std::vector<Polynomial>& G, const TermOrdering& ord) {
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) {
            Term li = G[i].leading_term(ord).first;
            Term lj = G[j].leading_term(ord).first;
            Term l = li.lcm(lj);
            Polynomial s = G[i].multiplied_by_monomial(G[i].leading_term(ord).second.inverse(),
                                                       li.quotient_into(l)) -
                           G[j].multiplied_by_monomial(G[j].leading_term(ord).second.inverse(),
                                                       lj.quotient_into(l));
            if (!normal_form(s, G, ord).is_zero()) return false;
        }
    }
    return true;
}

Ideal::Ideal(std::vector<Polynomial> gens, Ring ring) {
    auto st = std::make_shared<State>();
    st->ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        st->ring.require_compatible(g.ring(), "Ideal");
        st->gens.push_back(std::move(g));
    }
    state_ = std::move(st);
}

const std::vector<Polynomial>& Ideal::groebner(const TermOrdering& ord, const Budget& budget) const {
    const std::string key = ord.key();
    {
        std::lock_guard<std::mutex> lock(state_->mu);
        auto it = state_->gb_cache.find(key);
        if (it != state_->gb_cache.end()) return *it->second;
    }
    auto gb = std::make_shared<const std::vector<Polynomial>>(
        groebner_basis(state_->gens, ord, budget, "groebner_basis(" + ord.name() + ")"));
    std::lock_guard<std::mutex> lock(state_->mu);
    auto [it, inserted] = state_->gb_cache.emplace(key, gb);
    return *it->second;
}

Polynomial Ideal::normal_form(const Polynomial& f, const TermOrdering& ord, const Budget& budget) const {
    return bbs::normal_form(f, groebner(ord, budget), ord);
}

bool Ideal::contains(const Polynomial& f, const Budget& budget) const {
    return normal_form(f, TermOrdering::degrevlex(ring().nvars()), budget).is_zero();
}

bool Ideal::is_unit_ideal(const Budget& budget) const {
    const auto& gb = groebner(TermOrdering::degrevlex(ring().nvars()), budget);
    return gb.size() == 1 && gb[0].is_one();
}

bool Ideal::is_zero_ideal() const { return state_->gens.empty(); }

bool Ideal::equals(const Ideal& other, const Budget& budget) const {
    ring().require_compatible(other.ring(), "Ideal::equals");
    TermOrdering ord = TermOrdering::degrevlex(ring().nvars());
    const auto& a = groebner(ord, budget);
    const auto& b = other.groebner(ord, budget);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Ideal Ideal::plus(const std::vector<Polynomial>& extra) const {
    std::vector<Polynomial> gens = state_->gens;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal(std::move(gens), state_->ring);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    I.ring().require_compatible(J.ring(), "ideal_sum");
    return I.plus(J.generators());
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    I.ring().require_compatible(J.ring(), "ideal_product");
    std::vector<Polynomial> gens;
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ring());
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& f : I.generators())
        for (const auto& g : J.generators()) gens.push_back(f * g);
    return Ideal(std::move(gens), I.ring());
}

namespace {

// A generator that is a nonzero constant makes the ideal the unit ideal
// without any basis computation.
bool has_constant_generator(const Ideal& I) {
    for (const auto& g : I.generators())
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J, const Budget& budget) {
    I.ring().require_compatible(J.ring(), "ideal_intersection");
    const Ring& ring = I.ring();
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(ring);
    if (has_constant_generator(I)) return J;
    if (has_constant_generator(J)) return I;
    if (ideal_subset_syntactic(I, J)) return I;
    if (ideal_subset_syntactic(J, I)) return J;
    // Fresh tag variable name.
    std::string tag = "@t";
    while (ring.var_index(tag) >= 0) tag += "'";
    Ring ext = ring.extended({tag});
    int tv = ext.nvars() - 1;
    Polynomial t = Polynomial::variable(tv, ext);
    Polynomial one_minus_t = Polynomial::from_int(1, ext) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(t * f.promoted(ext));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.promoted(ext));
    auto gb = groebner_basis(gens, TermOrdering::elim(ext.nvars(), {tv}), budget, "ideal_intersection");
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        if (g.degree_in({tv}) == 0) kept.push_back(g.restricted(ring));
    }
    return Ideal(std::move(kept), ring);
}

Ideal ideal_combine(const Ideal& I, const Ideal& J, IdealOp op, const Budget& budget) {
    switch (op) {
        case IdealOp::Sum: return ideal_sum(I, J);
        case IdealOp::Product: return ideal_product(I, J);
        case IdealOp::Intersection: return ideal_intersection(I, J, budget);
    }
    throw MathError("bad ideal op");
}

bool ideal_member_syntactic(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    TermOrdering ord = TermOrdering::degrevlex(f.ring().nvars());
    Polynomial fn = f.monic(ord);
    std::vector<Term> monomials;
    for (const auto& g : I.generators()) {
        if (g.num_terms() == 1) {
            if (g.terms()[0].second.is_zero()) continue;
            monomials.push_back(g.terms()[0].first);
            continue;
        }
        if (g.num_terms() == fn.num_terms() && g.monic(ord) == fn) return true;
    }
    if (monomials.empty()) return false;
    for (const auto& [t, c] : f.terms()) {
        bool covered = false;
        for (const Term& m : monomials)
            if (m.divides(t)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool ideal_subset_syntactic(const Ideal& A, const Ideal& B) {
    for (const auto& g : A.generators())
        if (!ideal_member_syntactic(g, B)) return false;
    return true;
}

bool ideal_equal_syntactic(const Ideal& A, const Ideal& B) {
    A.ring().require_compatible(B.ring(), "ideal_equal_syntactic");
    return ideal_subset_syntactic(A, B) && ideal_subset_syntactic(B, A);
}

Ideal intersect_with_principal(const Ideal& I, const Polynomial& f, const Budget& budget) {
    if (f.is_zero() || I.is_zero_ideal()) return Ideal::zero(I.ring());
    // f in I forces I meet <f> = <f>: every multiple of f stays inside I.
    if (ideal_member_syntactic(f, I)) return Ideal({f}, I.ring());
    return ideal_intersection(I, Ideal({f}, I.ring()), budget);
}

bool radical_membership(const Polynomial& f, const Ideal& I, const Budget& budget) {
    I.ring().require_compatible(f.ring(), "radical_membership");
    if (f.is_zero()) return true;
    // Plain membership is cheaper and implies radical membership.
    if (I.contains(f, budget)) return true;
    const Ring& ring = I.ring();
    std::string tag = "@y";
    while (ring.var_index(tag) >= 0) tag += "'";
    Ring ext = ring.extended({tag});
    int yv = ext.nvars() - 1;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.promoted(ext));
    gens.push_back(Polynomial::from_int(1, ext) -
                   Polynomial::variable(yv, ext) * f.promoted(ext));
    auto gb = groebner_basis(gens, TermOrdering::degrevlex(ext.nvars()), budget, "radical_membership");
    return gb.size() == 1 && gb[0].is_one();
}

bool ideal_equal_mod_radical(const Ideal& I, const Ideal& J, const Budget& budget) {
    for (const auto& g : I.generators())
        if (!radical_membership(g, J, budget)) return false;
    for (const auto& g : J.generators())
        if (!radical_membership(g, I, budget)) return false;
    return true;
}

namespace {

// Largest variable subset containing no leading-term support; DFS with a
// simple remaining-count bound. A support is caught at the moment its
// largest variable would be chosen.
int max_independent_set(const std::vector<std::vector<int>>& supports, int nvars) {
    int best = 0;
    std::vector<bool> chosen(nvars, false);
    std::function<void(int, int)> dfs = [&](int v, int count) {
        if (v == nvars) {
            best = std::max(best, count);
            return;
        }
        if (count + (nvars - v) <= best) return;
        chosen[v] = true;
        bool completes_support = false;
        for (const auto& s : supports) {
            bool contained = !s.empty();
            for (int w : s) {
                if (w > v || !chosen[w]) {
                    contained = false;
                    break;
                }
            }
            if (contained) {
                completes_support = true;
                break;
            }
        }
        if (!completes_support) dfs(v + 1, count + 1);
        chosen[v] = false;
        dfs(v + 1, count);
    };
    dfs(0, 0);
    return best;
}

}  // namespace

int krull_dim(const Ideal& I, const Budget& budget) {
    const Ring& ring = I.ring();
    if (I.is_zero_ideal()) return ring.nvars();
    TermOrdering ord = TermOrdering::degrevlex(ring.nvars());
    const auto& gb = I.groebner(ord, budget);
    if (gb.size() == 1 && gb[0].is_one()) return -1;
    std::vector<std::vector<int>> supports;
    for (const auto& g : gb) {
        Term lt = g.leading_term(ord).first;
        std::vector<int> s;
        for (int v = 0; v < ring.nvars(); ++v)
            if (lt.exponent(v) > 0) s.push_back(v);
        supports.push_back(std::move(s));
    }
    return max_independent_set(supports, ring.nvars());
}

}  // namespace bbs
