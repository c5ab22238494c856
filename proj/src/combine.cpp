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

#include "bbs/combine.hpp"

#include <set>

namespace bbs {

Polynomial substitute_across(const Polynomial& f, const std::vector<Polynomial>& images,
                             const Ring& target) {
    if (static_cast<int>(images.size()) != f.ring().nvars())
        throw ContextError("substitute_across: one image per source variable required");
    Polynomial out = Polynomial::zero(target);
    std::map<std::pair<int, int>, Polynomial> pow_cache;
    auto power_of = [&](int v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = pow_cache.find(key);
        if (it != pow_cache.end()) return it->second;
        Polynomial p = Polynomial::from_int(1, target);
        for (int k = 0; k < e; ++k) p *= images[v];
        return pow_cache.emplace(key, std::move(p)).first->second;
    };
    for (const auto& [t, c] : f.terms()) {
        Polynomial prod = Polynomial::constant(c, target);
        for (int v = 0; v < f.ring().nvars() && !prod.is_zero(); ++v) {
            int e = t.exponent(v);
            if (e) prod *= power_of(v, e);
        }
        out += prod;
    }
    return out;
}

BaseChange base_change(const SchemeContext& S, const OrderIdeal& Oprime, const Budget& budget) {
    if (Oprime.mu() != S.mu())
        throw InputError("base change requires order ideals of equal size");
    const int mu = S.mu();
    if (Oprime == S.order_ideal() && Oprime.border() == S.order_ideal().border()) {
        // identity chart: T' = Id, delta = 1, and c'_{kl} = c_{kl} exactly
        std::vector<std::vector<Polynomial>> images(
            mu, std::vector<Polynomial>(Oprime.nu(), Polynomial::zero(S.cring())));
        for (int k = 0; k < mu; ++k)
            for (int l = 0; l < Oprime.nu(); ++l)
                images[k][l] = Polynomial::variable(S.cvar(k, l), S.cring());
        return BaseChange{PolyMatrix::identity(mu, S.cring()), Polynomial::from_int(1, S.cring()),
                          PolyMatrix::identity(mu, S.cring()), std::move(images)};
    }
    PolyMatrix T(mu, mu, S.cring());
    for (int i = 0; i < mu; ++i) {
        budget.check_time("base_change");
        T.set_column(i, S.coordinates_of_term(Oprime.term(i)));
    }
    Polynomial delta = matrix_det(T);
    PolyMatrix adj = matrix_adjugate(T);
    std::vector<std::vector<Polynomial>> images(
        mu, std::vector<Polynomial>(Oprime.nu(), Polynomial::zero(S.cring())));
    for (int l = 0; l < Oprime.nu(); ++l) {
        budget.check_time("base_change");
        const auto& b_col = S.coordinates_of_term(Oprime.border_term(l));
        for (int k = 0; k < mu; ++k) {
            Polynomial p(S.cring());
            for (int r = 0; r < mu; ++r) {
                if (adj.at(k, r).is_zero() || b_col[r].is_zero()) continue;
                p += adj.at(k, r) * b_col[r];
            }
            images[k][l] = std::move(p);
        }
    }
    return BaseChange{std::move(T), std::move(delta), std::move(adj), std::move(images)};
}

DfbResult dfb_subscheme(const SchemeContext& S, const OrderIdeal& Oprime, const Budget& budget) {
    AffineHF H = AffineHF::of_order_ideal(Oprime);
    Ideal closure = closure_stratum_ideal(S, H, budget);
    Ideal boundary = boundary_ideal(S, H, budget);
    BaseChange bc = base_change(S, Oprime, budget);
    return DfbResult{std::move(closure), std::move(boundary), std::move(bc.delta)};
}

Polynomial transform_locus_generator(const Polynomial& a, const SchemeContext& Sprime,
                                     const BaseChange& bc, const SchemeContext& S) {
    // Homogenize in K[C'][z], then substitute c'_{kl} -> p_{kl}, z -> delta.
    Ring czring = Sprime.cring().extended({"@z"});
    int zv = czring.nvars() - 1;
    Polynomial a_star = a.promoted(czring).homogenized(zv);
    std::vector<Polynomial> images(czring.nvars(), Polynomial::zero(S.cring()));
    for (int k = 0; k < Sprime.mu(); ++k)
        for (int l = 0; l < Sprime.nu(); ++l) images[Sprime.cvar(k, l)] = bc.images[k][l];
    images[zv] = bc.delta;
    return substitute_across(a_star, images, S.cring());
}

CombineResult combine_loci(const SchemeContext& S, const AffineHF& H, const LocusFn& locus_fn,
                           const Budget& budget, const CombineHooks* hooks) {
    AffineHF hf_o = AffineHF::of_order_ideal(S.order_ideal());
    if (!H.dominates(hf_o))
        throw DominationError("H = " + H.to_string() + " does not dominate HF^a_O = " + hf_o.to_string());
    CombineResult result{{},
                         closure_stratum_ideal(S, H, budget),
                         boundary_ideal(S, H, budget)};
    std::vector<OrderIdeal> charts = order_ideals_with_hf(H, S.n(), S.order_ideal().xvars());
    for (size_t idx = 0; idx < charts.size(); ++idx) {
        const OrderIdeal& Op = charts[idx];
        if (hooks && hooks->try_load) {
            if (auto loaded = hooks->try_load(static_cast<int>(idx), Op)) {
                result.triples.push_back(std::move(*loaded));
                continue;
            }
        }
        budget.check_time("combine_loci");
        SchemeContext Sp(Op, S.field());
        Ideal extra = locus_fn(Sp);
        // Transform the reduced basis of the chart ideal: this is what makes
        // unit chart ideals come through as <1>.
        const auto& chart_gens =
            extra.is_zero_ideal()
                ? extra.generators()
                : extra.groebner(TermOrdering::degrevlex(Sp.cring().nvars()), budget);
        BaseChange bc = base_change(S, Op, budget);
        std::vector<Polynomial> j_gens;
        std::set<std::string> seen;
        for (const auto& a : chart_gens) {
            Polynomial t = transform_locus_generator(a, Sp, bc, S);
            if (t.is_zero()) continue;
            std::string key = t.to_string();
            if (seen.insert(key).second) j_gens.push_back(std::move(t));
        }
        Ideal j(j_gens, S.cring());
        Ideal i_dfb = intersect_with_principal(result.boundary, bc.delta, budget);
        LocusTriple triple{Op, bc.delta, std::move(i_dfb), std::move(j)};
        if (hooks && hooks->on_done) hooks->on_done(static_cast<int>(idx), triple);
        result.triples.push_back(std::move(triple));
    }
    return result;
}

AssembleMode parse_assemble_mode(const std::string& s) {
    if (s == "product" || s == "product-sum" || s.empty()) return AssembleMode::ProductSum;
    if (s == "intersection" || s == "intersection-sum") return AssembleMode::IntersectionSum;
    throw InputError("unknown assemble mode '" + s + "'");
}

Ideal assemble_ideal(const std::vector<LocusTriple>& triples, const Ideal& base, AssembleMode mode,
                     const Budget& budget) {
    std::vector<Polynomial> gens = base.generators();
    std::set<std::string> seen;
    for (const auto& g : gens) seen.insert(g.to_string());
    auto push = [&](const Polynomial& g) {
        if (!g.is_zero() && seen.insert(g.to_string()).second) gens.push_back(g);
    };
    for (const auto& t : triples) {
        if (mode == AssembleMode::ProductSum) {
            for (const auto& a : t.i_dfb.generators())
                for (const auto& b : t.j.generators()) push(a * b);
        } else {
            Ideal left = ideal_sum(t.i_dfb, base);
            Ideal right = ideal_sum(t.j, base);
            Ideal meet = ideal_intersection(left, right, budget);
            for (const auto& g : meet.generators()) push(g);
        }
    }
    return Ideal(std::move(gens), base.ring());
}

}  // namespace bbs
