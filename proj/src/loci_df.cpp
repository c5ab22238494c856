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

#include "bbs/loci_df.hpp"

#include <algorithm>
#include <set>

#include "bbs/strata.hpp"

namespace bbs {

std::string locus_kind_name(LocusKind k) {
    switch (k) {
        case LocusKind::LGor: return "lgor";
        case LocusKind::CBdf: return "cb";
        case LocusKind::SCBdf: return "scb";
        case LocusKind::SGordf: return "sgor";
        case LocusKind::SCIdf: return "sci";
    }
    return "?";
}

LocusKind parse_locus_kind(const std::string& s) {
    if (s == "lgor") return LocusKind::LGor;
    if (s == "cb") return LocusKind::CBdf;
    if (s == "scb") return LocusKind::SCBdf;
    if (s == "sgor") return LocusKind::SGordf;
    if (s == "sci") return LocusKind::SCIdf;
    throw InputError("unknown locus kind '" + s + "' (expected lgor|cb|scb|sgor|sci)");
}

LocusIdeal lgor_locus(const SchemeContext& S, const Budget& budget) {
    const int mu = S.mu();
    // Ring K[C][z_1..z_mu].
    std::vector<std::string> znames;
    for (int i = 0; i < mu; ++i) znames.push_back("z[" + std::to_string(i + 1) + "]");
    Ring czring = S.cring().extended(znames);
    std::vector<int> zvars;
    for (int i = 0; i < mu; ++i) zvars.push_back(S.ncvars() + i);

    const auto& mats = S.generic_matrices(Flavor::Full);
    std::vector<PolyMatrix> transposed;
    for (const auto& A : mats) transposed.push_back(A.transposed());

    // Column i of D: t_i(A^tr) applied to (z_1..z_mu)^tr, assembled directly
    // from the memoized product rows.
    PolyMatrix D(mu, mu, czring);
    for (int i = 0; i < mu; ++i) {
        budget.check_time("lgor_locus");
        // M = t_i(A_1^tr, ..., A_n^tr) over K[C]
        PolyMatrix M = PolyMatrix::identity(mu, S.cring());
        const Term& t = S.order_ideal().term(i);
        for (int r = 0; r < S.n(); ++r)
            for (int k = 0; k < t.exponent(r); ++k) M = M * transposed[r];
        for (int row = 0; row < mu; ++row) {
            Polynomial entry(czring);
            for (int col = 0; col < mu; ++col) {
                if (M.at(row, col).is_zero()) continue;
                entry += M.at(row, col).promoted(czring) * Polynomial::variable(zvars[col], czring);
            }
            D.at(row, i) = std::move(entry);
        }
    }
    Polynomial det = matrix_det(D);

    // Coefficients of det(D) with respect to the z-monomials.
    std::vector<Polynomial> coeffs;
    for (auto& [zterm, coeff] : det.coefficients_on(zvars)) coeffs.push_back(coeff.restricted(S.cring()));

    const Ideal& base = S.defining_ideal(Flavor::Full);
    Ideal extra(coeffs, S.cring());
    LocusIdeal out{LocusKind::LGor, base, extra, base.plus(coeffs), std::move(det), std::nullopt};
    return out;
}

namespace {

// Shared pipeline of the CB / strict CB algorithms: stack, per multiplier
// t_i, the last Delta columns of t_i(A)^tr and take maximal minors.
LocusIdeal cb_like_locus(const SchemeContext& S, Flavor matrix_flavor, LocusKind kind,
                         const Budget& budget) {
    const int mu = S.mu();
    const int delta = S.order_ideal().top_degree_count();
    std::vector<PolyMatrix> blocks;
    std::vector<PolyMatrix> mult;  // t_i(A), i = 1..mu
    for (int i = 0; i < mu; ++i) {
        budget.check_time("cb_locus_df");
        mult.push_back(S.mult_matrix_of_term(S.order_ideal().term(i), matrix_flavor));
    }
    for (int j = 0; j < delta; ++j) {
        PolyMatrix V(mu, mu, S.cring());
        for (int i = 0; i < mu; ++i) {
            // i-th column of V_j = (mu - delta + j)-th column of t_i(A)^tr
            //                    = (mu - delta + j)-th row of t_i(A).
            for (int r = 0; r < mu; ++r) V.at(r, i) = mult[i].at(mu - delta + j, r);
        }
        blocks.push_back(std::move(V));
    }
    PolyMatrix W = PolyMatrix::stack(blocks);
    std::vector<Polynomial> minors = matrix_minors(W, mu);
    const Ideal& base = S.defining_ideal(Flavor::Df);
    Ideal extra(minors, S.cring());
    return LocusIdeal{kind, base, extra, base.plus(minors), std::nullopt, std::move(W)};
}

}  // namespace

LocusIdeal cb_locus_df(const SchemeContext& S, const Budget& budget) {
    return cb_like_locus(S, Flavor::Df, LocusKind::CBdf, budget);
}

LocusIdeal scb_locus_df(const SchemeContext& S, const Budget& budget) {
    return cb_like_locus(S, Flavor::Hom, LocusKind::SCBdf, budget);
}

LocusIdeal sgor_locus_df(const SchemeContext& S, const Budget& budget) {
    if (!AffineHF::of_order_ideal(S.order_ideal()).symmetric()) {
        const Ideal& base = S.defining_ideal(Flavor::Df);
        return LocusIdeal{LocusKind::SGordf, base, Ideal::zero(S.cring()), base, std::nullopt,
                          std::nullopt};
    }
    LocusIdeal out = scb_locus_df(S, budget);
    out.kind = LocusKind::SGordf;
    return out;
}

LocusIdeal sci_locus_df(const SchemeContext& S, const Budget& budget) {
    const Ideal& base = S.defining_ideal(Flavor::Df);
    if (!AffineHF::of_order_ideal(S.order_ideal()).symmetric())
        return LocusIdeal{LocusKind::SCIdf, base, Ideal::zero(S.cring()), base, std::nullopt,
                          std::nullopt};

    const auto& G = S.generic_prebasis(Flavor::Hom);
    const int n = S.n(), nu = S.nu();
    // W is n x nu with g_j = sum_i W(i,j) x_i; each term of g_j is assigned
    // to its smallest-index dividing x-variable.
    PolyMatrix W(n, nu, S.cxring());
    for (int j = 0; j < nu; ++j) {
        for (const auto& [t, c] : G[j].terms()) {
            int var = -1;
            for (int k = 0; k < n; ++k)
                if (t.exponent(S.xvar(k)) > 0) {
                    var = k;
                    break;
                }
            if (var < 0) throw MathError("homogeneous prebasis element with a constant term");
            Term q = Term::variable(S.xvar(var), S.cxring().nvars()).quotient_into(t);
            W.at(var, j) += Polynomial::monomial(c, q, S.cxring());
        }
    }
    std::vector<Polynomial> minors = matrix_minors(W, n);
    std::vector<Polynomial> lifted;
    std::set<std::string> seen;
    for (const auto& f : minors) {
        budget.check_time("sci_locus_df");
        auto division = S.border_divide(f, Flavor::Hom);
        for (const auto& a : division.coordinates) {
            if (a.is_zero()) continue;
            std::string key = a.to_string();
            std::string neg = (-a).to_string();
            if (seen.count(key) || seen.count(neg)) continue;
            seen.insert(key);
            lifted.push_back(a);
        }
    }
    Ideal extra(lifted, S.cring());
    return LocusIdeal{LocusKind::SCIdf, base, extra, base.plus(lifted), std::nullopt, std::move(W)};
}

LocusIdeal compute_locus_df(LocusKind kind, const SchemeContext& S, const Budget& budget) {
    switch (kind) {
        case LocusKind::LGor: return lgor_locus(S, budget);
        case LocusKind::CBdf: return cb_locus_df(S, budget);
        case LocusKind::SCBdf: return scb_locus_df(S, budget);
        case LocusKind::SGordf: return sgor_locus_df(S, budget);
        case LocusKind::SCIdf: return sci_locus_df(S, budget);
    }
    throw MathError("bad locus kind");
}

std::vector<std::vector<FieldElem>> maxdeg_witness_grid(const SchemeContext& S) {
    std::vector<std::vector<FieldElem>> g(
        S.mu(), std::vector<FieldElem>(S.nu(), FieldElem::zero(S.field())));
    // b_1 must be the border term of minimal degree for the witness shape.
    int jmin = 0;
    for (int j = 1; j < S.nu(); ++j)
        if (S.order_ideal().border_term(j).degree() <
            S.order_ideal().border_term(jmin).degree())
            jmin = j;
    g[S.mu() - 1][jmin] = FieldElem::one(S.field());
    return g;
}

}  // namespace bbs
