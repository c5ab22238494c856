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

#ifndef BBS_POINTS_HPP
#define BBS_POINTS_HPP

#include <optional>

#include "bbs/loci_df.hpp"
#include "bbs/scheme.hpp"
#include "bbs/strata.hpp"

namespace bbs {

/// A point Gamma of the coefficient space: the order ideal plus a mu x nu
/// grid of field elements (border basis coefficients).
struct SchemePoint {
    OrderIdeal O;
    Field field;
    std::vector<std::vector<FieldElem>> gamma;  // gamma[i][j], 0-based

    const FieldElem& at(int i, int j) const { return gamma[i][j]; }
};

/// Substitutes the grid for the c-variables. The result lives in the same
/// ring shape with the c-variables eliminated (now constants).
Polynomial specialize(const Polynomial& f, const SchemeContext& S, const SchemePoint& gamma);
PolyMatrix specialize(const PolyMatrix& M, const SchemeContext& S, const SchemePoint& gamma);
std::vector<Polynomial> specialize(const Ideal& I, const SchemeContext& S, const SchemePoint& gamma);

/// All commutator generators vanish at Gamma.
bool on_scheme(const SchemeContext& S, const SchemePoint& gamma);

/// The border basis polynomials of Gamma, as an ideal in the x-ring.
Ideal ideal_of_point(const SchemePoint& gamma, const Ring& xring);

/// O_sigma(I) for sigma = DegRevLex on I's ring: the complement of LT(I),
/// listed degree-ascending and sigma-ascending within a degree (the order a
/// degree-compatible Groebner basis exposes). DimensionError if I is not
/// zero-dimensional.
OrderIdeal degree_filtered_basis(const Ideal& I, const Budget& budget = Budget::unlimited());

/// DF(I) = <DF(g) : g in the reduced DegRevLex basis of I>.
Ideal degree_form_ideal(const Ideal& I, const Budget& budget = Budget::unlimited());

struct CheckResult {
    bool value;
    OrderIdeal O;
    /// det of the single stacked block when Delta = 1.
    std::optional<FieldElem> det;
    /// Scalar entries of the stacked matrix W (as constants of the x-ring).
    PolyMatrix W;
};

/// Strict Cayley-Bacharach check for one scheme: multiplication matrices on
/// P/DF(I) in the degree-filtered basis, stacked last columns, TRUE iff some
/// maximal minor is nonzero.
CheckResult check_scb(const Ideal& I, const Budget& budget = Budget::unlimited());

/// FALSE when the Hilbert function is asymmetric, else check_scb.
CheckResult check_sgor(const Ideal& I, const Budget& budget = Budget::unlimited());

/// Vanishing ideal of pairwise distinct points via the Buchberger-Moller
/// evaluation-matrix reduction; returns its reduced DegRevLex basis. When
/// O_target is given and its residues form a basis of the quotient, also
/// returns the border-basis coefficient grid.
struct BMResult {
    Ideal ideal;
    OrderIdeal quotient_basis;  // O_sigma(I), ascending
    std::optional<SchemePoint> point;
};
BMResult buchberger_moller(const std::vector<std::vector<FieldElem>>& points, const Ring& xring,
                           const std::optional<OrderIdeal>& O_target = std::nullopt);

/// Expresses each border term of O in the residue basis O modulo I; error if
/// O is not a basis of the quotient.
SchemePoint border_basis_point(const Ideal& I, const OrderIdeal& O,
                               const Budget& budget = Budget::unlimited());

/// All Gamma in F_p^(mu nu) where every commutator entry vanishes, by
/// backtracking with per-cell early aborts; requires p^(mu nu) <= budget
/// (default 2^20). Deterministic order; optional worker threads.
std::vector<SchemePoint> enumerate_points(const OrderIdeal& O, long p,
                                          long long state_budget = 1 << 20, int threads = 1);

/// Affine Hilbert function of a specialized point from rank profiles of the
/// coordinate columns (the scalar mirror of the bound-ideal construction).
AffineHF hf_of_point(const SchemeContext& S, const SchemePoint& gamma);

}  // namespace bbs

#endif
