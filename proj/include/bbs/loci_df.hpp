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

#ifndef BBS_LOCI_DF_HPP
#define BBS_LOCI_DF_HPP

#include <optional>

#include "bbs/scheme.hpp"

namespace bbs {

enum class LocusKind { LGor, CBdf, SCBdf, SGordf, SCIdf };

std::string locus_kind_name(LocusKind k);
LocusKind parse_locus_kind(const std::string& s);

/// Output of one locus computation: V(full) is the complement of the locus
/// within V(base).
struct LocusIdeal {
    LocusKind kind;
    Ideal base;   // I(B_O) or I(B_O^df)
    Ideal extra;  // J
    Ideal full;   // base + J
    // Diagnostics used by tests and the CLI.
    std::optional<Polynomial> det_d;  // LGor: det(D) over K[C][z]
    std::optional<PolyMatrix> w;      // CB/SCB: the stacked matrix W
};

/// Locally Gorenstein locus on all of B_O: D's i-th column is
/// t_i(A_1^tr,...,A_n^tr) (z_1..z_mu)^tr; J collects the z-coefficients of
/// det(D).
LocusIdeal lgor_locus(const SchemeContext& S, const Budget& budget = Budget::unlimited());

/// Cayley-Bacharach locus in B_O^df via maximal minors of the stacked
/// last-column matrix W built from the degree-filtered matrices.
LocusIdeal cb_locus_df(const SchemeContext& S, const Budget& budget = Budget::unlimited());

/// Strict Cayley-Bacharach locus in B_O^df: the same pipeline on the
/// homogeneous multiplication matrices.
LocusIdeal scb_locus_df(const SchemeContext& S, const Budget& budget = Budget::unlimited());

/// Strict Gorenstein locus in B_O^df: empty extra if HF_O is asymmetric,
/// otherwise the strict Cayley-Bacharach ideal.
LocusIdeal sgor_locus_df(const SchemeContext& S, const Budget& budget = Budget::unlimited());

/// Strict complete intersection locus in B_O^df via order-n minors of the
/// coefficient matrix of the homogeneous prebasis and border division.
LocusIdeal sci_locus_df(const SchemeContext& S, const Budget& budget = Budget::unlimited());

LocusIdeal compute_locus_df(LocusKind kind, const SchemeContext& S,
                            const Budget& budget = Budget::unlimited());

/// The Gamma of the maxdeg-border lemma: gamma_{mu,1} = 1, rest 0 (only
/// meaningful when deg(t_mu) > deg(b_1)). Exposed for the property tests.
std::vector<std::vector<FieldElem>> maxdeg_witness_grid(const SchemeContext& S);

}  // namespace bbs

#endif
