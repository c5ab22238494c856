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

#ifndef BBS_COMBINE_HPP
#define BBS_COMBINE_HPP

#include <functional>

#include "bbs/points.hpp"
#include "bbs/strata.hpp"

namespace bbs {

/// Base change between the O-chart and an O'-chart: column i of T' is the
/// coordinate tuple of t'_i in the basis O; delta = det T'; the image table
/// sends c'_{kl} to p[k][l] / delta on D(delta).
struct BaseChange {
    PolyMatrix t_prime;                           // mu x mu over K[C]
    Polynomial delta;                             // det T'
    PolyMatrix adjugate;                          // adj(T')
    std::vector<std::vector<Polynomial>> images;  // images[k][l] = p_{kl}
};

BaseChange base_change(const SchemeContext& S, const OrderIdeal& Oprime,
                       const Budget& budget = Budget::unlimited());

/// DFB subscheme data: (I(B_O(H-bar)), I(Z_O(H-bar)), det T') for
/// H = HF^a_{O'}. J_{O'} = (I(Z) meet <delta>) + I(B-bar) cuts out the
/// complement of B_O^dfb(O').
struct DfbResult {
    Ideal closure;
    Ideal boundary;
    Polynomial delta;
};

DfbResult dfb_subscheme(const SchemeContext& S, const OrderIdeal& Oprime,
                        const Budget& budget = Budget::unlimited());

/// One chart's contribution to a locus in the Hilbert stratum.
struct LocusTriple {
    OrderIdeal o_prime;
    Polynomial delta;  // in K[C] of the O-chart
    Ideal i_dfb;       // I(Z_O(H-bar)) meet <delta>
    Ideal j;           // transformed locus-complement ideal, in K[C]
};

/// Per-order-ideal df-locus function: receives the O'-chart context and
/// returns the extra ideal (the locus-complement part on B^df_{O'}) in the
/// O'-coefficient ring.
using LocusFn = std::function<Ideal(const SchemeContext& Sprime)>;

/// Checkpoint hooks: try_load yields a previously saved triple for a chart
/// index, if any; on_done is invoked after each fresh computation.
struct CombineHooks {
    std::function<std::optional<LocusTriple>(int index, const OrderIdeal& Oprime)> try_load;
    std::function<void(int index, const LocusTriple& triple)> on_done;
};

struct CombineResult {
    std::vector<LocusTriple> triples;
    Ideal closure;   // I(B_O(H-bar))
    Ideal boundary;  // I(Z_O(H-bar))
};

/// Runs locus_fn on every order ideal with affine Hilbert function H, maps
/// each returned ideal into the O-chart (homogenize with z, substitute
/// c' -> p, z -> delta) and attaches I^dfb = I(Z) meet <delta>.
CombineResult combine_loci(const SchemeContext& S, const AffineHF& H, const LocusFn& locus_fn,
                           const Budget& budget = Budget::unlimited(),
                           const CombineHooks* hooks = nullptr);

enum class AssembleMode { IntersectionSum, ProductSum };

AssembleMode parse_assemble_mode(const std::string& s);

/// Intersection-sum: sum of (I^dfb_i + base) meet (J_i + base);
/// product-sum: sum of I^dfb_i * J_i, plus base. Equal up to radical.
Ideal assemble_ideal(const std::vector<LocusTriple>& triples, const Ideal& base, AssembleMode mode,
                     const Budget& budget = Budget::unlimited());

/// Substitution across rings: every variable of f's ring gets an image in
/// the target ring.
Polynomial substitute_across(const Polynomial& f, const std::vector<Polynomial>& images,
                             const Ring& target);

/// The homogenize-substitute transform of one locus generator.
Polynomial transform_locus_generator(const Polynomial& a, const SchemeContext& Sprime,
                                     const BaseChange& bc, const SchemeContext& S);

}  // namespace bbs

#endif
