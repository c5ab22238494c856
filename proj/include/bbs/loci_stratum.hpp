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

#ifndef BBS_LOCI_STRATUM_HPP
#define BBS_LOCI_STRATUM_HPP

#include "bbs/combine.hpp"

namespace bbs {

/// A locus computation on the Hilbert stratum B_O(H). When the Castelnuovo
/// function of H fails the required symmetry (strict Gorenstein / strict CI),
/// `symmetric_failure` is set: the locus is empty (sgor: assembled ideal is
/// <0>) or carries the degenerate triple (sci).
struct StratumLocus {
    bool symmetric_failure = false;
    std::vector<LocusTriple> triples;
    Ideal closure;
    Ideal boundary;
};

StratumLocus cb_locus(const SchemeContext& S, const AffineHF& H,
                      const Budget& budget = Budget::unlimited(), const CombineHooks* hooks = nullptr);

StratumLocus sgor_locus(const SchemeContext& S, const AffineHF& H,
                        const Budget& budget = Budget::unlimited(), const CombineHooks* hooks = nullptr);

StratumLocus scb_locus(const SchemeContext& S, const AffineHF& H,
                       const Budget& budget = Budget::unlimited(), const CombineHooks* hooks = nullptr);

StratumLocus sci_locus(const SchemeContext& S, const AffineHF& H,
                       const Budget& budget = Budget::unlimited(), const CombineHooks* hooks = nullptr);

StratumLocus compute_locus_stratum(LocusKind kind, const SchemeContext& S, const AffineHF& H,
                                   const Budget& budget = Budget::unlimited(),
                                   const CombineHooks* hooks = nullptr);

/// Assembled complement ideal of a stratum locus (zero ideal on symmetric
/// failure for sgor-style results).
Ideal assemble_stratum_locus(const StratumLocus& locus, AssembleMode mode,
                             const Budget& budget = Budget::unlimited());

}  // namespace bbs

#endif
