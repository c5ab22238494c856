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

#include "bbs/loci_stratum.hpp"

namespace bbs {

namespace {

StratumLocus run_combine(const SchemeContext& S, const AffineHF& H, LocusKind df_kind,
                         const Budget& budget, const CombineHooks* hooks) {
    LocusFn fn = [df_kind, &budget](const SchemeContext& Sp) {
        return compute_locus_df(df_kind, Sp, budget).extra;
    };
    CombineResult r = combine_loci(S, H, fn, budget, hooks);
    return StratumLocus{false, std::move(r.triples), std::move(r.closure), std::move(r.boundary)};
}

}  // namespace

StratumLocus cb_locus(const SchemeContext& S, const AffineHF& H, const Budget& budget,
                      const CombineHooks* hooks) {
    return run_combine(S, H, LocusKind::CBdf, budget, hooks);
}

StratumLocus sgor_locus(const SchemeContext& S, const AffineHF& H, const Budget& budget,
                        const CombineHooks* hooks) {
    if (!H.symmetric()) {
        StratumLocus out;
        out.symmetric_failure = true;
        out.closure = closure_stratum_ideal(S, H, budget);
        out.boundary = boundary_ideal(S, H, budget);
        return out;
    }
    return run_combine(S, H, LocusKind::CBdf, budget, hooks);
}

StratumLocus scb_locus(const SchemeContext& S, const AffineHF& H, const Budget& budget,
                       const CombineHooks* hooks) {
    return run_combine(S, H, LocusKind::SCBdf, budget, hooks);
}

StratumLocus sci_locus(const SchemeContext& S, const AffineHF& H, const Budget& budget,
                       const CombineHooks* hooks) {
    if (!H.symmetric()) {
        StratumLocus out;
        out.symmetric_failure = true;
        out.closure = closure_stratum_ideal(S, H, budget);
        out.boundary = boundary_ideal(S, H, budget);
        // Degenerate triple (O, I(B_O(H-bar)), <0>).
        out.triples.push_back(LocusTriple{S.order_ideal(), Polynomial::zero(S.cring()), out.closure,
                                          Ideal::zero(S.cring())});
        return out;
    }
    return run_combine(S, H, LocusKind::SCIdf, budget, hooks);
}

StratumLocus compute_locus_stratum(LocusKind kind, const SchemeContext& S, const AffineHF& H,
                                   const Budget& budget, const CombineHooks* hooks) {
    switch (kind) {
        case LocusKind::CBdf: return cb_locus(S, H, budget, hooks);
        case LocusKind::SGordf: return sgor_locus(S, H, budget, hooks);
        case LocusKind::SCBdf: return scb_locus(S, H, budget, hooks);
        case LocusKind::SCIdf: return sci_locus(S, H, budget, hooks);
        case LocusKind::LGor: break;
    }
    throw InputError("locus kind not available on a Hilbert stratum");
}

Ideal assemble_stratum_locus(const StratumLocus& locus, AssembleMode mode, const Budget& budget) {
    if (locus.symmetric_failure && locus.triples.empty()) return Ideal::zero(locus.closure.ring());
    return assemble_ideal(locus.triples, locus.closure, mode, budget);
}

}  // namespace bbs
