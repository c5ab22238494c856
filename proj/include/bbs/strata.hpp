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

#ifndef BBS_STRATA_HPP
#define BBS_STRATA_HPP

#include "bbs/scheme.hpp"

namespace bbs {

/// An eventually-constant integer sequence (H_0, H_1, ...): the affine
/// Hilbert function. Stores the minimal prefix; values continue at the last
/// entry. Intermediate sequences of the boundary/AllStrata recursions may be
/// non-monotone; is_valid_hf() tells the two apart.
class AffineHF {
  public:
    /// Stabilization implied at the last value; e.g. {1,3,5} = (1,3,5,5,...).
    static AffineHF from_prefix(std::vector<long> prefix);
    static AffineHF of_order_ideal(const OrderIdeal& O);
    /// H_i = min(mu, C(n+i, n)).
    static AffineHF generic(int n, long mu);
    /// Parses "1,3,5".
    static AffineHF parse(const std::string& csv);

    long value(int i) const;  // 0 for i < 0
    long stable_value() const { return prefix_.back(); }
    long mu() const { return stable_value(); }
    /// Smallest i with H_i = stable value.
    int regularity() const;
    const std::vector<long>& prefix() const { return prefix_; }

    /// First differences h_i = H_i - H_{i-1}, i = 0..regularity().
    std::vector<long> castelnuovo() const;
    /// h_i = h_{rho - i} with rho the last index of a positive difference.
    bool symmetric() const;
    /// H_0 = 1 and nondecreasing.
    bool is_valid_hf() const;

    bool dominates(const AffineHF& o) const;
    AffineHF decremented(int i) const;

    bool operator==(const AffineHF& o) const { return prefix_ == o.prefix_; }
    bool operator!=(const AffineHF& o) const { return !(*this == o); }
    bool operator<(const AffineHF& o) const { return prefix_ < o.prefix_; }

    std::string to_string() const;

  private:
    std::vector<long> prefix_;  // normalized: no trailing repeat of back()
};

/// H_i = #{t in O : deg t <= i}.
AffineHF hf_of_order_ideal(const OrderIdeal& O);
/// H_i >= H'_i for all i.
bool dominates(const AffineHF& H, const AffineHF& Hprime);
AffineHF generic_hf(int n, long mu);

/// I(B_O) + <(N+1)-minors of the coordinate matrix of the terms of degree
/// <= k>; cuts out the points with H_k <= N.
Ideal bound_ideal(const SchemeContext& S, int k, long N, const Budget& budget = Budget::unlimited());

/// I(B_O(H-bar)) = sum of bound ideals for i = 1..regularity-1.
/// DominationError if H does not dominate HF^a_O.
Ideal closure_stratum_ideal(const SchemeContext& S, const AffineHF& H,
                            const Budget& budget = Budget::unlimited());

/// I(Z_O(H-bar)): intersection over the one-step decrements; B_O(H) is
/// V(closure) minus V(this).
Ideal boundary_ideal(const SchemeContext& S, const AffineHF& H,
                     const Budget& budget = Budget::unlimited());

/// All admissible H with generic >= H >= HF^a_O, generic first.
std::vector<AffineHF> all_strata(const OrderIdeal& O);

/// TRUE iff some order ideal in n variables has affine HF equal to H.
bool is_admissible(const AffineHF& H, int n);

/// All order ideals with the given affine Hilbert function, in the canonical
/// enumeration order (level-by-level subsets, candidates descending
/// DegRevLex, subsets lexicographic).
std::vector<OrderIdeal> order_ideals_with_hf(const AffineHF& H, int n,
                                             const std::vector<std::string>& xvars = {});

}  // namespace bbs

#endif
