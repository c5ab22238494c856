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

#ifndef BBS_GROEBNER_HPP
#define BBS_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bbs/polynomial.hpp"

namespace bbs {

/// Computes the reduced Groebner basis of the given generators. Deterministic
/// output: monic, interreduced, sorted by descending leading term.
/// Buchberger with normal selection (sugar tiebreak) and Gebauer-Moeller pair
/// pruning. Throws ResourceLimitError when the budget is exceeded.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const TermOrdering& ord,
                                       const Budget& budget = Budget::unlimited(),
                                       const std::string& tag = "groebner_basis");

/// Remainder of f on division by the (not necessarily reduced) basis G.
/// Fully reduced: no term of the result is divisible by any LT(g).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrdering& ord);

/// An ideal with cached reduced Groebner bases per term ordering.
/// Value type with shared immutable state; the cache publishes once.
class Ideal {
  public:
    Ideal() = default;
    Ideal(std::vector<Polynomial> gens, Ring ring);
    static Ideal zero(const Ring& ring) { return Ideal({}, ring); }
    static Ideal unit(const Ring& ring) { return Ideal({Polynomial::from_int(1, ring)}, ring); }
    static Ideal span(std::initializer_list<Polynomial> gens, const Ring& ring) {
        return Ideal(std::vector<Polynomial>(gens), ring);
    }

    const Ring& ring() const { return state_->ring; }
    const std::vector<Polynomial>& generators() const { return state_->gens; }

    const std::vector<Polynomial>& groebner(const TermOrdering& ord,
                                            const Budget& budget = Budget::unlimited()) const;
    Polynomial normal_form(const Polynomial& f, const TermOrdering& ord,
                           const Budget& budget = Budget::unlimited()) const;
    bool contains(const Polynomial& f, const Budget& budget = Budget::unlimited()) const;
    bool is_unit_ideal(const Budget& budget = Budget::unlimited()) const;
    bool is_zero_ideal() const;

    /// Equality as ideals (identical reduced DegRevLex bases).
    bool equals(const Ideal& other, const Budget& budget = Budget::unlimited()) const;

    /// New ideal with the same ring and extra generators appended.
    Ideal plus(const std::vector<Polynomial>& extra) const;

  private:
    struct State {
        Ring ring;
        std::vector<Polynomial> gens;
        mutable std::mutex mu;
        mutable std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> gb_cache;
    };
    std::shared_ptr<State> state_;
};

enum class IdealOp { Sum, Product, Intersection };

/// Sum = concatenated generators; product = pairwise products; intersection
/// via a fresh tag variable t and elimination of t from t*I + (1-t)*J.
Ideal ideal_combine(const Ideal& I, const Ideal& J, IdealOp op, const Budget& budget = Budget::unlimited());

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J, const Budget& budget = Budget::unlimited());

/// Syntactic membership certificate: TRUE means f provably lies in I without
/// any basis computation — f is zero, a scalar multiple of a generator, or
/// every term of f is divisible by a monomial generator. FALSE is
/// inconclusive.
bool ideal_member_syntactic(const Polynomial& f, const Ideal& I);
/// Generator-wise syntactic containment certificate (sound, incomplete).
bool ideal_subset_syntactic(const Ideal& A, const Ideal& B);
/// Mutual syntactic containment: TRUE proves exact ideal equality.
bool ideal_equal_syntactic(const Ideal& A, const Ideal& B);

/// I meet <f>. When f provably lies in I (syntactic certificate) the result
/// is <f> itself; otherwise falls back to tag-variable elimination.
Ideal intersect_with_principal(const Ideal& I, const Polynomial& f,
                               const Budget& budget = Budget::unlimited());

/// TRUE iff f lies in the radical of I (Rabinowitsch: 1 in I + <1 - y*f>).
bool radical_membership(const Polynomial& f, const Ideal& I, const Budget& budget = Budget::unlimited());

/// TRUE iff Rad(I) = Rad(J): every generator of each side is a radical member
/// of the other (plain membership tried first).
bool ideal_equal_mod_radical(const Ideal& I, const Ideal& J, const Budget& budget = Budget::unlimited());

/// Krull dimension of ring/I, combinatorially from LT(I) (maximal variable
/// set meeting no leading-term support). Unit ideal gives -1.
int krull_dim(const Ideal& I, const Budget& budget = Budget::unlimited());

/// All S-polynomials of G reduce to zero (Buchberger criterion); test helper.
bool is_groebner_basis(const std::vector<Polynomial>& G, const TermOrdering& ord);

}  // namespace bbs

#endif
