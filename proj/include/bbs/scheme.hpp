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

#ifndef BBS_SCHEME_HPP
#define BBS_SCHEME_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bbs/groebner.hpp"
#include "bbs/matrix.hpp"
#include "bbs/order_ideal.hpp"

namespace bbs {

enum class Flavor { Full, Df, Hom };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Cell classes of the coefficient grid: hom (deg t_i = deg b_j),
/// df (deg t_i <= deg b_j), nondf (deg t_i > deg b_j).
enum class CellClass { Hom, Df, NonDf };

/// Everything attached to one order ideal over one coefficient field:
/// the coefficient-variable grid, the generic prebases and multiplication
/// matrices in all flavors, the defining ideals, and border division in the
/// universal family. Pure and immutable after construction; caches publish
/// computed data once.
class SchemeContext {
  public:
    SchemeContext(OrderIdeal O, Field field);

    const OrderIdeal& order_ideal() const { return O_; }
    const Field& field() const { return field_; }
    int n() const { return O_.n(); }
    int mu() const { return O_.mu(); }
    int nu() const { return O_.nu(); }

    /// K[C]: the coefficient variables c[i][j], row-major. Printed 1-based.
    const Ring& cring() const { return cring_; }
    /// K[C][x]: coefficient variables first, then the x-block.
    const Ring& cxring() const { return cxring_; }
    /// Index of c_{ij} (0-based i,j) in cring/cxring.
    int cvar(int i, int j) const { return i * O_.nu() + j; }
    /// Index of x_k in the cxring.
    int xvar(int k) const { return ncvars_ + k; }
    int ncvars() const { return ncvars_; }

    CellClass cell_class(int i, int j) const;
    /// Arrow degree deg(c_{ij}) = deg(b_j) - deg(t_i).
    int arrow_degree(int i, int j) const;
    /// Total arrow degree of a term of the cxring (x-variables weigh 1).
    long arrow_degree(const Term& t) const;
    bool is_arrow_homogeneous(const Polynomial& f) const;
    /// Arrow degree of the (unique) arrow-homogeneous polynomial f.
    long arrow_degree_of(const Polynomial& f) const;

    /// g_j = b_j - sum c_{ij} t_i over the flavor's cells; in K[C][x].
    const std::vector<Polynomial>& generic_prebasis(Flavor flavor) const;
    /// The n generic multiplication matrices, mu x mu over K[C].
    const std::vector<PolyMatrix>& generic_matrices(Flavor flavor) const;
    /// Commutator-entry ideal (+ nondf / nonhom variables for df / hom).
    const Ideal& defining_ideal(Flavor flavor) const;
    /// The nondf (resp. nonhom) variables, as polynomials in K[C].
    std::vector<Polynomial> excluded_variables(Flavor flavor) const;

    /// f(A_1,...,A_n) with per-term left-to-right ordered power evaluation;
    /// f is a polynomial in the x-block of the cxring (or x-only exponents).
    PolyMatrix mult_matrix_of_poly(const Polynomial& f, Flavor flavor) const;
    PolyMatrix mult_matrix_of_term(const Term& xterm, Flavor flavor) const;

    /// First column of t(A_1..A_n) = the coordinate tuple of the term t in
    /// the basis O of the universal family (full flavor); memoized.
    const std::vector<Polynomial>& coordinates_of_term(const Term& xterm) const;

    /// Embeds a term over the x-variables as a cxring term.
    Term lift_xterm(const Term& t) const;
    /// Embeds an O-ambient x-polynomial into the cxring.
    Polynomial lift_xpoly(const Polynomial& f) const;

    /// Border division of f (in cxring) by the flavor's generic prebasis:
    /// coordinates a_1..a_mu in K[C] with f = sum a_i t_i + sum q_j g_j.
    struct BorderDivision {
        std::vector<Polynomial> coordinates;  // in cring
        std::vector<Polynomial> quotients;    // in cxring, one per border term
    };
    BorderDivision border_divide(const Polynomial& f, Flavor flavor) const;

    /// Recombines coordinates as an x-polynomial sum a_i t_i (in cxring).
    Polynomial recombine(const std::vector<Polynomial>& coordinates) const;

  private:
    void build_matrices(Flavor flavor) const;

    OrderIdeal O_;
    Field field_;
    int ncvars_;
    Ring cring_, cxring_;

    struct Cache {
        std::map<Flavor, std::vector<Polynomial>> prebasis;
        std::map<Flavor, std::vector<PolyMatrix>> matrices;
        std::map<Flavor, Ideal> defining;
        std::map<Term, std::vector<Polynomial>> coords;
        std::mutex mu;
    };
    std::shared_ptr<Cache> cache_;
};

}  // namespace bbs

#endif
