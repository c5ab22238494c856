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

#include <doctest.h>

#include <set>

#include "bbs/loci_df.hpp"
#include "bbs/points.hpp"
#include "test_util.hpp"

using namespace bbs;
using namespace bbs::testutil;

namespace {

std::vector<std::vector<FieldElem>> qq_points(const std::vector<std::vector<long>>& raw) {
    std::vector<std::vector<FieldElem>> out;
    for (const auto& p : raw) {
        std::vector<FieldElem> row;
        for (long v : p) row.push_back(FieldElem::from_int(v, Field::rationals()));
        out.push_back(std::move(row));
    }
    return out;
}

const std::vector<std::vector<long>> kEightPoints = {{1, -1}, {0, 2}, {1, 1}, {1, 2},
                                                     {0, 1},  {1, 3}, {2, 4}, {3, 4}};

}  // namespace

TEST_CASE("Buchberger-Moller on the eight plane points") {
    Ring r = qq_ring({"x", "y"});
    BMResult bm = buchberger_moller(qq_points(kEightPoints), r);
    std::vector<Polynomial> expected = {
        P("x^2y - 4x^2 - xy + 4x", r),
        P("x^3 + xy^2 - 6x^2 - 3xy - y^2 + 7x + 3y - 2", r),
        P("y^4 - 10xy^2 - 5y^3 + 15x^2 + 30xy + 15y^2 - 35x - 25y + 14", r),
        P("xy^3 - 7xy^2 - y^3 + 14xy + 7y^2 - 8x - 14y + 8", r)};
    CHECK(same_poly_set(bm.ideal.groebner(TermOrdering::degrevlex(2)), expected));
    // generators already form the reduced basis
    CHECK(same_poly_set(bm.ideal.generators(), expected));
    // degree-filtered quotient basis in ascending order with order tuple
    CHECK(bm.quotient_basis.to_string() == "1,y,x,y^2,x*y,x^2,y^3,x*y^2");
    std::vector<int> degs;
    for (const auto& t : bm.quotient_basis.terms()) degs.push_back(t.degree());
    CHECK(degs == std::vector<int>{0, 1, 1, 2, 2, 2, 3, 3});
}

TEST_CASE("Buchberger-Moller trivia") {
    Ring r1 = qq_ring({"x"});
    BMResult bm = buchberger_moller(qq_points({{0}, {1}}), r1);
    REQUIRE(bm.ideal.generators().size() == 1);
    CHECK(bm.ideal.generators()[0] == P("x^2 - x", r1));
    CHECK_THROWS_AS(buchberger_moller(qq_points({{0}, {0}}), r1), InputError);
}

TEST_CASE("twisted cubic points: basis, ideal, degree forms") {
    // DegRevLex with z > y > x
    Ring r({"z", "y", "x"}, Field::rationals());
    std::vector<std::vector<long>> pts_zyx;
    for (long t : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L}) pts_zyx.push_back({t * t * t, t * t, t});
    BMResult bm = buchberger_moller(qq_points(pts_zyx), r);

    std::vector<Polynomial> expected = {
        P("x^2 - y", r), P("xy - z", r), P("y^2 - xz", r),
        P("yz^2 - 4xz^2 - 14z^2 + 56yz + 49xz - 196z - 36y + 144x", r),
        P("z^3 - 30xz^2 + 273yz - 820z + 576x", r)};
    CHECK(same_poly_set(bm.ideal.generators(), expected));
    CHECK(bm.quotient_basis.to_string() == "1,x,y,z,z*x,z*y,z^2,z^2*x");

    Ideal df = degree_form_ideal(bm.ideal);
    std::vector<Polynomial> df_expected = {P("x^2", r), P("xy", r), P("y^2 - xz", r),
                                           P("yz^2 - 4xz^2", r), P("z^3 - 30xz^2", r)};
    CHECK(same_poly_set(df.generators(), df_expected));

    // the checker: symmetric HF (1,3,3,1) and det V = 1
    CheckResult res = check_sgor(bm.ideal);
    CHECK(res.value);
    CHECK(AffineHF::of_order_ideal(res.O).castelnuovo() == std::vector<long>{1, 3, 3, 1});
    REQUIRE(res.det.has_value());
    CHECK(res.det->is_one());
}

TEST_CASE("degree filtered basis requires zero-dimensionality") {
    Ring r = qq_ring({"x", "y"});
    CHECK_THROWS_AS(degree_filtered_basis(Ideal({P("x", r)}, r)), MathError);
    OrderIdeal O = degree_filtered_basis(Ideal({P("x", r), P("y", r)}, r));
    CHECK(O.to_string() == "1");
}

TEST_CASE("degree form ideal fixes homogeneous input") {
    Ring r = qq_ring({"x", "y"});
    Ideal I({P("x^2", r), P("y^2", r)}, r);
    CHECK(degree_form_ideal(I).equals(I));
    Ring r1 = qq_ring({"x"});
    Ideal J({P("x - 1", r1)}, r1);
    CHECK(degree_form_ideal(J).equals(Ideal({P("x", r1)}, r1)));
}

TEST_CASE("strict Gorenstein checker on the fat point scheme") {
    Ring r({"z", "y", "x"}, Field::rationals());
    Ideal I({P("y^2 - x^2", r), P("z^2 - x^2", r), P("xy", r), P("xz", r), P("yz", r), P("x^3", r)},
            r);
    CheckResult res = check_sgor(I);
    CHECK(res.value);
    CHECK(res.O.to_string() == "1,x,y,z,x^2");
    CHECK(AffineHF::of_order_ideal(res.O).castelnuovo() == std::vector<long>{1, 3, 1});
    REQUIRE(res.det.has_value());
    CHECK(*res.det == FieldElem::from_int(-1, Field::rationals()));
}

TEST_CASE("strict CB checker rejects the counterexample scheme") {
    Ring r({"z", "y", "x"}, Field::rationals());
    Ideal I({P("xy - x^3", r), P("xz - y", r), P("y^2", r), P("yz", r), P("z^2", r), P("x^2y", r),
             P("x^2z - x^3", r), P("x^4", r), P("x^3y", r), P("x^3z", r)},
            r);
    CheckResult res = check_scb(I);
    CHECK_FALSE(res.value);
}

TEST_CASE("strict Gorenstein checker via the socle oracle") {
    // check_sgor against a brute-force socle computation of P/DF(I)
    Ring r = qq_ring({"x", "y"});
    auto socle_dimension = [&](const Ideal& df, const OrderIdeal& O) {
        // socle of the graded quotient: kernel of multiplication by (x, y)
        TermOrdering ord = TermOrdering::degrevlex(2);
        int mu = O.mu();
        // stacked multiplication-by-variables matrix; socle = its kernel
        std::vector<std::vector<FieldElem>> m(2 * mu, std::vector<FieldElem>(mu, FieldElem::zero(r.field())));
        for (int v = 0; v < 2; ++v)
            for (int col = 0; col < mu; ++col) {
                Polynomial img = df.normal_form(
                    Polynomial::term(O.term(col) * Term::variable(v, 2), r), ord);
                for (const auto& [t, c] : img.terms()) m[v * mu + O.index_of(t)][col] = c;
            }
        // kernel dim = mu - rank
        int rank = 0;
        std::vector<std::vector<FieldElem>> a = m;
        for (int c0 = 0; c0 < mu && rank < 2 * mu; ++c0) {
            int piv = -1;
            for (int r0 = rank; r0 < 2 * mu; ++r0)
                if (!a[r0][c0].is_zero()) {
                    piv = r0;
                    break;
                }
            if (piv < 0) continue;
            std::swap(a[rank], a[piv]);
            FieldElem inv = a[rank][c0].inverse();
            for (int cc = 0; cc < mu; ++cc) a[rank][cc] *= inv;
            for (int r0 = 0; r0 < 2 * mu; ++r0) {
                if (r0 == rank || a[r0][c0].is_zero()) continue;
                FieldElem f = a[r0][c0];
                for (int cc = 0; cc < mu; ++cc) a[r0][cc] -= f * a[rank][cc];
            }
            ++rank;
        }
        return mu - rank;
    };
    Ideal I({P("x^2", r), P("xy", r), P("y^3", r)}, r);
    OrderIdeal O = degree_filtered_basis(I);
    // HF of O is (1,2,1); graded socle dimension decides Gorenstein-ness of
    // the associated graded ring, which for symmetric HF matches check_sgor
    Ideal df = degree_form_ideal(I);
    int soc = socle_dimension(df, O);
    CheckResult res = check_sgor(I);
    CHECK(res.value == (soc == 1));
}

TEST_CASE("enumerate points over tiny prime fields") {
    // no equations: every grid point lies on the scheme
    OrderIdeal pt = OrderIdeal::parse("1", {"x", "y"});
    auto all = enumerate_points(pt, 2);
    CHECK(all.size() == 4);
    OrderIdeal line = OrderIdeal::parse("1,x", {"x"});
    CHECK(enumerate_points(line, 3).size() == 9);

    OrderIdeal O = OrderIdeal::parse("1,x,y", {"x", "y"});
    auto pts = enumerate_points(O, 2);
    // independent oracle: all monic prebases whose specialized matrices commute,
    // via direct check of the quotient dimension through Groebner bases
    SchemeContext S(O, Field::prime(2));
    long brute = 0;
    Ring xr({"x", "y"}, Field::prime(2));
    std::vector<std::vector<FieldElem>> grid(3, std::vector<FieldElem>(3, FieldElem::zero(Field::prime(2))));
    for (int mask = 0; mask < (1 << 9); ++mask) {
        for (int cell = 0; cell < 9; ++cell)
            grid[cell / 3][cell % 3] = FieldElem::from_int((mask >> cell) & 1, Field::prime(2));
        SchemePoint gamma{O, Field::prime(2), grid};
        Ideal I = ideal_of_point(gamma, xr);
        // Gamma is a border basis iff O stays a quotient basis
        bool ok = true;
        try {
            OrderIdeal q = degree_filtered_basis(I);
            ok = q.mu() == 3;
        } catch (const MathError&) {
            ok = false;
        }
        if (ok) {
            // additionally the residues of O must be independent: mu always 3
            // when the quotient has dimension 3 and O is degree filtered here
            try {
                (void)border_basis_point(I, O);
            } catch (const InputError&) {
                ok = false;
            }
        }
        if (ok) ++brute;
    }
    CHECK(static_cast<long>(pts.size()) == brute);
    // threads partition reproduces the same set
    auto pts4 = enumerate_points(O, 2, 1 << 20, 4);
    CHECK(pts4.size() == pts.size());
    CHECK_THROWS_AS(enumerate_points(OrderIdeal::parse("1,x,y,xy", {"x", "y"}), 7, 100),
                    ResourceLimitError);
}

TEST_CASE("round trip: interpolated points lie on the scheme") {
    OrderIdeal O = OrderIdeal::parse("1,x,y,xy", {"x", "y"});
    SchemeContext S(O, Field::prime(7));
    Ring xr({"x", "y"}, Field::prime(7));
    std::mt19937_64 rng(41);
    int found = 0;
    while (found < 20) {
        std::set<std::pair<long, long>> used;
        std::vector<std::vector<FieldElem>> pts;
        while (pts.size() < 4) {
            long a = rng() % 7, b = rng() % 7;
            if (!used.insert({a, b}).second) continue;
            pts.push_back({FieldElem::from_int(a, Field::prime(7)), FieldElem::from_int(b, Field::prime(7))});
        }
        std::optional<BMResult> bm;
        try {
            bm = buchberger_moller(pts, xr, O);
        } catch (const InputError&) {
            continue;  // O not a basis for this configuration
        }
        REQUIRE(bm->point.has_value());
        CHECK(on_scheme(S, *bm->point));
        ++found;
    }
}

TEST_CASE("specialization commutes with arithmetic") {
    OrderIdeal O = OrderIdeal::parse("1,x,y,xy", {"x", "y"});
    SchemeContext S(O, Field::prime(7));
    std::mt19937_64 rng(43);
    std::vector<std::vector<FieldElem>> grid(4, std::vector<FieldElem>(4, FieldElem::zero(Field::prime(7))));
    for (auto& row : grid)
        for (auto& v : row) v = FieldElem::from_int(static_cast<long>(rng() % 7), Field::prime(7));
    SchemePoint gamma{O, Field::prime(7), grid};
    for (int i = 0; i < 20; ++i) {
        Polynomial f = random_poly(S.cring(), 2, 4, rng);
        Polynomial g = random_poly(S.cring(), 2, 4, rng);
        CHECK(specialize(f * g, S, gamma) == specialize(f, S, gamma) * specialize(g, S, gamma));
        CHECK(specialize(f + g, S, gamma) == specialize(f, S, gamma) + specialize(g, S, gamma));
    }
    // det commutes with specialization
    PolyMatrix m(3, 3, S.cring());
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = random_poly(S.cring(), 1, 2, rng);
    CHECK(specialize(matrix_det(m), S, gamma) == matrix_det(specialize(m, S, gamma)));
}

TEST_CASE("CB evaluation orders agree on every enumerated point") {
    // evaluate-then-minor vs minor-then-evaluate over F_2 and F_3
    for (long p : {2L, 3L}) {
        OrderIdeal O = OrderIdeal::parse("1,x", {"x", "y"});
        SchemeContext S(O, Field::prime(p));
        LocusIdeal cb = cb_locus_df(S);
        for (const auto& gamma : enumerate_points(O, p)) {
            bool eval_zero = true;
            for (const auto& g : specialize(cb.extra, S, gamma))
                if (!g.is_zero()) eval_zero = false;
            PolyMatrix w_at = specialize(*cb.w, S, gamma);
            bool direct_zero = true;
            for (const auto& m : matrix_minors(w_at, O.mu()))
                if (!m.is_zero()) direct_zero = false;
            CHECK(eval_zero == direct_zero);
        }
    }
}

TEST_CASE("Hilbert function of enumerated points matches the stratum ideals") {
    OrderIdeal O = OrderIdeal::parse("1,x,x^2", {"x", "y"});
    SchemeContext S(O, Field::prime(2));
    auto pts = enumerate_points(O, 2);
    REQUIRE(!pts.empty());
    auto strata = all_strata(O);
    std::vector<Ideal> closures, boundaries;
    for (const AffineHF& H : strata) {
        closures.push_back(closure_stratum_ideal(S, H));
        boundaries.push_back(boundary_ideal(S, H));
    }
    bool saw_lower_stratum = false;
    for (const auto& gamma : pts) {
        AffineHF h = hf_of_point(S, gamma);
        if (h != generic_hf(2, 3)) saw_lower_stratum = true;
        for (size_t k = 0; k < strata.size(); ++k) {
            const AffineHF& H = strata[k];
            bool on_closure = true;
            for (const auto& g : specialize(closures[k], S, gamma))
                if (!g.is_zero()) on_closure = false;
            bool on_boundary = true;
            for (const auto& g : specialize(boundaries[k], S, gamma))
                if (!g.is_zero()) on_boundary = false;
            CHECK(on_closure == H.dominates(h));
            CHECK(on_boundary == (H.dominates(h) && H != h));
        }
    }
    CHECK(saw_lower_stratum);  // both strata are populated over F_2
}
