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

#include <sstream>

#include "bbs/scheme.hpp"
#include "test_util.hpp"

using namespace bbs;
using namespace bbs::testutil;

namespace {

OrderIdeal one_x_y_xy() { return OrderIdeal::parse("1,x,y,xy", {"x", "y"}); }

}  // namespace

TEST_CASE("order ideals and borders") {
    OrderIdeal O = one_x_y_xy();
    CHECK(O.mu() == 4);
    CHECK(O.nu() == 4);
    Ring r = qq_ring({"x", "y"});
    CHECK(O.border_term(0) == parse_term("x^2", r));
    CHECK(O.border_term(1) == parse_term("y^2", r));
    CHECK(O.border_term(2) == parse_term("x^2y", r));
    CHECK(O.border_term(3) == parse_term("xy^2", r));

    OrderIdeal small = OrderIdeal::parse("1,x", {"x", "y"});
    CHECK(small.border_term(0) == parse_term("y", r));
    CHECK(small.border_term(1) == parse_term("x^2", r));
    CHECK(small.border_term(2) == parse_term("xy", r));

    CHECK_THROWS_AS(OrderIdeal::parse("x", {"x", "y"}), InputError);
    CHECK_THROWS_AS(OrderIdeal::parse("1,xy", {"x", "y"}), InputError);
    // border override must be a permutation of the true border
    CHECK_THROWS_AS(OrderIdeal::parse("1,x", {"x", "y"}, "y,x^2,x^3"), InputError);
    OrderIdeal reordered = OrderIdeal::parse("1,x", {"x", "y"}, "x^2,xy,y");
    CHECK(reordered.border_term(0) == parse_term("x^2", r));
}

TEST_CASE("generic prebases in all flavors") {
    SchemeContext S(one_x_y_xy(), Field::rationals());
    const Ring& cx = S.cxring();
    const auto& full = S.generic_prebasis(Flavor::Full);
    CHECK(full[0] == P("x^2 - c[1][1] - c[2][1]x - c[3][1]y - c[4][1]xy", cx));
    const auto& hom = S.generic_prebasis(Flavor::Hom);
    CHECK(hom[0] == P("x^2 - c[4][1]xy", cx));
    CHECK(hom[1] == P("y^2 - c[4][2]xy", cx));
    CHECK(hom[2] == P("x^2y", cx));
    CHECK(hom[3] == P("xy^2", cx));
    // no nondf cells here, so df = full
    CHECK(S.generic_prebasis(Flavor::Df) == full);

    SchemeContext pt(OrderIdeal::parse("1", {"x", "y"}), Field::rationals());
    const auto& G = pt.generic_prebasis(Flavor::Full);
    CHECK(G[0] == P("x - c[1][1]", pt.cxring()));
    CHECK(G[1] == P("y - c[1][2]", pt.cxring()));
}

TEST_CASE("generic multiplication matrices match the printed pair") {
    SchemeContext S(one_x_y_xy(), Field::rationals());
    const auto& mats = S.generic_matrices(Flavor::Full);
    const Ring& c = S.cring();
    const char* ax[4][4] = {{"0", "c[1][1]", "0", "c[1][3]"},
                            {"1", "c[2][1]", "0", "c[2][3]"},
                            {"0", "c[3][1]", "0", "c[3][3]"},
                            {"0", "c[4][1]", "1", "c[4][3]"}};
    const char* ay[4][4] = {{"0", "0", "c[1][2]", "c[1][4]"},
                            {"0", "0", "c[2][2]", "c[2][4]"},
                            {"1", "0", "c[3][2]", "c[3][4]"},
                            {"0", "1", "c[4][2]", "c[4][4]"}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(mats[0].at(i, j) == P(ax[i][j], c));
            CHECK(mats[1].at(i, j) == P(ay[i][j], c));
        }
    // df flavor equals full here (no nondf cells)
    CHECK(S.generic_matrices(Flavor::Df) == mats);

    SchemeContext pt(OrderIdeal::parse("1", {"x", "y"}), Field::rationals());
    CHECK(pt.generic_matrices(Flavor::Full)[0].at(0, 0) == P("c[1][1]", pt.cring()));
    CHECK(pt.generic_matrices(Flavor::Full)[1].at(0, 0) == P("c[1][2]", pt.cring()));
}

TEST_CASE("defining ideal reproduces the twelve printed generators") {
    SchemeContext S(one_x_y_xy(), Field::rationals());
    const Ring& c = S.cring();
    auto p = [&](const std::string& s) { return P(s, c); };
    std::vector<Polynomial> printed = {
        p("c[1][1]c[2][2] + c[1][3]c[4][2] - c[1][4]"),
        p("c[1][1]c[2][4] - c[1][2]c[3][3] - c[1][4]c[4][3] + c[1][3]c[4][4]"),
        p("c[1][2]c[3][1] + c[1][4]c[4][1] - c[1][3]"),
        p("c[2][1]c[2][2] + c[2][3]c[4][2] + c[1][2] - c[2][4]"),
        p("c[2][1]c[2][4] - c[2][2]c[3][3] - c[2][4]c[4][3] + c[2][3]c[4][4] + c[1][4]"),
        p("c[2][2]c[3][1] + c[2][4]c[4][1] - c[2][3]"),
        p("c[2][2]c[3][1] + c[3][3]c[4][2] - c[3][4]"),
        p("c[2][2]c[4][1] + c[4][2]c[4][3] + c[3][2] - c[4][4]"),
        p("c[2][4]c[3][1] - c[3][2]c[3][3] - c[3][4]c[4][3] + c[3][3]c[4][4] - c[1][3]"),
        p("c[3][1]c[3][2] + c[3][4]c[4][1] + c[1][1] - c[3][3]"),
        p("c[3][1]c[4][2] + c[4][1]c[4][4] + c[2][1] - c[4][3]"),
        p("c[3][3]c[4][2] - c[2][4]c[4][1] + c[2][3] - c[3][4]"),
    };
    const Ideal& I = S.defining_ideal(Flavor::Full);
    CHECK(I.generators().size() == 12);
    // equal as sets after sign normalization
    TermOrdering ord = TermOrdering::degrevlex(c.nvars());
    std::vector<Polynomial> got, want;
    for (const auto& g : I.generators()) got.push_back(g.normalized_sign(ord));
    for (const auto& g : printed) want.push_back(g.normalized_sign(ord));
    CHECK(same_poly_set(got, want));

    // n = 1: no commutators at all
    SchemeContext line(OrderIdeal::parse("1,x,x^2", {"x"}), Field::rationals());
    CHECK(line.defining_ideal(Flavor::Full).is_zero_ideal());
}

TEST_CASE("homogeneous defining ideal collapses to the nonhom variables") {
    SchemeContext S(one_x_y_xy(), Field::rationals());
    const Ideal& hom = S.defining_ideal(Flavor::Hom);
    auto vars = S.excluded_variables(Flavor::Hom);
    CHECK(vars.size() == 14);
    CHECK(hom.equals(Ideal(vars, S.cring())));
}

TEST_CASE("commutator entries are arrow-homogeneous across the corpus") {
    for (const char* spec : {"1,x|x,y", "1,x,y|x,y", "1,x,x^2,x^3|x,y", "1,x,y,z,x^2|x,y,z",
                             "1,x,y,x^2,xy,y^2,x^3|x,y"}) {
        std::string s(spec);
        auto bar = s.find('|');
        std::vector<std::string> vars;
        std::stringstream ss(s.substr(bar + 1));
        std::string item;
        while (std::getline(ss, item, ',')) vars.push_back(item);
        SchemeContext S(OrderIdeal::parse(s.substr(0, bar), vars), Field::rationals());
        for (const auto& g : S.defining_ideal(Flavor::Full).generators())
            CHECK(S.is_arrow_homogeneous(g));
    }
}

TEST_CASE("arrow degrees") {
    SchemeContext S(one_x_y_xy(), Field::rationals());
    int expected[4][4] = {{2, 2, 3, 3}, {1, 1, 2, 2}, {1, 1, 2, 2}, {0, 0, 1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(S.arrow_degree(i, j) == expected[i][j]);
    for (const auto& g : S.defining_ideal(Flavor::Full).generators()) CHECK(S.is_arrow_homogeneous(g));
    CHECK_FALSE(S.is_arrow_homogeneous(P("c[4][1] + c[1][1]", S.cring())));
    // hom-ideal commutator generators all have total arrow degree zero (the
    // added nonhom variables carry their own degrees)
    auto excluded = S.excluded_variables(Flavor::Hom);
    for (const auto& g : S.defining_ideal(Flavor::Hom).generators()) {
        CHECK(S.is_arrow_homogeneous(g));
        bool is_excluded_var = false;
        for (const auto& v : excluded)
            if (g == v) is_excluded_var = true;
        if (!is_excluded_var) CHECK(S.arrow_degree_of(g) == 0);
    }
}

TEST_CASE("maxdeg border detection") {
    CHECK(one_x_y_xy().has_maxdeg_border());
    CHECK(OrderIdeal::parse("1,x,y,z,x^2", {"x", "y", "z"}).has_maxdeg_border());
    CHECK_FALSE(OrderIdeal::parse("1,x,x^2", {"x", "y"}).has_maxdeg_border());
}

TEST_CASE("flavor consistency: killing nondf variables maps full onto df") {
    OrderIdeal O = OrderIdeal::parse("1,x,x^2,x^3", {"x", "y"});
    SchemeContext S(O, Field::rationals());
    std::map<int, Polynomial> kill;
    for (const auto& v : S.excluded_variables(Flavor::Df))
        kill.emplace(v.support_vars()[0], Polynomial::zero(S.cring()));
    const Ideal& df = S.defining_ideal(Flavor::Df);
    for (const auto& g : S.defining_ideal(Flavor::Full).generators()) {
        Polynomial image = g.substituted(kill);
        CHECK(df.contains(image));
    }
}

TEST_CASE("multiplication matrices of polynomials") {
    SchemeContext S(one_x_y_xy(), Field::rationals());
    const auto& mats = S.generic_matrices(Flavor::Full);
    Ring xring = qq_ring({"x", "y"});
    CHECK(S.mult_matrix_of_term(parse_term("1", xring), Flavor::Full) ==
          PolyMatrix::identity(4, S.cring()));
    CHECK(S.mult_matrix_of_term(parse_term("x", xring), Flavor::Full) == mats[0]);
    CHECK(S.mult_matrix_of_term(parse_term("y", xring), Flavor::Full) == mats[1]);
    // first column of xy's matrix equals the memoized coordinate tuple
    PolyMatrix m = S.mult_matrix_of_term(parse_term("xy", xring), Flavor::Full);
    const auto& coords = S.coordinates_of_term(parse_term("xy", xring));
    for (int i = 0; i < 4; ++i) CHECK(m.at(i, 0) == coords[i]);
}

TEST_CASE("border division in the universal family") {
    SchemeContext S(one_x_y_xy(), Field::rationals());
    const Ring& cx = S.cxring();

    // dividing a basis term gives a unit vector
    auto d1 = S.border_divide(P("y", cx), Flavor::Full);
    CHECK(d1.coordinates[2] == P("1", S.cring()));
    CHECK(d1.coordinates[0].is_zero());

    // dividing a border term reads off the (flavor-filtered) c-column
    auto d2 = S.border_divide(P("x^2", cx), Flavor::Full);
    for (int i = 0; i < 4; ++i)
        CHECK(d2.coordinates[i] == Polynomial::variable(S.cvar(i, 0), S.cring()));
    auto d2h = S.border_divide(P("x^2", cx), Flavor::Hom);
    CHECK(d2h.coordinates[3] == P("c[4][1]", S.cring()));
    CHECK(d2h.coordinates[0].is_zero());

    // the worked strict-CI division: f1 = -y^2 c41 + xy against G^hom
    Polynomial f1 = P("xy - c[4][1]y^2", cx);
    auto d3 = S.border_divide(f1, Flavor::Hom);
    CHECK(d3.coordinates[3] == P("-c[4][1]c[4][2] + 1", S.cring()));
    CHECK(d3.coordinates[0].is_zero());
    CHECK(d3.coordinates[1].is_zero());
    CHECK(d3.coordinates[2].is_zero());

    // transcript: f = sum q_j g_j + sum a_i t_i exactly
    std::mt19937_64 rng(37);
    const auto& G = S.generic_prebasis(Flavor::Hom);
    for (int rep = 0; rep < 10; ++rep) {
        Polynomial f(cx);
        for (int k = 0; k < 3; ++k) {
            Polynomial cpart = random_poly(S.cring(), 1, 2, rng).promoted(cx);
            auto level = terms_of_degree((rep + k) % 4, 2);
            Term xt = S.lift_xterm(level[k % level.size()]);
            f += cpart.multiplied_by_term(xt);
        }
        auto div = S.border_divide(f, Flavor::Hom);
        Polynomial rebuilt = S.recombine(div.coordinates);
        for (int j = 0; j < S.nu(); ++j) rebuilt += div.quotients[j] * G[j];
        CHECK(rebuilt == f);
    }
}
