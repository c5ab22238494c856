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

#include "test_util.hpp"

using namespace bbs;
using namespace bbs::testutil;

TEST_CASE("field elements: canonical forms and arithmetic") {
    Field qq = Field::rationals();
    FieldElem a = FieldElem::parse("4/6", qq);
    CHECK(a.to_string() == "2/3");
    CHECK((a + FieldElem::parse("1/3", qq)).is_one());
    CHECK((a - a).is_zero());
    CHECK((a * FieldElem::parse("3/2", qq)).is_one());
    CHECK(FieldElem::parse("-2/4", qq).to_string() == "-1/2");

    Field f7 = Field::prime(7);
    FieldElem b = FieldElem::from_int(10, f7);
    CHECK(b.to_string() == "3");
    CHECK((b * b.inverse()).is_one());
    CHECK((FieldElem::from_int(-1, f7)).to_string() == "6");
    CHECK_THROWS_AS(FieldElem::zero(f7).inverse(), MathError);
    CHECK_THROWS_AS(Field::prime(6), InputError);
    CHECK_THROWS_AS((void)(a + b), ContextError);
}

TEST_CASE("poly_arith examples") {
    Ring r = qq_ring({"x", "y"});
    CHECK(P("x+y", r) + P("x-y", r) == P("2x", r));
    CHECK(P("x+y", r) * P("x-y", r) == P("x^2-y^2", r));

    Ring r2({"x", "y"}, Field::prime(2));
    Polynomial s = P("x+y", r2);
    CHECK(s * s == P("x^2+y^2", r2));

    Ring other = qq_ring({"x", "z"});
    CHECK_THROWS_AS((void)(P("x", r) + P("x", other)), ContextError);
}

TEST_CASE("leading terms under the orderings") {
    Ring r = qq_ring({"x", "y"});
    auto lt = [&](const std::string& f, const TermOrdering& ord) {
        return Polynomial::parse(f, r).leading_term(ord).first.to_string(r);
    };
    CHECK(lt("x^2y + xy^2", TermOrdering::degrevlex(2)) == "x^2*y");
    CHECK(lt("x + y^2", TermOrdering::lex(2)) == "x");
    CHECK(lt("x + y^2", TermOrdering::deglex(2)) == "y^2");
    CHECK_THROWS_AS(Polynomial::zero(r).leading_term(TermOrdering::degrevlex(2)), MathError);
}

TEST_CASE("degree forms") {
    Ring r = qq_ring({"x", "y", "z"});
    CHECK(P("x^2 - y", r).degree_form() == P("x^2", r));
    CHECK(P("y^2 - xz", r).degree_form() == P("y^2 - xz", r));
    // the twisted-cubic generator
    Polynomial f = P("yz^2 - 4xz^2 - 14z^2 + 56yz + 49xz - 196z - 36y + 144x", r);
    CHECK(f.degree_form() == P("yz^2 - 4xz^2", r));
    CHECK_THROWS_AS(Polynomial::zero(r).degree_form(), MathError);
}

TEST_CASE("homogenization") {
    Ring r = qq_ring({"x", "y", "z"});
    int z = 2;
    CHECK(P("x^2 + y", r).homogenized(z) == P("x^2 + yz", r));
    CHECK(P("x^2 + xy", r).homogenized(z) == P("x^2 + xy", r));
    Ring rc = qq_ring({"c1", "c2", "z"});
    CHECK(P("c1*c2 - 1", rc).homogenized(2) == P("c1*c2 - z^2", rc));
    CHECK_THROWS_AS(P("xz", r).homogenized(z), InputError);
}

TEST_CASE("substitution is a ring homomorphism") {
    Ring r = qq_ring({"x", "y"});
    std::map<int, Polynomial> both{{0, P("1", r)}, {1, P("1", r)}};
    CHECK(P("xy", r).substituted(both) == P("1", r));
    std::map<int, Polynomial> shift{{0, P("x+y", r)}};
    CHECK(P("x^2", r).substituted(shift) == P("x^2 + 2xy + y^2", r));

    // composition law on random inputs
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        Polynomial f = random_poly(r, 3, 4, rng);
        std::map<int, Polynomial> sigma{{0, random_poly(r, 2, 2, rng)}, {1, random_poly(r, 2, 2, rng)}};
        std::map<int, Polynomial> tau{{0, random_poly(r, 1, 2, rng)}, {1, random_poly(r, 1, 2, rng)}};
        std::map<int, Polynomial> composed;
        for (auto& [v, g] : sigma) composed.emplace(v, g.substituted(tau));
        CHECK(f.substituted(sigma).substituted(tau) == f.substituted(composed));
    }
}

TEST_CASE("ring axioms on random triples") {
    for (Field k : {Field::rationals(), Field::prime(7)}) {
        Ring r({"x", "y", "z"}, k);
        std::mt19937_64 rng(k.is_rationals() ? 1 : 2);
        for (int i = 0; i < 200; ++i) {
            Polynomial f = random_poly(r, 3, 3, rng);
            Polynomial g = random_poly(r, 3, 3, rng);
            Polynomial h = random_poly(r, 3, 3, rng);
            CHECK((f + g) + h == f + (g + h));
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK(f * g == g * f);
        }
    }
}

TEST_CASE("multiplicativity of leading terms and degree forms") {
    Ring r = qq_ring({"x", "y", "z"});
    std::mt19937_64 rng(3);
    TermOrdering drl = TermOrdering::degrevlex(3);
    TermOrdering dl = TermOrdering::deglex(3);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = random_poly(r, 3, 4, rng);
        Polynomial g = random_poly(r, 3, 4, rng);
        if (f.is_zero() || g.is_zero()) continue;
        for (const auto& ord : {drl, dl}) {
            auto [tf, cf] = f.leading_term(ord);
            auto [tg, cg] = g.leading_term(ord);
            auto [tfg, cfg] = (f * g).leading_term(ord);
            CHECK(tfg == tf * tg);
            CHECK(cfg == cf * cg);
        }
        CHECK((f * g).degree_form() == f.degree_form() * g.degree_form());
    }
}

TEST_CASE("homogenize then set z=1 is the identity") {
    Ring r = qq_ring({"x", "y", "h"});
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = random_poly(qq_ring({"x", "y"}), 4, 5, rng);
        if (f.is_zero()) continue;
        Polynomial lifted = f.promoted(r).homogenized(2);
        CHECK(lifted.is_homogeneous());
        std::map<int, FieldElem> one{{2, FieldElem::one(r.field())}};
        CHECK(lifted.evaluated(one) == f.promoted(r));
    }
}

TEST_CASE("canonical text form round trips") {
    Ring r = qq_ring({"x", "y"});
    Polynomial f = P("x^2y - 4x^2 - xy + 4x", r);
    CHECK(f.to_string() == "x^2*y - 4*x^2 - x*y + 4*x");
    CHECK(Polynomial::parse(f.to_string(), r) == f);
    CHECK(Polynomial::parse("-x + 1/2", r).to_string() == "-x + 1/2");
    CHECK(Polynomial::zero(r).to_string() == "0");
}

TEST_CASE("elimination ordering separates blocks") {
    // every term containing a block variable exceeds every term without
    Ring r = qq_ring({"t", "x", "y"});
    TermOrdering elim = TermOrdering::elim(3, {0});
    Term t = parse_term("t", r);
    Term big = parse_term("x^5y^5", r);
    CHECK(elim.greater(t, big));
    CHECK(elim.greater(parse_term("tx", r), parse_term("x^9", r)));
    CHECK(elim.less(parse_term("y", r), parse_term("x", r)));
}
