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

#include "bbs/json_io.hpp"

namespace bbs {

ordered_json poly_to_json(const Polynomial& f) {
    ordered_json j;
    j["vars"] = f.ring().var_names();
    ordered_json terms = ordered_json::array();
    for (const auto& [t, c] : f.sorted_terms(TermOrdering::degrevlex(f.ring().nvars()))) {
        ordered_json entry;
        entry["c"] = c.to_string();
        entry["e"] = t.exponents();
        terms.push_back(std::move(entry));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial poly_from_json(const ordered_json& j, const Field& field) {
    Ring ring(j.at("vars").get<std::vector<std::string>>(), field);
    std::map<Term, FieldElem> acc;
    for (const auto& entry : j.at("terms")) {
        FieldElem c = FieldElem::parse(entry.at("c").get<std::string>(), field);
        Term t(entry.at("e").get<std::vector<int>>());
        auto [it, inserted] = acc.emplace(t, c);
        if (!inserted) it->second += c;
    }
    return Polynomial::from_map(std::move(acc), ring);
}

ordered_json ideal_to_json(const Ideal& I, bool include_gb, const Budget& budget) {
    ordered_json j;
    j["ring"]["vars"] = I.ring().var_names();
    j["ring"]["field"] = I.ring().field().to_string();
    ordered_json gens = ordered_json::array();
    for (const auto& g : I.generators()) gens.push_back(poly_to_json(g));
    j["gens"] = std::move(gens);
    if (include_gb) {
        TermOrdering ord = TermOrdering::degrevlex(I.ring().nvars());
        ordered_json gb = ordered_json::array();
        for (const auto& g : I.groebner(ord, budget)) gb.push_back(poly_to_json(g));
        j["gb"]["ordering"] = ord.name();
        j["gb"]["gens"] = std::move(gb);
    }
    return j;
}

Ideal ideal_from_json(const ordered_json& j) {
    Field field = Field::parse(j.at("ring").at("field").get<std::string>());
    Ring ring(j.at("ring").at("vars").get<std::vector<std::string>>(), field);
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("gens")) gens.push_back(poly_from_json(g, field));
    return Ideal(std::move(gens), ring);
}

ordered_json matrix_to_json(const PolyMatrix& M) {
    ordered_json j;
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    ordered_json entries = ordered_json::array();
    for (int r = 0; r < M.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c).to_string());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

ordered_json order_ideal_to_json(const OrderIdeal& O) {
    ordered_json j;
    j["vars"] = O.xvars();
    Ring ring(O.xvars(), Field::rationals());
    ordered_json terms = ordered_json::array();
    for (const Term& t : O.terms()) terms.push_back(t.to_string(ring));
    ordered_json border = ordered_json::array();
    for (const Term& b : O.border()) border.push_back(b.to_string(ring));
    j["terms"] = std::move(terms);
    j["border"] = std::move(border);
    j["mu"] = O.mu();
    j["nu"] = O.nu();
    return j;
}

OrderIdeal order_ideal_from_json(const ordered_json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    Ring ring(vars, Field::rationals());
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) terms.push_back(parse_term(t.get<std::string>(), ring));
    std::optional<std::vector<Term>> border;
    if (j.contains("border")) {
        std::vector<Term> b;
        for (const auto& t : j.at("border")) b.push_back(parse_term(t.get<std::string>(), ring));
        border = std::move(b);
    }
    return OrderIdeal::make_with_term_order(std::move(terms), std::move(vars), std::move(border));
}

ordered_json hf_to_json(const AffineHF& H) { return H.to_string(); }

ordered_json point_to_json(const SchemePoint& p) {
    ordered_json j;
    j["order_ideal"] = order_ideal_to_json(p.O);
    j["field"] = p.field.to_string();
    ordered_json grid = ordered_json::array();
    for (const auto& row : p.gamma) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        grid.push_back(std::move(r));
    }
    j["gamma"] = std::move(grid);
    return j;
}

SchemePoint point_from_json(const ordered_json& j) {
    OrderIdeal O = order_ideal_from_json(j.at("order_ideal"));
    Field field = Field::parse(j.at("field").get<std::string>());
    std::vector<std::vector<FieldElem>> gamma;
    for (const auto& row : j.at("gamma")) {
        std::vector<FieldElem> r;
        for (const auto& v : row) r.push_back(FieldElem::parse(v.get<std::string>(), field));
        gamma.push_back(std::move(r));
    }
    return SchemePoint{std::move(O), field, std::move(gamma)};
}

ordered_json triple_to_json(const LocusTriple& t) {
    ordered_json j;
    j["order_ideal"] = order_ideal_to_json(t.o_prime);
    j["delta"] = poly_to_json(t.delta);
    j["i_dfb"] = ideal_to_json(t.i_dfb);
    j["j"] = ideal_to_json(t.j);
    return j;
}

LocusTriple triple_from_json(const ordered_json& j, const Field& field) {
    LocusTriple t{order_ideal_from_json(j.at("order_ideal")), poly_from_json(j.at("delta"), field),
                  ideal_from_json(j.at("i_dfb")), ideal_from_json(j.at("j"))};
    return t;
}

std::vector<std::vector<FieldElem>> points_from_json(const ordered_json& j, const Field& field, int n) {
    std::vector<std::vector<FieldElem>> points;
    for (const auto& row : j) {
        std::vector<FieldElem> p;
        for (const auto& v : row) {
            if (v.is_number_integer())
                p.push_back(FieldElem::from_int(v.get<long>(), field));
            else
                p.push_back(FieldElem::parse(v.get<std::string>(), field));
        }
        if (static_cast<int>(p.size()) != n) throw InputError("point arity mismatch in JSON input");
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace bbs
