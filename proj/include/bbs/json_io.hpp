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

#ifndef BBS_JSON_IO_HPP
#define BBS_JSON_IO_HPP

#include <json.hpp>

#include "bbs/combine.hpp"
#include "bbs/points.hpp"

namespace bbs {

using ordered_json = nlohmann::ordered_json;

/// {"vars": [...], "terms": [{"c": "-2", "e": [0,1,...]}, ...]}
/// Terms serialized in descending DegRevLex; coefficients as exact strings.
ordered_json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const ordered_json& j, const Field& field);

/// {"ring": {"vars": [...], "field": "QQ"}, "gens": [...],
///  "gb": {"ordering": "DegRevLex", "gens": [...]}} (gb optional)
ordered_json ideal_to_json(const Ideal& I, bool include_gb = false,
                           const Budget& budget = Budget::unlimited());
Ideal ideal_from_json(const ordered_json& j);

ordered_json matrix_to_json(const PolyMatrix& M);

ordered_json order_ideal_to_json(const OrderIdeal& O);
OrderIdeal order_ideal_from_json(const ordered_json& j);

ordered_json hf_to_json(const AffineHF& H);

ordered_json point_to_json(const SchemePoint& p);
SchemePoint point_from_json(const ordered_json& j);

ordered_json triple_to_json(const LocusTriple& t);
LocusTriple triple_from_json(const ordered_json& j, const Field& field);

/// Coordinate lists: [["1/2", "3"], ...] (rationals as strings, F_p values
/// as integers or strings).
std::vector<std::vector<FieldElem>> points_from_json(const ordered_json& j, const Field& field, int n);

}  // namespace bbs

#endif
