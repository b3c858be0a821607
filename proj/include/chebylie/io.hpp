#pragma once

#include <string>

#include <json.hpp>

#include "chebylie/jacchar.hpp"

namespace chebylie {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const IntMatrix& m);
Json to_json(const ExpSum& a);
Json to_json(const YPolynomial& p);
Json to_json(const PolyMap& p);
Json to_json(const CharCombination& c);
Json to_json(const CharMatrix& m);
Json to_json(const PolyMatrix& m);
/// {"matrix": rows, "det": +-1, "length": l} for every element, in BFS order.
Json weyl_elements_json(const WeylGroup& grp);

Weight weight_from_json(const Json& j);
ExpSum exp_sum_from_json(std::size_t rank, const Json& j);
YPolynomial poly_from_json(std::size_t nvars, const Json& j);
PolyMap poly_map_from_json(const Json& j);
CharCombination char_combination_from_json(std::size_t rank, const Json& j);

/// "y1^2 - 2*y2 - 2*y1 - 6" in descending graded-lex order.
std::string format_polynomial(const YPolynomial& p);
/// "2*chi_{1,0} - 4*chi_{0,0}"; rank 1 uses chi_{a}.
std::string format_characters(const CharCombination& c);
std::string format_exp_sum(const ExpSum& a);
std::string format_matrix(const IntMatrix& m);

}  // namespace chebylie
