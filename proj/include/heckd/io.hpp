#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "heckd/hecke.hpp"
#include "heckd/laurent.hpp"
#include "heckd/weyl.hpp"

namespace heckd {

// Insertion-ordered documents keep machine output byte-stable.
using Json = nlohmann::ordered_json;

// Machine form of a Laurent polynomial: [[k, c], ...] with ascending k and no
// zero c. Coefficients within int64 range are emitted as JSON integers,
// larger ones as decimal strings; the parser accepts both.
Json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const Json& j);

Json window_to_json(const AffinePerm& w);              // [w(1),...,w(D)]
Json perm_to_json(const AffinePerm& w);                // {"d":..,"w":[..]}
AffinePerm perm_from_json(const Json& j);

// Machine form of a Hecke element:
// {"d":..,"terms":[{"w":[..],"coeff":[[k,c],..]},..]} with terms in window
// order and coefficients in normal form.
Json hecke_to_json(const HeckeElt& x);
HeckeElt hecke_from_json(const Json& j);

// "7,2,3,4,5,0" -> window values.
std::vector<long long> parse_window_csv(const std::string& text);

// Element expressions: products of factors separated by `*`, where a factor
// is T0..Td, Trho, a window literal [w=a1,...,aD], or an integer-Laurent
// scalar monomial (e.g. 3, -1, v, v^-2, 3v^2). Whitespace-insensitive.
// Parse errors carry the byte position in the original string.
HeckeElt parse_element_expr(int d, const std::string& expr);

}  // namespace heckd
