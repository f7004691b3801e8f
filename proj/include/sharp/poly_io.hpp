#pragma once

// Interchange formats for TriPoly.
//
// JSON document:
//   {"degree": 3, "terms": [{"a": 1, "b": 1, "num": "3", "den": "1"}, ...]}
// terms sorted by the global monomial order, den > 0, gcd(num, den) = 1,
// num and den as decimal strings.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sharp/poly.hpp"

namespace sharp {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const TriPoly& p);
TriPoly poly_from_json(const nlohmann::json& doc);

/// Reads either a single JSON document or line-delimited documents.
std::vector<nlohmann::json> read_json_documents(std::istream& in);

/// "x^3 + 3*x*y + y^3", terms in the global monomial order, highest first.
std::string to_text(const TriPoly& p);

/// Typeset in descending powers of x, fractions as \frac{coeff monomial}{den}.
std::string to_latex(const TriPoly& p);

/// Parses sums of terms such as `\frac{15371\,{y}^{3}\,{x}^{13}}{25}`,
/// `19\,y\,{x}^{17}`, `x^{21}`, `21\,x^{19}\,y^1`. Line breaks (`\\`) and
/// whitespace are ignored. Throws ParseError.
TriPoly parse_latex(std::string_view src);

}  // namespace sharp
