#pragma once

#include <json.hpp>

#include "mtc/analytic.hpp"
#include "mtc/cyclofield.hpp"
#include "mtc/modgroup.hpp"
#include "mtc/qseries.hpp"
#include "mtc/specialforms.hpp"
#include "mtc/weilrep.hpp"

namespace mtc {

using Json = nlohmann::json;

/// "num/den", always with the slash.
std::string rational_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// Array of 64 "num/den" strings, one per power basis coefficient.
Json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const Json& j);

/// {"bound": "num/den" | null, "terms": [{"exp": "num/den", "coef": [...]}, ...]}
Json to_json(const QSeries& f);
QSeries qseries_from_json(const Json& j);

Json to_json(const IdentityReport& r);
Json to_json(const CompletionTerm& t);
Json to_json(const IntertwiningReport& r);
Json to_json(const VanishingReport& r);
/// 120×120 array of coefficient vectors (scale folded into every entry).
Json to_json(const WeilMatrix& m);
Json to_json(const CuspMatchReport& r);
Json to_json(const ResidualReport& r);
Json to_json(Complex z);

/// Two-space indent, keys sorted, trailing newline.
std::string dump_json(const Json& j);

}  // namespace mtc
