#ifndef CSYM_IO_HPP
#define CSYM_IO_HPP

#include "csym/discover.hpp"
#include "csym/seed.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace csym {

using Json = nlohmann::ordered_json;
using ParamMap = std::map<std::string, Rat>;

// "k1=1,k2=0" or "alpha=3/2,beta=5"
ParamMap parse_params(const std::string& text);

// Numeric JSON strings may be decimal literals or parameter names.
Rat rat_from_json_string(const std::string& s, const ParamMap& params);

// { "n": int, "terms": [ { "e": [...], "num": "...", "den": "..." } ] },
// terms in lex order, integers as decimal strings.
Json poly_to_json(const LaurentPoly& F);
LaurentPoly poly_from_json(const Json& j, const ParamMap& params = {});

// { "s": int (1-based), "b": [...], "r": int, "Z": ["...", ...] }
Json seedlet_to_json(const Seedlet& w);
Seedlet seedlet_from_json(const Json& j, const ParamMap& params = {});

// { "sigma": [1-based image list], "seedlet": {...} }
Json map_to_json(const ClusterSymmetricMap& psi);
ClusterSymmetricMap map_from_json(const Json& j, const ParamMap& params = {});

// { "B": [[...]], "R": [...], "Z": [["...", ...], ...] }
Json seed_to_json(const Seed& seed);
Seed seed_from_json(const Json& j, const ParamMap& params = {});

Json pair_report_to_json(const PairReport& report);
std::string pair_report_to_text(const PairReport& report);

} // namespace csym

#endif
