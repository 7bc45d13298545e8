#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "affhecke/hecke.hpp"
#include "affhecke/laurent.hpp"
#include "affhecke/quotients.hpp"

namespace affhecke::cli {

/// Exit statuses of run().
enum Status : int {
  kOk = 0,
  kCheckFailed = 1,  // an oracle report or membership check came out negative
  kParseError = 2,   // malformed or rejected input
  kResourceLimit = 3,
  kInternal = 4,
};

/// Runs one command line (without the program name). Output goes to out only
/// when the command succeeds; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Element grammar: sums and products of T[s1 s0 r-], T(w[0,1,5]), X1^2,
/// Laurent scalars such as (v^-2-1) or 3*v^2, and parentheses. Throws ParseError.
HeckeElt parse_element(int n, const std::string& text);

/// {"<exponent>": coefficient}.
nlohmann::json to_json(const LaurentPoly& p);
/// [{"window": [...], "coeffs": {...}}, ...] sorted by window.
nlohmann::json to_json(const HeckeElt& h);
/// {"spec": [[...], ...], "terms": <Hecke schema>}.
nlohmann::json to_json(const QuotientElt& z);

/// Inverses of to_json; throw ParseError on malformed input.
LaurentPoly laurent_from_json(const nlohmann::json& j);
HeckeElt hecke_from_json(int n, const nlohmann::json& j);
QuotientElt quotient_from_json(int n, const nlohmann::json& j);

}  // namespace affhecke::cli
