#pragma once

#include <json.hpp>

#include "mz/euler.hpp"
#include "mz/fourier.hpp"
#include "mz/monclass.hpp"
#include "mz/vanishing.hpp"
#include "mz/weight.hpp"

namespace mzio {

using Json = nlohmann::ordered_json;

// Scalars: integers stay JSON numbers when they fit, otherwise decimal strings; rationals are "a/b".
Json to_json(const mz::Int& x);
Json to_json(const mz::Rat& x);
mz::Rat rat_from(const Json& j);

// EPoly as a list of [p, q, coeff] triples, highest (p, q) first.
Json to_json(const mz::EPoly& f);
mz::EPoly epoly_from(const Json& j);

// MonClass as a list of [alpha_num, alpha_den, EPoly] entries.
Json to_json(const mz::MonClass& c);
mz::MonClass monclass_from(const Json& j);

// Cyclotomic values: a rational scalar, or {"p": p, "coords": [...]} on the powers of zeta.
Json to_json(const mz::Cyclo& z);
mz::Cyclo cyclo_from(const Json& j, int p);

// Series: {"bound": [...], "terms": [[exponents, coefficient], ...]}.
Json to_json(const mz::ESeries& f);
Json to_json(const mz::QSeries& f);
mz::ESeries eseries_from(const Json& j);

// {"kind": "elliptic", "q": 5, "a": 1}, {"kind": "projective", "n": 2}, ...
mz::Variety variety_from(const Json& j);
mz::Family family_from(const Json& j);
mz::ResolutionData resolution_from(const Json& j);
mz::CompactificationData compactification_from(const Json& j);
mz::SBFunction sbfunction_from(const Json& j, long q, int n);
mz::SBProduct sbproduct_from(const Json& j);
Json to_json(const mz::SBProduct& phi);

// Runs a parser and converts JSON access errors into ParseError.
template <class Fn>
auto parsing(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw mz::ParseError(std::string(what) + ": " + e.what());
    }
}

}  // namespace mzio
