#pragma once

#include <json.hpp>

#include "tsw/construction.hpp"
#include "tsw/lab.hpp"
#include "tsw/norm.hpp"

namespace tsw {

using Json = nlohmann::json;

// Rationals travel as [numerator, denominator] pairs (or bare integers and
// "p/q" strings on input).
Json rationalToJson(const Rational& r);
Rational rationalFromJson(const Json& j);

// {"coords": [[index, num, den], ...]}
Json vectorToJson(const FinVector& x);
FinVector vectorFromJson(const Json& j);

// {"thetas": [[num,den],...], "families": ["S(1)",...], "nmax": N,
//  "xi": "ordinal"?}
Json spaceToJson(const SpaceSpec& s);
SpaceSpec spaceFromJson(const Json& j);

Json certToJson(const NormCert& cert);
NormCert certFromJson(const Json& j);

Json scheduleToJson(const lab::ParamSchedule& s);
lab::ParamSchedule scheduleFromJson(const Json& j);

Json zvectorToJson(const lab::ZVector& z);
lab::ZVector zvectorFromJson(const Json& j);

Json finsetToJson(const FinSet& s);
FinSet finsetFromJson(const Json& j);

}  // namespace tsw
