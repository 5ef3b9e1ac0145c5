#include "tsw/json_io.hpp"

#include "tsw/errors.hpp"

namespace tsw {

Json rationalToJson(const Rational& r) {
  return Json::array({toLongLong(numerator(r)), toLongLong(denominator(r))});
}

Rational rationalFromJson(const Json& j) {
  if (j.is_string()) return parseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_array() && j.size() == 2) {
    return Rational(BigInt(j[0].get<long long>()),
                    BigInt(j[1].get<long long>()));
  }
  throw ParseError("expected rational as [num,den], integer or \"p/q\"", 0);
}

Json vectorToJson(const FinVector& x) {
  Json coords = Json::array();
  for (const auto& [idx, val] : x.coords()) {
    coords.push_back(Json::array(
        {idx, toLongLong(numerator(val)), toLongLong(denominator(val))}));
  }
  return Json{{"coords", coords}};
}

FinVector vectorFromJson(const Json& j) {
  std::vector<std::pair<int, Rational>> coords;
  for (const auto& entry : j.at("coords")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw ParseError("vector coord must be [index, num, den]", 0);
    }
    coords.emplace_back(entry[0].get<int>(),
                        Rational(BigInt(entry[1].get<long long>()),
                                 BigInt(entry[2].get<long long>())));
  }
  return FinVector(std::move(coords));
}

Json spaceToJson(const SpaceSpec& s) {
  Json thetas = Json::array();
  Json families = Json::array();
  for (int n = 1; n <= s.nMax(); ++n) {
    thetas.push_back(rationalToJson(s.theta(n)));
    families.push_back(formatFamily(s.family(n)));
  }
  Json out{{"thetas", thetas}, {"families", families}, {"nmax", s.nMax()}};
  if (s.supIndexExponent()) {
    out["xi"] = formatOrdinal(*s.supIndexExponent());
  }
  return out;
}

SpaceSpec spaceFromJson(const Json& j) {
  std::vector<Rational> thetas;
  std::vector<FamilyPtr> families;
  for (const auto& t : j.at("thetas")) thetas.push_back(rationalFromJson(t));
  for (const auto& f : j.at("families")) {
    families.push_back(parseFamily(f.get<std::string>()));
  }
  if (j.contains("nmax") &&
      j.at("nmax").get<std::size_t>() != thetas.size()) {
    throw ParseError("nmax disagrees with the theta table", 0);
  }
  std::optional<Ordinal> xi;
  if (j.contains("xi")) xi = parseOrdinal(j.at("xi").get<std::string>());
  return SpaceSpec(std::move(thetas), std::move(families), std::move(xi));
}

namespace {

Json certNodeToJson(const CertNode& node) {
  Json children = Json::array();
  for (const CertNode& c : node.children) children.push_back(certNodeToJson(c));
  return Json{{"set", node.set.elems()},
              {"history", node.history},
              {"tag", rationalToJson(node.tag)},
              {"children", children}};
}

CertNode certNodeFromJson(const Json& j) {
  CertNode node;
  node.set = FinSet(j.at("set").get<std::vector<int>>());
  node.history = j.at("history").get<std::vector<int>>();
  node.tag = rationalFromJson(j.at("tag"));
  for (const auto& c : j.at("children")) {
    node.children.push_back(certNodeFromJson(c));
  }
  return node;
}

}  // namespace

Json certToJson(const NormCert& cert) {
  return Json{{"value", rationalToJson(cert.value)},
              {"tree", certNodeToJson(cert.root)}};
}

NormCert certFromJson(const Json& j) {
  return NormCert{rationalFromJson(j.at("value")),
                  certNodeFromJson(j.at("tree"))};
}

Json finsetToJson(const FinSet& s) { return Json(s.elems()); }

FinSet finsetFromJson(const Json& j) {
  return FinSet(j.get<std::vector<int>>());
}

Json scheduleToJson(const lab::ParamSchedule& s) {
  Json levels = Json::array();
  for (const auto& lev : s.levels) {
    Json l{{"p", lev.p},
           {"q", lev.q},
           {"eta", formatOrdinal(lev.eta)},
           {"ground", finsetToJson(lev.ground)},
           {"delta", rationalToJson(lev.delta)},
           {"budget", rationalToJson(lev.budget)}};
    if (lev.leaves) l["leaves"] = *lev.leaves;
    if (lev.topBlocks) l["top_blocks"] = *lev.topBlocks;
    levels.push_back(std::move(l));
  }
  Json betas = Json::array();
  for (const auto& b : s.betas) betas.push_back(formatOrdinal(b));
  return Json{{"epsilon", rationalToJson(s.epsilon)},
              {"betas", betas},
              {"levels", levels},
              {"reduced", s.reduced}};
}

lab::ParamSchedule scheduleFromJson(const Json& j) {
  lab::ParamSchedule s;
  s.epsilon = rationalFromJson(j.at("epsilon"));
  for (const auto& b : j.at("betas")) {
    s.betas.push_back(parseOrdinal(b.get<std::string>()));
  }
  for (const auto& l : j.at("levels")) {
    lab::ScheduleLevel lev;
    lev.p = l.at("p").get<int>();
    lev.q = l.at("q").get<int>();
    lev.eta = parseOrdinal(l.at("eta").get<std::string>());
    lev.ground = finsetFromJson(l.at("ground"));
    lev.delta = rationalFromJson(l.at("delta"));
    lev.budget = rationalFromJson(l.at("budget"));
    if (l.contains("leaves")) lev.leaves = l.at("leaves").get<int>();
    if (l.contains("top_blocks")) lev.topBlocks = l.at("top_blocks").get<int>();
    s.levels.push_back(std::move(lev));
  }
  s.reduced = j.value("reduced", true);
  return s;
}

Json zvectorToJson(const lab::ZVector& z) {
  Json levels = Json::array();
  for (const auto& y : z.levels) levels.push_back(vectorToJson(y));
  return Json{{"n", z.n},
              {"k", z.k},
              {"vector", vectorToJson(z.vec)},
              {"levels", levels}};
}

lab::ZVector zvectorFromJson(const Json& j) {
  lab::ZVector z;
  z.n = j.at("n").get<int>();
  z.k = j.at("k").get<int>();
  z.vec = vectorFromJson(j.at("vector"));
  for (const auto& y : j.at("levels")) z.levels.push_back(vectorFromJson(y));
  return z;
}

}  // namespace tsw
