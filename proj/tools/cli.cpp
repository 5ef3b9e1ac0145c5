#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tsw/construction.hpp"
#include "tsw/errors.hpp"
#include "tsw/json_io.hpp"

namespace tsw::cli {

namespace {

// "2,3,9" and "1..8" forms, mixed: "1..4,9".
FinSet parseSetFlag(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoi(part));
    } else {
      int lo = std::stoi(part.substr(0, dots));
      int hi = std::stoi(part.substr(dots + 2));
      for (int x = lo; x <= hi; ++x) out.push_back(x);
    }
  }
  return FinSet(std::move(out));
}

std::vector<FinSet> parseBlocksFlag(const std::string& text) {
  std::vector<FinSet> blocks;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) blocks.push_back(parseSetFlag(part));
  return blocks;
}

Json loadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed JSON in '") + path + "': " +
                         e.what(),
                     0);
  }
  return j;
}

struct Emitter {
  std::string outPath;
  std::ostream& fallback;

  void emit(const Json& report) const {
    if (outPath.empty()) {
      fallback << report.dump(2) << "\n";
      return;
    }
    std::ofstream f(outPath);
    if (!f) throw ParseError("cannot write '" + outPath + "'", 0);
    f << report.dump(2) << "\n";
  }
};

int threadsDefault() {
  if (const char* env = std::getenv("TSW_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

Json ordinalJson(const Ordinal& a) { return formatOrdinal(a); }

Json regularityJson(const RegularityReport& r) {
  Json viols = Json::array();
  for (const auto& v : r.violations) {
    viols.push_back(Json{{"kind", v.kind},
                         {"member", finsetToJson(v.member)},
                         {"image", finsetToJson(v.image)}});
  }
  return Json{{"hereditary", r.hereditaryPass},
              {"spreading", r.spreadingPass},
              {"members", r.memberCount},
              {"violations", viols},
              {"pass", r.pass()}};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact workbench for mixed Tsirelson spaces"};
  app.require_subcommand(1);
  std::string outPath;
  app.add_option("--out", outPath, "write the JSON report to a file");
  int threads = threadsDefault();
  app.add_option("--threads", threads, "worker threads for bulk evaluations");

  // Common option storage.
  std::string exprText, setText, blocksText, groundText;
  std::string aText, bText;
  std::string spacePath, vecPath, certPath, schedPath, zPath, blocksPath,
      zvecsPath;
  std::string epsText = "1/2", deltaText = "1/4", etaText, massText,
              budgetText, epsGridText, betasText, ruleText, csvPath;
  int kArg = 0, searchCap = 100, pArg = 0, qArg = 0, mArg = 0, nArg = 1,
      depthArg = 1, mBound = 50, mMaxArg = 8, nMaxArg = 40, minPos = 0;
  std::size_t groundCap = 16, maxSupport = 24, bruteCap = 8;
  int patternBudget = 500;
  std::uint64_t seed = 1;
  int leaves = 0, topBlocks = 0;
  bool wantCert = false;

  // family ------------------------------------------------------------
  CLI::App* family = app.add_subcommand("family", "regular family algebra");
  family->require_subcommand(1);
  CLI::App* fContains = family->add_subcommand("contains", "membership");
  fContains->add_option("--expr", exprText)->required();
  fContains->add_option("--set", setText)->required();
  CLI::App* fAdm = family->add_subcommand("admissible", "block admissibility");
  fAdm->add_option("--expr", exprText)->required();
  fAdm->add_option("--blocks", blocksText, "blocks as 2,3;5,7")->required();
  CLI::App* fEnum = family->add_subcommand("enumerate", "members in a ground");
  fEnum->add_option("--expr", exprText)->required();
  fEnum->add_option("--ground", groundText)->required();
  fEnum->add_option("--ground-cap", groundCap);
  CLI::App* fIndex = family->add_subcommand("index", "symbolic iota");
  fIndex->add_option("--expr", exprText)->required();
  CLI::App* fDeriv = family->add_subcommand("deriv", "iterated derivative");
  fDeriv->add_option("--expr", exprText)->required();
  fDeriv->add_option("--set", setText);
  fDeriv->add_option("--k", kArg)->required();
  fDeriv->add_option("--search-cap", searchCap);
  CLI::App* fReg = family->add_subcommand("regular-check", "hereditary+spreading");
  fReg->add_option("--expr", exprText)->required();
  fReg->add_option("--ground", groundText)->required();
  fReg->add_option("--ground-cap", groundCap);

  // ordinal -----------------------------------------------------------
  CLI::App* ordinal = app.add_subcommand("ordinal", "CNF arithmetic");
  ordinal->require_subcommand(1);
  for (const char* name : {"add", "mul", "cmp"}) {
    CLI::App* sub = ordinal->add_subcommand(name);
    sub->add_option("--a", aText)->required();
    sub->add_option("--b", bText)->required();
  }
  ordinal->add_subcommand("lexp")->add_option("--a", aText)->required();

  // norm ----------------------------------------------------------------
  CLI::App* normCmd = app.add_subcommand("norm", "exact norm evaluation");
  normCmd->require_subcommand(1);
  CLI::App* nEval = normCmd->add_subcommand("eval", "norm with certificate");
  nEval->add_option("--space", spacePath)->required();
  nEval->add_option("--vec", vecPath)->required();
  nEval->add_flag("--cert", wantCert, "include the certifying tree");
  nEval->add_option("--max-support", maxSupport);
  CLI::App* nBrute = normCmd->add_subcommand("brute", "literal recursion");
  nBrute->add_option("--space", spacePath)->required();
  nBrute->add_option("--vec", vecPath)->required();
  nBrute->add_option("--max-support", bruteCap);
  CLI::App* nRestr = normCmd->add_subcommand("restricted", "(p,q)-restricted");
  nRestr->add_option("--space", spacePath)->required();
  nRestr->add_option("--vec", vecPath)->required();
  nRestr->add_option("--p", pArg)->required();
  nRestr->add_option("--q", qArg)->required();
  nRestr->add_option("--eps", epsText)->required();
  nRestr->add_option("--max-support", maxSupport);
  CLI::App* nValidate = normCmd->add_subcommand("validate", "check a certificate");
  nValidate->add_option("--space", spacePath)->required();
  nValidate->add_option("--cert", certPath)->required();
  nValidate->add_option("--vec", vecPath);

  // lab -----------------------------------------------------------------
  CLI::App* lab = app.add_subcommand("lab", "quantitative machinery");
  lab->require_subcommand(1);
  CLI::App* lGamma = lab->add_subcommand("gamma");
  lGamma->add_option("--space", spacePath)->required();
  lGamma->add_option("--eps", epsText)->required();
  lGamma->add_option("--m", mArg)->required();
  CLI::App* lDagger = lab->add_subcommand("dagger");
  lDagger->add_option("--space", spacePath)->required();
  lDagger->add_option("--eps-grid", epsGridText)->required();
  lDagger->add_option("--betas", betasText)->required();
  lDagger->add_option("--mbound", mBound);
  CLI::App* lHist = lab->add_subcommand("histories");
  lHist->add_option("--space", spacePath)->required();
  std::string kindText = "N";
  lHist->add_option("--kind", kindText, "N or K")->required();
  lHist->add_option("--eps", epsText);
  lHist->add_option("--r", mArg);
  lHist->add_option("--delta", deltaText);
  lHist->add_option("--p", pArg);
  lHist->add_option("--eta", etaText);
  CLI::App* lSelect = lab->add_subcommand("select");
  lSelect->add_option("--space", spacePath)->required();
  lSelect->add_option("--m0", groundText)->required();
  lSelect->add_option("--eps", epsText)->required();
  lSelect->add_option("--depth", depthArg);
  lSelect->add_option("--ground-cap", groundCap);
  CLI::App* lAvg = lab->add_subcommand("average");
  lAvg->add_option("--eta", etaText)->required();
  lAvg->add_option("--ground", groundText)->required();
  lAvg->add_option("--mass", massText)->required();
  lAvg->add_option("--budget", budgetText)->required();
  lAvg->add_option("--leaves", leaves);
  lAvg->add_option("--top-blocks", topBlocks);
  CLI::App* lZvec = lab->add_subcommand("zvec");
  lZvec->add_option("--space", spacePath)->required();
  lZvec->add_option("--schedule", schedPath)->required();
  lZvec->add_option("--n", nArg);
  lZvec->add_option("--k", kArg);
  lZvec->add_option("--min-pos", minPos);
  CLI::App* lDecomp = lab->add_subcommand("decompose");
  lDecomp->add_option("--space", spacePath)->required();
  lDecomp->add_option("--schedule", schedPath)->required();
  lDecomp->add_option("--z", zPath)->required();
  CLI::App* lSpread = lab->add_subcommand("spreading");
  lSpread->add_option("--space", spacePath)->required();
  lSpread->add_option("--blocks", blocksPath)->required();
  lSpread->add_option("--family", exprText)->required();
  lSpread->add_option("--pattern-budget", patternBudget);
  lSpread->add_option("--seed", seed);
  lSpread->add_option("--zvecs", zvecsPath);
  lSpread->add_option("--schedule", schedPath);
  lSpread->add_option("--max-support", maxSupport);
  CLI::App* lBounds = lab->add_subcommand("bounds");
  lBounds->add_option("--space", spacePath)->required();
  lBounds->add_option("--schedule", schedPath)->required();
  lBounds->add_option("--z", zPath)->required();
  lBounds->add_option("--m", mArg);
  lBounds->add_option("--max-support", maxSupport);
  CLI::App* lSubmult = lab->add_subcommand("submult");
  lSubmult->add_option("--rule", ruleText, "harmonic | geo:p/q")->required();
  lSubmult->add_option("--mmax", mMaxArg);
  lSubmult->add_option("--nmax", nMaxArg);
  lSubmult->add_option("--csv", csvPath);

  std::vector<const char*> argv;
  argv.push_back("tsw");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Emitter emitter{outPath, out};
  Json config{{"threads", threads}};
  auto finish = [&](Json result) {
    emitter.emit(Json{{"config", config}, {"result", std::move(result)}});
    return 0;
  };
  auto finishFailed = [&](Json result) {
    emitter.emit(Json{{"config", config}, {"result", std::move(result)}});
    return 1;
  };

  try {
    if (fContains->parsed()) {
      config["expr"] = exprText;
      config["set"] = setText;
      bool r = contains(parseFamily(exprText), parseSetFlag(setText));
      return finish(Json{{"result", r}});
    }
    if (fAdm->parsed()) {
      config["expr"] = exprText;
      config["blocks"] = blocksText;
      bool r = isAdmissible(parseFamily(exprText), parseBlocksFlag(blocksText));
      return finish(Json{{"result", r}});
    }
    if (fEnum->parsed()) {
      config["expr"] = exprText;
      config["ground"] = groundText;
      config["ground_cap"] = groundCap;
      Json sets = Json::array();
      for (const auto& g :
           enumerate(parseFamily(exprText), parseSetFlag(groundText), groundCap)) {
        sets.push_back(finsetToJson(g));
      }
      return finish(Json{{"members", sets}});
    }
    if (fIndex->parsed()) {
      config["expr"] = exprText;
      auto r = indexOf(parseFamily(exprText));
      return finish(Json{{"ordinal", ordinalJson(r.value)}, {"exact", r.exact}});
    }
    if (fDeriv->parsed()) {
      config["expr"] = exprText;
      config["set"] = setText;
      config["k"] = kArg;
      config["search_cap"] = searchCap;
      auto r = iteratedDerivContains(parseFamily(exprText), kArg,
                                     parseSetFlag(setText), searchCap);
      return finish(Json{{"member", r.member}, {"certified", r.certified}});
    }
    if (fReg->parsed()) {
      config["expr"] = exprText;
      config["ground"] = groundText;
      auto r = checkRegularOnGround(parseFamily(exprText),
                                    parseSetFlag(groundText), groundCap);
      Json report = regularityJson(r);
      return r.pass() ? finish(report) : finishFailed(report);
    }
    if (ordinal->parsed()) {
      CLI::App* sub = ordinal->get_subcommands().front();
      config["a"] = aText;
      Ordinal a = parseOrdinal(aText);
      if (sub->get_name() == "lexp") {
        return finish(Json{{"ordinal", ordinalJson(leadingExponent(a))}});
      }
      config["b"] = bText;
      Ordinal b = parseOrdinal(bText);
      if (sub->get_name() == "add") {
        return finish(Json{{"ordinal", ordinalJson(a + b)}});
      }
      if (sub->get_name() == "mul") {
        return finish(Json{{"ordinal", ordinalJson(a * b)}});
      }
      int c = ordCompare(a, b);
      return finish(Json{{"order", c < 0 ? "less" : (c > 0 ? "greater" : "equal")}});
    }
    if (nEval->parsed()) {
      config["space"] = spacePath;
      config["vec"] = vecPath;
      config["max_support"] = maxSupport;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      FinVector x = vectorFromJson(loadJson(vecPath));
      auto r = norm(x, space, NormOptions{maxSupport});
      Json result{{"value", rationalToJson(r.value)}};
      if (wantCert) result["certificate"] = certToJson(r.cert);
      return finish(result);
    }
    if (nBrute->parsed()) {
      config["space"] = spacePath;
      config["vec"] = vecPath;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      FinVector x = vectorFromJson(loadJson(vecPath));
      return finish(
          Json{{"value", rationalToJson(bruteForceNorm(x, space, bruteCap))}});
    }
    if (nRestr->parsed()) {
      config["space"] = spacePath;
      config["vec"] = vecPath;
      config["p"] = pArg;
      config["q"] = qArg;
      config["eps"] = epsText;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      FinVector x = vectorFromJson(loadJson(vecPath));
      Rational v = restrictedNorm(x, space, std::make_pair(pArg, qArg),
                                  parseRational(epsText),
                                  NormOptions{maxSupport});
      return finish(Json{{"value", rationalToJson(v)}});
    }
    if (nValidate->parsed()) {
      config["space"] = spacePath;
      config["cert"] = certPath;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      NormCert cert = certFromJson(loadJson(certPath));
      auto v = validateTree(cert.root, space);
      Json result{{"valid", v.ok}};
      if (!v.ok) result["reason"] = v.reason;
      if (!vecPath.empty()) {
        FinVector x = vectorFromJson(loadJson(vecPath));
        Rational value = evaluateTree(cert.root, x);
        result["evaluated"] = rationalToJson(value);
        result["matches_value"] = (value == cert.value);
      }
      return v.ok ? finish(result) : finishFailed(result);
    }
    if (lGamma->parsed()) {
      config["space"] = spacePath;
      config["eps"] = epsText;
      config["m"] = mArg;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      return finish(Json{{"gamma", ordinalJson(lab::gamma(
                             space, parseRational(epsText), mArg))}});
    }
    if (lDagger->parsed()) {
      config["space"] = spacePath;
      config["eps_grid"] = epsGridText;
      config["betas"] = betasText;
      config["mbound"] = mBound;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      std::vector<Rational> grid;
      std::stringstream gs(epsGridText);
      std::string tok;
      while (std::getline(gs, tok, ',')) grid.push_back(parseRational(tok));
      std::vector<Ordinal> betas;
      std::stringstream bs(betasText);
      while (std::getline(bs, tok, ',')) betas.push_back(parseOrdinal(tok));
      auto report = lab::daggerProbe(space, grid, betas, mBound);
      Json cells = Json::array();
      for (const auto& c : report.cells) {
        Json cell{{"eps", formatRational(c.eps)},
                  {"beta", ordinalJson(c.beta)}};
        if (c.witness) {
          cell["witness_m"] = *c.witness;
          cell["gamma_at_witness"] = ordinalJson(c.gammaAtWitness);
        } else {
          cell["witness_m"] = nullptr;
        }
        cells.push_back(std::move(cell));
      }
      return finish(Json{{"label", report.label},
                         {"mbound", report.mBound},
                         {"cells", cells}});
    }
    if (lHist->parsed()) {
      config["space"] = spacePath;
      config["kind"] = kindText;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      lab::HistoryQuery query =
          kindText == "K"
              ? lab::HistoryQuery::forK(parseRational(deltaText), pArg,
                                        parseOrdinal(etaText))
              : lab::HistoryQuery::forN(parseRational(epsText), mArg);
      Json tuples = Json::array();
      for (const auto& h : lab::enumerateHistories(space, query)) {
        tuples.push_back(h.indices);
      }
      return finish(Json{{"count", tuples.size()}, {"histories", tuples}});
    }
    if (lSelect->parsed()) {
      config["space"] = spacePath;
      config["m0"] = groundText;
      config["eps"] = epsText;
      config["depth"] = depthArg;
      config["ground_cap"] = groundCap;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      auto schedule =
          lab::selectParams(space, parseSetFlag(groundText),
                            parseRational(epsText), depthArg, groundCap);
      return finish(scheduleToJson(schedule));
    }
    if (lAvg->parsed()) {
      config["eta"] = etaText;
      config["ground"] = groundText;
      config["mass"] = massText;
      config["budget"] = budgetText;
      lab::AverageShape shape;
      if (leaves > 0) shape.leaves = leaves;
      if (topBlocks > 0) shape.topBlocks = topBlocks;
      FinVector x = lab::repeatedAverage(
          parseOrdinal(etaText), parseSetFlag(groundText),
          parseRational(massText), parseRational(budgetText), shape);
      return finish(vectorToJson(x));
    }
    if (lZvec->parsed()) {
      config["space"] = spacePath;
      config["schedule"] = schedPath;
      config["n"] = nArg;
      config["k"] = kArg;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      auto schedule = scheduleFromJson(loadJson(schedPath));
      auto z = lab::buildZ(space, schedule, nArg, kArg, minPos);
      return finish(zvectorToJson(z));
    }
    if (lDecomp->parsed()) {
      config["space"] = spacePath;
      config["schedule"] = schedPath;
      config["z"] = zPath;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      auto schedule = scheduleFromJson(loadJson(schedPath));
      auto z = zvectorFromJson(loadJson(zPath));
      auto levels = lab::decomposeZ(space, schedule, z);
      Json ys = Json::array();
      for (const auto& y : levels) ys.push_back(vectorToJson(y));
      return finish(Json{{"levels", ys}});
    }
    if (lSpread->parsed()) {
      config["space"] = spacePath;
      config["blocks"] = blocksPath;
      config["family"] = exprText;
      config["pattern_budget"] = patternBudget;
      config["seed"] = seed;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      std::vector<FinVector> blocks;
      Json blocksJson = loadJson(blocksPath);
      for (const auto& b : blocksJson.at("blocks")) {
        blocks.push_back(vectorFromJson(b));
      }
      lab::SpreadingOptions opts;
      opts.patternBudget = patternBudget;
      opts.seed = seed;
      opts.threads = threads;
      opts.norm.maxSupport = maxSupport;
      std::vector<lab::ZVector> zs;
      lab::ParamSchedule schedule;
      if (!zvecsPath.empty() && !schedPath.empty()) {
        Json zsJson = loadJson(zvecsPath);
        for (const auto& z : zsJson.at("zvectors")) {
          zs.push_back(zvectorFromJson(z));
        }
        schedule = scheduleFromJson(loadJson(schedPath));
        opts.zBlocks = &zs;
        opts.schedule = &schedule;
      }
      auto r = lab::spreadingConstant(blocks, parseFamily(exprText), space, opts);
      Json pattern = Json::array();
      for (const auto& a : r.argminPattern) pattern.push_back(formatRational(a));
      return finish(Json{{"empirical_min", rationalToJson(r.empiricalMin)},
                         {"certified_lower", rationalToJson(r.certifiedLower)},
                         {"certificate", r.certificate},
                         {"argmin_set", finsetToJson(r.argminSet)},
                         {"argmin_pattern", pattern}});
    }
    if (lBounds->parsed()) {
      config["space"] = spacePath;
      config["schedule"] = schedPath;
      config["z"] = zPath;
      config["m"] = mArg;
      SpaceSpec space = spaceFromJson(loadJson(spacePath));
      auto schedule = scheduleFromJson(loadJson(schedPath));
      auto z = zvectorFromJson(loadJson(zPath));
      auto r = lab::verifyBounds(space, schedule, z, mArg,
                                 NormOptions{maxSupport});
      Json result{{"n", r.n},
                  {"k", r.k},
                  {"m", r.m},
                  {"value", rationalToJson(r.value)},
                  {"bound_fine", rationalToJson(r.boundFine)},
                  {"bound_coarse", rationalToJson(r.boundCoarse)},
                  {"margin_fine", rationalToJson(r.marginFine)},
                  {"margin_coarse", rationalToJson(r.marginCoarse)},
                  {"fine_holds", r.fineHolds},
                  {"coarse_holds", r.coarseHolds}};
      return r.coarseHolds ? finish(result) : finishFailed(result);
    }
    if (lSubmult->parsed()) {
      config["rule"] = ruleText;
      config["mmax"] = mMaxArg;
      config["nmax"] = nMaxArg;
      lab::ThetaRule rule;
      if (ruleText == "harmonic") {
        rule = {"harmonic", [](int n) { return Rational(1, n + 1); }};
      } else if (ruleText.rfind("geo:", 0) == 0) {
        Rational base = parseRational(ruleText.substr(4));
        rule = {ruleText, [base](int n) {
                  Rational r = 1;
                  for (int i = 0; i < n; ++i) r *= base;
                  return r;
                }};
      } else {
        throw std::invalid_argument("unknown theta rule '" + ruleText + "'");
      }
      auto r = lab::submultiplicativeProbe(rule, mMaxArg, nMaxArg);
      if (!csvPath.empty()) {
        std::ofstream csv(csvPath);
        csv << "m,edge_ratio,tail_max\n";
        for (const auto& c : r.ratios) {
          csv << c.m << "," << formatRational(c.edgeRatio) << ","
              << formatRational(c.tailMax) << "\n";
        }
      }
      Json ratios = Json::array();
      for (const auto& c : r.ratios) {
        ratios.push_back(Json{{"m", c.m},
                              {"edge_ratio", rationalToJson(c.edgeRatio)},
                              {"tail_max", rationalToJson(c.tailMax)}});
      }
      Json viols = Json::array();
      for (const auto& [m, n] : r.violations) {
        viols.push_back(Json::array({m, n}));
      }
      return finish(Json{{"label", r.label},
                         {"submultiplicative", r.submultiplicative},
                         {"violations", viols},
                         {"ratios", ratios}});
    }
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tsw::cli
