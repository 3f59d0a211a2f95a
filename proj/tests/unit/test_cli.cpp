#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bessel_geom/cli.hpp"
#include "../../src/cli/commands.hpp"

using Json = nlohmann::json;
using bessel_geom::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST(CliEval, BesselJ0) {
  const Outcome r = call({"eval", "--p", "0", "--b", "1", "--c", "1", "--z", "1"});
  ASSERT_EQ(r.code, bessel_geom::cli::kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_EQ(j["command"], "eval");
  EXPECT_NEAR(j["result"]["u"]["re"].get<double>(), 0.2238907791, 1e-10);
  EXPECT_LT(j["result"]["u"]["tail_bound"].get<double>(), 1e-12);
}

TEST(CliEval, Origin) {
  const Outcome r = call({"eval", "--p", "1", "--b", "1", "--c", "-1", "--z", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["u"]["re"].get<double>(), 0.0);
  EXPECT_EQ(r.json()["result"]["u"]["im"].get<double>(), 0.0);
}

TEST(CliEval, WithW) {
  const Outcome r =
      call({"eval", "--p", "0", "--b", "1", "--c", "1", "--z", "2", "--w"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.json()["result"]["w"]["value"].get<double>(), 0.2238907791412357,
              1e-13);
}

TEST(CliEval, Errors) {
  EXPECT_EQ(call({"eval", "--p", "0", "--b", "1", "--c", "1", "--z", "abc"}).code,
            bessel_geom::cli::kExitUsage);
  EXPECT_EQ(call({"eval", "--p", "-1", "--b", "1", "--c", "1", "--z", "1"}).code, 2);
  EXPECT_EQ(call({"eval", "--p", "0", "--b", "1", "--c", "1", "--z", "5"}).code, 2);
  const Outcome bad = call({"eval", "--p", "0", "--b", "1", "--c", "1", "--z", "-1", "--w"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(CliCheck, AllLayersHold) {
  const Outcome r = call({"check", "--p", "10", "--b", "1", "--c", "-0.1", "--alpha",
                          "0", "--beta", "1", "--class", "star", "--mode", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = r.json()["result"];
  EXPECT_TRUE(res["theorem"]["holds"].get<bool>());
  EXPECT_EQ(res["lemma"]["verdict"], "holds");
  EXPECT_NEAR(res["lemma"]["sum"].get<double>(), 0.03659168782884120448, 1e-12);
  EXPECT_EQ(res["disk"]["violations"], 0);
  EXPECT_EQ(res["chain"]["status"], "CONSISTENT");
}

TEST(CliCheck, ModifiedBesselFails) {
  const Outcome r = call({"check", "--p", "1", "--b", "1", "--c", "-1", "--alpha", "0",
                          "--beta", "1", "--class", "star", "--mode", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = r.json()["result"];
  EXPECT_FALSE(res["theorem"]["holds"].get<bool>());
  EXPECT_EQ(res["lemma"]["verdict"], "fails");
  EXPECT_NEAR(res["lemma"]["sum"].get<double>(), 2.559170604672134534874, 1e-12);
  EXPECT_GT(res["disk"]["max_quotient"].get<double>(), 0.0);
  EXPECT_EQ(res["chain"]["status"], "CONSISTENT");
}

TEST(CliCheck, SingleLayers) {
  for (const std::string mode : {"lemma", "theorem", "disk"}) {
    const Outcome r = call({"check", "--p", "2", "--b", "1", "--c", "-0.5", "--class",
                            "convex", "--mode", mode, "--angles", "36"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json res = r.json()["result"];
    EXPECT_TRUE(res.contains(mode)) << mode;
    EXPECT_EQ(res.size(), 2u) << mode;  // the layer plus the chain flag
  }
}

TEST(CliCheck, Errors) {
  EXPECT_EQ(call({"check", "--p", "1", "--b", "1", "--c", "-1", "--alpha", "1"}).code,
            2);
  EXPECT_EQ(call({"check", "--p", "1", "--b", "1", "--c", "-1", "--beta", "0"}).code, 2);
  EXPECT_EQ(call({"check", "--p", "1", "--b", "1", "--c", "-1", "--class", "round"}).code,
            2);
  EXPECT_EQ(call({"check", "--p", "-1", "--b", "1", "--c", "-1"}).code, 2);
}

TEST(CliThreshold, Figures) {
  const Outcome one = call({"threshold", "--figure", "1"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_NEAR(one.json()["result"]["threshold"]["x0"].get<double>(), -1.5314, 1e-3);
  EXPECT_TRUE(one.json()["result"]["positivity"]["nonnegative_on_grid"].get<bool>());

  const Outcome two = call({"threshold", "--figure", "2"});
  ASSERT_EQ(two.code, 0) << two.err;
  const Json res = two.json()["result"];
  EXPECT_EQ(res["status"], "no-bracket");
  EXPECT_TRUE(res["threshold"].is_null());
  EXPECT_TRUE(res["positivity"]["nonnegative_on_grid"].get<bool>());
  EXPECT_EQ(res["positivity"]["high"].get<double>(), 50.0);

  const Outcome three = call({"threshold", "--figure", "3"});
  EXPECT_NEAR(three.json()["result"]["threshold"]["x0"].get<double>(), -2.0314, 1e-3);

  EXPECT_EQ(call({"threshold", "--figure", "7"}).code, 2);
  EXPECT_EQ(call({"threshold", "--figure", "1", "--tol", "0"}).code, 2);
}

TEST(CliFigure, Csv) {
  const Outcome r = call({"figure", "--figure", "4", "--low", "-1.9", "--high", "5",
                          "--step", "0.05", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = split_lines(r.out);
  ASSERT_GT(lines.size(), 100u);
  EXPECT_EQ(lines[0], "x,g");
  bool found = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto comma = lines[i].find(',');
    const double x = std::stod(lines[i].substr(0, comma));
    const double g = std::stod(lines[i].substr(comma + 1));
    if (std::abs(x + 1.0) < 1e-9) {
      found = true;
      EXPECT_NEAR(g, 3.7183, 1e-4);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(CliFigure, Errors) {
  EXPECT_EQ(call({"figure", "--figure", "1", "--low", "2", "--high", "2"}).code, 2);
  EXPECT_EQ(call({"figure", "--figure", "1", "--low", "3", "--high", "2"}).code, 2);
  EXPECT_EQ(call({"figure", "--figure", "1", "--step", "0"}).code, 2);
  EXPECT_EQ(call({"figure", "--figure", "1", "--step", "-0.1"}).code, 2);
}

TEST(CliScan, SinglePointMatchesCheck) {
  const Outcome scan =
      call({"scan", "--b", "1", "--c", "-1", "--p-range", "1", "1", "--steps", "1"});
  const Outcome check = call({"check", "--p", "1", "--b", "1", "--c", "-1"});
  ASSERT_EQ(scan.code, 0) << scan.err;
  ASSERT_EQ(check.code, 0) << check.err;
  const Json rows = scan.json()["result"]["rows"];
  ASSERT_EQ(rows.size(), 1u);
  const Json res = check.json()["result"];
  EXPECT_EQ(rows[0]["lemma"], res["lemma"]["verdict"]);
  EXPECT_EQ(rows[0]["theorem"], res["theorem"]["holds"].get<bool>() ? "holds" : "fails");
  EXPECT_EQ(rows[0]["disk_max"], res["disk"]["max_quotient"]);
}

TEST(CliScan, LemmaHoldsOnAnUpSetInOrder) {
  const Outcome r = call({"scan", "--b", "1", "--c", "-1", "--p-range", "-0.9", "20",
                          "--p-steps", "60", "--alpha-steps", "1", "--beta-steps", "1",
                          "--angles", "16", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = split_lines(r.out);
  ASSERT_EQ(lines.size(), 61u);
  EXPECT_EQ(lines[0], "p,alpha,beta,theorem,lemma,disk_max");
  bool seen_hold = false;
  double previous_p = -1e9;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double p = std::stod(lines[i].substr(0, lines[i].find(',')));
    EXPECT_GT(p, previous_p);
    previous_p = p;
    std::vector<std::string> cells;
    std::istringstream in(lines[i]);
    for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
    const bool lemma_holds = cells.at(4) == "holds";
    if (seen_hold) EXPECT_TRUE(lemma_holds) << lines[i];
    seen_hold = seen_hold || lemma_holds;
  }
  EXPECT_TRUE(seen_hold);
}

TEST(CliScan, ParallelOutputIsIdentical) {
  const std::vector<std::string> base{"scan", "--b", "1", "--c", "-0.8", "--p-range",
                                      "-0.5", "6", "--alpha-range", "0", "0.6",
                                      "--beta-range", "0.3", "1", "--steps", "4",
                                      "--angles", "24", "--class", "convex"};
  auto serial = base;
  serial.insert(serial.end(), {"--parallel", "1"});
  auto parallel = base;
  parallel.insert(parallel.end(), {"--parallel", "4"});
  const Outcome a = call(serial);
  const Outcome b = call(parallel);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.json()["result"], b.json()["result"]);
  EXPECT_EQ(a.json()["result"]["rows"].size(), 64u);
  EXPECT_EQ(call(parallel).out, b.out);
}

TEST(CliScan, ThreadResolution) {
  using bessel_geom::cli::resolve_threads;
  ::setenv("BESSEL_GEOM_THREADS", "3", 1);
  EXPECT_EQ(resolve_threads(std::nullopt), 3u);
  EXPECT_EQ(resolve_threads(5u), 5u);
  ::unsetenv("BESSEL_GEOM_THREADS");
  EXPECT_EQ(resolve_threads(std::nullopt), 0u);
}

TEST(CliScan, PoleRowsAreMarked) {
  const Outcome r = call({"scan", "--b", "1", "--c", "-1", "--p-range", "-2", "1",
                          "--steps", "4", "--angles", "8", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = split_lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[1], "-2,0,1,n/a,n/a,nan");
  EXPECT_EQ(lines[2], "-1,0,1,n/a,n/a,nan");
  EXPECT_NE(lines[4].find(",fails,fails,"), std::string::npos);
}

TEST(CliScan, Errors) {
  EXPECT_EQ(call({"scan", "--b", "1", "--c", "-1", "--p-range", "2", "1"}).code, 2);
  EXPECT_EQ(call({"scan", "--b", "1", "--c", "-1", "--p-range", "1", "2", "--steps", "0"})
                .code,
            2);
  EXPECT_EQ(call({"scan", "--b", "1", "--c", "-1", "--p-range", "1", "2",
                  "--alpha-range", "0", "1"})
                .code,
            2);
}

TEST(CliAudit, SummaryFlagsOnlyTheSignSlip) {
  const Outcome r = call({"audit"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const Json& s : r.json()["result"]["summary"]) {
    const std::string id = s["criterion"];
    if (id == "cor2" || id == "eq2.9") {
      EXPECT_GT(s["disagreements"].get<int>(), 0) << id;
    } else {
      EXPECT_EQ(s["disagreements"].get<int>(), 0) << id;
    }
  }
  const Outcome csv = call({"audit", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(split_lines(csv.out).front(),
            "criterion,p,alpha,beta,printed,derived,absolute,agree");
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"check", "--p", "0.5", "--b", "1.5", "--c", "-2",
                                      "--alpha", "0.2", "--beta", "0.7"};
  EXPECT_EQ(call(args).out, call(args).out);
}
