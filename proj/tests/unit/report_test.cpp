#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "ealab/constructions.hpp"
#include "ealab/report.hpp"
#include "fixtures.hpp"

using namespace ealab;
using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

TEST(Report, Deterministic) {
  const auto t = fixtures::ea("e12.ea");
  const auto a = analysis_report(t);
  EXPECT_EQ(a, analysis_report(t));
  EXPECT_EQ(a, analysis_report(parse_ea(serialize_ea(t))));
}

TEST(Report, TopLevelLayout) {
  const auto doc = Json::parse(analysis_report(fixtures::ea("e12.ea")));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "schema_version", "size", "names", "one", "axioms",
                      "order", "lattice", "structure", "central_atom_conditions",
                      "decomposition", "finite_flags", "states"}));
  EXPECT_EQ(doc["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(doc["size"], 12);
  EXPECT_TRUE(doc["axioms"]["passed"].get<bool>());
  EXPECT_EQ(doc["structure"]["center"].size(), 4u);
  EXPECT_EQ(doc["decomposition"]["factors"].size(), 2u);
  EXPECT_TRUE(doc["states"]["subadditive"]["found"].get<bool>());
  EXPECT_TRUE(doc["states"]["faithful"].contains("t_star"));
}

TEST(Report, SelfVerifies) {
  for (const auto& name : {"e12.ea", "chain3.ea", "grid_pasting.ea",
                           "grid_pasting_extra.ea", "broken.ea"}) {
    const auto t = fixtures::ea(name);
    EXPECT_EQ(verify_report(t, analysis_report(t)), std::vector<std::string>{})
        << name;
  }
  for (const auto& t : fixtures::corpus(6)) {
    EXPECT_TRUE(verify_report(t, analysis_report(t)).empty());
  }
}

TEST(Report, BrokenAlgebraHasOnlyAxioms) {
  const auto doc = Json::parse(analysis_report(fixtures::ea("broken.ea")));
  EXPECT_FALSE(doc["axioms"]["passed"].get<bool>());
  EXPECT_FALSE(doc["axioms"]["violations"].empty());
  EXPECT_FALSE(doc.contains("states"));
  EXPECT_FALSE(doc.contains("lattice"));
}

TEST(Report, NonLatticeOmitsSubadditiveStates) {
  const auto doc = Json::parse(analysis_report(fixtures::ea("grid_pasting.ea")));
  EXPECT_FALSE(doc["lattice"]["is_lattice"].get<bool>());
  EXPECT_FALSE(doc["states"].contains("subadditive"));
  EXPECT_EQ(doc["states"]["any"]["certificate"]["kind"], "infeasible");
}

TEST(Report, TamperingIsDetected) {
  const auto t = fixtures::ea("e12.ea");
  const auto good = Json::parse(analysis_report(t));

  auto doc = good;
  doc["lattice"]["distributive"]["holds"] = false;
  EXPECT_FALSE(verify_report(t, dump(doc)).empty());

  doc = good;
  doc["states"]["any"]["values"][t.name(1)] = "1/7";
  EXPECT_FALSE(verify_report(t, dump(doc)).empty());

  doc = good;
  doc["states"].erase("subadditive");
  EXPECT_FALSE(verify_report(t, dump(doc)).empty());

  doc = good;
  doc["states"]["faithful"]["t_star"] = "1";
  EXPECT_FALSE(verify_report(t, dump(doc)).empty());

  EXPECT_FALSE(verify_report(chain(3), dump(good)).empty());
  EXPECT_FALSE(verify_report(t, "{ not json").empty());
}

TEST(Report, TamperedCertificateIsDetected) {
  const auto t = fixtures::ea("grid_pasting.ea");
  auto doc = Json::parse(analysis_report(t));
  auto& mult = doc["states"]["any"]["certificate"]["multipliers"];
  ASSERT_FALSE(mult.empty());
  mult.erase(mult.begin());
  EXPECT_FALSE(verify_report(t, dump(doc)).empty());

  doc = Json::parse(analysis_report(t));
  doc["states"]["any"]["certificate"]["multipliers"]["no such row"] = "1";
  EXPECT_FALSE(verify_report(t, dump(doc)).empty());
}
