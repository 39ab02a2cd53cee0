#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "k3acm/catalog.hpp"
#include "k3acm/lattice_file.hpp"
#include "k3acm/verification.hpp"
#include "oracles.hpp"

using namespace k3acm;

namespace {

const std::string kData = K3ACM_DATA_DIR;

std::string lattice_path(const std::string& name) { return kData + "/" + name + ".json"; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "k3acm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(EnumerateEffective, Examples) {
  const EffectiveCone rank1(catalog::rank1());
  EXPECT_EQ(enumerate_effective(rank1, 12), (std::vector<DivisorClass>{{1}, {2}, {3}}));

  const EffectiveCone line(catalog::line());
  EXPECT_EQ(enumerate_effective(line, 1), (std::vector<DivisorClass>{{0, 1}}));
  const auto up_to_3 = enumerate_effective(line, 3);
  for (const DivisorClass& d : {DivisorClass{0, 1}, DivisorClass{0, 2}, DivisorClass{0, 3}, DivisorClass{1, -1}})
    EXPECT_NE(std::find(up_to_3.begin(), up_to_3.end(), d), up_to_3.end()) << d.to_string();
  EXPECT_EQ(std::find(up_to_3.begin(), up_to_3.end(), DivisorClass{1, -2}), up_to_3.end());
  EXPECT_THROW(enumerate_effective(line, 0), InputError);
}

TEST(EnumerateEffective, CompleteAndSorted) {
  for (const auto& lat : catalog::all()) {
    const EffectiveCone cone(lat);
    const auto listed = enumerate_effective(cone, 16);
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end(), ByDegreeThenCoords{&lat}));
    const auto monoid = oracle::effective_monoid(lat, 16, oracle::kCatalogRadius);
    std::vector<DivisorClass> expected;
    for (Int e = 1; e <= 16; ++e) expected.insert(expected.end(), monoid[static_cast<std::size_t>(e)].begin(), monoid[static_cast<std::size_t>(e)].end());
    std::sort(expected.begin(), expected.end(), ByDegreeThenCoords{&lat});
    EXPECT_EQ(listed, expected) << lat.name();
  }
}

TEST(VerifyTheorem, Rank1HasNoInitializedAcmClasses) {
  const auto report = verify_theorem(catalog::rank1(), 16);
  EXPECT_TRUE(report.all_agree());
  EXPECT_EQ(report.acm_initialized(), 0u);
  EXPECT_EQ(report.records.size(), 4u);
}

TEST(VerifyTheorem, Witnesses) {
  auto find = [](const VerificationReport& r, const DivisorClass& d) {
    for (const auto& rec : r.records)
      if (rec.coords == d) return rec;
    ADD_FAILURE() << "missing " << d.to_string();
    return VerificationRecord{};
  };
  const auto line = verify_theorem(catalog::line(), 16);
  EXPECT_TRUE(line.all_agree());
  EXPECT_EQ(find(line, {0, 1}).numeric_case.tag, CaseTag::CaseA);
  const auto b = find(line, {1, -1});
  EXPECT_EQ(b.numeric_case.tag, CaseTag::CaseB);
  EXPECT_EQ(b.degree, 3);

  const auto gen6 = verify_theorem(catalog::gen6(), 16);
  EXPECT_TRUE(gen6.all_agree());
  EXPECT_EQ(find(gen6, {0, 1}).numeric_case.tag, CaseTag::CaseD);
}

TEST(VerifyTheorem, CountsSumToTotal) {
  for (const auto& lat : catalog::all()) {
    const auto report = verify_theorem(lat, 16);
    std::size_t sum = 0;
    for (CaseTag t : VerificationReport::kTags) sum += report.count(t);
    EXPECT_EQ(sum, report.records.size());
    const auto doc = report_to_json(report);
    EXPECT_EQ(doc["summary"]["total"].get<std::size_t>(), report.records.size());
    EXPECT_EQ(doc["verdict"], "all-agree");
  }
}

TEST(VerifyTheorem, ReportIndependentOfWorkerCount) {
  for (const auto& lat : catalog::all()) {
    const auto serial = report_to_json(verify_theorem(lat, 16, 1)).dump(2);
    const auto parallel = report_to_json(verify_theorem(lat, 16, 5)).dump(2);
    EXPECT_EQ(serial, parallel) << lat.name();
    EXPECT_EQ(report_to_tsv(verify_theorem(lat, 16, 1)), report_to_tsv(verify_theorem(lat, 16, 3)));
  }
}

TEST(VerifyTheorem, MutatedClassifierIsCaught) {
  auto widened_b = [](const EffectiveCone& c, const DivisorClass& d) {
    const auto& lat = c.lattice();
    if (!d.is_zero() && c.is_effective(d) && lat.square(d) == 0 && lat.degree(d) == 6)
      return TheoremCase::matched(CaseTag::CaseB);
    return classify_numeric(c, d);
  };
  const auto report = verify_theorem(catalog::line(), 16, 1, widened_b);
  EXPECT_FALSE(report.all_agree());
  EXPECT_EQ(report.exit_code(), 1);
}

TEST(LatticeFile, ShippedCatalogMatchesBuiltins) {
  for (const auto& lat : catalog::all()) {
    const auto loaded = load_lattice_file(lattice_path(lat.name()));
    EXPECT_EQ(loaded.name(), lat.name());
    EXPECT_EQ(loaded.gram(), lat.gram());
    EXPECT_EQ(loaded.polarization(), lat.polarization());
    EXPECT_EQ(loaded.search_bound_degree(), 32);
    EXPECT_EQ(lattice_from_json(lattice_to_json(lat)).gram(), lat.gram());
  }
}

TEST(LatticeFile, Malformed) {
  EXPECT_THROW(parse_lattice("{"), InputError);
  EXPECT_THROW(parse_lattice(R"({"name":"x","gram":[[4]]})"), InputError);
  EXPECT_THROW(parse_lattice(R"({"name":"x","gram":[[4.5]],"polarization":[1]})"), InputError);
  EXPECT_THROW(parse_lattice(R"({"name":"x","gram":[[4,1],[2,-2]],"polarization":[1,0]})"), InputError);
  EXPECT_THROW(read_lattice_file("/nonexistent/lattice.json"), InputError);
  const auto bound = parse_lattice(R"({"name":"x","gram":[[4]],"polarization":[1]})");
  EXPECT_EQ(bound.search_bound_degree(), PolarizedK3Lattice::kDefaultSearchBound);
}

TEST(Cli, ClassifyLine) {
  const auto r = run_cli({"classify", "--lattice", lattice_path("line"), "--class", "0,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("case: CaseA"), std::string::npos);
  EXPECT_NE(r.out.find("acm: yes"), std::string::npos);
  EXPECT_NE(r.out.find("initialized: yes"), std::string::npos);
  EXPECT_NE(r.out.find("square: -2"), std::string::npos);
}

TEST(Cli, NegativeCoordinates) {
  const auto r = run_cli({"classify", "--lattice", lattice_path("line"), "--class", "1,-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("case: CaseB"), std::string::npos);
  const auto r2 = run_cli({"classify", "--lattice", lattice_path("line"), "--class", "-1,0"});
  EXPECT_EQ(r2.code, 0) << r2.err;
  EXPECT_NE(r2.out.find("case: None(not-effective)"), std::string::npos);
}

TEST(Cli, Cohomology) {
  const auto r = run_cli({"cohomology", "--lattice", lattice_path("conic"), "--class", "0,2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("h0=1 h1=3 h2=0 chi=-2"), std::string::npos) << r.out;
  const auto t = run_cli({"cohomology", "--lattice", lattice_path("line"), "--class", "0,1", "--twist", "-1"});
  EXPECT_NE(t.out.find("h0=0 h1=0 h2=2 chi=2"), std::string::npos) << t.out;
}

TEST(Cli, VerifyExitCodes) {
  const auto r = run_cli({"verify", "--lattice", lattice_path("rank1"), "--max-degree", "16"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["acm_initialized"], 0);
  EXPECT_EQ(doc["verdict"], "all-agree");

  const auto tsv = run_cli({"verify", "--lattice", lattice_path("line"), "--max-degree", "4", "--format", "tsv", "--jobs", "2"});
  EXPECT_EQ(tsv.code, 0);
  EXPECT_EQ(tsv.out.substr(0, tsv.out.find('\n')), "coords\tsq\tdeg\teff\tinit\tcase\tacm\tagree");
}

TEST(Cli, EnumerateRoundTripsThroughClassify) {
  const auto r = run_cli({"enumerate", "--lattice", lattice_path("line"), "--max-degree", "6"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  const EffectiveCone cone(catalog::line());
  while (std::getline(lines, line)) {
    const std::string coords = line.substr(0, line.find('\t'));
    const auto c = run_cli({"classify", "--lattice", lattice_path("line"), "--class", coords});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_NE(c.out.find("effective: yes"), std::string::npos) << coords;
    const auto d = parse_divisor_class(coords);
    EXPECT_NE(c.out.find("case: " + classify_numeric(cone, d).to_string()), std::string::npos) << coords;
    ++count;
  }
  EXPECT_EQ(count, static_cast<int>(enumerate_effective(cone, 6).size()));
}

TEST(Cli, Validate) {
  EXPECT_EQ(run_cli({"validate", "--lattice", lattice_path("gen6")}).code, 0);
  const auto bad = write_temp("deg2.json", R"({"name":"deg2","gram":[[4,2],[2,0]],"polarization":[1,0]})");
  const auto r = run_cli({"validate", "--lattice", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation"), std::string::npos);
  // Every other subcommand refuses an inadmissible lattice.
  EXPECT_EQ(run_cli({"classify", "--lattice", bad, "--class", "0,1"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"classify", "--lattice", lattice_path("line")}).code, 2);
  EXPECT_EQ(run_cli({"classify", "--lattice", lattice_path("line"), "--class", "1,2,3"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "--lattice", lattice_path("line"), "--class", "a,b"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "--lattice", "/nonexistent.json", "--class", "0,1"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--lattice", lattice_path("line"), "--max-degree", "0"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--lattice", lattice_path("line"), "--max-degree", "4", "--format", "xml"}).code, 2);
  const auto bad = write_temp("broken.json", "{ not json");
  EXPECT_EQ(run_cli({"validate", "--lattice", bad}).code, 2);
}
