#include <gtest/gtest.h>

#include "cli_app.hpp"
#include "hwdim/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using hwdim::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = hwdim::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    EXPECT_TRUE(f) << path;
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void expect_golden(const std::vector<std::string>& args, const std::string& file)
{
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, slurp("tests/golden/" + file)) << file;
}

} // namespace

TEST(CliGolden, Outputs)
{
    expect_golden({"dim", "C2", "0,5"}, "dim_C2_0_5.txt");
    expect_golden({"dim", "A1", "3", "--format", "json"}, "dim_A1_3.json");
    expect_golden({"classify", "G2", "--format", "json"}, "classify_G2.json");
    expect_golden({"classify", "B3", "--format", "csv"}, "classify_B3.csv");
    expect_golden({"pq", "C2", "--cap", "100"}, "pq_C2.txt");
    expect_golden({"minheight", "B3", "3", "--certificates"}, "minheight_B3_3.txt");
    expect_golden({"tables", "4"}, "tables_4.txt");
    expect_golden({"duality", "A5", "0,0,3,0,0", "--format", "json"}, "duality_A5.json");
}

TEST(CliDim, TextFields)
{
    const auto r = run({"dim", "C2", "0,5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("91"), std::string::npos);
    EXPECT_NE(r.out.find("orthogonal"), std::string::npos);
}

TEST(CliJson, DimsAreDecimalStringsAndRoundTrip)
{
    for (std::vector<std::string> args :
         {std::vector<std::string>{"dim", "E8", "0,0,0,0,0,0,0,4", "--format", "json"},
          std::vector<std::string>{"classify", "C3", "--format", "json"},
          std::vector<std::string>{"pq", "G2", "--format", "json"},
          std::vector<std::string>{"minheight", "D4", "2", "--certificates", "--format", "json"},
          std::vector<std::string>{"search", "A6", "35", "--max-height", "4", "--format", "json"}}) {
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << args[0] << " " << r.err;
        const Json j = Json::parse(r.out);
        EXPECT_EQ(j.dump(2) + "\n", r.out) << args[0];
    }
    const Json j = Json::parse(run({"dim", "E8", "0,0,0,0,0,0,0,4", "--format", "json"}).out);
    ASSERT_TRUE(j.contains("dim"));
    EXPECT_TRUE(j["dim"].is_string());
    EXPECT_EQ(hwdim::BigInt(j["dim"].get<std::string>()),
              hwdim::weyl_dim(hwdim::build({hwdim::Family::E, 8}), hwdim::DominantWeight::fundamental(8, 8, 4)));
}

TEST(CliJson, ModuleSchema)
{
    const Json j = Json::parse(run({"classify", "F4", "--format", "json"}).out);
    ASSERT_TRUE(j.contains("modules"));
    for (const auto& m : j["modules"]) {
        for (const char* key : {"type", "rank", "coefficients", "weight", "dim", "bound", "duality", "orbit", "tag"})
            EXPECT_TRUE(m.contains(key)) << key;
        EXPECT_TRUE(m["dim"].is_string());
    }
}

TEST(CliCsv, HeaderAndRows)
{
    const auto r = run({"classify", "B3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("type,", 0), 0u);
    EXPECT_NE(r.out.find("B3,2L3,\"0,0,2\",35"), std::string::npos);
    const auto d = run({"dim", "B3", "0,0,3", "--format", "csv"});
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find(",112,"), std::string::npos);
}

TEST(CliExitCodes, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"dim", "B2", "1,0"}).code, 2);
    EXPECT_EQ(run({"dim", "A3", "1,0"}).code, 2);
    EXPECT_EQ(run({"dim", "A3", "1,x,0"}).code, 2);
    EXPECT_EQ(run({"dim", "Q3", "1,0,0"}).code, 2);
    EXPECT_EQ(run({"tables", "9"}).code, 2);
    EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
    EXPECT_EQ(run({"dim", "A3", "1,0,0", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"tables", "1", "--ranks", "5"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(CliExitCodes, SeedlessIsRejected)
{
    const auto before = run({"--seedless", "dim", "A1", "1"});
    EXPECT_EQ(before.code, 2);
    EXPECT_NE(before.err.find("seedless"), std::string::npos);
    EXPECT_EQ(run({"dim", "A1", "1", "--seedless"}).code, 2);
    EXPECT_TRUE(run({"dim", "A1", "1", "--seedless"}).out.empty());
}

TEST(CliExitCodes, TableMismatch)
{
    const auto r = run({"tables", "1", "--ranks", "3..4"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("mismatch"), std::string::npos);
    EXPECT_EQ(run({"tables", "3"}).code, 0);
    EXPECT_EQ(run({"tables", "4"}).code, 0);
}

TEST(CliExitCodes, VerifyStatus)
{
    const auto ok = run({"verify", "theorem1", "--max-rank", "3", "--max-height", "2"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
    EXPECT_EQ(run({"verify", "lemma33"}).code, 0);
}

TEST(CliOutput, WritesFile)
{
    const auto path = (std::filesystem::temp_directory_path() / "hwdim_cli_output_test.json").string();
    std::filesystem::remove(path);
    const auto r = run({"dim", "G2", "0,2", "--format", "json", "--output", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(path), run({"dim", "G2", "0,2", "--format", "json"}).out);
    std::filesystem::remove(path);
}

TEST(CliOutput, Deterministic)
{
    const std::vector<std::string> args{"pq", "A4", "--cap", "10000", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliHelp, ListsSubcommandsAndDefaults)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    for (const char* s : {"dim", "minheight", "classify", "pq", "duality", "tables", "verify", "search", "Defaults"})
        EXPECT_NE(r.out.find(s), std::string::npos) << s;
}

TEST(CliSearch, FindsDualPair)
{
    const auto r = run({"search", "A6", "35", "--max-height", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("L3"), std::string::npos);
    EXPECT_NE(r.out.find("L4"), std::string::npos);
}

TEST(CliRankCap, Enforced)
{
    EXPECT_EQ(run({"classify", "A13"}).code, 2);
    EXPECT_EQ(run({"classify", "A13", "--max-rank", "13", "--max-height", "2"}).code, 0);
}
