#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "borelsc/cli.hpp"

using borelsc::Json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "borelsc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = borelsc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<int>> pairs(const Json& j) {
    std::vector<std::vector<int>> v;
    for (const auto& r : j) v.push_back(r.get<std::vector<int>>());
    return v;
}

}  // namespace

TEST(Cli, SetsExample) {
    auto r = run({"sets", "--n", "7", "--gamma", "2,5"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(pairs(j["S"]["plus"]), (std::vector<std::vector<int>>{{2, 3}, {2, 4}}));
    EXPECT_TRUE(j["S"]["minus"].empty());
    EXPECT_EQ(pairs(j["S_star"]["plus"]), (std::vector<std::vector<int>>{{3, 5}, {4, 5}}));

    r = run({"sets", "--n", "7", "--gamma", "5,3"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = Json::parse(r.out);
    EXPECT_EQ(pairs(j["S"]["plus"]), (std::vector<std::vector<int>>{{5, 6}, {5, 7}}));
    EXPECT_EQ(pairs(j["S"]["minus"]), (std::vector<std::vector<int>>{{5, 1}, {5, 2}}));
}

TEST(Cli, SetsErrors) {
    EXPECT_EQ(run({"sets", "--n", "3", "--gamma", "2,2"}).code, 2);
    EXPECT_EQ(run({"sets", "--n", "3", "--gamma", "4,1"}).code, 2);
    EXPECT_EQ(run({"sets", "--n", "3", "--gamma", "x"}).code, 2);
}

TEST(Cli, TableJson) {
    auto r = run({"table", "--group", "u", "--n", "2", "--q", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 9u);
    EXPECT_EQ(j["cols"].size(), 9u);
    EXPECT_EQ(j["values"].size(), 9u);
    auto g = run({"table", "--group", "g", "--n", "2", "--q", "3", "--format", "json"});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_EQ(Json::parse(g.out)["rows"].size(), 8u);
    auto big = run({"table", "--group", "u", "--n", "3", "--q", "3", "--format", "json"});
    ASSERT_EQ(big.code, 0);
    EXPECT_EQ(Json::parse(big.out)["rows"].size(), 65u);
}

TEST(Cli, TableDeterministic) {
    auto a = run({"table", "--group", "g", "--n", "2", "--q", "5", "--format", "json"});
    auto b = run({"table", "--group", "g", "--n", "2", "--q", "5", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TableCsvAndFile) {
    auto r = run({"table", "--group", "u", "--n", "2", "--q", "3", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    EXPECT_EQ(lines, 11);  // header, class sizes, 9 characters
    auto path = std::filesystem::temp_directory_path() / "borelsc_cli_table.csv";
    auto f = run({"table", "--group", "u", "--n", "2", "--q", "3", "--format", "csv", "--out", path.string()});
    ASSERT_EQ(f.code, 0);
    EXPECT_TRUE(f.out.empty());
    std::ifstream file(path);
    std::string contents((std::istreambuf_iterator<char>(file)), {});
    EXPECT_EQ(contents, r.out);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"table", "--group", "u", "--n", "2", "--q", "3", "--format", "xml"}).code, 2);
}

TEST(Cli, Verify) {
    auto r = run({"verify", "--group", "g", "--n", "2", "--q", "3"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["counts"]["superclasses"], 8);
    EXPECT_EQ(j["counts"]["supercharacters"], 8);
    auto s = run({"verify", "--group", "u", "--n", "3", "--q", "3", "--skip-oracle"});
    ASSERT_EQ(s.code, 0) << s.out;
    EXPECT_EQ(Json::parse(s.out)["counts"]["superclasses"], 65);
    auto b = run({"verify", "--group", "u", "--n", "3", "--q", "3", "--budget", "10"});
    EXPECT_EQ(b.code, 2);
    EXPECT_EQ(Json::parse(b.err)["error"], "budget");
}

TEST(Cli, Label) {
    auto r = run({"label", "--group", "u", "--n", "2", "--q", "3", "--element", "E 1 2 = 2"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(pairs(j["D"]), (std::vector<std::vector<int>>{{1, 2}}));
    EXPECT_EQ(j["phi"], Json::array({2}));
    auto zero = run({"label", "--group", "u", "--n", "3", "--q", "3", "--element", ""});
    ASSERT_EQ(zero.code, 0) << zero.err;
    EXPECT_TRUE(Json::parse(zero.out)["D"].empty());
    auto g = run({"label", "--group", "g", "--n", "2", "--q", "3", "--element", "H = 2,1; E 1 2 = 1"});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_TRUE(Json::parse(g.out).contains("h"));

    auto path = std::filesystem::temp_directory_path() / "borelsc_cli_element.txt";
    std::ofstream(path) << "E 1 2 = 2\n";
    auto f = run({"label", "--group", "u", "--n", "2", "--q", "3", "--file", path.string()});
    std::filesystem::remove(path);
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_EQ(f.out, r.out);
}

TEST(Cli, LabelErrors) {
    auto p = run({"label", "--group", "u", "--n", "2", "--q", "3", "--element", "E 1 2 = 1; Q"});
    EXPECT_EQ(p.code, 2);
    Json j = Json::parse(p.err);
    EXPECT_EQ(j["error"], "parse");
    EXPECT_TRUE(j.contains("position"));
    EXPECT_EQ(run({"label", "--group", "u", "--n", "2", "--q", "3"}).code, 2);
    EXPECT_EQ(run({"label", "--group", "u", "--n", "2", "--q", "3", "--file", "/nonexistent/x"}).code, 2);
    // a torus entry is not an element of the unipotent group
    EXPECT_EQ(run({"label", "--group", "u", "--n", "2", "--q", "3", "--element", "H = 2,1"}).code, 2);
}

TEST(Cli, InvalidInput) {
    EXPECT_EQ(run({"table", "--group", "u", "--n", "2", "--q", "4"}).code, 2);
    EXPECT_EQ(run({"table", "--group", "u", "--n", "2", "--q", "2"}).code, 2);
    EXPECT_EQ(run({"table", "--group", "u", "--n", "0", "--q", "3"}).code, 2);
    EXPECT_EQ(run({"table", "--group", "x", "--n", "2", "--q", "3"}).code, 2);
    EXPECT_EQ(run({"table", "--n", "2", "--q", "3"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    auto r = run({"table", "--group", "u", "--n", "2", "--q", "9"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NO_THROW((void)Json::parse(r.err));
}

TEST(Cli, Count) {
    auto r = run({"count", "--n", "2", "--q", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["order_U"], 9);
    EXPECT_EQ(j["order_G"], 36);
    EXPECT_EQ(j["superclasses_U"], 9);
    EXPECT_EQ(j["supercharacters_G"], 8);
    EXPECT_EQ(j["class_size_total_U"], 9);
    EXPECT_EQ(j["class_size_total_G"], 36);
    auto big = run({"count", "--n", "3", "--q", "3", "--budget", "100"});
    ASSERT_EQ(big.code, 0);
    Json b = Json::parse(big.out);
    EXPECT_EQ(b["class_size_total_U"], 729);
    EXPECT_TRUE(b["class_size_total_G"].is_null());
}
