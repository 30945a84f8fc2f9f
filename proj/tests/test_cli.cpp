#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args)
{
    std::string cmd = std::string(DEFRING_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture_path(const std::string &name) { return std::string(DEFRING_FIXTURE_DIR) + "/" + name + ".dsl"; }

std::filesystem::path temp_file(const std::string &name, const std::string &body)
{
    auto p = std::filesystem::temp_directory_path() / ("defring_cli_" + name);
    std::ofstream(p) << body;
    return p;
}

bool contains(const std::string &s, const std::string &needle) { return s.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, FixtureThroughStdin)
{
    auto r = run("fixture cyclotomic_regular | " + std::string(DEFRING_CLI_PATH) + " compute -");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "I = (0), R = Z_p[[Y_1, Y_2]]")) << r.out;
    EXPECT_TRUE(contains(r.out, "# p = 5")) << r.out;
}

TEST(Cli, ComputeWingberg)
{
    auto r = run("compute " + fixture_path("wingberg_tame"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "d' = 4")) << r.out;
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("fixture no_such_fixture").code, 1);
    EXPECT_EQ(run("compute /nonexistent/file.dsl").code, 1);
    EXPECT_EQ(run("").code, 1);

    auto bad = temp_file("bad.dsl", "p 5\nchi1 omega^0 chi2 omega^1\nfrob 2\n");
    auto r = run("compute " + bad.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.out, "line 3, col 1")) << r.out;

    auto invalid = temp_file("invalid.dsl", "p 5\nchi1 omega^0 chi2 omega^2\n");
    EXPECT_EQ(run("compute " + invalid.string()).code, 3);

    EXPECT_EQ(run("verify " + fixture_path("wingberg_tame")).code, 0);
    auto drop = run("verify " + fixture_path("wingberg_tame") + " --drop-generator 2");
    EXPECT_EQ(drop.code, 4);
    EXPECT_TRUE(contains(drop.out, "relation r_v1 entry (1,2)")) << drop.out;
}

TEST(Cli, JsonIsStable)
{
    auto r = run("compute --json " + fixture_path("wingberg_wild"));
    ASSERT_EQ(r.code, 0) << r.out;
    // key order is part of the output
    auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
    EXPECT_EQ(j["route"], "fox");

    auto show = run("show --json " + fixture_path("cyclotomic_691"));
    ASSERT_EQ(show.code, 0);
    auto path = temp_file("roundtrip.json", show.out);
    auto again = run("show --json " + path.string());
    EXPECT_EQ(again.out, show.out);
}

TEST(Cli, Compare)
{
    auto r = run("compare " + fixture_path("cyclotomic_691") + " " + fixture_path("cyclotomic_691_g"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "Y_3")) << r.out;
    auto j = nlohmann::json::parse(
        run("compare --json " + fixture_path("cyclotomic_691") + " " + fixture_path("cyclotomic_691_g")).out);
    ASSERT_EQ(j["kernel"].size(), 1u);
    EXPECT_EQ(j["kernel"][0]["variable"], "Y_3");
    EXPECT_EQ(j["kernel"][0]["source_generator"], "x_11");
}

TEST(Cli, FoxShowsTameColumn)
{
    auto r = run("fox " + fixture_path("wingberg_tame"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "25 - 5*T")) << r.out;
}

TEST(Cli, OutWritesFile)
{
    auto p = std::filesystem::temp_directory_path() / "defring_cli_out.txt";
    std::filesystem::remove(p);
    auto r = run("compute " + fixture_path("cyclotomic_regular") + " --out " + p.string());
    EXPECT_EQ(r.code, 0) << r.out;
    std::ifstream in(p);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_TRUE(contains(body, "I = (0)")) << body;
}
