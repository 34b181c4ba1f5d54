// Exercises the installed binary end to end: exit codes, output shape, and
// certificate stability.  Invoked as: test_cli <cli-path> <golden-dir> [catch args]

#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_golden;
fs::path g_work;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>" + (g_work / "stderr.txt").string();
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stderr_text() { return read_file(g_work / "stderr.txt"); }

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

fs::path wp(const std::string& name) { return g_work / name; }

}  // namespace

TEST_CASE("gen + check exit codes") {
    REQUIRE(run("gen complete 7 --out " + wp("k7.el").string()).exit_code == 0);
    REQUIRE(run("check " + wp("k7.el").string()).exit_code == 0);

    auto checked = run("check " + wp("k7.el").string() + " --json");
    auto j = nlohmann::json::parse(checked.out);
    REQUIRE(j["fan_ok"] == true);
    REQUIRE(j["mu2"] == "inf");
    REQUIRE(j["kappa"] == 6);

    REQUIRE(run("gen complete_bipartite 3 3 --out " + wp("k33.el").string()).exit_code == 0);
    REQUIRE(run("check " + wp("k33.el").string()).exit_code == 1);

    write_file(wp("garbage.el"), "0 1\nhello world oops\n");
    REQUIRE(run("check " + wp("garbage.el").string()).exit_code == 2);
    REQUIRE(run("check " + wp("missing_file.el").string()).exit_code == 2);
}

TEST_CASE("construct certificate, golden bytes, determinism") {
    REQUIRE(run("gen complete 7 --out " + wp("k7.el").string()).exit_code == 0);
    REQUIRE(run("construct " + wp("k7.el").string() + " --out " + wp("c1.json").string())
                .exit_code == 0);
    REQUIRE(run("construct " + wp("k7.el").string() + " --out " + wp("c2.json").string())
                .exit_code == 0);
    std::string c1 = read_file(wp("c1.json"));
    REQUIRE(c1 == read_file(wp("c2.json")));
    REQUIRE(c1 == read_file(g_golden / "k7_certificate.json"));

    auto j = nlohmann::json::parse(c1);
    REQUIRE(j["schema_version"] == "1");
    REQUIRE(j["trace"]["branch"] == "Complete");
    REQUIRE(j["verdicts"]["partition_ok"] == true);
    REQUIRE(j["verdicts"]["definitional_ok"] == true);
    REQUIRE(j["verdicts"]["leafrule_ok"] == true);

    // Independent digest recomputation over the canonical input bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : read_file(wp("k7.el"))) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char expect[32];
    std::snprintf(expect, sizeof expect, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    REQUIRE(j["input_digest"].get<std::string>() == expect);
}

TEST_CASE("construct rejections") {
    REQUIRE(run("gen sharpness 3 3 --out " + wp("sharp.el").string()).exit_code == 0);
    auto r = run("construct " + wp("sharp.el").string());
    REQUIRE(r.exit_code == 1);
    REQUIRE(stderr_text().find("mu2") != std::string::npos);

    REQUIRE(run("gen complete_bipartite 3 3 --out " + wp("k33.el").string()).exit_code == 0);
    auto r2 = run("construct " + wp("k33.el").string());
    REQUIRE(r2.exit_code == 1);
    REQUIRE(stderr_text().find("n >= 7") != std::string::npos);
}

TEST_CASE("verify worked example on K4") {
    write_file(wp("k4.el"), "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    write_file(wp("t1.el"), "0 1\n1 2\n0 3\n");
    write_file(wp("t2.el"), "2 3\n0 2\n1 3\n");
    auto ok = run("verify " + wp("k4.el").string() + " --t1 " + wp("t1.el").string() + " --t2 " +
                  wp("t2.el").string());
    REQUIRE(ok.exit_code == 0);
    REQUIRE(ok.out.find("definitional: ok") != std::string::npos);
    REQUIRE(ok.out.find("leafrule: ok") != std::string::npos);

    auto shared = run("verify " + wp("k4.el").string() + " --t1 " + wp("t1.el").string() +
                      " --t2 " + wp("t1.el").string());
    REQUIRE(shared.exit_code == 1);
    REQUIRE(shared.out.find("edge=") != std::string::npos);

    write_file(wp("bad.el"), "0 1\n1 2\n0 2\n");  // triangle, misses vertex 3
    auto bad = run("verify " + wp("k4.el").string() + " --t1 " + wp("bad.el").string() + " --t2 " +
                   wp("t2.el").string());
    REQUIRE(bad.exit_code == 1);
    REQUIRE(stderr_text().find("NotASpanningTree") != std::string::npos);
}

TEST_CASE("oracle exit codes and count") {
    REQUIRE(run("gen complete_bipartite 3 3 --out " + wp("k33.el").string()).exit_code == 0);
    auto no = run("oracle " + wp("k33.el").string());
    REQUIRE(no.exit_code == 1);
    REQUIRE(no.out.find("checked = 31") != std::string::npos);

    REQUIRE(run("gen complete 7 --out " + wp("k7.el").string()).exit_code == 0);
    auto yes = run("oracle " + wp("k7.el").string());
    REQUIRE(yes.exit_code == 0);
    REQUIRE(yes.out.find("found   = yes") != std::string::npos);

    std::string path26;
    for (int v = 1; v < 26; ++v) path26 += std::to_string(v - 1) + " " + std::to_string(v) + "\n";
    write_file(wp("path26.el"), path26);
    REQUIRE(run("oracle " + wp("path26.el").string()).exit_code == 2);
}

TEST_CASE("gen is reproducible and reports the condition") {
    auto r1 = run("gen fan_random 12 --seed 7 --out " + wp("f1.el").string());
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r1.out.find("mu2") != std::string::npos);
    REQUIRE(run("gen fan_random 12 --seed 7 --out " + wp("f2.el").string()).exit_code == 0);
    REQUIRE(read_file(wp("f1.el")) == read_file(wp("f2.el")));

    REQUIRE(run("gen case_fixture Case1_Sub11 --out " + wp("c11.el").string()).exit_code == 0);
    auto unavailable = run("gen case_fixture Case2_Sub222_Claim34");
    REQUIRE(unavailable.exit_code == 1);
    REQUIRE(stderr_text().find("unavailable") != std::string::npos);

    REQUIRE(run("gen complete 0x7 --out " + wp("x.el").string()).exit_code == 2);
    REQUIRE(run("gen wat 3 --out " + wp("x.el").string()).exit_code == 2);
}

TEST_CASE("labels round-trip through certificates") {
    // K7 on sparse labels; the certificate reports partitions in the
    // original labels.
    std::vector<long long> labels{10, 40, 55, 63, 70, 77, 90};
    std::string text;
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            text += std::to_string(labels[i]) + " " + std::to_string(labels[j]) + "\n";
    write_file(wp("sparse.el"), text);
    auto r = run("construct " + wp("sparse.el").string());
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["trace"]["branch"] == "Complete");
    std::vector<long long> v1 = j["partition"]["v1"].get<std::vector<long long>>();
    REQUIRE(v1 == std::vector<long long>{10, 40, 55});
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-path> <golden-dir> [catch args]\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];
    g_golden = argv[2];
    g_work = fs::temp_directory_path() / ("cist_cli_test_" + std::to_string(getpid()));
    fs::create_directories(g_work);

    std::vector<char*> pass;
    pass.push_back(argv[0]);
    for (int i = 3; i < argc; ++i) pass.push_back(argv[i]);
    int rc = Catch::Session().run(static_cast<int>(pass.size()), pass.data());
    fs::remove_all(g_work);
    return rc;
}
