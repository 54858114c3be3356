#include <catch_amalgamated.hpp>

#include <isharp/cli.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace isharp;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

ojson run_json(std::vector<std::string> args) {
    Run r = run(std::move(args));
    REQUIRE(r.code == cli::ok);
    return ojson::parse(r.out);
}

// Runs the installed binary through the shell and returns its exit code and stdout.
std::pair<int, std::string> spawn(const std::string& args) {
    std::string cmd = std::string(ISHARP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::string path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("dim reports the graded split") {
    ojson j = run_json({"dim", "surg(6_2; -9/1)", "--graded"});
    CHECK(j.at("kind") == "exact");
    CHECK(j.at("dim") == 13);
    CHECK(j.at("euler") == 9);
    CHECK(j.at("graded") == ojson::array({11, 2}));
}

TEST_CASE("dim of candidate sets and traces") {
    ojson j = run_json({"dim", "census(7)"});
    CHECK(j.at("kind") == "candidates");
    CHECK(j.at("values") == ojson::array({10, 12}));

    ojson t = run_json({"--trace", "dim", "surg(3_1; -5)"});
    REQUIRE(t.contains("trace"));
    for (const auto& e : t.at("trace")) CHECK_FALSE(e.at("citation").get<std::string>().empty());
}

TEST_CASE("invariants of a mirrored knot") {
    ojson j = run_json({"invariants", "m(5_2)"});
    CHECK(j.at("nu").at("exact") == 1);
    CHECK(j.at("tau").at("exact") == 1);
    CHECK(j.at("r0").at("exact") == 3);
}

TEST_CASE("slope commands") {
    ojson t = run_json({"triad", "5/2"});
    CHECK(t.at("ab") == "2/1");
    CHECK(t.at("cd") == "3/1");
    CHECK(t.at("ef") == "1/0");

    ojson c = run_json({"cf", "1/3"});
    CHECK(c.at("cf") == ojson::array({1, 2, 2}));
    CHECK(c.at("convergents").back() == "1/3");
}

TEST_CASE("knot-building commands") {
    ojson cab = run_json({"cable", "3", "2", "m(3_1)"});
    CHECK(cab.at("nu").at("exact") == 5);
    CHECK(cab.at("r0").at("exact") == 5);

    ojson sum = run_json({"sum", "3_1", "m(3_1)"});
    CHECK(sum.at("nu").at("exact") == 0);
    CHECK(sum.at("shape") == "W");

    ojson cover = run_json({"dcover", "10_154"});
    CHECK(cover.at("values") == ojson::array({13, 15}));
}

TEST_CASE("census commands") {
    ojson one = run_json({"census", "13"});
    CHECK(one.at("name") == "m007(1,2)");
    CHECK(one.at("dim") == 21);
    ojson all = run_json({"census", "all"});
    CHECK(all.size() == 20);
}

TEST_CASE("verify and export") {
    ojson t4 = run_json({"verify", "T4"});
    CHECK(t4.at("ok") == true);
    CHECK(t4.at("failed") == 0);

    Run e = run({"export", "T1"});
    CHECK(e.code == cli::ok);
    CHECK(e.out.find("8_5\t") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"dim", "surg(6_2; -9/1"}).code == cli::usage_error);
    CHECK(run({"frobnicate"}).code == cli::usage_error);
    CHECK(run({}).code == cli::usage_error);
    CHECK(run({"census", "20"}).code == cli::domain_error);
    CHECK(run({"invariants", "T(2,4)"}).code == cli::domain_error);
    CHECK(run({"--data", "/nonexistent/isharp.jsonl", "census", "1"}).code == cli::domain_error);

    std::string bad = temp_file("isharp_bad.jsonl", bundled_dataset().save() +
        "{\"schema_version\":1,\"table\":\"T1\",\"key\":\"9_42\",\"payload\":{\"nu\":2,\"r0\":1},\"citation\":\"Table 1\"}\n");
    Run r = run({"--data", bad, "census", "1"});
    CHECK(r.code == cli::integrity_failure);
    CHECK(r.err.find("integrity") != std::string::npos);

    std::string garbled = temp_file("isharp_garbled.jsonl", "{not json\n");
    CHECK(run({"--data", garbled, "census", "1"}).code == cli::integrity_failure);
}

TEST_CASE("an explicit data file is used") {
    std::string path = std::string(ISHARP_SOURCE_DIR) + "/data/isharp.jsonl";
    ojson j = run_json({"--data", path, "dim", "surg(7_4; 1)"});
    CHECK(j.at("dim") == 7);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args = {"--trace", "invariants", "8_19 # m(5_2)"};
    CHECK(run(args).out == run(args).out);
    CHECK(run({"census", "all"}).out == run({"census", "all"}).out);
}

TEST_CASE("pretty output is a readable table") {
    Run r = run({"--pretty", "dim", "surg(6_2; -9/1)"});
    CHECK(r.code == cli::ok);
    CHECK(r.out.find("dim: 13") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);

    Run all = run({"--pretty", "census", "all"});
    CHECK(all.out.find("m007(1,2)") != std::string::npos);
}

TEST_CASE("the binary honours exit codes and the data variable") {
    auto [code, out] = spawn("dim 'surg(6_2; -9/1)'");
    CHECK(code == 0);
    CHECK(ojson::parse(out).at("dim") == 13);
    CHECK(spawn("dim 'surg(6_2'").first == 2);
    CHECK(spawn("census 99").first == 1);
    CHECK(spawn("verify T2").first == 0);

    std::string garbled = temp_file("isharp_env.jsonl", "{not json\n");
    CHECK(spawn("census 1 ").first == 0);
    CHECK(spawn("").first == 2);
    std::string cmd = "env " + std::string(cli::kDataEnv) + "=" + garbled + " " + ISHARP_CLI_PATH + " census 1 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}
