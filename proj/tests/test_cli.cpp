#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "eulab_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string cmd = std::string("'") + EULAB_CLI_PATH + "' " + args + " > '" + out.string() +
                      "' 2> '" + err.string() + "'";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

fs::path write_file(const std::string& name, const std::string& body) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << body;
    return p;
}

}  // namespace

TEST_CASE("men prints a bare integer by default and exact json on request") {
    RunResult plain = run_cli("men --a 1,1");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out == "2\n");

    RunResult eulerian = run_cli("men --a 0,3,0");
    CHECK(eulerian.exit_code == 0);
    CHECK(eulerian.out == "4\n");

    RunResult as_json = run_cli("men --a 1,1 --json");
    CHECK(as_json.exit_code == 0);
    CHECK(as_json.out == "{\"a\":[1,1],\"value\":\"2\"}\n");

    RunResult bad = run_cli("men --a 1,0");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("sum") != std::string::npos);

    RunResult huge = run_cli("men --a 1,1,1,1,1,1,1,1,1");
    CHECK(huge.exit_code == 4);
}

TEST_CASE("men all-algorithms reports five equal evaluators") {
    RunResult r = run_cli("men --a 1,1,1 --all-algorithms");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["value"] == "6");
    REQUIRE(doc.contains("algorithms"));
    CHECK(doc["algorithms"].size() == 5);
    for (const auto& [name, value] : doc["algorithms"].items()) {
        (void)name;
        CHECK(value == "6");
    }
}

TEST_CASE("matroid invariants emit canonical json") {
    fs::path u23 = write_file("u23.json", R"({"kind":"uniform","elements":3,"rank":2})");

    RunResult tutte = run_cli("matroid --file '" + u23.string() + "' --invariant tutte");
    CHECK(tutte.exit_code == 0);
    CHECK(tutte.out ==
          "{\"invariant\":\"tutte\",\"tutte\":{\"x\":\"1\",\"x^2\":\"1\",\"y\":\"1\"}}\n");

    RunResult charpoly = run_cli("matroid --file '" + u23.string() + "' --invariant charpoly");
    CHECK(charpoly.exit_code == 0);
    CHECK(charpoly.out == "{\"charpoly\":{\"1\":\"-2\",\"q\":\"1\"},\"invariant\":\"charpoly\"}\n");

    RunResult men = run_cli("matroid --file '" + u23.string() + "' --invariant men --a 0,1");
    CHECK(men.exit_code == 0);
    CHECK(men.out == "{\"a\":[0,1],\"invariant\":\"men\",\"value\":\"2\"}\n");

    RunResult ginv = run_cli("matroid --file '" + u23.string() + "' --invariant ginv");
    CHECK(ginv.exit_code == 0);
    CHECK(ginv.out == "{\"ginv\":{\"110\":\"6\"},\"invariant\":\"ginv\"}\n");

    RunResult catenary = run_cli("matroid --file '" + u23.string() + "' --invariant catenary");
    CHECK(catenary.exit_code == 0);
    CHECK(catenary.out == "{\"catenary\":{\"0,1,2\":\"3\"},\"invariant\":\"catenary\"}\n");

    RunResult missing_a = run_cli("matroid --file '" + u23.string() + "' --invariant men");
    CHECK(missing_a.exit_code == 2);

    RunResult unknown = run_cli("matroid --file '" + u23.string() + "' --invariant shiny");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("loopy matroids report an all-zero men vector") {
    fs::path loopy =
        write_file("loopy.json", R"({"kind":"bases","elements":3,"bases":[[0,1]]})");
    RunResult r = run_cli("matroid --file '" + loopy.string() + "' --invariant men-vector");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["loopless"] == false);
    REQUIRE(doc["men"].size() == 2);
    for (const auto& row : doc["men"]) CHECK(row["value"] == "0");
}

TEST_CASE("matroid files map parse and validation failures to distinct exits") {
    RunResult missing = run_cli("matroid --file /nonexistent.json --invariant tutte");
    CHECK(missing.exit_code == 2);

    fs::path garbled = write_file("garbled.json", "{\"kind\": ");
    CHECK(run_cli("matroid --file '" + garbled.string() + "' --invariant tutte").exit_code == 2);

    fs::path non_matroid =
        write_file("non_matroid.json", R"({"kind":"bases","elements":4,"bases":[[0,1],[2,3]]})");
    CHECK(run_cli("matroid --file '" + non_matroid.string() + "' --invariant tutte").exit_code ==
          3);

    fs::path oversized =
        write_file("oversized.json", R"({"kind":"uniform","elements":17,"rank":2})");
    CHECK(run_cli("matroid --file '" + oversized.string() + "' --invariant tutte").exit_code == 4);
}

TEST_CASE("crosscheck passes on the built-in corpus and bounds its scope") {
    RunResult r = run_cli("crosscheck --max-elements 4");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["checks"].size() == 6);
    for (const auto& check : doc["checks"]) CHECK(check["pass"] == true);

    CHECK(run_cli("crosscheck --max-elements 9").exit_code == 4);
    CHECK(run_cli("crosscheck --max-elements 0").exit_code == 4);

    fs::path bad_corpus = write_file(
        "bad_corpus.json",
        R"([{"name":"broken","kind":"bases","elements":4,"bases":[[0,1],[2,3]]}])");
    CHECK(run_cli("crosscheck --corpus '" + bad_corpus.string() + "' --max-elements 4")
              .exit_code == 3);
    CHECK(run_cli("crosscheck --corpus /nonexistent.json --max-elements 4").exit_code == 2);
}

TEST_CASE("table emits the weighted csv rows") {
    RunResult r = run_cli("table --n 3");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "a,men,multinomial,p_coefficient");
    int rows = 0;
    bool saw_center = false;
    while (std::getline(lines, line)) {
        ++rows;
        if (line == "0 3 0,4,1,4") saw_center = true;
    }
    CHECK(rows == 10);
    CHECK(saw_center);

    RunResult as_json = run_cli("table --n 2 --json");
    CHECK(as_json.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(as_json.out);
    CHECK(doc["n"] == 2);
    CHECK(doc["rows"].size() == 3);

    CHECK(run_cli("table --n 9").exit_code == 4);
    CHECK(run_cli("table --n 0").exit_code == 2);
}

TEST_CASE("output bytes are deterministic across runs") {
    fs::path u24 = write_file("u24.json", R"({"kind":"uniform","elements":4,"rank":2})");
    std::string args = "matroid --file '" + u24.string() + "' --invariant men-vector";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("usage errors and help behave like a conventional tool") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("men --a 1,1 --frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("men").exit_code == 2);
}
