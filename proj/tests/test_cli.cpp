#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks against the installed binary (path injected by the
// build).  Each run shells out, captures both streams, and inspects the
// exit code.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = "test_cli_stdout.tmp";
    const std::string err_path = "test_cli_stderr.tmp";
    std::string command = env_prefix + "\"" DENDRO_CLI_PATH "\" " + args + " >" + out_path +
                          " 2>" + err_path;
    int status = std::system(command.c_str());
    RunResult result;
    if (status != -1 && WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

}  // namespace

TEST_CASE("table emits every length in the requested format") {
    RunResult text = run_cli("table --n 3 --k 2");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "1 6\n2 5\n3 4\n4 3\n5 2\n6 1\n");
    CHECK(text.err.empty());

    RunResult csv = run_cli("table --n 2 --k 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "length,count\n1,9\n2,12\n3,12\n4,12\n");

    RunResult json = run_cli("table --n 2 --k 3 --format json");
    CHECK(json.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["counts"].size() == 4);
    CHECK(doc["counts"][3]["count"] == "12");
}

TEST_CASE("table narrows to a single length on request") {
    RunResult row = run_cli("table --n 2 --k 3 --ell 3");
    CHECK(row.exit_code == 0);
    CHECK(row.out == "3 12\n");

    // beyond the diameter the count is simply zero
    RunResult beyond = run_cli("table --n 2 --k 3 --ell 9");
    CHECK(beyond.exit_code == 0);
    CHECK(beyond.out == "9 0\n");

    RunResult invalid = run_cli("table --n 2 --k 3 --ell 0");
    CHECK(invalid.exit_code == 1);
    CHECK(invalid.err.find("error: ") == 0);
}

TEST_CASE("indices reports the census and both index forms") {
    RunResult text = run_cli("indices --n 1 --k 3");
    CHECK(text.exit_code == 0);
    CHECK(text.out ==
          "n: 1\n"
          "k: 3\n"
          "vertices: 4\n"
          "edges: 3\n"
          "leaves: 3\n"
          "paths of length 1: 3\n"
          "paths of length 2: 3\n"
          "wiener (closed form): 9\n"
          "wiener (length sum): 9\n"
          "average distance: 3/2\n");

    RunResult json = run_cli("indices --n 2 --k 3 --format json");
    CHECK(json.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc["wiener"] == "117");
    CHECK(doc["average_distance"]["num"] == "13");
    CHECK(doc["medium_domination"].empty());

    // degree-2 trees have no closed-form line, only the length sum
    RunResult path = run_cli("indices --n 3 --k 2");
    CHECK(path.exit_code == 0);
    CHECK(path.out.find("wiener (closed form)") == std::string::npos);
    CHECK(path.out.find("wiener (length sum): 56\n") != std::string::npos);
}

TEST_CASE("meddom covers one bound or all of them") {
    RunResult one = run_cli("meddom --n 2 --k 3 --sigma 2");
    CHECK(one.exit_code == 0);
    CHECK(one.out == "2 7/15\n");

    RunResult all = run_cli("meddom --n 2 --k 3");
    CHECK(all.exit_code == 0);
    CHECK(all.out == "2 7/15\n3 11/15\n4 1/1\n");

    RunResult csv = run_cli("meddom --n 2 --k 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "sigma,num,den\n2,7,15\n3,11,15\n4,1,1\n");

    RunResult json = run_cli("meddom --n 2 --k 3 --format json");
    CHECK(json.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(json.out);
    REQUIRE(doc["medium_domination"].size() == 3);
    CHECK(doc["medium_domination"][1]["sigma"] == 3);
    CHECK(doc["medium_domination"][1]["value"]["num"] == "11");

    RunResult out_of_range = run_cli("meddom --n 2 --k 3 --sigma 9");
    CHECK(out_of_range.exit_code == 1);
    CHECK(out_of_range.err.find("error: ") == 0);

    RunResult garbage = run_cli("meddom --n 2 --k 3 --sigma most");
    CHECK(garbage.exit_code == 1);
    CHECK(garbage.err.find("--sigma must be an integer or \"all\"") != std::string::npos);
}

TEST_CASE("verify prints one line per family and fails loudly when tripped") {
    RunResult healthy = run_cli("verify --max-n 2 --max-k 3 --trees 5");
    CHECK(healthy.exit_code == 0);
    CHECK(healthy.err.empty());
    int pass_lines = 0;
    std::istringstream lines(healthy.out);
    std::string line;
    while (std::getline(lines, line)) {
        CHECK(line.rfind("PASS ", 0) == 0);
        ++pass_lines;
    }
    CHECK(pass_lines == 9);

    RunResult tripped = run_cli("verify --max-n 2 --max-k 3 --trees 2 --inject-fault");
    CHECK(tripped.exit_code == 2);
    CHECK(tripped.out.find("FAIL path counts: recursion vs closed form") != std::string::npos);
    CHECK(tripped.err.find("error: verification failed: ") == 0);
}

TEST_CASE("export writes edge lists and DOT") {
    RunResult edges = run_cli("export --n 1 --k 3");
    CHECK(edges.exit_code == 0);
    CHECK(edges.out == "# dendrimer n=1 k=3 V=4\n0 1\n0 2\n0 3\n");

    RunResult dot = run_cli("export --n 1 --k 3 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out == "graph {\n  0 -- 1;\n  0 -- 2;\n  0 -- 3;\n}\n");

    RunResult big = run_cli("export --n 20 --k 10");
    CHECK(big.exit_code == 1);
    CHECK(big.err.find("refusing to build") != std::string::npos);
}

TEST_CASE("the vertex cap is adjustable through the environment") {
    RunResult blocked = run_cli("export --n 2 --k 3", "DENDRO_MAX_VERTICES=8 ");
    CHECK(blocked.exit_code == 1);
    CHECK(blocked.err.find("cap is 8") != std::string::npos);

    RunResult allowed = run_cli("export --n 2 --k 3", "DENDRO_MAX_VERTICES=10 ");
    CHECK(allowed.exit_code == 0);

    RunResult garbage = run_cli("table --n 1 --k 3", "DENDRO_MAX_VERTICES=soon ");
    CHECK(garbage.exit_code == 1);
    CHECK(garbage.err.find("DENDRO_MAX_VERTICES must be a positive integer") !=
          std::string::npos);
}

TEST_CASE("usage errors exit with one, help with zero") {
    CHECK(run_cli("table --n 0 --k 3").exit_code == 1);
    CHECK(run_cli("table --n 2 --k 1").exit_code == 1);
    CHECK(run_cli("table --k 3").exit_code == 1);           // --n is required
    CHECK(run_cli("table --n 2 --k 3 --format yaml").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);                      // a subcommand is required
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("table --help").exit_code == 0);
}

TEST_CASE("--output routes the payload to a file, byte-exactly") {
    const std::string path = "test_cli_payload.tmp";
    RunResult first = run_cli("table --n 2 --k 3 --format csv --output " + path);
    CHECK(first.exit_code == 0);
    CHECK(first.out.empty());
    std::string written = read_file(path);
    CHECK(written == "length,count\n1,9\n2,12\n3,12\n4,12\n");

    RunResult second = run_cli("indices --n 2 --k 3 --format json -o " + path);
    CHECK(second.exit_code == 0);
    std::string report_a = read_file(path);
    run_cli("indices --n 2 --k 3 --format json -o " + path);
    CHECK(report_a == read_file(path));
    CHECK_FALSE(report_a.empty());
    std::remove(path.c_str());
}
