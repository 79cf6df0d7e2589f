#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code;
    std::string stdout_text;
};

// Runs the CLI under test; stderr is dropped so diagnostics stay out of the
// captured stream.
CommandResult run_cli(const std::string& args) {
    const char* bin = std::getenv("HAMCYCLE_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "HAMCYCLE_BIN must point at the built binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

fs::path write_k4() {
    const fs::path file = fs::temp_directory_path() / "hamcycle_cli_k4.json";
    std::ofstream out(file);
    out << R"({"v":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})" << "\n";
    return file;
}

}  // namespace

TEST_CASE("phase subcommand prints the model as one JSON line") {
    const CommandResult r = run_cli("phase --v 32 --e 75.34");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.stdout_text);
    CHECK(std::abs(j["c"].get<double>()) < 1e-3);
    CHECK(j["p_hamiltonian"].get<double>() == doctest::Approx(0.368).epsilon(1e-2));
    CHECK(j["threshold_degree"].get<double>() == doctest::Approx(4.7087).epsilon(1e-3));

    // Identical invocations, identical bytes.
    CHECK(run_cli("phase --v 32 --e 75.34").stdout_text == r.stdout_text);
}

TEST_CASE("solve subcommand decides a graph file") {
    const fs::path file = write_k4();
    const CommandResult r = run_cli("solve --algo rubin --graph " + file.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["decision"] == "hamiltonian");
    CHECK(j["witness"].size() == 4);
    CHECK(j["cutoff"] == "none");

    const CommandResult custom = run_cli(
        "solve --algo custom --heuristic low --prune neighbour,path,solution "
        "--check degree,disconnected --graph " +
        file.string());
    CHECK(custom.exit_code == 0);
    CHECK(nlohmann::json::parse(custom.stdout_text)["decision"] == "hamiltonian");
    fs::remove(file);
}

TEST_CASE("oracle subcommand reports decision and count") {
    const fs::path file = write_k4();
    const CommandResult r = run_cli("oracle --graph " + file.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["hamiltonian"] == true);
    CHECK(j["cycle_count"] == 3);
    fs::remove(file);
}

TEST_CASE("edge-list input is accepted") {
    const fs::path file = fs::temp_directory_path() / "hamcycle_cli_c5.txt";
    {
        std::ofstream out(file);
        out << "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    }
    const CommandResult r = run_cli("solve --algo depth_first --graph " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.stdout_text)["decision"] == "hamiltonian");
    fs::remove(file);
}

TEST_CASE("usage errors exit 1, IO errors exit 2") {
    CHECK(run_cli("run").exit_code == 1);
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 1);
    CHECK(run_cli("solve --graph /nonexistent/no.json").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("solve --help").exit_code == 0);

    const fs::path file = write_k4();
    CHECK(run_cli("solve --algo dijkstra --graph " + file.string()).exit_code == 1);
    CHECK(run_cli("solve --algo custom --prune bogus --graph " + file.string()).exit_code == 1);
    fs::remove(file);
}

TEST_CASE("gen, run, report pipeline") {
    const fs::path dir = fs::temp_directory_path() / "hamcycle_cli_pipeline";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const CommandResult gen =
        run_cli("gen --v 5 --per-edge 1 --seed 11 --out " + (dir / "ens").string());
    CHECK(gen.exit_code == 0);
    CHECK(nlohmann::json::parse(gen.stdout_text)["instances"] == 10);

    const CommandResult run =
        run_cli("run --manifest " + (dir / "ens" / "manifest.json").string() +
                " --algos rubin,vacul --metric recursions --out " +
                (dir / "results.csv").string());
    CHECK(run.exit_code == 0);
    CHECK(nlohmann::json::parse(run.stdout_text)["records"] == 20);

    const CommandResult report = run_cli("report --in " + (dir / "results.csv").string() +
                                         " --out " + (dir / "report").string());
    CHECK(report.exit_code == 0);
    CHECK(fs::exists(dir / "report" / "aggregate.csv"));
    CHECK(fs::exists(dir / "report" / "summary_medians.csv"));
    CHECK(fs::exists(dir / "report" / "scatter_rubin.svg"));

    fs::remove_all(dir);
}
