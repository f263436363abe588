#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef TOEPCOMM_CLI_PATH
#define TOEPCOMM_CLI_PATH ""
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout only
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(TOEPCOMM_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("cli: winding prints the bare integer") {
    const CliResult r = run_cli("winding --symbol \"(z+0.5)^2\" --at 0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2\n");
    CHECK(run_cli("winding --symbol \"(z+0.5)^2\" --at 1.21,0").output == "1\n");
}

TEST_CASE("cli: classify json carries the verdict") {
    const CliResult r = run_cli("classify --symbol \"(z+0.5)^2\" --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"dcp\":\"No\"") != std::string::npos);
    CHECK(r.output.find("\"mcp\":\"No\"") != std::string::npos);
    CHECK(r.output.find("\"id\":\"R1\"") != std::string::npos);
}

TEST_CASE("cli: classify output is byte identical across runs") {
    const std::string args = "classify --example cardioid --format json";
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("cli: examples lists the registry") {
    const CliResult r = run_cli("examples");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("identity") != std::string::npos);
    CHECK(r.output.find("halfshift") != std::string::npos);
    CHECK(r.output.find("cardioid") != std::string::npos);
    CHECK(r.output.find("power:n") != std::string::npos);
    CHECK(r.output.find("zsquare-plus-z4") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("winding --symbol \"z^^2\" --at 0,0").exit_code == 2);     // DSL syntax
    CHECK(run_cli("--no-such-flag").exit_code == 2);                          // flag grammar
    CHECK(run_cli("winding --symbol z").exit_code == 2);                      // missing --at
    CHECK(run_cli("winding --symbol z --at 1,0").exit_code == 3);             // on the curve
    CHECK(run_cli("classify --symbol z --format yaml").exit_code == 2);       // bad format
    CHECK(run_cli("winding --symbol z --at 0,0 --nodes 1000").exit_code == 2);
}

TEST_CASE("cli: coeffs file round trip") {
    const CliResult dumped = run_cli("factor --symbol \"z^2+z^4\" --format json");
    REQUIRE(dumped.exit_code == 0);
    const std::string path = "/tmp/toepcomm_cli_h.json";
    {
        // reuse the serialized h from the factor output as a --coeffs input
        const std::size_t start = dumped.output.find("{\"coeffs\"");
        REQUIRE(start != std::string::npos);
        int depth = 0;
        std::size_t end = start;
        for (; end < dumped.output.size(); ++end) {
            if (dumped.output[end] == '{') ++depth;
            if (dumped.output[end] == '}' && --depth == 0) break;
        }
        std::ofstream out(path);
        out << dumped.output.substr(start, end - start + 1);
    }
    // h = z + z^2: winding about 5 is zero, about 0 is... h(0)=0 on curve?
    // use a point inside the image instead
    const CliResult r = run_cli("winding --coeffs " + path + " --at 0.1,0.1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");
}

TEST_CASE("cli: plot emits a deterministic SVG with the expected shading") {
    const CliResult r = run_cli("plot --example cardioid");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("<svg", 0) == 0);
    CHECK(r.output.find("#c6dbef") != std::string::npos);  // winding 1
    CHECK(r.output.find("#6baed6") != std::string::npos);  // winding 2
    CHECK(r.output == run_cli("plot --example cardioid").output);

    const CliResult disk = run_cli("plot --example identity");
    CHECK(disk.output.find("#c6dbef") != std::string::npos);
    CHECK(disk.output.find("#6baed6") == std::string::npos);

    const CliResult two = run_cli("plot --symbol z^2");
    CHECK(two.output.find("#6baed6") != std::string::npos);
    CHECK(two.output.find("#c6dbef") == std::string::npos);
}

TEST_CASE("cli: subcommands provide help with defaults") {
    for (const char* sub : {"classify", "winding", "valence", "profile", "factor", "fit",
                            "commutant", "density", "wold", "fejer", "malmquist", "plot",
                            "examples"}) {
        const CliResult r = run_cli(std::string(sub) + " --help");
        INFO(sub);
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("--format") != std::string::npos);
    }
}
