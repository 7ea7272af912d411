#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& arguments, const std::string& env_prefix = "") {
    const std::string command =
        env_prefix + " " + std::string(TEKUM_CLI_PATH) + " " + arguments + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t read = 0;
    while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), read);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int line_count(const std::string& text) {
    int lines = 0;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) ++lines;
    return lines;
}

std::string first_line(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    std::getline(stream, line);
    return line;
}

} // namespace

TEST_CASE("decode prints the field breakdown") {
    const auto result = run_cli("decode 0101");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("value    : 1/243") != std::string::npos);
    CHECK(result.output.find("decimal  : 4.1e-3") != std::string::npos);
    CHECK(run_cli("decode 0000").output.find("value    : 0") != std::string::npos);
    CHECK(run_cli("decode TTTT").output.find("value    : NaR") != std::string::npos);
}

TEST_CASE("decode error paths use the pinned exit codes") {
    CHECK(run_cli("decode 10x").exit_code == 2);
    CHECK(run_cli("decode 101").exit_code == 3); // odd width
    CHECK(run_cli("").exit_code == 2);           // missing subcommand
}

TEST_CASE("encode prints the string, its value and the rounding error") {
    const auto exact = run_cli("encode 2 --n 4");
    CHECK(exact.exit_code == 0);
    CHECK(first_line(exact.output) == "1T11");
    CHECK(exact.output.find("error = 0") != std::string::npos);

    const auto rounded = run_cli("encode 7/3 --n 4");
    CHECK(first_line(rounded.output) == "1T11");
    CHECK(rounded.output.find("error = -1/3") != std::string::npos);

    CHECK(first_line(run_cli("encode NaR --n 8").output) == "TTTTTTTT");
    CHECK(first_line(run_cli("encode 0 --n 4").output) == "0000");
    CHECK(first_line(run_cli("encode Inf --n 4").output) == "1111");
    CHECK(first_line(run_cli("encode 1.5e-3 --n 8").output) ==
          first_line(run_cli("encode 3/2000 --n 8").output));
}

TEST_CASE("encode error paths") {
    CHECK(run_cli("encode bogus --n 4").exit_code == 2);
    CHECK(run_cli("encode 1/0 --n 4").exit_code == 2);
    CHECK(run_cli("encode 2 --n 5").exit_code == 3);
    CHECK(run_cli("encode 2 --n 1").exit_code == 2); // width 1 holds only specials
}

TEST_CASE("table emits one row per string") {
    const auto positive = run_cli("table --n 4 --positive-only");
    CHECK(positive.exit_code == 0);
    CHECK(line_count(positive.output) == 43);
    CHECK(line_count(run_cli("table --n 2").output) == 10);
    CHECK(run_cli("table --n 3").exit_code == 3);
    CHECK(run_cli("table --n 10").exit_code == 3);
    CHECK(run_cli("table --n 10 --format csv").exit_code == 0);
}

TEST_CASE("csv surfaces have their schemas and are byte-stable") {
    const auto mappings = run_cli("mappings");
    CHECK(mappings.exit_code == 0);
    CHECK(first_line(mappings.output) == "family,abs_r,c,b,e_min,e_max,lg_min,lg_max");
    CHECK(line_count(mappings.output) == 57);
    CHECK(run_cli("mappings").output == mappings.output);

    const auto dynrange = run_cli("dynrange --max-n 40");
    CHECK(first_line(dynrange.output) == "n,min_pos_log10,max_log10");
    CHECK(line_count(dynrange.output) == 21);

    const auto overhead = run_cli("overhead --n 10");
    CHECK(first_line(overhead.output) == "e,log10_lo,log10_hi,trits,bits");
    CHECK(line_count(overhead.output) == 368);

    CHECK(line_count(run_cli("mappings --format text").output) == 57);
}

TEST_CASE("check reports properties and sets the exit status") {
    const auto pass = run_cli("check --property monotonicity --n 4");
    CHECK(pass.exit_code == 0);
    CHECK(first_line(pass.output) == "PROP monotonicity n=4 cases=80 verdict=pass");

    // Anchor truncation is not the nearest-value rounding once whole exponent
    // steps are dropped; the oracle comparison reports those inputs, and the
    // exit status reflects the failed property.
    const auto truncation = run_cli("check --property truncation --n 8:4");
    CHECK(truncation.exit_code == 1);
    CHECK(first_line(truncation.output) == "PROP truncation n=8:4 cases=6558 verdict=fail");

    CHECK(run_cli("check --property bogus").exit_code == 2);
    CHECK(run_cli("check --property divisibility --n 4").exit_code == 0);
}

TEST_CASE("colour stays out of piped output unless forced") {
    CHECK(run_cli("decode 0101").output.find("\x1b[") == std::string::npos);
    const auto forced = run_cli("--color always decode 0101");
    CHECK(forced.output.find("\x1b[38;2;4;111;135m") != std::string::npos);
    CHECK(run_cli("--color never decode 0101").output.find("\x1b[") == std::string::npos);
    CHECK(run_cli("decode 0101", "NO_COLOR=1").output.find("\x1b[") == std::string::npos);
}
