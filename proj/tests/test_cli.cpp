// End-to-end tests of the nonsep binary: spawns the real executable and
// checks JSON output and the documented exit-code contract.
#include "doctest.h"
#include "json.hpp"
#include "nonsep/linkless.hpp"
#include "nonsep/minor.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cmd(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run(const std::string& args, const std::string& env = "") {
    return run_cmd(env + " " + std::string(NONSEP_BIN) + " " + args + " 2>/dev/null");
}

RunResult run_with_stdin(const std::string& args, const std::string& input) {
    return run_cmd("printf '%s\\n' '" + input + "' | " + std::string(NONSEP_BIN) + " " +
                   args + " 2>/dev/null");
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

}  // namespace

TEST_CASE("classify: K4 is a member filed under the K4-only case") {
    write_file("cli_k4.g6", nonsep::to_graph6(nonsep::graphs::k4()) + "\n");
    auto r = run("classify cli_k4.g6");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(lines_of(r.out).at(0));
    CHECK(out["verdict"] == "member");
    CHECK(out["case"] == "K4-only");
    CHECK(out["certificate"]["type"] == "wheel");

    // reading the same line from stdin gives the same certificate
    auto piped = run_with_stdin("classify -", nonsep::to_graph6(nonsep::graphs::k4()));
    CHECK(piped.exit_code == 0);
    CHECK(piped.out == r.out);
}

TEST_CASE("classify: the K1+K23 obstruction is named in the certificate") {
    write_file("cli_obs.g6", nonsep::to_graph6(nonsep::graphs::k1_plus_k23()) + "\n");
    auto r = run("classify --verify cli_obs.g6");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(lines_of(r.out).at(0));
    CHECK(out["verdict"] == "non-member");
    CHECK(out["certificate"]["obstruction"] == "K1+K23");
    CHECK(out["verified"] == true);
}

TEST_CASE("classify: empty input gives empty output and exit 0") {
    write_file("cli_empty.g6", "");
    auto r = run("classify cli_empty.g6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("classify: --summary aggregates instead of streaming") {
    std::string corpus = nonsep::to_graph6(nonsep::graphs::k4()) + "\n" +
                         nonsep::to_graph6(nonsep::graphs::k113()) + "\n" +
                         nonsep::to_graph6(nonsep::graphs::cycle(5)) + "\n";
    write_file("cli_sum.g6", corpus);
    auto r = run("classify --summary cli_sum.g6");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    json out = json::parse(lines[0]);
    CHECK(out["member"] == 2);
    CHECK(out["non-member"] == 1);
}

TEST_CASE("classify: exit codes for parse errors, expectations, capacity") {
    write_file("cli_bad.g6", "D?\n");  // truncated payload
    CHECK(run("classify cli_bad.g6").exit_code == 2);

    write_file("cli_k4.g6", nonsep::to_graph6(nonsep::graphs::k4()) + "\n");
    CHECK(run("classify --expect non-member cli_k4.g6").exit_code == 1);
    CHECK(run("classify --expect member cli_k4.g6").exit_code == 0);

    // 65 vertices trips the 64-vertex cap
    std::string big = "~";
    big += char(63 + 0);
    big += char(63 + 1);
    big += char(63 + 1);
    big += std::string((65 * 64 / 2 + 5) / 6, '?');
    write_file("cli_large.g6", big + "\n");
    CHECK(run("classify cli_large.g6").exit_code == 3);
}

TEST_CASE("classify: --emit-drawing honors the oracle guard and NONSEP_CAPACITY") {
    write_file("cli_prism.g6", nonsep::to_graph6(nonsep::graphs::triangular_prism()) + "\n");
    auto r = run("classify --emit-drawing cli_prism.g6");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(lines_of(r.out).at(0));
    CHECK(out.contains("drawing"));
    CHECK(out["drawing"]["rotations"].size() == 6);

    auto guarded = run("classify --emit-drawing cli_prism.g6", "NONSEP_CAPACITY=4");
    CHECK(guarded.exit_code == 3);
    json gj = json::parse(lines_of(guarded.out).at(0));
    CHECK(gj.contains("drawing_error"));
}

TEST_CASE("crosscheck: clean runs, deterministic output, guard, self-test") {
    auto r = run("crosscheck --n 4 --stable");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["graphs"] == 10);
    CHECK(out["mismatches"].empty());

    // all graphs up to 3 vertices are members: too small for any obstruction
    json n3 = json::parse(run("crosscheck --n 3 --stable --include-disconnected").out);
    CHECK(n3["graphs"] == n3["members"]);

    auto again = run("crosscheck --n 4 --stable");
    CHECK(again.out == r.out);

    // worker count cannot change the output
    auto parallel = run("crosscheck --n 4 --stable --jobs 2");
    CHECK(parallel.out == r.out);

    CHECK(run("crosscheck --n 8").exit_code == 3);
    CHECK(run("crosscheck --n 7 --include-disconnected").exit_code == 3);

    auto flipped = run("crosscheck --n 3 --stable --selftest-flip 0");
    CHECK(flipped.exit_code == 1);
    CHECK(json::parse(flipped.out)["mismatches"].size() == 1);
}

TEST_CASE("crosscheck: --from substitutes an external corpus") {
    std::string corpus = nonsep::to_graph6(nonsep::graphs::k4()) + "\n" +
                         nonsep::to_graph6(nonsep::graphs::k113()) + "\n";
    write_file("cli_corpus.g6", corpus);
    auto r = run("crosscheck --n 5 --stable --from cli_corpus.g6");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["graphs"] == 2);
    CHECK(out["members"] == 1);

    // corpus graphs beyond the oracle guard hit the capacity exit code
    write_file("cli_big.g6", nonsep::to_graph6(nonsep::graphs::petersen()) + "\n");
    CHECK(run("crosscheck --n 5 --from cli_big.g6").exit_code == 3);
}

TEST_CASE("linkless: build, stream format, recount, tamper detection") {
    auto r = run("linkless --max-len 4 --jobs 2");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);  // graph6 + report, two isomorphism classes
    nonsep::Graph g0 = nonsep::parse_graph6(lines[0]);
    CHECK(g0.vertex_count() == 8);
    CHECK(g0.edge_count() == 21);
    json rep0 = json::parse(lines[1]);
    CHECK(rep0["maximal"] == true);
    json rep1 = json::parse(lines[3]);
    CHECK(rep1["vertices"] == 9);

    CHECK(run("linkless --max-len 4 --recount --jobs 2").exit_code == 0);

    // tamper: drop an edge; the 3|V|-3 recount must fail
    nonsep::Graph tampered = nonsep::delete_edge(g0, 0, 1);
    write_file("cli_tampered.g6", nonsep::to_graph6(tampered) + "\n");
    auto bad = run("linkless --recount cli_tampered.g6");
    CHECK(bad.exit_code == 1);
    CHECK(json::parse(lines_of(bad.out).at(0))["edge_identity_3v_minus_3"] == false);
}
