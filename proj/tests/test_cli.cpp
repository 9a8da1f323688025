/* Copyright 2026 The rushhour Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rushhour/cli/commands.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = rushhour::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& rel) { return std::string(RUSHHOUR_DATA_DIR "/") + rel; }

std::string temp_file(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "rushhour_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("solve") {
    const Result r = run({"solve", data("boards/unit3x3.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("length: 12\n", 0) == 0);
    CHECK(r.err.find("manifest: {") != std::string::npos);

    const Result trace = run({"solve", data("boards/unit3x3.txt"), "--format", "trace"});
    CHECK(count(trace.out, "@ ") == 13);

    const Result solved = run({"solve", data("boards/solved.txt")});
    CHECK(solved.code == 0);
    CHECK(solved.out.rfind("length: 0\n", 0) == 0);

    const Result jammed = run({"solve", data("boards/jammed2x2.txt")});
    CHECK(jammed.code == 2);
    CHECK(jammed.out == "unsolvable\n");

    const Result bad = run({"solve", temp_file("bad.txt", "=x\n")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error: line 1") != std::string::npos);

    CHECK(run({"solve", "/nonexistent/board.txt"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("worst") {
    const Result r = run({"worst", "3", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3,3,*,12,") != std::string::npos);
    CHECK(run({"worst", "4", "4", "--method", "dense", "--format", "csv"}).out.find("4,4,*,40,") != std::string::npos);
    CHECK(run({"worst", "2", "5", "--format", "csv"}).out.find("2,5,*,9,") != std::string::npos);

    const std::string one = run({"worst", "4", "3", "--workers", "1"}).out;
    CHECK(run({"worst", "4", "3", "--workers", "3"}).out == one);

    const Result refused = run({"worst", "6", "6", "--budget-bytes", "1000000"});
    CHECK(refused.code == 1);
    CHECK(refused.err.find("refusing") != std::string::npos);
    CHECK(refused.err.find("2^") != std::string::npos);

    ::setenv("RUSHHOUR_BUDGET_BYTES", "1000", 1);
    const Result env = run({"worst", "4", "4"});
    ::unsetenv("RUSHHOUR_BUDGET_BYTES");
    CHECK(env.code == 1);
    CHECK(env.err.find("refusing") != std::string::npos);

    const fs::path dir = fs::temp_directory_path() / "rushhour_cli_witness";
    fs::remove_all(dir);
    fs::create_directories(dir);
    CHECK(run({"worst", "3", "3", "--witness-dir", dir.string()}).code == 0);
    const Result replay = run({"render", (dir / "worst_3x3.trace").string()});
    CHECK(replay.code == 0);
}

TEST_CASE("verify") {
    const Result pass = run({"verify", data("blocks/wire_corridor.blk")});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("verdict: pass") != std::string::npos);
    const Result fail = run({"verify", data("blocks/wire_corridor_black.blk")});
    CHECK(fail.code == 2);
    CHECK(fail.out.find("AA.BB\n.CC##\n") != std::string::npos);
    CHECK(fail.out.find("verdict: fail") != std::string::npos);
    CHECK(run({"verify", data("blocks/jammed.blk")}).code == 1);
}

TEST_CASE("ncl") {
    const Result yes = run({"ncl", data("ncl/or_from_half_ors.ncl"), "--against", "or"});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("equivalent: yes (7 states, 9 transitions)") != std::string::npos);
    CHECK(run({"ncl", data("ncl/wire.ncl"), "--against", "wire"}).code == 0);
    const Result no = run({"ncl", data("ncl/or_from_half_ors.ncl"), "--against", "and"});
    CHECK(no.code == 2);
    CHECK(no.out.find("equivalent: no") != std::string::npos);
    const std::string gates = temp_file("w.gates", "gate w: labels a,b\nstate s0: out={a}\n"
                                                   "state s1: out={b}\nstate s2: out={a,b}\n"
                                                   "trans s0 s2\ntrans s1 s2\n");
    CHECK(run({"ncl", data("ncl/wire.ncl"), "--gates", gates, "--against", "w"}).code == 0);
}

TEST_CASE("maze and rhr") {
    const Result m = run({"maze", data("boards/unit3x3.txt")});
    CHECK(m.code == 0);
    CHECK(m.out.find("solvable: yes (distance 12)") != std::string::npos);
    const std::string maze_text = temp_file("m.txt", "VHV\nVPV\nVHV\n% exit: (0,0)-(0,1)\n");
    const Result stuck = run({"maze", maze_text});
    CHECK(stuck.code == 2);
    CHECK(stuck.out.find("solvable: no") != std::string::npos);

    const Result r = run({"rhr", data("maze/rhr4x4.txt"), "--steps", "none"});
    CHECK(r.out.find("heading north: ") != std::string::npos);
    CHECK(count(r.out, "heading ") == 4);
    const Result cyc = run({"rhr", maze_text, "--heading", "north", "--steps", "none"});
    CHECK(cyc.code == 2);
    CHECK(cyc.out.find("cycle at step 0 repeats step 0") != std::string::npos);
    const Result lim = run({"rhr", data("maze/rhr4x4.txt"), "--heading", "east", "--step-limit", "3",
                            "--steps", "none"});
    CHECK(lim.out.find("limit reached at step 3") != std::string::npos);
    const Result exit = run({"rhr", data("boards/unit3x3.txt"), "--heading", "north", "--steps", "none"});
    CHECK(exit.out.find("exit found at step") != std::string::npos);
}

TEST_CASE("render and analyze") {
    const Result svg = run({"render", data("boards/unit3x3.txt"), "--format", "svg"});
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(count(svg.out, "<g class=\"frame\"") == 13);
    const auto poly = svg.out.find("class=\"empty-path\"");
    REQUIRE(poly != std::string::npos);
    const auto pts_begin = svg.out.find("points=\"", poly);
    const auto pts_end = svg.out.find('"', pts_begin + 8);
    CHECK(count(svg.out.substr(pts_begin + 8, pts_end - pts_begin - 8), ",") == 13);

    const std::string single = temp_file("one.trace", "@ start\n||=\n|-|\n-.|\n");
    CHECK(count(run({"render", single, "--format", "svg"}).out, "<g class=\"frame\"") == 1);
    const std::string odd = temp_file("odd.trace", "@ a<b&c\n=.\n");
    CHECK(run({"render", odd, "--format", "svg"}).out.find(">a&lt;b&amp;c</text>") != std::string::npos);
    const Result text = run({"render", single});
    CHECK(text.out == "start\n||=\n|-|\n-.|\n");

    const std::string out_path = (fs::temp_directory_path() / "rushhour_cli_test" / "r.svg").string();
    const Result wrote = run({"render", data("boards/unit3x3.txt"), "--format", "svg", "-o", out_path});
    CHECK(wrote.out == "wrote 13 frames to " + out_path + "\n");
    CHECK(fs::exists(out_path));

    const Result a = run({"analyze", data("boards/unit3x3.txt")});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("steps: 12\n", 0) == 0);
    CHECK(a.out.find("0-8 path-circuit-reverse") != std::string::npos);
}

TEST_CASE("manifest file") {
    const std::string path = (fs::temp_directory_path() / "rushhour_cli_test" / "manifest.json").string();
    fs::remove(path);
    CHECK(run({"solve", data("boards/unit3x3.txt"), "--manifest", path}).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"subcommand\": \"solve\"") != std::string::npos);
}
