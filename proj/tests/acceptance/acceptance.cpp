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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracles/block_moves.hpp"
#include "oracles/naive_unit_bfs.hpp"
#include "rushhour/cli/trace.hpp"
#include "rushhour/core/board.hpp"
#include "rushhour/gadgets/block.hpp"
#include "rushhour/maze/maze.hpp"
#include "rushhour/maze/right_hand.hpp"
#include "rushhour/ncl/gate.hpp"
#include "rushhour/ncl/machine.hpp"
#include "rushhour/unit/component_search.hpp"
#include "rushhour/unit/unit_state.hpp"

using namespace rushhour;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int digits = 1) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data(const std::string& rel) { return std::string(RUSHHOUR_DATA_DIR "/") + rel; }

long peak_rss_mib() {
    rusage u{};
    getrusage(RUSAGE_SELF, &u);
    return u.ru_maxrss / 1024;
}

// ---------------------------------------------------------------------------

struct Cell {
    int w, h;
    std::uint32_t expected;
};

std::vector<Cell> fast_cells() {
    std::vector<Cell> cells{{3, 3, 12}, {4, 3, 21}, {3, 4, 21}, {4, 4, 40}, {5, 4, 87}, {4, 5, 75},
                            {5, 3, 32}, {6, 3, 43}, {3, 5, 31}, {3, 6, 41}};
    for (int w = 2; w <= 10; ++w) cells.push_back({w, 2, static_cast<std::uint32_t>(w == 2 ? 3 : 2 * w)});
    for (int h = 3; h <= 10; ++h) cells.push_back({2, h, static_cast<std::uint32_t>(2 * h - 1)});
    return cells;
}

Outcome table_fast() {
    Outcome o;
    const auto t0 = Clock::now();
    int matched = 0;
    const auto cells = fast_cells();
    for (const Cell& c : cells) {
        const unit::TableReport r = unit::worst_case({c.w, c.h});
        const bool ok = r.worst == c.expected;
        matched += ok;
        o.require(ok, "(" + std::to_string(c.w) + "," + std::to_string(c.h) + ") got " +
                          std::to_string(r.worst) + " expected " + std::to_string(c.expected));
    }
    const double secs = seconds_since(t0);
    o.require(secs < 120.0, "runtime " + fixed(secs) + " s exceeds 120 s");
    o.note(std::to_string(matched) + "/" + std::to_string(cells.size()) + " cells exact, " + fixed(secs) + " s");
    return o;
}

Outcome table_slow(bool six) {
    Outcome o;
    auto t0 = Clock::now();
    const unit::TableReport r = unit::worst_case({5, 5});
    const double secs = seconds_since(t0);
    o.require(r.worst == 199, "(5,5) got " + std::to_string(r.worst) + " expected 199");
    const long rss = peak_rss_mib();
    o.require(rss < 100, "peak memory " + std::to_string(rss) + " MiB exceeds 100 MiB");
    o.note("(5,5)=" + std::to_string(r.worst) + " in " + fixed(secs) + " s, peak " + std::to_string(rss) + " MiB");
    if (!six) {
        o.note("(6,6) not run: needs a 2 GiB bit array and many hours; pass --six to run it");
        return o;
    }
    t0 = Clock::now();
    const unit::TableReport r6 = unit::worst_case({6, 6});
    o.require(r6.worst == 732, "(6,6) got " + std::to_string(r6.worst) + " expected 732");
    o.note("(6,6)=" + std::to_string(r6.worst) + " in " + fixed(seconds_since(t0), 0) + " s");
    return o;
}

Outcome countdown() {
    Outcome o;
    const auto frames = cli::parse_trace(slurp(data("boards/countdown3x3.trace")));
    o.require(frames.size() == 13, "expected 13 states, got " + std::to_string(frames.size()));
    const auto sol = core::shortest_solution(frames.front().board);
    o.require(sol && sol->length() == 12, "solution length " + (sol ? std::to_string(sol->length()) : "none"));
    int agree = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const auto d = core::distance_to_solve(frames[i].board);
        const bool ok = d && std::to_string(*d) == frames[i].label;
        agree += ok;
        o.require(ok, "state " + std::to_string(i) + " labelled " + frames[i].label + " has distance " +
                          (d ? std::to_string(*d) : "none"));
        if (i + 1 < frames.size()) {
            bool one_move = false;
            for (core::Move m : core::legal_moves(frames[i].board))
                one_move = one_move || core::apply_move(frames[i].board, m) == frames[i + 1].board;
            o.require(one_move, "states " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                    " are not one move apart");
        }
    }
    o.note(std::to_string(agree) + "/13 countdown distances match");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t compared = 0, instances = 0;
    for (int w = 2; w <= 9; ++w)
        for (int h = 1; w * h <= 9; ++h)
            for (int e = 0; e < h; ++e) {
                ++instances;
                const unit::Dims d{w, h};
                const std::string tag =
                    "(" + std::to_string(w) + "," + std::to_string(h) + ") e=" + std::to_string(e);
                const auto g = oracle::naive_unit_bfs(w, h, e);
                std::map<std::uint64_t, std::uint32_t> ours;
                unit::ComponentExplorer ex(d, e);
                for (std::uint64_t i = 0; i < (std::uint64_t{1} << (d.cells() - 2)); ++i) {
                    const unit::ComponentField& f = ex.explore(unit::justsolved_state(d, e, i));
                    for (std::size_t k = 0; k < f.codes.size(); ++k) ours[f.codes[k]] = f.distance[k];
                }
                std::size_t here = 0;
                bool ok = true;
                for (const auto& [grid, dist] : g.distance) {
                    const unit::UnitState s =
                        unit::encode(core::parse_board(oracle::as_board_text(grid, w, e)));
                    auto it = ours.find(s.code());
                    if (unit::classify(s, e) == unit::StateClass::Solved) {
                        ok = ok && it == ours.end();
                        continue;
                    }
                    ok = ok && it != ours.end() && it->second == static_cast<std::uint32_t>(dist);
                    ++here;
                }
                ok = ok && here == ours.size();
                o.require(ok, tag + " per-state distances differ");
                const auto worst = unit::search_components({d, e}).worst;
                o.require(worst == static_cast<std::uint32_t>(g.worst),
                          tag + " worst " + std::to_string(worst) + " vs " + std::to_string(g.worst));
                compared += here;
            }
    o.note(std::to_string(instances) + " (w,h,e) instances, " + std::to_string(compared) +
           " state distances compared, " + fixed(seconds_since(t0)) + " s");
    return o;
}

Outcome ncl_composition() {
    Outcome o;
    struct Want {
        ncl::BuiltinGate g;
        const char* name;
        std::size_t states, transitions;
    };
    for (const Want& w : {Want{ncl::BuiltinGate::Wire, "WIRE", 3, 2}, Want{ncl::BuiltinGate::And, "AND", 5, 5},
                          Want{ncl::BuiltinGate::Or, "OR", 7, 9}, Want{ncl::BuiltinGate::HalfOr, "HALF-OR", 8, 10}}) {
        const ncl::GateType g = ncl::builtin_gate(w.g);
        o.require(g.state_count() == w.states && g.transition_count() == w.transitions,
                  std::string(w.name) + " has " + std::to_string(g.state_count()) + "/" +
                      std::to_string(g.transition_count()));
        o.require(ncl::validate_gate_type(g).ok(), std::string(w.name) + " fails validation");
    }
    const ncl::GateType induced = ncl::project_machine(ncl::or_from_half_ors());
    std::set<ncl::OutMask> profiles;
    for (const auto& s : induced.states) profiles.insert(s.out);
    o.require(profiles.size() == 7, "induced gate has " + std::to_string(profiles.size()) + " port profiles");
    o.require(induced.transition_count() == 9,
              "induced gate has " + std::to_string(induced.transition_count()) + " transitions");
    o.require(ncl::gate_equivalence(induced, ncl::builtin_gate(ncl::BuiltinGate::Or)),
              "composed machine is not equivalent to OR");
    o.note("composed OR: " + std::to_string(induced.state_count()) + " states, " +
           std::to_string(induced.transition_count()) + " transitions");
    return o;
}

Outcome right_hand() {
    Outcome o;
    const maze::Maze m = maze::unit_to_maze(core::parse_board(slurp(data("maze/rhr4x4.txt"))));
    bool any = false;
    for (maze::Heading h : {maze::Heading::North, maze::Heading::East, maze::Heading::South, maze::Heading::West}) {
        const maze::RhrTrace t = maze::right_hand_run(m, h, 1000);
        const auto& st = t.steps;
        auto has = [&](std::size_t k) { return st.size() > k; };
        const bool pos_3_9 = has(9) && st[3].state.player == st[9].state.player;
        const bool pos_22_32 = has(32) && st[22].state.player == st[32].state.player;
        const bool diff = has(32) && !(st[3].state == st[9].state) && !(st[22].state == st[32].state);
        const bool back = has(44) && st[44].state == st[0].state &&
                          !(t.outcome == maze::RhrOutcome::ExitFound && t.end_step <= 44);
        std::string line = std::string("heading ") + maze::to_string(h) + ": positions (3,9) " +
                           (pos_3_9 ? "coincide" : "differ") + ", (22,32) " + (pos_22_32 ? "coincide" : "differ") +
                           ", states at those pairs " + (diff ? "differ" : "coincide") + ", step 44 " +
                           (back ? "equals" : "differs from") + " step 0; run ends with " +
                           maze::to_string(t.outcome) + " at step " + std::to_string(t.end_step);
        o.note(line);
        any = any || (pos_3_9 && pos_22_32 && diff && back);
    }
    o.require(any, "no initial heading reproduces all four step properties");
    return o;
}

Outcome gadgets_check() {
    Outcome o;
    auto load = [](const std::string& f) { return gadgets::parse_block(slurp(data("blocks/" + f))); };
    const gadgets::BlockReport wire = gadgets::verify_block(load("wire_corridor.blk"));
    o.require(wire.pass(), "corridor does not verify as WIRE");
    const gadgets::BlockReport black = gadgets::verify_block(load("wire_corridor_black.blk"));
    o.require(!black.black_ok && black.counterexample.has_value(), "black-cell fixture gives no counterexample");
    for (const char* f : {"wire_corridor.blk", "wire_corridor_black.blk", "jammed.blk", "two_ports.blk"}) {
        const gadgets::Block b = load(f);
        const gadgets::Enumeration e = gadgets::enumerate_block(b);
        std::set<gadgets::Configuration> reach(e.configs.begin(), e.configs.end());
        bool closed = true;
        for (const auto& c : e.configs)
            for (const auto& n : oracle::block_neighbours(b, c)) closed = closed && reach.count(n);
        o.require(closed, std::string(f) + " enumeration is not closed");
        o.note(std::string(f) + ": " + std::to_string(e.configs.size()) + " configurations");
    }
    o.note("fixtures checked: 4");
    return o;
}

Outcome structural() {
    Outcome o;
    std::mt19937 rng(2026);
    // Reversibility and per-row / per-column conservation on random walks.
    std::size_t moves = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int w = 3 + trial % 4, h = 2 + trial % 3;
        const unit::Dims d{w, h};
        std::uniform_int_distribution<std::uint64_t> codes(0, unit::state_count(w, h) - 1);
        unit::UnitState s = unit::UnitState::from_code(d, codes(rng));
        int e = -1;
        for (int r = 0; r < h && e < 0; ++r)
            for (int c = 0; c < w; ++c)
                if (s.is_horizontal(d.cell({r, c}))) e = r;
        if (e < 0) continue;
        core::Board b = unit::decode(s, e);
        for (int step = 0; step < 50; ++step) {
            const auto legal = core::legal_moves(b);
            if (legal.empty()) break;
            const core::Move m = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
            const core::Board next = core::apply_move(b, m);
            o.require(core::apply_move(next, {m.car, opposite(m.direction)}) == b, "move not reversible");
            std::vector<int> rows_b(static_cast<std::size_t>(h)), rows_n = rows_b;
            std::vector<int> cols_b(static_cast<std::size_t>(w)), cols_n = cols_b;
            for (const auto& car : b.cars())
                (car.orientation == Orientation::Horizontal ? rows_b[static_cast<std::size_t>(car.anchor.row)]
                                                            : cols_b[static_cast<std::size_t>(car.anchor.col)])++;
            for (const auto& car : next.cars())
                (car.orientation == Orientation::Horizontal ? rows_n[static_cast<std::size_t>(car.anchor.row)]
                                                            : cols_n[static_cast<std::size_t>(car.anchor.col)])++;
            o.require(rows_b == rows_n && cols_b == cols_n, "car counts not conserved");
            b = next;
            ++moves;
        }
    }
    o.note(std::to_string(moves) + " random moves reversed and conserved");

    // Encode/decode: exhaustive for wh <= 9, random above.
    std::uint64_t checked = 0;
    auto round_trip = [&](unit::Dims d, std::uint64_t code) {
        const unit::UnitState s = unit::UnitState::from_code(d, code);
        if (s.code() != code) return false;
        for (int e = 0; e < d.height; ++e) {
            bool has = false;
            for (int c = 0; c < d.width; ++c) has = has || s.is_horizontal(d.cell({e, c}));
            if (has && !(unit::encode(unit::decode(s, e)) == s)) return false;
        }
        ++checked;
        return true;
    };
    bool bij = true;
    for (int w = 2; w <= 9; ++w)
        for (int h = 1; w * h <= 9; ++h)
            for (std::uint64_t c = 0; c < unit::state_count(w, h); ++c) bij = bij && round_trip({w, h}, c);
    for (auto [w, h] : {std::pair{5, 5}, std::pair{6, 6}, std::pair{7, 5}}) {
        std::uniform_int_distribution<std::uint64_t> codes(0, unit::state_count(w, h) - 1);
        for (int i = 0; i < 2000; ++i) bij = bij && round_trip({w, h}, codes(rng));
    }
    o.require(bij, "encode/decode is not a bijection");
    o.note(std::to_string(checked) + " encodings round-tripped");

    // Maze conversion and solvability, exhaustive for wh <= 9.
    std::size_t mazes = 0;
    bool maze_ok = true;
    for (int w = 2; w <= 9; ++w)
        for (int h = 1; w * h <= 9; ++h)
            for (int e = 0; e < h; ++e) {
                const auto g = oracle::naive_unit_bfs(w, h, e);
                for (const std::string& s : oracle::all_states(w, h)) {
                    if (!oracle::has_horizontal_on_row(s, w, e)) continue;
                    const core::Board b = core::parse_board(oracle::as_board_text(s, w, e));
                    const maze::Maze m = maze::unit_to_maze(b);
                    maze_ok = maze_ok && core::render_board(maze::maze_to_unit(m)) == core::render_board(b);
                    const auto got = maze::solve_maze(m);
                    auto it = g.distance.find(s);
                    maze_ok = maze_ok && (it == g.distance.end() ? !got.has_value()
                                                                 : got == static_cast<std::size_t>(it->second));
                    ++mazes;
                }
            }
    o.require(maze_ok, "maze round trip or solvability disagrees");
    o.note(std::to_string(mazes) + " mazes round-tripped and solved");

    // Worker determinism.
    for (auto [w, h] : {std::pair{4, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
        const unit::TableReport one = unit::worst_case({w, h});
        for (int workers = 2; workers <= 4; ++workers) {
            unit::WorstCaseOptions opt;
            opt.workers = workers;
            const unit::TableReport r = unit::worst_case({w, h}, opt);
            bool same = r.worst == one.worst && r.worst_exit_row == one.worst_exit_row && r.witness == one.witness;
            for (std::size_t i = 0; i < r.per_exit.size(); ++i)
                same = same && r.per_exit[i].summary.worst == one.per_exit[i].summary.worst &&
                       r.per_exit[i].summary.witness == one.per_exit[i].summary.witness &&
                       r.per_exit[i].summary.components == one.per_exit[i].summary.components &&
                       r.per_exit[i].summary.states == one.per_exit[i].summary.states;
            o.require(same, "(" + std::to_string(w) + "," + std::to_string(h) + ") differs with " +
                                std::to_string(workers) + " workers");
        }
    }
    o.note("results identical for 1..4 workers");
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::vector<int> only;
    bool slow = false, six = false;
    app.add_option("--only", only, "run only these criteria")->check(CLI::Range(1, 8));
    app.add_flag("--slow", slow, "include the long-running table cells");
    app.add_flag("--six", six, "also run the 6x6 table cell (hours)");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"table reproduction, fast tier", table_fast},
        {"table reproduction, slow tier", [six] { return table_slow(six); }},
        {"3x3 example countdown", countdown},
        {"oracle equivalence for wh <= 9", oracle_equivalence},
        {"NCL gate counts and OR composition", ncl_composition},
        {"right-hand rule on the 4x4 example", right_hand},
        {"gadget verifier fixtures", gadgets_check},
        {"structural properties", structural},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), n) == only.end()) continue;
        if (only.empty() && n == 2 && !slow) {
            std::printf("criterion 2 (%s): SKIP (use --slow)\n", criteria[i].first);
            continue;
        }
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %d (%s): %s\n", n, criteria[i].first, o.pass ? "PASS" : "FAIL");
        for (const std::string& s : o.notes) std::printf("    %s\n", s.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
