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

#include "rushhour/cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rushhour/cli/render.hpp"
#include "rushhour/cli/trace.hpp"
#include "rushhour/core/board.hpp"
#include "rushhour/gadgets/block.hpp"
#include "rushhour/maze/maze.hpp"
#include "rushhour/maze/right_hand.hpp"
#include "rushhour/ncl/io.hpp"
#include "rushhour/ncl/machine.hpp"
#include "rushhour/unit/component_search.hpp"
#include "rushhour/unit/dense_search.hpp"
#include "rushhour/unit/trajectory.hpp"

namespace rushhour::cli {

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("RUSHHOUR_BUDGET_BYTES")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(std::string("RUSHHOUR_BUDGET_BYTES is not a byte count: '") + env + "'");
        }
    }
    return unit::kDefaultBudgetBytes;
}

// Options shared by several subcommands; unused ones are simply not registered.
struct Options {
    std::string input;
    std::optional<int> exit_row;
    std::vector<int> exit_rows;
    std::string exit_side;
    std::uint64_t budget = 0;
    int workers = 1;
    std::size_t step_limit = maze::kDefaultStepLimit;
    std::string format = "text";
    std::string layout = "row";
    std::string method = "component";
    std::string group = "frames";
    std::string heading = "all";
    std::string steps;
    std::string against;
    std::string gates;
    std::string output;
    std::string witness_dir;
    std::string manifest_path;
    std::size_t max_states = core::SolveOptions{}.max_states;
    std::size_t cap = std::numeric_limits<std::size_t>::max();
    int width = 0;
    int height = 0;
};

core::ExitSide parse_side(const std::string& s) {
    if (s == "left") return core::ExitSide::Left;
    if (s == "right") return core::ExitSide::Right;
    throw Error("--exit-side must be 'left' or 'right'");
}

core::Board load_board(const std::string& text, const Options& o) {
    core::Board b = core::parse_board(text);
    if (!o.exit_row && o.exit_side.empty()) return b;
    core::ExitSpec spec = b.exit();
    if (o.exit_row) spec.row = *o.exit_row;
    if (!o.exit_side.empty()) spec.side = parse_side(o.exit_side);
    return core::parse_board(text, spec);
}

bool looks_like_maze(const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '%') continue;
        return line.find_first_of("HVP") != std::string::npos;
    }
    return false;
}

maze::Maze load_maze(const std::string& text, const Options& o) {
    if (looks_like_maze(text)) return maze::parse_maze(text);
    return maze::unit_to_maze(load_board(text, o));
}

core::Board board_of(const maze::Maze& m, const maze::PlayerState& s) {
    maze::Maze copy = m;
    copy.start = s;
    return maze::maze_to_unit(copy);
}

std::vector<std::size_t> parse_steps(const std::string& s, std::size_t last) {
    std::vector<std::size_t> out;
    if (s.empty() || s == "none") return out;
    if (s == "all") {
        for (std::size_t i = 0; i <= last; ++i) out.push_back(i);
        return out;
    }
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        const std::size_t k = std::stoul(item);
        if (k <= last) out.push_back(k);
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string gate_summary(const ncl::GateType& g) {
    return std::to_string(g.state_count()) + " states, " + std::to_string(g.transition_count()) +
           " transitions";
}

ncl::GateLibrary load_library(const std::string& path) {
    ncl::GateLibrary lib;
    if (path.empty()) return lib;
    for (ncl::GateType& g : ncl::parse_gates(read_file(path))) lib[g.name] = std::move(g);
    return lib;
}

int cmd_solve(const Options& o, json& manifest, std::ostream& out) {
    const core::Board b = load_board(read_file(o.input), o);
    manifest["config"]["exit"] = {{"row", b.exit().row},
                                  {"side", b.exit().side == core::ExitSide::Left ? "left" : "right"}};
    manifest["config"]["max_states"] = o.max_states;
    const auto sol = core::shortest_solution(b, {o.max_states});
    if (!sol) {
        out << "unsolvable\n";
        return kNegative;
    }
    const auto frames = solution_frames(b, sol->moves);
    if (o.format == "svg") {
        out << render_svg(frames, {24, o.group == "segments"});
        return kOk;
    }
    out << "length: " << sol->length() << "\n";
    if (o.format == "trace") out << format_trace(frames);
    else out << render_text(frames, o.layout == "stacked" ? TextLayout::Stacked : TextLayout::Row);
    return kOk;
}

int cmd_worst(const Options& o, json& manifest, std::ostream& out, std::ostream& err) {
    const unit::Dims d{o.width, o.height};
    manifest["config"]["dims"] = {o.width, o.height};
    manifest["config"]["budget_bytes"] = o.budget;
    manifest["config"]["workers"] = o.workers;
    manifest["config"]["method"] = o.method;
    std::vector<int> rows = o.exit_rows;
    if (rows.empty())
        for (int e = 0; e < d.height; ++e) rows.push_back(e);
    manifest["config"]["exit_rows"] = rows;

    struct Row {
        int e;
        std::uint32_t worst;
        std::optional<unit::UnitState> witness;
    };
    std::vector<Row> results;
    if (o.method == "dense") {
        const std::uint64_t need = unit::dense_memory_bytes(d);
        if (need > o.budget)
            throw BudgetExceeded("dense search needs " + std::to_string(need) + " bytes, budget is " +
                                     std::to_string(o.budget) + " bytes",
                                 need, o.budget);
        for (int e : rows) {
            const auto r = unit::dense_search(d, e, simd::best_kernels(), o.budget);
            results.push_back({e, r.worst, r.reached ? std::optional(r.witness) : std::nullopt});
        }
    } else if (o.method == "component") {
        unit::WorstCaseOptions opts{o.budget, o.cap, o.workers, rows};
        const unit::TableReport t = unit::worst_case(d, opts);
        for (const auto& r : t.per_exit) {
            results.push_back({r.exit_row, r.summary.worst, r.summary.witness});
            if (r.summary.partial_components)
                err << "warning: exit row " << r.exit_row << ": " << r.summary.partial_components
                    << " components hit the size cap; results are lower bounds\n";
        }
    } else {
        throw Error("--method must be 'component' or 'dense'");
    }

    std::optional<Row> best;
    for (const Row& r : results)
        if (r.witness && (!best || r.worst > best->worst)) best = r;

    auto code = [](const std::optional<unit::UnitState>& s) {
        return s ? std::to_string(s->code()) : std::string("-");
    };
    if (o.format == "text") {
        for (const Row& r : results) {
            out << "w=" << d.width << " h=" << d.height << " e=" << r.e << " worst=" << r.worst
                << " witness=" << code(r.witness) << "\n";
        }
        if (best) {
            out << "worst over exit rows: " << best->worst << " (exit row " << best->e << ")\n"
                << unit::grid_text(*best->witness) << "\n";
        }
    } else {
        out << "w,h,e,worst,witness\n";
        for (const Row& r : results)
            out << d.width << "," << d.height << "," << r.e << "," << r.worst << "," << code(r.witness) << "\n";
        if (best) out << d.width << "," << d.height << ",*," << best->worst << "," << code(best->witness) << "\n";
    }

    if (!o.witness_dir.empty() && best) {
        std::filesystem::create_directories(o.witness_dir);
        const auto path = unit::solution_path(*best->witness, best->e);
        std::vector<Frame> frames;
        for (std::size_t i = 0; i < path.size(); ++i)
            frames.push_back({std::to_string(path.size() - 1 - i), unit::decode(path[i], best->e)});
        const std::string file = o.witness_dir + "/worst_" + std::to_string(d.width) + "x" +
                                 std::to_string(d.height) + ".trace";
        write_file(file, format_trace(frames));
        manifest["outputs"]["witness"] = file;
    }
    return kOk;
}

int cmd_verify(const Options& o, json& manifest, std::ostream& out, std::ostream& err) {
    manifest["config"]["max_states"] = o.max_states;
    const gadgets::Block b = gadgets::parse_block(read_file(o.input), load_library(o.gates));
    if (!b.intended) {
        err << "error: block file names no intended gate ('% intended: <gate>')\n";
        return kUsage;
    }
    const gadgets::BlockReport r = gadgets::verify_block(b, o.max_states);
    out << "reachable: " << r.reachable << "\n";
    out << ncl::format_gate(r.induced);
    out << "intended: " << b.intended_name << "\n";
    out << "equivalent: " << yes_no(*r.equivalent) << " (" << gate_summary(r.induced) << ")\n";
    if (r.black_ok) {
        out << "black cells: ok\n";
    } else {
        out << "black cells: violated, " << to_string(*r.vacated) << " vacated in\n"
            << gadgets::render_configuration(b, *r.counterexample);
    }
    out << "verdict: " << (r.pass() ? "pass" : "fail") << "\n";
    return r.pass() ? kOk : kNegative;
}

int cmd_ncl(const Options& o, json& manifest, std::ostream& out) {
    const ncl::GateLibrary lib = load_library(o.gates);
    const ncl::Machine m = ncl::parse_machine(read_file(o.input), lib);
    manifest["config"]["against"] = o.against;
    manifest["config"]["max_states"] = o.max_states;
    const ncl::GateType induced = ncl::project_machine(m, o.max_states);
    out << ncl::format_gate(induced);
    if (o.against.empty()) return kOk;
    const ncl::GateType target = ncl::resolve_gate(o.against, lib);
    const bool eq = ncl::gate_equivalence(induced, target);
    out << "equivalent: " << yes_no(eq) << " (" << gate_summary(induced) << ")\n";
    return eq ? kOk : kNegative;
}

int cmd_maze(const Options& o, json&, std::ostream& out) {
    const std::string text = read_file(o.input);
    const maze::Maze m = load_maze(text, o);
    if (looks_like_maze(text)) out << core::render_board(maze::maze_to_unit(m));
    else out << maze::render_maze(m);
    out << "reachable: " << maze::reachable_cells(m).size() << " cells\n";
    const auto dist = maze::solve_maze(m, o.max_states);
    if (dist) out << "solvable: yes (distance " << *dist << ")\n";
    else out << "solvable: no\n";
    return dist ? kOk : kNegative;
}

int cmd_rhr(const Options& o, json& manifest, std::ostream& out) {
    const maze::Maze m = load_maze(read_file(o.input), o);
    manifest["config"]["step_limit"] = o.step_limit;
    manifest["config"]["heading"] = o.heading;
    std::vector<maze::Heading> headings;
    for (maze::Heading h : {maze::Heading::North, maze::Heading::East, maze::Heading::South, maze::Heading::West})
        if (o.heading == "all" || o.heading == maze::to_string(h)) headings.push_back(h);
    if (headings.empty()) throw Error("--heading must be north, east, south, west or all");
    bool found = false;
    for (maze::Heading h : headings) {
        const maze::RhrTrace t = maze::right_hand_run(m, h, o.step_limit);
        out << "heading " << maze::to_string(h) << ": ";
        switch (t.outcome) {
        case maze::RhrOutcome::ExitFound:
            out << "exit found at step " << t.end_step << "\n";
            found = true;
            break;
        case maze::RhrOutcome::CycleDetected:
            out << "cycle at step " << t.end_step << " repeats step " << *t.first_seen << "\n";
            break;
        case maze::RhrOutcome::StepLimit:
            out << "limit reached at step " << t.end_step << "\n";
            break;
        }
        std::vector<Frame> frames;
        for (std::size_t k : parse_steps(o.steps, t.end_step))
            frames.push_back({std::to_string(k), board_of(m, t.steps[k].state)});
        if (!frames.empty()) out << render_text(frames);
    }
    return found ? kOk : kNegative;
}

std::vector<Frame> load_frames(const std::string& text, const Options& o) {
    if (text.find('@') != std::string::npos) return parse_trace(text);
    const core::Board b = load_board(text, o);
    const auto sol = core::shortest_solution(b, {o.max_states});
    if (!sol) return {{"-", b}};
    return solution_frames(b, sol->moves);
}

int cmd_render(const Options& o, json& manifest, std::ostream& out) {
    const auto frames = load_frames(read_file(o.input), o);
    std::string text;
    if (o.format == "svg") text = render_svg(frames, {24, o.group == "segments"});
    else text = render_text(frames, o.layout == "stacked" ? TextLayout::Stacked : TextLayout::Row);
    if (o.output.empty()) {
        out << text;
    } else {
        write_file(o.output, text);
        manifest["outputs"]["file"] = o.output;
        out << "wrote " << frames.size() << " frames to " << o.output << "\n";
    }
    return kOk;
}

int cmd_analyze(const Options& o, json&, std::ostream& out) {
    const auto frames = load_frames(read_file(o.input), o);
    const auto trajectory = frame_trajectory(frames);
    if (trajectory.empty()) throw Error("analysis needs boards with exactly one empty cell");
    out << "steps: " << trajectory.size() - 1 << "\n";
    out << describe_segments(unit::analyze_trajectory(trajectory));
    return kOk;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rush Hour toolkit: solver, NCL gates, gadget verifier, unit search, mazes", "rushhour"};
    app.require_subcommand(1);
    Options o;
    o.budget = 0;

    auto input = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", o.input, what)->required();
    };
    auto exit_flags = [&](CLI::App* sub) {
        sub->add_option("--exit-row", o.exit_row, "exit row index");
        sub->add_option("--exit-side", o.exit_side, "left or right")->check(CLI::IsMember({"left", "right"}));
    };
    auto max_states = [&](CLI::App* sub) {
        sub->add_option("--max-states", o.max_states, "state bound for exhaustive searches");
    };
    auto manifest_opt = [&](CLI::App* sub) {
        sub->add_option("--manifest", o.manifest_path, "also write the run manifest to this file");
    };

    auto* solve = app.add_subcommand("solve", "shortest solution of a board");
    input(solve, "board file");
    exit_flags(solve);
    max_states(solve);
    solve->add_option("--format", o.format)->check(CLI::IsMember({"text", "svg", "trace"}));
    solve->add_option("--layout", o.layout)->check(CLI::IsMember({"row", "stacked"}));
    solve->add_option("--group", o.group)->check(CLI::IsMember({"frames", "segments"}));

    auto* worst = app.add_subcommand("worst", "worst-case distance-to-solve table cell");
    worst->add_option("width", o.width)->required()->check(CLI::Range(1, 64));
    worst->add_option("height", o.height)->required()->check(CLI::Range(1, 64));
    worst->add_option("--exit-row", o.exit_rows, "restrict to these exit rows");
    worst->add_option("--budget-bytes", o.budget, "memory budget (default $RUSHHOUR_BUDGET_BYTES or 4 GiB)");
    worst->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
    worst->add_option("--cap", o.cap, "component size cap");
    worst->add_option("--method", o.method)->check(CLI::IsMember({"component", "dense"}));
    worst->add_option("--format", o.format)->check(CLI::IsMember({"csv", "text"}));
    worst->add_option("--witness-dir", o.witness_dir, "write the witness solution trace here");

    auto* verify = app.add_subcommand("verify", "verify a gadget block");
    input(verify, "block file");
    verify->add_option("--gates", o.gates, "gate-type file for the intended gate");
    max_states(verify);

    auto* ncl_cmd = app.add_subcommand("ncl", "induced gate of an NCL machine");
    input(ncl_cmd, "machine file");
    ncl_cmd->add_option("--against", o.against, "gate name to compare with");
    ncl_cmd->add_option("--gates", o.gates, "gate-type file");
    max_states(ncl_cmd);

    auto* maze_cmd = app.add_subcommand("maze", "convert between boards and mazes; solvability");
    input(maze_cmd, "board or maze file");
    exit_flags(maze_cmd);
    max_states(maze_cmd);

    auto* rhr = app.add_subcommand("rhr", "right-hand rule run");
    input(rhr, "board or maze file");
    exit_flags(rhr);
    rhr->add_option("--step-limit", o.step_limit);
    rhr->add_option("--heading", o.heading)
        ->check(CLI::IsMember({"north", "east", "south", "west", "all"}));
    rhr->add_option("--steps", o.steps, "steps to draw: all, none, or a comma list");

    auto* render = app.add_subcommand("render", "draw a trace or a board's solution");
    input(render, "trace or board file");
    exit_flags(render);
    max_states(render);
    render->add_option("--format", o.format)->check(CLI::IsMember({"text", "svg"}));
    render->add_option("--layout", o.layout)->check(CLI::IsMember({"row", "stacked"}));
    render->add_option("--group", o.group)->check(CLI::IsMember({"frames", "segments"}));
    render->add_option("-o,--output", o.output);

    auto* analyze = app.add_subcommand("analyze", "segment an empty-cell trajectory");
    input(analyze, "trace or board file");
    exit_flags(analyze);
    max_states(analyze);

    for (CLI::App* sub : {solve, worst, verify, ncl_cmd, maze_cmd, rhr, render, analyze}) manifest_opt(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const CLI::App* sub = app.get_subcommands().front();
    json manifest;
    manifest["subcommand"] = sub->get_name();
    manifest["inputs"] = o.input.empty() ? json::array() : json::array({o.input});
    manifest["config"] = json::object();
    manifest["outputs"] = {{"format", o.format}};
    try {
        if (o.budget == 0) o.budget = default_budget();
        int code = kUsage;
        const std::string name = sub->get_name();
        if (name == "solve") code = cmd_solve(o, manifest, out);
        else if (name == "worst") code = cmd_worst(o, manifest, out, err);
        else if (name == "verify") code = cmd_verify(o, manifest, out, err);
        else if (name == "ncl") code = cmd_ncl(o, manifest, out);
        else if (name == "maze") code = cmd_maze(o, manifest, out);
        else if (name == "rhr") code = cmd_rhr(o, manifest, out);
        else if (name == "render") code = cmd_render(o, manifest, out);
        else if (name == "analyze") code = cmd_analyze(o, manifest, out);
        manifest["exit_code"] = code;
        err << "manifest: " << manifest.dump() << "\n";
        if (!o.manifest_path.empty()) write_file(o.manifest_path, manifest.dump(2) + "\n");
        return code;
    } catch (const BudgetExceeded& e) {
        err << "refusing: " << e.what() << "\n";
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    manifest["exit_code"] = static_cast<int>(kUsage);
    err << "manifest: " << manifest.dump() << "\n";
    return kUsage;
}

} // namespace rushhour::cli
