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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rushhour/common.hpp"
#include "rushhour/core/board.hpp"
#include "rushhour/ncl/gate.hpp"
#include "rushhour/ncl/io.hpp"

namespace rushhour::gadgets {

/// A two-position car in a boundary gap. The port is In when the car's anchor
/// sits at in_anchor and Out at out_anchor.
struct Port {
    std::string name;
    int car = 0;
    Orientation axis = Orientation::Horizontal;
    Position in_anchor;
    Position out_anchor;
};

struct Block {
    core::Layout layout;
    std::vector<Port> ports;
    std::vector<Position> black;
    std::string intended_name;            // empty when the file names none
    std::optional<ncl::GateType> intended;

    int size() const { return std::max(layout.width, layout.height); }
    std::vector<std::string> port_names() const;
};

/// Board grammar plus
///   % port <label>: car <letter> in=<r,c> [out=<r,c>]
///   % black: <r,c> <r,c> ...
///   % intended: <gatename>
/// out defaults to the car's position in the grid. The cell just beyond out,
/// away from in, must be a wall or off the grid so the car has exactly two
/// positions. Black cells must be occupied in the grid as given.
Block parse_block(std::string_view text, const ncl::GateLibrary& library = {});

/// One car anchor per car, indexed like layout.cars.
using Configuration = std::vector<Position>;

struct BlockEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    int port = -1;  // index into ports when the move flips a port, else -1
};

struct Enumeration {
    std::vector<Configuration> configs;  // BFS order from the initial grid
    std::vector<BlockEdge> edges;        // once per unordered pair
};

inline constexpr std::size_t kDefaultBlockBound = 5'000'000;

/// Every configuration reachable from the grid as given. Port cars only move
/// between their two anchors. Throws LimitExceeded past `bound`.
Enumeration enumerate_block(const Block& b, std::size_t bound = kDefaultBlockBound);

/// Bit i set when port i is Out in c.
ncl::OutMask port_profile(const Block& b, const Configuration& c);

/// The gate the block induces on its ports; internal moves are contracted.
ncl::GateType project_block(const Block& b, const Enumeration& e);
ncl::GateType project_block(const Block& b, std::size_t bound = kDefaultBlockBound);

/// Grid text of a configuration, in the board grammar.
std::string render_configuration(const Block& b, const Configuration& c);

struct BlockReport {
    std::size_t reachable = 0;
    ncl::GateType induced;
    std::optional<bool> equivalent;  // unset without an intended gate
    bool black_ok = true;
    std::optional<Configuration> counterexample;
    std::optional<Position> vacated;

    bool pass() const { return equivalent.value_or(false) && black_ok; }
};

BlockReport verify_block(const Block& b, std::size_t bound = kDefaultBlockBound);

} // namespace rushhour::gadgets
