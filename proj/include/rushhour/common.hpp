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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rushhour {

struct Position {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(Position p);

enum class Orientation : std::uint8_t { Horizontal, Vertical };

enum class Direction : std::uint8_t { Left, Right, Up, Down };

constexpr Direction opposite(Direction d) {
    switch (d) {
    case Direction::Left: return Direction::Right;
    case Direction::Right: return Direction::Left;
    case Direction::Up: return Direction::Down;
    case Direction::Down: return Direction::Up;
    }
    return d;
}

constexpr Orientation axis_of(Direction d) {
    return (d == Direction::Left || d == Direction::Right) ? Orientation::Horizontal
                                                           : Orientation::Vertical;
}

constexpr Position step(Position p, Direction d) {
    switch (d) {
    case Direction::Left: return {p.row, p.col - 1};
    case Direction::Right: return {p.row, p.col + 1};
    case Direction::Up: return {p.row - 1, p.col};
    case Direction::Down: return {p.row + 1, p.col};
    }
    return p;
}

const char* to_string(Direction d);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class InvalidBoard : public Error {
public:
    using Error::Error;
};

class IllegalMove : public Error {
public:
    using Error::Error;
};

// A configurable state-space bound was hit before the search finished.
class LimitExceeded : public Error {
public:
    LimitExceeded(const std::string& what, std::size_t limit) : Error(what), limit_(limit) {}

    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : Error(what), required_(required), budget_(budget) {}

    std::uint64_t required_bytes() const { return required_; }
    std::uint64_t budget_bytes() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

} // namespace rushhour
