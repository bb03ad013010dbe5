#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcompass {

/// Compass labels of the four q-oscillator families.
enum class Direction { North, South, East, West };

inline constexpr std::array<Direction, 4> kDirections{Direction::North, Direction::South, Direction::East,
                                                      Direction::West};

constexpr char to_char(Direction d) {
  switch (d) {
    case Direction::North: return 'N';
    case Direction::South: return 'S';
    case Direction::East: return 'E';
    case Direction::West: return 'W';
  }
  return '?';
}

inline Direction direction_from_char(char c) {
  switch (c) {
    case 'N': case 'n': return Direction::North;
    case 'S': case 's': return Direction::South;
    case 'E': case 'e': return Direction::East;
    case 'W': case 'w': return Direction::West;
    default: throw std::invalid_argument(std::string("unknown direction '") + c + "'");
  }
}

}  // namespace qcompass
