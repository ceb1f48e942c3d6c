// Copyright 2026 The Moldex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "moldex/core/registry.hpp"
#include "moldex/packs/harness.hpp"

namespace moldex::packs {

struct LudoMove {
  int player = 0;
  int token = 0;
  int roll = 0;
  int from = 0;
  int to = 0;

  std::string describe() const;
};

/// Minimal board: two players with two tokens each on a linear track.
/// Tokens start at 0 and finish exactly on `track_length`.
class LudoGame : public Object {
  MOLDEX_CLASS(LudoGame, &Object::klass())

 public:
  static constexpr int players = 2;
  static constexpr int tokens_per_player = 2;
  static constexpr int track_length = 20;

  LudoGame();

  int position(int player, int token) const { return positions_.at(player).at(token); }
  int current_player() const noexcept { return current_player_; }
  int last_roll() const noexcept { return last_roll_; }
  const std::vector<LudoMove>& moves() const noexcept { return moves_; }

  /// Moves a token of the current player. Overshooting the finish violates
  /// the move precondition and raises LudoMoveAssertionFailure.
  void play(int token, int roll, const std::shared_ptr<const LudoGame>& self);

  std::string display_string() const override;

 private:
  std::vector<std::vector<int>> positions_;
  int current_player_ = 0;
  int last_roll_ = 0;
  std::vector<LudoMove> moves_;
};

class LudoMoveAssertionFailure : public Error {
  MOLDEX_CLASS(LudoMoveAssertionFailure, &Error::klass())

 public:
  LudoMoveAssertionFailure(std::string message, LudoMove move, std::shared_ptr<const LudoGame> game)
      : Error(std::move(message)), move_(move), game_(std::move(game)) {}

  const LudoMove& move() const noexcept { return move_; }
  const std::shared_ptr<const LudoGame>& game() const noexcept { return game_; }

 private:
  LudoMove move_;
  std::shared_ptr<const LudoGame> game_;
};

void install_ludo_pack(Registry& registry);

/// Plays a fixed sequence of rolls; the last one overshoots the finish.
Value ludo_scenario();

}  // namespace moldex::packs
