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

#include "moldex/packs/ludo.hpp"

#include <sstream>

namespace moldex::packs {

std::string LudoMove::describe() const {
  std::ostringstream out;
  out << "player " << player + 1 << " token " << token + 1 << " rolls " << roll << ": " << from << " -> " << to;
  return out.str();
}

LudoGame::LudoGame() : positions_(players, std::vector<int>(tokens_per_player, 0)) {}

std::string LudoGame::display_string() const {
  return "a LudoGame (player " + std::to_string(current_player_ + 1) + " to move, " +
         std::to_string(moves_.size()) + " moves)";
}

void LudoGame::play(int token, int roll, const std::shared_ptr<const LudoGame>& self) {
  FrameScope frame("LudoGame::play");
  frame.local("token", token).local("roll", roll);
  const int from = positions_.at(current_player_).at(token);
  const LudoMove move{current_player_, token, roll, from, from + roll};
  last_roll_ = roll;
  if (roll < 1 || roll > 6 || move.to > track_length) {
    raise(LudoMoveAssertionFailure("illegal move: " + move.describe() + " overshoots the finish at " +
                                       std::to_string(track_length),
                                   move, self));
  }
  positions_[current_player_][token] = move.to;
  moves_.push_back(move);
  current_player_ = (current_player_ + 1) % players;
}

void install_ludo_pack(Registry& registry) {
  if (!registry.mark_installed("moldex.packs.ludo")) return;

  registry.add_view<LudoGame>("positions_view", markers::inspector_view,
                              [](const LudoGame& self, const ViewBuilder& view) -> ViewSpec {
    return view.text().title("Positions").priority(10).text([&self] {
      std::ostringstream out;
      for (int p = 0; p < LudoGame::players; ++p) {
        out << "Player " << p + 1 << ":";
        for (int t = 0; t < LudoGame::tokens_per_player; ++t) out << " " << self.position(p, t);
        out << "\n";
      }
      out << "Next: player " << self.current_player() + 1 << ", last roll " << self.last_roll() << "\n";
      return out.str();
    });
  });

  registry.add_view<LudoGame>("moves_view", markers::inspector_view,
                              [](const LudoGame& self, const ViewBuilder& view) -> ViewSpec {
    return view.columned_list<LudoMove>()
        .title("Moves")
        .priority(20)
        .items([&self] { return self.moves(); })
        .column("Player", [](const LudoMove& m) { return std::to_string(m.player + 1); })
        .column("Token", [](const LudoMove& m) { return std::to_string(m.token + 1); })
        .column("Roll", [](const LudoMove& m) { return std::to_string(m.roll); })
        .column("From", [](const LudoMove& m) { return std::to_string(m.from); })
        .column("To", [](const LudoMove& m) { return std::to_string(m.to); });
  });

  registry.add_view<LudoMoveAssertionFailure>("game_view", markers::exception_view,
                                              [](const LudoMoveAssertionFailure& self, const ViewBuilder& view) {
    return view.forward("Game", 10, [game = self.game()] { return game; }, "positions_view");
  });

  registry.add_view<LudoMoveAssertionFailure>("moves_view", markers::exception_view,
                                              [](const LudoMoveAssertionFailure& self, const ViewBuilder& view) {
    return view.forward("Moves", 20, [game = self.game()] { return game; }, "moves_view");
  });
}

Value ludo_scenario() {
  FrameScope frame("ludo_scenario");
  auto game = std::make_shared<LudoGame>();
  frame.local("game", *game);
  // (token, roll) pairs, alternating players.
  const std::vector<std::pair<int, int>> script = {{0, 6}, {0, 5}, {0, 6}, {1, 3}, {0, 6}, {0, 4}, {0, 4}};
  for (const auto& [token, roll] : script) game->play(token, roll, game);
  return Value{{"moves", game->moves().size()}};
}

}  // namespace moldex::packs
