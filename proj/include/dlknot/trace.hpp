// Replayable move sequences and their line-oriented text format.
//
//   start U1+ D+ O1+ D-
//   R1Add 0 OU +
//   R2Add 1 3 O anti -
//   CrossingSliding 1 +
//
// One move per line: kind name, sites, then parameters. Blank lines and
// lines starting with '#' are ignored.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlknot/diagram.hpp"
#include "dlknot/moves.hpp"

namespace dlknot {

struct MoveTrace {
  DlDiagram start;
  std::vector<MoveInstance> steps;
};

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Applies every step in order. Throws ReplayError naming the first step
/// that does not match.
DlDiagram replay(const MoveTrace& t);

/// Replays and returns every intermediate diagram (start included).
std::vector<DlDiagram> replay_states(const MoveTrace& t);

std::string format_move(const MoveInstance& m);
MoveInstance parse_move(std::string_view line);

std::string format_trace(const MoveTrace& t);
MoveTrace parse_trace(std::string_view text);

}  // namespace dlknot
