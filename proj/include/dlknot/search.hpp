// Bounded breadth-first search for a move sequence between two diagrams.

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dlknot/diagram.hpp"
#include "dlknot/moves.hpp"
#include "dlknot/trace.hpp"

namespace dlknot {

struct SearchOptions {
  std::size_t max_moves = 12;
  std::size_t max_len = 16;  // largest token count of any visited diagram
  MoveKindSet kinds = MoveKindSet::all();
  bool prune_essential = false;  // also refuse when essential counts differ
  std::size_t max_nodes = 2'000'000;
};

struct SearchResult {
  bool found = false;
  std::optional<MoveTrace> trace;
  std::size_t explored = 0;
  std::size_t max_len = 0;
  std::size_t max_moves = 0;
  std::string reason;  // why nothing was found: "degree", "essential_count", "exhausted", "node_limit"
};

/// Diagrams are deduplicated on canonical form; the trace applies to the
/// concrete `from` and ends in a diagram canonically equal to `to`.
SearchResult search(const DlDiagram& from, const DlDiagram& to, const SearchOptions& opt = {});

}  // namespace dlknot
