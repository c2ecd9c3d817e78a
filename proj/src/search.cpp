#include "dlknot/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "dlknot/projection.hpp"

namespace dlknot {

namespace {

struct Node {
  DlDiagram d;
  std::size_t parent;
  MoveInstance move;
  std::size_t depth;
};

MoveTrace path_to(const std::vector<Node>& nodes, std::size_t i) {
  MoveTrace t;
  t.start = nodes[0].d;
  for (; i != 0; i = nodes[i].parent) t.steps.push_back(nodes[i].move);
  std::reverse(t.steps.begin(), t.steps.end());
  return t;
}

}  // namespace

SearchResult search(const DlDiagram& from, const DlDiagram& to, const SearchOptions& opt) {
  SearchResult r;
  r.max_len = opt.max_len;
  r.max_moves = opt.max_moves;
  if (degree(from) != degree(to)) {
    r.reason = "degree";
    return r;
  }
  if (opt.prune_essential && essential_count(from) != essential_count(to)) {
    r.reason = "essential_count";
    return r;
  }
  const std::string target = serialize(canonicalize(to));
  std::vector<Node> nodes{{from, 0, {}, 0}};
  std::unordered_map<std::string, std::size_t> seen{{serialize(canonicalize(from)), 0}};
  r.explored = 1;
  if (seen.begin()->first == target) {
    r.found = true;
    r.trace = path_to(nodes, 0);
    return r;
  }
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= opt.max_moves) continue;
    // Copy: nodes may reallocate while children are added.
    const DlDiagram cur = nodes[head].d;
    for (const MoveInstance& m : enumerate_moves(cur, opt.kinds)) {
      DlDiagram next = apply(cur, m);
      if (next.size() > opt.max_len) continue;
      std::string key = serialize(canonicalize(next));
      if (seen.contains(key)) continue;
      if (nodes.size() >= opt.max_nodes) {
        r.reason = "node_limit";
        return r;
      }
      const bool hit = key == target;
      seen.emplace(std::move(key), nodes.size());
      nodes.push_back({std::move(next), head, m, nodes[head].depth + 1});
      ++r.explored;
      if (hit) {
        r.found = true;
        r.trace = path_to(nodes, nodes.size() - 1);
        return r;
      }
    }
  }
  r.reason = "exhausted";
  return r;
}

}  // namespace dlknot
