// Random test diagrams. DLKNOT_SEED fixes the seed; the default is fixed
// too, so runs are reproducible either way.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dlknot/diagram.hpp"
#include "dlknot/moves.hpp"

namespace dlknot::testing {

inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("DLKNOT_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611ULL;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed = test_seed()) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  Sign sign() { return coin() ? Sign::Plus : Sign::Minus; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

struct Shape {
  int max_crossings = 8;
  int max_double_lines = 12;
  bool degree_zero = false;
};

/// Random Gauss code with random crossing signs and double lines inserted
/// at random places. Every such code is a virtual knot diagram.
inline DlDiagram random_diagram(Rng& rng, const Shape& shape = {}) {
  const int n = rng.uniform(0, shape.max_crossings);
  std::vector<Token> tokens;
  for (int c = 1; c <= n; ++c) {
    const Sign s = rng.sign();
    tokens.push_back(Token::passage(c, Role::Under, s));
    tokens.push_back(Token::passage(c, Role::Over, s));
  }
  std::shuffle(tokens.begin(), tokens.end(), rng.engine());
  std::vector<Sign> dls;
  if (shape.degree_zero) {
    const int pairs = rng.uniform(0, shape.max_double_lines / 2);
    for (int i = 0; i < pairs; ++i) {
      dls.push_back(Sign::Plus);
      dls.push_back(Sign::Minus);
    }
  } else {
    const int k = rng.uniform(0, shape.max_double_lines);
    for (int i = 0; i < k; ++i) dls.push_back(rng.sign());
  }
  for (Sign s : dls) {
    const auto at = static_cast<std::ptrdiff_t>(rng.uniform(0, static_cast<int>(tokens.size())));
    tokens.insert(tokens.begin() + at, Token::double_line(s));
  }
  return DlDiagram(std::move(tokens));
}

/// A uniformly chosen applicable move of the given kinds, if any.
inline std::optional<MoveInstance> random_move(Rng& rng, const DlDiagram& d, MoveKindSet kinds = MoveKindSet::all()) {
  // Pick the kind first so that insertion moves do not crowd out the rest.
  std::vector<MoveKind> order;
  for (MoveKind k : kAllMoveKinds) {
    if (kinds.contains(k)) order.push_back(k);
  }
  std::shuffle(order.begin(), order.end(), rng.engine());
  for (MoveKind k : order) {
    const auto moves = enumerate_moves(d, MoveKindSet{k});
    if (!moves.empty()) return rng.pick(moves);
  }
  return std::nullopt;
}

}  // namespace dlknot::testing
