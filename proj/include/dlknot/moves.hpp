// Local moves on diagrams with double lines.
//
// Sites are token indices into the concrete (not canonicalized) sequence.
// "Gap" sites are insertion indices in [0, size]; "pair" sites name the
// adjacent tokens (p, p + 1 mod size).

#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlknot/diagram.hpp"

namespace dlknot {

enum class MoveKind : std::uint8_t {
  R1Add,
  R1Remove,
  R2Add,
  R2Remove,
  R3,
  DlSlide4,
  DlPairAdd5,
  DlPairCancel5,
  CrossingChange,
  CrossingSliding,
};

inline constexpr std::array<MoveKind, 10> kAllMoveKinds = {
    MoveKind::R1Add,         MoveKind::R1Remove,       MoveKind::R2Add,    MoveKind::R2Remove,
    MoveKind::R3,            MoveKind::DlSlide4,       MoveKind::DlPairAdd5, MoveKind::DlPairCancel5,
    MoveKind::CrossingChange, MoveKind::CrossingSliding,
};

std::string_view to_string(MoveKind k);
std::optional<MoveKind> parse_move_kind(std::string_view name);

class MoveKindSet {
 public:
  constexpr MoveKindSet() = default;
  constexpr MoveKindSet(std::initializer_list<MoveKind> kinds) {
    for (MoveKind k : kinds) insert(k);
  }
  static constexpr MoveKindSet all() {
    MoveKindSet s;
    for (MoveKind k : kAllMoveKinds) s.insert(k);
    return s;
  }
  constexpr void insert(MoveKind k) { bits_ |= bit(k); }
  constexpr void erase(MoveKind k) { bits_ &= ~bit(k); }
  constexpr bool contains(MoveKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

 private:
  static constexpr unsigned bit(MoveKind k) { return 1u << static_cast<unsigned>(k); }
  unsigned bits_ = 0;
};

/// Comma-separated kind names, or "all".
MoveKindSet parse_move_kinds(std::string_view list);

/// A fully parameterized move.
///
///   R1Add           site[0] = gap; over_first: O before U; sign: crossing sign
///   R1Remove        site[0] = pair start
///   R2Add           site[0] <= site[1] gaps; the strand inserted at site[0]
///                   meets the new crossings (x, y), the other strand meets
///                   (x, y) when parallel and (y, x) otherwise; over_first:
///                   the strand at site[0] is the over strand; sign: sign of x
///                   (y gets the opposite). With equal gaps the site[0] pair
///                   comes first.
///   R2Remove        site[0], site[1] = pair starts
///   R3              site = pair starts of the top, middle and bottom strands
///   DlSlide4        site[0] = pair start of a (double line, passage) pair
///   DlPairAdd5      site[0] = gap; sign: sign of the first inserted token
///   DlPairCancel5   site[0] = pair start
///   CrossingChange  crossing
///   CrossingSliding crossing; sign: direction s
struct MoveInstance {
  MoveKind kind = MoveKind::R1Add;
  std::array<std::size_t, 3> site{0, 0, 0};
  int crossing = 0;
  Sign sign = Sign::Plus;
  bool over_first = false;
  bool parallel = false;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rewrites `d` by `m`. Throws MoveError when the local pattern does not match.
DlDiagram apply(const DlDiagram& d, const MoveInstance& m);
bool is_applicable(const DlDiagram& d, const MoveInstance& m);

/// All applicable instances of the requested kinds, grouped by kind in
/// declaration order, then by site. Insertion moves range over gaps
/// 0..size-1 (gap 0 alone for the empty diagram); gap size is the same
/// cyclic position as gap 0.
std::vector<MoveInstance> enumerate_moves(const DlDiagram& d, MoveKindSet kinds);

/// Moves that, applied in order to apply(context, m), give a diagram
/// canonically equal to context.
std::vector<MoveInstance> invert(const MoveInstance& m, const DlDiagram& context);

/// Crossings of an R3 site, as (top-middle, top-bottom, middle-bottom).
struct R3Triangle {
  int top_middle;
  int top_bottom;
  int middle_bottom;
};
std::optional<R3Triangle> r3_triangle(const DlDiagram& d, const MoveInstance& m);

/// Cancels adjacent opposite double lines until none remain; every step is
/// a DlPairCancel5. Returns the moves used (site indices refer to the
/// intermediate diagrams).
std::vector<MoveInstance> merge_double_lines(DlDiagram& d);

// Convenience constructors.
MoveInstance crossing_change(int crossing);
MoveInstance crossing_sliding(int crossing, Sign direction);
MoveInstance pair_cancel(std::size_t pos);
MoveInstance pair_add(std::size_t gap, Sign first);

}  // namespace dlknot
