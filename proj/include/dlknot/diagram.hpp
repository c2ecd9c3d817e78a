// Oriented knot diagrams with double lines, encoded as cyclic token sequences.
//
// A diagram is an abstract Gauss code: each classical crossing is met twice
// (once over, once under) and double lines appear as signed tokens between
// passages. Virtual crossings are not represented; every detour move is an
// identity on this encoding.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dlknot {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign negate(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr Sign sign_of(long v) { return v < 0 ? Sign::Minus : Sign::Plus; }
constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

enum class Role : std::uint8_t { Under, Over };

constexpr Role opposite(Role r) { return r == Role::Under ? Role::Over : Role::Under; }

struct Token {
  enum class Kind : std::uint8_t { Passage, DoubleLine };

  Kind kind = Kind::DoubleLine;
  int crossing = 0;  // 0 for double lines
  Role role = Role::Under;
  Sign sign = Sign::Plus;

  static constexpr Token passage(int crossing, Role role, Sign sign) {
    return Token{Kind::Passage, crossing, role, sign};
  }
  static constexpr Token double_line(Sign sign) {
    return Token{Kind::DoubleLine, 0, Role::Under, sign};
  }

  constexpr bool is_passage() const { return kind == Kind::Passage; }
  constexpr bool is_double_line() const { return kind == Kind::DoubleLine; }

  friend constexpr bool operator==(const Token&, const Token&) = default;
};

std::string to_string(const Token& t);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Winding parity of a crossing: an integer when the degree is 0, otherwise a
/// residue in [0, |degree|).
struct WindingParity {
  long value = 0;
  long modulus = 0;

  friend constexpr bool operator==(const WindingParity&, const WindingParity&) = default;
  friend constexpr auto operator<=>(const WindingParity&, const WindingParity&) = default;
};

std::string to_string(const WindingParity& p);

class DlDiagram {
 public:
  struct Passages {
    std::size_t under;
    std::size_t over;
  };

  DlDiagram() = default;

  /// Validates the pairing invariant and relabels crossings to 1..n in order
  /// of increasing original id. Throws ParseError on a pairing violation.
  explicit DlDiagram(std::vector<Token> tokens);

  std::span<const Token> tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }

  int crossing_count() const { return crossings_; }
  int double_line_count() const;

  /// Token indices of the two passages of `crossing`. Throws
  /// std::out_of_range for an unknown id.
  Passages passages(int crossing) const;

  Sign crossing_sign(int crossing) const { return tokens_[passages(crossing).under].sign; }

  std::size_t next(std::size_t i) const { return (i + 1) % tokens_.size(); }
  std::size_t prev(std::size_t i) const { return (i + tokens_.size() - 1) % tokens_.size(); }

  friend bool operator==(const DlDiagram& a, const DlDiagram& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<Token> tokens_;
  std::vector<Passages> index_;  // index_[id - 1]
  int crossings_ = 0;
};

DlDiagram parse(std::string_view text);
std::string serialize(const DlDiagram& d);

/// Representative of the orbit under rotation and crossing relabeling.
/// Crossing ids follow first occurrence; rotations compare token-wise with
/// Under < Over < DoubleLine, then id, then '+' before '-'.
DlDiagram canonicalize(const DlDiagram& d);
bool canonically_equal(const DlDiagram& a, const DlDiagram& b);

long degree(const DlDiagram& d);

/// Sum of double-line signs strictly between the Under and the Over passage
/// of `crossing`, walking forward from the Under passage.
long raw_parity(const DlDiagram& d, int crossing);
WindingParity winding_parity(const DlDiagram& d, int crossing);

/// Parities indexed by crossing id - 1.
std::vector<WindingParity> parities(const DlDiagram& d);

/// Sorted multiset of all crossing parities.
std::vector<WindingParity> parity_profile(const DlDiagram& d);

/// Reduces v into [0, |modulus|) when modulus != 0.
long normalize_residue(long v, long modulus);

}  // namespace dlknot
