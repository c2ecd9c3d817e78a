#include "dlknot/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace dlknot {

std::string to_string(const Token& t) {
  std::string out;
  if (t.is_double_line()) {
    out += 'D';
  } else {
    out += t.role == Role::Over ? 'O' : 'U';
    out += std::to_string(t.crossing);
  }
  out += to_char(t.sign);
  return out;
}

std::string to_string(const WindingParity& p) {
  if (p.modulus == 0) return std::to_string(p.value);
  return std::to_string(p.value) + " mod " + std::to_string(p.modulus);
}

DlDiagram::DlDiagram(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  struct Seen {
    int count = 0;
    bool under = false;
    bool over = false;
    Sign sign = Sign::Plus;
  };
  std::map<int, Seen> seen;
  for (const Token& t : tokens_) {
    if (!t.is_passage()) continue;
    if (t.crossing <= 0) throw ParseError("crossing ids must be positive");
    Seen& s = seen[t.crossing];
    if (s.count > 0 && s.sign != t.sign) {
      throw ParseError("crossing " + std::to_string(t.crossing) + " has passages with different signs");
    }
    s.sign = t.sign;
    ++s.count;
    (t.role == Role::Under ? s.under : s.over) = true;
  }
  std::map<int, int> relabel;
  for (const auto& [id, s] : seen) {
    if (s.count != 2) {
      throw ParseError("crossing " + std::to_string(id) + " appears " + std::to_string(s.count) +
                       " times");
    }
    if (!s.under || !s.over) {
      throw ParseError("crossing " + std::to_string(id) + " needs one Over and one Under passage");
    }
    relabel[id] = static_cast<int>(relabel.size()) + 1;
  }
  crossings_ = static_cast<int>(relabel.size());
  index_.assign(crossings_, Passages{0, 0});
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    Token& t = tokens_[i];
    if (!t.is_passage()) continue;
    t.crossing = relabel[t.crossing];
    (t.role == Role::Under ? index_[t.crossing - 1].under : index_[t.crossing - 1].over) = i;
  }
}

int DlDiagram::double_line_count() const {
  return static_cast<int>(
      std::count_if(tokens_.begin(), tokens_.end(), [](const Token& t) { return t.is_double_line(); }));
}

DlDiagram::Passages DlDiagram::passages(int crossing) const {
  if (crossing < 1 || crossing > crossings_) {
    throw std::out_of_range("unknown crossing " + std::to_string(crossing));
  }
  return index_[crossing - 1];
}

namespace {

bool parse_sign(std::string_view s, Sign& out) {
  if (s == "+") {
    out = Sign::Plus;
    return true;
  }
  if (s == "-" || s == "\xE2\x88\x92") {  // ASCII or U+2212
    out = Sign::Minus;
    return true;
  }
  return false;
}

Token parse_token(std::string_view word) {
  auto bad = [&] { return ParseError("malformed token '" + std::string(word) + "'"); };
  if (word.size() < 2) throw bad();
  Sign sign{};
  const char head = word.front();
  if (head == 'D') {
    if (!parse_sign(word.substr(1), sign)) throw bad();
    return Token::double_line(sign);
  }
  if (head != 'O' && head != 'U') throw bad();
  std::size_t digits = 1;
  while (digits < word.size() && word[digits] >= '0' && word[digits] <= '9') ++digits;
  if (digits == 1 || !parse_sign(word.substr(digits), sign)) throw bad();
  int id = 0;
  auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + digits, id);
  if (ec != std::errc{} || id <= 0) throw bad();
  return Token::passage(id, head == 'O' ? Role::Over : Role::Under, sign);
}

}  // namespace

DlDiagram parse(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) tokens.push_back(parse_token(text.substr(i, j - i)));
    i = j;
  }
  return DlDiagram(std::move(tokens));
}

std::string serialize(const DlDiagram& d) {
  std::string out;
  for (const Token& t : d.tokens()) {
    if (!out.empty()) out += ' ';
    out += to_string(t);
  }
  return out;
}

namespace {

int kind_rank(const Token& t) {
  if (t.is_double_line()) return 2;
  return t.role == Role::Under ? 0 : 1;
}

bool token_less(const Token& a, const Token& b) {
  if (kind_rank(a) != kind_rank(b)) return kind_rank(a) < kind_rank(b);
  if (a.crossing != b.crossing) return a.crossing < b.crossing;
  return value(a.sign) > value(b.sign);
}

std::vector<Token> rotated_relabeled(std::span<const Token> tokens, std::size_t start, int crossings) {
  std::vector<int> relabel(crossings + 1, 0);
  int next_id = 1;
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    Token t = tokens[(start + k) % tokens.size()];
    if (t.is_passage()) {
      if (relabel[t.crossing] == 0) relabel[t.crossing] = next_id++;
      t.crossing = relabel[t.crossing];
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

DlDiagram canonicalize(const DlDiagram& d) {
  if (d.empty()) return d;
  std::vector<Token> best = rotated_relabeled(d.tokens(), 0, d.crossing_count());
  for (std::size_t r = 1; r < d.size(); ++r) {
    std::vector<Token> cand = rotated_relabeled(d.tokens(), r, d.crossing_count());
    if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(), token_less)) {
      best = std::move(cand);
    }
  }
  return DlDiagram(std::move(best));
}

bool canonically_equal(const DlDiagram& a, const DlDiagram& b) {
  if (a.size() != b.size() || a.crossing_count() != b.crossing_count()) return false;
  return canonicalize(a) == canonicalize(b);
}

long degree(const DlDiagram& d) {
  long sum = 0;
  for (const Token& t : d.tokens()) {
    if (t.is_double_line()) sum += value(t.sign);
  }
  return sum;
}

long normalize_residue(long v, long modulus) {
  if (modulus == 0) return v;
  const long m = modulus < 0 ? -modulus : modulus;
  return ((v % m) + m) % m;
}

long raw_parity(const DlDiagram& d, int crossing) {
  const auto [under, over] = d.passages(crossing);
  long sum = 0;
  for (std::size_t i = d.next(under); i != over; i = d.next(i)) {
    if (d[i].is_double_line()) sum += value(d[i].sign);
  }
  return sum;
}

WindingParity winding_parity(const DlDiagram& d, int crossing) {
  const long deg = degree(d);
  const long m = deg < 0 ? -deg : deg;
  return WindingParity{normalize_residue(raw_parity(d, crossing), m), m};
}

std::vector<WindingParity> parities(const DlDiagram& d) {
  std::vector<WindingParity> out;
  out.reserve(d.crossing_count());
  for (int c = 1; c <= d.crossing_count(); ++c) out.push_back(winding_parity(d, c));
  return out;
}

std::vector<WindingParity> parity_profile(const DlDiagram& d) {
  auto out = parities(d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dlknot
