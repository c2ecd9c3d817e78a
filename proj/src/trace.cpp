#include "dlknot/trace.hpp"

#include <sstream>

namespace dlknot {

DlDiagram replay(const MoveTrace& t) { return replay_states(t).back(); }

std::vector<DlDiagram> replay_states(const MoveTrace& t) {
  std::vector<DlDiagram> states{t.start};
  states.reserve(t.steps.size() + 1);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    try {
      states.push_back(apply(states.back(), t.steps[i]));
    } catch (const MoveError& e) {
      throw ReplayError(i, e.what());
    }
  }
  return states;
}

namespace {

std::string sign_word(Sign s) { return std::string(1, to_char(s)); }

struct Words {
  std::vector<std::string> w;
  std::string_view line;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad move line '" + std::string(line) + "': " + why);
  }
  void expect(std::size_t n) const {
    if (w.size() != n + 1) fail("expected " + std::to_string(n) + " arguments");
  }
  std::size_t index(std::size_t i) const {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(w[i], &used);
      if (used != w[i].size() || w[i].front() == '-') fail("not an index: " + w[i]);
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      fail("not an index: " + w[i]);
    }
  }
  int id(std::size_t i) const {
    const std::size_t v = index(i);
    if (v == 0 || v > 1'000'000'000) fail("bad crossing id: " + w[i]);
    return static_cast<int>(v);
  }
  Sign sign(std::size_t i) const {
    if (w[i] == "+") return Sign::Plus;
    if (w[i] == "-" || w[i] == "\xE2\x88\x92") return Sign::Minus;
    fail("not a sign: " + w[i]);
  }
  bool choice(std::size_t i, std::string_view yes, std::string_view no) const {
    if (w[i] == yes) return true;
    if (w[i] == no) return false;
    fail("expected " + std::string(yes) + " or " + std::string(no));
  }
};

}  // namespace

std::string format_move(const MoveInstance& m) {
  std::ostringstream out;
  out << to_string(m.kind);
  switch (m.kind) {
    case MoveKind::R1Add:
      out << ' ' << m.site[0] << ' ' << (m.over_first ? "OU" : "UO") << ' ' << sign_word(m.sign);
      break;
    case MoveKind::R1Remove:
    case MoveKind::DlSlide4:
    case MoveKind::DlPairCancel5:
      out << ' ' << m.site[0];
      break;
    case MoveKind::R2Add:
      out << ' ' << m.site[0] << ' ' << m.site[1] << ' ' << (m.over_first ? 'O' : 'U') << ' '
          << (m.parallel ? "par" : "anti") << ' ' << sign_word(m.sign);
      break;
    case MoveKind::R2Remove:
      out << ' ' << m.site[0] << ' ' << m.site[1];
      break;
    case MoveKind::R3:
      out << ' ' << m.site[0] << ' ' << m.site[1] << ' ' << m.site[2];
      break;
    case MoveKind::DlPairAdd5:
      out << ' ' << m.site[0] << ' ' << sign_word(m.sign);
      break;
    case MoveKind::CrossingChange:
      out << ' ' << m.crossing;
      break;
    case MoveKind::CrossingSliding:
      out << ' ' << m.crossing << ' ' << sign_word(m.sign);
      break;
  }
  return out.str();
}

MoveInstance parse_move(std::string_view line) {
  Words in;
  in.line = line;
  std::istringstream ss{std::string(line)};
  for (std::string word; ss >> word;) in.w.push_back(word);
  if (in.w.empty()) in.fail("empty");
  const auto kind = parse_move_kind(in.w[0]);
  if (!kind) in.fail("unknown move kind");
  MoveInstance m;
  m.kind = *kind;
  switch (m.kind) {
    case MoveKind::R1Add:
      in.expect(3);
      m.site[0] = in.index(1);
      m.over_first = in.choice(2, "OU", "UO");
      m.sign = in.sign(3);
      break;
    case MoveKind::R1Remove:
    case MoveKind::DlSlide4:
    case MoveKind::DlPairCancel5:
      in.expect(1);
      m.site[0] = in.index(1);
      break;
    case MoveKind::R2Add:
      in.expect(5);
      m.site[0] = in.index(1);
      m.site[1] = in.index(2);
      m.over_first = in.choice(3, "O", "U");
      m.parallel = in.choice(4, "par", "anti");
      m.sign = in.sign(5);
      break;
    case MoveKind::R2Remove:
      in.expect(2);
      m.site[0] = in.index(1);
      m.site[1] = in.index(2);
      break;
    case MoveKind::R3:
      in.expect(3);
      for (std::size_t i = 0; i < 3; ++i) m.site[i] = in.index(i + 1);
      break;
    case MoveKind::DlPairAdd5:
      in.expect(2);
      m.site[0] = in.index(1);
      m.sign = in.sign(2);
      break;
    case MoveKind::CrossingChange:
      in.expect(1);
      m.crossing = in.id(1);
      break;
    case MoveKind::CrossingSliding:
      in.expect(2);
      m.crossing = in.id(1);
      m.sign = in.sign(2);
      break;
  }
  return m;
}

std::string format_trace(const MoveTrace& t) {
  std::string out = "start";
  if (!t.start.empty()) out += ' ' + serialize(t.start);
  out += '\n';
  for (const MoveInstance& m : t.steps) out += format_move(m) + '\n';
  return out;
}

MoveTrace parse_trace(std::string_view text) {
  MoveTrace t;
  bool have_start = false;
  std::istringstream ss{std::string(text)};
  for (std::string line; std::getline(ss, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string_view body = std::string_view(line).substr(first);
    if (!have_start) {
      if (body.substr(0, 5) != "start" || (body.size() > 5 && body[5] != ' ' && body[5] != '\t' && body[5] != '\r')) {
        throw ParseError("trace must begin with a 'start' line");
      }
      t.start = parse(body.substr(5));
      have_start = true;
      continue;
    }
    t.steps.push_back(parse_move(body));
  }
  if (!have_start) throw ParseError("trace must begin with a 'start' line");
  return t;
}

}  // namespace dlknot
