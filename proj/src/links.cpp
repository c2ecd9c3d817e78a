#include "dlknot/links.hpp"

#include <sstream>

namespace dlknot {

SewedLink parse_sewed(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string rewritten;
  for (std::string word; in >> word;) {
    if (word.front() == 'D') throw ParseError("double lines are not part of a sewed link: '" + word + "'");
    if (word.front() == 'C') word.front() = 'D';
    rewritten += word;
    rewritten += ' ';
  }
  try {
    return SewedLink(parse(rewritten));
  } catch (const ParseError& e) {
    std::string msg = e.what();
    // Report clasp tokens the way they were written.
    for (std::size_t p = msg.find("'D"); p != std::string::npos; p = msg.find("'D", p + 1)) msg[p + 1] = 'C';
    throw ParseError(msg);
  }
}

std::string serialize(const SewedLink& l) {
  std::string out;
  for (const Token& t : l.body().tokens()) {
    if (!out.empty()) out += ' ';
    if (t.is_double_line()) {
      out += 'C';
      out += to_char(t.sign);
    } else {
      out += to_string(t);
    }
  }
  return out;
}

DlDiagram to_dl_diagram(const SewedLink& l) { return l.body(); }

long linking_number(const SewedLink& l) { return degree(l.body()); }

SewedLink make_L(long m, long n, Sign eps) { return SewedLink(one_crossing(m, n, eps)); }

SeparabilityVerdict separability_check(const SewedLink& l) {
  const DlDiagram d = to_dl_diagram(l);
  SeparabilityVerdict v;
  const long lk = degree(d);
  if (lk != 0) {
    v.obstruction = Obstruction{"linking_number", std::nullopt, lk};
    return v;
  }
  for (int c = 1; c <= d.crossing_count(); ++c) {
    const long p = raw_parity(d, c);
    if (p != 0 && p != -1) {
      v.obstruction = Obstruction{"winding_parity", c, p};
      return v;
    }
  }
  v.separable = true;
  v.certificate = remove_double_lines(d);
  return v;
}

std::vector<LFamilyRow> distinguish_L_family(long m_max) {
  if (m_max < 1) throw PreconditionError("distinguish_L_family needs m_max >= 1");
  std::vector<LFamilyRow> out;
  for (long m = 1; m <= m_max; ++m) out.push_back({m, invariant_record(to_dl_diagram(make_L(m, -m, Sign::Plus)))});
  return out;
}

}  // namespace dlknot
