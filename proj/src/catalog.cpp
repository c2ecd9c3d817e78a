#include "dlknot/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "dlknot/moves.hpp"
#include "dlknot/projection.hpp"

namespace dlknot {

std::string to_string(const OneCrossing& k) {
  return "(" + std::to_string(k.m) + "," + std::to_string(k.n) + ")" + to_char(k.eps);
}

DlDiagram one_crossing(long m, long n, Sign eps) {
  std::vector<Token> t;
  t.push_back(Token::passage(1, Role::Under, eps));
  for (long i = 0; i < std::labs(m); ++i) t.push_back(Token::double_line(sign_of(m)));
  t.push_back(Token::passage(1, Role::Over, eps));
  for (long i = 0; i < std::labs(n); ++i) t.push_back(Token::double_line(sign_of(n)));
  return DlDiagram(std::move(t));
}

OneCrossing partner(const OneCrossing& k) { return {k.n - 1, k.m + 1, negate(k.eps)}; }

std::size_t essential_count_closed_form(long m, long n) {
  const long base = std::labs(m) + std::labs(n);
  return static_cast<std::size_t>(m <= -1 && n > 0 ? base - 2 : base);
}

InvariantRecord invariant_record(const DlDiagram& d) {
  return {degree(d), parity_profile(d), essential_count(d)};
}

std::vector<FamilyClass> degree_k_family(long k) {
  if (k < 3) throw PreconditionError("degree_k_family needs k >= 3");
  std::map<std::pair<InvariantRecord, InvariantRecord>, std::size_t> index;
  std::vector<FamilyClass> classes;
  std::vector<char> has_kink;
  for (long m = 0; m < k; ++m) {
    const OneCrossing knot{m, k - m, Sign::Plus};
    const OneCrossing other = partner(knot);
    const DlDiagram a = one_crossing(knot);
    const DlDiagram b = one_crossing(other);
    const InvariantRecord ra = invariant_record(a);
    const InvariantRecord rb = invariant_record(b);
    const auto key = ra < rb ? std::pair(ra, rb) : std::pair(rb, ra);
    auto [it, fresh] = index.try_emplace(key, classes.size());
    if (fresh) {
      classes.push_back({knot, ra, rb, {}});
      has_kink.push_back(0);
    }
    FamilyClass& cls = classes[it->second];
    cls.members.push_back(knot);
    const MoveKindSet r1{MoveKind::R1Remove};
    if (!enumerate_moves(a, r1).empty() || !enumerate_moves(b, r1).empty()) has_kink[it->second] = 1;
  }
  std::vector<FamilyClass> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!has_kink[i]) out.push_back(std::move(classes[i]));
  }
  return out;
}

std::vector<StretchRow> stretch_family(long m, long k, long s_max) {
  if (k < 3) throw PreconditionError("stretch_family needs k >= 3");
  if (m % k == 0) throw PreconditionError("stretch_family needs m not divisible by k");
  if (s_max < 1) throw PreconditionError("stretch_family needs s_max >= 1");
  std::vector<StretchRow> out;
  for (long s = 0; s <= s_max; ++s) {
    const OneCrossing knot{m + s * k, k - s * k - m, Sign::Plus};
    out.push_back({s, knot, essential_count(one_crossing(knot))});
  }
  return out;
}

}  // namespace dlknot
