#include "dlknot/moves.hpp"

#include <algorithm>
#include <array>

namespace dlknot {

namespace {

constexpr std::array<std::string_view, 10> kKindNames = {
    "R1Add", "R1Remove", "R2Add", "R2Remove", "R3",
    "DlSlide4", "DlPairAdd5", "DlPairCancel5", "CrossingChange", "CrossingSliding",
};

std::vector<Token> copy_tokens(const DlDiagram& d) { return {d.tokens().begin(), d.tokens().end()}; }

void erase_indices(std::vector<Token>& tokens, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), std::greater<>());
  for (std::size_t i : idx) tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(i));
}

void insert_at(std::vector<Token>& tokens, std::size_t at, std::initializer_list<Token> ts) {
  tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(at), ts);
}

[[noreturn]] void mismatch(const MoveInstance& m, const std::string& why) {
  throw MoveError(std::string(to_string(m.kind)) + ": " + why);
}

void require_crossing(const DlDiagram& d, const MoveInstance& m) {
  if (m.crossing < 1 || m.crossing > d.crossing_count()) {
    mismatch(m, "unknown crossing " + std::to_string(m.crossing));
  }
}

void require_gap(const DlDiagram& d, const MoveInstance& m, std::size_t gap) {
  if (gap > d.size()) mismatch(m, "gap " + std::to_string(gap) + " out of range");
}

// Indices of the pair starting at p; requires p < size and size >= 2.
std::array<std::size_t, 2> pair_at(const DlDiagram& d, const MoveInstance& m, std::size_t p) {
  if (d.size() < 2 || p >= d.size()) mismatch(m, "position " + std::to_string(p) + " out of range");
  return {p, d.next(p)};
}

bool is_opposite_pair(const Token& a, const Token& b) {
  return a.is_double_line() && b.is_double_line() && a.sign != b.sign;
}

// Double line of sign s may pass the adjacent passage (with a crossing change)
// for [O D+], [D+ U], [D- O], [U D-].
bool slide4_chirality_ok(const Token& dl, const Token& passage, bool dl_after) {
  return (dl.sign == Sign::Plus) == (dl_after == (passage.role == Role::Over));
}

void change_crossing_in_place(std::vector<Token>& tokens, int crossing) {
  for (Token& t : tokens) {
    if (t.is_passage() && t.crossing == crossing) {
      t.role = opposite(t.role);
      t.sign = negate(t.sign);
    }
  }
}

std::optional<R3Triangle> match_r3(const DlDiagram& d, std::size_t pt, std::size_t pm, std::size_t pb) {
  const std::size_t n = d.size();
  if (n < 6 || pt >= n || pm >= n || pb >= n) return std::nullopt;
  std::array<std::size_t, 6> idx = {pt, d.next(pt), pm, d.next(pm), pb, d.next(pb)};
  std::array<std::size_t, 6> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  for (std::size_t i : idx) {
    if (!d[i].is_passage()) return std::nullopt;
  }
  const Token& t0 = d[idx[0]];
  const Token& t1 = d[idx[1]];
  const Token& m0 = d[idx[2]];
  const Token& m1 = d[idx[3]];
  const Token& b0 = d[idx[4]];
  const Token& b1 = d[idx[5]];
  if (t0.role != Role::Over || t1.role != Role::Over || t0.crossing == t1.crossing) return std::nullopt;
  if (b0.role != Role::Under || b1.role != Role::Under || b0.crossing == b1.crossing) return std::nullopt;
  if (m0.role == m1.role) return std::nullopt;
  const Token& m_under = m0.role == Role::Under ? m0 : m1;
  const Token& m_over = m0.role == Role::Over ? m0 : m1;
  const int tm = m_under.crossing;
  const int mb = m_over.crossing;
  int tb = 0;
  if (tm == t0.crossing) {
    tb = t1.crossing;
  } else if (tm == t1.crossing) {
    tb = t0.crossing;
  } else {
    return std::nullopt;
  }
  if (mb == tm || mb == tb) return std::nullopt;
  const bool bottom_ok = (b0.crossing == tb && b1.crossing == mb) || (b0.crossing == mb && b1.crossing == tb);
  if (!bottom_ok) return std::nullopt;

  // Three oriented lines T, M, B: with reference cyclic order (T, M, B), o_X
  // is +1 when X meets its predecessor first. The valid states are
  // (s_tm, s_tb, s_mb) = lambda * (o_T o_M, -o_T o_B, o_M o_B).
  const int o_t = t0.crossing == tb ? 1 : -1;
  const int o_m = m0.crossing == tm ? 1 : -1;
  const int o_b = b0.crossing == mb ? 1 : -1;
  const int s_tm = value(d.crossing_sign(tm));
  const int s_tb = value(d.crossing_sign(tb));
  const int s_mb = value(d.crossing_sign(mb));
  if (s_tm * s_tb != -o_m * o_b || s_tm * s_mb != o_t * o_b) return std::nullopt;
  return R3Triangle{tm, tb, mb};
}

bool r2_remove_ok(const DlDiagram& d, std::size_t p, std::size_t q) {
  const std::size_t n = d.size();
  if (n < 4 || p >= n || q >= n) return false;
  std::array<std::size_t, 4> idx = {p, d.next(p), q, d.next(q)};
  std::array<std::size_t, 4> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i : idx) {
    if (!d[i].is_passage()) return false;
  }
  const Token& a0 = d[idx[0]];
  const Token& a1 = d[idx[1]];
  const Token& b0 = d[idx[2]];
  const Token& b1 = d[idx[3]];
  if (a0.crossing == a1.crossing || a0.role != a1.role) return false;
  if (b0.role != b1.role || b0.role == a0.role) return false;
  const bool same_pair = (b0.crossing == a0.crossing && b1.crossing == a1.crossing) ||
                         (b0.crossing == a1.crossing && b1.crossing == a0.crossing);
  return same_pair && a0.sign != a1.sign;
}

std::vector<std::size_t> insertion_gaps(const DlDiagram& d) {
  std::vector<std::size_t> gaps;
  const std::size_t n = std::max<std::size_t>(d.size(), 1);
  for (std::size_t g = 0; g < n; ++g) gaps.push_back(g);
  return gaps;
}

// Cancels the opposite pair sitting directly before (or after) the passage
// of `crossing` with `role`. The inverses below only call this where they
// have just put such a pair.
void cancel_flanking(DlDiagram& d, int crossing, Role role, bool before, std::vector<MoveInstance>& out) {
  const auto ps = d.passages(crossing);
  const std::size_t at = role == Role::Under ? ps.under : ps.over;
  const std::size_t first = before ? d.prev(d.prev(at)) : d.next(at);
  if (!is_opposite_pair(d[first], d[d.next(first)])) throw std::logic_error("invert: no pair next to passage");
  const MoveInstance m = pair_cancel(first);
  d = apply(d, m);
  out.push_back(m);
}

}  // namespace

std::string_view to_string(MoveKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<MoveKind> parse_move_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<MoveKind>(i);
  }
  return std::nullopt;
}

MoveKindSet parse_move_kinds(std::string_view list) {
  if (list == "all" || list.empty()) return MoveKindSet::all();
  MoveKindSet out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view name = list.substr(start, end - start);
    auto k = parse_move_kind(name);
    if (!k) throw std::invalid_argument("unknown move kind '" + std::string(name) + "'");
    out.insert(*k);
    start = end + 1;
  }
  return out;
}

MoveInstance crossing_change(int crossing) {
  MoveInstance m;
  m.kind = MoveKind::CrossingChange;
  m.crossing = crossing;
  return m;
}

MoveInstance crossing_sliding(int crossing, Sign direction) {
  MoveInstance m;
  m.kind = MoveKind::CrossingSliding;
  m.crossing = crossing;
  m.sign = direction;
  return m;
}

MoveInstance pair_cancel(std::size_t pos) {
  MoveInstance m;
  m.kind = MoveKind::DlPairCancel5;
  m.site[0] = pos;
  return m;
}

MoveInstance pair_add(std::size_t gap, Sign first) {
  MoveInstance m;
  m.kind = MoveKind::DlPairAdd5;
  m.site[0] = gap;
  m.sign = first;
  return m;
}

DlDiagram apply(const DlDiagram& d, const MoveInstance& m) {
  std::vector<Token> t = copy_tokens(d);
  const int fresh = d.crossing_count() + 1;
  switch (m.kind) {
    case MoveKind::R1Add: {
      require_gap(d, m, m.site[0]);
      const Token o = Token::passage(fresh, Role::Over, m.sign);
      const Token u = Token::passage(fresh, Role::Under, m.sign);
      if (m.over_first) {
        insert_at(t, m.site[0], {o, u});
      } else {
        insert_at(t, m.site[0], {u, o});
      }
      break;
    }
    case MoveKind::R1Remove: {
      const auto [p, q] = pair_at(d, m, m.site[0]);
      if (p == q || !d[p].is_passage() || !d[q].is_passage() || d[p].crossing != d[q].crossing) {
        mismatch(m, "no kink at " + std::to_string(p));
      }
      erase_indices(t, {p, q});
      break;
    }
    case MoveKind::R2Add: {
      const std::size_t g1 = m.site[0];
      const std::size_t g2 = m.site[1];
      require_gap(d, m, g2);
      if (g1 > g2) mismatch(m, "gaps must be ordered");
      const int x = fresh;
      const int y = fresh + 1;
      const Role ra = m.over_first ? Role::Over : Role::Under;
      const Role rb = opposite(ra);
      const Sign sx = m.sign;
      const Sign sy = negate(m.sign);
      const Token bx = Token::passage(x, rb, sx);
      const Token by = Token::passage(y, rb, sy);
      if (m.parallel) {
        insert_at(t, g2, {bx, by});
      } else {
        insert_at(t, g2, {by, bx});
      }
      insert_at(t, g1, {Token::passage(x, ra, sx), Token::passage(y, ra, sy)});
      break;
    }
    case MoveKind::R2Remove: {
      const std::size_t p = m.site[0];
      const std::size_t q = m.site[1];
      if (!r2_remove_ok(d, p, q)) mismatch(m, "no bigon at " + std::to_string(p) + "," + std::to_string(q));
      erase_indices(t, {p, d.next(p), q, d.next(q)});
      break;
    }
    case MoveKind::R3: {
      if (!match_r3(d, m.site[0], m.site[1], m.site[2])) mismatch(m, "no movable triangle at site");
      for (std::size_t p : m.site) std::swap(t[p], t[d.next(p)]);
      break;
    }
    case MoveKind::DlSlide4: {
      const auto [p, q] = pair_at(d, m, m.site[0]);
      const bool dl_after = d[p].is_passage() && d[q].is_double_line();
      const bool dl_before = d[p].is_double_line() && d[q].is_passage();
      if (!dl_after && !dl_before) mismatch(m, "needs a double line next to a passage");
      const Token& dl = dl_after ? d[q] : d[p];
      const Token& passage = dl_after ? d[p] : d[q];
      if (!slide4_chirality_ok(dl, passage, dl_after)) mismatch(m, "double line cannot pass this passage");
      std::swap(t[p], t[q]);
      change_crossing_in_place(t, passage.crossing);
      break;
    }
    case MoveKind::DlPairAdd5:
      require_gap(d, m, m.site[0]);
      insert_at(t, m.site[0], {Token::double_line(m.sign), Token::double_line(negate(m.sign))});
      break;
    case MoveKind::DlPairCancel5: {
      const auto [p, q] = pair_at(d, m, m.site[0]);
      if (p == q || !is_opposite_pair(d[p], d[q])) mismatch(m, "no opposite pair at " + std::to_string(p));
      erase_indices(t, {p, q});
      break;
    }
    case MoveKind::CrossingChange: {
      require_crossing(d, m);
      const std::size_t new_under = d.passages(m.crossing).over;
      change_crossing_in_place(t, m.crossing);
      insert_at(t, new_under + 1, {Token::double_line(Sign::Minus)});
      insert_at(t, new_under, {Token::double_line(Sign::Plus)});
      break;
    }
    case MoveKind::CrossingSliding: {
      require_crossing(d, m);
      const auto ps = d.passages(m.crossing);
      const Token before = Token::double_line(m.sign);
      const Token after = Token::double_line(negate(m.sign));
      for (std::size_t at : {std::max(ps.under, ps.over), std::min(ps.under, ps.over)}) {
        insert_at(t, at + 1, {after});
        insert_at(t, at, {before});
      }
      break;
    }
  }
  return DlDiagram(std::move(t));
}

bool is_applicable(const DlDiagram& d, const MoveInstance& m) {
  try {
    (void)apply(d, m);
    return true;
  } catch (const MoveError&) {
    return false;
  }
}

std::optional<R3Triangle> r3_triangle(const DlDiagram& d, const MoveInstance& m) {
  if (m.kind != MoveKind::R3) return std::nullopt;
  return match_r3(d, m.site[0], m.site[1], m.site[2]);
}

std::vector<MoveInstance> enumerate_moves(const DlDiagram& d, MoveKindSet kinds) {
  std::vector<MoveInstance> out;
  const std::size_t n = d.size();
  for (MoveKind kind : kAllMoveKinds) {
    if (!kinds.contains(kind)) continue;
    MoveInstance m;
    m.kind = kind;
    switch (kind) {
      case MoveKind::R1Add:
        for (std::size_t g : insertion_gaps(d)) {
          for (bool over_first : {false, true}) {
            for (Sign s : {Sign::Plus, Sign::Minus}) {
              m.site = {g, 0, 0};
              m.over_first = over_first;
              m.sign = s;
              out.push_back(m);
            }
          }
        }
        break;
      case MoveKind::R1Remove:
        // With two tokens both cyclic sites delete the same kink.
        for (std::size_t p = 0; p < (n == 2 ? 1 : n); ++p) {
          const std::size_t q = d.next(p);
          if (d[p].is_passage() && d[q].is_passage() && d[p].crossing == d[q].crossing) {
            m.site = {p, 0, 0};
            out.push_back(m);
          }
        }
        break;
      case MoveKind::R2Add: {
        const auto gaps = insertion_gaps(d);
        for (std::size_t i = 0; i < gaps.size(); ++i) {
          for (std::size_t j = i; j < gaps.size(); ++j) {
            for (bool over_first : {true, false}) {
              for (bool parallel : {true, false}) {
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                  m.site = {gaps[i], gaps[j], 0};
                  m.over_first = over_first;
                  m.parallel = parallel;
                  m.sign = s;
                  out.push_back(m);
                }
              }
            }
          }
        }
        break;
      }
      case MoveKind::R2Remove:
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t q = p + 1; q < n; ++q) {
            if (r2_remove_ok(d, p, q)) {
              m.site = {p, q, 0};
              out.push_back(m);
            }
          }
        }
        break;
      case MoveKind::R3: {
        std::vector<std::size_t> tops, middles, bottoms;
        for (std::size_t p = 0; p < n && n >= 6; ++p) {
          const Token& a = d[p];
          const Token& b = d[d.next(p)];
          if (!a.is_passage() || !b.is_passage() || a.crossing == b.crossing) continue;
          if (a.role == Role::Over && b.role == Role::Over) {
            tops.push_back(p);
          } else if (a.role == Role::Under && b.role == Role::Under) {
            bottoms.push_back(p);
          } else {
            middles.push_back(p);
          }
        }
        for (std::size_t pt : tops) {
          for (std::size_t pm : middles) {
            for (std::size_t pb : bottoms) {
              if (match_r3(d, pt, pm, pb)) {
                m.site = {pt, pm, pb};
                out.push_back(m);
              }
            }
          }
        }
        break;
      }
      case MoveKind::DlSlide4:
        for (std::size_t p = 0; p < n && n >= 2; ++p) {
          m.site = {p, 0, 0};
          const Token& a = d[p];
          const Token& b = d[d.next(p)];
          if (a.is_passage() && b.is_double_line() && slide4_chirality_ok(b, a, true)) out.push_back(m);
          if (a.is_double_line() && b.is_passage() && slide4_chirality_ok(a, b, false)) out.push_back(m);
        }
        break;
      case MoveKind::DlPairAdd5:
        for (std::size_t g : insertion_gaps(d)) {
          for (Sign s : {Sign::Plus, Sign::Minus}) {
            out.push_back(pair_add(g, s));
          }
        }
        break;
      case MoveKind::DlPairCancel5:
        for (std::size_t p = 0; p < n && n >= 2; ++p) {
          if (is_opposite_pair(d[p], d[d.next(p)])) out.push_back(pair_cancel(p));
        }
        break;
      case MoveKind::CrossingChange:
        for (int c = 1; c <= d.crossing_count(); ++c) out.push_back(crossing_change(c));
        break;
      case MoveKind::CrossingSliding:
        for (int c = 1; c <= d.crossing_count(); ++c) {
          out.push_back(crossing_sliding(c, Sign::Plus));
          out.push_back(crossing_sliding(c, Sign::Minus));
        }
        break;
    }
  }
  return out;
}

std::vector<MoveInstance> invert(const MoveInstance& m, const DlDiagram& context) {
  const std::size_t n = context.size();
  switch (m.kind) {
    case MoveKind::R1Add: {
      MoveInstance r;
      r.kind = MoveKind::R1Remove;
      r.site = {m.site[0], 0, 0};
      return {r};
    }
    case MoveKind::R1Remove: {
      const std::size_t p = m.site[0];
      MoveInstance r;
      r.kind = MoveKind::R1Add;
      r.site = {p + 1 < n ? p : n - 2, 0, 0};
      r.over_first = context[p].role == Role::Over;
      r.sign = context[p].sign;
      return {r};
    }
    case MoveKind::R2Add: {
      MoveInstance r;
      r.kind = MoveKind::R2Remove;
      r.site = {m.site[0], m.site[1] + 2, 0};
      return {r};
    }
    case MoveKind::R2Remove: {
      const std::array<std::size_t, 2> starts = {m.site[0], m.site[1]};
      std::array<std::size_t, 4> removed = {starts[0], context.next(starts[0]), starts[1], context.next(starts[1])};
      auto gap_of = [&](std::size_t s) {
        std::size_t g = 0;
        for (std::size_t i = 0; i < s; ++i) {
          if (std::find(removed.begin(), removed.end(), i) == removed.end()) ++g;
        }
        return g;
      };
      auto key = [&](std::size_t s) { return std::tuple(gap_of(s), s == n - 1, s); };
      std::size_t first = starts[0];
      std::size_t second = starts[1];
      if (key(second) < key(first)) std::swap(first, second);
      const Token& f0 = context[first];
      MoveInstance r;
      r.kind = MoveKind::R2Add;
      r.site = {gap_of(first), gap_of(second), 0};
      r.over_first = f0.role == Role::Over;
      r.parallel = context[second].crossing == f0.crossing;
      r.sign = f0.sign;
      return {r};
    }
    case MoveKind::R3:
    case MoveKind::DlSlide4:
      return {m};
    case MoveKind::DlPairAdd5:
      return {pair_cancel(m.site[0])};
    case MoveKind::DlPairCancel5: {
      const std::size_t p = m.site[0];
      return {pair_add(p + 1 < n ? p : n - 2, context[p].sign)};
    }
    case MoveKind::CrossingChange: {
      std::vector<MoveInstance> out;
      DlDiagram d = apply(context, m);
      const MoveInstance slide = crossing_sliding(m.crossing, Sign::Minus);
      d = apply(d, slide);
      out.push_back(slide);
      cancel_flanking(d, m.crossing, Role::Under, true, out);
      cancel_flanking(d, m.crossing, Role::Under, false, out);
      const MoveInstance change = crossing_change(m.crossing);
      d = apply(d, change);
      out.push_back(change);
      cancel_flanking(d, m.crossing, Role::Under, true, out);
      cancel_flanking(d, m.crossing, Role::Under, false, out);
      return out;
    }
    case MoveKind::CrossingSliding: {
      std::vector<MoveInstance> out;
      DlDiagram d = apply(context, m);
      const MoveInstance slide = crossing_sliding(m.crossing, negate(m.sign));
      d = apply(d, slide);
      out.push_back(slide);
      for (Role role : {Role::Under, Role::Over}) {
        cancel_flanking(d, m.crossing, role, true, out);
        cancel_flanking(d, m.crossing, role, false, out);
      }
      return out;
    }
  }
  return {};
}

std::vector<MoveInstance> merge_double_lines(DlDiagram& d) {
  std::vector<MoveInstance> out;
  for (;;) {
    bool found = false;
    for (std::size_t p = 0; p < d.size() && d.size() >= 2; ++p) {
      if (is_opposite_pair(d[p], d[d.next(p)])) {
        const MoveInstance m = pair_cancel(p);
        d = apply(d, m);
        out.push_back(m);
        found = true;
        break;
      }
    }
    if (!found) return out;
  }
}

}  // namespace dlknot
