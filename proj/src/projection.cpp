#include "dlknot/projection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dlknot {

DlDiagram project_winding_parity(const DlDiagram& d) {
  const long deg = degree(d);
  if (deg != 0) throw ParityPreconditionError(0, deg, "pr_wp needs degree 0, got " + std::to_string(deg));
  DlDiagram cur = d;
  for (int c = 1; c <= cur.crossing_count(); ++c) {
    if (raw_parity(cur, c) < 0) cur = apply(cur, crossing_change(c));
  }
  std::vector<long> amount(cur.crossing_count() + 1, 0);
  for (int c = 1; c <= cur.crossing_count(); ++c) amount[c] = raw_parity(cur, c);
  std::vector<Token> out;
  for (const Token& t : cur.tokens()) {
    const long a = t.is_passage() && t.role == Role::Under ? amount[t.crossing] : 0;
    for (long i = 0; i < a; ++i) out.push_back(Token::double_line(Sign::Plus));
    out.push_back(t);
    for (long i = 0; i < a; ++i) out.push_back(Token::double_line(Sign::Minus));
  }
  return DlDiagram(std::move(out));
}

DlDiagram strip_double_lines(const DlDiagram& d) {
  std::vector<Token> out;
  for (const Token& t : d.tokens()) {
    if (t.is_passage()) out.push_back(t);
  }
  return DlDiagram(std::move(out));
}

namespace {

// A diagram with one flag per token; flagged double lines are never touched
// by the walk below. Every change goes through apply() and is recorded.
class Tracked {
 public:
  Tracked(DlDiagram d, std::vector<char> keep) : d_(std::move(d)), keep_(std::move(keep)) { trace_.start = d_; }

  const DlDiagram& diagram() const { return d_; }
  bool kept(std::size_t i) const { return keep_[i] != 0; }
  MoveTrace& trace() { return trace_; }

  void step(const MoveInstance& m, std::array<char, 2> added = {0, 0}) {
    auto ins = [&](std::size_t at, char v) { keep_.insert(keep_.begin() + static_cast<std::ptrdiff_t>(at), v); };
    DlDiagram next = apply(d_, m);
    switch (m.kind) {
      case MoveKind::DlPairCancel5: {
        const std::size_t p = m.site[0];
        const std::size_t q = d_.next(p);
        keep_.erase(keep_.begin() + static_cast<std::ptrdiff_t>(std::max(p, q)));
        keep_.erase(keep_.begin() + static_cast<std::ptrdiff_t>(std::min(p, q)));
        break;
      }
      case MoveKind::DlPairAdd5:
        ins(m.site[0], added[1]);
        ins(m.site[0], added[0]);
        break;
      case MoveKind::CrossingChange: {
        const std::size_t o = d_.passages(m.crossing).over;
        ins(o + 1, added[1]);
        ins(o, added[0]);
        break;
      }
      case MoveKind::CrossingSliding: {
        const auto ps = d_.passages(m.crossing);
        for (std::size_t at : {std::max(ps.under, ps.over), std::min(ps.under, ps.over)}) {
          ins(at + 1, 0);
          ins(at, 0);
        }
        break;
      }
      default:
        throw std::logic_error("unsupported move in elimination");
    }
    d_ = std::move(next);
    trace_.steps.push_back(m);
  }

  void swap_flags(std::size_t i, std::size_t j) { std::swap(keep_[i], keep_[j]); }

 private:
  DlDiagram d_;
  std::vector<char> keep_;
  MoveTrace trace_;
};

struct Stop {
  int crossing;
  Role role;
};

std::size_t locate(const DlDiagram& d, Stop s) {
  const auto ps = d.passages(s.crossing);
  return s.role == Role::Under ? ps.under : ps.over;
}

// Token indices strictly between two passages, walking forward. With
// from == nullopt the whole (passage-free) cycle is returned.
std::vector<std::size_t> arc_indices(const DlDiagram& d, std::optional<Stop> from, std::optional<Stop> to) {
  std::vector<std::size_t> out;
  if (!from) {
    for (std::size_t i = 0; i < d.size(); ++i) out.push_back(i);
    return out;
  }
  const std::size_t a = locate(d, *from);
  const std::size_t b = locate(d, *to);
  for (std::size_t i = d.next(a); i != b; i = d.next(i)) out.push_back(i);
  return out;
}

long free_sum(const Tracked& t, const std::vector<std::size_t>& arc) {
  long s = 0;
  for (std::size_t i : arc) {
    if (!t.kept(i)) s += value(t.diagram()[i].sign);
  }
  return s;
}

// Cancels every unflagged double line on the arc. Flagged ones in the way
// are passed: equal signs by swapping flags, opposite signs by a
// cancel/re-add pair that reverses their order.
void clear_arc(Tracked& t, std::optional<Stop> from, std::optional<Stop> to) {
  if (free_sum(t, arc_indices(t.diagram(), from, to)) != 0) {
    throw std::logic_error("elimination walk reached an arc with nonzero sum");
  }
  for (;;) {
    const DlDiagram& d = t.diagram();
    const auto arc = arc_indices(d, from, to);
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < arc.size(); ++k) {
      if (!t.kept(arc[k])) free.push_back(k);
    }
    if (free.empty()) return;
    bool done = false;
    for (std::size_t f = 0; f + 1 < free.size() && !done; ++f) {
      const std::size_t k1 = free[f];
      const std::size_t k2 = free[f + 1];
      if (d[arc[k1]].sign == d[arc[k2]].sign) continue;
      if (k2 == k1 + 1) {
        t.step(pair_cancel(arc[k1]));
      } else {
        const std::size_t p = arc[k1];
        const Sign blocker = d[arc[k1 + 1]].sign;
        if (blocker == d[p].sign) {
          t.swap_flags(arc[k1], arc[k1 + 1]);
        } else {
          const std::size_t n = d.size();
          const std::size_t gap = p + 1 < n ? p : n - 2;
          t.step(pair_cancel(p));
          t.step(pair_add(gap, blocker), {1, 0});
        }
      }
      done = true;
    }
    if (!done) throw std::logic_error("no cancellable pair on a zero-sum arc");
  }
}

// One traversal from the Under passage of the first crossing met in token
// order. Each crossing gets its sliding at the first passage that reaches
// it, which zeroes the incoming arc; later arcs then sum to zero as well.
void walk(Tracked& t) {
  const DlDiagram& d0 = t.diagram();
  if (d0.crossing_count() == 0) {
    clear_arc(t, std::nullopt, std::nullopt);
    return;
  }
  std::size_t first = 0;
  while (!d0[first].is_passage()) ++first;
  const std::size_t start = d0.passages(d0[first].crossing).under;
  std::vector<Stop> stops;
  for (std::size_t k = 0, i = start; k < d0.size(); ++k, i = d0.next(i)) {
    if (d0[i].is_passage()) stops.push_back({d0[i].crossing, d0[i].role});
  }
  std::vector<char> visited(d0.crossing_count() + 1, 0);
  visited[stops[0].crossing] = 1;
  for (std::size_t k = 1; k <= stops.size(); ++k) {
    const Stop prev = stops[k - 1];
    const Stop here = stops[k % stops.size()];
    if (!visited[here.crossing]) {
      const long sigma = free_sum(t, arc_indices(t.diagram(), prev, here));
      const MoveInstance slide = crossing_sliding(here.crossing, sigma > 0 ? Sign::Minus : Sign::Plus);
      for (long r = 0; r < std::abs(sigma); ++r) t.step(slide);
      visited[here.crossing] = 1;
    }
    clear_arc(t, prev, here);
  }
}

// Double lines grouped by sign and by which halves gamma_c contain them.
struct SearchSpace {
  struct Class {
    Sign sign;
    std::vector<char> member;  // per crossing id - 1
    std::vector<std::size_t> positions;
  };
  std::vector<Class> classes;
  std::vector<int> class_of;  // per token, -1 for passages
  std::vector<long> raw;      // per crossing id - 1
  long degree = 0;
  std::size_t total = 0;
};

SearchSpace build_space(const DlDiagram& d) {
  SearchSpace sp;
  const int n = d.crossing_count();
  sp.degree = degree(d);
  sp.class_of.assign(d.size(), -1);
  std::vector<std::vector<char>> member(d.size(), std::vector<char>(n, 0));
  for (int c = 1; c <= n; ++c) {
    sp.raw.push_back(raw_parity(d, c));
    const auto ps = d.passages(c);
    for (std::size_t i = d.next(ps.under); i != ps.over; i = d.next(i)) member[i][c - 1] = 1;
  }
  std::map<std::pair<int, std::vector<char>>, int> index;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_double_line()) continue;
    auto key = std::make_pair(value(d[i].sign), member[i]);
    auto [it, fresh] = index.try_emplace(key, static_cast<int>(sp.classes.size()));
    if (fresh) sp.classes.push_back({d[i].sign, member[i], {}});
    sp.classes[it->second].positions.push_back(i);
    sp.class_of[i] = it->second;
    ++sp.total;
  }
  return sp;
}

std::vector<long> residual(const SearchSpace& sp, const std::vector<std::size_t>& counts) {
  std::vector<long> r = sp.raw;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const auto& cl = sp.classes[j];
    const long contrib = value(cl.sign) * static_cast<long>(counts[j]);
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (cl.member[c]) r[c] -= contrib;
    }
  }
  return r;
}

bool feasible(const SearchSpace& sp, const std::vector<std::size_t>& counts) {
  long sum = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) sum += value(sp.classes[j].sign) * static_cast<long>(counts[j]);
  if (sum != sp.degree) return false;
  for (long r : residual(sp, counts)) {
    if (r != 0 && r != -1) return false;
  }
  return true;
}

// Visits the class-count vectors of total `k` that satisfy the importance
// condition; stops early when `visit` returns true.
bool for_each_vector(const SearchSpace& sp, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t m = sp.classes.size();
  std::vector<std::size_t> suffix_size(m + 1, 0);
  std::vector<long> suffix_pos(m + 1, 0);
  std::vector<long> suffix_neg(m + 1, 0);
  for (std::size_t j = m; j-- > 0;) {
    const std::size_t s = sp.classes[j].positions.size();
    suffix_size[j] = suffix_size[j + 1] + s;
    suffix_pos[j] = suffix_pos[j + 1] + (sp.classes[j].sign == Sign::Plus ? static_cast<long>(s) : 0);
    suffix_neg[j] = suffix_neg[j + 1] + (sp.classes[j].sign == Sign::Minus ? static_cast<long>(s) : 0);
  }
  std::vector<std::size_t> counts(m, 0);
  std::function<bool(std::size_t, std::size_t, long)> rec = [&](std::size_t j, std::size_t budget, long sum) {
    if (budget > suffix_size[j]) return false;
    const long need = sp.degree - sum;
    if (need > suffix_pos[j] || -need > suffix_neg[j]) return false;
    if (j == m) return budget == 0 && feasible(sp, counts) && visit(counts);
    const std::size_t cap = std::min(budget, sp.classes[j].positions.size());
    for (std::size_t c = 0; c <= cap; ++c) {
      counts[j] = c;
      if (rec(j + 1, budget - c, sum + value(sp.classes[j].sign) * static_cast<long>(c))) return true;
    }
    counts[j] = 0;
    return false;
  };
  return rec(0, k, 0);
}

std::vector<std::vector<std::size_t>> vectors_at(const SearchSpace& sp, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for_each_vector(sp, k, [&](const std::vector<std::size_t>& v) {
    out.push_back(v);
    return false;
  });
  return out;
}

std::size_t min_cardinality(const SearchSpace& sp) {
  for (std::size_t k = 0; k <= sp.total; ++k) {
    if (for_each_vector(sp, k, [](const std::vector<std::size_t>&) { return true; })) return k;
  }
  throw std::logic_error("full double-line set is always important");
}

std::vector<std::size_t> lex_first(const SearchSpace& sp, const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const auto& pos = sp.classes[j].positions;
    out.insert(out.end(), pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(counts[j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EssentialReport make_report(const SearchSpace& sp, std::vector<std::size_t> subset, std::size_t min_k) {
  std::vector<std::size_t> counts(sp.classes.size(), 0);
  for (std::size_t p : subset) ++counts[sp.class_of[p]];
  EssentialReport r;
  r.cardinality = subset.size();
  r.subset = std::move(subset);
  r.residual_parities = residual(sp, counts);
  r.essential = r.cardinality == min_k;
  return r;
}

}  // namespace

EliminationCertificate remove_double_lines(const DlDiagram& d) {
  const long deg = degree(d);
  if (deg != 0) {
    throw ParityPreconditionError(0, deg, "double-line removal needs degree 0, got " + std::to_string(deg));
  }
  for (int c = 1; c <= d.crossing_count(); ++c) {
    const long p = raw_parity(d, c);
    if (p != 0 && p != -1) {
      throw ParityPreconditionError(c, p, "crossing " + std::to_string(c) + " has parity " + std::to_string(p));
    }
  }
  Tracked t(d, std::vector<char>(d.size(), 0));
  for (int c = 1; c <= d.crossing_count(); ++c) {
    if (raw_parity(d, c) == -1) t.step(crossing_change(c));
  }
  walk(t);
  return {std::move(t.trace()), t.diagram()};
}

std::vector<EssentialReport> important_subsets(const DlDiagram& d, std::optional<std::size_t> limit) {
  const SearchSpace sp = build_space(d);
  std::vector<EssentialReport> out;
  if (limit && *limit == 0) return out;
  const std::size_t min_k = min_cardinality(sp);
  std::vector<std::size_t> dls;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_double_line()) dls.push_back(i);
  }
  const std::size_t m = sp.classes.size();
  // remaining[i][j]: class-j double lines among dls[i..]
  std::vector<std::vector<std::size_t>> remaining(dls.size() + 1, std::vector<std::size_t>(m, 0));
  for (std::size_t i = dls.size(); i-- > 0;) {
    remaining[i] = remaining[i + 1];
    ++remaining[i][sp.class_of[dls[i]]];
  }
  for (std::size_t k = min_k; k <= sp.total; ++k) {
    const auto vecs = vectors_at(sp, k);
    if (vecs.empty()) continue;
    std::vector<std::size_t> chosen_counts(m, 0);
    std::vector<std::size_t> chosen;
    auto compatible = [&](std::size_t i) {
      for (const auto& v : vecs) {
        bool ok = true;
        for (std::size_t j = 0; j < m && ok; ++j) {
          ok = chosen_counts[j] <= v[j] && v[j] <= chosen_counts[j] + remaining[i][j];
        }
        if (ok) return true;
      }
      return false;
    };
    // Include-first depth-first search lists subsets in lexicographic order.
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      if (!compatible(i)) return false;
      if (chosen.size() == k) {
        out.push_back(make_report(sp, chosen, min_k));
        return limit && out.size() >= *limit;
      }
      if (i == dls.size()) return false;
      const int cl = sp.class_of[dls[i]];
      chosen.push_back(dls[i]);
      ++chosen_counts[cl];
      if (rec(i + 1)) return true;
      chosen.pop_back();
      --chosen_counts[cl];
      return rec(i + 1);
    };
    if (rec(0)) return out;
  }
  return out;
}

std::size_t essential_count(const DlDiagram& d) { return min_cardinality(build_space(d)); }

EssentialReport first_essential_subset(const DlDiagram& d) {
  const SearchSpace sp = build_space(d);
  const std::size_t k = min_cardinality(sp);
  std::optional<std::vector<std::size_t>> best;
  for (const auto& v : vectors_at(sp, k)) {
    auto cand = lex_first(sp, v);
    if (!best || cand < *best) best = std::move(cand);
  }
  return make_report(sp, *best, k);
}

EssentialDiagram essential_diagram(const DlDiagram& d) {
  EssentialDiagram out;
  out.kept = first_essential_subset(d);
  std::vector<char> keep(d.size(), 0);
  for (std::size_t p : out.kept.subset) keep[p] = 1;
  for (std::size_t c = 0; c < out.kept.residual_parities.size(); ++c) {
    if (out.kept.residual_parities[c] == -1) out.changed_crossings.push_back(static_cast<int>(c) + 1);
  }
  Tracked t(d, std::move(keep));
  for (int c : out.changed_crossings) t.step(crossing_change(c));
  walk(t);
  for (int c : out.changed_crossings) t.step(crossing_change(c), {1, 1});
  out.diagram = t.diagram();
  out.trace = std::move(t.trace());
  return out;
}

}  // namespace dlknot
