// One-crossing knots (m,n)_eps: Under passage, |m| double lines of sign
// sgn(m), Over passage, |n| double lines of sign sgn(n).

#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "dlknot/diagram.hpp"

namespace dlknot {

struct OneCrossing {
  long m = 0;
  long n = 0;
  Sign eps = Sign::Plus;

  friend bool operator==(const OneCrossing&, const OneCrossing&) = default;
};

std::string to_string(const OneCrossing& k);

DlDiagram one_crossing(long m, long n, Sign eps);
inline DlDiagram one_crossing(const OneCrossing& k) { return one_crossing(k.m, k.n, k.eps); }

/// (n-1, m+1, -eps), related to (m, n, eps) by one crossing change.
OneCrossing partner(const OneCrossing& k);

std::size_t essential_count_closed_form(long m, long n);

/// Degree, sorted parity profile and essential count.
struct InvariantRecord {
  long degree = 0;
  std::vector<WindingParity> parities;
  std::size_t essential = 0;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
  friend auto operator<=>(const InvariantRecord&, const InvariantRecord&) = default;
};

InvariantRecord invariant_record(const DlDiagram& d);

struct FamilyClass {
  OneCrossing representative;
  InvariantRecord record;
  InvariantRecord partner_record;
  std::vector<OneCrossing> members;
};

/// Classes of (m, k-m)_+ for m = 0..k-1 keyed by the records of the knot and
/// its partner. Classes containing a kink, i.e. a diagram that reduces to
/// no crossings by R1Remove, are dropped. Requires k >= 3.
std::vector<FamilyClass> degree_k_family(long k);

struct StretchRow {
  long s = 0;
  OneCrossing knot;
  std::size_t essential = 0;
};

/// (m + s k, k - s k - m)_+ for s = 0..s_max with searched essential counts.
/// Requires k >= 3, m not divisible by k, s_max >= 1.
std::vector<StretchRow> stretch_family(long m, long k, long s_max);

}  // namespace dlknot
