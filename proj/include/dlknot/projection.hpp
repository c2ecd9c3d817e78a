// Winding-parity projection, double-line stripping, double-line elimination
// and important/essential double-line sets.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dlknot/diagram.hpp"
#include "dlknot/trace.hpp"

namespace dlknot {

/// Raised when a crossing parity (or the degree) rules out elimination.
/// crossing == 0 means the degree is nonzero and `parity` holds it.
class ParityPreconditionError : public PreconditionError {
 public:
  ParityPreconditionError(int crossing, long parity, const std::string& what)
      : PreconditionError(what), crossing_(crossing), parity_(parity) {}
  int crossing() const { return crossing_; }
  long parity() const { return parity_; }

 private:
  int crossing_;
  long parity_;
};

/// pr_wp. Requires degree 0. Crossings of negative parity i are changed
/// first (their parity becomes -i-1); then each crossing of parity i gets
/// i double lines of sign + right before its Under passage and i of sign -
/// right after it.
DlDiagram project_winding_parity(const DlDiagram& d);

/// proj: deletes every double line.
DlDiagram strip_double_lines(const DlDiagram& d);

struct EliminationCertificate {
  MoveTrace trace;
  DlDiagram result;
};

/// Removes all double lines of a degree 0 diagram whose parities lie in
/// {0, -1}. The trace uses CrossingChange, CrossingSliding and
/// DlPairCancel5 only. Throws ParityPreconditionError otherwise.
EliminationCertificate remove_double_lines(const DlDiagram& d);

struct EssentialReport {
  std::vector<std::size_t> subset;  // token positions in the input
  std::size_t cardinality = 0;
  std::vector<long> residual_parities;  // per crossing id, after deleting subset
  bool essential = false;
};

/// Important subsets in order of cardinality, then lexicographically by
/// position. Without a limit every important subset is listed, which is
/// exponential in the number of double lines.
std::vector<EssentialReport> important_subsets(const DlDiagram& d, std::optional<std::size_t> limit = std::nullopt);

/// Smallest cardinality of an important subset.
std::size_t essential_count(const DlDiagram& d);

/// Lexicographically first important subset of minimum cardinality.
EssentialReport first_essential_subset(const DlDiagram& d);

struct EssentialDiagram {
  DlDiagram diagram;
  MoveTrace trace;
  EssentialReport kept;                // the essential subset, positions in the input
  std::vector<int> changed_crossings;  // residual parity -1; carry a (D+, D-) pair
};

/// Keeps the first essential subset, removes every other double line, and
/// returns the base diagram decorated with that subset plus one (D+ U D-)
/// pair per crossing of residual parity -1.
EssentialDiagram essential_diagram(const DlDiagram& d);

}  // namespace dlknot
