// Two-component links K + T with T unknotted, given in sewed form: K's
// traversal with its self-crossing passages and one signed clasp marker
// ("C+" / "C-") per adjacent pair of K-T crossings.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlknot/catalog.hpp"
#include "dlknot/diagram.hpp"
#include "dlknot/projection.hpp"

namespace dlknot {

class SewedLink {
 public:
  SewedLink() = default;
  /// Double-line tokens of `body` are read as clasps.
  explicit SewedLink(DlDiagram body) : body_(std::move(body)) {}

  const DlDiagram& body() const { return body_; }
  int clasp_count() const { return body_.double_line_count(); }

 private:
  DlDiagram body_;
};

SewedLink parse_sewed(std::string_view text);
std::string serialize(const SewedLink& l);

/// Each clasp becomes a double line of the same sign.
DlDiagram to_dl_diagram(const SewedLink& l);
long linking_number(const SewedLink& l);

/// U1 C^m O1 C^n with crossing sign eps.
SewedLink make_L(long m, long n, Sign eps);

struct Obstruction {
  std::string reason;             // "linking_number" or "winding_parity"
  std::optional<int> crossing;    // empty for a linking-number obstruction
  long parity = 0;                // the parity, or lk for "linking_number"
};

struct SeparabilityVerdict {
  bool separable = false;
  std::optional<Obstruction> obstruction;
  std::optional<EliminationCertificate> certificate;
};

/// Sufficient criterion only: lk = 0 and every lk(gamma_c, T) in {0, -1}.
/// separable == false means the criterion is not met.
SeparabilityVerdict separability_check(const SewedLink& l);

struct LFamilyRow {
  long m = 0;
  InvariantRecord record;
};

/// Records of the converted L_(m,-m)+ for m = 1..m_max.
std::vector<LFamilyRow> distinguish_L_family(long m_max);

}  // namespace dlknot
