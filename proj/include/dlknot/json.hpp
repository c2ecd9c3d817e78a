// JSON views of the library types (nlohmann::json).

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dlknot/catalog.hpp"
#include "dlknot/diagram.hpp"
#include "dlknot/links.hpp"
#include "dlknot/moves.hpp"
#include "dlknot/projection.hpp"
#include "dlknot/search.hpp"
#include "dlknot/trace.hpp"

namespace dlknot {

nlohmann::json parity_json(const WindingParity& p);

/// {"degree", "parities", "crossings", "double_lines"} plus "essential"
/// when a count is given.
nlohmann::json invariants_json(const DlDiagram& d, std::optional<std::size_t> essential);

nlohmann::json report_json(const EssentialReport& r);
nlohmann::json record_json(const InvariantRecord& r);

nlohmann::json move_json(const MoveInstance& m);
MoveInstance move_from_json(const nlohmann::json& j);

nlohmann::json trace_json(const MoveTrace& t);
MoveTrace trace_from_json(const nlohmann::json& j);

/// "certificate" holds `certificate_path` when given, null otherwise.
nlohmann::json verdict_json(const SeparabilityVerdict& v, const std::optional<std::string>& certificate_path);

nlohmann::json search_json(const SearchResult& r);

}  // namespace dlknot
