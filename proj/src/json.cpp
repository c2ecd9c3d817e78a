#include "dlknot/json.hpp"

namespace dlknot {

using nlohmann::json;

json parity_json(const WindingParity& p) { return {{"value", p.value}, {"modulus", p.modulus}}; }

json invariants_json(const DlDiagram& d, std::optional<std::size_t> essential) {
  json ps = json::array();
  for (const WindingParity& p : parities(d)) ps.push_back(parity_json(p));
  json out = {
      {"degree", degree(d)},
      {"parities", ps},
      {"crossings", d.crossing_count()},
      {"double_lines", d.double_line_count()},
  };
  if (essential) out["essential"] = *essential;
  return out;
}

json report_json(const EssentialReport& r) {
  return {
      {"subset", r.subset},
      {"cardinality", r.cardinality},
      {"residual_parities", r.residual_parities},
      {"essential", r.essential},
  };
}

json record_json(const InvariantRecord& r) {
  json ps = json::array();
  for (const WindingParity& p : r.parities) ps.push_back(parity_json(p));
  return {{"degree", r.degree}, {"parity_profile", ps}, {"essential", r.essential}};
}

namespace {

std::string sign_text(Sign s) { return std::string(1, to_char(s)); }

Sign sign_from(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw ParseError("bad sign '" + s + "'");
}

std::size_t site_arity(MoveKind k) {
  switch (k) {
    case MoveKind::R2Add:
    case MoveKind::R2Remove:
      return 2;
    case MoveKind::R3:
      return 3;
    case MoveKind::CrossingChange:
    case MoveKind::CrossingSliding:
      return 0;
    default:
      return 1;
  }
}

}  // namespace

json move_json(const MoveInstance& m) {
  json j = {{"kind", std::string(to_string(m.kind))}};
  json site = json::array();
  for (std::size_t i = 0; i < site_arity(m.kind); ++i) site.push_back(m.site[i]);
  j["site"] = site;
  switch (m.kind) {
    case MoveKind::R1Add:
      j["over_first"] = m.over_first;
      j["sign"] = sign_text(m.sign);
      break;
    case MoveKind::R2Add:
      j["over_first"] = m.over_first;
      j["parallel"] = m.parallel;
      j["sign"] = sign_text(m.sign);
      break;
    case MoveKind::DlPairAdd5:
      j["sign"] = sign_text(m.sign);
      break;
    case MoveKind::CrossingChange:
      j["crossing"] = m.crossing;
      break;
    case MoveKind::CrossingSliding:
      j["crossing"] = m.crossing;
      j["sign"] = sign_text(m.sign);
      break;
    default:
      break;
  }
  return j;
}

MoveInstance move_from_json(const json& j) {
  try {
    MoveInstance m;
    const auto kind = parse_move_kind(j.at("kind").get<std::string>());
    if (!kind) throw ParseError("unknown move kind " + j.at("kind").dump());
    m.kind = *kind;
    const auto& site = j.at("site");
    if (site.size() != site_arity(m.kind)) throw ParseError("wrong site length for " + j.at("kind").dump());
    for (std::size_t i = 0; i < site.size(); ++i) m.site[i] = site[i].get<std::size_t>();
    if (j.contains("over_first")) m.over_first = j["over_first"].get<bool>();
    if (j.contains("parallel")) m.parallel = j["parallel"].get<bool>();
    if (j.contains("sign")) m.sign = sign_from(j["sign"]);
    if (j.contains("crossing")) m.crossing = j["crossing"].get<int>();
    if (site_arity(m.kind) == 0 && m.crossing <= 0) throw ParseError("missing crossing");
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad move json: ") + e.what());
  }
}

json trace_json(const MoveTrace& t) {
  json steps = json::array();
  for (const MoveInstance& m : t.steps) steps.push_back(move_json(m));
  return {{"start", serialize(t.start)}, {"steps", steps}};
}

MoveTrace trace_from_json(const json& j) {
  try {
    MoveTrace t;
    t.start = parse(j.at("start").get<std::string>());
    for (const json& s : j.at("steps")) t.steps.push_back(move_from_json(s));
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad trace json: ") + e.what());
  }
}

json verdict_json(const SeparabilityVerdict& v, const std::optional<std::string>& certificate_path) {
  json out = {{"separable", v.separable}, {"obstruction", nullptr}, {"certificate", nullptr}};
  if (v.obstruction) {
    out["obstruction"] = {
        {"reason", v.obstruction->reason},
        {"crossing", v.obstruction->crossing ? json(*v.obstruction->crossing) : json(nullptr)},
        {"parity", v.obstruction->parity},
    };
  }
  if (v.certificate && certificate_path) out["certificate"] = *certificate_path;
  return out;
}

json search_json(const SearchResult& r) {
  json out = {
      {"found", r.found},
      {"explored", r.explored},
      {"max_len", r.max_len},
      {"max_moves", r.max_moves},
      {"trace", r.trace ? trace_json(*r.trace) : json(nullptr)},
  };
  if (!r.found) out["reason"] = r.reason;
  return out;
}

}  // namespace dlknot
