// dlknot: command-line front end.
//
// Exit codes: 0 ok, 1 negative result (criterion not met, search failed,
// precondition of a computation not met), 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dlknot/catalog.hpp"
#include "dlknot/diagram.hpp"
#include "dlknot/json.hpp"
#include "dlknot/links.hpp"
#include "dlknot/moves.hpp"
#include "dlknot/projection.hpp"
#include "dlknot/search.hpp"
#include "dlknot/trace.hpp"

using namespace dlknot;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Global {
  bool json = false;
  std::string output;
};

class Out {
 public:
  explicit Out(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& operator()() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return read_all(in);
}

// Positional text, or stdin when it is absent or "-".
std::string input_text(const std::optional<std::string>& arg) {
  if (!arg || *arg == "-") return read_all(std::cin);
  return *arg;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string profile_text(const std::vector<WindingParity>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ps[i]);
  }
  return out + "}";
}

std::string positions_text(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

MoveTrace load_trace(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return trace_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad trace json: ") + e.what());
    }
  }
  return parse_trace(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot diagrams with double lines: invariants, moves, projections, catalog, links"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("-o,--output", g.output, "write the main output to a file");

  std::function<int()> run;
  auto fall = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  // invariants
  std::optional<std::string> diagram_arg;
  bool no_essential = false;
  auto* inv = fall(app.add_subcommand("invariants", "degree, parities and essential count"));
  inv->add_option("diagram", diagram_arg, "diagram text (stdin if omitted)");
  inv->add_flag("--no-essential", no_essential, "skip the essential-count search");
  inv->callback([&] {
    run = [&] {
      const DlDiagram d = parse(input_text(diagram_arg));
      std::optional<std::size_t> ess;
      if (!no_essential) ess = essential_count(d);
      Out out(g.output);
      if (g.json) {
        out() << invariants_json(d, ess).dump() << '\n';
      } else {
        out() << "degree\t" << degree(d) << '\n';
        out() << "crossings\t" << d.crossing_count() << '\n';
        out() << "double_lines\t" << d.double_line_count() << '\n';
        const auto ps = parities(d);
        for (std::size_t c = 0; c < ps.size(); ++c) out() << "parity " << c + 1 << '\t' << to_string(ps[c]) << '\n';
        if (ess) out() << "essential\t" << *ess << '\n';
      }
      return kOk;
    };
  });

  // project / strip
  auto* proj = fall(app.add_subcommand("project", "winding-parity projection (degree 0 only)"));
  proj->add_option("diagram", diagram_arg, "diagram text (stdin if omitted)");
  proj->callback([&] {
    run = [&] {
      const DlDiagram d = parse(input_text(diagram_arg));
      if (degree(d) != 0) {
        std::cerr << "project: degree is " << degree(d) << ", need 0\n";
        return kNegative;
      }
      const DlDiagram p = project_winding_parity(d);
      Out out(g.output);
      if (g.json) {
        out() << json{{"diagram", serialize(p)}, {"invariants", invariants_json(p, std::nullopt)}}.dump() << '\n';
      } else {
        out() << serialize(p) << '\n';
      }
      return kOk;
    };
  });
  auto* strip = fall(app.add_subcommand("strip", "delete every double line"));
  strip->add_option("diagram", diagram_arg, "diagram text (stdin if omitted)");
  strip->callback([&] {
    run = [&] {
      const DlDiagram p = strip_double_lines(parse(input_text(diagram_arg)));
      Out out(g.output);
      out() << (g.json ? json{{"diagram", serialize(p)}}.dump() : serialize(p)) << '\n';
      return kOk;
    };
  });

  // remove
  std::string trace_out;
  auto* rem = fall(app.add_subcommand("remove", "remove all double lines (degree 0, parities in {0,-1})"));
  rem->add_option("diagram", diagram_arg, "diagram text (stdin if omitted)");
  rem->add_option("--trace-out", trace_out, "also write the move trace to this file");
  rem->callback([&] {
    run = [&] {
      const DlDiagram d = parse(input_text(diagram_arg));
      EliminationCertificate cert;
      try {
        cert = remove_double_lines(d);
      } catch (const ParityPreconditionError& e) {
        std::cerr << "remove: " << e.what() << '\n';
        return kNegative;
      }
      if (!trace_out.empty()) write_file(trace_out, format_trace(cert.trace));
      Out out(g.output);
      if (g.json) {
        out() << json{{"result", serialize(cert.result)}, {"trace", trace_json(cert.trace)}}.dump() << '\n';
      } else {
        out() << format_trace(cert.trace) << "# result: " << serialize(cert.result) << '\n';
      }
      return kOk;
    };
  });

  // essential
  std::size_t list_limit = 0;
  auto* ess = fall(app.add_subcommand("essential", "essential double lines and an essential diagram"));
  ess->add_option("diagram", diagram_arg, "diagram text (stdin if omitted)");
  ess->add_option("--list", list_limit, "also list the first N important subsets");
  ess->add_option("--trace-out", trace_out, "also write the move trace to this file");
  ess->callback([&] {
    run = [&] {
      const DlDiagram d = parse(input_text(diagram_arg));
      const EssentialDiagram e = essential_diagram(d);
      std::vector<EssentialReport> listed;
      if (list_limit > 0) listed = important_subsets(d, list_limit);
      if (!trace_out.empty()) write_file(trace_out, format_trace(e.trace));
      Out out(g.output);
      if (g.json) {
        json j = {
            {"report", report_json(e.kept)},
            {"diagram", serialize(e.diagram)},
            {"changed_crossings", e.changed_crossings},
            {"trace", trace_json(e.trace)},
        };
        if (list_limit > 0) {
          j["important"] = json::array();
          for (const auto& r : listed) j["important"].push_back(report_json(r));
        }
        out() << j.dump() << '\n';
      } else {
        out() << "essential\t" << e.kept.cardinality << '\n';
        out() << "subset\t" << positions_text(e.kept.subset) << '\n';
        out() << "diagram\t" << serialize(e.diagram) << '\n';
        out() << "steps\t" << e.trace.steps.size() << '\n';
        for (const auto& r : listed) {
          out() << "important\t" << r.cardinality << '\t' << positions_text(r.subset) << (r.essential ? "\tessential" : "")
                << '\n';
        }
      }
      return kOk;
    };
  });

  // catalog / stretch
  long k = 3;
  auto* cat = fall(app.add_subcommand("catalog", "nontrivial one-crossing classes of degree k"));
  cat->add_option("-k,--k", k, "degree (>= 3)")->required();
  cat->callback([&] {
    run = [&] {
      const auto classes = degree_k_family(k);
      Out out(g.output);
      if (g.json) {
        json rows = json::array();
        for (const auto& c : classes) {
          json members = json::array();
          for (const auto& m : c.members) members.push_back(to_string(m));
          rows.push_back({{"m", c.representative.m},
                          {"n", c.representative.n},
                          {"eps", std::string(1, to_char(c.representative.eps))},
                          {"record", record_json(c.record)},
                          {"partner_record", record_json(c.partner_record)},
                          {"members", members}});
        }
        out() << json{{"k", k}, {"classes", rows}}.dump() << '\n';
      } else {
        out() << "m\tn\teps\tdegree\tparity_profile\tessential\n";
        for (const auto& c : classes) {
          out() << c.representative.m << '\t' << c.representative.n << '\t' << to_char(c.representative.eps) << '\t'
                << c.record.degree << '\t' << profile_text(c.record.parities) << '\t' << c.record.essential << '\n';
        }
      }
      return kOk;
    };
  });
  long sm = 1;
  long s_max = 3;
  auto* str = fall(app.add_subcommand("stretch", "essential counts of (m+sk, k-sk-m)_+"));
  str->add_option("-m,--m", sm, "m")->required();
  str->add_option("-k,--k", k, "degree (>= 3)")->required();
  str->add_option("--s-max", s_max, "largest s");
  str->callback([&] {
    run = [&] {
      const auto rows = stretch_family(sm, k, s_max);
      Out out(g.output);
      if (g.json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"s", r.s}, {"m", r.knot.m}, {"n", r.knot.n}, {"essential", r.essential}});
        out() << arr.dump() << '\n';
      } else {
        out() << "s\tm\tn\tessential\n";
        for (const auto& r : rows) out() << r.s << '\t' << r.knot.m << '\t' << r.knot.n << '\t' << r.essential << '\n';
      }
      return kOk;
    };
  });

  // links
  std::optional<std::string> link_arg;
  auto* lconv = fall(app.add_subcommand("link-convert", "sewed link to a diagram with double lines"));
  lconv->add_option("link", link_arg, "sewed link text (stdin if omitted)");
  lconv->callback([&] {
    run = [&] {
      const SewedLink l = parse_sewed(input_text(link_arg));
      const DlDiagram d = to_dl_diagram(l);
      Out out(g.output);
      if (g.json) {
        out() << json{{"diagram", serialize(d)}, {"linking_number", linking_number(l)}}.dump() << '\n';
      } else {
        out() << serialize(d) << '\n';
      }
      return kOk;
    };
  });
  std::string cert_out;
  auto* lsep = fall(app.add_subcommand("link-separable", "separability criterion with certificate"));
  lsep->add_option("link", link_arg, "sewed link text (stdin if omitted)");
  lsep->add_option("--certificate-out", cert_out, "write the certificate trace to this file");
  lsep->callback([&] {
    run = [&] {
      const SeparabilityVerdict v = separability_check(parse_sewed(input_text(link_arg)));
      std::optional<std::string> path;
      if (v.certificate && !cert_out.empty()) {
        write_file(cert_out, format_trace(v.certificate->trace));
        path = cert_out;
      }
      Out out(g.output);
      if (g.json) {
        out() << verdict_json(v, path).dump() << '\n';
      } else if (v.separable) {
        out() << "separable\t" << v.certificate->trace.steps.size() << " steps\t"
              << serialize(v.certificate->result) << '\n';
      } else {
        const Obstruction& o = *v.obstruction;
        out() << "criterion not met\t" << o.reason;
        if (o.crossing) out() << "\tcrossing " << *o.crossing;
        out() << '\t' << o.parity << '\n';
      }
      return v.separable ? kOk : kNegative;
    };
  });
  long m_max = 5;
  auto* lfam = fall(app.add_subcommand("link-family", "invariant records of L_(m,-m)+"));
  lfam->add_option("--m-max", m_max, "largest m");
  lfam->callback([&] {
    run = [&] {
      const auto rows = distinguish_L_family(m_max);
      Out out(g.output);
      if (g.json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"m", r.m}, {"record", record_json(r.record)}});
        out() << arr.dump() << '\n';
      } else {
        out() << "m\tdegree\tparity_profile\tessential\n";
        for (const auto& r : rows) {
          out() << r.m << '\t' << r.record.degree << '\t' << profile_text(r.record.parities) << '\t'
                << r.record.essential << '\n';
        }
      }
      return kOk;
    };
  });

  // search
  std::string from_arg, to_arg, kinds_arg = "all";
  SearchOptions sopt;
  auto* srch = fall(app.add_subcommand("search", "bounded breadth-first move search"));
  srch->add_option("from", from_arg, "start diagram")->required();
  srch->add_option("to", to_arg, "target diagram")->required();
  srch->add_option("--max-moves", sopt.max_moves, "largest number of moves");
  srch->add_option("--max-len", sopt.max_len, "largest token count of visited diagrams");
  srch->add_option("--max-nodes", sopt.max_nodes, "largest number of visited diagrams");
  srch->add_option("--kinds", kinds_arg, "comma-separated move kinds, or all");
  srch->add_flag("--prune-essential", sopt.prune_essential, "refuse early when essential counts differ");
  srch->callback([&] {
    run = [&] {
      sopt.kinds = parse_move_kinds(kinds_arg);
      const SearchResult r = search(parse(from_arg), parse(to_arg), sopt);
      Out out(g.output);
      if (g.json) {
        out() << search_json(r).dump() << '\n';
      } else if (r.found) {
        out() << format_trace(*r.trace) << "# found after exploring " << r.explored << '\n';
      } else {
        out() << "# not found (" << r.reason << ") after exploring " << r.explored << '\n';
      }
      return r.found ? kOk : kNegative;
    };
  });

  // apply / replay
  std::vector<std::string> move_args;
  bool list_moves = false;
  auto* app_cmd = fall(app.add_subcommand("apply", "apply moves, or list the applicable ones"));
  app_cmd->add_option("diagram", diagram_arg, "diagram text")->required();
  app_cmd->add_option("moves", move_args, "moves in trace syntax, e.g. \"CrossingChange 1\"");
  app_cmd->add_flag("--list", list_moves, "list applicable moves instead");
  app_cmd->add_option("--kinds", kinds_arg, "kinds for --list");
  app_cmd->callback([&] {
    run = [&] {
      MoveTrace t{parse(diagram_arg.value_or("")), {}};
      Out out(g.output);
      if (list_moves) {
        const auto moves = enumerate_moves(t.start, parse_move_kinds(kinds_arg));
        if (g.json) {
          json arr = json::array();
          for (const auto& m : moves) arr.push_back(move_json(m));
          out() << arr.dump() << '\n';
        } else {
          for (const auto& m : moves) out() << format_move(m) << '\n';
        }
        return kOk;
      }
      for (const auto& a : move_args) t.steps.push_back(parse_move(a));
      const DlDiagram d = replay(t);
      if (g.json) {
        out() << json{{"diagram", serialize(d)}, {"trace", trace_json(t)}}.dump() << '\n';
      } else {
        out() << serialize(d) << '\n';
      }
      return kOk;
    };
  });
  std::string trace_file;
  auto* rep = fall(app.add_subcommand("replay", "replay a trace file (text or JSON)"));
  rep->add_option("trace", trace_file, "trace file (stdin if omitted)");
  rep->callback([&] {
    run = [&] {
      const std::string text = trace_file.empty() || trace_file == "-" ? read_all(std::cin) : read_file(trace_file);
      const DlDiagram d = replay(load_trace(text));
      Out out(g.output);
      out() << (g.json ? json{{"diagram", serialize(d)}}.dump() : serialize(d)) << '\n';
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return run();
  } catch (const ReplayError& e) {
    std::cerr << "replay failed at " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {  // ParseError, MoveError, PreconditionError
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
