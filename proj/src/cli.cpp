#include "inoue/cli.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "inoue/error.hpp"
#include "inoue/surface.hpp"

namespace inoue::cli {

namespace {

using nlohmann::json;

struct Usage {
  std::string message;
};

struct Options {
  bool json = false;
  int m = 0;
  std::string m_range;
  std::string kind;
  std::string stage = "post";
  std::int64_t l = 0;
  std::int64_t j = 0;
  std::int64_t root = 0;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Usage{"--m-range expects A..B"};
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &p1), hi = std::stoi(b, &p2);
    if (p1 != a.size() || p2 != b.size()) throw Usage{"--m-range expects integers A..B"};
    if (lo < 1 || hi < lo) throw Usage{"--m-range needs 1 <= A <= B"};
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Usage{"--m-range expects integers A..B"};
  }
}

void need_m(int m) {
  if (m < 1) throw Usage{"--m must be at least 1"};
}

QuotientReport make_report(const Options& o) {
  need_m(o.m);
  const std::string& k = o.kind;
  if (k == "free") {
    if (o.root < 0 || o.root >= o.m) throw Usage{"free: --root must lie in 0..m-1"};
    const Surface s = Surface::standard(o.m);
    return quotient_free_cyclic(s, Scalar::root_of_unity(s.ctx, o.m, o.root) * s.beta());
  }
  if (k == "torus") {
    if (o.l < 1) throw Usage{"torus: --l must be at least 1"};
    return quotient_by_torus_cyclic(Surface::standard(o.m), o.l);
  }
  if (k == "mixed") {
    if (o.l < 1 || o.m % o.l != 0) throw Usage{"mixed: --l must divide --m"};
    if (o.j < 0 || o.j >= o.m) throw Usage{"mixed: --j must lie in 0..m-1"};
    return quotient_by_mixed_cyclic(Surface::standard(o.m), o.j, o.l);
  }
  if (k == "involution") {
    if (o.m % 2 != 0) throw Usage{"involution: --m must be even"};
    return quotient_involution(Surface::standard(o.m));
  }
  if (k == "cover") {
    if (o.l < 2) throw Usage{"cover: --l must be at least 2"};
    if (o.root < 0 || o.root >= o.l) throw Usage{"cover: --root must lie in 0..l-1"};
    return build_branched_cover(branched_cover_base(o.m, static_cast<int>(o.l)), o.l, o.root);
  }
  throw Usage{"unknown --kind " + k};
}

std::string text_checks(const CheckList& checks) {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.anchor << "): " << c.details
       << "\n";
  return os.str();
}

std::string cycle_text(const std::vector<CycleCurve>& c) {
  std::string out;
  for (const auto& x : c) out += " " + x.label + ":" + std::to_string(x.self_intersection);
  return out;
}

std::string report_text(const QuotientReport& r) {
  std::ostringstream os;
  os << r.kind << " quotient of " << r.input_label << " by " << r.subgroup << "\n";
  if (!r.fixed_components.empty()) {
    os << "  pointwise fixed components:";
    for (int i : r.fixed_components) os << " C" << i;
    os << "\n";
  }
  os << "  E translation: " << r.e_translation << (r.e_pointwise_fixed ? " (E fixed)" : "")
     << "\n";
  os << "  singular points:";
  if (r.singularities.empty()) os << " none";
  for (const auto& s : r.singularities) os << " " << s.type() << "@p" << s.node;
  os << "\n  resolved cycle (" << r.resolved_cycle.size() << "):" << cycle_text(r.resolved_cycle)
     << "\n  blow-downs:";
  if (r.contractions.empty()) os << " none";
  for (const auto& c : r.contractions) os << " " << c;
  os << "\n  final cycle (" << r.final_cycle.size() << "):" << cycle_text(r.final_cycle)
     << "\n  E'^2 = " << r.elliptic_self_int << "\n  ramification:";
  for (const auto& x : r.ramification) os << " " << x.divisor << "=" << x.index;
  os << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  os << "  result: " << r.result_label << "\n";
  return os.str();
}

std::vector<std::string> failing(const CheckList& checks) {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

CheckList verify_point(int m) {
  const Surface s = Surface::standard(m);
  CheckList all;
  const std::string p = "m=" + std::to_string(m) + ": ";
  for (CheckList part : {verify_relations(s.ctx, 20, 1), build_H(s).checks,
                         verify_theorem_1_1(s), verify_corollary_1_2(s), verify_remarks(s),
                         verify_homomorphisms(s)}) {
    for (auto& c : part) c.name = p + c.name;
    append(all, part);
  }
  return all;
}

Result do_verify(const Options& o) {
  int lo = o.m, hi = o.m;
  if (!o.m_range.empty()) {
    if (o.m != 0) throw Usage{"verify: give --m or --m-range, not both"};
    std::tie(lo, hi) = parse_range(o.m_range);
  } else {
    need_m(o.m);
  }
  std::vector<std::future<CheckList>> jobs;
  for (int m = lo; m <= hi; ++m) jobs.push_back(std::async(std::launch::async, verify_point, m));
  CheckList all;
  for (auto& f : jobs) append(all, f.get());
  json params = o.m_range.empty() ? json{{"m", o.m}} : json{{"m_range", o.m_range}};
  std::ostringstream os;
  os << "verify m = " << lo << ".." << hi << ": " << all.size() << " checks\n";
  return emit("verify", params, all, std::nullopt, os.str(), o.json);
}

Result do_structure(const Options& o) {
  need_m(o.m);
  const Surface s = Surface::standard(o.m);
  const HGroup h = build_H(s);
  CheckList all = h.checks;
  append(all, verify_theorem_1_1(s));
  append(all, verify_corollary_1_2(s));
  append(all, verify_remarks(s));
  std::ostringstream os;
  const int m = o.m;
  os << "Aut " << s.label() << ": H = <nu> x| Aut_1, Aut_1 = mu_" << m << " x C*(t)\n"
     << "  nu = " << h.nu.to_string() << "\n  (rho, 1) = " << h.rho.to_string()
     << "\n  H / C* has " << h.cosets.size() << " elements nu^j (rho^a, 1)\n"
     << "  M_j = <(rho, rho^j)>, j = 0.." << m - 1 << "\n";
  json extra;
  extra["structure"] = {{"m", m},
                        {"nu", h.nu.to_string()},
                        {"rho", h.rho.to_string()},
                        {"cosets_mod_torus", h.cosets.size()}};
  return emit("structure", json{{"m", m}}, all, s.label(), os.str(), o.json, extra);
}

json quotient_params(const Options& o) {
  json p{{"m", o.m}, {"kind", o.kind}};
  if (o.kind == "torus" || o.kind == "mixed" || o.kind == "cover") p["l"] = o.l;
  if (o.kind == "mixed") p["j"] = o.j;
  if (o.kind == "free" || o.kind == "cover") p["root"] = o.root;
  return p;
}

Result do_quotient(const Options& o) {
  if (o.kind.empty()) throw Usage{"quotient: --kind is required"};
  const QuotientReport r = make_report(o);
  json extra;
  extra["report"] = report_json(r);
  return emit("quotient", quotient_params(o), r.checks, r.result_label, report_text(r), o.json,
                extra);
}

Result do_dualgraph(const Options& o) {
  need_m(o.m);
  if (o.stage != "pre" && o.stage != "post") throw Usage{"dualgraph: --stage is pre or post"};
  json params{{"m", o.m}, {"stage", o.stage}};
  std::string dot;
  CheckList checks;
  std::optional<std::string> label;
  if (o.kind.empty()) {
    const Surface s = Surface::standard(o.m);
    const CurveConfig cfg = curve_config(s);
    std::vector<CycleCurve> cycle;
    for (const auto& c : cfg.components) cycle.push_back({c.label, c.self_intersection});
    dot = dot_graph(s.label(), cycle, cfg.elliptic_self_intersection);
    label = s.label();
  } else {
    const QuotientReport r = make_report(o);
    params.update(quotient_params(o));
    const bool pre = o.stage == "pre";
    dot = dot_graph(pre ? r.input_label + " / " + r.kind : r.result_label,
                    pre ? r.resolved_cycle : r.final_cycle, r.elliptic_self_int);
    checks = r.checks;
    label = r.result_label;
  }
  if (!o.json) {
    Result out{all_passed(checks) ? 0 : 1, dot};
    if (out.exit_code) out.output += "// failed checks: " + failing(checks).front() + "\n";
    return out;
  }
  json extra;
  extra["dot"] = dot;
  return emit("dualgraph", params, checks, label, "", true, extra);
}

}  // namespace

Result emit(const std::string& command, const json& params, const CheckList& checks,
            const std::optional<std::string>& label, const std::string& text, bool as_json,
            const json& extra) {
  const auto bad = failing(checks);
  Result out;
  out.exit_code = bad.empty() ? 0 : 1;
  if (as_json) {
    json j = extra;
    j["schema"] = 1;
    j["command"] = command;
    j["parameters"] = params;
    j["checks"] = checks_json(checks);
    j["result_label"] = label ? json(*label) : json(nullptr);
    j["failed_checks"] = bad;
    out.output = j.dump(2) + "\n";
    return out;
  }
  std::string t = text + text_checks(checks);
  if (!bad.empty()) {
    t += "failed checks:";
    for (const auto& b : bad) t += " " + b + ";";
    t += "\n";
  }
  out.output = t;
  return out;
}

json checks_json(const CheckList& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name},
                   {"paper_anchor", c.anchor},
                   {"status", c.passed ? "pass" : "fail"},
                   {"details", c.details}});
  return out;
}

json report_json(const QuotientReport& r) {
  auto cycle = [](const std::vector<CycleCurve>& c) {
    json a = json::array();
    for (const auto& x : c) a.push_back({{"label", x.label}, {"self_intersection", x.self_intersection}});
    return a;
  };
  json sing = json::array();
  for (const auto& s : r.singularities)
    sing.push_back({{"node", s.node}, {"type", s.type()}, {"d", s.d}, {"q", s.q}, {"chain", s.chain}});
  json nodes = json::array();
  for (const auto& n : r.fixed_nodes)
    nodes.push_back({{"node", n.index}, {"weight_x", n.weight_x}, {"weight_y", n.weight_y}});
  json ram = json::object();
  for (const auto& x : r.ramification) ram[x.divisor] = x.index;
  return {{"kind", r.kind},
          {"input", r.input_label},
          {"subgroup", r.subgroup},
          {"order", r.order},
          {"fixed_locus",
           {{"components", r.fixed_components},
            {"nodes", nodes},
            {"e_pointwise_fixed", r.e_pointwise_fixed},
            {"e_translation", r.e_translation}}},
          {"singularities", sing},
          {"singularity_summary", r.singularity_summary()},
          {"resolved_cycle", {{"length", r.resolved_cycle.size()}, {"curves", cycle(r.resolved_cycle)}}},
          {"contractions", r.contractions},
          {"final_cycle", {{"length", r.final_cycle.size()}, {"curves", cycle(r.final_cycle)}}},
          {"elliptic_self_int", r.elliptic_self_int},
          {"ramification", ram},
          {"m_prime", r.m_prime},
          {"alpha_prime", r.alpha_prime ? json(r.alpha_prime->to_string()) : json(nullptr)},
          {"result", r.result_label},
          {"notes", r.notes}};
}

std::string dot_graph(const std::string& name, const std::vector<CycleCurve>& cycle,
                      std::int64_t elliptic_self_int) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (const auto& c : cycle)
    os << "  \"" << c.label << "\" [label=\"" << c.label << "\\n" << c.self_intersection
       << "\"];\n";
  os << "  \"E\" [label=\"E\\n" << elliptic_self_int << "\", shape=box];\n";
  const std::size_t n = cycle.size();
  if (n == 1) {
    os << "  \"" << cycle[0].label << "\" -- \"" << cycle[0].label << "\";\n";
  } else if (n == 2) {
    for (int k = 0; k < 2; ++k)
      os << "  \"" << cycle[0].label << "\" -- \"" << cycle[1].label << "\";\n";
  } else {
    for (std::size_t i = 0; i < n; ++i)
      os << "  \"" << cycle[i].label << "\" -- \"" << cycle[(i + 1) % n].label << "\";\n";
  }
  os << "}\n";
  return os.str();
}

Result run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Automorphisms and cyclic quotients of parabolic Inoue surfaces S(m, alpha)",
               "inoue_aut"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "check the relation and structure suites");
  verify->add_option("--m", o.m, "second Betti number");
  verify->add_option("--m-range", o.m_range, "sweep A..B");
  auto* structure = app.add_subcommand("structure", "describe Aut S and check its structure");
  structure->add_option("--m", o.m, "second Betti number")->required();
  auto* quotient = app.add_subcommand("quotient", "quotient by a named cyclic subgroup");
  quotient->add_option("--m", o.m, "second Betti number (base n for --kind cover)")->required();
  quotient->add_option("--kind", o.kind, "subgroup kind")
      ->required()
      ->check(CLI::IsMember({"free", "torus", "mixed", "involution", "cover"}));
  auto* dual = app.add_subcommand("dualgraph", "dual graph of the curve configuration (DOT)");
  dual->add_option("--m", o.m, "second Betti number")->required();
  dual->add_option("--stage", o.stage, "pre: resolved, post: after blow-downs")
      ->check(CLI::IsMember({"pre", "post"}));
  dual->add_option("--kind", o.kind, "subgroup kind")
      ->check(CLI::IsMember({"free", "torus", "mixed", "involution", "cover"}));
  for (auto* sub : {quotient, dual}) {
    sub->add_option("--l", o.l, "subgroup order");
    sub->add_option("--j", o.j, "index of M_j");
    sub->add_option("--root", o.root, "root choice");
  }
  for (auto* sub : {verify, structure, quotient, dual}) sub->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    CLI::App* active = &app;
    for (auto* sub : app.get_subcommands()) active = sub;
    return {2, std::string("error: ") + e.what() + "\n" + active->help()};
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == verify) return do_verify(o);
    if (active == structure) return do_structure(o);
    if (active == quotient) return do_quotient(o);
    return do_dualgraph(o);
  } catch (const Usage& u) {
    return {2, "error: " + u.message + "\n" + active->help()};
  } catch (const DomainError& e) {
    return {2, std::string("error: ") + e.what() + "\n" + active->help()};
  }
}

}  // namespace inoue::cli
