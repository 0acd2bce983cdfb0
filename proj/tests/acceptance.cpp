// Acceptance gate: one line per criterion, exit status 0 iff all pass.

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "inoue/autgroup.hpp"
#include "inoue/quotient.hpp"
#include "inoue/surface.hpp"

using namespace inoue;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  int count = 0;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void expect(bool ok, const std::string& why) {
    ++count;
    if (!ok) fail(why);
  }
  void checks(const CheckList& list, const std::string& where) {
    for (const auto& c : list) expect(c.passed, where + ": " + c.name + " (" + c.details + ")");
  }
};

std::vector<QuotientReport> reports;

const QuotientReport& keep(QuotientReport r) {
  reports.push_back(std::move(r));
  return reports.back();
}

std::string tag(const std::string& kind, std::initializer_list<long> xs) {
  std::ostringstream os;
  os << kind;
  for (long x : xs) os << " " << x;
  return os.str();
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

Outcome relations() {
  Outcome o;
  for (int m = 1; m <= 8; ++m) o.checks(verify_relations(ScalarContext::make(m), 20, 1), tag("m", {m}));
  return o;
}

Outcome structure() {
  Outcome o;
  for (int m = 1; m <= 8; ++m) {
    const Surface s = Surface::standard(m);
    o.checks(verify_theorem_1_1(s), tag("m", {m}));
    o.checks(verify_corollary_1_2(s), tag("m", {m}));
  }
  return o;
}

Outcome quotient_identities() {
  Outcome o;
  for (int m : {2, 3, 4, 6}) {
    const Surface s = Surface::standard(m);
    std::set<std::string> labels;
    for (int i = 0; i < m; ++i) {
      const Scalar bp = Scalar::root_of_unity(s.ctx, m, i) * s.beta();
      const auto& r = keep(quotient_free_cyclic(s, bp));
      const std::string where = tag("free", {m, i});
      o.checks(r.checks, where);
      o.expect(r.result_label == surface_label(1, bp), where + ": " + r.result_label);
      labels.insert(r.result_label);
    }
    o.expect(labels.size() == static_cast<std::size_t>(m), tag("free distinct", {m}));
  }
  for (auto [m, l] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto& r = keep(quotient_by_torus_cyclic(Surface::standard(m), l));
    const std::string where = tag("torus", {m, l});
    o.checks(r.checks, where);
    o.expect(r.result_label == "S(" + std::to_string(m * l) + ", alpha)", where + ": " + r.result_label);
    o.expect(r.singularities.size() == static_cast<std::size_t>(m), where + ": singular count");
    for (const auto& p : r.singularities)
      o.expect(p.type() == "A_" + std::to_string(l - 1), where + ": " + p.type());
    o.expect(r.resolved_cycle.size() == static_cast<std::size_t>(m * l), where + ": cycle length");
    o.expect(r.elliptic_self_int == -m * l, where + ": E^2");
  }
  for (int m : {4, 6}) {
    for (int l : {2, 3}) {
      if (m % l != 0 || (m == 4 && l == 3)) continue;
      std::set<std::string> labels;
      for (int j = 0; j < m; ++j) {
        const auto& r = keep(quotient_by_mixed_cyclic(Surface::standard(m), j, l));
        o.checks(r.checks, tag("mixed", {m, l, j}));
        labels.insert(r.result_label);
      }
      const std::string want =
          "S(" + std::to_string(m / l) + ", alpha^" + std::to_string(l) + ")";
      o.expect(labels == std::set<std::string>{want}, tag("mixed label", {m, l}));
    }
  }
  for (int m : {2, 4, 6}) {
    const auto& r = keep(quotient_involution(Surface::standard(m)));
    const std::string where = tag("involution", {m});
    o.checks(r.checks, where);
    o.expect(r.resolved_cycle.size() == static_cast<std::size_t>(m), where + ": cycle length");
    for (std::size_t i = 0; i < r.resolved_cycle.size(); ++i)
      o.expect(r.resolved_cycle[i].self_intersection == (i % 2 == 0 ? -4 : -1),
               where + ": " + r.resolved_cycle[i].label);
    o.expect(r.result_label == "S(" + std::to_string(m / 2) + ", alpha^2)", where + ": " + r.result_label);
  }
  for (auto [n, l] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {2, 3}}) {
    const Surface base = branched_cover_base(n, l);
    for (int root = 0; root < l; ++root) {
      const std::string where = tag("cover", {n, l, root});
      o.checks(keep(build_branched_cover(base, l, root)).checks, where);
      const auto& back = keep(quotient_by_mixed_cyclic(branched_cover_surface(base, l, root), 0, l));
      o.checks(back.checks, where + " back");
      o.expect(back.result_label == base.label(), where + ": " + back.result_label);
    }
  }
  return o;
}

Outcome cross_route() {
  Outcome o;
  for (const auto& r : reports) {
    if (r.kind == "cover") continue;
    int seen = 0;
    for (const auto& c : r.checks)
      if (starts_with(c.name, "routes agree")) {
        ++seen;
        o.expect(c.passed, r.kind + " " + r.input_label + ": " + c.details);
      }
    o.expect(seen == 3, r.kind + " " + r.input_label + ": route checks missing");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int m = 1; m <= 6; ++m) {
    auto ctx = ScalarContext::make(m);
    const Scalar beta = Scalar::beta(ctx);
    std::vector<CoverAut> gens{CoverAut::gamma_beta_power(ctx, 1), nu(ctx),
                               CoverAut::torus(Scalar::generator(ctx, "s"),
                                               Scalar::generator(ctx, "t"))};
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        gens.push_back(CoverAut::torus(Scalar::root_of_unity(ctx, m, a),
                                       Scalar::root_of_unity(ctx, m, b)));
    const int w = 3 * m;
    for (const auto& x : gens)
      for (const auto& y : gens) {
        const MapFamily chart = primitive_family(y, beta).then(primitive_family(x, beta));
        const CoverAut normal = compose(x, y);
        bool ok = chart.on(Chart::v()) == realize(normal, Chart::v(), beta);
        for (int k = -w; k <= w && ok; ++k)
          ok = chart.on(Chart::u(k)) == realize(normal, Chart::u(k), beta);
        o.expect(ok, tag("m", {m}) + ": " + x.to_string() + " o " + y.to_string());
      }
  }
  return o;
}

Outcome homomorphisms() {
  Outcome o;
  for (int m = 1; m <= 8; ++m) o.checks(verify_homomorphisms(Surface::standard(m)), tag("m", {m}));
  return o;
}

Outcome euler() {
  Outcome o;
  for (const auto& r : reports) {
    int seen = 0;
    for (const auto& c : r.checks)
      if (c.anchor == "Sec 4 Euler") {
        ++seen;
        o.expect(c.passed, r.kind + " " + r.input_label + ": " + c.details);
      }
    o.expect(seen == 1, r.kind + " " + r.input_label + ": Euler check missing");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 relation suite, m = 1..8, 20 samples, 1e-9", relations},
      {"2 structure suite, m = 1..8", structure},
      {"3 quotient identities", quotient_identities},
      {"4 cross-route agreement", cross_route},
      {"5 normal form vs chart composition, m <= 6, |k| <= 3m", oracle_equivalence},
      {"6 homomorphisms on H", homomorphisms},
      {"7 Euler number conservation", euler},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const Outcome o = run();
    all = all && o.passed;
    std::printf("[%s] %s (%d checks)%s%s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.count,
                o.passed ? "" : ": ", o.detail.c_str());
  }
  return all ? 0 : 1;
}
