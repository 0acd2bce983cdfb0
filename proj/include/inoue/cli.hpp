#pragma once

// Command-line front end: verify, structure, quotient and dualgraph.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "inoue/check.hpp"
#include "inoue/quotient.hpp"

namespace inoue::cli {

struct Result {
  int exit_code = 0;  // 0 all checks pass, 1 a check failed, 2 invalid flags
  std::string output;
};

// args excludes the program name.
Result run(const std::vector<std::string>& args);

// Undirected multigraph in DOT: curves labelled with self-intersections.
std::string dot_graph(const std::string& name, const std::vector<CycleCurve>& cycle,
                      std::int64_t elliptic_self_int);

// Text or JSON rendering of a finished command; exit code 1 on any failed check.
Result emit(const std::string& command, const nlohmann::json& parameters, const CheckList& checks,
            const std::optional<std::string>& result_label, const std::string& text, bool as_json,
            const nlohmann::json& extra = nlohmann::json::object());

nlohmann::json checks_json(const CheckList& checks);
nlohmann::json report_json(const QuotientReport& r);

}  // namespace inoue::cli
