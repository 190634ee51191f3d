#pragma once
#include "afc/cli/input.hpp"
#include "afc/verdict/decide.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace afc::cli {

// Options and state shared by the commands of one invocation. Certificates
// issued along the way are collected so --verify can replay them all.
struct RunContext {
  std::optional<int> degree_cap;  // overrides the fixture cap when set
  std::vector<verdict::Certificate> certificates;
};

// One command's report: text and its JSON mirror, built from the same data
// in the same order, both deterministic. status is 0 for a delivered
// verdict and 2 for out_of_scope.
struct Section {
  std::string text;
  nlohmann::ordered_json json;
  int status = 0;
};

Section cmd_structure(const InputDocument& doc);
Section cmd_decide(const InputDocument& doc, RunContext& ctx);
Section cmd_orbit(const InputDocument& doc, RunContext& ctx);
Section cmd_polyprobe(const InputDocument& doc, const RunContext& ctx);

// Dispatch by name; throws ParseError on an unknown command.
Section run_command(const std::string& name, const InputDocument& doc, RunContext& ctx);

// Runs every *.acl file under dir (sorted by file name) through its own
// `run` list. Fixture errors propagate.
Section run_corpus(const std::string& dir, RunContext& ctx);

// Replays every collected certificate; returns how many. Throws
// ValidationError on the first replay mismatch.
std::size_t verify_certificates(const RunContext& ctx);

}  // namespace afc::cli
