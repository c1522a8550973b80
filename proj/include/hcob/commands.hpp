#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcob/equivariant.hpp"

namespace hcob {

struct CommandArgs {
  std::string command;
  std::string input;  // path or fixtures:<name>; empty when not needed
  std::vector<std::vector<int>> simplices;  // --simplex, repeatable
  std::optional<Window> window;
  int margin = 2;
  std::size_t limit = 500;
  std::optional<long long> p;
  std::optional<int> basepoint;
  std::string relators;  // pi1 without a complex: "aaa,bbbbb,abab", capitals invert
  std::string ring = "Z";
  bool reduced = false;
  bool certify = false;
  bool json = false;
};

// One results row: name and printed value.
using ReportRow = std::pair<std::string, std::string>;

struct Report {
  std::string command;  // echo of the invocation
  std::string input;
  std::string digest;   // FNV-1a of the input bytes
  std::vector<ReportRow> results;
  std::vector<std::string> provenance;

  std::string text() const;
  std::string json() const;
};

struct RunResult {
  int exit_code = 0;
  std::string out;  // stdout
  std::string err;  // single line for errors
};

// Exit codes: 0 ok, 1 InputError, 2 ModelInvalid, 3 InternalError.
RunResult run(const CommandArgs& args);

std::vector<std::string> command_names();

// "LO:HI"; InputError otherwise.
Window parse_window(const std::string& s);

}  // namespace hcob
