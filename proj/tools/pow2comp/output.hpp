#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pow2comp/residue.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

/// What a command reports: echoed inputs, results, and the engine settings
/// that produced them. Human mode prints `text` instead.
struct Record {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json provenance = Json::object();
  std::vector<std::string> text;

  void line(std::string s) { text.push_back(std::move(s)); }
  Json to_json() const;
};

struct OutputMode {
  bool json = false;
};

void emit(const Record& record, const OutputMode& mode);

/// "46 (mod 64) [101110]"
std::string describe_residue(const pow2comp::Residue& r);

}  // namespace cli
