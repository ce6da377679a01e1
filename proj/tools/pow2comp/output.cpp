#include "pow2comp/output.hpp"

#include <iostream>

namespace cli {

Json Record::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["provenance"] = provenance;
  return j;
}

void emit(const Record& record, const OutputMode& mode) {
  if (mode.json) {
    std::cout << record.to_json().dump(2) << '\n';
    return;
  }
  for (const auto& s : record.text) std::cout << s << '\n';
}

std::string describe_residue(const pow2comp::Residue& r) {
  return std::to_string(r.value()) + " (mod " + std::to_string(r.modulus()) + ") [" + r.binary() + "]";
}

}  // namespace cli
