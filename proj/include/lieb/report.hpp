#ifndef LIEB_REPORT_HPP
#define LIEB_REPORT_HPP

#include <json.hpp>
#include <string>

#include "lieb/polynomial.hpp"

namespace lieb {

// nlohmann::json keeps object keys sorted, which together with the string
// encodings below makes every report byte-deterministic.
using Json = nlohmann::json;

struct Report {
  std::string command;
  std::string input_path;   // "-" when the command takes no file
  std::string input_digest; // fnv1a-64 of the raw input bytes
  std::string letter_order; // effective total order of the working alphabet
  int max_degree = 4;
  std::optional<long long> seed;
  Json results = Json::object();
  std::vector<std::string> warnings;
};

std::string fnv1a_hex(const std::string& bytes);

Json report_json(const Report& r);

// dump with two-space indentation and a trailing newline
std::string render_canonical(const Json& j);

}  // namespace lieb

#endif  // LIEB_REPORT_HPP
