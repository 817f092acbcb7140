#include "lieb/report.hpp"

namespace lieb {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json report_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["input"] = Json{{"path", r.input_path}, {"digest", r.input_digest}};
  j["letter_order"] = r.letter_order;
  j["max_degree"] = r.max_degree;
  if (r.seed) j["seed"] = *r.seed;
  j["results"] = r.results;
  j["warnings"] = r.warnings;
  return j;
}

std::string render_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lieb
