#include "starcode/report.hpp"

#include <sstream>

#include <json.hpp>

namespace starcode {

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << "fnv64:" << std::hex << h;
  return out.str();
}

Report::Report(std::string kind) : _kind(std::move(kind)) {}

Report& Report::text(const std::string& key, const std::string& value) {
  _entries.push_back({key, Kind::text, value});
  return *this;
}

Report& Report::number(const std::string& key, std::uint64_t value) {
  _entries.push_back({key, Kind::number, {}, value});
  return *this;
}

Report& Report::flag(const std::string& key, bool value) {
  _entries.push_back({key, Kind::boolean, {}, 0, value});
  return *this;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "report: " << _kind << "\n";
  for (const Entry& e : _entries) {
    out << e.key << ": ";
    switch (e.kind) {
      case Kind::text: out << e.str; break;
      case Kind::number: out << e.num; break;
      case Kind::boolean: out << (e.b ? "true" : "false"); break;
    }
    out << "\n";
  }
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["report"] = _kind;
  for (const Entry& e : _entries) {
    switch (e.kind) {
      case Kind::text: doc[e.key] = e.str; break;
      case Kind::number: doc[e.key] = e.num; break;
      case Kind::boolean: doc[e.key] = e.b; break;
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace starcode
