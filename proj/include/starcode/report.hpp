#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace starcode {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a over the raw bytes, rendered as "fnv64:<hex>".
std::string fnv1a_digest(const std::string& bytes);

// Ordered key/value document. Text and JSON renderings carry the same
// keys in the same order, so identical runs emit identical bytes.
class Report {
 public:
  explicit Report(std::string kind);

  Report& text(const std::string& key, const std::string& value);
  Report& number(const std::string& key, std::uint64_t value);
  Report& flag(const std::string& key, bool value);

  std::string to_text() const;
  std::string to_json() const;

 private:
  enum class Kind { text, number, boolean };
  struct Entry {
    std::string key;
    Kind kind;
    std::string str;
    std::uint64_t num = 0;
    bool b = false;
  };

  std::string _kind;
  std::vector<Entry> _entries;
};

}  // namespace starcode
