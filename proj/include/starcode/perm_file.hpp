#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "starcode/codes.hpp"

namespace starcode {

// Raised with a "file:line: reason" message on malformed input.
struct PermFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// .perm format: UTF-8 text, '#' starts a comment line, first data line is
// "degree <n>", every following data line is one n-value image word.
Code read_perm_stream(std::istream& in, const std::string& name = "<stream>");
Code read_perm_file(const std::filesystem::path& path);

// Canonical layout: codewords in increasing rank order, so identical codes
// serialize byte-identically.
std::string to_perm_text(const Code& c);
void write_perm_file(const std::filesystem::path& path, const Code& c);

}  // namespace starcode
