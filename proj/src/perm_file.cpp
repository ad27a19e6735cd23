#include "starcode/perm_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace starcode {

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line,
                       const std::string& reason) {
  throw PermFileError(name + ":" + std::to_string(line) + ": " + reason);
}

bool is_blank_or_comment(const std::string& s) {
  for (char ch : s) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Code read_perm_stream(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t lineno = 0;
  int degree = -1;
  std::vector<Rank> ranks;
  std::set<Rank> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);

    if (degree < 0) {
      std::string keyword;
      long value = 0;
      if (!(fields >> keyword >> value) || keyword != "degree")
        fail(name, lineno, "expected 'degree <n>'");
      std::string extra;
      if (fields >> extra) fail(name, lineno, "trailing tokens after degree");
      if (value < 1 || value > kMaxRankDegree)
        fail(name, lineno, "degree must be in 1.." + std::to_string(kMaxRankDegree));
      degree = static_cast<int>(value);
      continue;
    }

    std::vector<std::uint8_t> word;
    long v = 0;
    while (fields >> v) {
      if (v < 1 || v > degree)
        fail(name, lineno, "value " + std::to_string(v) + " outside 1.." +
                               std::to_string(degree));
      word.push_back(static_cast<std::uint8_t>(v));
    }
    if (!fields.eof()) fail(name, lineno, "non-numeric token");
    if (static_cast<int>(word.size()) != degree)
      fail(name, lineno, "expected " + std::to_string(degree) + " values, got " +
                             std::to_string(word.size()));
    Rank r;
    try {
      r = Permutation(std::move(word)).rank();
    } catch (const std::invalid_argument& e) {
      fail(name, lineno, e.what());
    }
    if (!seen.insert(r).second) fail(name, lineno, "duplicate permutation");
    ranks.push_back(r);
  }

  if (degree < 0) fail(name, lineno, "missing 'degree <n>' line");
  return Code(degree, std::move(ranks));
}

Code read_perm_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PermFileError(path.string() + ": cannot open");
  return read_perm_stream(in, path.string());
}

std::string to_perm_text(const Code& c) {
  std::ostringstream out;
  out << "degree " << c.degree() << "\n";
  for (Rank r : c.ranks()) {
    const Permutation p = Permutation::unrank(c.degree(), r);
    for (int i = 0; i < c.degree(); ++i) {
      if (i) out << ' ';
      out << static_cast<int>(p.word()[i]);
    }
    out << "\n";
  }
  return out.str();
}

void write_perm_file(const std::filesystem::path& path, const Code& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PermFileError(path.string() + ": cannot open for writing");
  out << to_perm_text(c);
}

}  // namespace starcode
