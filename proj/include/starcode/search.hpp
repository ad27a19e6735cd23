#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "starcode/codes.hpp"
#include "starcode/perm.hpp"

namespace starcode {

constexpr int kMaxCoverDegree = 7;

// Tiling model for perfect codes: columns are the vertices of Sym_n, row r
// covers the closed ball of the vertex with rank r. Exact covers are
// precisely the perfect codes containing the forced vertices and avoiding
// the forbidden ones.
struct ExactCoverInstance {
  int degree = 0;
  std::size_t column_count = 0;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::uint32_t> forced_rows;
  std::vector<std::uint32_t> forbidden_rows;
};

ExactCoverInstance build_code_cover(int n, const Code& forced,
                                    const Code& forbidden);

struct SolutionReport {
  std::vector<Code> solutions;
  bool complete = true;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

// Deterministic enumeration of exact covers. limit = 0 and
// budget_seconds <= 0 mean unlimited.
SolutionReport solve_exact_cover(const ExactCoverInstance& inst,
                                 std::size_t limit = 0,
                                 double budget_seconds = 0);

struct CodeClass {
  Code representative;
  std::vector<Rank> canonical;
  std::size_t count = 0;  // identity-containing codes in the class
};

struct Classification {
  std::vector<CodeClass> classes;  // sorted by canonical form
  SolutionReport solver;
};

// Enumerates the perfect codes through the identity (no generality lost:
// the graph is vertex-transitive) and buckets them by canonical form.
Classification classify_perfect_codes(int n, int threads = 1);

struct EmbedResult {
  enum class Status { embedded, not_embeddable, unknown };
  Status status = Status::unknown;
  std::optional<Code> code;     // contains T0, avoids T1
  std::optional<Code> partner;  // (code \ T0) union T1, perfect as well
  std::uint64_t nodes = 0;
  double seconds = 0;
};

// Searches for a perfect code containing T0 and avoiding T1 via the
// forced/forbidden cover model. unknown means the budget ran out before
// the search space was exhausted.
EmbedResult embed_bitrade(const Bitrade& t, double budget_seconds = 60);

struct BitradeSpectrum {
  std::set<std::size_t> volumes;
  std::map<std::size_t, Bitrade> representatives;
  std::uint64_t solutions_found = 0;
  std::uint64_t nodes = 0;
  bool complete = false;
  double seconds = 0;
};

// Volume spectrum of the perfect bitrades of S_n. Known coset and subgroup
// constructions seed the spectrum as verified witnesses; the exhaustive
// assignment search then confirms or extends it within the budget.
BitradeSpectrum enumerate_bitrades(int n, double budget_seconds = 600);

}  // namespace starcode
