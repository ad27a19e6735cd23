#include "starcode/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "starcode/bitrade_search.hpp"
#include "starcode/exact_cover.hpp"
#include "starcode/group.hpp"
#include "starcode/projective.hpp"
#include "starcode/star_graph.hpp"

namespace starcode {

namespace {

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<std::uint32_t> to_row_ids(const Code& c) {
  std::vector<std::uint32_t> out;
  out.reserve(c.size());
  for (Rank r : c.ranks()) out.push_back(static_cast<std::uint32_t>(r));
  return out;
}

}  // namespace

ExactCoverInstance build_code_cover(int n, const Code& forced,
                                    const Code& forbidden) {
  if (n < 3 || n > kMaxCoverDegree)
    throw std::invalid_argument("build_code_cover: degree must be in 3.." +
                                std::to_string(kMaxCoverDegree));
  if (forced.degree() != n || forbidden.degree() != n)
    throw std::invalid_argument("build_code_cover: degree mismatch");
  if (!forced.set_intersection(forbidden).is_empty())
    throw std::invalid_argument("build_code_cover: forced and forbidden overlap");

  const StarGraph graph(n);
  ExactCoverInstance inst;
  inst.degree = n;
  inst.column_count = graph.vertex_count();
  inst.rows.resize(inst.column_count);
  std::vector<Rank> nbr;
  for (std::size_t v = 0; v < inst.column_count; ++v) {
    auto& row = inst.rows[v];
    row.reserve(static_cast<std::size_t>(n));
    row.push_back(static_cast<std::uint32_t>(v));
    graph.neighbor_ranks(v, nbr);
    for (Rank u : nbr) row.push_back(static_cast<std::uint32_t>(u));
  }
  inst.forced_rows = to_row_ids(forced);
  inst.forbidden_rows = to_row_ids(forbidden);
  return inst;
}

SolutionReport solve_exact_cover(const ExactCoverInstance& inst, std::size_t limit,
                                 double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  SolutionReport report;
  const DlxStats stats = dlx_enumerate(
      inst.column_count, inst.rows, inst.forced_rows, inst.forbidden_rows,
      budget_seconds, [&](const std::vector<std::uint32_t>& rows) {
        std::vector<Rank> ranks(rows.begin(), rows.end());
        report.solutions.emplace_back(inst.degree, std::move(ranks));
        return limit == 0 || report.solutions.size() < limit;
      });
  report.complete = stats.complete;
  report.nodes = stats.nodes;
  report.seconds = elapsed_since(start);
  return report;
}

Classification classify_perfect_codes(int n, int threads) {
  if (n < 3 || n > 6)
    throw std::invalid_argument("classify_perfect_codes: degree must be in 3..6");

  const Code identity_only(n, {0});
  const ExactCoverInstance inst = build_code_cover(n, identity_only, Code::empty(n));

  Classification result;
  result.solver = solve_exact_cover(inst);
  if (!result.solver.complete)
    throw std::runtime_error("classify_perfect_codes: enumeration did not finish");

  for (const Code& code : result.solver.solutions) {
    if (!is_perfect(code, threads))
      throw std::logic_error("classify_perfect_codes: solver produced a non-code");
    std::vector<Rank> canon = canonical_form(code, threads);
    auto it = std::find_if(result.classes.begin(), result.classes.end(),
                           [&](const CodeClass& cc) { return cc.canonical == canon; });
    if (it == result.classes.end())
      result.classes.push_back({code, std::move(canon), 1});
    else
      ++it->count;
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const CodeClass& a, const CodeClass& b) {
              return a.canonical < b.canonical;
            });
  return result;
}

EmbedResult embed_bitrade(const Bitrade& t, double budget_seconds) {
  if (t.degree() > kMaxCoverDegree)
    throw std::invalid_argument("embed_bitrade: degree exceeds cover cap");
  if (!verify_bitrade(t))
    throw std::invalid_argument("embed_bitrade: input fails the bitrade condition");

  const ExactCoverInstance inst = build_code_cover(t.degree(), t.t0, t.t1);
  const SolutionReport report = solve_exact_cover(inst, 1, budget_seconds);

  EmbedResult result;
  result.nodes = report.nodes;
  result.seconds = report.seconds;
  if (!report.solutions.empty()) {
    const Code& code = report.solutions.front();
    Code partner = code.set_difference(t.t0).set_union(t.t1);
    // Switching a verified bitrade inside a perfect code must stay perfect.
    if (!is_perfect(code) || !is_perfect(partner))
      throw std::logic_error("embed_bitrade: switching invariant violated");
    result.status = EmbedResult::Status::embedded;
    result.code = code;
    result.partner = std::move(partner);
  } else {
    result.status = report.complete ? EmbedResult::Status::not_embeddable
                                    : EmbedResult::Status::unknown;
  }
  return result;
}

namespace {

// The §-style constructions whose volumes are known to occur: a pair of
// disjoint right cosets everywhere, plus the subgroup pairs at n = 6.
std::vector<Bitrade> witness_bitrades(int n) {
  std::vector<Bitrade> out;
  const Code stab = stab1(n);
  const Code shifted = coset_code(stab, Permutation::transposition(n, 1, n),
                                  Side::right);
  out.push_back(bitrade_from_codes(stab, shifted));

  if (n == 6) {
    const Code pgl = pgl2(5);
    out.push_back(bitrade_from_codes(stab, pgl));
    for (Rank r = 1; r < factorial(6); ++r) {
      const Code conj = conjugate_subgroup(pgl, Permutation::unrank(6, r));
      if (!(conj == pgl)) {
        out.push_back(bitrade_from_codes(pgl, conj));
        break;
      }
    }
  }
  return out;
}

}  // namespace

BitradeSpectrum enumerate_bitrades(int n, double budget_seconds) {
  if (n < 3 || n > 6)
    throw std::invalid_argument("enumerate_bitrades: degree must be in 3..6");

  const auto start = std::chrono::steady_clock::now();
  BitradeSpectrum spectrum;

  for (Bitrade& witness : witness_bitrades(n)) {
    if (!verify_bitrade(witness))
      throw std::logic_error("enumerate_bitrades: witness construction failed");
    const std::size_t vol = volume(witness);
    spectrum.volumes.insert(vol);
    spectrum.representatives.try_emplace(vol, std::move(witness));
  }

  const BitradeSearchStats stats = enumerate_bitrade_assignments(
      n, budget_seconds,
      [&](const std::vector<Rank>& t0, const std::vector<Rank>& t1) {
        Bitrade found(Code(n, t0), Code(n, t1));
        if (!verify_bitrade(found))
          throw std::logic_error("enumerate_bitrades: search emitted a non-bitrade");
        const std::size_t vol = volume(found);
        spectrum.volumes.insert(vol);
        spectrum.representatives.try_emplace(vol, std::move(found));
        return true;
      });

  spectrum.solutions_found = stats.solutions;
  spectrum.nodes = stats.nodes;
  spectrum.complete = stats.complete;
  spectrum.seconds = elapsed_since(start);
  return spectrum;
}

}  // namespace starcode
