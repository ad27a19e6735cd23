#include "starcode/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "starcode/codes.hpp"
#include "starcode/group.hpp"
#include "starcode/perm_file.hpp"
#include "starcode/projective.hpp"
#include "starcode/report.hpp"
#include "starcode/search.hpp"
#include "starcode/star_graph.hpp"

namespace starcode {

namespace {

int default_threads() {
  if (const char* env = std::getenv("STARCODE_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PermFileError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedCode {
  Code code;
  std::string path;
  std::string digest;
};

LoadedCode load_code(const std::string& path) {
  const std::string bytes = read_file_bytes(path);
  std::istringstream in(bytes);
  return {read_perm_stream(in, path), path, fnv1a_digest(bytes)};
}

Permutation parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::uint8_t> w;
  long v = 0;
  while (in >> v) {
    if (v < 1 || v > 255)
      throw std::invalid_argument("word: value out of range: " + std::to_string(v));
    w.push_back(static_cast<std::uint8_t>(v));
  }
  if (!in.eof()) throw std::invalid_argument("word: non-numeric token");
  return Permutation(std::move(w));
}

std::string word_string(const Permutation& p) {
  std::ostringstream out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out << ' ';
    out << static_cast<int>(p.word()[i]);
  }
  return out.str();
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out << s;
  return out.str();
}

void add_input(Report& report, const std::string& key, const LoadedCode& loaded) {
  report.text(key, loaded.path);
  report.text(key + "-digest", loaded.digest);
}

class CommandContext {
 public:
  CommandContext(std::ostream& out, bool json) : _out(out), _json(json) {}

  void emit(const Report& report) {
    _out << (_json ? report.to_json() : report.to_text());
  }

  // Writes the code and reports where it went; without --out the .perm
  // text itself goes to stdout.
  int deliver_code(const Code& code, const std::string& out_path, Report report) {
    if (out_path.empty()) {
      _out << to_perm_text(code);
      return kExitTrue;
    }
    write_perm_file(out_path, code);
    report.text("output", out_path);
    report.text("output-digest", fnv1a_digest(to_perm_text(code)));
    emit(report);
    return kExitTrue;
  }

 private:
  std::ostream& _out;
  bool _json;
};

Report base_report(std::string kind) {
  Report report(std::move(kind));
  report.text("version", kToolVersion);
  return report;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw std::invalid_argument("side must be left or right");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"perfect codes and perfect bitrades in Star graphs"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  bool json = false;
  int threads = default_threads();
  app.add_flag("--json", json, "emit reports as JSON");
  app.add_option("--threads", threads, "worker threads for verification")
      ->check(CLI::PositiveNumber);

  std::string in_path, in2_path, out_path, by_word, side_name = "right";
  int n = 0, q = 5;
  std::size_t limit = 0;
  double budget_codes = 60.0, budget_bitrades = 600.0;

  // construct
  CLI::App* construct = app.add_subcommand("construct", "build a code");
  CLI::App* c_stab1 = construct->add_subcommand("stab1", "stabilizer of 1");
  c_stab1->add_option("--n", n, "degree")->required();
  c_stab1->add_option("--out,-o", out_path, "output .perm file");
  CLI::App* c_pgl = construct->add_subcommand("pgl", "PGL(2,q) on q+1 points");
  c_pgl->add_option("--q", q, "field order (prime)")->required();
  c_pgl->add_option("--out,-o", out_path, "output .perm file");
  CLI::App* c_coset = construct->add_subcommand("coset", "translate a code");
  c_coset->add_option("--in,-i", in_path, "input .perm file")->required();
  c_coset->add_option("--by", by_word, "translating permutation word")->required();
  c_coset->add_option("--side", side_name, "left or right");
  c_coset->add_option("--out,-o", out_path, "output .perm file");
  CLI::App* c_lift = construct->add_subcommand(
      "lift", "recursive construction, one degree up");
  c_lift->add_option("--in,-i", in_path, "input .perm file")->required();
  c_lift->add_option("--out,-o", out_path, "output .perm file");
  CLI::App* c_conj = construct->add_subcommand("conjugate", "conjugate a code");
  c_conj->add_option("--in,-i", in_path, "input .perm file")->required();
  c_conj->add_option("--by", by_word, "conjugating permutation word")->required();
  c_conj->add_option("--out,-o", out_path, "output .perm file");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "check code properties");
  CLI::App* v_mindist = verify->add_subcommand("mindist", "minimum distance >= 3");
  v_mindist->add_option("--in,-i", in_path, "input .perm file")->required();
  CLI::App* v_perfect = verify->add_subcommand("perfect", "perfect code check");
  v_perfect->add_option("--in,-i", in_path, "input .perm file")->required();
  bool allow_overlap = false;
  CLI::App* v_bitrade = verify->add_subcommand("bitrade", "bitrade condition");
  v_bitrade->add_option("--in,-i", in_path, "T0 .perm file")->required();
  v_bitrade->add_option("--in2,-j", in2_path, "T1 .perm file")->required();
  v_bitrade->add_flag("--allow-overlap", allow_overlap,
                      "relax the disjointness requirement");

  // classify
  CLI::App* classify = app.add_subcommand("classify", "isomorphism classes");
  CLI::App* cl_codes = classify->add_subcommand("codes", "perfect codes, n <= 6");
  cl_codes->add_option("--n", n, "degree")->required();

  // search
  CLI::App* search = app.add_subcommand("search", "exhaustive searches");
  CLI::App* s_bitrades =
      search->add_subcommand("bitrades", "bitrade volume spectrum, n <= 6");
  s_bitrades->add_option("--n", n, "degree")->required();
  s_bitrades->add_option("--budget-seconds", budget_bitrades, "search budget");
  s_bitrades->add_option("--out,-o", out_path, "prefix for representative files");

  // embed
  CLI::App* embed = app.add_subcommand("embed", "embed a bitrade into a perfect code");
  embed->add_option("--in,-i", in_path, "T0 .perm file")->required();
  embed->add_option("--in2,-j", in2_path, "T1 .perm file")->required();
  embed->add_option("--budget-seconds", budget_codes, "search budget");
  embed->add_option("--out,-o", out_path, "output .perm file for the code");

  // distance
  std::string word_g, word_h;
  CLI::App* distance = app.add_subcommand("distance", "graph distance in S_n");
  distance->add_option("first", word_g, "first permutation word")->required();
  distance->add_option("second", word_h, "second permutation word")->required();

  // info
  CLI::App* info = app.add_subcommand("info", "summary of a .perm file");
  info->add_option("--in,-i", in_path, "input .perm file")->required();

  // intersect
  CLI::App* intersect = app.add_subcommand("intersect", "intersection stats");
  intersect->add_option("--in,-i", in_path, "first .perm file")->required();
  intersect->add_option("--in2,-j", in2_path, "second .perm file")->required();

  // unused but accepted for report reproducibility scripts
  app.add_option("--limit", limit, "solution limit for searches");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitTrue : kExitUsage;
  }

  CommandContext ctx(out, json);
  try {
    if (construct->parsed()) {
      if (c_stab1->parsed()) {
        const Code code = stab1(n);
        Report report = base_report("construct-stab1");
        report.number("n", static_cast<std::uint64_t>(n));
        report.number("size", code.size());
        return ctx.deliver_code(code, out_path, std::move(report));
      }
      if (c_pgl->parsed()) {
        const Code code = pgl2(q);
        Report report = base_report("construct-pgl");
        report.number("q", static_cast<std::uint64_t>(q));
        report.number("degree", static_cast<std::uint64_t>(code.degree()));
        report.number("size", code.size());
        return ctx.deliver_code(code, out_path, std::move(report));
      }
      if (c_coset->parsed()) {
        const LoadedCode input = load_code(in_path);
        const Permutation by = parse_word(by_word);
        const Code code = coset_code(input.code, by, parse_side(side_name));
        Report report = base_report("construct-coset");
        add_input(report, "input", input);
        report.text("by", word_string(by));
        report.text("side", side_name);
        report.number("size", code.size());
        return ctx.deliver_code(code, out_path, std::move(report));
      }
      if (c_lift->parsed()) {
        const LoadedCode input = load_code(in_path);
        const Code embedded = embed_code(input.code, input.code.degree() + 1);
        const Code code = lift(embedded);
        Report report = base_report("construct-lift");
        add_input(report, "input", input);
        report.number("degree", static_cast<std::uint64_t>(code.degree()));
        report.number("size", code.size());
        return ctx.deliver_code(code, out_path, std::move(report));
      }
      if (c_conj->parsed()) {
        const LoadedCode input = load_code(in_path);
        const Permutation by = parse_word(by_word);
        const Code code = conjugate_subgroup(input.code, by);
        Report report = base_report("construct-conjugate");
        add_input(report, "input", input);
        report.text("by", word_string(by));
        report.number("size", code.size());
        return ctx.deliver_code(code, out_path, std::move(report));
      }
      err << "construct: missing subcommand\n";
      return kExitUsage;
    }

    if (verify->parsed()) {
      if (v_mindist->parsed()) {
        const LoadedCode input = load_code(in_path);
        const MinDistanceResult r = min_distance_at_least_3(input.code, threads);
        Report report = base_report("verify-mindist");
        add_input(report, "input", input);
        report.number("degree", static_cast<std::uint64_t>(input.code.degree()));
        report.number("size", input.code.size());
        report.flag("vacuous", r.vacuous);
        report.flag("result", r.at_least_3);
        ctx.emit(report);
        return r.at_least_3 ? kExitTrue : kExitFalse;
      }
      if (v_perfect->parsed()) {
        const LoadedCode input = load_code(in_path);
        const bool perfect = is_perfect(input.code, threads);
        Report report = base_report("verify-perfect");
        add_input(report, "input", input);
        report.number("degree", static_cast<std::uint64_t>(input.code.degree()));
        report.number("size", input.code.size());
        report.number("perfect-size", factorial(input.code.degree() - 1));
        report.flag("result", perfect);
        ctx.emit(report);
        return perfect ? kExitTrue : kExitFalse;
      }
      if (v_bitrade->parsed()) {
        const LoadedCode first = load_code(in_path);
        const LoadedCode second = load_code(in2_path);
        Report report = base_report("verify-bitrade");
        add_input(report, "input", first);
        add_input(report, "input2", second);
        report.number("size-t0", first.code.size());
        report.number("size-t1", second.code.size());
        bool valid = false;
        std::string reason;
        try {
          const Bitrade t(first.code, second.code, !allow_overlap);
          valid = verify_bitrade(t, threads);
          if (!valid) reason = "ball condition violated";
        } catch (const std::invalid_argument& e) {
          reason = e.what();
        }
        if (!reason.empty()) report.text("reason", reason);
        report.flag("result", valid);
        ctx.emit(report);
        return valid ? kExitTrue : kExitFalse;
      }
      err << "verify: missing subcommand\n";
      return kExitUsage;
    }

    if (classify->parsed() && cl_codes->parsed()) {
      const Classification result = classify_perfect_codes(n, threads);
      Report report = base_report("classify-codes");
      report.number("n", static_cast<std::uint64_t>(n));
      report.number("solutions", result.solver.solutions.size());
      report.number("nodes", result.solver.nodes);
      report.flag("complete", result.solver.complete);
      report.number("classes", result.classes.size());
      for (std::size_t i = 0; i < result.classes.size(); ++i) {
        const std::string prefix = "class-" + std::to_string(i + 1);
        const CodeClass& cc = result.classes[i];
        report.number(prefix + "-size", cc.representative.size());
        report.number(prefix + "-count", cc.count);
        report.flag(prefix + "-stab1-class",
                    stab1_class_certificate(cc.representative).in_class);
      }
      ctx.emit(report);
      return kExitTrue;
    }

    if (search->parsed() && s_bitrades->parsed()) {
      const BitradeSpectrum spectrum = enumerate_bitrades(n, budget_bitrades);
      Report report = base_report("search-bitrades");
      report.number("n", static_cast<std::uint64_t>(n));
      report.text("budget-seconds", format_seconds(budget_bitrades));
      std::ostringstream volumes;
      for (std::size_t v : spectrum.volumes) {
        if (volumes.tellp() > 0) volumes << ' ';
        volumes << v;
      }
      report.text("spectrum", volumes.str());
      report.number("solutions-found", spectrum.solutions_found);
      report.number("nodes", spectrum.nodes);
      report.flag("complete", spectrum.complete);
      if (!out_path.empty()) {
        for (const auto& [vol, rep] : spectrum.representatives) {
          const std::string t0_path =
              out_path + "-vol" + std::to_string(vol) + "-t0.perm";
          const std::string t1_path =
              out_path + "-vol" + std::to_string(vol) + "-t1.perm";
          write_perm_file(t0_path, rep.t0);
          write_perm_file(t1_path, rep.t1);
          report.text("volume-" + std::to_string(vol) + "-t0", t0_path);
          report.text("volume-" + std::to_string(vol) + "-t1", t1_path);
        }
      }
      ctx.emit(report);
      return spectrum.complete ? kExitTrue : kExitInconclusive;
    }

    if (embed->parsed()) {
      const LoadedCode first = load_code(in_path);
      const LoadedCode second = load_code(in2_path);
      const Bitrade t(first.code, second.code);
      const EmbedResult result = embed_bitrade(t, budget_codes);
      Report report = base_report("embed");
      add_input(report, "input", first);
      add_input(report, "input2", second);
      report.text("budget-seconds", format_seconds(budget_codes));
      report.number("nodes", result.nodes);
      switch (result.status) {
        case EmbedResult::Status::embedded: {
          report.text("status", "embedded");
          report.number("code-size", result.code->size());
          report.number("partner-size", result.partner->size());
          if (!out_path.empty()) {
            write_perm_file(out_path, *result.code);
            report.text("output", out_path);
          }
          ctx.emit(report);
          return kExitTrue;
        }
        case EmbedResult::Status::not_embeddable:
          report.text("status", "not-embeddable");
          ctx.emit(report);
          return kExitFalse;
        case EmbedResult::Status::unknown:
          report.text("status", "unknown");
          ctx.emit(report);
          return kExitInconclusive;
      }
    }

    if (distance->parsed()) {
      const Permutation g = parse_word(word_g);
      const Permutation h = parse_word(word_h);
      if (g.degree() != h.degree())
        throw std::invalid_argument("distance: words of different degree");
      const StarGraph graph(g.degree());
      Report report = base_report("distance");
      report.number("degree", static_cast<std::uint64_t>(g.degree()));
      report.text("g", word_string(g));
      report.text("h", word_string(h));
      report.number("distance", static_cast<std::uint64_t>(graph.distance(g, h)));
      ctx.emit(report);
      return kExitTrue;
    }

    if (info->parsed()) {
      const LoadedCode input = load_code(in_path);
      const MinDistanceResult mindist = min_distance_at_least_3(input.code, threads);
      const Stab1Certificate cert = stab1_class_certificate(input.code);
      Report report = base_report("info");
      add_input(report, "input", input);
      report.number("degree", static_cast<std::uint64_t>(input.code.degree()));
      report.number("size", input.code.size());
      report.flag("mindist-at-least-3", mindist.at_least_3);
      report.flag("mindist-vacuous", mindist.vacuous);
      report.flag("perfect", is_perfect(input.code, threads));
      report.flag("stab1-class", cert.in_class);
      if (cert.in_class && !input.code.is_empty())
        report.number("stab1-class-point", static_cast<std::uint64_t>(cert.point));
      if (cert.witness) {
        report.text("witness-a", word_string(cert.witness->first));
        report.text("witness-b", word_string(cert.witness->second));
      }
      ctx.emit(report);
      return kExitTrue;
    }

    if (intersect->parsed()) {
      const LoadedCode first = load_code(in_path);
      const LoadedCode second = load_code(in2_path);
      const IntersectionStats stats = intersection_stats(first.code, second.code);
      Report report = base_report("intersect");
      add_input(report, "input", first);
      add_input(report, "input2", second);
      report.number("size-a", stats.size_a);
      report.number("size-b", stats.size_b);
      report.number("common", stats.common);
      ctx.emit(report);
      return kExitTrue;
    }
  } catch (const PermFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  err << "unknown command\n";
  return kExitUsage;
}

}  // namespace starcode
