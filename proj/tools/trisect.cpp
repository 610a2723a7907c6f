// trisect: build, verify, combine and fingerprint group trisections.
//
// Exit codes: 0 success / Proved, 1 Refuted, 2 Inconclusive,
//             64 usage error, 65 document parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trisect/dsl.hpp"
#include "trisect/report.hpp"

namespace {

constexpr int kExitProved = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct GlobalOptions {
  std::string format = "human";
  trisect::Budget budget;
  long long seed = 0;  // reserved; every operation is deterministic

  trisect::ReportFormat report_format() const {
    return format == "machine" ? trisect::ReportFormat::Machine : trisect::ReportFormat::Human;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

trisect::GroupTrisection load(const std::string& path) {
  return trisect::parse_trisection(read_file(path));
}

int verdict_exit_code(trisect::Verdict v) {
  switch (v) {
    case trisect::Verdict::Proved: return kExitProved;
    case trisect::Verdict::Refuted: return kExitRefuted;
    case trisect::Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group trisection toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_option("--budget-tietze-passes", opts.budget.max_tietze_passes, "Tietze pass cap");
  app.add_option("--budget-relator-length", opts.budget.max_total_relator_length,
                 "Total relator length cap");
  app.add_option("--budget-cosets", opts.budget.max_cosets, "Coset enumeration cap");
  app.add_option("--budget-hom-nodes", opts.budget.max_hom_nodes, "Homomorphism search node cap");
  app.add_option("--budget-seconds", opts.budget.max_seconds, "Wall-clock cap per certificate");
  app.add_option("--seed", opts.seed, "Reserved; all operations are deterministic");

  std::string in_a, in_b, out_path, example_name;
  int sector_i = 1, sector_j = 2, times = 1, max_length = 4;

  CLI::App* cmd_verify = app.add_subcommand("verify", "Run the full verification pipeline");
  cmd_verify->add_option("file", in_a, "Trisection document")->required();

  CLI::App* cmd_sum = app.add_subcommand("sum", "Connected sum of two trisections");
  cmd_sum->add_option("first", in_a)->required();
  cmd_sum->add_option("second", in_b)->required();
  cmd_sum->add_option("-o,--output", out_path, "Output file (default stdout)");

  CLI::App* cmd_stabilize = app.add_subcommand("stabilize", "Connected sum with the standard trivial (3,1) trisection");
  cmd_stabilize->add_option("file", in_a)->required();
  cmd_stabilize->add_option("-n,--times", times, "Number of stabilizations")->check(CLI::PositiveNumber);
  cmd_stabilize->add_option("-o,--output", out_path, "Output file (default stdout)");

  CLI::App* cmd_fingerprint = app.add_subcommand("fingerprint", "Isomorphism-refutation invariants");
  cmd_fingerprint->add_option("file", in_a)->required();

  CLI::App* cmd_pushout = app.add_subcommand("pushout", "Face pushout presentation");
  cmd_pushout->add_option("file", in_a)->required();
  cmd_pushout->add_option("-i", sector_i, "First sector")->required()->check(CLI::Range(1, 3));
  cmd_pushout->add_option("-j", sector_j, "Second sector")->required()->check(CLI::Range(1, 3));

  CLI::App* cmd_euler = app.add_subcommand("euler", "Euler characteristic 2 + g - 3k");
  cmd_euler->add_option("file", in_a)->required();

  CLI::App* cmd_kernel = app.add_subcommand("kernel-search", "Common-kernel word search");
  cmd_kernel->add_option("file", in_a)->required();
  cmd_kernel->add_option("--max-length", max_length, "Maximum word length")->check(CLI::PositiveNumber);

  CLI::App* cmd_example = app.add_subcommand("example", "Write a built-in example");
  cmd_example->add_option("name", example_name, "One of the catalogue names")->required();
  cmd_example->add_option("-o,--output", out_path, "Output file (default stdout)");

  CLI::App* cmd_canon = app.add_subcommand("canon", "Canonicalize a document");
  cmd_canon->add_option("file", in_a)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_verify) {
      trisect::GroupTrisection t = load(in_a);
      trisect::VerificationReport report = trisect::verify(t, opts.budget);
      std::cout << trisect::render_verification_report(t, report, opts.report_format());
      return verdict_exit_code(report.overall);
    }
    if (*cmd_sum) {
      trisect::GroupTrisection t = trisect::connected_sum(load(in_a), load(in_b));
      write_output(out_path, trisect::serialize_trisection(t));
      return 0;
    }
    if (*cmd_stabilize) {
      trisect::GroupTrisection t = load(in_a);
      for (int n = 0; n < times; ++n) t = trisect::stabilize(t);
      write_output(out_path, trisect::serialize_trisection(t));
      return 0;
    }
    if (*cmd_fingerprint) {
      trisect::GroupTrisection t = load(in_a);
      trisect::Fingerprint fp = trisect::fingerprint(t, opts.budget);
      std::cout << trisect::render_fingerprint_report(t, fp, opts.report_format());
      return 0;
    }
    if (*cmd_pushout) {
      if (sector_i == sector_j) {
        std::cerr << "pushout: -i and -j must differ\n";
        return kExitUsage;
      }
      trisect::GroupTrisection t = load(in_a);
      trisect::PushoutResult p = trisect::pairwise_pushout(t, sector_i, sector_j);
      std::cout << trisect::render_pushout_report(t, sector_i, sector_j, p, opts.report_format());
      return 0;
    }
    if (*cmd_euler) {
      trisect::GroupTrisection t = load(in_a);
      std::cout << trisect::render_euler_report(t, opts.report_format());
      return 0;
    }
    if (*cmd_kernel) {
      trisect::GroupTrisection t = load(in_a);
      std::vector<trisect::Word> words = trisect::search_common_kernel(t, max_length);
      std::cout << trisect::render_kernel_search_report(t, max_length, words, opts.report_format());
      return 0;
    }
    if (*cmd_example) {
      trisect::GroupTrisection t = trisect::builtin_example(example_name);
      write_output(out_path, trisect::serialize_trisection(t));
      return 0;
    }
    if (*cmd_canon) {
      trisect::GroupTrisection t = load(in_a);
      write_output(out_path, trisect::serialize_trisection(t));
      return 0;
    }
  } catch (const trisect::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
