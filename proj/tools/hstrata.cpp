// hstrata: exact invariants and stratification posets for spaces of binary
// forms.  Subcommands: analyze, enumerate, poset, sample, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hstrata/document.hpp"
#include "hstrata/experiments.hpp"
#include "hstrata/render.hpp"
#include "hstrata/verify.hpp"

namespace {

using namespace hstrata;

std::uint64_t env_prime() {
  if (const char* e = std::getenv("HSTRATA_PRIME")) {
    try {
      return std::stoull(e);
    } catch (const std::exception&) {
      throw DocumentError("HSTRATA_PRIME is not a valid integer");
    }
  }
  return kDefaultPrime;
}

Partition parse_parts(const std::vector<int>& parts, const std::string& what) {
  try {
    return Partition::from_unsorted(parts);
  } catch (const std::exception& e) {
    throw DocumentError(what + ": " + e.what());
  }
}

int cmd_analyze(const std::string& path) {
  FormSpaceDocument doc = [&] {
    if (path == "-") return FormSpaceDocument::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open " + path);
    return FormSpaceDocument::parse(in);
  }();
  std::cout << analyze_report(doc);
  return 0;
}

int cmd_enumerate(int j, int d, bool nose_table, const std::string& format,
                  const std::vector<int>& star_lambda, int star_c) {
  std::optional<StarMark> star;
  if (!star_lambda.empty())
    star = StarMark{parse_parts(star_lambda, "--star"), star_c};
  std::string out;
  if (nose_table) {
    out = (format == "json") ? nose_json(j, d) : nose_csv(j, d);
  } else {
    out = (format == "json") ? enumerate_json(j, d, star) : enumerate_csv(j, d, star);
  }
  std::cout << out;
  return 0;
}

int cmd_poset(int j, int d, const std::string& format) {
  std::cout << ((format == "json") ? poset_json(j, d) : poset_dot(j, d));
  return 0;
}

int cmd_sample(int j, int d, const std::vector<int>& dparts, int c, std::uint64_t seed,
               const std::string& out_path) {
  GF k(env_prime());
  Partition D = parse_parts(dparts, "--D");
  auto sample = sample_hilbert_burch(k, j, d, D, c, seed);
  auto doc = FormSpaceDocument::from_space(sample.V);
  if (out_path.empty()) {
    std::cout << doc.serialize();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DocumentError("cannot write " + out_path);
    out << doc.serialize();
  }
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt) {
  GF k(env_prime());
  auto res = verify_suite(k, suite, opt);
  std::cout << res.json;
  return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants and stratification posets of spaces of binary forms"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "full invariant report of a form-space document");
  analyze->add_option("path", analyze_path, "JSON document path, or - for stdin")->required();

  // enumerate
  int j = 0, d = 0;
  bool nose_table = false;
  std::string format = "csv";
  std::vector<int> star_lambda;
  int star_c = 0;
  auto* enumerate = app.add_subcommand("enumerate", "table of all strata of Grass(R_j, d)");
  enumerate->add_option("--j", j, "form degree")->required();
  enumerate->add_option("--d", d, "subspace dimension")->required();
  enumerate->add_flag("--nose", nose_table, "emit the nose (scroll) strata instead");
  enumerate->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  enumerate->add_option("--star", star_lambda,
                        "mark the closure of the stratum with this lambda (comma separated)")
      ->delimiter(',');
  enumerate->add_option("--star-c", star_c, "base-point degree of the starred stratum");

  // poset
  std::string poset_format = "dot";
  auto* poset = app.add_subcommand("poset", "closure poset with covering edges");
  poset->add_option("--j", j, "form degree")->required();
  poset->add_option("--d", d, "subspace dimension")->required();
  poset->add_option("--format", poset_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  // sample
  std::vector<int> dparts;
  int c = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* sample = app.add_subcommand("sample", "reproducible random space with given relation degrees");
  sample->add_option("--j", j, "form degree")->required();
  sample->add_option("--d", d, "subspace dimension")->required();
  sample->add_option("--D", dparts, "relation degrees, comma separated")
      ->required()
      ->delimiter(',');
  sample->add_option("--c", c, "base-point degree (default 0)");
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--out", out_path, "output path (default stdout)");

  // verify
  std::string suite;
  VerifyOptions vopt;
  int vj = -1, vd = -1;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "dims|orders|closure|semicontinuity|mu")->required();
  verify->add_option("--j", vj, "restrict to this form degree");
  verify->add_option("--d", vd, "restrict to this subspace dimension");
  verify->add_option("--trials", vopt.trials, "trial count (semicontinuity)");
  verify->add_option("--seed", vopt.seed, "master seed");
  verify->add_option("--max-j", vopt.max_j, "largest j for the orders suite");
  verify->add_option("--max-n", vopt.max_n, "largest n for the mu suite");
  verify->add_option("--retries", vopt.retries, "certification retries (closure)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path);
    if (*enumerate) return cmd_enumerate(j, d, nose_table, format, star_lambda, star_c);
    if (*poset) return cmd_poset(j, d, poset_format);
    if (*sample) return cmd_sample(j, d, dparts, c, seed, out_path);
    if (*verify) {
      vopt.j = vj;
      vopt.d = vd;
      return cmd_verify(suite, vopt);
    }
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
