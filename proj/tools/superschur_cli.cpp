#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "superschur/driver.hpp"

namespace {

superschur::IntegerPartition parse_rho(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    parts.push_back(std::stoi(item));
  }
  if (parts.empty()) throw superschur::ConfigError("--rho: expected a comma list of parts");
  return superschur::IntegerPartition{std::move(parts)};
}

superschur::json read_input(const std::string& path) {
  if (path.empty() || path == "-") return superschur::json::parse(std::cin);
  std::ifstream f(path);
  if (!f) throw superschur::ConfigError("cannot read " + path);
  return superschur::json::parse(f);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace superschur;

  CLI::App app{"superschur: exact special symmetrization for gl(m,n)/Q(n) and "
               "verification of class-sum correspondences on tensor space"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string rho_text, direction = "forward", input_path;

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "number of even basis vectors");
    sub->add_option("--n", cfg.n, "number of odd basis vectors");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "write the JSON result to this path");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_space(verify);
  verify->add_option("--suite", cfg.suite,
                     "gl-class-sums | q-class-sums | duality | properties")
      ->required();
  verify->add_option("--N", cfg.N, "tensor power");
  verify->add_option("--rho", rho_text, "partition, e.g. 2,1 (default: all with |rho| <= N)");
  verify->add_option("--seed", cfg.seed, "seed for the randomized property checks");
  verify->add_option("--cache-dir", cfg.cache_dir, "cache reports by configuration hash");
  verify->add_option("--perturb", cfg.perturb,
                     "negative-control hook: drop-cycle-sign | half-q-range");
  verify->add_flag("--allow-overlong-rho", cfg.allow_overlong_rho,
                   "run |rho| > N as an empty-sum experiment");
  add_out(verify);

  CLI::App* symmetrize = app.add_subcommand(
      "symmetrize", "apply the expansion U -> S (forward) or the special symmetrization "
                    "S -> U (inverse) to a formal sum read as JSON");
  add_space(symmetrize);
  symmetrize->add_option("--direction", direction, "forward | inverse");
  symmetrize->add_option("--in", input_path, "input path (default: stdin)");
  add_out(symmetrize);

  CLI::App* dump = app.add_subcommand("dump-central",
                                      "emit class sums, invariants and their symmetrizations");
  add_space(dump);
  dump->add_option("--N", cfg.N, "tensor power");
  dump->add_option("--rho", rho_text, "partition (default: all with |rho| <= N)");
  dump->add_flag("--allow-overlong-rho", cfg.allow_overlong_rho);
  add_out(dump);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!rho_text.empty()) cfg.rho = parse_rho(rho_text);

    if (verify->parsed()) {
      json report;
      int code = run_verify(cfg, &report);
      if (cfg.out.empty()) std::cout << report.dump(2) << "\n";
      return code;
    }
    if (symmetrize->parsed()) {
      json result = run_symmetrize(cfg, read_input(input_path), direction);
      if (cfg.out.empty()) std::cout << result.dump(2) << "\n";
      return 0;
    }
    json result = run_dump_central(cfg);
    if (cfg.out.empty()) std::cout << result.dump(2) << "\n";
    return 0;
  } catch (const json::parse_error& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
