#include "tgl/cli.hpp"

#include <atomic>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "tgl/corpus.hpp"
#include "tgl/galois.hpp"
#include "tgl/graphs.hpp"
#include "tgl/json_io.hpp"
#include "tgl/matroid.hpp"
#include "tgl/tutte.hpp"

namespace tgl {

namespace {

struct CommonOpts {
  std::uint64_t seed = 0;
  std::uint64_t prime_bound = 10000;
};

void add_seed_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "pseudorandom stream seed")->envname("TGL_SEED");
  cmd->add_option("--prime-bound", o.prime_bound, "largest prime scanned for witnesses");
}

int cmd_zhat(const std::string& file, const std::string& strategy) {
  Matroid m = load_matroid_file(file);
  ZhatStrategy st =
      strategy == "dc" ? ZhatStrategy::DeletionContraction : ZhatStrategy::StateSum;
  std::cout << zhat_to_json(zhat(m, st)).dump(2) << "\n";
  return 0;
}

int cmd_tutte(const std::string& file, const std::string& g6) {
  Matroid m = g6.empty() ? load_matroid_file(file) : cycle_matroid(parse_graph6(g6));
  std::cout << bipoly_to_json(tutte_bivariate(m)).dump(2) << "\n";
  return 0;
}

int cmd_identities_corpus() {
  int passed = 0;
  const auto& corpus = builtin_corpus();
  for (const auto& entry : corpus) {
    IdentityReport rep = check_identities(entry.matroid);
    Json j = identity_report_to_json(rep);
    j["name"] = entry.name;
    std::cout << j.dump() << "\n";
    if (rep.all_pass()) ++passed;
  }
  Json summary;
  summary["summary"] = Json{{"total", static_cast<int>(corpus.size())}, {"passed", passed}};
  std::cout << summary.dump() << "\n";
  return passed == static_cast<int>(corpus.size()) ? 0 : 1;
}

int cmd_identities_single(const std::string& file) {
  IdentityReport rep = check_identities(load_matroid_file(file));
  std::cout << identity_report_to_json(rep).dump(2) << "\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_verify_main(const std::string& file, const CommonOpts& o,
                    const std::optional<std::uint64_t>& characteristic, int max_samples) {
  Matroid m = load_matroid_file(file);
  VerificationReport rep =
      characteristic ? verify_theorem_mod_p(m, *characteristic, o.seed, max_samples)
                     : verify_theorem_main(m, o.seed, o.prime_bound);
  std::cout << report_to_json(rep).dump(2) << "\n";
  return rep.status == "Sn" ? 0 : 1;
}

int cmd_verify_conjecture(int order, const std::string& g6file, long y0, const CommonOpts& o,
                          int jobs) {
  std::vector<SimpleGraph> graphs =
      g6file.empty() ? enumerate_biconnected(order) : read_graph6_file(g6file);
  std::vector<std::string> lines(graphs.size());
  std::vector<std::string> statuses(graphs.size());

  auto run_one = [&](std::size_t i) {
    const SimpleGraph& g = graphs[i];
    VerificationReport rep = verify_conjecture_bivariate(cycle_matroid(g), y0, o.seed,
                                                         o.prime_bound);
    rep.input = emit_graph6(g);
    rep.n = g.vertex_count;
    statuses[i] = rep.status;
    lines[i] = report_to_json(rep).dump();
  };

  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, std::max(1, static_cast<int>(graphs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            run_one(i);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          next.store(graphs.size());
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::map<std::string, int> counts;
  for (const auto& s : statuses) ++counts[s];
  for (const auto& line : lines) std::cout << line << "\n";
  Json summary;
  summary["summary"] =
      Json{{"total", static_cast<int>(graphs.size())}, {"statuses", counts}};
  std::cout << summary.dump() << "\n";
  return counts["Sn"] == static_cast<int>(graphs.size()) ? 0 : 1;
}

int cmd_independence(const std::string& file, int points, std::uint64_t seed) {
  JacobianReport rep = jacobian_independence_check(load_matroid_file(file), points, seed);
  std::cout << jacobian_report_to_json(rep).dump(2) << "\n";
  return rep.status == "Independent" ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"exact multivariate Tutte polynomials with symmetric-group certificates"};
  app.require_subcommand(1);

  std::string matroid_file, graph6_str, graph6_file, corpus_name, strategy = "statesum";
  CommonOpts opts;
  std::optional<std::uint64_t> characteristic;
  int max_samples = 512;
  int order = 0;
  long y0 = 2;
  int jobs = 0;
  int points = 5;

  CLI::App* zhat_cmd = app.add_subcommand("zhat", "multivariate polynomial of a matroid");
  zhat_cmd->add_option("--matroid", matroid_file, "matroid JSON file")->required();
  zhat_cmd->add_option("--strategy", strategy, "statesum|dc")
      ->check(CLI::IsMember({"statesum", "dc"}));

  CLI::App* tutte_cmd = app.add_subcommand("tutte", "bivariate polynomial");
  auto* tm = tutte_cmd->add_option("--matroid", matroid_file, "matroid JSON file");
  auto* tg = tutte_cmd->add_option("--graph6", graph6_str, "graph6 string");
  tm->excludes(tg);
  tutte_cmd->callback([&] {
    if (matroid_file.empty() && graph6_str.empty())
      throw CLI::RequiredError("one of --matroid / --graph6");
  });

  CLI::App* ident_cmd = app.add_subcommand("identities", "symbolic identity checks");
  auto* ic = ident_cmd->add_option("--corpus", corpus_name, "'builtin'");
  auto* im = ident_cmd->add_option("--matroid", matroid_file, "matroid JSON file");
  ic->excludes(im);
  ident_cmd->callback([&] {
    if (corpus_name.empty() && matroid_file.empty())
      throw CLI::RequiredError("one of --corpus / --matroid");
    if (!corpus_name.empty() && corpus_name != "builtin")
      throw CLI::ValidationError("--corpus", "only 'builtin' is available");
  });

  CLI::App* main_cmd = app.add_subcommand("verify-main", "specialize and certify");
  main_cmd->add_option("--matroid", matroid_file, "matroid JSON file")->required();
  main_cmd->add_option("--char", characteristic, "sample over fields of this characteristic");
  main_cmd->add_option("--max-samples", max_samples, "sampling budget in characteristic p");
  add_seed_options(main_cmd, opts);

  CLI::App* conj_cmd = app.add_subcommand("verify-conjecture", "bivariate experiment");
  auto* co = conj_cmd->add_option("--order", order, "all biconnected graphs of this order")
                 ->check(CLI::Range(3, 7));
  auto* cf = conj_cmd->add_option("--graph6-file", graph6_file, "graph6 input file");
  co->excludes(cf);
  conj_cmd->add_option("--y0", y0, "y-specialization point");
  conj_cmd->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
  add_seed_options(conj_cmd, opts);
  conj_cmd->callback([&] {
    if (order == 0 && graph6_file.empty())
      throw CLI::RequiredError("one of --order / --graph6-file");
  });

  CLI::App* indep_cmd = app.add_subcommand("independence", "jacobian rank check");
  indep_cmd->add_option("--matroid", matroid_file, "matroid JSON file")->required();
  indep_cmd->add_option("--points", points, "number of evaluation points");
  indep_cmd->add_option("--seed", opts.seed, "pseudorandom stream seed")->envname("TGL_SEED");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (zhat_cmd->parsed()) return cmd_zhat(matroid_file, strategy);
    if (tutte_cmd->parsed()) return cmd_tutte(matroid_file, graph6_str);
    if (ident_cmd->parsed())
      return corpus_name.empty() ? cmd_identities_single(matroid_file) : cmd_identities_corpus();
    if (main_cmd->parsed()) return cmd_verify_main(matroid_file, opts, characteristic, max_samples);
    if (conj_cmd->parsed()) return cmd_verify_conjecture(order, graph6_file, y0, opts, jobs);
    if (indep_cmd->parsed()) return cmd_independence(matroid_file, points, opts.seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tgl
