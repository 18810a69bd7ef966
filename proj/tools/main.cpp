#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "inv/bounds.hpp"
#include "inv/constructions.hpp"
#include "inv/digraph.hpp"
#include "inv/errors.hpp"
#include "inv/exact.hpp"
#include "inv/fpt.hpp"
#include "inv/io.hpp"

namespace {

using namespace inv;

Digraph load_digraph(const std::string& path) {
  if (path == "-") return read_digraph(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_digraph(in);
}

InversionFamily load_family(const std::string& path) {
  if (path == "-") return read_family(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_family(in);
}

BitMatrix load_matrix(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_matrix(in);
}

void print_family(const InversionFamily& f) {
  std::ostringstream out;
  write_family(out, f);
  std::fputs(out.str().c_str(), stdout);
}

struct Cli {
  int rc = 0;

  // shared flags
  std::string file, file2, family_path;
  int max_k = 0, k = 0, n = 0, s = 0, threads = 1;
  std::uint64_t trials = 0, seed = 0;
  bool no_symmetry = false, force = false, exhaustive = false;
  bool seed_set = false;

  SolveOptions solve_options() const {
    SolveOptions opt;
    opt.prune_symmetry = !no_symmetry;
    opt.threads = threads;
    opt.accept_long_runtimes = force;
    return opt;
  }

  void run_solve() {
    Digraph d = load_digraph(file);
    auto res = inversion_number(d, max_k, solve_options());
    if (!res) {
      std::printf("# inv > %d\n", max_k);
      rc = 1;
      return;
    }
    std::printf("# inv = %d\n", res->value);
    print_family(res->family);
  }

  void run_fpt() {
    Digraph d = load_digraph(file);
    auto res = fpt_inversion(d, k, nullptr, threads);
    if (!res) {
      std::printf("# not %d-invertible\n", k);
      rc = 1;
      return;
    }
    std::printf("# inv <= %d\n", k);
    print_family(res->family);
    std::printf("# order:");
    for (int v : res->order.perm) std::printf(" %d", v);
    std::printf("\n");
  }

  void run_check() {
    if (file == "-" && family_path == "-")
      throw std::invalid_argument("the digraph and the family cannot both come from stdin");
    Digraph d = load_digraph(file);
    InversionFamily f = load_family(family_path);
    if (is_decycling(d, f)) {
      std::printf("decycling\n");
    } else {
      std::printf("not decycling\n");
      rc = 1;
    }
  }

  void run_distance() {
    Digraph a = load_digraph(file);
    Digraph b = load_digraph(file2);
    auto res = inversion_distance(a, b, max_k, solve_options());
    if (!res) {
      std::printf("# distance > %d\n", max_k);
      rc = 1;
      return;
    }
    std::printf("# distance = %d\n", res->value);
    print_family(res->family);
  }

  void run_tau() {
    Digraph d = load_digraph(file);
    auto res = tau(d, solve_options());
    std::printf("# tau = %d\n", res.value);
    for (std::size_t i = 0; i < res.transversal.size(); ++i)
      std::printf("%s%d", i ? " " : "", res.transversal[i]);
    std::printf("\n");
  }

  void run_tau_prime() {
    Digraph d = load_digraph(file);
    auto res = tau_prime(d, solve_options());
    std::printf("# tau' = %d\n", res.value);
    for (auto [u, v] : res.edges) std::printf("%d %d\n", u, v);
  }

  void run_bounds() {
    BoundReport rep = bounds_for(n);
    std::printf("n = %d\n", rep.n);
    std::printf("lower = %d\n", rep.lower);
    std::printf("upper = %d\n", rep.upper);
    std::printf("lower: %s\n", rep.lower_note.c_str());
    std::printf("upper: %s\n", rep.upper_note.c_str());
  }

  void run_rank() {
    BitMatrix m = load_matrix(file);
    std::printf("rank = %d\n", rank(std::move(m)));
  }

  void require_seed() const {
    if (!exhaustive && !seed_set)
      throw CLI::ValidationError("--seed", "a seed is required unless --exhaustive is given");
  }

  void run_rank_tail() {
    require_seed();
    auto res = rank_tail_experiment(n, s, trials, seed, exhaustive, threads);
    std::printf("experiment,n,s,trials,seed,empirical,bound,exact\n");
    std::printf("rank-tail,%d,%d,%llu,%llu,%.9g,%.9g,%d\n", n, s,
                static_cast<unsigned long long>(res.trials),
                static_cast<unsigned long long>(exhaustive ? 0 : seed), res.empirical, res.bound,
                res.exact ? 1 : 0);
  }

  void run_random_inv() {
    require_seed();
    auto res = random_inv_experiment(n, k, trials, seed, exhaustive, threads, solve_options());
    std::printf("experiment,n,k,trials,seed,empirical,bound,exact\n");
    std::printf("random-inv,%d,%d,%llu,%llu,%.9g,%.9g,%d\n", n, k,
                static_cast<unsigned long long>(res.trials),
                static_cast<unsigned long long>(exhaustive ? 0 : seed), res.empirical, res.bound,
                res.exact ? 1 : 0);
  }
};

void emit(const Digraph& d) {
  std::ostringstream out;
  write_digraph(out, d);
  std::fputs(out.str().c_str(), stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inversion numbers of oriented graphs and tournaments"};
  app.require_subcommand(1);
  Cli cli;

  auto* solve = app.add_subcommand("solve", "exact inversion number with witness family");
  solve->add_option("file", cli.file, "digraph file, - for stdin")->required();
  solve->add_option("--max-k", cli.max_k, "largest family size to try")->required();
  solve->add_option("--threads", cli.threads, "worker threads (0 = all)");
  solve->add_flag("--no-symmetry-prune", cli.no_symmetry, "explore all coordinate orders");
  solve->add_flag("--force", cli.force, "accept long runtimes (override size guards)");
  solve->callback([&] { cli.run_solve(); });

  auto* fpt = app.add_subcommand("fpt", "iterative-compression decision with witness");
  fpt->add_option("file", cli.file, "tournament file, - for stdin")->required();
  fpt->add_option("-k", cli.k, "target family size")->required();
  fpt->add_option("--threads", cli.threads, "worker threads (0 = all)");
  fpt->callback([&] { cli.run_fpt(); });

  auto* check = app.add_subcommand("check", "verify a decycling family");
  check->add_option("file", cli.file, "digraph file, - for stdin")->required();
  check->add_option("--family", cli.family_path, "family file, - for stdin")->required();
  check->callback([&] { cli.run_check(); });

  auto* construct = app.add_subcommand("construct", "emit a named digraph");
  construct->require_subcommand(1);
  {
    construct->add_subcommand("c3", "directed triangle")->callback([] { emit(c3()); });
    auto* tr = construct->add_subcommand("transitive", "transitive tournament");
    tr->add_option("n", cli.n, "vertex count")->required();
    tr->callback([&] { emit(transitive(cli.n)); });
    construct->add_subcommand("v5", "the 5-vertex tournament with tau 1 and inv 2")
        ->callback([] { emit(v5()); });
    construct->add_subcommand("ce-r", "the 9-vertex dijoin counterexample tournament")
        ->callback([] { emit(counterexample_r()); });
    auto* q = construct->add_subcommand("qn", "the next-edge-reversed tournament Q_n");
    q->add_option("n", cli.n, "vertex count")->required();
    q->callback([&] { emit(qn(cli.n)); });
    auto* tc = construct->add_subcommand("tau", "binary-indexed cycle-transversal construction");
    tc->add_option("k", cli.k, "number of u vertices")->required();
    tc->add_option("n", cli.n, "number of v vertices (divisible by 2^k)")->required();
    tc->callback([&] { emit(tau_construction(cli.k, cli.n)); });
    auto* rnd = construct->add_subcommand("random", "seeded uniform random tournament");
    rnd->add_option("n", cli.n, "vertex count")->required();
    rnd->add_option("--seed", cli.seed, "stream seed")->required();
    rnd->callback([&] { emit(random_tournament(cli.n, cli.seed)); });
    auto* kj = construct->add_subcommand("kjoin", "k-join of digraph files");
    static std::vector<std::string> kj_files;
    kj->add_option("files", kj_files, "factor digraph files")->required()->expected(-1);
    kj->callback([&] {
      std::vector<Digraph> factors;
      for (const auto& f : kj_files) factors.push_back(load_digraph(f));
      emit(kjoin(factors));
    });
    auto* dj = construct->add_subcommand("dijoin", "dijoin of two digraph files");
    dj->add_option("left", cli.file, "left digraph file")->required();
    dj->add_option("right", cli.file2, "right digraph file")->required();
    dj->callback([&] { emit(dijoin(load_digraph(cli.file), load_digraph(cli.file2))); });
  }

  auto* dist = app.add_subcommand("distance", "inversion distance between two tournaments");
  dist->add_option("file1", cli.file, "first tournament file")->required();
  dist->add_option("file2", cli.file2, "second tournament file")->required();
  dist->add_option("--max-k", cli.max_k, "largest distance to try")->required();
  dist->add_flag("--force", cli.force, "accept long runtimes");
  dist->callback([&] { cli.run_distance(); });

  auto* tauc = app.add_subcommand("tau", "cycle transversal number");
  tauc->add_option("file", cli.file, "digraph file, - for stdin")->required();
  tauc->add_flag("--force", cli.force, "accept long runtimes");
  tauc->callback([&] { cli.run_tau(); });

  auto* taup = app.add_subcommand("tau-prime", "cycle edge-transversal number");
  taup->add_option("file", cli.file, "digraph file, - for stdin")->required();
  taup->add_flag("--force", cli.force, "accept long runtimes");
  taup->callback([&] { cli.run_tau_prime(); });

  auto* bounds = app.add_subcommand("bounds", "lower/upper bounds on inv(n)");
  bounds->add_option("n", cli.n, "vertex count")->required();
  bounds->callback([&] { cli.run_bounds(); });

  auto* rankc = app.add_subcommand("rank", "F_2 rank of a matrix file");
  rankc->add_option("file", cli.file, "matrix file, - for stdin")->required();
  rankc->callback([&] { cli.run_rank(); });

  auto* exp = app.add_subcommand("experiment", "seeded experiments, CSV output");
  exp->require_subcommand(1);
  {
    auto* rt = exp->add_subcommand("rank-tail", "P(rank <= n-s) for random symmetric matrices");
    rt->add_option("n", cli.n)->required();
    rt->add_option("s", cli.s)->required();
    rt->add_option("trials", cli.trials)->required();
    rt->add_option("--seed", cli.seed)->each([&](const std::string&) { cli.seed_set = true; });
    rt->add_flag("--exhaustive", cli.exhaustive, "enumerate the full space instead");
    rt->add_option("--threads", cli.threads, "worker threads (0 = all)");
    rt->callback([&] { cli.run_rank_tail(); });

    auto* ri = exp->add_subcommand("random-inv", "fraction of k-invertible random tournaments");
    ri->add_option("n", cli.n)->required();
    ri->add_option("k", cli.k)->required();
    ri->add_option("trials", cli.trials)->required();
    ri->add_option("--seed", cli.seed)->each([&](const std::string&) { cli.seed_set = true; });
    ri->add_flag("--exhaustive", cli.exhaustive, "enumerate the full space instead");
    ri->add_option("--threads", cli.threads, "worker threads (0 = all)");
    ri->callback([&] { cli.run_random_inv(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const inv::parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const inv::guard_exceeded& e) {
    std::fprintf(stderr, "guard exceeded: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return cli.rc;
}
