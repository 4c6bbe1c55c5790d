// Command-line front end. Talks to the library only through the C interface.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumint/sumint.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) return out;
    pos = next + 1;
  }
}

std::vector<std::uint64_t> parse_set(const std::string& flag, const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  for (const std::string& tok : split(text, ',')) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw UsageError(flag + ": malformed element '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// Keeps the coefficient strings alive while the C call reads them.
struct CertArg {
  std::vector<std::string> parts;
  std::vector<const char*> ptrs;

  explicit CertArg(const std::string& text) : parts(split(text, ',')) {
    for (const std::string& p : parts) {
      if (p.empty()) throw UsageError("--cert: empty coefficient in '" + text + "'");
      ptrs.push_back(p.c_str());
    }
  }
};

struct Options {
  std::string format = "json";
  unsigned threads = 0;
  std::string set, cert, family, subset, pred = "sum";
  std::uint64_t max = 0, size = 0, pool_max = 0, pool_size = 0;
  unsigned m = 1, n = 0, cap = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for sum-intersecting families and sum-free slices"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format (csv only for scans)")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", o.threads, "Worker threads for scans (default: all cores)")->check(CLI::PositiveNumber);

  using Runner = std::function<sumint_status(sumint_report**)>;
  std::map<CLI::App*, std::pair<Runner, bool>> runners;  // subcommand -> (call, tabular)

  auto add = [&](const std::string& name, const std::string& help, bool tabular, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    runners[sub] = {std::move(run), tabular};
    return sub;
  };

  auto* dist = add("dist", "Exact distribution of |S_alpha|", false, [&](sumint_report** r) {
    auto s = parse_set("--set", o.set);
    return sumint_dist(s.data(), s.size(), r);
  });
  dist->add_option("--set", o.set, "Set such as 1,3,4")->required();

  auto* joint = add("joint", "P[T is contained in S_alpha]", false, [&](sumint_report** r) {
    auto s = parse_set("--set", o.set);
    return sumint_joint(s.data(), s.size(), r);
  });
  joint->add_option("--set", o.set, "Set such as 1,4")->required();

  add("two-point-check", "Closed-form pair probability against interval measure", true,
      [&](sumint_report** r) { return sumint_two_point_check(o.max, r); })
      ->add_option("--max", o.max, "Largest element")->required();
  add("obs-check", "Range and shape of the error function over pairs", true,
      [&](sumint_report** r) { return sumint_obs_check(o.max, r); })
      ->add_option("--max", o.max, "Largest element")->required();
  add("triple-scan", "Maximum error-function sum over primitive triples", true,
      [&](sumint_report** r) { return sumint_triple_scan(o.max, r); })
      ->add_option("--max", o.max, "Largest element")->required();

  auto* pzero = add("pzero-scan", "Maximum P[S_alpha empty] over primitive sets of one size", true,
                    [&](sumint_report** r) { return sumint_pzero_scan(o.max, o.size, r); });
  pzero->add_option("--max", o.max, "Largest element")->required();
  pzero->add_option("--size", o.size, "Set size")->required();

  auto* bohr = add("bohr-scan", "Bohr-set lower bound on P[S_alpha empty]", true,
                   [&](sumint_report** r) { return sumint_bohr_scan(o.max, o.size, r); });
  bohr->add_option("--max", o.max, "Largest element")->required();
  bohr->add_option("--size", o.size, "Largest set size")->required();

  auto* mu = add("mu", "Evaluate mu(S) for a certificate", false, [&](sumint_report** r) {
    auto s = parse_set("--set", o.set);
    CertArg c(o.cert);
    return sumint_mu(s.data(), s.size(), c.ptrs.data(), c.ptrs.size(), r);
  });
  mu->add_option("--set", o.set, "Set such as 1,2 (empty string for the empty set)")->required();
  mu->add_option("--cert", o.cert, "Coefficients such as 17/8,-5/4")->required();

  auto* verify = add("verify-cert", "Check mu >= -1 on a finite pool", false, [&](sumint_report** r) {
    CertArg c(o.cert);
    return sumint_verify_cert(c.ptrs.data(), c.ptrs.size(), o.pool_max, o.pool_size, r);
  });
  verify->add_option("--cert", o.cert, "Coefficients")->required();
  verify->add_option("--pool-max", o.pool_max, "Largest pool element")->required();
  verify->add_option("--pool-size", o.pool_size, "Largest pool set size")->required();

  add("tail-verify", "Casework certifying mu >= -1 for every set size", false,
      [&](sumint_report** r) {
        CertArg c(o.cert);
        return sumint_tail_verify(c.ptrs.data(), c.ptrs.size(), r);
      })
      ->add_option("--cert", o.cert, "Coefficients c_0,c_1")->required();

  auto* lp = add("lp-search", "Optimal certificate for a finite pool", false,
                 [&](sumint_report** r) { return sumint_lp_search(o.pool_max, o.pool_size, o.m, r); });
  lp->add_option("--pool-max", o.pool_max, "Largest pool element")->required();
  lp->add_option("--pool-size", o.pool_size, "Largest pool set size")->required();
  lp->add_option("--m", o.m, "Highest level weighted by the certificate");

  auto* nu = add("build-nu", "Construct nu and its transform on F_2^n", false, [&](sumint_report** r) {
    CertArg c(o.cert);
    return sumint_build_nu(o.n, c.ptrs.data(), c.ptrs.size(), r);
  });
  nu->add_option("--n", o.n, "Dimension")->required();
  nu->add_option("--cert", o.cert, "Coefficients")->required();

  auto* fourier = add("fourier-check", "Convolution identity and LP bound for a family", false, [&](sumint_report** r) {
    CertArg c(o.cert);
    return sumint_fourier_check(o.n, o.family.c_str(), c.ptrs.data(), c.ptrs.size(), r);
  });
  fourier->add_option("--n", o.n, "Dimension")->required();
  fourier->add_option("--family", o.family, "superset:1,2 | explicit:1,2;1,2,3 | all")->required();
  fourier->add_option("--cert", o.cert, "Coefficients")->required();

  auto* pm = add("pointmass-check", "Point-mass vanishing for nu supported at T", false, [&](sumint_report** r) {
    auto t = parse_set("--subset", o.subset);
    return sumint_pointmass_check(o.n, t.data(), t.size(), o.family.c_str(), r);
  });
  pm->add_option("--n", o.n, "Dimension")->required();
  pm->add_option("--subset", o.subset, "T, e.g. 1 (empty string for the empty set)")->required();
  pm->add_option("--family", o.family, "superset:1,2 | explicit:1,2;1,2,3 | all")->required();

  auto* ext = add("extremal", "Exact maximum family by clique search", false,
                  [&](sumint_report** r) { return sumint_extremal(o.n, o.pred.c_str(), o.cap, r); });
  ext->add_option("--n", o.n, "Dimension")->required();
  ext->add_option("--pred", o.pred, "sum | distinct-sum | ksum:K");
  ext->add_option("--cap", o.cap, "Largest n accepted (default 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kExitUsage);
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto& [run, tabular] = runners.at(chosen);
  if (o.format == "csv" && !tabular) {
    std::cerr << "--format: csv output is only available for scan subcommands\n";
    return kExitUsage;
  }
  sumint_set_threads(o.threads);

  sumint_report* report = nullptr;
  sumint_status status = SUMINT_OK;
  try {
    status = run(&report);
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  if (status != SUMINT_OK) {
    std::cerr << "error (" << sumint_status_name(status) << "): " << sumint_last_error() << '\n';
    return status == SUMINT_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFail;
  }
  if (o.format == "csv")
    std::cout << sumint_report_csv(report);
  else
    std::cout << sumint_report_json(report) << '\n';
  const int code = sumint_report_passed(report) ? kExitPass : kExitFail;
  sumint_report_free(report);
  return code;
}
