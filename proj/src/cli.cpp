#include "lefschetz/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lefschetz/partitions.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz {
namespace {

int emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
  } else {
    write_report_atomic(out_path, content);
  }
  return 0;
}

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("LEFSCHETZ_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = static_cast<unsigned>(v);
  }
  if (n > 64) n = 64;
  if (jobs > 0 && jobs < n) n = static_cast<unsigned>(jobs);
  return n;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << " ";
    os << values[i];
  }
  return os.str();
}

std::string json_dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

OutputFormat checked_format(const std::string& name, std::initializer_list<OutputFormat> allowed) {
  const OutputFormat f = parse_format(name);
  for (OutputFormat a : allowed) {
    if (f == a) return f;
  }
  throw std::invalid_argument("format not supported by this subcommand: " + name);
}

int run_hvector(const CIParams& params, const std::string& format, const std::string& out_path,
                std::ostream& out) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  const HVector h = h_vector(params);
  std::ostringstream os;
  if (f == OutputFormat::text) {
    os << join(h) << "\n";
  } else if (f == OutputFormat::csv) {
    os << "d,h\n";
    for (std::size_t d = 0; d < h.size(); ++d) os << d << "," << h[d] << "\n";
  } else {
    nlohmann::ordered_json j;
    j["alpha"] = params.alpha();
    j["beta"] = params.beta();
    j["gamma"] = params.gamma();
    j["socle_degree"] = params.socle_degree();
    j["h"] = h;
    os << json_dump(j);
  }
  return emit(os.str(), out_path, out);
}

int run_matrix(const CIParams& params, int degree, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::coo});
  const int d = degree >= 0 ? degree : peak_profile(params).s;
  const LefschetzMatrix lm = lefschetz_matrix(params, d);
  std::ostringstream os;
  if (f == OutputFormat::text) {
    for (int i = 0; i < lm.matrix.rows(); ++i) {
      for (int j = 0; j < lm.matrix.cols(); ++j) {
        if (j > 0) os << " ";
        os << lm.matrix.at(i, j);
      }
      os << "\n";
    }
  } else {
    for (int i = 0; i < lm.matrix.rows(); ++i) {
      for (int j = 0; j < lm.matrix.cols(); ++j) {
        if (lm.matrix.at(i, j) != 0) os << (i + 1) << " " << (j + 1) << "\n";
      }
    }
  }
  return emit(os.str(), out_path, out);
}

int run_wlp(const CIParams& params, long long p, const std::string& method,
            const std::string& format, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  std::vector<WlpVerdict> verdicts;
  bool disagree = false;
  if (method == "direct") {
    verdicts.push_back(wlp_direct(params, p));
  } else if (method == "theorem") {
    verdicts.push_back(wlp_by_theorem(params, p));
  } else if (method == "all") {
    verdicts.push_back(wlp_direct(params, p));
    verdicts.push_back(wlp_by_theorem(params, p));
    disagree = verdicts[0].holds != verdicts[1].holds;
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }

  std::ostringstream os;
  if (f == OutputFormat::text) {
    for (const WlpVerdict& v : verdicts) os << verdict_text(v) << "\n";
  } else if (f == OutputFormat::csv) {
    os << kVerdictCsvHeader << "\n";
    for (const WlpVerdict& v : verdicts) os << verdict_csv_row(v) << "\n";
  } else {
    if (verdicts.size() == 1) {
      os << json_dump(verdict_json(verdicts[0]));
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const WlpVerdict& v : verdicts) arr.push_back(verdict_json(v));
      os << json_dump(arr);
    }
  }
  emit(os.str(), out_path, out);
  if (disagree) {
    err << "internal consistency failure: direct and theorem verdicts disagree\n";
    return 2;
  }
  return 0;
}

int run_primes(const CIParams& params, const std::string& method, const std::string& format,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  std::vector<long long> primes;
  bool disagree = false;
  std::vector<long long> direct_primes, theorem_primes;
  if (method == "direct") {
    primes = failing_primes(params, FailingPrimesMethod::direct);
  } else if (method == "theorem") {
    primes = failing_primes(params, FailingPrimesMethod::theorem);
  } else if (method == "all") {
    direct_primes = failing_primes(params, FailingPrimesMethod::direct);
    theorem_primes = failing_primes(params, FailingPrimesMethod::theorem);
    disagree = direct_primes != theorem_primes;
    primes = direct_primes;
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }

  std::ostringstream os;
  if (f == OutputFormat::text) {
    os << join(primes) << "\n";
  } else if (f == OutputFormat::csv) {
    os << "alpha,beta,gamma,method,failing_primes\n"
       << params.alpha() << "," << params.beta() << "," << params.gamma() << "," << method << ","
       << join(primes) << "\n";
  } else {
    nlohmann::ordered_json j;
    j["alpha"] = params.alpha();
    j["beta"] = params.beta();
    j["gamma"] = params.gamma();
    j["method"] = method;
    j["failing_primes"] = primes;
    os << json_dump(j);
  }
  emit(os.str(), out_path, out);
  if (disagree) {
    err << "internal consistency failure: failing primes disagree (direct: " << join(direct_primes)
        << ") (theorem: " << join(theorem_primes) << ")\n";
    return 2;
  }
  return 0;
}

int run_window_algebra(const CIParams& params, const std::string& format,
                       const std::string& out_path, std::ostream& out) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  const auto [lo, hi] = prime_power_window_bounds(params);
  const std::vector<PrimePower> pps = prime_power_window(params);
  std::vector<long long> primes;
  for (const PrimePower& pp : pps) {
    if (primes.empty() || primes.back() != pp.p) primes.push_back(pp.p);
  }

  std::ostringstream os;
  if (f == OutputFormat::text) {
    os << "window " << lo << " " << hi << "\n";
    for (const PrimePower& pp : pps) os << pp.p << "^" << pp.n << "=" << pp.value << "\n";
    os << "primes " << join(primes) << "\n";
  } else if (f == OutputFormat::csv) {
    os << "p,n,value\n";
    for (const PrimePower& pp : pps) os << pp.p << "," << pp.n << "," << pp.value << "\n";
  } else {
    nlohmann::ordered_json j;
    j["alpha"] = params.alpha();
    j["beta"] = params.beta();
    j["gamma"] = params.gamma();
    j["window"] = {{"lo", lo}, {"hi", hi}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const PrimePower& pp : pps) {
      arr.push_back({{"prime", pp.p}, {"exponent", pp.n}, {"value", pp.value}});
    }
    j["prime_powers"] = std::move(arr);
    j["primes"] = primes;
    os << json_dump(j);
  }
  return emit(os.str(), out_path, out);
}

int run_window_box(const BoxDims& box, const std::string& format, const std::string& out_path,
                   std::ostream& out) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  const auto [lo, hi] = box_divisor_window_bounds(box);
  const std::vector<long long> primes = box_divisor_window(box);

  std::ostringstream os;
  if (f == OutputFormat::text) {
    os << "window " << lo << " " << hi << "\n";
    os << "primes " << join(primes) << "\n";
  } else if (f == OutputFormat::csv) {
    os << "p\n";
    for (long long p : primes) os << p << "\n";
  } else {
    nlohmann::ordered_json j;
    j["box"] = {box.a, box.b, box.c};
    j["window"] = {{"lo", lo}, {"hi", hi}};
    j["primes"] = primes;
    os << json_dump(j);
  }
  return emit(os.str(), out_path, out);
}

int run_ppcount(const BoxDims& box, const std::string& method, const EnumerationGuard& eguard,
                const TransferGuard& tguard, const std::string& format,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  std::vector<std::pair<std::string, mpz_class>> counts;
  if (method == "enumeration" || method == "all") {
    counts.emplace_back("enumeration", count_by_enumeration(box, eguard));
  }
  if (method == "transfer" || method == "all") {
    counts.emplace_back("transfer", count_by_transfer(box, tguard));
  }
  if (method == "determinant" || method == "all") {
    counts.emplace_back("determinant", count_by_determinant(box));
  }
  if (method == "macmahon" || method == "all") {
    counts.emplace_back("macmahon", macmahon(box));
  }
  if (counts.empty()) throw std::invalid_argument("unknown method: " + method);

  bool agree = true;
  for (const auto& [name, value] : counts) agree = agree && value == counts[0].second;

  std::ostringstream os;
  if (f == OutputFormat::text) {
    if (counts.size() == 1) {
      os << counts[0].second.get_str() << "\n";
    } else {
      for (const auto& [name, value] : counts) os << name << " " << value.get_str() << "\n";
      os << "agree " << (agree ? "true" : "false") << "\n";
    }
  } else if (f == OutputFormat::csv) {
    os << "method,count\n";
    for (const auto& [name, value] : counts) os << name << "," << value.get_str() << "\n";
  } else {
    nlohmann::ordered_json j;
    j["box"] = {box.a, box.b, box.c};
    nlohmann::ordered_json cj;
    for (const auto& [name, value] : counts) cj[name] = value.get_str();
    j["counts"] = std::move(cj);
    if (counts.size() > 1) j["agree"] = agree;
    os << json_dump(j);
  }
  emit(os.str(), out_path, out);
  if (!agree) {
    err << "internal consistency failure: counting methods disagree\n";
    return 2;
  }
  return 0;
}

int run_factor(const BoxDims& box, long long prime_bound, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  const PrimeFactorization factors = macmahon_factorization(box, prime_bound);

  std::ostringstream os;
  if (f == OutputFormat::text) {
    for (const auto& [p, exp] : factors) os << p << " " << exp << "\n";
  } else if (f == OutputFormat::csv) {
    os << "p,exponent\n";
    for (const auto& [p, exp] : factors) os << p << "," << exp << "\n";
  } else {
    nlohmann::ordered_json j;
    j["box"] = {box.a, box.b, box.c};
    j["prime_bound"] = prime_bound == 0 ? box.side_sum() : prime_bound;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [p, exp] : factors) arr.push_back({{"p", p}, {"exponent", exp}});
    j["factors"] = std::move(arr);
    os << json_dump(j);
  }
  return emit(os.str(), out_path, out);
}

int run_conjecture(int d_max, const std::string& format, const std::string& out_path,
                   std::ostream& out) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  const std::vector<ConjectureRow> rows = conjecture_char2_scan(d_max);

  std::ostringstream os;
  if (f == OutputFormat::text) {
    for (const ConjectureRow& r : rows) {
      os << "d=" << r.d << " holds=" << (r.holds_in_char2 ? "true" : "false")
         << " predicted=" << (r.predicted ? "true" : "false")
         << " agree=" << (r.agree ? "true" : "false") << "\n";
    }
  } else if (f == OutputFormat::csv) {
    os << "d,holds,predicted,agree\n";
    for (const ConjectureRow& r : rows) {
      os << r.d << "," << (r.holds_in_char2 ? "true" : "false") << ","
         << (r.predicted ? "true" : "false") << "," << (r.agree ? "true" : "false") << "\n";
    }
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ConjectureRow& r : rows) {
      arr.push_back({{"d", r.d},
                     {"holds", r.holds_in_char2},
                     {"predicted", r.predicted},
                     {"agree", r.agree}});
    }
    os << json_dump(arr);
  }
  return emit(os.str(), out_path, out);
}

struct ScanJob {
  CIParams params;
  std::vector<WlpVerdict> verdicts;
  std::vector<Disagreement> disagreements;
};

int run_scan(int lo, int hi, int max_sum, long long prime_bound, const std::string& method,
             const std::string& format, const std::string& out_path, std::ostream& out,
             std::ostream& err) {
  const OutputFormat f = checked_format(format, {OutputFormat::text, OutputFormat::csv, OutputFormat::json});
  if (lo < 1 || hi < lo) throw std::invalid_argument("scan: need 1 <= min <= max");
  if (method != "direct" && method != "theorem" && method != "all") {
    throw std::invalid_argument("unknown method: " + method);
  }

  std::vector<ScanJob> jobs;
  for (int a = lo; a <= hi; ++a) {
    for (int b = a; b <= hi; ++b) {
      for (int g = b; g <= hi; ++g) {
        if (max_sum > 0 && a + b + g > max_sum) continue;
        jobs.push_back({CIParams(a, b, g), {}, {}});
      }
    }
  }
  const std::vector<long long> primes = primes_below(prime_bound + 1);

  auto work = [&](ScanJob& job) {
    // Reuse the matrix across primes; socle degree 0 has no matrix and
    // wlp_direct short-circuits there anyway.
    IntMatrix matrix;
    const bool need_direct = method != "theorem";
    const bool has_matrix = job.params.socle_degree() > 0;
    if (need_direct && has_matrix) matrix = lefschetz_matrix(job.params).matrix;
    for (long long p : primes) {
      if (method == "theorem") {
        job.verdicts.push_back(wlp_by_theorem(job.params, p));
        continue;
      }
      const WlpVerdict direct_v =
          has_matrix ? wlp_direct(job.params, matrix, p) : wlp_direct(job.params, p);
      job.verdicts.push_back(direct_v);
      if (method == "all") {
        const WlpVerdict theorem_v = wlp_by_theorem(job.params, p);
        if (direct_v.holds != theorem_v.holds) {
          job.disagreements.push_back({p, direct_v.holds, theorem_v.holds});
        }
      }
    }
  };

  const unsigned workers = worker_count(jobs.size());
  if (workers <= 1) {
    for (ScanJob& job : jobs) work(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= jobs.size()) return;
          work(jobs[i]);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  std::ostringstream os;
  if (f == OutputFormat::text) {
    for (const ScanJob& job : jobs) {
      for (const WlpVerdict& v : job.verdicts) os << verdict_text(v) << "\n";
    }
  } else if (f == OutputFormat::csv) {
    os << kVerdictCsvHeader << "\n";
    for (const ScanJob& job : jobs) {
      for (const WlpVerdict& v : job.verdicts) os << verdict_csv_row(v) << "\n";
    }
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ScanJob& job : jobs) {
      for (const WlpVerdict& v : job.verdicts) arr.push_back(verdict_json(v));
    }
    os << json_dump(arr);
  }
  emit(os.str(), out_path, out);

  bool any_disagreement = false;
  for (const ScanJob& job : jobs) {
    for (const Disagreement& d : job.disagreements) {
      any_disagreement = true;
      err << "disagreement alpha=" << job.params.alpha() << " beta=" << job.params.beta()
          << " gamma=" << job.params.gamma() << " p=" << d.p << " direct="
          << (d.direct_holds ? "holds" : "fails") << " theorem="
          << (d.theorem_holds ? "holds" : "fails") << "\n";
    }
  }
  if (any_disagreement) {
    err << "internal consistency failure: direct and theorem verdicts disagree\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"weak Lefschetz property of monomial complete intersections K[x,y,z]/(x^a, y^b, z^g)"};
  app.name("lefschetz");
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->capture_default_str();
    sub->add_option("--out", out_path, "write the report to this path (atomically)");
  };

  int a = 0, b = 0, g = 0;
  auto add_algebra = [&](CLI::App* sub, bool required) {
    CLI::Option* oa = sub->add_option("-a,--alpha", a, "first exponent");
    CLI::Option* ob = sub->add_option("-b,--beta", b, "second exponent");
    CLI::Option* og = sub->add_option("-g,--gamma", g, "third exponent");
    if (required) {
      oa->required();
      ob->required();
      og->required();
    }
  };

  CLI::App* hvector_cmd = app.add_subcommand("hvector", "h-vector of the quotient");
  add_common(hvector_cmd);
  add_algebra(hvector_cmd, true);

  CLI::App* matrix_cmd = app.add_subcommand("matrix", "multiplication-by-(x+y+z) matrix in colex bases");
  add_common(matrix_cmd);
  add_algebra(matrix_cmd, true);
  int degree = -1;
  matrix_cmd->add_option("--degree", degree, "source degree (default: lower middle degree)");

  CLI::App* wlp_cmd = app.add_subcommand("wlp", "decide the weak Lefschetz property");
  add_common(wlp_cmd);
  add_algebra(wlp_cmd, true);
  long long characteristic = 0;
  std::string method = "theorem";
  wlp_cmd->add_option("--char", characteristic, "characteristic: 0 or a prime")->capture_default_str();
  wlp_cmd->add_option("--method", method, "direct | theorem | all");

  CLI::App* primes_cmd = app.add_subcommand("primes", "all characteristics where the property fails");
  add_common(primes_cmd);
  add_algebra(primes_cmd, true);
  std::string primes_method = "all";
  primes_cmd->add_option("--method", primes_method, "direct | theorem | all")->capture_default_str();

  CLI::App* window_cmd =
      app.add_subcommand("window", "prime-power failure window (algebra) or divisor window (box)");
  add_common(window_cmd);
  add_algebra(window_cmd, false);
  std::vector<long long> window_box;
  window_cmd->add_option("box", window_box, "box sides a b c")->expected(3);

  CLI::App* ppcount_cmd = app.add_subcommand("ppcount", "count plane partitions in a box");
  add_common(ppcount_cmd);
  std::vector<long long> ppcount_box;
  ppcount_cmd->add_option("box", ppcount_box, "box sides a b c")->expected(3)->required();
  std::string ppcount_method = "all";
  ppcount_cmd->add_option("--method", ppcount_method,
                          "enumeration | transfer | determinant | macmahon | all")
      ->capture_default_str();
  EnumerationGuard eguard;
  TransferGuard tguard;
  ppcount_cmd->add_option("--max-cells", eguard.max_cells, "enumeration guard on a*b")
      ->capture_default_str();
  ppcount_cmd->add_option("--max-height", eguard.max_height, "enumeration guard on c")
      ->capture_default_str();
  ppcount_cmd->add_option("--max-states", tguard.max_states, "transfer guard on state count")
      ->capture_default_str();

  CLI::App* factor_cmd = app.add_subcommand("factor", "prime factorization of the box count");
  add_common(factor_cmd);
  std::vector<long long> factor_box;
  factor_cmd->add_option("box", factor_box, "box sides a b c")->expected(3)->required();
  long long prime_bound = 0;
  factor_cmd->add_option("--prime-bound", prime_bound, "scan primes below this (default a+b+c)");

  CLI::App* conjecture_cmd =
      app.add_subcommand("conjecture", "characteristic-2 scan of equal exponents (d,d,d)");
  add_common(conjecture_cmd);
  int dmax = 20;
  conjecture_cmd->add_option("--dmax", dmax, "largest d")->capture_default_str();

  CLI::App* scan_cmd = app.add_subcommand("scan", "sweep a parameter grid over small primes");
  add_common(scan_cmd);
  int scan_min = 1, scan_max = 0, scan_max_sum = 0;
  long long scan_prime_bound = 60;
  std::string scan_method = "all";
  bool cross_validate_flag = false;
  scan_cmd->add_option("--min", scan_min, "smallest exponent")->capture_default_str();
  scan_cmd->add_option("--max", scan_max, "largest exponent")->required();
  scan_cmd->add_option("--max-sum", scan_max_sum, "skip triples with alpha+beta+gamma above this");
  scan_cmd->add_option("--prime-bound", scan_prime_bound, "test primes up to this")
      ->capture_default_str();
  scan_cmd->add_option("--method", scan_method, "direct | theorem | all")->capture_default_str();
  scan_cmd->add_flag("--cross-validate", cross_validate_flag,
                     "compare both methods and exit 2 on any disagreement");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (hvector_cmd->parsed()) return run_hvector(CIParams(a, b, g), format, out_path, out);
    if (matrix_cmd->parsed()) return run_matrix(CIParams(a, b, g), degree, format, out_path, out);
    if (wlp_cmd->parsed()) {
      return run_wlp(CIParams(a, b, g), characteristic, method, format, out_path, out, err);
    }
    if (primes_cmd->parsed()) {
      return run_primes(CIParams(a, b, g), primes_method, format, out_path, out, err);
    }
    if (window_cmd->parsed()) {
      const bool algebra_given = window_cmd->count("--alpha") > 0;
      if (algebra_given == !window_box.empty()) {
        throw std::invalid_argument("window: give either -a/-b/-g or a box, not both");
      }
      if (!window_box.empty()) {
        return run_window_box(BoxDims(window_box[0], window_box[1], window_box[2]), format,
                              out_path, out);
      }
      if (window_cmd->count("--beta") == 0 || window_cmd->count("--gamma") == 0) {
        throw std::invalid_argument("window: algebra mode needs all of -a, -b, -g");
      }
      return run_window_algebra(CIParams(a, b, g), format, out_path, out);
    }
    if (ppcount_cmd->parsed()) {
      return run_ppcount(BoxDims(ppcount_box[0], ppcount_box[1], ppcount_box[2]), ppcount_method,
                         eguard, tguard, format, out_path, out, err);
    }
    if (factor_cmd->parsed()) {
      return run_factor(BoxDims(factor_box[0], factor_box[1], factor_box[2]), prime_bound, format,
                        out_path, out);
    }
    if (conjecture_cmd->parsed()) return run_conjecture(dmax, format, out_path, out);
    if (scan_cmd->parsed()) {
      const std::string effective_method = cross_validate_flag ? "all" : scan_method;
      return run_scan(scan_min, scan_max, scan_max_sum, scan_prime_bound, effective_method, format,
                      out_path, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace lefschetz
