// Command-line front end: run transforms on JSON inputs, run the
// law/reference check suites, and report operation-count benchmarks.
//
// Exit codes: 0 = success and every verification passed; 1 = at least
// one verification failed (the JSON carries the witness); 2 = invalid
// input or flags.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monofold/monofold.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace monofold;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

json report_to_json(const OracleReport& r) {
  json j;
  j["name"] = r.name;
  j["tolerance"] = r.tolerance;
  j["max_abs_error"] = r.max_abs_error;
  j["cases"] = r.cases;
  j["pass"] = r.pass;
  j["expected_pass"] = !oracle::report_expected_to_fail(r.name);
  if (r.witness) {
    json w;
    w["description"] = r.witness->description;
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    j["witness"] = std::move(w);
  }
  return j;
}

json spectrum_to_json(const ComplexSpectrum& s, bool conjugate) {
  json out = json::array();
  for (const auto& z : s) out.push_back({z.real(), conjugate ? -z.imag() : z.imag()});
  return out;
}

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

std::vector<double> parse_signal(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("input must be a nonempty array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw InvalidArgument("input entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

bool all_integers(const json& j) {
  for (const auto& v : j)
    if (!v.is_number_integer()) return false;
  return true;
}

std::vector<std::int64_t> parse_integer_signal(const json& j) {
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(v.get<std::int64_t>());
  return out;
}

std::vector<std::vector<double>> parse_square_array(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("input must be a nonempty 2D array");
  std::vector<std::vector<double>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(parse_signal(row));
  for (const auto& row : out)
    if (row.size() != out.size()) throw InvalidArgument("2D input must be square");
  return out;
}

struct TransformOptions {
  std::string kind;
  std::string input_path;
  std::int64_t n = -1;  // optional consistency check
  bool verify = false;
  bool conjugate = false;
  int dims = 1;
};

int run_transform(const TransformOptions& opt) {
  const json input = load_input(opt.input_path);
  json out;
  bool verify_pass = true;

  std::string kind = opt.kind;
  if (kind == "dft" && opt.dims == 2) kind = "dft2";
  if (opt.conjugate && kind != "dft" && kind != "dft2")
    throw InvalidArgument("--conjugate applies only to DFT kinds");
  if (opt.dims == 2 && kind != "dft2")
    throw InvalidArgument("--dims 2 applies only to the DFT");

  if (kind == "dft") {
    const std::vector<double> signal = parse_signal(input);
    if (opt.n >= 0 && static_cast<std::size_t>(opt.n) != signal.size())
      throw InvalidArgument("--n does not match input length");
    const ComplexSpectrum got = dft_1d(signal);
    out["kind"] = "dft";
    out["n"] = signal.size();
    out["result"] = spectrum_to_json(got, opt.conjugate);
    if (opt.verify) {
      const ComplexSpectrum want = oracle::naive_dft(signal);
      double err = 0.0;
      for (std::size_t k = 0; k < got.size(); ++k) {
        err = std::max(err, std::abs(got[k].real() - want[k].real()));
        err = std::max(err, std::abs(got[k].imag() - want[k].imag()));
      }
      const OracleReport r =
          make_report("dft1d-vs-naive", 1e-9 * static_cast<double>(signal.size()), err, 1);
      out["verify"] = report_to_json(r);
      verify_pass = r.pass;
    }
  } else if (kind == "dft2") {
    const auto array = parse_square_array(input);
    if (opt.n >= 0 && static_cast<std::size_t>(opt.n) != array.size())
      throw InvalidArgument("--n does not match input size");
    const auto got = dft_2d(array);
    json rows = json::array();
    for (const auto& row : got) rows.push_back(spectrum_to_json(row, opt.conjugate));
    out["kind"] = "dft2";
    out["n"] = array.size();
    out["result"] = std::move(rows);
    if (opt.verify) {
      const auto want = oracle::naive_dft2(array);
      double err = 0.0;
      for (std::size_t p = 0; p < got.size(); ++p)
        for (std::size_t k = 0; k < got.size(); ++k) {
          err = std::max(err, std::abs(got[p][k].real() - want[p][k].real()));
          err = std::max(err, std::abs(got[p][k].imag() - want[p][k].imag()));
        }
      const double n2 = static_cast<double>(array.size() * array.size());
      const OracleReport r = make_report("dft2d-vs-naive", 1e-9 * n2, err, 1);
      out["verify"] = report_to_json(r);
      verify_pass = r.pass;
    }
  } else if (kind == "hadamard" || kind == "hadamard-staged" || kind == "walsh") {
    if (!input.is_array() || input.empty())
      throw InvalidArgument("input must be a nonempty array");
    if (opt.n >= 0 && static_cast<std::size_t>(opt.n) != input.size())
      throw InvalidArgument("--n does not match input length");
    const std::size_t n = input.size();
    if (!is_power_of_two(n)) throw InvalidArgument("length must be a power of two");
    out["kind"] = kind;
    out["n"] = n;

    const bool integer_kind = all_integers(input);
    const auto run = [&](auto x) {
      using T = typename decltype(x)::value_type;
      std::vector<T> result;
      std::vector<T> want;
      std::string name;
      if (kind == "hadamard") {
        const HadamardPlan plan = build_hadamard_plan(n);
        result = wht_embedding(x, plan);
        want = hadamard_reference(x, plan);
        name = "hadamard-embedding-vs-reference";
      } else if (kind == "hadamard-staged") {
        const HadamardPlan plan = build_hadamard_plan(n);
        result = wht_staged(x);
        want = hadamard_reference(x, plan);
        name = "hadamard-staged-vs-reference";
      } else {
        const WalshPlan plan = build_walsh_plan(n);
        result = walsh_embedding(x, plan);
        want = walsh_reference(x, plan);
        name = "walsh-vs-reference";
      }
      out["result"] = result;
      if (opt.verify) {
        const double tol = std::is_integral_v<T> ? 0.0 : 1e-9;
        const OracleReport r = make_report(name, tol, max_abs_diff(result, want), 1);
        out["verify"] = report_to_json(r);
        verify_pass = r.pass;
      }
    };
    if (integer_kind)
      run(parse_integer_signal(input));
    else
      run(parse_signal(input));
  } else {
    throw InvalidArgument("unknown transform kind: " + kind);
  }

  std::cout << out.dump(2) << "\n";
  return verify_pass ? kExitOk : kExitVerifyFailed;
}

int run_check(std::uint64_t seed, std::size_t cases) {
  std::vector<OracleReport> reports = oracle::run_law_suite(seed, cases);
  std::vector<OracleReport> transform = oracle::run_transform_suite(seed, cases);
  reports.insert(reports.end(), std::make_move_iterator(transform.begin()),
                 std::make_move_iterator(transform.end()));

  bool all_ok = true;
  json out;
  out["command"] = "check";
  out["seed"] = seed;
  out["cases"] = cases;
  json rs = json::array();
  for (const auto& r : reports) {
    rs.push_back(report_to_json(r));
    if (r.pass == oracle::report_expected_to_fail(r.name)) all_ok = false;
  }
  out["reports"] = std::move(rs);
  out["pass"] = all_ok;
  std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int run_bench(const std::string& kind, std::size_t n, std::uint64_t seed) {
  json ops;
  Rng rng(seed);
  if (kind == "hadamard" || kind == "hadamard-staged") {
    if (!is_power_of_two(n)) throw InvalidArgument("bench: n must be a power of two");
    std::vector<std::int64_t> x(n);
    for (auto& v : x) v = rng.uniform_int(-100, 100);
    const HadamardPlan plan = build_hadamard_plan(n);
    std::size_t embedding = 0, staged = 0, reference = 0;
    (void)wht_embedding(x, plan, &embedding);
    (void)wht_staged(x, &staged);
    (void)hadamard_reference(x, plan, &reference);
    ops["embedding"] = embedding;
    ops["staged"] = staged;
    ops["reference"] = reference;
    ops["staged_bound_4nlog2n"] = 4 * n * log2_exact(n);
  } else if (kind == "walsh") {
    if (!is_power_of_two(n)) throw InvalidArgument("bench: n must be a power of two");
    std::vector<std::int64_t> x(n);
    for (auto& v : x) v = rng.uniform_int(-100, 100);
    const WalshPlan plan = build_walsh_plan(n);
    std::size_t embedding = 0, reference = 0;
    (void)walsh_embedding(x, plan, &embedding);
    (void)walsh_reference(x, plan, &reference);
    ops["embedding"] = embedding;
    ops["reference"] = reference;
  } else if (kind == "dft") {
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);
    const DftPlan plan = build_dft_plan(n);
    std::size_t embedding = 0;
    (void)dft_1d(x, plan, &embedding);
    // Direct-sum cost: n complex multiply-adds per coefficient.
    ops["embedding"] = embedding;
    ops["reference"] = 8 * n * n;
  } else {
    throw InvalidArgument("bench: unsupported kind: " + kind);
  }

  json out;
  out["command"] = "bench";
  out["kind"] = kind;
  out["n"] = n;
  out["seed"] = seed;
  out["ops"] = std::move(ops);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional fold transforms (DFT, Hadamard, Walsh) with oracle checks"};
  app.require_subcommand(1);

  TransformOptions topt;
  CLI::App* transform = app.add_subcommand("transform", "run one transform on a JSON input");
  transform->add_option("--kind", topt.kind, "dft | dft2 | hadamard | hadamard-staged | walsh")
      ->required();
  transform->add_option("--input", topt.input_path, "path to JSON input")->required();
  transform->add_option("--n", topt.n, "expected input length (consistency check)");
  transform->add_flag("--verify", topt.verify, "compare against the brute-force reference");
  transform->add_flag("--conjugate", topt.conjugate,
                      "emit the conventional (negative-exponent) DFT kernel");
  transform->add_option("--dims", topt.dims, "1 or 2 (DFT only)")->check(CLI::Range(1, 2));

  std::uint64_t seed = 0;
  std::size_t cases = 100;
  CLI::App* check = app.add_subcommand("check", "run law and transform-vs-reference suites");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--cases", cases, "cases per report");

  std::string bench_kind;
  std::size_t bench_n = 16;
  std::uint64_t bench_seed = 0;
  CLI::App* bench = app.add_subcommand("bench", "report counted scalar operations");
  bench->add_option("--kind", bench_kind, "dft | hadamard | walsh")->required();
  bench->add_option("--n", bench_n, "transform size")->required();
  bench->add_option("--seed", bench_seed, "input seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*transform) return run_transform(topt);
    if (*check) return run_check(seed, cases);
    if (*bench) return run_bench(bench_kind, bench_n, bench_seed);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
