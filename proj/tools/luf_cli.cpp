// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: compute LUF/LSF arrays for a word, cross-verify
// the fast path against brute-force oracles, benchmark instrumented runs,
// and generate test words.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unbordered/gen.hpp"
#include "unbordered/lsf.hpp"
#include "unbordered/luf.hpp"
#include "unbordered/verify.hpp"
#include "unbordered/word.hpp"

namespace {

using unbordered::BetaBackend;
using unbordered::Word;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitIoError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed to read input");
  return std::move(buf).str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open input file: " + path);
  return read_stream(f);
}

// Writes either to stdout or to --out FILE; failures exit with kExitIoError.
void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw IoError("cannot open output file: " + out_path);
  f << payload;
  if (!f) throw IoError("failed to write output file: " + out_path);
}

Word word_from_text(const std::string& raw, bool tokens) {
  if (tokens) {
    std::istringstream is(raw);
    std::vector<long long> vals;
    std::string tok;
    while (is >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw IoError("tokens mode: not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw IoError("tokens mode: not an integer: '" + tok + "'");
      vals.push_back(v);
    }
    return Word::from_tokens(vals);
  }
  // Bytes mode: one trailing newline is input framing, everything else is a
  // symbol.
  std::string_view sv(raw);
  if (sv.ends_with('\n')) sv.remove_suffix(1);
  if (sv.ends_with('\r')) sv.remove_suffix(1);
  return Word::from_bytes(sv);
}

std::vector<std::int32_t> parse_int_list(const std::string& text) {
  // Comma-separated values, each either N or A..B (inclusive).
  std::vector<std::int32_t> vals;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("empty item in list: " + text);
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        vals.push_back(std::stoi(item));
      } else {
        const int a = std::stoi(item.substr(0, dots));
        const int b = std::stoi(item.substr(dots + 2));
        if (b < a) throw CLI::ValidationError("descending range: " + item);
        for (int v = a; v <= b; ++v) vals.push_back(v);
      }
    } catch (const CLI::ValidationError&) {
      throw;
    } catch (const std::exception&) {
      throw CLI::ValidationError("not an integer: '" + item + "'");
    }
  }
  if (vals.empty()) throw CLI::ValidationError("empty list: " + text);
  return vals;
}

std::string format_row(const std::string& label, const std::vector<std::string>& cells,
                       int width) {
  std::ostringstream os;
  os << label;
  for (const auto& c : cells) {
    os << ' ' << std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(c.size()))), ' ')
       << c;
  }
  os << '\n';
  return os.str();
}

std::string render_text(const unbordered::LufResult& res, const unbordered::LsfArrays* lsf) {
  const std::int32_t n = static_cast<std::int32_t>(res.luf.size());
  std::vector<std::string> idx_cells, luf_cells, len_cells, ref_cells, hook_cells;
  int width = 1;
  const auto cell = [&width](std::int32_t v) {
    std::string s = std::to_string(v);
    width = std::max(width, static_cast<int>(s.size()));
    return s;
  };
  for (std::int32_t i = 1; i <= n; ++i) {
    idx_cells.push_back(cell(i));
    luf_cells.push_back(cell(res.luf[i - 1]));
    if (lsf != nullptr) {
      len_cells.push_back(cell(lsf->len[i - 1]));
      if (lsf->ref[i - 1].has_value()) {
        ref_cells.push_back(cell(*lsf->ref[i - 1]));
      } else {
        ref_cells.push_back("nil");
        width = std::max(width, 3);
      }
      hook_cells.push_back(cell(res.hook[i - 1]));
    }
  }
  std::ostringstream os;
  os << format_row("i:    ", idx_cells, width);
  os << format_row("LUF:  ", luf_cells, width);
  if (lsf != nullptr) {
    os << format_row("LSF_l:", len_cells, width);
    os << format_row("LSF_r:", ref_cells, width);
    os << format_row("HOOK: ", hook_cells, width);
  }
  if (n > 0) os << "mu = " << unbordered::mu_of(res.luf) << '\n';
  return os.str();
}

std::string render_json(const unbordered::LufResult& res, const unbordered::LsfArrays* lsf) {
  nlohmann::json doc;
  doc["luf"] = res.luf;
  doc["mu"] = res.luf.empty() ? nlohmann::json(nullptr) : nlohmann::json(unbordered::mu_of(res.luf));
  if (lsf != nullptr) {
    doc["lsf_len"] = lsf->len;
    nlohmann::json refs = nlohmann::json::array();
    for (const auto& r : lsf->ref) {
      if (r.has_value()) {
        refs.push_back(*r);
      } else {
        refs.push_back(nullptr);
      }
    }
    doc["lsf_ref"] = std::move(refs);
    doc["hook"] = res.hook;
  }
  return doc.dump() + "\n";
}

std::string render_csv(const unbordered::LufResult& res, const unbordered::LsfArrays* lsf) {
  std::ostringstream os;
  os << (lsf != nullptr ? "i,luf,lsf_len,lsf_ref,hook" : "i,luf") << '\n';
  for (std::size_t k = 0; k < res.luf.size(); ++k) {
    os << (k + 1) << ',' << res.luf[k];
    if (lsf != nullptr) {
      os << ',' << lsf->len[k] << ',';
      if (lsf->ref[k].has_value()) {
        os << *lsf->ref[k];
      } else {
        os << "nil";
      }
      os << ',' << res.hook[k];
    }
    os << '\n';
  }
  return os.str();
}

struct ComputeArgs {
  std::string input = "-";
  std::string format = "text";
  std::string backend = "fingerprint";
  std::string out;
  bool tokens = false;
  bool arrays = false;
};

int cmd_compute(const ComputeArgs& args) {
  const Word w = word_from_text(read_input(args.input), args.tokens);
  unbordered::LufOptions opts;
  opts.backend = unbordered::parse_backend(args.backend);
  const unbordered::LufResult res = unbordered::compute_luf(w, opts);

  std::optional<unbordered::LsfArrays> lsf;
  if (args.arrays) lsf = unbordered::compute_lsf(w);
  const unbordered::LsfArrays* lsf_ptr = lsf.has_value() ? &*lsf : nullptr;

  std::string payload;
  if (args.format == "text") {
    payload = render_text(res, lsf_ptr);
  } else if (args.format == "json") {
    payload = render_json(res, lsf_ptr);
  } else {
    payload = render_csv(res, lsf_ptr);
  }
  write_output(args.out, payload);
  return kExitOk;
}

struct VerifyArgs {
  std::int64_t trials = 1000;
  std::int32_t n_max = 512;
  std::string sigmas = "2,3,4,26";
  std::uint64_t seed = 1;
  std::string backend = "fingerprint";
};

int cmd_verify(const VerifyArgs& args) {
  unbordered::VerifyOptions opts;
  opts.trials = args.trials;
  opts.n_max = args.n_max;
  opts.sigmas = parse_int_list(args.sigmas);
  opts.seed0 = args.seed;
  opts.backend = unbordered::parse_backend(args.backend);
  const unbordered::VerifyReport rep = unbordered::verify_random_words(opts, &std::cerr);
  std::cout << "verified " << rep.cases << " words: " << rep.mismatches << " mismatches\n";
  return rep.mismatches == 0 ? kExitOk : kExitMismatch;
}

struct BenchArgs {
  std::string family;
  std::string t_list = "3..8";
  std::string n_list = "1000,10000";
  std::int32_t sigma = 2;
  std::uint64_t seed = 1;
  std::string backend = "fingerprint";
  std::string out;
};

int cmd_bench(const BenchArgs& args) {
  std::vector<unbordered::GenSpec> specs;
  if (args.family == "worstcase") {
    for (const std::int32_t t : parse_int_list(args.t_list)) {
      unbordered::GenSpec g;
      g.family = unbordered::GenSpec::Family::worstcase;
      g.t = t;
      specs.push_back(g);
    }
  } else {
    for (const std::int32_t n : parse_int_list(args.n_list)) {
      unbordered::GenSpec g;
      g.family = unbordered::GenSpec::Family::random;
      g.n = n;
      g.sigma = args.sigma;
      g.seed = args.seed;
      specs.push_back(g);
    }
  }
  unbordered::LufOptions opts;
  opts.backend = unbordered::parse_backend(args.backend);

  std::ostringstream os;
  os << unbordered::stats_csv_header() << '\n';
  for (const auto& spec : specs) {
    const Word w = unbordered::generate(spec);
    const unbordered::LufResult res = unbordered::compute_luf(w, opts);
    os << unbordered::stats_csv_row(unbordered::describe(spec), res.stats) << '\n';
  }
  write_output(args.out, os.str());
  return kExitOk;
}

struct GenArgs {
  std::string family;
  int t = 4;
  std::int32_t n = 100;
  std::int32_t sigma = 2;
  std::uint64_t seed = 1;
  bool tokens = false;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  unbordered::GenSpec spec;
  if (args.family == "worstcase") {
    spec.family = unbordered::GenSpec::Family::worstcase;
    spec.t = args.t;
  } else {
    spec.family = unbordered::GenSpec::Family::random;
    spec.n = args.n;
    spec.sigma = args.sigma;
    spec.seed = args.seed;
  }
  const Word w = unbordered::generate(spec);

  std::ostringstream os;
  bool as_tokens = args.tokens;
  if (!as_tokens && w.sigma() > 26) {
    std::cerr << "note: sigma > 26, emitting integer tokens\n";
    as_tokens = true;
  }
  if (as_tokens) {
    const auto s = w.symbols();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0) os << ' ';
      os << s[k];
    }
  } else {
    for (const std::int32_t r : w.symbols()) os << static_cast<char>('a' + r - 1);
  }
  os << '\n';
  write_output(args.out, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"longest unbordered factor toolkit"};
  app.require_subcommand(1);

  const auto backend_check = CLI::IsMember({"exact", "fingerprint", "fingerprint-paranoid"});
  const auto format_check = CLI::IsMember({"text", "json", "csv"});
  const auto family_check = CLI::IsMember({"worstcase", "random"});

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand(
      "compute", "compute the LUF array of a word (file path or - for stdin)");
  compute->add_option("input", compute_args.input, "input file, or - for stdin")
      ->capture_default_str();
  compute->add_flag("--tokens", compute_args.tokens,
                    "parse input as whitespace-separated integer tokens");
  compute->add_option("--format", compute_args.format, "output format")
      ->check(format_check)
      ->capture_default_str();
  compute->add_option("--backend", compute_args.backend, "factor-equality backend")
      ->check(backend_check)
      ->capture_default_str();
  compute->add_flag("--arrays", compute_args.arrays, "also print LSF and hook arrays");
  compute->add_option("--out", compute_args.out, "write output to this file");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "cross-check the fast path against brute-force oracles");
  verify->add_option("--trials", verify_args.trials, "number of random words")
      ->capture_default_str();
  verify->add_option("--nmax", verify_args.n_max, "maximum word length")->capture_default_str();
  verify->add_option("--sigma", verify_args.sigmas, "alphabet sizes, comma-separated")
      ->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "seed of the first trial")
      ->capture_default_str();
  verify->add_option("--backend", verify_args.backend, "factor-equality backend")
      ->check(backend_check)
      ->capture_default_str();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "run instrumented computations, emit CSV");
  bench->add_option("--family", bench_args.family, "instance family")
      ->check(family_check)
      ->required();
  bench->add_option("--t", bench_args.t_list, "worstcase sizes, e.g. 3..16 or 4,8")
      ->capture_default_str();
  bench->add_option("--n", bench_args.n_list, "random lengths, e.g. 1000,10000")
      ->capture_default_str();
  bench->add_option("--sigma", bench_args.sigma, "alphabet size for random instances")
      ->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "seed for random instances")
      ->capture_default_str();
  bench->add_option("--backend", bench_args.backend, "factor-equality backend")
      ->check(backend_check)
      ->capture_default_str();
  bench->add_option("--out", bench_args.out, "write CSV to this file");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a test word");
  gen->add_option("--family", gen_args.family, "instance family")
      ->check(family_check)
      ->required();
  gen->add_option("--t", gen_args.t, "worstcase size parameter")->capture_default_str();
  gen->add_option("--n", gen_args.n, "random word length")->capture_default_str();
  gen->add_option("--sigma", gen_args.sigma, "random alphabet size")->capture_default_str();
  gen->add_option("--seed", gen_args.seed, "random seed")->capture_default_str();
  gen->add_flag("--tokens", gen_args.tokens, "emit integer tokens instead of letters");
  gen->add_option("--out", gen_args.out, "write the word to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(compute_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (bench->parsed()) return cmd_bench(bench_args);
    if (gen->parsed()) return cmd_gen(gen_args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitOk;
}
