#include "cli.hpp"

#include <cerrno>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skipgram/count.hpp"
#include "skipgram/counting.hpp"
#include "skipgram/enumeration.hpp"
#include "skipgram/tokenize.hpp"
#include "verify/sweep.hpp"

namespace skipgram::cli {

namespace {

// Usage problems detected after CLI11 has parsed the arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  bool lowercase = false;
  std::string encoding = "utf-8";
};

struct CountOptions {
  std::optional<std::uint64_t> length;
  InputOptions input;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::string method = "closed";
  bool distinct = false;
};

struct GenerateOptions {
  InputOptions input;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> exact_skips;
  std::string format = "text";
  bool mark_skips = false;
  std::string skip_token = "_";
  std::optional<std::uint64_t> limit;
};

struct VerifyOptions {
  std::size_t max_length = 0;
  std::size_t max_n = 0;
  std::size_t max_k = 0;
  std::size_t oracle_bound = 20;
  bool serial = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "': " + std::strerror(errno));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw std::runtime_error("error reading '" + path + "'");
  }
  return std::move(buffer).str();
}

TokenSequence load_tokens(const InputOptions& input) {
  const std::string text = read_file(input.path);
  TokenizeOptions options;
  options.lowercase = input.lowercase;
  options.encoding = parse_encoding(input.encoding);
  try {
    return tokenize(text, options);
  } catch (const EncodingError& e) {
    throw std::runtime_error("'" + input.path + "': " + e.what());
  }
}

void add_input_flags(CLI::App& cmd, InputOptions& input, CLI::Option*& path_option) {
  path_option = cmd.add_option("--input", input.path, "Whitespace-tokenized text file");
  cmd.add_flag("--lowercase", input.lowercase, "Fold ASCII letters to lower case");
  cmd.add_option("--encoding", input.encoding, "Input encoding: utf-8 (default) or ascii")
      ->capture_default_str();
}

int run_count(const CountOptions& opts, std::ostream& out) {
  const bool has_input = !opts.input.path.empty();
  if (has_input == opts.length.has_value()) {
    throw UsageError("count: give exactly one of --length or --input");
  }
  if (opts.distinct && !has_input) {
    throw UsageError("count: --distinct requires --input");
  }
  if (opts.method == "enumerate" && !has_input) {
    throw UsageError("count: --method enumerate needs token data (--input)");
  }
  const SkipGramSpec spec{opts.n, opts.k};

  if (!has_input) {
    const CorpusLength length(*opts.length);
    out << (opts.method == "sum" ? total_count_sum(length, spec)
                                 : total_count_closed(length, spec))
        << '\n';
    return kExitOk;
  }

  const TokenSequence seq = load_tokens(opts.input);
  const CorpusLength length(seq.size());
  Count result;
  if (opts.distinct) {
    result = count_distinct_forms(seq, spec);
  } else if (opts.method == "enumerate") {
    result = count_by_enumeration(seq, spec);
  } else if (opts.method == "sum") {
    result = total_count_sum(length, spec);
  } else {
    result = total_count_closed(length, spec);
  }
  out << result << '\n';
  return kExitOk;
}

int run_generate(const GenerateOptions& opts, std::ostream& out) {
  if (opts.input.path.empty()) {
    throw UsageError("generate: --input is required");
  }
  if (!opts.k && !opts.exact_skips) {
    throw UsageError("generate: give --k or --exact-skips");
  }
  if (opts.k && opts.exact_skips && *opts.exact_skips > *opts.k) {
    throw UsageError("generate: --exact-skips must not exceed --k");
  }
  const TokenSequence seq = load_tokens(opts.input);
  const std::size_t n = opts.n;
  const std::size_t lo = opts.exact_skips ? *opts.exact_skips : 0;
  const std::size_t hi = opts.exact_skips ? *opts.exact_skips : *opts.k;
  SkipGramStream<TokenSequence> stream(seq, n, lo, hi);

  const bool jsonl = opts.format == "jsonl";
  std::uint64_t emitted = 0;
  while (!opts.limit || emitted < *opts.limit) {
    auto occ = stream.next();
    if (!occ) {
      break;
    }
    if (jsonl) {
      nlohmann::ordered_json record;
      record["positions"] = occ->positions;
      std::vector<std::string> tokens(occ->tokens.begin(), occ->tokens.end());
      record["tokens"] = std::move(tokens);
      record["skips"] = occ->skips;
      out << record.dump() << '\n';
    } else {
      const auto rendered = render_occurrence(*occ, opts.mark_skips, opts.skip_token);
      for (std::size_t i = 0; i < rendered.size(); ++i) {
        if (i > 0) out << ' ';
        out << rendered[i];
      }
      out << '\n';
    }
    ++emitted;
  }
  return kExitOk;
}

int run_verify(const VerifyOptions& opts, std::ostream& out) {
  oracle::OracleConfig config;
  config.max_length = opts.oracle_bound;
  if (opts.max_length > config.max_length) {
    throw UsageError("verify: --max-length " + std::to_string(opts.max_length) +
                     " exceeds the oracle safety bound " + std::to_string(config.max_length));
  }
  const verify::GridBounds bounds{opts.max_length, opts.max_n, opts.max_k};
  const verify::SweepReport report =
      opts.serial ? verify::verify_grid_serial(bounds, config) : verify::verify_grid(bounds, config);
  for (const auto& cell : report.mismatches) {
    out << cell.describe() << '\n';
  }
  if (report.ok()) {
    out << "OK " << report.cells << " cells\n";
    return kExitOk;
  }
  out << "FAILED " << report.mismatches.size() << " of " << report.cells << " cells\n";
  return kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and streaming generation of k-skip-n-grams", "skipgram"};
  app.require_subcommand(1);

  CountOptions count_opts;
  auto* count_cmd = app.add_subcommand("count", "Print the exact number of k-skip-n-grams");
  auto* length_opt = count_cmd->add_option("--length", count_opts.length, "Corpus length L");
  CLI::Option* count_input = nullptr;
  add_input_flags(*count_cmd, count_opts.input, count_input);
  length_opt->excludes(count_input);
  count_cmd->add_option("--n", count_opts.n, "Gram length")->required();
  count_cmd->add_option("--k", count_opts.k, "Maximum total skips")->required();
  count_cmd->add_option("--method", count_opts.method, "closed, sum or enumerate")
      ->check(CLI::IsMember({"closed", "sum", "enumerate"}))
      ->capture_default_str();
  count_cmd->add_flag("--distinct", count_opts.distinct,
                      "Count distinct token tuples instead of occurrences");

  GenerateOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("generate", "Stream skip-gram occurrences");
  CLI::Option* gen_input = nullptr;
  add_input_flags(*gen_cmd, gen_opts.input, gen_input);
  gen_input->required();
  gen_cmd->add_option("--n", gen_opts.n, "Gram length")->required();
  gen_cmd->add_option("--k", gen_opts.k, "Maximum total skips");
  gen_cmd->add_option("--exact-skips", gen_opts.exact_skips, "Only occurrences with J skips");
  gen_cmd->add_option("--format", gen_opts.format, "text or jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}))
      ->capture_default_str();
  gen_cmd->add_flag("--mark-skips", gen_opts.mark_skips,
                    "Text format: print the window with skipped tokens replaced");
  gen_cmd->add_option("--skip-token", gen_opts.skip_token, "Placeholder for skipped tokens")
      ->capture_default_str();
  gen_cmd->add_option("--limit", gen_opts.limit, "Stop after M records");

  VerifyOptions verify_opts;
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare closed form, sum, enumeration and oracle on a grid");
  verify_cmd->add_option("--max-length", verify_opts.max_length, "Largest L")->required();
  verify_cmd->add_option("--max-n", verify_opts.max_n, "Largest n")->required();
  verify_cmd->add_option("--max-k", verify_opts.max_k, "Largest k")->required();
  verify_cmd->add_option("--oracle-bound", verify_opts.oracle_bound,
                         "Oracle safety bound on L")
      ->check(CLI::Range(std::size_t{0}, oracle::kOracleHardLimit))
      ->capture_default_str();
  verify_cmd->add_flag("--serial", verify_opts.serial, "Evaluate cells on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count_opts, out);
    if (*gen_cmd) return run_generate(gen_opts, out);
    return run_verify(verify_opts, out);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace skipgram::cli
