#include "picard/cli.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "picard/decomposer.hpp"
#include "picard/errors.hpp"
#include "picard/serialization.hpp"

namespace picard::cli {

namespace {

struct Options {
  bool json = false;
  bool trace = false;
  bool stabilizer = false;
  std::string input = "-";
  std::string word;
  std::string dump = "fuzz_counterexample.json";
  std::optional<std::uint64_t> seed;
  std::uint64_t iterations = 1000;
  std::size_t max_len = 40;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("PICARD_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("PICARD_SEED is not an unsigned integer: ") + env);
  }
  return 42;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Matrix4 m = matrix_from_json(parse_json(read_input(o.input, in)));
  const auto bad = first_form_violation(m);
  const bool member = !bad;
  const bool fixes = m[3][0].is_zero();
  if (o.json) {
    out << json{{"member", member}, {"fixes_infinity", fixes}}.dump() << '\n';
  } else {
    out << "member: " << (member ? "yes" : "no") << '\n' << "fixes infinity: " << (fixes ? "yes" : "no") << '\n';
  }
  if (!member) {
    err << "not in U(3,1;Z[w]): entry (" << bad->first + 1 << "," << bad->second + 1 << ") of G*JG differs from J\n";
    return kRejected;
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
  const GroupMatrix g = group_matrix_from_json(parse_json(read_input(o.input, in)));
  const Decomposition d = decompose(g);
  // decompose() verifies internally; this is the last line of defence before output.
  if (!verify(g, d.result)) throw InternalError("decomposition failed verification");

  json j = to_json(d.result);
  j["steps"] = d.trace.steps.size();
  if (o.trace) j["trace"] = to_json(d.trace);
  if (o.json) {
    out << j.dump() << '\n';
    return kOk;
  }
  out << "unit: " << d.result.lambda.value() << '\n'
      << "word: " << serialize(d.result.word) << '\n'
      << "letters: " << d.result.word.size() << '\n'
      << "steps: " << d.trace.steps.size() << '\n';
  if (o.trace) {
    for (std::size_t i = 0; i < d.trace.steps.size(); ++i) {
      const auto& s = d.trace.steps[i];
      out << "  step " << i + 1 << ": tau=(" << s.tau[0] << ", " << s.tau[1] << ") k=" << s.k << " |g41|^2 " << s.n_before
          << " -> " << s.n_after << '\n';
    }
    out << "stabilizer: " << to_json(d.trace.stabilizer).dump() << '\n';
  }
  return kOk;
}

int cmd_evaluate(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
  DecompositionResult r;
  if (!o.word.empty()) {
    r.word = parse_word(o.word);
  } else {
    const std::string text = read_input(o.input, in);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      r = result_from_json(parse_json(text));
    } else {
      std::string line = text;
      while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.pop_back();
      r.word = parse_word(line);
    }
  }
  const json j = to_json(evaluate(r));
  out << (o.json ? j.dump() : j.dump(2)) << '\n';
  return kOk;
}

int cmd_random(const Options& o, std::ostream& out) {
  if (o.max_len == 0) throw InputError("--max-len must be at least 1");
  Rng rng(resolve_seed(o));
  json j;
  if (o.stabilizer) {
    const HeisenbergParam p = random_stabilizer_param(rng);
    j = to_json(p.reconstruct());
    j["param"] = to_json(p);
  } else {
    const Word w = random_word(rng, o.max_len);
    j = to_json(evaluate(w));
    j["word"] = serialize(w);
  }
  out << (o.json ? j.dump() : j.dump(2)) << '\n';
  return kOk;
}

struct FuzzStats {
  std::uint64_t runs = 0;
  std::uint64_t verified = 0;
  std::uint64_t total_steps = 0;
  std::size_t max_steps = 0;
  std::size_t max_word_length = 0;
  mpz_class max_norm = 0;
  std::uint64_t nontrivial_units = 0;
  // n_after / n_before in [i/10, (i+1)/10)
  std::array<std::uint64_t, 10> ratio_histogram{};
};

int cmd_fuzz(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.iterations == 0) throw InputError("--iterations must be at least 1");
  if (o.max_len == 0) throw InputError("--max-len must be at least 1");
  const std::uint64_t seed = resolve_seed(o);
  Rng rng(seed);
  FuzzStats st;
  for (std::uint64_t it = 0; it < o.iterations; ++it) {
    const Word w = random_word(rng, o.max_len);
    const GroupMatrix g = evaluate(w);
    ++st.runs;
    std::string failure;
    try {
      const Decomposition d = decompose(g);
      if (verify(g, d.result)) {
        ++st.verified;
        st.total_steps += d.trace.steps.size();
        st.max_steps = std::max(st.max_steps, d.trace.steps.size());
        st.max_word_length = std::max(st.max_word_length, d.result.word.size());
        if (!(d.result.lambda == Unit())) ++st.nontrivial_units;
        for (const auto& s : d.trace.steps) {
          if (s.n_before > st.max_norm) st.max_norm = s.n_before;
          mpz_class bucket = 10 * s.n_after / s.n_before;
          ++st.ratio_histogram[std::min<unsigned long>(bucket.get_ui(), 9)];
        }
      } else {
        failure = "verification failed";
      }
    } catch (const Error& e) {
      failure = e.what();
    }
    if (!failure.empty()) {
      json dump = to_json(g);
      dump["word"] = serialize(w);
      dump["error"] = failure;
      std::ofstream f(o.dump);
      f << dump.dump(2) << '\n';
      err << "fuzz iteration " << it << " failed: " << failure << "\ncounterexample written to " << o.dump << '\n';
      break;
    }
  }

  json hist = json::array();
  for (auto c : st.ratio_histogram) hist.push_back(c);
  const json j{{"seed", seed},
               {"iterations", st.runs},
               {"verified", st.verified},
               {"total_steps", st.total_steps},
               {"max_steps", st.max_steps},
               {"max_word_length", st.max_word_length},
               {"max_norm", int_to_json(st.max_norm)},
               {"nontrivial_units", st.nontrivial_units},
               {"ratio_histogram", hist}};
  if (o.json) {
    out << j.dump() << '\n';
  } else {
    out << st.verified << "/" << st.runs << " verified (seed " << seed << ")\n"
        << "reduction steps: total " << st.total_steps << ", max " << st.max_steps << '\n'
        << "max word length: " << st.max_word_length << '\n'
        << "max |g41|^2: " << st.max_norm << '\n'
        << "results with unit != 1: " << st.nontrivial_units << '\n'
        << "contraction ratio histogram (bins of 0.1):";
    for (auto c : st.ratio_histogram) out << ' ' << c;
    out << '\n';
  }
  return st.verified == o.iterations ? kOk : kRejected;
}

int cmd_u2_table(const Options& o, std::ostream& out) {
  const json table = u2_table_json();
  if (o.json) {
    for (const auto& row : table) out << row.dump() << '\n';
  } else {
    out << table.dump(2) << '\n';
  }
  return kOk;
}

int cmd_probe_units(const Options& o, std::ostream& out) {
  const auto found = probe_unit_corrections(o.max_len);
  json j = json::array();
  for (const auto& [idx, w] : found) j.push_back(json{{"unit", to_json(Unit::all()[idx].value())}, {"word", serialize(w)}});
  if (o.json) {
    out << json{{"max_len", o.max_len}, {"found", j}}.dump() << '\n';
  } else {
    out << "units C_lambda reached by words of length <= " << o.max_len << ": " << found.size() << '\n';
    for (const auto& row : j) out << "  " << row.dump() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Membership and generator decomposition in the Eisenstein-Picard group U(3,1;Z[w])", "picard"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Line-delimited JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Check G*JG = J for a matrix file");
  verify_cmd->add_option("input", o.input, "Matrix JSON file, - for stdin");

  auto* decompose_cmd = app.add_subcommand("decompose", "Write a group element as unit correction times a word");
  decompose_cmd->add_option("input", o.input, "Matrix JSON file, - for stdin");
  decompose_cmd->add_flag("--trace", o.trace, "Include the reduction trace");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate a word or a decomposition result to a matrix");
  evaluate_cmd->add_option("input", o.input, "Decomposition JSON or word text file, - for stdin");
  evaluate_cmd->add_option("--word", o.word, "Word text, e.g. \"R N^-3 A B^2\"");

  auto* random_cmd = app.add_subcommand("random", "Emit a random group element");
  random_cmd->add_option("--seed", o.seed, "RNG seed (falls back to PICARD_SEED)");
  random_cmd->add_option("--max-len", o.max_len, "Maximum word length");
  random_cmd->add_flag("--stabilizer", o.stabilizer, "Sample from the stabilizer of infinity instead");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Round-trip random words through decompose and verify");
  fuzz_cmd->add_option("--iterations", o.iterations, "Number of round trips");
  fuzz_cmd->add_option("--seed", o.seed, "RNG seed (falls back to PICARD_SEED)");
  fuzz_cmd->add_option("--max-len", o.max_len, "Maximum word length");
  fuzz_cmd->add_option("--dump", o.dump, "Where to write a counterexample");

  auto* table_cmd = app.add_subcommand("u2-table", "Dump the U(2;Z[w]) word table");

  auto* probe_cmd = app.add_subcommand("probe-units", "Experimental: search short words realizing C_lambda");
  probe_cmd->add_option("--max-len", o.max_len, "Maximum word length")->default_val(6);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*verify_cmd) return cmd_verify(o, in, out, err);
    if (*decompose_cmd) return cmd_decompose(o, in, out, err);
    if (*evaluate_cmd) return cmd_evaluate(o, in, out, err);
    if (*random_cmd) return cmd_random(o, out);
    if (*fuzz_cmd) return cmd_fuzz(o, out, err);
    if (*table_cmd) return cmd_u2_table(o, out);
    if (*probe_cmd) return cmd_probe_units(o, out);
  } catch (const NotMember& e) {
    err << "error: " << e.what() << '\n';
    return kRejected;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kRejected;
  }
  return kBadInput;
}

}  // namespace picard::cli
