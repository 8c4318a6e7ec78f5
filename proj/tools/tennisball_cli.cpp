// Command-line front end over the tennisball C API.
//
//   tennisball series --pattern 2,2 --order 4 [--engine algebraic] [--format json]
//   tennisball tutte  --pattern 2,2 --n 1
//   tennisball verify [--engines] [--bivariate] [--game] [--oracle] ...
//   tennisball game   --rounds 4,2 --turns 2 [--list]
//   tennisball batch  jobs.txt
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 resource cap.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tennisball/tennisball.h"

namespace {

// Owning wrappers for the C handles.
template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using PatternPtr = std::unique_ptr<tb_pattern, Deleter<tb_pattern, tb_pattern_destroy>>;
using SeqPtr = std::unique_ptr<tb_intseq, Deleter<tb_intseq, tb_intseq_destroy>>;
using PolyPtr = std::unique_ptr<tb_poly, Deleter<tb_poly, tb_poly_destroy>>;
using GamePtr = std::unique_ptr<tb_game, Deleter<tb_game, tb_game_destroy>>;
using ReportPtr = std::unique_ptr<tb_report, Deleter<tb_report, tb_report_destroy>>;

enum class Format { Text, Json, Csv };

struct Failure {
  tb_status status;
  std::string message;
};

// Throws Failure when status is not TB_OK.
void check(tb_status status) {
  if (status != TB_OK) throw Failure{status, tb_last_error()};
}

tb_caps caps_for(bool unsafe) { return unsafe ? tb_caps_unlimited() : tb_caps_default(); }

std::vector<unsigned> parse_uint_list(const std::string& text, const char* what) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size() || tok.empty() || tok[0] == '-' || v > 1000000)
        throw std::invalid_argument(tok);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw Failure{TB_ERR_USAGE, std::string("invalid ") + what + " \"" + text + "\""};
    }
  }
  if (text.empty() || text.back() == ',') {
    throw Failure{TB_ERR_USAGE, std::string("invalid ") + what + " \"" + text + "\""};
  }
  return out;
}

PatternPtr make_pattern(const std::string& text) {
  tb_pattern* p = nullptr;
  check(tb_pattern_parse(text.c_str(), &p));
  return PatternPtr(p);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string pattern_json(const tb_pattern* p) {
  std::string out = "[";
  for (std::size_t i = 0; i < tb_pattern_block_count(p); ++i) {
    unsigned k = 0, l = 0;
    check(tb_pattern_block(p, i, &k, &l));
    if (i) out += ',';
    out += "[" + std::to_string(k) + "," + std::to_string(l) + "]";
  }
  return out + "]";
}

std::vector<std::string> compute_series(const tb_pattern* pattern, std::size_t order,
                                        const std::string& engine_name, const tb_caps& caps) {
  tb_engine engine{};
  check(tb_engine_parse(engine_name.c_str(), &engine));
  tb_intseq* raw = nullptr;
  check(tb_series(pattern, order, engine, &caps, &raw));
  SeqPtr seq(raw);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tb_intseq_size(seq.get()); ++i) out.emplace_back(tb_intseq_get(seq.get(), i));
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

// ---- series ---------------------------------------------------------------

struct SeriesOptions {
  std::string pattern;
  std::size_t order = 0;
  std::string engine = "recursion";
  Format format = Format::Text;
  bool unsafe_caps = false;
};

int run_series(const SeriesOptions& o) {
  auto pattern = make_pattern(o.pattern);
  const auto values = compute_series(pattern.get(), o.order, o.engine, caps_for(o.unsafe_caps));
  switch (o.format) {
    case Format::Text:
      std::cout << join(values, " ") << "\n";
      break;
    case Format::Json: {
      std::vector<std::string> quoted;
      for (const auto& v : values) quoted.push_back(json_string(v));
      std::cout << "{\"pattern\":" << pattern_json(pattern.get()) << ",\"order\":" << o.order
                << ",\"engine\":" << json_string(o.engine) << ",\"coefficients\":["
                << join(quoted, ",") << "]}\n";
      break;
    }
    case Format::Csv:
      std::cout << "n,q\n";
      for (std::size_t i = 0; i < values.size(); ++i) std::cout << i << "," << values[i] << "\n";
      break;
  }
  return 0;
}

// ---- tutte ----------------------------------------------------------------

struct TutteOptions {
  std::string pattern;
  std::string path;
  std::size_t n = 0;
  bool bruteforce = false;
  Format format = Format::Text;
  bool unsafe_caps = false;
};

int run_tutte(const TutteOptions& o) {
  if (o.pattern.empty() == o.path.empty()) {
    throw Failure{TB_ERR_USAGE, "tutte needs exactly one of --pattern or --path"};
  }
  if (o.bruteforce && o.path.empty()) {
    throw Failure{TB_ERR_USAGE, "--bruteforce applies to --path only"};
  }
  tb_poly* raw = nullptr;
  PatternPtr pattern;
  if (!o.pattern.empty()) {
    pattern = make_pattern(o.pattern);
    check(tb_tutte(pattern.get(), o.n, &raw));
  } else if (o.bruteforce) {
    const tb_caps caps = caps_for(o.unsafe_caps);
    check(tb_tutte_bruteforce(o.path.c_str(), &caps, &raw));
  } else {
    check(tb_tutte_path(o.path.c_str(), &raw));
  }
  PolyPtr poly(raw);
  const std::size_t rows = tb_poly_rows(poly.get());
  const std::size_t cols = tb_poly_cols(poly.get());

  switch (o.format) {
    case Format::Text: {
      std::size_t width = 1;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          width = std::max(width, std::string(tb_poly_coeff(poly.get(), i, j)).size());
      width = std::max(width, std::to_string(cols).size());
      std::cout << "x\\y";
      for (std::size_t j = 0; j < cols; ++j) std::cout << " " << std::setw(static_cast<int>(width)) << j;
      std::cout << "\n";
      for (std::size_t i = 0; i < rows; ++i) {
        std::cout << std::setw(3) << i;
        for (std::size_t j = 0; j < cols; ++j)
          std::cout << " " << std::setw(static_cast<int>(width)) << tb_poly_coeff(poly.get(), i, j);
        std::cout << "\n";
      }
      std::cout << "# " << tb_poly_to_string(poly.get()) << "\n";
      std::cout << "# value at (1,1): " << tb_poly_value_at_one(poly.get()) << "\n";
      break;
    }
    case Format::Json: {
      std::cout << "{";
      if (pattern) {
        std::cout << "\"pattern\":" << pattern_json(pattern.get()) << ",\"n\":" << o.n;
      } else {
        std::cout << "\"path\":" << json_string(o.path);
      }
      std::cout << ",\"table\":[";
      for (std::size_t i = 0; i < rows; ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < cols; ++j) row.push_back(json_string(tb_poly_coeff(poly.get(), i, j)));
        std::cout << (i ? "," : "") << "[" << join(row, ",") << "]";
      }
      std::cout << "],\"polynomial\":" << json_string(tb_poly_to_string(poly.get()))
                << ",\"value_at_one\":" << json_string(tb_poly_value_at_one(poly.get())) << "}\n";
      break;
    }
    case Format::Csv:
      std::cout << "x_degree,y_degree,coefficient\n";
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          const std::string c = tb_poly_coeff(poly.get(), i, j);
          if (c != "0") std::cout << i << "," << j << "," << c << "\n";
        }
      break;
  }
  return 0;
}

// ---- game -----------------------------------------------------------------

struct GameOptions {
  std::string rounds;
  unsigned turns = 0;
  bool list = false;
  Format format = Format::Text;
  bool unsafe_caps = false;
};

int run_game(const GameOptions& o) {
  const auto rounds = parse_uint_list(o.rounds, "rounds");
  const tb_caps caps = caps_for(o.unsafe_caps);
  tb_game* raw = nullptr;
  check(tb_game_run(rounds.data(), rounds.size(), o.turns, &caps, o.list ? 1 : 0, &raw));
  GamePtr game(raw);

  auto set_items = [&](std::size_t i) {
    std::size_t size = 0;
    const unsigned* labels = tb_game_set(game.get(), i, &size);
    std::vector<std::string> items;
    for (std::size_t j = 0; j < size; ++j) items.push_back(std::to_string(labels[j]));
    return items;
  };

  switch (o.format) {
    case Format::Text:
      std::cout << tb_game_count(game.get()) << "\n";
      for (std::size_t i = 0; i < tb_game_set_count(game.get()); ++i)
        std::cout << "{" << join(set_items(i), ",") << "}\n";
      break;
    case Format::Json: {
      std::cout << "{\"rounds\":[";
      for (std::size_t i = 0; i < rounds.size(); i += 2)
        std::cout << (i ? "," : "") << "[" << rounds[i] << "," << rounds[i + 1] << "]";
      std::cout << "],\"turns\":" << o.turns << ",\"count\":" << json_string(tb_game_count(game.get()));
      if (o.list) {
        std::cout << ",\"sets\":[";
        for (std::size_t i = 0; i < tb_game_set_count(game.get()); ++i)
          std::cout << (i ? "," : "") << "[" << join(set_items(i), ",") << "]";
        std::cout << "]";
      }
      std::cout << "}\n";
      break;
    }
    case Format::Csv:
      std::cout << "count\n" << tb_game_count(game.get()) << "\n";
      if (o.list) {
        std::cout << "set\n";
        for (std::size_t i = 0; i < tb_game_set_count(game.get()); ++i)
          std::cout << "\"" << join(set_items(i), " ") << "\"\n";
      }
      break;
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  bool engines = false;
  unsigned kmax = 3, lmax = 3;
  std::size_t nmax = 3;
  bool bivariate = false;
  unsigned k = 2, l = 2;
  std::size_t order = 4;
  bool game = false;
  std::string rounds;
  unsigned s = 4, t = 2, turns = 2;
  bool oracle = false;
  std::size_t max_steps = 10;
  Format format = Format::Text;
  bool unsafe_caps = false;
};

int run_verify(const VerifyOptions& o) {
  const bool all = !o.engines && !o.bivariate && !o.game && !o.oracle;
  const tb_caps caps = caps_for(o.unsafe_caps);
  std::vector<ReportPtr> reports;
  tb_report* r = nullptr;
  auto collect = [&](tb_status status) {
    check(status);
    reports.emplace_back(r);
    r = nullptr;
  };
  if (o.engines || all) collect(tb_verify_engines(o.kmax, o.lmax, o.nmax, &caps, &r));
  if (o.bivariate || all) collect(tb_verify_bivariate(o.k, o.l, o.order, &r));
  if (o.game || all) {
    std::vector<unsigned> rounds = o.rounds.empty() ? std::vector<unsigned>{o.s, o.t}
                                                    : parse_uint_list(o.rounds, "rounds");
    collect(tb_verify_game(rounds.data(), rounds.size(), o.turns, &caps, &r));
  }
  if (o.oracle || all) collect(tb_verify_oracle(o.max_steps, &r));

  bool ok = true;
  std::vector<std::string> json_checks;
  for (const auto& rep : reports) {
    for (std::size_t i = 0; i < tb_report_size(rep.get()); ++i) {
      const char* name = nullptr;
      const char* detail = nullptr;
      int passed = 0;
      check(tb_report_check(rep.get(), i, &name, &passed, &detail));
      ok = ok && passed;
      if (o.format == Format::Json) {
        json_checks.push_back("{\"name\":" + json_string(name) + ",\"passed\":" +
                              (passed ? "true" : "false") + ",\"detail\":" + json_string(detail) + "}");
      } else if (o.format == Format::Csv) {
        std::cout << (i == 0 && &rep == &reports.front() ? "check,passed,detail\n" : "")
                  << json_string(name) << "," << (passed ? "1" : "0") << "," << json_string(detail)
                  << "\n";
      } else {
        std::cout << (passed ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
      }
    }
  }
  if (o.format == Format::Json) {
    std::cout << "{\"passed\":" << (ok ? "true" : "false") << ",\"checks\":[" << join(json_checks, ",")
              << "]}\n";
  } else if (o.format == Format::Text) {
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? 0 : TB_ERR_VERIFICATION;
}

// ---- batch ----------------------------------------------------------------

struct BatchOptions {
  std::string file;
  bool unsafe_caps = false;
};

struct JobResult {
  std::string line;
  tb_status status = TB_OK;
  std::string error;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

JobResult run_job(const std::string& text, const tb_caps& caps) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  std::string f;
  while (std::getline(ss, f, ';')) fields.push_back(trim(f));
  if (fields.size() < 2 || fields.size() > 3) {
    return {{}, TB_ERR_USAGE, "expected pattern;order;engine"};
  }
  try {
    const auto order_values = parse_uint_list(fields[1], "order");
    if (order_values.size() != 1) throw Failure{TB_ERR_USAGE, "invalid order \"" + fields[1] + "\""};
    auto pattern = make_pattern(fields[0]);
    const std::string engine = fields.size() == 3 && !fields[2].empty() ? fields[2] : "recursion";
    return {join(compute_series(pattern.get(), order_values[0], engine, caps), ","), TB_OK, {}};
  } catch (const Failure& e) {
    return {{}, e.status, e.message};
  }
}

int run_batch(const BatchOptions& o) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (o.file != "-") {
    file.open(o.file);
    if (!file) throw Failure{TB_ERR_USAGE, "cannot open " + o.file};
    in = &file;
  }
  const tb_caps caps = caps_for(o.unsafe_caps);
  std::vector<std::pair<std::size_t, std::future<JobResult>>> jobs;
  std::string line;
  for (std::size_t number = 1; std::getline(*in, line); ++number) {
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    jobs.emplace_back(number, std::async(std::launch::async, run_job, text, caps));
  }
  int exit_code = 0;
  for (auto& [number, fut] : jobs) {
    const JobResult r = fut.get();
    if (r.status == TB_OK) {
      std::cout << r.line << "\n";
    } else {
      std::cout << "error\n";
      std::cerr << "line " << number << ": " << r.error << "\n";
      if (exit_code == 0) exit_code = r.status;
    }
  }
  return exit_code;
}

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}},
          CLI::ignore_case))
      ->default_str("text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice paths below staircase boundaries (generalized tennis ball problem)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tb_version()));

  SeriesOptions series;
  auto* series_cmd = app.add_subcommand("series", "Counting series q_0..q_order");
  series_cmd->add_option("--pattern", series.pattern, "k1,l1,k2,l2,...")->required();
  series_cmd->add_option("--order,-n", series.order, "Highest index")->required();
  series_cmd->add_option("--engine", series.engine, "recursion|algebraic|bruteforce|game")
      ->default_str("recursion");
  series_cmd->add_flag("--unsafe-caps", series.unsafe_caps, "Lift the brute-force and game caps");
  add_format(series_cmd, series.format);

  TutteOptions tutte;
  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial coefficient table");
  tutte_cmd->add_option("--pattern", tutte.pattern, "k1,l1,k2,l2,...");
  tutte_cmd->add_option("--n", tutte.n, "Repetitions of the pattern")->default_str("0");
  tutte_cmd->add_option("--path", tutte.path, "Explicit boundary path over {N,E}");
  tutte_cmd->add_flag("--bruteforce", tutte.bruteforce, "Enumerate paths instead of recursing");
  tutte_cmd->add_flag("--unsafe-caps", tutte.unsafe_caps, "Lift the brute-force cap");
  add_format(tutte_cmd, tutte.format);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-engine consistency checks");
  verify_cmd->add_flag("--engines", verify.engines, "Recursion vs algebraic vs brute force");
  verify_cmd->add_option("--kmax", verify.kmax)->capture_default_str();
  verify_cmd->add_option("--lmax", verify.lmax)->capture_default_str();
  verify_cmd->add_option("--nmax", verify.nmax)->capture_default_str();
  verify_cmd->add_flag("--bivariate", verify.bivariate, "Bivariate generating-function identity");
  verify_cmd->add_option("--k", verify.k)->capture_default_str();
  verify_cmd->add_option("--l", verify.l)->capture_default_str();
  verify_cmd->add_option("--order", verify.order)->capture_default_str();
  verify_cmd->add_flag("--game", verify.game, "Ball game vs path count and bijection");
  verify_cmd->add_option("--rounds", verify.rounds, "s1,t1,s2,t2,... (overrides --s/--t)");
  verify_cmd->add_option("--s", verify.s)->capture_default_str();
  verify_cmd->add_option("--t", verify.t)->capture_default_str();
  verify_cmd->add_option("--turns", verify.turns)->capture_default_str();
  verify_cmd->add_flag("--oracle", verify.oracle, "Exhaustive Tutte oracle over short paths");
  verify_cmd->add_option("--max-steps", verify.max_steps)->capture_default_str();
  verify_cmd->add_flag("--unsafe-caps", verify.unsafe_caps, "Lift the brute-force and game caps");
  add_format(verify_cmd, verify.format);

  GameOptions game;
  auto* game_cmd = app.add_subcommand("game", "Simulate the ball game");
  game_cmd->add_option("--rounds", game.rounds, "s1,t1,s2,t2,...")->required();
  game_cmd->add_option("--turns", game.turns)->required();
  game_cmd->add_flag("--list", game.list, "List every reachable outside-set");
  game_cmd->add_flag("--unsafe-caps", game.unsafe_caps, "Lift the s*n <= 20 cap");
  add_format(game_cmd, game.format);

  BatchOptions batch;
  auto* batch_cmd = app.add_subcommand("batch", "Run pattern;order;engine jobs, one per line");
  batch_cmd->add_option("file", batch.file, "Job file, or - for stdin")->required();
  batch_cmd->add_flag("--unsafe-caps", batch.unsafe_caps, "Lift the brute-force and game caps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : TB_ERR_USAGE;
  }

  try {
    if (*series_cmd) return run_series(series);
    if (*tutte_cmd) return run_tutte(tutte);
    if (*verify_cmd) return run_verify(verify);
    if (*game_cmd) return run_game(game);
    if (*batch_cmd) return run_batch(batch);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.status;
  }
  return TB_ERR_USAGE;
}
