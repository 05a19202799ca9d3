// Batch front end: read one problem (file argument or stdin), dispatch to
// the library, print a deterministic JSON report on stdout. Exit codes:
// 0 computed, 1 inconclusive (e.g. unstabilized within the horizon),
// 2 input or resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frobkit/problem.hpp"

int main(int argc, char** argv) {
  CLI::App app{"frobkit: exact prime-characteristic commutative algebra"};
  std::string input_path;
  std::string order_name = "grevlex";
  int json_indent = 2;
  std::uint64_t spair_cap = 0;
  std::uint32_t emax = 0;
  app.add_option("file", input_path, "problem file (default: stdin)");
  app.add_option("--order", order_name, "monomial order: grevlex|lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--json-indent", json_indent, "JSON indent width");
  app.add_option("--spair-cap", spair_cap, "S-pair reduction budget");
  app.add_option("--emax", emax, "default horizon when the problem omits it");
  CLI11_PARSE(app, argc, argv);

  frobkit::RunOptions opts;
  opts.order = frobkit::MonomialOrder(order_name == "lex"
                                          ? frobkit::OrderKind::lex
                                          : frobkit::OrderKind::grevlex);
  opts.json_indent = json_indent;
  if (const char* env = std::getenv("FROBKIT_SPAIR_CAP"))
    opts.limits.spair_cap = std::strtoull(env, nullptr, 10);
  if (spair_cap > 0) opts.limits.spair_cap = spair_cap;
  if (emax > 0) opts.default_emax = emax;
  frobkit::default_groebner_limits() = opts.limits;

  std::string text;
  if (!input_path.empty()) {
    std::ifstream f(input_path);
    if (!f) {
      std::cerr << "error: cannot open " << input_path << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }

  try {
    frobkit::ProblemSpec spec = frobkit::parse_problem(text, opts.order);
    frobkit::RunResult result = frobkit::run_problem(spec, opts);
    std::cout << frobkit::render(result.document, opts.json_indent);
    return result.exit_code;
  } catch (const frobkit::ParseError& e) {
    frobkit::json doc{{"error", e.what()},
                      {"kind", "parse"},
                      {"line", e.line},
                      {"column", e.column}};
    std::cout << frobkit::render(doc, opts.json_indent);
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const frobkit::UnstabilizedError& e) {
    frobkit::json doc{{"error", e.what()}, {"kind", "unstabilized"}};
    std::cout << frobkit::render(doc, opts.json_indent);
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 1;
  } catch (const frobkit::Error& e) {
    frobkit::json doc{{"error", e.what()}, {"kind", "input"}};
    std::cout << frobkit::render(doc, opts.json_indent);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
