#include "skein/cli_runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "skein/block_matrix.hpp"
#include "skein/caps.hpp"
#include "skein/convert.hpp"
#include "skein/expr.hpp"
#include "skein/gaps.hpp"
#include "skein/json_io.hpp"
#include "skein/order.hpp"
#include "skein/trace.hpp"
#include "skein/verify.hpp"

namespace skein {

namespace {

void apply_env_caps() {
  if (const char* v = std::getenv("SKEIN_TERM_CAP"))
    caps::set_term_cap(std::strtoull(v, nullptr, 10));
  if (const char* v = std::getenv("SKEIN_DEPTH_CAP"))
    caps::set_depth_cap(std::strtoull(v, nullptr, 10));
}

void write_output(const std::string& text, const std::string& out_file,
                  std::string& stdout_text) {
  if (out_file.empty()) {
    stdout_text += text;
    if (text.empty() || text.back() != '\n') stdout_text += "\n";
  } else {
    std::ofstream os(out_file);
    if (!os) throw Error("cannot open output file " + out_file);
    os << text << "\n";
  }
}

// Evaluates --in as a linear combination of words with CoeffPoly scalars.
LinearWords parse_input(const std::string& text) {
  return evaluate(parse_expression(text));
}

AlgebraElement normalize_input(const LinearWords& lw) {
  AlgebraElement acc = AlgebraElement::zero(lw.n);
  for (const auto& [c, w] : lw.terms) {
    if (!z_free(c)) throw Error("z is not a scalar of the algebra; drop it or use reduce/trace");
    acc += normal_form(w).scaled(to_laurent(c));
  }
  return acc;
}

}  // namespace

CliResult run_subcommand(const std::vector<std::string>& args) {
  CliResult result;
  apply_env_caps();

  CLI::App app{"exact computations in the generalized type-B Hecke algebra and "
               "the skein module of the solid torus"};
  app.require_subcommand(1);
  std::size_t term_cap = 0, depth_cap = 0;
  app.add_option("--term-cap", term_cap, "maximum stored terms per element");
  app.add_option("--depth-cap", depth_cap, "maximum rewrite steps per term");

  std::string in_text, out_file, witness_file, csv_file;
  bool gaps_only = false, no_canonical = false;

  CLI::App* normalize = app.add_subcommand("normalize", "Sigma_n normal form of an expression");
  normalize->add_option("--in", in_text, "expression")->required();
  normalize->add_option("--out", out_file, "write JSON here instead of stdout");

  CLI::App* convert = app.add_subcommand(
      "convert", "expand an ordered primed monomial into the Sigma_n basis");
  convert->add_option("--in", in_text, "primed monomial, e.g. \"t^-1 t'[1]^2 t'[2]^-1\"")
      ->required();
  convert->add_option("--out", out_file);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "reduce to module coordinates over the loop-monomial basis");
  reduce->add_option("--in", in_text)->required();
  reduce->add_flag("--gaps-only", gaps_only, "only regularize index gaps");
  reduce->add_flag("--no-canonical", no_canonical, "skip exponent sorting of the output");
  reduce->add_option("--witness", witness_file, "write the rewrite witness JSON here");
  reduce->add_option("--out", out_file);

  CLI::App* trace_cmd = app.add_subcommand("trace", "Markov trace of an expression");
  trace_cmd->add_option("--in", in_text)->required();
  trace_cmd->add_option("--out", out_file);

  CLI::App* invariant = app.add_subcommand("invariant", "link invariant of a braid word");
  invariant->add_option("--in", in_text)->required();
  invariant->add_option("--out", out_file);

  int level = 0, max_index = 1, max_exp = 1;
  CLI::App* matrix = app.add_subcommand("matrix", "change-of-basis block at one level");
  matrix->add_option("--level", level, "level (sum of exponents)")->required();
  matrix->add_option("--max-index", max_index, "largest loop index")->required();
  matrix->add_option("--max-exp", max_exp, "largest |exponent|")->required();
  matrix->add_flag("--no-canonical", no_canonical, "enumerate all exponent orders");
  matrix->add_option("--out", out_file);
  matrix->add_option("--csv", csv_file, "write the q^0 coefficient slice as CSV");

  CLI::App* order_cmd = app.add_subcommand("order", "total ordering utilities");
  order_cmd->require_subcommand(1);
  std::string lhs_text, rhs_text;
  CLI::App* order_compare_cmd = order_cmd->add_subcommand("compare", "prints LT/EQ/GT");
  order_compare_cmd->add_option("lhs", lhs_text)->required();
  order_compare_cmd->add_option("rhs", rhs_text)->required();
  CLI::App* order_enum = order_cmd->add_subcommand("enumerate", "level set as JSON");
  order_enum->add_option("--level", level)->required();
  order_enum->add_option("--max-index", max_index)->required();
  order_enum->add_option("--max-exp", max_exp)->required();
  order_enum->add_flag("--no-canonical", no_canonical);
  order_enum->add_option("--out", out_file);

  SuiteOptions suite_opts;
  std::string suite_name;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite_name, "relations|lemmas|order|pipeline|matrix|trace")
      ->required();
  verify->add_option("--n-max", suite_opts.n_max);
  verify->add_option("--exp-max", suite_opts.exp_max);
  verify->add_option("--index-max", suite_opts.index_max);
  verify->add_option("--samples", suite_opts.samples);
  verify->add_option("--seed", suite_opts.seed);
  verify->add_option("--out", out_file);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    if (e.get_exit_code() == 0) {
      // --help and friends.
      result.output = app.help();
      return result;
    }
    os << e.what() << "\n";
    result.diagnostics = os.str();
    result.exit_code = 2;
    return result;
  }

  if (term_cap) caps::set_term_cap(term_cap);
  if (depth_cap) caps::set_depth_cap(depth_cap);

  try {
    if (*normalize) {
      AlgebraElement e = normalize_input(parse_input(in_text));
      write_output(to_json(e).dump(2), out_file, result.output);
    } else if (*convert) {
      LoopMonomial mp = expression_lambda_prime(parse_expression(in_text));
      write_output(to_json(convert_monomial(mp)).dump(2), out_file, result.output);
    } else if (*reduce) {
      LinearWords lw = parse_input(in_text);
      bool algebra_input = true;
      for (const auto& [c, w] : lw.terms) algebra_input = algebra_input && z_free(c);
      if (gaps_only) {
        auto [elem, tr] = regularize_element(normalize_input(lw));
        if (!witness_file.empty())
          write_output(to_json(tr).dump(2), witness_file, result.output);
        write_output(to_json(elem).dump(2), out_file, result.output);
      } else {
        ReduceOptions opts;
        opts.canonical = !no_canonical;
        if (algebra_input) {
          // One pipeline over the whole element, so the witness covers it.
          auto [coords, tr] = reduce_to_basis(normalize_input(lw), opts);
          if (!witness_file.empty())
            write_output(to_json(tr).dump(2), witness_file, result.output);
          write_output(to_json(coords).dump(2), out_file, result.output);
        } else {
          // z-coefficients extend linearly over the module; no single witness.
          if (!witness_file.empty())
            throw Error("--witness needs an input without z coefficients");
          ModuleElement acc;
          for (const auto& [c, w] : lw.terms) {
            auto [coords, tr] = reduce_to_basis(w, opts);
            acc += coords.scaled(c);
          }
          write_output(to_json(acc).dump(2), out_file, result.output);
        }
      }
    } else if (*trace_cmd) {
      LinearWords lw = parse_input(in_text);
      TraceCalculator calc;
      TraceValue acc;
      for (const auto& [c, w] : lw.terms) acc += to_trace(c) * calc.markov_trace(w);
      write_output(to_json(acc).dump(2), out_file, result.output);
    } else if (*invariant) {
      Word w = expression_word(parse_expression(in_text));
      write_output(to_json(invariant_x(w)).dump(2), out_file, result.output);
    } else if (*matrix) {
      BlockMatrix b = build_block(level, max_index, max_exp, !no_canonical);
      if (!csv_file.empty())
        write_output(block_csv_slice(b), csv_file, result.output);
      Json j = to_json(b);
      j["triangular"] = to_json(check_triangular(b));
      write_output(j.dump(2), out_file, result.output);
    } else if (*order_compare_cmd) {
      LoopMonomial a = expression_lambda_prime(parse_expression(lhs_text));
      LoopMonomial b = expression_lambda_prime(parse_expression(rhs_text));
      auto cmp = order_compare(a, b);
      result.output = cmp == std::strong_ordering::less
                          ? "LT\n"
                          : (cmp == std::strong_ordering::greater ? "GT\n" : "EQ\n");
    } else if (*order_enum) {
      Json arr = Json::array();
      for (const LoopMonomial& m : enumerate_level(level, max_index, max_exp, !no_canonical))
        arr.push_back(to_json(m));
      write_output(arr.dump(2), out_file, result.output);
    } else if (*verify) {
      SuiteResult r = run_suite(suite_name, suite_opts);
      Json j{{"suite", r.suite},
             {"checks", r.checks},
             {"failures", Json::array()},
             {"ok", r.ok()}};
      for (const std::string& f : r.failures) j["failures"].push_back(f);
      j["reproduce"] = "skein verify --suite " + suite_name +
                       " --seed " + std::to_string(suite_opts.seed);
      write_output(j.dump(2), out_file, result.output);
      if (!r.ok()) result.exit_code = 1;
    }
  } catch (const SyntaxError& e) {
    result.diagnostics = "syntax error at byte " + std::to_string(e.offset) + ": " + e.what();
    result.exit_code = 2;
  } catch (const IndexError& e) {
    result.diagnostics = std::string("index error: ") + e.what();
    result.exit_code = 2;
  } catch (const Error& e) {
    result.diagnostics = e.what();
    result.exit_code = 1;
  }
  return result;
}

}  // namespace skein
