// Command-line front end for loopsl2.
//
// Exit codes: 0 success, 1 verification failure (or a mathematical
// obstruction such as a non-split g(t)), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loopsl2/json_io.hpp"
#include "loopsl2/verify.hpp"

namespace {

using namespace loopsl2;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw UsageError("cannot open input '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

json read_json(const std::string& path)
{
  try {
    return json::parse(read_input(path));
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

void write_output(const std::string& path, const std::string& text)
{
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot open output '" + path + "'");
  out << text;
}

std::string dump(const json& j)
{
  return j.dump() + "\n";
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact computations in the highest-weight-zero quotient N(0) of the imaginary Verma module for loop sl(2)"};
  app.require_subcommand(1);

  std::string in_path = "-", out_path = "-";

  auto* act_cmd = app.add_subcommand("act", "Apply a word in e_k, h_k, f_k to an element");
  std::string word_text;
  act_cmd->add_option("--in", in_path, "ModuleElement JSON file ('-' for stdin)");
  act_cmd->add_option("--word", word_text,
                      "Space-separated letters kind:index, e.g. \"e:0 f:3 f:1\"; the rightmost letter acts first")
      ->required();
  act_cmd->add_option("--out", out_path, "Output file ('-' for stdout)");

  auto* theta_cmd = app.add_subcommand("theta", "Map a layer-n element to S_n (or back with --inverse)");
  bool inverse = false;
  theta_cmd->add_option("--in", in_path, "Input JSON file ('-' for stdin)");
  theta_cmd->add_flag("--inverse", inverse, "Input is a SymElement; output the layer element");
  theta_cmd->add_option("--out", out_path, "Output file ('-' for stdout)");

  auto* sing_cmd = app.add_subcommand("singular", "Build the singular vector S_chi");
  std::string chi_text;
  sing_cmd->add_option("--chi", chi_text, "Comma-separated integers, e.g. \"0,1\"")->required();
  sing_cmd->add_option("--out", out_path, "Output file ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a self-check suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "One of: actions, realization, singular, span, expmod")->required();

  auto* scan_cmd = app.add_subcommand("scan-conjecture", "Compare singular vectors with D_n . M_n on windows");
  long long scan_n = 2, dmin = 0, dmax = 0, lo = 0, hi = 0;
  long long slack = -1;
  scan_cmd->add_option("--n", scan_n, "Layer")->required();
  scan_cmd->add_option("--dmin", dmin, "Smallest graded degree")->required();
  scan_cmd->add_option("--dmax", dmax, "Largest graded degree")->required();
  scan_cmd->add_option("--lo", lo, "Smallest admissible exponent")->required();
  scan_cmd->add_option("--hi", hi, "Largest admissible exponent")->required();
  scan_cmd->add_option("--slack", slack, "Pre-image window widening (default n)");
  scan_cmd->add_option("--out", out_path, "CSV output ('-' for stdout)");

  auto* dims_cmd = app.add_subcommand("exp-dims", "Graded dimensions of L(phi)");
  std::string roots_text;
  long long ddmin = -6, ddmax = 6;
  dims_cmd->add_option("--roots", roots_text, "Comma-separated nonzero rationals, e.g. \"1,-1\"; empty for phi = 0");
  dims_cmd->add_option("--dmin", ddmin, "Smallest degree (default -6)");
  dims_cmd->add_option("--dmax", ddmax, "Largest degree (default 6)");
  dims_cmd->add_option("--out", out_path, "CSV output ('-' for stdout)");

  auto* hom_cmd = app.add_subcommand("classify-hom", "Recover roots alpha from zeta(e_1..e_n)");
  std::string zeta_text;
  hom_cmd->add_option("--zeta", zeta_text, "Comma-separated rationals zeta(e_1),...,zeta(e_n)")->required();
  hom_cmd->add_option("--out", out_path, "Output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (act_cmd->parsed()) {
      Word word = parse_word(word_text);
      ModuleElement x = module_element_from_json(read_json(in_path));
      write_output(out_path, dump(to_json(act_word(word, x))));
      return kOk;
    }
    if (theta_cmd->parsed()) {
      json j = read_json(in_path);
      if (inverse)
        write_output(out_path, dump(to_json(theta_inv(sym_element_from_json(j)))));
      else
        write_output(out_path, dump(to_json(theta(module_element_from_json(j)))));
      return kOk;
    }
    if (sing_cmd->parsed()) {
      write_output(out_path, dump(to_json(build_singular(parse_index_list(chi_text)))));
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto& names = verify_suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kUsage;
      }
      bool all = true;
      for (const auto& c : run_verify_suite(suite)) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.identity << "]";
        if (!c.passed && !c.detail.empty())
          std::cout << "  " << c.detail;
        std::cout << "\n";
        all = all && c.passed;
      }
      return all ? kOk : kFailed;
    }
    if (scan_cmd->parsed()) {
      if (scan_n < 1 || lo > hi || dmin > dmax)
        throw UsageError("invalid ranges: need n >= 1, lo <= hi, dmin <= dmax");
      if (slack < 0)
        slack = scan_n;
      auto rows = conjecture_scan(static_cast<std::size_t>(scan_n), dmin, dmax, lo, hi, slack);
      std::ostringstream csv;
      csv << "n,d,dim_singular,dim_disc_image,forward_contained,reverse_contained,slack\n";
      bool forward_ok = true;
      for (const auto& r : rows) {
        csv << r.n << ',' << r.degree << ',' << r.dim_singular << ',' << r.dim_disc_image << ','
            << (r.forward_contained ? "true" : "false") << ',' << (r.reverse_contained ? "true" : "false") << ','
            << r.slack << '\n';
        forward_ok = forward_ok && r.forward_contained;
      }
      write_output(out_path, csv.str());
      if (!forward_ok) {
        std::cerr << "forward containment failed: D_n . M_n is not contained in the singular vectors\n";
        return kFailed;
      }
      return kOk;
    }
    if (dims_cmd->parsed()) {
      if (ddmin > ddmax)
        throw UsageError("invalid ranges: need dmin <= dmax");
      ExpFunction phi(parse_rational_list(roots_text));
      std::ostringstream csv;
      csv << "degree,dim\n";
      for (const auto& [d, dim] : component_dim(phi, ddmin, ddmax))
        csv << d << ',' << dim << '\n';
      write_output(out_path, csv.str());
      return kOk;
    }
    if (hom_cmd->parsed()) {
      auto zeta = parse_rational_list(zeta_text);
      if (zeta.empty())
        throw UsageError("--zeta needs at least one value");
      try {
        write_output(out_path, dump(to_json(ExpFunction(classify_hom(zeta.size(), zeta)))));
      } catch (const no_homomorphism& e) {
        std::cerr << "no homomorphism: " << e.what() << "\n";
        return kFailed;
      } catch (const requires_extension& e) {
        std::cerr << "requires extension: " << e.what() << "\n";
        return kFailed;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
