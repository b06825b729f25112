// germbound: tangent cones, multiplicities and local topology bounds of
// algebraic germs at the origin.

#include <cstdio>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "germ/analysis.hpp"
#include "germ/crofton.hpp"
#include "germ/errors.hpp"
#include "germ/families.hpp"
#include "germ/numtopo.hpp"
#include "germ/parser.hpp"
#include "germ/report.hpp"

namespace {

enum Exit { ok = 0, other = 1, parse = 2, resource = 3, hypothesis = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw germ::Error("cli", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw germ::Error("cli", "cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

germ::Rational parse_rational(const std::string& text) {
  // Plain decimals such as -0.25 are converted exactly.
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::string den = "1" + std::string(text.size() - dot - 1, '0');
    if (digits.empty() || digits == "-" || digits.find_first_not_of("+-0123456789") != std::string::npos)
      throw germ::Error("cli", "expected a rational number, got '" + text + "'");
    germ::Rational q(germ::Integer(digits[0] == '+' ? digits.substr(1) : digits), germ::Integer(den));
    q.canonicalize();
    return q;
  }
  germ::Polynomial p = germ::parse_polynomial(text, germ::VarList());
  if (!p.is_constant() && !p.is_zero())
    throw germ::Error("cli", "expected a rational number, got '" + text + "'");
  return p.is_zero() ? germ::Rational(0) : p.terms().front().coeff;
}

std::pair<int, int> parse_k_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int k = std::stoi(text);
      return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw germ::Error("cli", "malformed --k range '" + text + "' (expected a..b)");
  }
}

int report_error(const germ::Error& e, int code) {
  std::cerr << "germbound: " << e.module() << ": " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent cones, multiplicities and local topology bounds of algebraic germs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(germ::version()));

  std::string input, output, k_text, lk = "default";
  bool pure = false;
  std::size_t budget = 1'000'000;
  auto* analyze = app.add_subcommand("analyze", "Analyze the germ at the origin of an ideal file");
  analyze->add_option("file", input, "Ideal file")->required();
  analyze->add_option("--k", k_text, "Section dimensions a..b (default 2..n-1)");
  analyze->add_flag("--assume-pure-dimensional", pure,
                    "Treat the complexification as pure dimensional");
  analyze->add_option("--lk-exponent", lk, "Exponent for sigma_l inside the LK bounds")
      ->check(CLI::IsMember({"default", "paper-display"}));
  analyze->add_option("--budget", budget, "Maximum S-pair reductions per Groebner run")
      ->check(CLI::PositiveNumber);
  analyze->add_option("-o,--output", output, "Write the JSON report here");

  std::string family_name, transforms;
  int fam_l = 2, fam_n = 3, fam_d = 2, fam_k = 2;
  auto* family = app.add_subcommand("family", "Emit a member of a counter-example family");
  family->add_option("name", family_name, "g, f or union")
      ->required()
      ->check(CLI::IsMember({"g", "f", "union"}));
  family->add_option("--l", fam_l, "Family parameter l")->required();
  family->add_option("--n", fam_n, "Ambient dimension (f, union)");
  family->add_option("--d", fam_d, "Dimension of the plane V (union)");
  family->add_option("--k", fam_k, "Section dimension k (union)");
  family->add_option("--transform", transforms,
                     "Transformations to apply in order, e.g. PE (P: product, E: embed)");
  family->add_option("-o,--output", output, "Write the ideal file here");

  std::string fix_text, box_text, csv;
  std::string res_text = "1/64";
  std::uint64_t cells = 10'000'000;
  auto* betti0 = app.add_subcommand("betti0", "Count connected components of a plane section");
  betti0->add_option("file", input, "Ideal file")->required();
  betti0->add_option("--fix", fix_text, "Fixed variables, var=value,...");
  betti0->add_option("--box", box_text, "xmin,xmax,ymin,ymax")->required();
  betti0->add_option("--res", res_text, "Cell width at the finest level, e.g. 1/1024");
  betti0->add_option("--csv", csv, "Dump occupied cells as CSV");
  betti0->add_option("--budget", cells, "Maximum number of cells examined")
      ->check(CLI::PositiveNumber);

  int crofton_n = 3;
  auto* crofton = app.add_subcommand("crofton", "Print the Cauchy-Crofton matrix");
  crofton->add_option("--n", crofton_n, "Size")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      germ::IdealFile ideal = germ::parse_ideal(read_file(input));
      germ::AnalyzeOptions opts;
      opts.input_label = input;
      if (!k_text.empty()) opts.k_range = parse_k_range(k_text);
      opts.assume_pure_dimensional = pure;
      opts.lk_exponent =
          lk == "default" ? germ::LkExponent::codimension : germ::LkExponent::dimension;
      opts.budget = budget;
      germ::AnalysisResult result = germ::analyze(ideal, opts);
      write_output(output, germ::emit_report(result.report));
      if (result.k_range_violation) {
        std::cerr << "germbound: bounds: " << *result.k_range_violation << "\n";
        return hypothesis;
      }
      return ok;
    }
    if (*family) {
      std::vector<germ::Polynomial> gens;
      bool pure_family = false;
      if (family_name == "g") {
        gens = {germ::family_g(fam_l)};
        pure_family = true;
      } else if (family_name == "f") {
        gens = {germ::family_f(fam_n, fam_l)};
        pure_family = true;
      } else {
        gens = germ::family_linear_union(fam_n, fam_d, fam_k, fam_l);
      }
      for (char t : transforms) {
        if (t == 'P' || t == 'p')
          gens = germ::transform_product(gens);
        else if (t == 'E' || t == 'e')
          gens = germ::transform_embed(gens);
        else
          throw germ::Error("cli", std::string("unknown transformation '") + t + "'");
      }
      bool directive = pure_family && gens.size() > 1;
      write_output(output, germ::print_ideal(germ::as_ideal_file(std::move(gens), directive)));
      return ok;
    }
    if (*betti0) {
      germ::IdealFile ideal = germ::parse_ideal(read_file(input));
      std::map<std::string, germ::Rational> fixed;
      if (!fix_text.empty())
        for (const auto& part : split(fix_text, ',')) {
          auto eq = part.find('=');
          if (eq == std::string::npos) throw germ::Error("cli", "malformed --fix entry '" + part + "'");
          fixed[part.substr(0, eq)] = parse_rational(part.substr(eq + 1));
        }
      auto b = split(box_text, ',');
      if (b.size() != 4) throw germ::Error("cli", "--box needs xmin,xmax,ymin,ymax");
      germ::Rect box{parse_rational(b[0]).get_d(), parse_rational(b[1]).get_d(),
                     parse_rational(b[2]).get_d(), parse_rational(b[3]).get_d()};
      auto spec = germ::SectionSpec::make(germ::sum_of_squares(ideal.generators), fixed, box,
                                            parse_rational(res_text).get_d());
      spec.cell_budget = cells;
      if (!csv.empty()) spec.csv_path = csv;
      germ::ComponentCount c = germ::count_components(spec);
      std::cout << c.count << "\n";
      std::cerr << "status " << germ::to_string(c.status) << ", depth " << c.depth << ", "
                << c.cells_examined << " cells examined, " << c.occupied_cells << " occupied\n";
      return ok;
    }
    if (*crofton) {
      std::cout << germ::crofton_matrix(crofton_n).format();
      return ok;
    }
  } catch (const germ::ParseError& e) {
    return report_error(e, parse);
  } catch (const germ::ResourceError& e) {
    return report_error(e, resource);
  } catch (const germ::HypothesisError& e) {
    return report_error(e, hypothesis);
  } catch (const germ::Error& e) {
    return report_error(e, other);
  } catch (const std::exception& e) {
    std::cerr << "germbound: " << e.what() << "\n";
    return other;
  }
  return other;
}
