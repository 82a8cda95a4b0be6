#include <cctype>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tcds/io.hpp"

namespace {

using tcds::SystemPtr;

int group_cap() {
  const char* s = std::getenv("TCDS_MAX_GROUP");
  if (!s || !*s) return 64;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1)
    throw tcds::parse_error("TCDS_MAX_GROUP must be a positive integer");
  return static_cast<int>(v);
}

void enforce_cap(int order) {
  const int cap = group_cap();
  if (order > cap)
    throw tcds::parse_error("group order " + std::to_string(order) + " exceeds the cap " +
                            std::to_string(cap) + "; set TCDS_MAX_GROUP to raise it");
}

tcds::FiniteGroup parse_group_spec(const std::string& spec) {
  std::string s;
  for (char c : spec) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  std::vector<int> orders;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find('x', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    if (!tok.empty() && tok[0] == 'z') tok.erase(0, 1);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw tcds::parse_error("invalid group spec '" + spec +
                              "' (expected e.g. z6 or z2xz2)");
    orders.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  tcds::FiniteGroup g = tcds::cyclic_group(orders[0]);
  for (std::size_t i = 1; i < orders.size(); ++i)
    g = tcds::direct_product(g, tcds::cyclic_group(orders[i]));
  return g;
}

std::vector<int> parse_blocks(const std::string& spec) {
  std::vector<int> blocks;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t next = spec.find(',', pos);
    const std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw tcds::parse_error("invalid block list '" + spec + "' (expected e.g. 2,2)");
    blocks.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return blocks;
}

void require_format(const std::string& format) {
  if (format != "text" && format != "json")
    throw tcds::parse_error("unknown --format '" + format + "' (text or json)");
}

SystemPtr load_checked(const std::string& path, double tol = 1e-10) {
  SystemPtr sys = tcds::load_system_unchecked(path);
  enforce_cap(sys->group.order);
  tcds::ValidationReport rep = tcds::validate_system(*sys, tol);
  if (!rep.pass())
    throw tcds::invalid_system("system file " + path + " failed validation: " + rep.summary(),
                               std::move(rep));
  return sys;
}

void emit_json(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    tcds::write_json_file(j, out_path);
}

std::string fmt_g(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

struct GenOptions {
  std::string kind;
  std::string group_spec = "z2";
  std::string blocks_spec = "1";
  std::string units_path;
  std::string out_path;
  int n = 2;
  int p = 1;
  double k = 1.0;
  std::uint64_t seed = 1;
};

int cmd_gen(const GenOptions& opt) {
  SystemPtr sys;
  if (opt.kind == "trivial") {
    tcds::FiniteGroup g = parse_group_spec(opt.group_spec);
    enforce_cap(g.order);
    sys = tcds::make_trivial_system(std::move(g), {parse_blocks(opt.blocks_spec)}, opt.k);
  } else if (opt.kind == "rotation") {
    enforce_cap(opt.n < 1 ? 0 : opt.n * opt.n);
    sys = tcds::make_rotation_system(opt.n, opt.p, opt.k);
  } else if (opt.kind == "inner") {
    if (opt.units_path.empty())
      throw tcds::parse_error("gen --kind inner requires --units FILE");
    tcds::FiniteGroup g = parse_group_spec(opt.group_spec);
    enforce_cap(g.order);
    const tcds::AlgebraShape shape{parse_blocks(opt.blocks_spec)};
    const nlohmann::json j = tcds::read_json_file(opt.units_path);
    std::vector<tcds::AlgebraElement> u;
    if (!j.contains("units") || !j["units"].is_array() ||
        j["units"].size() != static_cast<std::size_t>(g.order))
      throw tcds::parse_error(opt.units_path + ": 'units' must hold one element per group element");
    for (int r = 0; r < g.order; ++r)
      u.push_back(tcds::element_from_json(j["units"][r], shape,
                                          "units[" + std::to_string(r) + "]"));
    sys = tcds::make_inner_twist_system(std::move(g), std::move(u), opt.k);
  } else if (opt.kind == "random") {
    tcds::FiniteGroup g = parse_group_spec(opt.group_spec);
    enforce_cap(g.order);
    sys = tcds::random_system(opt.seed, std::move(g), {parse_blocks(opt.blocks_spec)}, opt.k);
  } else {
    throw tcds::parse_error("unknown --kind '" + opt.kind +
                            "' (trivial, rotation, inner, random)");
  }
  tcds::save_system(*sys, opt.out_path);
  return 0;
}

int cmd_check(const std::string& sys_path, double tol, const std::string& format,
              const std::string& out_path) {
  SystemPtr sys = tcds::load_system_unchecked(sys_path);
  enforce_cap(sys->group.order);
  const tcds::ValidationReport rep = tcds::validate_system(*sys, tol);
  if (format == "json")
    std::cout << tcds::validation_report_to_json(rep).dump(2) << "\n";
  else
    std::cout << tcds::format_validation_report(rep);
  if (!out_path.empty()) tcds::write_json_file(tcds::validation_report_to_json(rep), out_path);
  return rep.pass() ? 0 : 1;
}

int cmd_verify(const std::string& sys_path, std::uint64_t seed, int samples, double tol,
               const std::string& format, const std::string& report_path) {
  if (samples < 1) throw tcds::parse_error("--samples must be >= 1");
  if (!(tol > 0.0)) throw tcds::parse_error("--tol must be positive");
  SystemPtr sys = load_checked(sys_path);
  const tcds::TheoremReport rep = tcds::verify_system(sys, seed, samples, tol);
  if (format == "json")
    std::cout << tcds::theorem_report_to_json(rep).dump(2) << "\n";
  else
    std::cout << tcds::format_theorem_report(rep);
  if (!report_path.empty())
    tcds::write_json_file(tcds::theorem_report_to_json(rep), report_path);
  return rep.pass() ? 0 : 1;
}

int cmd_counterexample(int max_n, const std::string& format) {
  const std::vector<tcds::GrowthRow> rows = tcds::counterexample_growth(max_n);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows)
      j.push_back(nlohmann::json{{"n", row.n},
                                 {"l1", row.l1},
                                 {"phi_abs", row.phi_abs},
                                 {"ratio", row.ratio},
                                 {"phi_star", row.phi_star},
                                 {"involution_violated", row.involution_violated}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "evaluation functional f -> sum_n f(n) e^n on C_c(Z), k = 1\n";
  std::cout << std::left << std::setw(6) << "n" << std::setw(8) << "|d_n|_1" << std::setw(24)
            << "|phi(d_n)|" << std::setw(24) << "ratio" << std::setw(24) << "phi(d_n*)"
            << "involution\n";
  for (const auto& row : rows)
    std::cout << std::left << std::setw(6) << row.n << std::setw(8) << row.l1 << std::setw(24)
              << fmt_g(row.phi_abs) << std::setw(24) << fmt_g(row.ratio) << std::setw(24)
              << fmt_g(row.phi_star) << (row.involution_violated ? "VIOLATED" : "respected")
              << "\n";
  std::cout << "|phi(d_n)| / |d_n|_1 = e^n is unbounded; phi(d_n*) != conj(phi(d_n)) for n >= 1\n";
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"twisted C*-dynamical systems over finite groups: build the convolution "
               "*-algebra, represent it, and test L1-contractivity of *-representations"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a system file");
  gen->add_option("--kind", gen_opt.kind, "trivial | rotation | inner | random")->required();
  gen->add_option("--group", gen_opt.group_spec, "product of cyclic groups, e.g. z6 or z2xz2");
  gen->add_option("--blocks", gen_opt.blocks_spec, "algebra block sizes, e.g. 2,2");
  gen->add_option("--n", gen_opt.n, "rotation: G = Z/n x Z/n");
  gen->add_option("--p", gen_opt.p, "rotation: twist exponent");
  gen->add_option("--k", gen_opt.k, "Haar measure scale (positive)");
  gen->add_option("--seed", gen_opt.seed, "random kind: RNG seed");
  gen->add_option("--units", gen_opt.units_path, "inner kind: JSON file of unitaries");
  gen->add_option("-o,--output", gen_opt.out_path, "output system file")->required();

  std::string check_sys, check_format = "text", check_out;
  double check_tol = 1e-10;
  auto* check = app.add_subcommand("check", "validate the system axioms");
  check->add_option("--system", check_sys, "system file")->required();
  check->add_option("--tol", check_tol, "axiom tolerance");
  check->add_option("--format", check_format, "text | json");
  check->add_option("-o,--output", check_out, "also write the JSON report here");

  std::string conv_sys, conv_f, conv_g, conv_out;
  auto* conv = app.add_subcommand("conv", "twisted convolution f * g");
  conv->add_option("--system", conv_sys, "system file")->required();
  conv->add_option("f", conv_f, "left factor file")->required();
  conv->add_option("g", conv_g, "right factor file")->required();
  conv->add_option("-o,--output", conv_out, "output file (stdout if omitted)");

  std::string star_sys, star_f, star_out;
  auto* star = app.add_subcommand("star", "involution f*");
  star->add_option("--system", star_sys, "system file")->required();
  star->add_option("f", star_f, "element file")->required();
  star->add_option("-o,--output", star_out, "output file (stdout if omitted)");

  std::string l1_sys, l1_f;
  auto* l1 = app.add_subcommand("l1", "L1 norm of an element");
  l1->add_option("--system", l1_sys, "system file")->required();
  l1->add_option("f", l1_f, "element file")->required();

  std::string rn_sys, rn_f;
  auto* repnorm = app.add_subcommand("repnorm", "regular representation norm vs L1 norm");
  repnorm->add_option("--system", rn_sys, "system file")->required();
  repnorm->add_option("f", rn_f, "element file")->required();

  std::string rm_sys, rm_f, rm_out;
  auto* repmat = app.add_subcommand("repmat", "integrated regular representation matrix");
  repmat->add_option("--system", rm_sys, "system file")->required();
  repmat->add_option("f", rm_f, "element file")->required();
  repmat->add_option("-o,--output", rm_out, "output file (stdout if omitted)");

  std::string vf_sys, vf_format = "text", vf_report;
  std::uint64_t vf_seed = 1;
  int vf_samples = 100;
  double vf_tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "run the theorem check battery");
  verify->add_option("--system", vf_sys, "system file")->required();
  verify->add_option("--seed", vf_seed, "RNG seed");
  verify->add_option("--samples", vf_samples, "sample count");
  verify->add_option("--tol", vf_tol, "check tolerance");
  verify->add_option("--format", vf_format, "text | json");
  verify->add_option("--report", vf_report, "write the JSON report here");

  int ce_max_n = 20;
  std::string ce_format = "text";
  auto* ce = app.add_subcommand("counterexample", "unbounded-functional growth table");
  ce->add_option("--max-n", ce_max_n, "largest n (1..700)");
  ce->add_option("--format", ce_format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*gen) return cmd_gen(gen_opt);
  if (*check) {
    require_format(check_format);
    return cmd_check(check_sys, check_tol, check_format, check_out);
  }
  if (*conv) {
    SystemPtr sys = load_checked(conv_sys);
    const tcds::ConvElement f = tcds::load_conv(conv_f, sys);
    const tcds::ConvElement g = tcds::load_conv(conv_g, sys);
    emit_json(tcds::conv_to_json(tcds::convolve(f, g)), conv_out);
    return 0;
  }
  if (*star) {
    SystemPtr sys = load_checked(star_sys);
    emit_json(tcds::conv_to_json(tcds::involute(tcds::load_conv(star_f, sys))), star_out);
    return 0;
  }
  if (*l1) {
    SystemPtr sys = load_checked(l1_sys);
    std::cout << fmt_g(tcds::l1_norm(tcds::load_conv(l1_f, sys))) << "\n";
    return 0;
  }
  if (*repnorm) {
    SystemPtr sys = load_checked(rn_sys);
    const tcds::ConvElement f = tcds::load_conv(rn_f, sys);
    const tcds::RegularRepresentation rep(sys);
    const double rn = rep.norm(f);
    const double l1n = tcds::l1_norm(f);
    std::cout << "rep_norm " << fmt_g(rn) << "\n";
    std::cout << "l1_norm " << fmt_g(l1n) << "\n";
    std::cout << "ratio " << fmt_g(l1n > 0.0 ? rn / l1n : 0.0) << "\n";
    return 0;
  }
  if (*repmat) {
    SystemPtr sys = load_checked(rm_sys);
    const tcds::RegularRepresentation rep(sys);
    emit_json(tcds::matrix_to_json(rep.integrated(tcds::load_conv(rm_f, sys))), rm_out);
    return 0;
  }
  if (*verify) {
    require_format(vf_format);
    return cmd_verify(vf_sys, vf_seed, vf_samples, vf_tol, vf_format, vf_report);
  }
  if (*ce) {
    require_format(ce_format);
    return cmd_counterexample(ce_max_n, ce_format);
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tcds::invalid_system& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tcds::numerical_failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tcds::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
