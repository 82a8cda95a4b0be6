#include "tcds/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace tcds {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name, const std::string& ctx) {
  if (!j.is_object()) throw parse_error(ctx + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw parse_error(ctx + ": missing field '" + name + "'");
  return *it;
}

double number(const json& j, const std::string& ctx) {
  if (!j.is_number()) throw parse_error(ctx + ": expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw parse_error(ctx + ": expected an integer");
  return j.get<int>();
}

const json& array_of(const json& j, std::size_t len, const std::string& ctx) {
  if (!j.is_array()) throw parse_error(ctx + ": expected an array");
  if (j.size() != len)
    throw parse_error(ctx + ": expected " + std::to_string(len) + " entries, got " +
                      std::to_string(j.size()));
  return j;
}

cplx entry_from_json(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 2)
    throw parse_error(ctx + ": expected a [re, im] pair");
  return {number(j[0], ctx + "[0]"), number(j[1], ctx + "[1]")};
}

json entry_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

std::string fmt_sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

const char* status_name(AxiomStatus st) {
  switch (st) {
    case AxiomStatus::pass: return "pass";
    case AxiomStatus::fail: return "FAIL";
    case AxiomStatus::vacuous: return "vacuous";
  }
  return "?";
}

}  // namespace

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j, int rows, int cols, const std::string& ctx) {
  const json& jr = array_of(j, rows, ctx);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string rctx = ctx + "[" + std::to_string(i) + "]";
    const json& row = array_of(jr[i], cols, rctx);
    for (int c = 0; c < cols; ++c)
      m(i, c) = entry_from_json(row[c], rctx + "[" + std::to_string(c) + "]");
  }
  return m;
}

json element_to_json(const AlgebraElement& a) {
  json mats = json::array();
  for (const auto& m : a.mats) mats.push_back(matrix_to_json(m));
  return json{{"mats", std::move(mats)}};
}

AlgebraElement element_from_json(const json& j, const AlgebraShape& shape,
                                 const std::string& ctx) {
  const json& mats = array_of(field(j, "mats", ctx), shape.blocks.size(), ctx + ".mats");
  AlgebraElement a;
  a.shape = shape;
  a.mats.reserve(shape.blocks.size());
  for (std::size_t i = 0; i < shape.blocks.size(); ++i) {
    const int b = shape.blocks[i];
    a.mats.push_back(matrix_from_json(mats[i], b, b, ctx + ".mats[" + std::to_string(i) + "]"));
  }
  if (!all_finite(a)) throw parse_error(ctx + ": non-finite entries");
  return a;
}

json system_to_json(const TwistedSystem& sys) {
  json j;
  j["k"] = sys.k;
  json table = json::array();
  for (const auto& row : sys.group.table) table.push_back(row);
  j["group"] = json{{"order", sys.group.order}, {"table", std::move(table)}};
  j["algebra"] = json{{"blocks", sys.shape.blocks}};
  json alpha = json::array();
  for (const auto& phi : sys.alpha) {
    json units = json::array();
    for (const auto& u : phi.units) units.push_back(matrix_to_json(u));
    alpha.push_back(json{{"perm", phi.perm}, {"units", std::move(units)}});
  }
  j["alpha"] = std::move(alpha);
  json omega = json::array();
  for (const auto& row : sys.omega) {
    json jrow = json::array();
    for (const auto& w : row) jrow.push_back(element_to_json(w));
    omega.push_back(std::move(jrow));
  }
  j["omega"] = std::move(omega);
  return j;
}

TwistedSystem system_from_json(const json& j) {
  TwistedSystem sys;
  sys.k = number(field(j, "k", "system"), "system.k");
  if (!(sys.k > 0.0)) throw parse_error("system.k: must be positive");

  const json& jg = field(j, "group", "system");
  const json& jtable = field(jg, "table", "system.group");
  if (!jtable.is_array() || jtable.empty())
    throw parse_error("system.group.table: expected a nonempty array");
  const std::size_t n = jtable.size();
  std::vector<std::vector<int>> table(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string ctx = "system.group.table[" + std::to_string(r) + "]";
    const json& row = array_of(jtable[r], n, ctx);
    table[r].reserve(n);
    for (std::size_t c = 0; c < n; ++c)
      table[r].push_back(integer(row[c], ctx + "[" + std::to_string(c) + "]"));
  }
  sys.group = group_from_table(table);  // re-derives identity and inverses
  if (jg.contains("order") && integer(jg["order"], "system.group.order") != sys.group.order)
    throw parse_error("system.group.order: disagrees with table size");

  const json& jblocks = field(field(j, "algebra", "system"), "blocks", "system.algebra");
  if (!jblocks.is_array() || jblocks.empty())
    throw parse_error("system.algebra.blocks: expected a nonempty array");
  for (std::size_t i = 0; i < jblocks.size(); ++i) {
    const int b = integer(jblocks[i], "system.algebra.blocks[" + std::to_string(i) + "]");
    if (b < 1) throw parse_error("system.algebra.blocks[" + std::to_string(i) + "]: must be >= 1");
    sys.shape.blocks.push_back(b);
  }
  const std::size_t nblocks = sys.shape.blocks.size();

  const json& jalpha = array_of(field(j, "alpha", "system"), n, "system.alpha");
  for (std::size_t r = 0; r < n; ++r) {
    const std::string ctx = "system.alpha[" + std::to_string(r) + "]";
    StarAutomorphism phi;
    phi.shape = sys.shape;
    const json& jperm = array_of(field(jalpha[r], "perm", ctx), nblocks, ctx + ".perm");
    std::vector<bool> seen(nblocks, false);
    for (std::size_t i = 0; i < nblocks; ++i) {
      const int p = integer(jperm[i], ctx + ".perm[" + std::to_string(i) + "]");
      if (p < 0 || p >= static_cast<int>(nblocks) || seen[p])
        throw parse_error(ctx + ".perm: not a permutation of the blocks");
      if (sys.shape.blocks[p] != sys.shape.blocks[i])
        throw parse_error(ctx + ".perm: maps between blocks of different dimension");
      seen[p] = true;
      phi.perm.push_back(p);
    }
    const json& junits = array_of(field(jalpha[r], "units", ctx), nblocks, ctx + ".units");
    for (std::size_t i = 0; i < nblocks; ++i) {
      const int b = sys.shape.blocks[i];
      phi.units.push_back(
          matrix_from_json(junits[i], b, b, ctx + ".units[" + std::to_string(i) + "]"));
    }
    sys.alpha.push_back(std::move(phi));
  }

  const json& jomega = array_of(field(j, "omega", "system"), n, "system.omega");
  sys.omega.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string ctx = "system.omega[" + std::to_string(r) + "]";
    const json& row = array_of(jomega[r], n, ctx);
    for (std::size_t s = 0; s < n; ++s)
      sys.omega[r].push_back(
          element_from_json(row[s], sys.shape, ctx + "[" + std::to_string(s) + "]"));
  }
  return sys;
}

json conv_to_json(const ConvElement& f) {
  json values = json::array();
  for (const auto& a : f.values) values.push_back(element_to_json(a));
  return json{{"values", std::move(values)}};
}

ConvElement conv_from_json(const json& j, const SystemPtr& sys) {
  if (!sys) throw system_mismatch("conv_from_json: null system");
  const json& values =
      array_of(field(j, "values", "element"), sys->group.order, "element.values");
  ConvElement f;
  f.system = sys;
  for (int x = 0; x < sys->group.order; ++x)
    f.values.push_back(
        element_from_json(values[x], sys->shape, "element.values[" + std::to_string(x) + "]"));
  return f;
}

json validation_report_to_json(const ValidationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"axiom", c.axiom},
                          {"status", status_name(c.status)},
                          {"residual", c.residual},
                          {"detail", c.detail}});
  return json{{"tol", rep.tol},
              {"pass", rep.pass()},
              {"max_residual", rep.max_residual()},
              {"checks", std::move(checks)}};
}

json theorem_report_to_json(const TheoremReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"check", c.check},
                          {"sample", c.sample},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"residual", c.residual},
                          {"pass", c.pass}});
  return json{{"seed", rep.seed},
              {"samples", rep.samples},
              {"tol", rep.tol},
              {"pass", rep.pass()},
              {"max_residual", rep.max_residual()},
              {"checks", std::move(checks)}};
}

std::string format_validation_report(const ValidationReport& rep) {
  std::size_t width = 0;
  for (const auto& c : rep.checks) width = std::max(width, c.axiom.size());
  std::ostringstream os;
  os << "axiom checks at tol " << fmt_sci(rep.tol) << "\n";
  for (const auto& c : rep.checks) {
    os << "  " << std::left << std::setw(8) << status_name(c.status) << std::setw(width + 2)
       << c.axiom;
    if (c.status == AxiomStatus::vacuous)
      os << std::setw(12) << "-";
    else
      os << std::setw(12) << fmt_sci(c.residual);
    if (!c.detail.empty()) os << " " << c.detail;
    os << "\n";
  }
  os << "result: " << rep.summary() << "\n";
  return os.str();
}

std::string format_theorem_report(const TheoremReport& rep) {
  // aggregate by check label, in first-appearance order
  struct Agg {
    std::string name;
    int records = 0;
    int failed = 0;
    double worst = 0.0;
    bool any = false;
  };
  std::vector<Agg> aggs;
  for (const auto& c : rep.checks) {
    Agg* a = nullptr;
    for (auto& x : aggs)
      if (x.name == c.check) a = &x;
    if (!a) {
      aggs.push_back({c.check, 0, 0, 0.0, false});
      a = &aggs.back();
    }
    ++a->records;
    if (!c.pass) ++a->failed;
    if (!a->any || c.residual > a->worst) a->worst = c.residual;
    a->any = true;
  }
  std::size_t width = std::string("check").size();
  for (const auto& a : aggs) width = std::max(width, a.name.size());

  std::ostringstream os;
  os << "theorem checks: seed " << rep.seed << ", samples " << rep.samples << ", tol "
     << fmt_sci(rep.tol) << "\n";
  os << "  " << std::left << std::setw(width + 2) << "check" << std::setw(9) << "records"
     << std::setw(13) << "worst" << "status\n";
  for (const auto& a : aggs)
    os << "  " << std::left << std::setw(width + 2) << a.name << std::setw(9) << a.records
       << std::setw(13) << fmt_sci(a.worst) << (a.failed ? "FAIL" : "pass") << "\n";
  for (const auto& c : rep.checks)
    if (!c.pass)
      os << "  failed: " << c.check << " (" << c.sample << "): lhs " << fmt_sci(c.lhs)
         << ", rhs " << fmt_sci(c.rhs) << ", residual " << fmt_sci(c.residual) << "\n";
  os << "result: " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.checks.size()
     << " records, max residual " << fmt_sci(rep.max_residual()) << ")\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw error("write failed: " + path);
}

SystemPtr load_system(const std::string& path, double tol) {
  SystemPtr sys = load_system_unchecked(path);
  ValidationReport rep = validate_system(*sys, tol);
  if (!rep.pass())
    throw invalid_system("system file " + path + " failed validation: " + rep.summary(),
                         std::move(rep));
  return sys;
}

SystemPtr load_system_unchecked(const std::string& path) {
  return std::make_shared<const TwistedSystem>(system_from_json(read_json_file(path)));
}

void save_system(const TwistedSystem& sys, const std::string& path) {
  write_json_file(system_to_json(sys), path);
}

ConvElement load_conv(const std::string& path, const SystemPtr& sys) {
  return conv_from_json(read_json_file(path), sys);
}

void save_conv(const ConvElement& f, const std::string& path) {
  write_json_file(conv_to_json(f), path);
}

}  // namespace tcds
