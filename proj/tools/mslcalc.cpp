#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "msl/cf_complex.hpp"
#include "msl/charnum.hpp"
#include "msl/class_label.hpp"
#include "msl/config.hpp"
#include "msl/kq_ring.hpp"
#include "msl/msl_assembly.hpp"
#include "msl/operations.hpp"
#include "msl/verify.hpp"
#include "msl/witt.hpp"

using namespace msl;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> truncation;
  std::string config_path;
  std::optional<std::string> format;
  bool json_flag = false;

  std::optional<std::string> field;
  std::optional<long> characteristic;
  int n = 0;
  std::optional<int> m;
  std::optional<int> max_degree;
  std::string out_dir;
  std::string op_name;
  std::string class_label;
  int max_power = 3;
  bool very_effective = false;
  int ambient = 0;
  int degree = 0;
  std::optional<std::string> suite;
};

RunConfig resolve(const Options& o) {
  RunConfig c;
  std::map<std::string, std::string> file;
  if (!o.config_path.empty()) file = read_config_file(o.config_path);
  c.apply(file);
  if (o.truncation) c.truncation = *o.truncation;
  if (o.format) c.format = parse_format(*o.format);
  if (o.json_flag) c.format = OutputFormat::Json;
  if (o.field) c.field = *o.field;
  if (o.characteristic) c.characteristic = *o.characteristic;
  if (o.suite) c.suite = *o.suite;
  if (o.max_degree) c.max_degree = *o.max_degree;
  else if (!file.count("max_degree")) c.max_degree = c.truncation;
  c.validate();
  return c;
}

FieldDescriptor field_of(const RunConfig& c) {
  return FieldDescriptor::parse(c.field, c.characteristic ? std::optional<long>(c.characteristic) : std::nullopt);
}

json hurewicz_json(const MUClass& x) {
  json j = json::object();
  const auto& parts = partitions_of(x.degree);
  for (std::size_t i = 0; i < x.coords.size(); ++i) j[parts[i].to_string()] = to_string(x.coords[i]);
  return j;
}

json class_json(const MUBasis& basis, const MUClass& x) {
  json j;
  j["degree"] = x.degree;
  j["hurewicz"] = hurewicz_json(x);
  if (x.degree >= 0) {
    json tangent = json::object(), normal = json::object();
    for (const auto& [mu, v] : hurewicz_to_chern_numbers(x)) tangent[mu.to_string()] = to_string(v);
    for (const Partition& mu : partitions_of(x.degree)) normal[mu.to_string()] = to_string(chern_number(x, mu));
    j["tangent_chern_numbers"] = tangent;
    j["normal_chern_numbers"] = normal;
    if (x.degree <= basis.max_degree()) {
      json coords = json::object();
      auto c = basis.require_coordinates(x);
      const auto& parts = partitions_of(x.degree);
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) coords[MUBasis::monomial_label(parts[i])] = to_string(c[i]);
      j["x_coordinates"] = coords;
    }
  }
  return j;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p);
  if (!out) throw IoError("cannot write " + p.string());
  out << content;
  if (!out) throw IoError("write failed for " + p.string());
}

std::string matrix_csv(const IntMatrix& M) {
  std::ostringstream os;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? "," : "") << to_string(M(i, j));
    os << "\n";
  }
  return os.str();
}

json matrix_json(const IntMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(to_string(M(i, j)));
    rows.push_back(r);
  }
  return rows;
}

void emit(const RunConfig& c, const json& j, const std::string& text) {
  if (c.format == OutputFormat::Json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_msl_group(const Options& o) {
  RunConfig c = resolve(o);
  FieldDescriptor k = field_of(c);
  if (o.m) {
    FGAbGroup g = msl_off_diagonal(k, o.n, *o.m);
    json j{{"field", k.flag()}, {"n", o.n}, {"m", *o.m}, {"group", g.to_json()}, {"group_text", g.to_string()}};
    emit(c, j, "n=" + std::to_string(o.n) + " m=" + std::to_string(*o.m) + ": " + g.to_string() + "\n");
    return kExitOk;
  }
  MSLAnswer a = msl_diagonal(k, o.n, c.truncation);
  json j = a.to_json();
  j["i_msl"] = i_msl(k, o.n).to_json();
  j["torsion"] = msl_torsion(k, o.n).to_json();
  std::ostringstream os;
  os << "n=" << o.n << ": " << a.group.to_string() << "  [" << a.symbolic << "]\n";
  for (const auto& s : a.decomposition) os << "  " << s.label << ": " << s.group.to_string() << " (" << s.note << ")\n";
  emit(c, j, os.str());
  return kExitOk;
}

int cmd_msl_table(const Options& o) {
  RunConfig c = resolve(o);
  FieldDescriptor k = field_of(c);
  auto rows = intro_table(k);
  if (c.format == OutputFormat::Csv) {
    std::cout << "n,group,symbolic\n";
    for (const auto& r : rows) std::cout << r.n << ",\"" << r.group.to_string() << "\",\"" << r.symbolic << "\"\n";
    return kExitOk;
  }
  json j = json::array();
  std::ostringstream os;
  os << "field " << k.flag() << " (" << k.name() << "), GW(k) = " << WittRing(k).gw().to_string() << "\n";
  for (const auto& r : rows) {
    j.push_back({{"n", r.n}, {"group", r.group.to_json()}, {"group_text", r.group.to_string()}, {"symbolic", r.symbolic}});
    os << "  n=" << r.n << ": " << r.group.to_string() << "  [" << r.symbolic << "]\n";
  }
  emit(c, json{{"field", k.flag()}, {"rows", j}}, os.str());
  return kExitOk;
}

int cmd_cf_homology(const Options& o) {
  RunConfig c = resolve(o);
  Workspace ws = Workspace::build(c.truncation);
  const int top = std::min(c.max_degree, c.truncation - 1);
  json rows = json::array();
  std::ostringstream text, csv;
  csv << "n,rank_W,rank_Z,rank_B,H\n";
  for (int n = 0; n <= top; ++n) {
    CFHomology h = ws.cf->homology(n);
    std::size_t rw = ws.cf->w_lattice(n).cols();
    rows.push_back({{"n", n}, {"rank_W", rw}, {"rank_Z", h.rank_cycles}, {"rank_B", h.rank_boundaries},
                    {"H", h.homology.to_json()}, {"H_text", h.homology.to_string()}});
    text << "n=" << n << " rank W=" << rw << " Z=" << h.rank_cycles << " B=" << h.rank_boundaries
         << " H=" << h.homology.to_string() << "\n";
    csv << n << "," << rw << "," << h.rank_cycles << "," << h.rank_boundaries << ",\"" << h.homology.to_string()
        << "\"\n";
  }
  if (c.format == OutputFormat::Csv) std::cout << csv.str();
  else emit(c, rows, text.str());
  return kExitOk;
}

json cf_dump_json(const Workspace& ws, int top) {
  json out = json::array();
  for (int n = 0; n <= top; ++n) {
    json d;
    d["n"] = n;
    d["wall_basis"] = matrix_json(ws.cf->w_lattice(n));
    if (n >= 1) d["delta"] = matrix_json(ws.cf->delta_matrix(n));
    if (n >= 2) d["Delta_on_lattice"] = matrix_json(ws.cf->delta_on_lattice(n));
    out.push_back(d);
  }
  return out;
}

int cmd_cf_dump(const Options& o) {
  RunConfig c = resolve(o);
  Workspace ws = Workspace::build(c.truncation);
  const int top = std::min(c.max_degree, c.truncation);
  if (o.out_dir.empty()) {
    std::cout << cf_dump_json(ws, top).dump(2) << "\n";
    return kExitOk;
  }
  std::filesystem::path dir(o.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string());
  for (int n = 1; n <= top; ++n) write_file(dir / ("delta_" + std::to_string(n) + ".csv"), matrix_csv(ws.cf->delta_matrix(n)));
  write_file(dir / "cf_complex.json", cf_dump_json(ws, top).dump(2) + "\n");
  return kExitOk;
}

CohOperation operation_by_name(const FGLContext& ctx, const std::string& name) {
  if (name == "partial") return boundary_partial(ctx);
  if (name == "delta") return delta_op(ctx);
  if (name.size() > 1 && name[0] == 's') {
    std::string rest = name.substr(1);
    if (rest.front() == '(' && rest.back() == ')') return CohOperation::landweber_novikov(Partition::parse(rest));
    return CohOperation::landweber_novikov(Partition::parse("(" + rest + ")"));
  }
  throw std::invalid_argument("unknown operation '" + name + "' (expected partial, delta or s(...))");
}

int cmd_op_apply(const Options& o) {
  RunConfig c = resolve(o);
  auto ctx = std::make_shared<const FGLContext>(c.truncation);
  MUBasis basis(ctx, c.truncation);
  CohOperation op = operation_by_name(*ctx, o.op_name);
  MUClass x = parse_class_label(basis, o.class_label);
  MUClass y = op.apply(x);
  json j;
  j["operation"] = op.name();
  j["shift"] = op.shift();
  j["input"] = class_json(basis, x);
  j["input"]["label"] = o.class_label;
  j["result"] = class_json(basis, y);
  std::ostringstream os;
  os << op.name() << "(" << o.class_label << ") in degree " << y.degree << ":\n";
  for (auto& [k, v] : j["result"]["hurewicz"].items()) os << "  b" << k << ": " << v.get<std::string>() << "\n";
  emit(c, j, os.str());
  return kExitOk;
}

int cmd_witt_table(const Options& o) {
  RunConfig c = resolve(o);
  WittRing W(field_of(c));
  json j = W.to_json(o.max_power);
  std::ostringstream os;
  os << "field " << W.field().flag() << " (" << W.field().name() << ")\n"
     << "  GW = " << W.gw().to_string() << "\n  W = " << W.w().to_string() << "\n";
  for (int m = 0; m <= o.max_power; ++m)
    os << "  I^" << m << " = " << W.fundamental_ideal_power(m).to_string() << "\n";
  if (c.format == OutputFormat::Text) std::cout << os.str();
  else std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_kq_table(const Options& o) {
  RunConfig c = resolve(o);
  FieldDescriptor k = field_of(c);
  KQPresentation P(k, o.very_effective);
  const int top = o.max_degree.value_or(16);
  const int lo = o.very_effective ? 0 : -top;
  json rows = json::array();
  std::ostringstream os;
  for (int n = lo; n <= top; ++n) {
    FGAbGroup g = kq_diagonal(k, n, o.very_effective);
    FGAbGroup pres = P.degree_group(n);
    int r = ((n % 4) + 4) % 4;
    std::string gen = r == 3 || (o.very_effective && n < 0)
                          ? ""
                          : KQMonomial{static_cast<KQBase>(r), (n - r) / 4}.to_string();
    rows.push_back({{"n", n}, {"group", g.to_json()}, {"group_text", g.to_string()}, {"presented", pres.to_string()},
                    {"generator", gen}, {"kw", kw_diagonal(k, n).to_string()}});
    os << "n=" << n << ": " << g.to_string() << (gen.empty() ? "" : "  generated by " + gen) << "\n";
  }
  KQReport rep = kq_relation_check(k, top, o.very_effective);
  os << "relations: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& f : rep.failures) os << "  failing: " << f << "\n";
  emit(c, json{{"field", k.flag()}, {"very_effective", o.very_effective}, {"rows", rows}, {"relations", rep.to_json()},
               {"eta_top", eta_top_square_check(k).to_json()}},
       os.str());
  return rep.pass ? kExitOk : kExitVerify;
}

int cmd_charnum_hypersurface(const Options& o) {
  RunConfig c = resolve(o);
  VarietyClass v = hypersurface_class(o.ambient, o.degree);
  if (v.dimension > c.truncation) throw std::out_of_range("hypersurface dimension exceeds the truncation");
  json j = v.to_json();
  std::ostringstream os;
  os << v.description << ", dimension " << v.dimension << "\n  c(T) = " << v.tangent_class.to_string() << "\n";
  for (const auto& [mu, val] : v.tangent) os << "  c" << mu.to_string() << "[X] = " << to_string(val) << "\n";
  if (v.calabi_yau) os << "  Calabi-Yau (symbolic c_1 = 0): " << (*v.calabi_yau ? "yes" : "no") << "\n";
  if (v.dimension >= 2) {
    Workspace ws = Workspace::build(std::max(c.truncation, v.dimension + 1));
    try {
      GeneratorVerdict g = generator_check_msu(*ws.cf, v.cls);
      j["generator_verdict"] = g.to_json();
      os << "  generator check: " << (g.pass ? "PASS" : "FAIL") << " (" << g.detail << ")\n";
    } catch (const std::invalid_argument& e) {
      j["generator_verdict"] = {{"verdict", "NOT_APPLICABLE"}, {"detail", e.what()}};
      os << "  generator check: not applicable (" << e.what() << ")\n";
    }
  }
  emit(c, j, os.str());
  return kExitOk;
}

int cmd_verify(const Options& o) {
  RunConfig c = resolve(o);
  const bool needs_ws = c.suite == "leibniz" || c.suite == "cf-pattern" || c.suite == "all";
  Workspace ws = needs_ws ? Workspace::build(std::max(c.truncation, std::min(c.max_degree, 16))) : Workspace{};
  auto reports = run_suite(c.suite, ws, c.max_degree);
  bool pass = true;
  json j = json::array();
  std::ostringstream os;
  for (const auto& r : reports) {
    pass = pass && r.pass;
    j.push_back(r.to_json());
    os << r.to_text();
  }
  os << (pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  emit(c, json{{"pass", pass}, {"suites", j}}, os.str());
  return pass ? kExitOk : kExitVerify;
}

int cmd_dump(const Options& o) {
  RunConfig c = resolve(o);
  if (o.out_dir.empty()) throw std::invalid_argument("dump needs --out");
  std::filesystem::path dir(o.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string());
  Workspace ws = Workspace::build(c.truncation);
  const MUBasis& B = *ws.basis;

  json basis = json::array();
  std::ostringstream chern;
  chern << "n,class,partition,tangent_chern_number,normal_chern_number\n";
  for (int n = 1; n <= c.truncation; ++n) {
    const MUClass& g = B.generator(n);
    basis.push_back({{"n", n}, {"recipe", B.generator_recipe(n)}, {"s_number", to_string(s_number(g))},
                     {"hurewicz", hurewicz_json(g)}});
    auto tangent = hurewicz_to_chern_numbers(g);
    for (const Partition& mu : partitions_of(n))
      chern << n << ",x" << n << ",\"" << mu.to_string() << "\"," << to_string(tangent[mu]) << ","
            << to_string(chern_number(g, mu)) << "\n";
  }
  write_file(dir / "mu_basis.json", basis.dump(2) + "\n");
  write_file(dir / "chern_numbers.csv", chern.str());

  for (int n = 1; n <= std::min(6, c.truncation); ++n)
    write_file(dir / ("delta_" + std::to_string(n) + ".csv"), matrix_csv(ws.cf->delta_matrix(n)));

  std::ostringstream hom;
  hom << "n,rank_Z,rank_B,H\n";
  for (int n = 0; n <= c.truncation - 1; ++n) {
    CFHomology h = ws.cf->homology(n);
    hom << n << "," << h.rank_cycles << "," << h.rank_boundaries << ",\"" << h.homology.to_string() << "\"\n";
  }
  write_file(dir / "homology.csv", hom.str());

  for (const auto& k : field_catalog()) write_file(dir / ("witt_" + k.flag() + ".json"), WittRing(k).to_json(3).dump(2) + "\n");
  std::cout << "wrote dumps to " << dir.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for special linear algebraic cobordism"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--truncation,-N", o.truncation, "Truncation degree N (2..16, default 12)");
  app.add_option("--config", o.config_path, "key=value configuration file (flags win)");
  app.add_option("--format", o.format, "Output format: text, json or csv");

  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "Field kind: c, r, fq1, fq3");
    sub->add_option("--char", o.characteristic, "Characteristic for finite fields");
    sub->add_flag("--json", o.json_flag, "JSON output");
  };

  int rc = kExitOk;
  auto* msl_cmd = app.add_subcommand("msl", "Diagonal groups of MSL")->require_subcommand(1);
  auto* msl_group = msl_cmd->add_subcommand("group", "One degree");
  field_opts(msl_group);
  msl_group->add_option("--n", o.n, "Degree n")->required();
  msl_group->add_option("--m", o.m, "Off-diagonal shift m > 0");
  msl_group->callback([&] { rc = cmd_msl_group(o); });
  auto* msl_table = msl_cmd->add_subcommand("table", "Rows n = 0..9");
  field_opts(msl_table);
  msl_table->callback([&] { rc = cmd_msl_table(o); });

  auto* cf_cmd = app.add_subcommand("cf", "Conner-Floyd complex")->require_subcommand(1);
  auto* cf_hom = cf_cmd->add_subcommand("homology", "Homology rows");
  cf_hom->add_option("--max-degree", o.max_degree, "Largest degree");
  cf_hom->add_flag("--json", o.json_flag, "JSON output");
  cf_hom->callback([&] { rc = cmd_cf_homology(o); });
  auto* cf_dump = cf_cmd->add_subcommand("dump", "Wall bases and differentials");
  cf_dump->add_option("--max-degree", o.max_degree, "Largest degree");
  cf_dump->add_option("--out", o.out_dir, "Output directory (default: JSON on stdout)");
  cf_dump->callback([&] { rc = cmd_cf_dump(o); });

  auto* op_cmd = app.add_subcommand("op", "Cohomology operations")->require_subcommand(1);
  auto* op_apply = op_cmd->add_subcommand("apply", "Apply an operation to a class");
  op_apply->add_option("--name", o.op_name, "partial, delta or s(...)")->required();
  op_apply->add_option("--class", o.class_label, "Class label, e.g. CP1^2, H2_3, x2*x1")->required();
  op_apply->add_flag("--json", o.json_flag, "JSON output");
  op_apply->callback([&] { rc = cmd_op_apply(o); });

  auto* witt_cmd = app.add_subcommand("witt", "Witt and Grothendieck-Witt rings")->require_subcommand(1);
  auto* witt_table = witt_cmd->add_subcommand("table", "GW, W and I^m");
  field_opts(witt_table);
  witt_table->add_option("--max-power", o.max_power, "Largest ideal power");
  witt_table->callback([&] { rc = cmd_witt_table(o); });

  auto* kq_cmd = app.add_subcommand("kq", "Hermitian K-theory diagonal")->require_subcommand(1);
  auto* kq_table = kq_cmd->add_subcommand("table", "Groups and relation check");
  field_opts(kq_table);
  kq_table->add_option("--max-degree", o.max_degree, "Largest degree (default 16)");
  kq_table->add_flag("--very-effective", o.very_effective, "Omit beta^-1");
  kq_table->callback([&] { rc = cmd_kq_table(o); });

  auto* ch_cmd = app.add_subcommand("charnum", "Chern numbers of varieties")->require_subcommand(1);
  auto* ch_hyp = ch_cmd->add_subcommand("hypersurface", "Smooth hypersurface in P^n");
  ch_hyp->add_option("--ambient", o.ambient, "Ambient dimension n")->required();
  ch_hyp->add_option("--degree", o.degree, "Degree d")->required();
  ch_hyp->add_flag("--json", o.json_flag, "JSON output");
  ch_hyp->callback([&] { rc = cmd_charnum_hypersurface(o); });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "leibniz, cf-pattern, table, kq, witt-oracle or all");
  verify->add_option("--max-degree", o.max_degree, "Largest degree");
  verify->add_flag("--json", o.json_flag, "JSON output");
  verify->callback([&] { rc = cmd_verify(o); });

  auto* dump = app.add_subcommand("dump", "Write CSV/JSON dumps");
  dump->add_option("--out", o.out_dir, "Output directory")->required();
  dump->callback([&] { rc = cmd_dump(o); });

  // Global options may follow any subcommand.
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitIo;
  }
  return rc;
}
