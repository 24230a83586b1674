#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowlab/characters.hpp"
#include "chowlab/chow_geometry.hpp"
#include "chowlab/error.hpp"
#include "chowlab/foulkes_howe.hpp"
#include "chowlab/hilbert_covariants.hpp"
#include "chowlab/veronese_tor.hpp"
#include "chowlab/verify.hpp"

namespace chowlab::cli {

namespace {

using json = nlohmann::json;

struct Globals {
  std::string json_path;
  std::string dump_path;
  std::uint64_t seed = 1;
  std::uint64_t prime = 0;
  int order = 8;
  bool table = false;
};

struct Outcome {
  json parameters = json::object();
  json result = json::object();
  std::string status = "pass";
  std::string summary;
  std::string table;  // TSV, printed instead of the report when --table is given
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_rational(part));
  return out;
}

json form_json(const Form& f) { return json::parse(form_to_json(f)); }

json report_json(const FHReport& r) {
  json j = {{"dim_domain", r.dim_domain}, {"dim_codomain", r.dim_codomain}, {"rank", r.rank},
            {"dim_J", r.dim_J},           {"dim_coker", r.dim_coker},       {"rank_method", r.modular ? "modular" : "exact"}};
  if (r.modular) {
    j["primes"] = r.primes;
    j["prime_ranks"] = r.prime_ranks;
    j["full_rank_certified"] = r.full_rank_certified;
  }
  return j;
}

// ---------------------------------------------------------------- fh

struct FhArgs {
  int d = 0, n = 0, m = 0;
  bool kernel = false;
};

Outcome cmd_fh(const FhArgs& a, const Globals& g) {
  Outcome o;
  o.parameters = {{"d", a.d}, {"n", a.n}, {"m", a.m}};
  const FHMatrix fh = fh_matrix(a.d, a.n, a.m);
  const FHReport r = fh_analysis(fh, g.seed);
  o.result = report_json(r);
  if (r.modular && !r.full_rank_certified) o.status = "modular-only";
  if (!g.dump_path.empty()) {
    std::ofstream dump(g.dump_path);
    if (!dump) fail(Errc::ParseError, "cannot write " + g.dump_path);
    fh.matrix.dump(dump);
    o.result["dump"] = g.dump_path;
  }
  if (a.kernel) {
    json gens = json::array();
    for (const auto& v : kernel_basis(fh.matrix, Rationals{})) gens.push_back(domain_vector_to_string(fh.domain, v));
    o.result["kernel"] = gens;
  }
  if (g.prime) {
    o.parameters["prime"] = g.prime;
    const auto ker = kernel_basis(fh.matrix, PrimeField{g.prime});
    json gens = json::array();
    for (const auto& v : ker) gens.push_back(domain_vector_to_string(fh.domain, v));
    o.result["kernel_mod_p"] = {{"p", g.prime}, {"dim", ker.size()}, {"generators", gens}};
  }
  o.summary = "fh(" + std::to_string(a.d) + "," + std::to_string(a.n) + "," + std::to_string(a.m) + "): " +
              std::to_string(r.dim_codomain) + " x " + std::to_string(r.dim_domain) + ", rank " +
              std::to_string(r.rank) + " (" + (r.modular ? "modular" : "exact") + "), dim J " +
              std::to_string(r.dim_J) + ", coker " + std::to_string(r.dim_coker);
  return o;
}

// ---------------------------------------------------------------- plethysm

struct PlethysmArgs {
  int m = 0, d = 0, k = 3;
  bool wedge = false;
};

Outcome cmd_plethysm(const PlethysmArgs& a, const Globals&) {
  Outcome o;
  o.parameters = {{"m", a.m}, {"d", a.d}, {"k", a.k}, {"wedge", a.wedge}};
  const SymPoly ch = a.wedge ? wedge_of_sym_char(a.m, a.d, a.k) : sym_of_sym_char(a.m, a.d, a.k);
  const Decomposition dec = schur_decompose(ch);
  json terms = json::array();
  Integer dim = 0;
  std::string line;
  for (const auto& [lambda, mult] : dec.terms) {
    terms.push_back({{"lambda", lambda.to_string()}, {"multiplicity", mult.get_str()}});
    dim += mult * weyl_dim(lambda, a.k);
    line += (line.empty() ? "" : " + ") + (mult == 1 ? "" : mult.get_str() + "*") + "s" + lambda.to_string();
  }
  const Integer expected = ch.at_ones();
  o.result = {{"decomposition", terms},
              {"virtual", dec.is_virtual},
              {"dimension", dim.get_str()},
              {"character_dimension", expected.get_str()}};
  if (dec.is_virtual || dim != expected) o.status = "fail";
  o.summary = std::string(a.wedge ? "Wedge^" : "Sym^") + std::to_string(a.m) + "(Sym^" + std::to_string(a.d) +
              " C^" + std::to_string(a.k) + ") = " + line + ", dim " + dim.get_str();
  o.table = dec.to_string();
  return o;
}

// ---------------------------------------------------------------- foulkes / hermite

Outcome cmd_foulkes(int m, int d) {
  Outcome o;
  o.parameters = {{"m", m}, {"d", d}};
  const auto r = foulkes_check(m, d);
  json w = json::array();
  for (const auto& x : r.witnesses)
    w.push_back({{"lambda", x.lambda.to_string()}, {"inner", x.inner.get_str()}, {"outer", x.outer.get_str()}});
  o.result = {{"contained", r.contained}, {"variables", r.nvars}, {"multiplicities", w}};
  if (!r.contained) o.status = "fail";
  o.summary = "Sym^" + std::to_string(m) + "(Sym^" + std::to_string(d) + ") " +
              (r.contained ? "is" : "is NOT") + " contained in Sym^" + std::to_string(d) + "(Sym^" +
              std::to_string(m) + ")";
  return o;
}

Outcome cmd_hermite(int a, int b, int max) {
  Outcome o;
  std::vector<std::pair<int, int>> pairs;
  if (max > 0) {
    o.parameters = {{"max", max}};
    for (int x = 1; x <= max; ++x)
      for (int y = 1; y <= max; ++y) pairs.emplace_back(x, y);
  } else {
    o.parameters = {{"a", a}, {"b", b}};
    pairs.emplace_back(a, b);
  }
  json failures = json::array();
  for (auto [x, y] : pairs)
    if (!hermite_check(x, y)) failures.push_back({x, y});
  o.result = {{"checked", pairs.size()}, {"failures", failures}};
  if (!failures.empty()) o.status = "fail";
  o.summary = "Hermite reciprocity: " + std::to_string(pairs.size() - failures.size()) + "/" +
              std::to_string(pairs.size()) + " pairs hold";
  return o;
}

// ---------------------------------------------------------------- hilbert

Outcome cmd_hilbert(int d, const std::string& lambda_text, const Globals& g) {
  Outcome o;
  o.parameters["order"] = g.order;
  if (!lambda_text.empty()) {
    const Partition lambda = Partition::parse(lambda_text);
    o.parameters["lambda"] = lambda.to_string();
    const auto table = generator_table(lambda);
    json rows = json::array();
    for (const auto& r : table.rows) {
      json tabs = json::array();
      for (const auto& t : r.tableaux) tabs.push_back(t.rows);
      rows.push_back({{"degree", r.degree}, {"character", to_compact_string(r.character)}, {"tableaux", tabs}});
    }
    o.result["generators"] = rows;
    o.result["numerator"] = to_compact_string(syt_numerator(lambda));
    if (lambda.size() <= 8) {
      const bool ok = hm_lambda_identity_check(lambda, g.order);
      o.result["series"] = to_string(hm_lambda_series(lambda, g.order));
      o.result["identity"] = ok;
      if (!ok) o.status = "fail";
    }
    o.summary = "M_" + lambda.to_string() + ": " + std::to_string(table.generator_count()) +
                " generators, numerator " + to_compact_string(syt_numerator(lambda));
    o.table = to_tsv(table);
    return o;
  }
  o.parameters["d"] = d;
  const std::string numerator = to_compact_string(carlitz_numerator(d));
  const bool carlitz = carlitz_identity_check(d, g.order);
  const bool hb = hb_closed_form_check(d, g.order);
  o.result = {{"numerator", numerator},
              {"ha_series", to_string(ha_series(d, g.order))},
              {"carlitz_identity", carlitz},
              {"hb_closed_form", hb}};
  bool ok = carlitz && hb;
  if (d <= 8) {
    const bool iso = isotypic_sum_check(d, g.order);
    o.result["isotypic_sum"] = iso;
    ok = ok && iso;
  }
  if (!ok) o.status = "fail";
  std::string tsv = "lambda\tdegree\tcharacter\ttableaux\n";
  for (const auto& lambda : partitions_of(d))
    for (const auto& r : generator_table(lambda).rows)
      tsv += lambda.to_string() + "\t" + std::to_string(r.degree) + "\t" + to_compact_string(r.character) + "\t" +
             std::to_string(r.tableaux.size()) + "\n";
  o.table = tsv;
  o.summary = "H_A numerator for d=" + std::to_string(d) + ": " + numerator;
  return o;
}

// ---------------------------------------------------------------- cubic / recover

Outcome cmd_cubic(const std::string& test, const std::string& input, const Globals& g) {
  Outcome o;
  o.parameters = {{"test", test}};
  if (test == "complex") {
    o.parameters["seed"] = g.seed;
    const auto r = complex_checks(g.seed);
    const auto syz = [](const Syzygy& s) {
      json j = json::array();
      for (std::size_t i = 0; i < s.var.size(); ++i)
        j.push_back({{"generator", z_name(cubic_monomials()[static_cast<std::size_t>(s.var[i])])},
                     {"scalar", to_string(s.scalar[i])}});
      return j;
    };
    o.result = {{"skew", r.skew},
                {"linear_row", syz(r.linear)},
                {"hessian_row", syz(r.hessian)},
                {"composition_zero", r.composition_zero},
                {"generic_rank", r.generic_rank},
                {"decomposable_ranks", r.decomposable_ranks}};
    o.summary = "d2 skew, d1*d2 = 0, generic rank " + std::to_string(r.generic_rank) + ", ranks <= 6 on products of lines";
    return o;
  }
  if (input.empty()) fail(Errc::ParseError, "--input is required for --test " + test);
  o.parameters["input"] = input;
  const Form f = form_from_json(read_file(input));
  if (test == "aronhold") {
    const bool dec = aronhold_test(f);
    o.result = {{"decomposable", dec}, {"hessian", form_json(hessian_cubic(f))}};
    o.summary = std::string("cubic ") + (dec ? "is" : "is not") + " a product of linear forms";
  } else if (test == "hessian") {
    const Form h = hessian_cubic(f);
    o.result = {{"hessian", form_json(h)}};
    o.summary = "Hessian: " + h.poly().to_string({"x", "y", "z"});
  } else if (test == "d2rank") {
    const auto rank = d2_rank(d2_coordinates(f));
    o.result = {{"rank", rank}};
    o.summary = "rank d2 = " + std::to_string(rank);
  } else {
    fail(Errc::ParseError, "unknown cubic test '" + test + "'");
  }
  return o;
}

Outcome cmd_recover(int d, int n, const std::string& v1_text, const std::string& input) {
  Outcome o;
  o.parameters = {{"d", d}, {"n", n}, {"v1", v1_text}, {"input", input}};
  const auto v1 = parse_rational_list(v1_text);
  const auto forms = recover_coordinates(d, n, v1, form_from_json(read_file(input)));
  json out = json::array();
  std::string line;
  for (const auto& l : forms) {
    json row = json::array();
    Poly p(n + 1);
    for (std::size_t j = 0; j < l.size(); ++j) {
      row.push_back(to_string(l[j]));
      p += Poly::variable(n + 1, static_cast<int>(j)) * l[j];
    }
    out.push_back(row);
    line += "(" + p.to_string() + ")";
  }
  o.result = {{"forms", out}, {"round_trip", true}};
  o.summary = "F = " + line;
  return o;
}

// ---------------------------------------------------------------- tor

struct TorArgs {
  int vars = 2, i = 1, d = 2, nmin = 1, nmax = 8;
  std::vector<std::string> relations;
};

Outcome cmd_tor(const TorArgs& a, const Globals& g) {
  Outcome o;
  o.parameters = {{"vars", a.vars}, {"i", a.i}, {"d", a.d}, {"nmin", a.nmin}, {"nmax", a.nmax}, {"seed", g.seed}};
  GradedRingSpec ring{a.vars, {}};
  json rels = json::array();
  for (const auto& path : a.relations) {
    const Form f = form_from_json(read_file(path));
    ring.relations.push_back(f.poly());
    rels.push_back(form_json(f));
  }
  o.parameters["relations"] = rels;
  TorTable table;
  table.i = a.i;
  table.d = a.d;
  json rows = json::array();
  bool euler = true;
  bool exact = true;
  for (int n = a.nmin; n <= a.nmax; ++n) {
    const auto h = koszul_tor(ring, n, a.i, a.d, g.seed);
    table.dims[n] = h.dim;
    exact = exact && h.exact;
    const bool e = euler_characteristic_check(ring, n, a.d, g.seed);
    euler = euler && e;
    rows.push_back({{"n", n}, {"dim", h.dim}, {"rank_method", h.exact ? "exact" : "modular"}, {"euler", e}});
  }
  o.result = {{"table", rows}, {"euler_characteristic", euler}, {"composition_zero", true}};
  if (!euler) o.status = "fail";
  if (static_cast<int>(table.dims.size()) >= (a.vars - 1) * a.d + 3) {
    try {
      const auto fit = polynomial_growth_check(ring, table);
      json coeffs = json::array();
      for (const auto& c : fit.coefficients) coeffs.push_back(to_string(c));
      o.result["fit"] = {{"polynomial", fit.polynomial}, {"degree", fit.degree}, {"bound", fit.bound},
                         {"bound_ok", fit.bound_ok}, {"onset", fit.onset}, {"coefficients", coeffs}};
      if (!fit.bound_ok) o.status = "fail";
      o.summary = "Tor_" + std::to_string(a.i) + " degree " + std::to_string(a.d) + ": " + fit.polynomial +
                  " for n >= " + std::to_string(fit.onset);
    } catch (const Error& e) {
      if (e.code() != Errc::NoStabilization) throw;
      o.result["fit"] = {{"error", e.what()}};
      o.status = "fail";
      o.summary = e.what();
    }
  } else {
    o.result["fit"] = nullptr;
    o.summary = "Tor_" + std::to_string(a.i) + " degree " + std::to_string(a.d) + " computed for " +
                std::to_string(table.dims.size()) + " values of n";
  }
  if (!exact && o.status == "pass") o.status = "modular-only";
  o.table = to_tsv(table);
  return o;
}

// ---------------------------------------------------------------- verify-all

Outcome cmd_verify_all(const std::string& level, const Globals& g, std::ostream& err) {
  Outcome o;
  o.parameters = {{"level", level}, {"seed", g.seed}};
  if (level != "quick" && level != "full") fail(Errc::ParseError, "level must be quick or full");
  json items = json::array();
  int passed = 0, total = 0;
  for (int id : criterion_ids()) {
    if (level == "quick" && criterion_level(id) != Level::Quick) continue;
    const auto r = run_criterion(id, g.seed);
    ++total;
    passed += r.passed ? 1 : 0;
    items.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                     {"level", r.level == Level::Quick ? "quick" : "full"}});
    err << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << "\n";
  }
  o.result = {{"criteria", items}, {"passed", passed}, {"total", total}};
  if (passed != total) o.status = "fail";
  o.summary = std::to_string(passed) + "/" + std::to_string(total) + " criteria passed";
  return o;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::TooLarge:
      return kTooLarge;
    case Errc::BadRange:
    case Errc::BadShape:
    case Errc::BadDegree:
    case Errc::ParseError:
    case Errc::NonPrime:
    case Errc::NotStandard:
    case Errc::NotHomogeneous:
      return kUsage;
    default:
      return kFail;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chowlab: computations on Chow varieties, plethysms and covariants"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--json", g.json_path, "Also write the JSON report to this file");
  app.add_option("--seed", g.seed, "Seed for random primes and samples");
  app.add_option("--prime", g.prime, "Prime for modular kernels");
  app.add_option("--order", g.order, "Truncation order of series")->check(CLI::NonNegativeNumber);
  app.add_option("--dump-matrix,--dump", g.dump_path, "Write the matrix in text form");
  app.add_flag("--table", g.table, "Print the TSV table instead of the JSON report");

  FhArgs fh;
  auto* sub_fh = app.add_subcommand("fh", "Foulkes-Howe map: ranks, kernels, cokernels");
  sub_fh->add_option("--d", fh.d, "Form degree")->required();
  sub_fh->add_option("--n", fh.n, "Projective dimension")->required();
  sub_fh->add_option("--m", fh.m, "Equation degree")->required();
  sub_fh->add_flag("--kernel", fh.kernel, "List rational kernel generators");

  PlethysmArgs pl;
  auto* sub_pl = app.add_subcommand("plethysm", "Schur decomposition of Sym^m(Sym^d C^k)");
  sub_pl->add_option("--m", pl.m, "Outer degree")->required();
  sub_pl->add_option("--d", pl.d, "Inner degree")->required();
  sub_pl->add_option("--k", pl.k, "Number of variables");
  sub_pl->add_flag("--wedge", pl.wedge, "Use the exterior power outside");

  int fm = 0, fd = 0;
  auto* sub_fo = app.add_subcommand("foulkes", "Compare Sym^m(Sym^d) with Sym^d(Sym^m)");
  sub_fo->add_option("--m", fm)->required();
  sub_fo->add_option("--d", fd)->required();

  int ha = 1, hb = 1, hmax = 0;
  auto* sub_he = app.add_subcommand("hermite", "Hermite reciprocity for SL_2");
  sub_he->add_option("--a", ha);
  sub_he->add_option("--b", hb);
  sub_he->add_option("--max", hmax, "Check all 1 <= a, b <= max");

  int hd = -1;
  std::string hl;
  auto* sub_hi = app.add_subcommand("hilbert", "Equivariant Hilbert series and generator tables");
  auto* opt_hd = sub_hi->add_option("--d", hd, "Degree");
  auto* opt_hl = sub_hi->add_option("--lambda", hl, "Partition, e.g. 2,1");
  opt_hd->excludes(opt_hl);
  sub_hi->require_option(1);

  std::string ctest, cinput;
  auto* sub_cu = app.add_subcommand("cubic", "Ternary cubic tests");
  sub_cu->add_option("--test", ctest)->required()->check(CLI::IsMember({"aronhold", "hessian", "d2rank", "complex"}));
  sub_cu->add_option("--input", cinput, "Form JSON file");

  int rd = 0, rn = 0;
  std::string rv1, rinput;
  auto* sub_re = app.add_subcommand("recover", "Recover linear factors from a product");
  sub_re->add_option("--d", rd)->required();
  sub_re->add_option("--n", rn)->required();
  sub_re->add_option("--v1", rv1, "Comma-separated x_1 coefficients")->required();
  sub_re->add_option("--input", rinput, "Form JSON file")->required();

  TorArgs ta;
  auto* sub_to = app.add_subcommand("tor", "Koszul homology of Veronese subrings");
  sub_to->add_option("--vars", ta.vars)->required();
  sub_to->add_option("--i", ta.i)->required();
  sub_to->add_option("--d", ta.d)->required();
  sub_to->add_option("--nmax", ta.nmax)->required();
  sub_to->add_option("--nmin", ta.nmin);
  sub_to->add_option("--relation", ta.relations, "Form JSON file of a relation");

  std::string level = "quick";
  auto* sub_ve = app.add_subcommand("verify-all", "Run the acceptance checks");
  sub_ve->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'chowlab --help' for usage\n";
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  int code = kPass;
  json error = nullptr;
  try {
    const std::string name = sub->get_name();
    if (name == "fh") o = cmd_fh(fh, g);
    else if (name == "plethysm") o = cmd_plethysm(pl, g);
    else if (name == "foulkes") o = cmd_foulkes(fm, fd);
    else if (name == "hermite") o = cmd_hermite(ha, hb, hmax);
    else if (name == "hilbert") o = cmd_hilbert(hd, hl, g);
    else if (name == "cubic") o = cmd_cubic(ctest, cinput, g);
    else if (name == "recover") o = cmd_recover(rd, rn, rv1, rinput);
    else if (name == "tor") o = cmd_tor(ta, g);
    else o = cmd_verify_all(level, g, err);
    code = o.status == "pass" ? kPass : kFail;
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    o.status = "fail";
    o.summary = e.what();
    error = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json report = {{"command", sub->get_name()}, {"parameters", o.parameters}, {"result", o.result},
                 {"status", o.status},         {"wall_time", seconds}};
  if (!error.is_null()) report["error"] = error;
  if (g.table && !o.table.empty() && error.is_null())
    out << o.table;
  else
    out << report.dump(2) << "\n";
  if (!g.json_path.empty()) {
    std::ofstream file(g.json_path);
    if (!file) {
      err << "cannot write " << g.json_path << "\n";
      return kUsage;
    }
    file << report.dump(2) << "\n";
  }
  err << sub->get_name() << ": " << o.summary << " [" << o.status << "]\n";
  return code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace chowlab::cli
