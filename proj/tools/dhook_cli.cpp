#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dhook/acceptance.hpp"
#include "dhook/dhook.hpp"

namespace {

using namespace dhook;

constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = ",") {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

LinearExtension resolve_order(const DPoset& dp, const std::string& spec) {
  if (spec == "stable") return stable_insertion_order(dp);
  if (spec.rfind("given:", 0) == 0) return io::read_order(spec.substr(6));
  throw ParseError("--order must be 'stable' or 'given:<file>'");
}

int cmd_check(const std::string& path) {
  Poset p = io::read_poset(path);
  auto report = check_d_complete(p);
  std::cout << "elements=" << p.size() << "\n";
  std::cout << "d_intervals=" << find_d_intervals(p).size() << "\n";
  for (const auto& v : report.violations) {
    std::vector<std::string> w;
    for (Element e : v.witness) w.push_back(p.label(e));
    std::cout << "violation axiom=" << v.axiom << " witness=" << join(w, ",") << " detail=" << v.detail << "\n";
  }
  std::cout << "d_complete=" << (report.is_d_complete ? "true" : "false") << "\n";
  return report.is_d_complete ? 0 : kVerifyFailed;
}

int cmd_diagonals(const std::string& path) {
  auto dp = DPoset::analyze(io::read_poset(path));
  const auto& part = dp.diagonals();
  std::cout << "diagonals=" << part.count() << "\n";
  for (DiagonalId d = 0; d < part.count(); ++d) {
    std::vector<std::string> names;
    for (Element e : part.classes[d]) names.push_back(dp.poset().label(e));
    std::cout << "diagonal " << d << " members=" << join(names, ",") << "\n";
  }
  for (auto [c, d] : part.adjacent_pairs()) std::cout << "adjacent " << c << " " << d << "\n";
  return 0;
}

int cmd_hooks(const std::string& path) {
  auto dp = DPoset::analyze(io::read_poset(path));
  BigInt product = 1;
  for (Element e = 0; e < dp.size(); ++e) {
    std::cout << "hook " << dp.poset().label(e) << " vector=" << join_numbers(dp.hook(e).entries)
              << " length=" << dp.hook_length(e) << "\n";
    product *= BigInt(static_cast<long>(dp.hook_length(e)));
  }
  std::cout << "hook_product=" << product.get_str() << "\n";
  return 0;
}

int cmd_rsk(const std::string& poset_path, const std::string& filling_path, const std::string& order_spec,
            bool inverse) {
  auto dp = DPoset::analyze(io::read_poset(poset_path));
  Filling in = io::read_filling(filling_path, dp.size());
  auto order = resolve_order(dp, order_spec);
  std::cout << io::write_filling(inverse ? inverse_rsk(dp, in, order) : rsk(dp, in, order));
  return 0;
}

int cmd_extensions(const std::string& path, std::uint64_t cap, bool list) {
  Poset p = io::read_poset(path);
  BigInt count = count_linear_extensions(p, cap);
  std::cout << "count=" << count.get_str() << "\n";
  if (list)
    for (const auto& t : enumerate_linear_extensions(p, cap)) {
      std::vector<std::string> names;
      for (Element e : t) names.push_back(p.label(e));
      std::cout << "extension " << join(names, " ") << "\n";
    }
  return 0;
}

int cmd_verify_proctor(const std::string& path, std::uint64_t cap) {
  auto dp = DPoset::analyze(io::read_poset(path));
  auto r = verify_proctor(dp, cap);
  std::cout << "extensions=" << r.extensions.get_str() << " hook_product=" << r.hook_product.get_str()
            << " factorial=" << r.factorial.get_str() << " ok=" << (r.ok ? "true" : "false") << "\n";
  return r.ok ? 0 : kVerifyFailed;
}

int cmd_verify_hlf(const std::string& path, std::size_t points, std::uint64_t seed, std::uint64_t cap) {
  auto dp = DPoset::analyze(io::read_poset(path));
  auto r = verify_multivariate(dp, points, seed, cap);
  std::cout << "points=" << r.points << " extensions=" << r.extensions.get_str() << " seed=" << seed
            << " ok=" << (r.ok() ? "true" : "false") << "\n";
  for (const auto& f : r.failures) std::cout << "failure " << f << "\n";
  return r.ok() ? 0 : kVerifyFailed;
}

int cmd_volume(const std::string& path, const std::string& kind, std::uint64_t samples, std::uint64_t seed,
               std::uint64_t cap) {
  auto dp = DPoset::analyze(io::read_poset(path));
  PolytopeSpec spec{kind == "rpp" ? PolytopeKind::rpp : PolytopeKind::fillings,
                    RationalPoint::ones(dp.diagonals().count())};
  Rational exact = polytope_volume(dp, spec, cap);
  std::cout << "kind=" << kind << " exact=" << format_rational(exact) << "\n";
  if (samples == 0) return 0;
  auto est = monte_carlo_volume(dp, spec, samples, seed);
  double z = est.standard_error > 0 ? std::abs(est.estimate - exact.get_d()) / est.standard_error : 0.0;
  std::cout << "samples=" << est.samples << " hits=" << est.hits << " estimate=" << format_double(est.estimate)
            << " standard_error=" << format_double(est.standard_error) << " z=" << format_double(z) << "\n";
  return z <= 4.0 ? 0 : kVerifyFailed;
}

std::string tableau_rows(const classical::SSYT& t) {
  std::vector<std::string> rows;
  for (const auto& r : t.rows) rows.push_back(join_numbers(r));
  return join(rows, "/");
}

template <class Rows>
std::string matrix_rows(const Rows& m) {
  std::vector<std::string> rows;
  for (const auto& r : m) rows.push_back(join_numbers(r));
  return join(rows, "/");
}

int cmd_classical(const std::string& path) {
  auto m = io::read_matrix(path);
  auto [p, q] = classical::classical_insert_rsk(m);
  auto rpp = classical::toggle_rpp(m);
  std::cout << "P=" << tableau_rows(p) << "\n";
  std::cout << "Q=" << tableau_rows(q) << "\n";
  std::cout << "rpp=" << matrix_rows(rpp.rows) << "\n";
  if (!m.is_square()) return 0;
  auto [lower, upper] = classical::gt_from_rpp(rpp);
  bool ok = classical::ssyt_from_gt(lower) == p && classical::ssyt_from_gt(upper) == q;
  std::cout << "gt_lower=" << matrix_rows(lower.rows) << "\n";
  std::cout << "gt_upper=" << matrix_rows(upper.rows) << "\n";
  std::cout << "agree=" << (ok ? "true" : "false") << "\n";
  return ok ? 0 : kVerifyFailed;
}

int cmd_suite(std::uint64_t seed) {
  acceptance::Options opt;
  opt.seed = seed;
  bool all = true;
  acceptance::run_all(opt, [&](const acceptance::CriterionResult& r) {
    all = all && r.ok;
    std::cout << "criterion=" << r.id << " name=" << r.name << " result=" << (r.ok ? "pass" : "fail")
              << " detail=" << r.detail << "\n"
              << std::flush;
  });
  std::cout << "suite=" << (all ? "pass" : "fail") << "\n";
  return all ? 0 : kVerifyFailed;
}

int cmd_gen(const std::string& name, const std::string& out, bool list) {
  if (list) {
    for (const auto& e : catalog()) std::cout << e.name << "\n";
    return 0;
  }
  auto p = catalog_poset(name);
  if (!p) throw ParseError("unknown catalog poset '" + name + "' (try gen --list)");
  if (out.empty())
    std::cout << io::write_poset(*p);
  else
    io::save_poset(out, *p);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-complete posets: hooks, generalized RSK and hook length formulas"};
  app.require_subcommand(1);

  std::string poset_path, filling_path, matrix_path, order_spec = "stable", kind = "fillings", name, out;
  std::uint64_t cap = 1'000'000, seed = 1, samples = 100'000;
  std::size_t points = 20;
  bool list = false;

  auto* check = app.add_subcommand("check", "Exit 0 iff the poset is d-complete");
  check->add_option("poset", poset_path)->required();
  auto* diagonals = app.add_subcommand("diagonals", "Diagonals and their adjacency");
  diagonals->add_option("poset", poset_path)->required();
  auto* hooks = app.add_subcommand("hooks", "Hook vectors and hook lengths");
  hooks->add_option("poset", poset_path)->required();
  auto* rsk_cmd = app.add_subcommand("rsk", "Apply the generalized RSK to a filling");
  auto* inv_cmd = app.add_subcommand("inverse-rsk", "Invert the generalized RSK");
  for (auto* c : {rsk_cmd, inv_cmd}) {
    c->add_option("poset", poset_path)->required();
    c->add_option("filling", filling_path)->required();
    c->add_option("--order", order_spec, "stable | given:<file>");
  }
  auto* ext = app.add_subcommand("extensions", "Count (and optionally list) linear extensions");
  ext->add_option("poset", poset_path)->required();
  ext->add_flag("--list", list);
  auto* proctor = app.add_subcommand("verify-proctor", "Check count * hook product == n!");
  proctor->add_option("poset", poset_path)->required();
  auto* hlf = app.add_subcommand("verify-hlf", "Check the multivariate hook length formula");
  hlf->add_option("poset", poset_path)->required();
  hlf->add_option("--points", points);
  auto* vol = app.add_subcommand("volume", "Exact and Monte Carlo polytope volume at x = 1");
  vol->add_option("poset", poset_path)->required();
  vol->add_option("--kind", kind)->check(CLI::IsMember({"fillings", "rpp"}));
  vol->add_option("--samples", samples);
  auto* cls = app.add_subcommand("classical-rsk", "Insertion RSK and toggle RSK on a matrix");
  cls->add_option("matrix", matrix_path)->required();
  auto* suite = app.add_subcommand("suite", "Run the acceptance battery over the catalog");
  auto* gen = app.add_subcommand("gen", "Write a catalog poset");
  gen->add_option("name", name);
  gen->add_option("-o,--output", out);
  gen->add_flag("--list", list);
  for (auto* c : {ext, proctor, hlf, vol}) c->add_option("--cap", cap, "enumeration limit");
  for (auto* c : {hlf, vol, suite}) c->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*check) return cmd_check(poset_path);
    if (*diagonals) return cmd_diagonals(poset_path);
    if (*hooks) return cmd_hooks(poset_path);
    if (*rsk_cmd) return cmd_rsk(poset_path, filling_path, order_spec, false);
    if (*inv_cmd) return cmd_rsk(poset_path, filling_path, order_spec, true);
    if (*ext) return cmd_extensions(poset_path, cap, list);
    if (*proctor) return cmd_verify_proctor(poset_path, cap);
    if (*hlf) return cmd_verify_hlf(poset_path, points, seed, cap);
    if (*vol) return cmd_volume(poset_path, kind, samples, seed, cap);
    if (*cls) return cmd_classical(matrix_path);
    if (*suite) return cmd_suite(seed);
    if (*gen) {
      if (!list && name.empty()) throw ParseError("gen needs a catalog name or --list");
      return cmd_gen(name, out, list);
    }
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kBadInput;
  }
  return kBadInput;
}
