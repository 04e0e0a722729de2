// lpq: Alexander polynomials of the links L_{p,q}, the SW invariants of the
// manifolds E(L_{p,q}) and a one-shot check of the closed-form identities.
//
// Exit codes: 0 ok, 1 a verification failed, 2 invalid input.

#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpq/alexander.hpp"
#include "lpq/braid.hpp"
#include "lpq/swtheory.hpp"
#include "lpq/verification.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

ordered_json poly_json(const lpq::MultiLaurent& p) {
  ordered_json j = ordered_json::parse(lpq::to_json(p).dump());
  j["text"] = p.to_string();
  return j;
}

void print_matrix(const lpq::LinkingMatrix& m) {
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "  ") << row[j];
    std::cout << '\n';
  }
}

int cmd_alexander(const std::string& text, std::optional<int> strands) {
  lpq::BraidWord b = lpq::BraidWord::parse(text, strands);
  ordered_json j;
  j["braid"] = b.to_string();
  j["strands"] = b.strands();
  j["components"] = lpq::closure_components(b).count;
  j["alexander"] = poly_json(lpq::multivariable_alexander(b));
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_family(int p, int q, bool axis, bool json) {
  if (p < 0 || q < 1) throw std::invalid_argument("family requires p >= 0 and q >= 1");
  lpq::LinkFamilySpec spec{p, q};
  lpq::BraidWord b = axis ? lpq::family_braid(spec) : lpq::axis_free_braid(spec);
  lpq::AlexanderCache cache;
  const lpq::MultiLaurent& delta = axis ? cache.family(spec) : cache.axis_free(spec);
  lpq::LinkingMatrix lk = lpq::linking_matrix(b);
  if (json) {
    ordered_json j;
    j["p"] = p;
    j["q"] = q;
    j["axis"] = axis;
    j["braid"] = b.to_string();
    j["strands"] = b.strands();
    j["alexander"] = poly_json(delta);
    j["linking_matrix"] = lk;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (axis ? "L" : "R") << " p=" << p << " q=" << q << " (" << b.strands() << " strands)\n"
              << "braid: " << b.to_string() << '\n'
              << "alexander (" << delta.term_count() << " terms): " << delta.to_string() << '\n'
              << "linking matrix:\n";
    print_matrix(lk);
  }
  return kOk;
}

int cmd_sw(int n, int p, int q, bool polys) {
  lpq::SurgerySpec spec{n, {p, q}};
  lpq::validate(spec);
  lpq::AlexanderCache cache;
  lpq::InvariantReport r = lpq::invariant_report(spec, cache);
  std::cout << lpq::to_json(r, polys).dump(2) << '\n';
  bool ok = true;
  for (const auto& [name, passed] : r.checks) ok = ok && passed;
  return ok ? kOk : kFailed;
}

int cmd_verify(int pmax, int qmax, std::uint64_t seed, bool json) {
  if (pmax < 1 || qmax < 1) throw std::invalid_argument("--pmax and --qmax must be >= 1");
  lpq::VerificationOptions opts;
  opts.pmax = pmax;
  opts.qmax = qmax;
  opts.seed = seed;
  lpq::VerificationReport report = lpq::run_verification(opts);
  if (json)
    std::cout << lpq::to_json(report).dump(2) << '\n';
  else
    std::cout << lpq::format_table(report);
  return report.passed() ? kOk : kFailed;
}

int cmd_table(int n, int q, int pmin, int pmax, bool json) {
  if (pmin < 0 || pmax < pmin) throw std::invalid_argument("table requires 0 <= pmin <= pmax");
  lpq::AlexanderCache cache;
  std::vector<std::future<lpq::InvariantReport>> rows;
  for (int p = pmin; p <= pmax; ++p) {
    lpq::SurgerySpec spec{n, {p, q}};
    lpq::validate(spec);
    rows.push_back(std::async(std::launch::async, [spec, &cache] { return lpq::invariant_report(spec, cache); }));
  }
  ordered_json all = ordered_json::array();
  bool ok = true;
  auto cell = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  if (!json) std::cout << "n=" << n << " q=" << q << "\n  p   beta    d  tau  rho  tau~  checks\n";
  for (auto& f : rows) {
    lpq::InvariantReport r = f.get();
    bool row_ok = true;
    for (const auto& [name, passed] : r.checks) row_ok = row_ok && passed;
    ok = ok && row_ok;
    if (json) {
      all.push_back(lpq::to_json(r));
      continue;
    }
    std::printf("%3d %6zu %4s %4s %4s %5s  %s\n", r.spec.family.p, r.beta, cell(r.d).c_str(),
                cell(r.tau).c_str(), cell(r.rho).c_str(), cell(r.tau_tilde).c_str(), row_ok ? "ok" : "FAIL");
    if (!row_ok)
      for (const auto& [name, passed] : r.checks)
        if (!passed) std::printf("      failed: %s\n", name.c_str());
  }
  if (json) std::cout << all.dump(2) << '\n';
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials of L_{p,q} and SW invariants of E(L_{p,q})"};
  app.require_subcommand(1);

  std::string braid;
  std::optional<int> strands;
  auto* alex = app.add_subcommand("alexander", "multivariable Alexander polynomial of a closed braid");
  alex->add_option("braid", braid, "whitespace separated generators, e.g. \"1 -2 1\"")->required();
  alex->add_option("-s,--strands", strands, "strand count (default max|k| + 1)");

  int p = 1, q = 1, n = 3;
  bool axis = true, json = false;
  auto* fam = app.add_subcommand("family", "Alexander polynomial and linking matrix of L_{p,q}");
  fam->add_option("p", p)->required();
  fam->add_option("q", q)->required();
  fam->add_flag("--axis,!--no-axis", axis, "include the braid axis (default) or drop it to get R_p");
  fam->add_flag("--json", json);

  bool polys = false;
  auto* sw = app.add_subcommand("sw", "invariant report of E(L_{p,q}) built from E(n)");
  sw->add_option("n", n)->required();
  sw->add_option("p", p)->required();
  sw->add_option("q", q)->required();
  sw->add_flag("--polynomials", polys, "include Delta, SW and the reduced polynomial");

  int pmax = 4, qmax = 3, pmin = 0;
  std::uint64_t seed = lpq::VerificationOptions{}.seed;
  auto* verify = app.add_subcommand("verify-paper", "run every identity check and print a table");
  verify->add_option("--pmax", pmax)->capture_default_str();
  verify->add_option("--qmax", qmax)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_flag("--json", json);

  auto* table = app.add_subcommand("table", "invariants of E(L_{p,q}) for a range of p");
  table->add_option("-n,--n", n)->capture_default_str();
  table->add_option("-q,--q", q)->capture_default_str();
  table->add_option("--pmin", pmin)->capture_default_str();
  table->add_option("--pmax", pmax)->capture_default_str();
  table->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*alex) return cmd_alexander(braid, strands);
    if (*fam) return cmd_family(p, q, axis, json);
    if (*sw) return cmd_sw(n, p, q, polys);
    if (*verify) return cmd_verify(pmax, qmax, seed, json);
    if (*table) return cmd_table(n, q, pmin, pmax, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kInvalid;
}
