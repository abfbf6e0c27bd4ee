// gfdom: generate, check, sweep and verify generalised Fishburn domains.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gfd/analysis.hpp"
#include "gfd/cardinality.hpp"
#include "gfd/necklace.hpp"
#include "gfd/never.hpp"
#include "gfd/orders.hpp"
#include "gfd/single_crossing.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;  // property/theorem failure
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty()) {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

struct GenerateOpts {
  int n = 0;
  std::string k;
  std::string method = "both";
  std::string format = "json";
  std::string out;
  bool print_necklace = false;
  bool print_scheme = false;
};

int run_generate(const GenerateOpts& opt) {
  gfd::KSubset k = gfd::KSubset::parse(opt.n, opt.k);
  std::optional<gfd::Domain> from_scheme, from_necklace;
  if (opt.method == "scheme" || opt.method == "both")
    from_scheme = gfd::domain_of_scheme(gfd::gf_scheme(opt.n, k));
  if (opt.method == "necklace" || opt.method == "both")
    from_necklace = gfd::flags_to_domain(gfd::gf_necklace(opt.n, k));
  if (from_scheme && from_necklace && !(*from_scheme == *from_necklace)) {
    std::cerr << "construction mismatch: scheme and necklace domains differ\n";
    return kExitFailure;
  }
  const gfd::Domain& d = from_scheme ? *from_scheme : *from_necklace;
  std::string body =
      opt.format == "json" ? d.to_json() + "\n" : d.to_text();
  if (opt.print_necklace)
    body = gfd::gf_necklace(opt.n, k).to_text() + "\n" + body;
  if (opt.print_scheme)
    body = gfd::gf_scheme(opt.n, k).to_text() + body;
  write_output(opt.out, body);
  return kExitPass;
}

struct CheckOpts {
  std::string in;
  std::string format = "json";
  std::string out;
  std::vector<std::string> properties;
};

int run_check(const CheckOpts& opt) {
  gfd::Domain d = gfd::Domain::parse(read_input(opt.in));
  gfd::PropertyReport r = gfd::full_report(d);
  std::string body;
  if (opt.format == "json") {
    body = r.to_json() + "\n";
  } else {
    std::ostringstream text;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    text << "condorcet=" << flag(r.condorcet) << '\n'
         << "copious=" << flag(r.copious) << '\n'
         << "maximal=" << flag(r.maximal) << '\n'
         << "maximal_width=" << flag(r.maximal_width) << '\n'
         << "semi_connected=" << flag(r.semi_connected) << '\n'
         << "directly_connected=" << flag(r.directly_connected) << '\n'
         << "spoc=" << flag(r.spoc.found);
    if (r.spoc.found) text << " arrangement=" << r.spoc.arrangement->str();
    text << '\n';
    body = text.str();
  }
  write_output(opt.out, body);
  bool requested_ok = true;
  auto wanted = [&](const std::string& name) {
    return opt.properties.empty() ||
           std::find(opt.properties.begin(), opt.properties.end(), name) !=
               opt.properties.end();
  };
  if (wanted("condorcet") && !r.condorcet) requested_ok = false;
  if (wanted("copious") && !r.copious) requested_ok = false;
  if (wanted("maximal") && !r.maximal) requested_ok = false;
  if (wanted("maximal_width") && !r.maximal_width) requested_ok = false;
  if (wanted("semi_connected") && !r.semi_connected) requested_ok = false;
  if (wanted("directly_connected") && !r.directly_connected) requested_ok = false;
  if (wanted("spoc") && !r.spoc.found) requested_ok = false;
  return requested_ok ? kExitPass : kExitFailure;
}

struct SweepOpts {
  int n = 0;
  bool size_only = false;
  int parallelism = 1;
  std::string out;
};

int run_sweep(const SweepOpts& opt) {
  auto rows = gfd::census(opt.n, !opt.size_only, opt.parallelism);
  auto summary = gfd::extremality_report(rows);
  write_output(opt.out, gfd::census_csv(rows, summary));
  return kExitPass;
}

struct VerifyOpts {
  int n = 0;
  bool thm7 = false;
  int parallelism = 1;
};

bool report_line(const std::string& name, bool ok) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
  return ok;
}

int run_verify(const VerifyOpts& opt) {
  bool all_ok = true;
  if (opt.thm7) {
    all_ok &= report_line(
        "single-crossing maximal chains are not single-peaked on a circle (n=" +
            std::to_string(opt.n) + ")",
        gfd::verify_thm7(opt.n));
    return all_ok ? kExitPass : kExitFailure;
  }
  if (opt.n < 3 || opt.n > 7)
    throw CLI::ValidationError("--n", "verification suite runs for 3 <= n <= 7");
  const int n = opt.n;
  auto interior = gfd::KSubset::full_set(n).mask();
  bool equal_ok = true, copious_ok = true, maximal_ok = true;
  bool width_ok = true, connected_ok = true, spoc_ok = true;
  for (gfd::AltSet mask = 0;; mask = (mask - interior) & interior) {
    gfd::KSubset k(n, mask);
    gfd::Domain scheme_dom = gfd::domain_of_scheme(gfd::gf_scheme(n, k));
    gfd::Necklace neck = gfd::gf_necklace(n, k);
    gfd::Domain neck_dom = gfd::flags_to_domain(neck);
    equal_ok &= scheme_dom == neck_dom;
    copious_ok &= gfd::is_copious(scheme_dom);
    maximal_ok &= gfd::is_maximal_condorcet(scheme_dom);
    width_ok &= gfd::has_maximal_width(scheme_dom);
    connected_ok &= gfd::is_directly_connected(scheme_dom);
    spoc_ok &= gfd::is_spoc_on(scheme_dom, gfd::CircularArrangement(neck.circle()));
    spoc_ok &= gfd::find_spoc_arrangement(scheme_dom).found;
    if (mask == interior) break;
  }
  all_ok &= report_line("necklace and scheme constructions agree for every K",
                        equal_ok);
  all_ok &= report_line("every F_K is copious", copious_ok);
  all_ok &= report_line("every F_K is a maximal Condorcet domain", maximal_ok);
  all_ok &= report_line("every F_K has maximal width", width_ok);
  all_ok &= report_line("every F_K is directly connected", connected_ok);
  all_ok &= report_line("every F_K is single-peaked on a circle", spoc_ok);
  all_ok &= report_line(
      "full-K construction equals the classical single-peaked domain",
      gfd::flags_to_domain(gfd::gf_necklace(n, gfd::KSubset::full_set(n))) ==
          gfd::classical_single_peaked(n));
  all_ok &= report_line(
      "alternating-scheme cardinality formula matches enumeration",
      gfd::fishburn_formula(n) ==
          static_cast<std::int64_t>(
              gfd::domain_of_scheme(gfd::gf_scheme(n, gfd::KSubset::fishburn(n)))
                  .size()));
  return all_ok ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised Fishburn Condorcet domains: construction and "
               "property certification"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* generate = app.add_subcommand(
      "generate", "Construct F_K from a never-condition scheme and/or necklace");
  generate->add_option("--n", gen.n, "number of alternatives")->required();
  generate->add_option("--k", gen.k,
                       "K as comma-separated members of [2,n-1]; '' for empty");
  generate->add_option("--method", gen.method, "scheme|necklace|both")
      ->check(CLI::IsMember({"scheme", "necklace", "both"}));
  generate->add_option("--format", gen.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  generate->add_option("--out", gen.out, "output path (default stdout)");
  generate->add_flag("--print-necklace", gen.print_necklace,
                     "prepend the GF-necklace in text form");
  generate->add_flag("--print-scheme", gen.print_scheme,
                     "prepend the never-condition scheme");

  CheckOpts chk;
  auto* check = app.add_subcommand(
      "check", "Report properties of a domain read from stdin or --in");
  check->add_option("--in", chk.in, "input path (default stdin)");
  check->add_option("--format", chk.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  check->add_option("--out", chk.out, "output path (default stdout)");
  check->add_option("--properties", chk.properties,
                    "flags that must hold for exit code 0");

  SweepOpts swp;
  auto* sweep =
      app.add_subcommand("sweep", "Census of |F_K| over all K, CSV output");
  sweep->add_option("--n", swp.n, "number of alternatives")->required();
  sweep->add_flag("--size-only", swp.size_only,
                  "skip property flags (allows n = 8)");
  sweep->add_option("--parallelism", swp.parallelism, "worker count");
  sweep->add_option("--out", swp.out, "output path (default stdout)");

  VerifyOpts ver;
  auto* verify =
      app.add_subcommand("verify", "Run the theorem verification suite");
  verify->add_option("--n", ver.n, "number of alternatives")->required();
  verify->add_flag("--thm7", ver.thm7,
                   "check non-SPOC of single-crossing maximal chains (n in {4,5})");
  verify->add_option("--parallelism", ver.parallelism, "worker count");

  try {
    app.parse(argc, argv);
    if (generate->parsed()) return run_generate(gen);
    if (check->parsed()) return run_check(chk);
    if (sweep->parsed()) return run_sweep(swp);
    if (verify->parsed()) return run_verify(ver);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
