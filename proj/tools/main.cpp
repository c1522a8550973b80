#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hcob/commands.hpp"
#include "hcob/errors.hpp"

namespace {

std::vector<int> parse_simplex(const std::string& s) {
  std::vector<int> out;
  std::string item;
  for (char c : s + ",") {
    if (c != ',') {
      item += c;
      continue;
    }
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw hcob::InputError("simplex must be comma-separated integers, got '" + s + "'");
    }
    item.clear();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology cobordism toolkit: simplicial, Pin(2) and involutive invariants"};
  app.require_subcommand(1);

  hcob::CommandArgs args;
  std::vector<std::string> simplices;
  std::string window, seifert;

  const std::map<std::string, std::string> help = {
      {"link", "link of --simplex"},
      {"star", "star of --simplex"},
      {"closure", "closure of the given simplices"},
      {"homology", "simplicial homology (--ring Z|F2, --reduced)"},
      {"sq1", "rank of the Bockstein Sq1 on mod 2 cohomology"},
      {"pi1", "edge-path group and its order by coset enumeration"},
      {"scan-links", "sphere test on the link of every simplex"},
      {"abc", "alpha, beta, gamma of a Pin(2) model"},
      {"dual", "orientation reversal by formula and by the dual complex"},
      {"tate", "localization check of a Pin(2) model"},
      {"delta", "delta of an S1 model"},
      {"hfi", "d, d_bar, d_under of a U-complex with iota"},
      {"v0", "V0, V0_bar, V0_under for p-surgery"},
      {"knot", "Seifert matrix invariants"},
      {"fixtures", "list bundled fixtures"}};

  for (const auto& name : hcob::command_names()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->callback([&args, name] { args.command = name; });
    if (name == "fixtures") continue;
    sub->add_option("input", args.input, "JSON file or fixtures:<name>");
    sub->add_flag("--json", args.json, "emit the report as JSON");
    if (name == "link" || name == "star" || name == "closure")
      sub->add_option("--simplex", simplices, "simplex as comma-separated vertices")->required();
    if (name == "homology") {
      sub->add_option("--ring", args.ring, "Z or F2");
      sub->add_flag("--reduced", args.reduced, "reduced homology");
    }
    if (name == "pi1" || name == "scan-links") sub->add_option("--limit", args.limit, "coset enumeration cap");
    if (name == "pi1") {
      sub->add_option("--basepoint", args.basepoint, "base vertex");
      sub->add_option("--relators", args.relators, "presentation instead of a complex, e.g. aaa,bbbbb,abab");
    }
    if (name == "scan-links") sub->add_flag("--certify", args.certify, "coset enumeration on 3-dimensional links");
    if (name == "abc" || name == "dual" || name == "tate" || name == "delta" || name == "hfi" || name == "v0") {
      sub->add_option("--window", window, "degree window LO:HI");
      sub->add_option("--margin", args.margin, "stability margin");
    }
    if (name == "v0") sub->add_option("--p", args.p, "surgery coefficient")->required();
    if (name == "knot") sub->add_option("--seifert", seifert, "Seifert matrix file");
  }
  // fixtures accepts --json too.
  app.get_subcommand("fixtures")->add_flag("--json", args.json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: code=1 kind=usage message=\"" << e.what() << "\"\n";
    return 1;
  }

  try {
    for (const auto& s : simplices) args.simplices.push_back(parse_simplex(s));
    if (!window.empty()) args.window = hcob::parse_window(window);
  } catch (const hcob::InputError& e) {
    std::cerr << "error: code=1 kind=input message=\"" << e.what() << "\"\n";
    return 1;
  }
  if (!seifert.empty()) {
    if (!args.input.empty()) {
      std::cerr << "error: code=1 kind=input message=\"give the Seifert matrix either as input or with --seifert\"\n";
      return 1;
    }
    args.input = seifert;
  }

  const hcob::RunResult r = hcob::run(args);
  std::cout << r.out;
  if (!r.err.empty()) std::cerr << r.err << "\n";
  return r.exit_code;
}
