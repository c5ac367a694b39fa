#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cfact/checks.hpp"
#include "cfact/corpus.hpp"
#include "cfact/invariants.hpp"
#include "cfact/isoclinism.hpp"
#include "cfact/structure.hpp"

namespace {

using namespace cfact;

int cmd_info(const std::string& spec) {
  const Group& g = *resolve(spec);
  auto p = profile(g);
  std::cout << "group:         " << g.label() << "\n"
            << "order:         " << p.order << "\n"
            << "center:        " << p.z_order << "\n"
            << "derived:       " << p.derived_order << "\n"
            << "derived^center:" << p.derived_meet_center_order << "\n"
            << "cent_count:    " << p.cent_count << "\n"
            << "nacent:        " << p.nacent_count << "\n"
            << "omega:         " << p.omega << "\n"
            << "derived_length:" << p.derived_length << "\n";
  std::cout << "nilpotency:    ";
  if (p.nilpotency_class)
    std::cout << *p.nilpotency_class << "\n";
  else
    std::cout << "not nilpotent\n";
  std::cout << "CA-group:      " << (p.is_CA ? "yes" : "no") << "\n"
            << "F-group:       " << (p.is_F ? "yes" : "no") << "\n"
            << "Z-group:       " << (p.is_Z_group ? "yes" : "no") << "\n"
            << "perfect:       " << (p.is_perfect ? "yes" : "no") << "\n"
            << "primitive_Cn:  " << (p.is_primitive_Cn ? "yes" : "no")
            << " (quotient cent_count " << p.quotient_cent_count << ")\n";
  std::cout << "conjugate_type:";
  for (auto [size, mult] : p.conjugate_type)
    std::cout << " " << size << "x" << mult;
  std::cout << "\n";
  auto cls = p_group_classification(g);
  if (cls.cls != PGroupClass::None)
    std::cout << "p_group_class: " << p_group_class_name(cls) << "\n";
  return 0;
}

int cmd_cent(const std::string& spec, bool list) {
  const Group& g = *resolve(spec);
  auto cs = cent_structure(g);
  std::cout << cs.count << "\n";
  if (list) {
    for (std::size_t i = 0; i < cs.centralizers.size(); ++i) {
      const auto& c = cs.centralizers[i];
      std::cout << "#" << i << " order " << c.size()
                << (c.is_abelian() ? "" : " non-abelian") << " {";
      bool first = true;
      for (Elt x : c.elements()) {
        std::cout << (first ? "" : " ") << int(x);
        first = false;
      }
      std::cout << "}\n";
    }
  }
  return 0;
}

int cmd_omega(const std::string& spec) {
  std::cout << omega(*resolve(spec)) << "\n";
  return 0;
}

int cmd_isoclinic(const std::string& a, const std::string& b, bool witness,
                  bool fast) {
  const Group& ga = *resolve(a);
  const Group& gb = *resolve(b);
  auto w = isoclinic(ga, gb, fast);
  if (!w) {
    std::cout << "not isoclinic\n";
    return 1;
  }
  auto ver = verify_witness(ga, gb, *w);
  if (!ver.ok) {
    std::cerr << "internal error: witness fails verification: " << ver.detail
              << "\n";
    return 1;
  }
  std::cout << "isoclinic\n";
  if (witness) std::cout << witness_to_json(*w) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, bool json) {
  auto report = run_suite(suite);
  if (json) {
    std::cout << report_json(report) << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::cout << c.status << "  " << c.id;
      if (c.status == "fail")
        std::cout << "  expected: " << c.expected << "  actual: " << c.actual;
      std::cout << "\n";
    }
    std::cout << report.checks.size() << " checks, " << report.failures()
              << " failures (" << report.seconds << "s)\n";
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_export_graph(const std::string& spec, const std::string& format) {
  std::cout << export_ncgraph(*resolve(spec), format);
  return 0;
}

int cmd_table(const std::string& spec, const std::string& out) {
  if (out == "-")
    resolve(spec)->write_cay(std::cout);
  else
    resolve(spec)->write_cay_file(out);
  return 0;
}

int cmd_corpus() {
  for (const auto& e : corpus_list()) {
    std::cout << e.name << "\t" << e.spec;
    if (e.expected.cent_count)
      std::cout << "\tcent=" << *e.expected.cent_count;
    if (e.expected.omega) std::cout << "\tomega=" << *e.expected.omega;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group invariants, isoclinism and claim verification"};
  app.require_subcommand(1);

  std::string spec, spec_b, out_path;
  std::string suite = "all", format = "dot";
  bool list = false, witness = false, fast = false, json = false;

  auto* info = app.add_subcommand("info", "invariant profile of a group");
  info->add_option("spec", spec)->required();

  auto* cent = app.add_subcommand("cent", "number of distinct centralizers");
  cent->add_option("spec", spec)->required();
  cent->add_flag("--list", list, "print each centralizer");

  auto* om = app.add_subcommand("omega", "largest pairwise non-commuting set");
  om->add_option("spec", spec)->required();

  auto* iso = app.add_subcommand("isoclinic", "decide isoclinism of two groups");
  iso->add_option("a", spec)->required();
  iso->add_option("b", spec_b)->required();
  iso->add_flag("--witness", witness, "print the verified witness as JSON");
  iso->add_flag("--fast", fast, "also pre-filter on cent_count");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "suite name (default: all)");
  ver->add_flag("--json", json, "machine-readable report");

  auto* exp = app.add_subcommand("export-graph", "non-commuting class graph");
  exp->add_option("spec", spec)->required();
  exp->add_option("--format", format, "dot|json");

  auto* tab = app.add_subcommand("table", "write the multiplication table");
  tab->add_option("spec", spec)->required();
  tab->add_option("-o,--output", out_path)->required();

  app.add_subcommand("corpus", "list the bundled groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(spec);
    if (cent->parsed()) return cmd_cent(spec, list);
    if (om->parsed()) return cmd_omega(spec);
    if (iso->parsed()) return cmd_isoclinic(spec, spec_b, witness, fast);
    if (ver->parsed()) return cmd_verify(suite, json);
    if (exp->parsed()) return cmd_export_graph(spec, format);
    if (tab->parsed()) return cmd_table(spec, out_path);
    return cmd_corpus();
  } catch (const cfact::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
