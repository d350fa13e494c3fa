// mchar: character tables of M(q^2) from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mchar/chartable.hpp"
#include "mchar/conj.hpp"
#include "mchar/io.hpp"
#include "mchar/rep.hpp"
#include "mchar/verify.hpp"

namespace {

using namespace mchar;

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << '\n';
    return 2;
  }
  f << text << '\n';
  return 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::vector<CheckReport> run_checks(const Conjugacy& conj, const std::string& level, double tol, int cap) {
  const int q = conj.group().q();
  const CharacterTable t = build_table(conj);
  const bool all = level == "all";
  std::vector<CheckReport> out;
  auto refuse = [&](const std::string& name) {
    out.push_back({name, false, 0, 0, 0, "q=" + std::to_string(q) + " exceeds cap " + std::to_string(cap)});
  };
  if (all || level == "table") {
    out.push_back(orthogonality_rows(t, tol));
    out.push_back(orthogonality_cols(t, tol));
    out.push_back(degree_check(t));
    out.push_back(steinberg_check(conj, t));
  }
  if (all || level == "induction") out.push_back(induction_check(conj, t, tol));
  if (all || level == "rep") {
    if (q > cap) {
      refuse("rep");
    } else {
      out.push_back(rep_check(conj, t, tol));
    }
  }
  if (all || level == "brute") {
    if (q > cap) {
      refuse("brute_force");
    } else {
      const ClassPartition part = partition_classes(conj, cap);
      out.push_back(brute_force_validate(conj, part, t, tol));
      out.push_back(reality_check(conj, part));
      out.push_back(frobenius_check(t, conj, q == 3 ? &part : nullptr));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables of the twisted fractional linear groups M(q^2)"};
  app.require_subcommand(1);

  int q = 3;
  std::string format = "text";
  std::string out;

  auto* table = app.add_subcommand("table", "Print the character table");
  bool psl = false;
  table->add_option("--q", q, "Odd prime power")->required();
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  table->add_option("--out", out, "Output file");
  table->add_flag("--psl", psl, "Table of PSL(2, q^2) instead");

  auto* classes = app.add_subcommand("classes", "List the conjugacy classes");
  classes->add_option("--q", q)->required();
  classes->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  classes->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  std::string level = "table";
  double tol = kTableTolerance;
  int cap = kDefaultEnumerationCap;
  verify->add_option("--q", q)->required();
  verify->add_option("--level", level)->check(CLI::IsMember({"table", "induction", "rep", "brute", "all"}));
  verify->add_option("--tol", tol);
  verify->add_option("--cap", cap, "Largest q for enumeration and representation checks");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* classify = app.add_subcommand("classify", "Name the class of an element");
  std::string elem;
  classify->add_option("--q", q)->required();
  classify->add_option("--elem", elem, "a,b,c,d;t with entries 0 or x^k")->required();

  auto* count = app.add_subcommand("count", "Frobenius count of triples xyz = 1");
  std::string triple;
  count->add_option("--q", q)->required();
  count->add_option("--classes", triple, "L1,L2,L3 as printed by table")->required();

  auto* rep = app.add_subcommand("rep", "Dump induced-representation matrices as JSON");
  std::int64_t ell = 1;
  rep->add_option("--q", q)->required();
  rep->add_option("--ell", ell)->required();
  rep->add_option("--elem", elem, "Also dump the matrix of this element");
  rep->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    const Group group(q);
    const Conjugacy conj(group);

    if (*table) {
      const CharacterTable t = psl ? psl_table(q) : build_table(conj);
      if (format == "json") return emit(table_json(t), out);
      if (format == "csv") return emit(table_csv(t), out);
      return emit(table_text(t), out);
    }
    if (*classes) {
      if (format == "json") return emit(inventory_json(conj), out);
      std::ostringstream os;
      for (const ClassInfo& c : conj.class_inventory()) {
        os << label(c.id) << "  " << to_string(c.family) << "  size " << c.size << "  centralizer " << c.centralizer
           << "  rep " << group.format(c.rep) << '\n';
      }
      return emit(os.str(), out);
    }
    if (*verify) {
      const auto reports = run_checks(conj, level, tol, cap);
      std::cout << (format == "json" ? reports_json(reports) + "\n" : reports_text(reports));
      for (const auto& r : reports) {
        if (!r.passed) return 1;
      }
      return 0;
    }
    if (*classify) {
      const GElem g = group.parse(elem);
      const ClassId c = conj.classify(g);
      std::cout << label(c) << '\n';
      return 0;
    }
    if (*count) {
      const auto labels = split(triple, ',');
      if (labels.size() != 3) {
        std::cerr << "--classes needs three labels\n";
        return 2;
      }
      const CharacterTable t = build_table(conj);
      const auto r = frobenius_count(t, t.column_index(labels[0]), t.column_index(labels[1]),
                                     t.column_index(labels[2]));
      std::cout << r.count << '\n';
      if (!r.valid) {
        std::cerr << "sum " << format_complex(r.raw) << " is not a non-negative integer\n";
        return 1;
      }
      return 0;
    }
    if (*rep) {
      const InducedRep r(group, ell);
      std::ostringstream os;
      os << "{\"q\":" << q << ",\"ell\":" << ell << ",\"intertwiner\":" << matrix_json(r.intertwiner());
      if (!elem.empty()) os << ",\"matrix\":" << matrix_json(r.phi_lift(group.parse(elem)));
      os << "}";
      return emit(os.str(), out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
