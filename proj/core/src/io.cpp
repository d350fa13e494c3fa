#include "mchar/io.hpp"

#include <cmath>
#include <cstdio>
#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace mchar {
namespace {

using nlohmann::json;

std::string fmt12(double x) {
  if (std::abs(x) < 5e-13) x = 0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt4(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

json columns_json(const CharacterTable& t) {
  json cols = json::array();
  for (const auto& c : t.columns) cols.push_back({{"label", c.label}, {"size", c.size}, {"centralizer", c.centralizer}});
  return cols;
}

}  // namespace

std::string format_complex(std::complex<double> z) {
  const std::string re = fmt12(z.real());
  const std::string im = fmt12(z.imag());
  if (im[0] == '-') return re + im + "i";
  return re + "+" + im + "i";
}

std::string inventory_json(const Conjugacy& conj, int indent) {
  json out = json::array();
  for (const ClassInfo& c : conj.class_inventory()) {
    out.push_back({{"label", label(c.id)},
                   {"family", to_string(c.family)},
                   {"rep", conj.group().format(c.rep)},
                   {"size", c.size},
                   {"centralizer", c.centralizer}});
  }
  return out.dump(indent);
}

std::string table_json(const CharacterTable& t, int indent) {
  json chars = json::array();
  for (const auto& row : t.rows) {
    json values = json::array();
    json exact = json::array();
    for (const auto& v : row.values) {
      const auto z = v.eval();
      values.push_back({{"re", z.real()}, {"im", z.imag()}});
      json terms = json::array();
      for (const auto& [e, c] : v.terms()) terms.push_back({{"t", e}, {"c", c}});
      exact.push_back(std::move(terms));
    }
    chars.push_back({{"label", label(row.label)}, {"degree", row.degree}, {"values", values}, {"exact", exact}});
  }
  const json out = {{"q", t.q},
                    {"group_order", t.group_order},
                    {"root_modulus", CharValue::modulus_for(t.q)},
                    {"classes", columns_json(t)},
                    {"characters", chars}};
  return out.dump(indent);
}

std::string table_csv(const CharacterTable& t) {
  std::ostringstream os;
  os << "character";
  for (const auto& c : t.columns) os << ',' << c.label;
  os << '\n';
  for (const auto& row : t.rows) {
    os << '"' << label(row.label) << '"';
    for (const auto& v : row.values) os << ',' << format_complex(v.eval());
    os << '\n';
  }
  return os.str();
}

std::string table_text(const CharacterTable& t) {
  auto cell = [](std::complex<double> z) {
    const std::string re = fmt4(z.real());
    const std::string im = fmt4(z.imag());
    if (im == "0") return re;
    if (re == "0") return im + "i";
    return re + (im[0] == '-' ? "" : "+") + im + "i";
  };
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"M(" + std::to_string(t.q) + "^2)"};
  for (const auto& c : t.columns) head.push_back(c.label);
  grid.push_back(head);
  std::vector<std::string> sizes{"size"};
  for (const auto& c : t.columns) sizes.push_back(std::to_string(c.size));
  grid.push_back(sizes);
  for (const auto& row : t.rows) {
    std::vector<std::string> line{label(row.label)};
    for (const auto& v : row.values) line.push_back(cell(v.eval()));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream os;
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << (i == 0 ? std::left : std::right) << std::setw(static_cast<int>(width[i])) << line[i];
      os << (i + 1 == line.size() ? "\n" : "  ");
    }
  }
  return os.str();
}

std::string reports_json(const std::vector<CheckReport>& reports, int indent) {
  json out = json::array();
  for (const auto& r : reports) {
    out.push_back({{"name", r.name},
                   {"passed", r.passed},
                   {"deviation", r.deviation},
                   {"tolerance", r.tolerance},
                   {"elapsed", r.elapsed},
                   {"detail", r.detail}});
  }
  return out.dump(indent);
}

std::string reports_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name << " dev=" << std::scientific
       << std::setprecision(2) << r.deviation << " tol=" << r.tolerance << std::fixed << " t=" << std::setprecision(3)
       << r.elapsed << "s  " << r.detail << '\n';
  }
  return os.str();
}

std::string matrix_json(const CMatrix& m, int indent) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows.dump(indent);
}

}  // namespace mchar
