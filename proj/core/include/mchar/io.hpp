#pragma once

// JSON, CSV and text renderings of tables, inventories and check reports.

#include <complex>
#include <string>
#include <vector>

#include "mchar/chartable.hpp"
#include "mchar/conj.hpp"
#include "mchar/rep.hpp"
#include "mchar/verify.hpp"

namespace mchar {

/// "a+bi" with 12 significant digits.
std::string format_complex(std::complex<double> z);

/// Array of {label, family, rep, size, centralizer}.
std::string inventory_json(const Conjugacy& conj, int indent = 2);
/// {q, group_order, classes, characters: [{label, degree, values, exact}]}.
std::string table_json(const CharacterTable& t, int indent = 2);
/// Header row of class labels, then one row per character.
std::string table_csv(const CharacterTable& t);
/// Aligned plain-text table with values rounded to 4 decimals.
std::string table_text(const CharacterTable& t);

std::string reports_json(const std::vector<CheckReport>& reports, int indent = 2);
/// One line per report: PASS/FAIL, name, deviation, tolerance, time, detail.
std::string reports_text(const std::vector<CheckReport>& reports);

/// Matrix as an array of rows of [re, im] pairs.
std::string matrix_json(const CMatrix& m, int indent = -1);

}  // namespace mchar
