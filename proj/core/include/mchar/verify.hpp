#pragma once

// Checks on generated tables: orthogonality, degree counts, brute-force class
// partitions, induction from PSL(2, q^2), the representation path and
// Frobenius triple counts.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mchar/chartable.hpp"
#include "mchar/conj.hpp"

namespace mchar {

struct CheckReport {
  std::string name;
  bool passed = false;
  double deviation = 0;
  double tolerance = 0;
  double elapsed = 0;  // seconds
  std::string detail;
};

inline constexpr double kTableTolerance = 1e-8;
inline constexpr double kRepTolerance = 1e-9;
inline constexpr double kIntegralityTolerance = 1e-4;

/// First orthogonality, each inner product compared with delta.
CheckReport orthogonality_rows(const CharacterTable& t, double tol = kTableTolerance);
/// Second orthogonality, each column sum divided by its centralizer order.
CheckReport orthogonality_cols(const CharacterTable& t, double tol = kTableTolerance);
/// Degree multiset against number_by_degree and sum of squared degrees.
CheckReport degree_check(const CharacterTable& t);

/// Conjugation orbits of the fully enumerated group.
struct ClassPartition {
  std::vector<GElem> elements;
  std::vector<std::int32_t> index_of_key;  // key -> element index or -1
  std::vector<std::int32_t> orbit;         // element index -> orbit
  std::vector<std::vector<std::int32_t>> orbits;
  std::vector<std::size_t> column;         // orbit -> inventory column

  [[nodiscard]] std::int32_t orbit_of(const Group& g, const GElem& x) const;
};

/// Orbits by breadth-first search under conjugation by the generators; each
/// orbit is labelled by classifying its first element. Throws
/// std::invalid_argument when q exceeds cap.
ClassPartition partition_classes(const Conjugacy& conj, int cap = kDefaultEnumerationCap);

/// Orbit count, sizes and labels against class_inventory, classify on
/// sampled orbit members, full-group norms of every row.
CheckReport brute_force_validate(const Conjugacy& conj, const ClassPartition& part, const CharacterTable& t,
                                 double tol = kTableTolerance);
/// Inverse orbits against is_real_class.
CheckReport reality_check(const Conjugacy& conj, const ClassPartition& part);
/// Steinberg row against fixed points minus one on every representative.
CheckReport steinberg_check(const Conjugacy& conj, const CharacterTable& t);

/// phi^G for a PSL row, one value per column of the M(q^2) table.
std::vector<std::complex<double>> induced_values(const Conjugacy& conj, const CharacterTable& psl,
                                                 std::size_t psl_row);
/// Rows of the M(q^2) table that phi^G should decompose into.
std::vector<CharLabel> predicted_constituents(int q, const CharLabel& psl_row);
CheckReport induction_check(const Conjugacy& conj, const CharacterTable& t, double tol = kTableTolerance);

/// Closed forms against the coset rule, homomorphism and unitarity on random
/// pairs, intertwiner constraints, restriction traces, class-function
/// property, the f identities and chi_trace against the table.
CheckReport rep_check(const Conjugacy& conj, const CharacterTable& t, double tol = kTableTolerance,
                      std::uint64_t seed = 1);

struct FrobeniusCount {
  std::int64_t count = 0;
  std::complex<double> raw;
  double deviation = 0;  // distance of raw from count
  bool valid = false;    // integral within tolerance and non-negative
};

/// (|C1||C2||C3|/|G|) sum_chi chi(c1) chi(c2) chi(c3) / chi(1), by column.
FrobeniusCount frobenius_count(const CharacterTable& t, std::size_t c1, std::size_t c2, std::size_t c3,
                               double tol = kIntegralityTolerance);
/// Exhaustive counts n[c1][c2][c3] of pairs (x, y) in C1 x C2 with
/// (xy)^-1 in C3.
std::vector<std::int64_t> triple_counts(const Conjugacy& conj, const ClassPartition& part);
/// Against triple_counts when part is given, else integrality on samples.
CheckReport frobenius_check(const CharacterTable& t, const Conjugacy& conj, const ClassPartition* part,
                            int samples = 200, std::uint64_t seed = 1);

}  // namespace mchar
