// One line per acceptance criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mchar/verify.hpp"

using namespace mchar;

namespace {

struct Outcome {
  bool passed = true;
  double deviation = 0;
  std::string detail;

  void absorb(const CheckReport& r, int q) {
    if (!r.passed) {
      passed = false;
      detail += "q=" + std::to_string(q) + " " + r.name + ": " + r.detail + "; ";
    }
    deviation = std::max(deviation, r.deviation);
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += what + "; ";
    }
  }
};

int failures = 0;

void run(int n, const char* name, double tol, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.passed) ++failures;
  std::printf("%s criterion %d %-22s tol=%.0e dev=%.3e time=%.2fs%s%s\n", o.passed ? "PASS" : "FAIL", n, name, tol,
              o.deviation, secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  constexpr double kTable = 1e-8;
  constexpr double kRep = 1e-9;
  constexpr double kFrob = 1e-4;

  run(1, "class-census", 0, [] {
    Outcome o;
    for (int q : {3, 5, 7}) {
      const Group g(q);
      const Conjugacy conj(g);
      const auto part = partition_classes(conj);
      const auto t = build_table(conj);
      o.absorb(brute_force_validate(conj, part, t, kTable), q);
      const auto& inv = conj.class_inventory();
      o.require(static_cast<int>(part.orbits.size()) == (q + 1) * (q + 5) / 4, "orbit count");
      o.require(inv.size() == part.orbits.size(), "inventory count");
      std::map<std::size_t, std::int64_t> sizes;
      for (std::size_t k = 0; k < part.orbits.size(); ++k) sizes[part.column[k]] += static_cast<std::int64_t>(part.orbits[k].size());
      for (std::size_t c = 0; c < inv.size(); ++c) {
        o.require(sizes[c] == inv[c].size, "size of " + label(inv[c].id));
        o.require(inv[c].size * inv[c].centralizer == g.order(), "centralizer of " + label(inv[c].id));
      }
    }
    return o;
  });

  run(2, "table-validity", kTable, [&] {
    Outcome o;
    for (int q : {3, 5, 7, 9, 11, 13}) {
      const Group g(q);
      const Conjugacy conj(g);
      const auto t = build_table(conj);
      o.absorb(orthogonality_rows(t, kTable), q);
      o.absorb(orthogonality_cols(t, kTable), q);
      o.absorb(degree_check(t), q);
      o.require(degree_multiset(t) == number_by_degree(q), "degree count q=" + std::to_string(q));
      std::int64_t sq = 0;
      for (const auto& r : t.rows) sq += r.degree * r.degree;
      const std::int64_t q2 = static_cast<std::int64_t>(q) * q;
      o.require(sq == q2 * (q2 * q2 - 1), "sum of squared degrees q=" + std::to_string(q));
    }
    return o;
  });

  run(3, "degenerate-q3", 0, [] {
    Outcome o;
    const Group g(3);
    const Conjugacy conj(g);
    const auto m = degree_multiset(build_table(conj));
    o.require(!m.contains(20), "degree 20 present");
    o.require(m == std::map<std::int64_t, std::int64_t>{{1, 2}, {9, 2}, {10, 3}, {16, 1}}, "degree multiset");
    return o;
  });

  run(4, "induction-ledger", kTable, [&] {
    Outcome o;
    for (int q : {3, 5, 7}) {
      const Group g(q);
      const Conjugacy conj(g);
      o.absorb(induction_check(conj, build_table(conj), kTable), q);
    }
    return o;
  });

  run(5, "representation-path", kRep, [&] {
    Outcome o;
    for (int q : {3, 5}) {
      const Group g(q);
      const Conjugacy conj(g);
      o.absorb(rep_check(conj, build_table(conj), kRep, 2024), q);
    }
    return o;
  });

  run(6, "steinberg-geometry", kTable, [] {
    Outcome o;
    for (int q : {3, 5, 7}) {
      const Group g(q);
      const Conjugacy conj(g);
      const auto t = build_table(conj);
      o.absorb(steinberg_check(conj, t), q);
      const auto& st = t.rows[t.row_index(CharLabel{CharKind::Steinberg, 0})];
      const auto& inv = conj.class_inventory();
      for (std::size_t c = 0; c < inv.size(); ++c) {
        const auto v = st.values[c].eval();
        if (inv[c].id.kind == ClassKind::TwDiag) o.require(std::abs(v - 1.0) < kTable, "TwDiag value");
        if (inv[c].id.kind == ClassKind::TwOff) o.require(std::abs(v + 1.0) < kTable, "TwOff value");
      }
    }
    return o;
  });

  run(7, "reality", 0, [] {
    Outcome o;
    for (int q : {3, 5, 7}) {
      const Group g(q);
      const Conjugacy conj(g);
      o.absorb(reality_check(conj, partition_classes(conj)), q);
    }
    return o;
  });

  run(8, "frobenius", kFrob, [&] {
    Outcome o;
    {
      const Group g(3);
      const Conjugacy conj(g);
      const auto part = partition_classes(conj);
      o.absorb(frobenius_check(build_table(conj), conj, &part), 3);
    }
    {
      const Group g(7);
      const Conjugacy conj(g);
      o.absorb(frobenius_check(build_table(conj), conj, nullptr, 200, 7), 7);
    }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
