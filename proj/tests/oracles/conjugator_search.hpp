#pragma once

// Exhaustive conjugator search and a class-by-classify triple counter.

#include <cstdint>
#include <vector>

#include "mchar/conj.hpp"

namespace oracle {

/// Some x in the list with x g x^-1 = h.
inline bool conjugate_by_search(const mchar::Group& grp, const std::vector<mchar::GElem>& all, const mchar::GElem& g,
                                const mchar::GElem& h) {
  for (const auto& x : all) {
    if (grp.mul(x, g) == grp.mul(h, x)) return true;
  }
  return false;
}

/// Number of (x, y, z) in C1 x C2 x C3 with xyz = 1, scanning x in C1 and
/// z in C3 and testing y = x^-1 z^-1 with classify.
inline std::int64_t triples_by_classify(const mchar::Conjugacy& conj, const std::vector<mchar::GElem>& all,
                                        const mchar::ClassId& c1, const mchar::ClassId& c2,
                                        const mchar::ClassId& c3) {
  const auto& grp = conj.group();
  std::vector<mchar::GElem> in1;
  std::vector<mchar::GElem> in3;
  for (const auto& g : all) {
    const auto c = conj.classify(g);
    if (c == c1) in1.push_back(g);
    if (c == c3) in3.push_back(g);
  }
  std::int64_t n = 0;
  for (const auto& x : in1) {
    const auto xi = grp.inv(x);
    for (const auto& z : in3) {
      if (conj.classify(grp.mul(xi, grp.inv(z))) == c2) ++n;
    }
  }
  return n;
}

}  // namespace oracle
