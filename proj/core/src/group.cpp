#include "mchar/group.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>

namespace mchar {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Group::Group(FieldCtx field) : field_(std::move(field)) {}

std::int64_t Group::order() const {
  const std::int64_t q2 = static_cast<std::int64_t>(q()) * q();
  return q2 * (q2 * q2 - 1);
}

FElem Group::det(const Mat2& m) const {
  return field_.sub(field_.mul(m.a, m.d), field_.mul(m.b, m.c));
}

FElem Group::trace(const Mat2& m) const { return field_.add(m.a, m.d); }

Mat2 Group::matmul(const Mat2& x, const Mat2& y) const {
  const auto& f = field_;
  return Mat2{f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
              f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

Mat2 Group::sigma(const Mat2& m) const {
  return Mat2{field_.sigma(m.a), field_.sigma(m.b), field_.sigma(m.c), field_.sigma(m.d)};
}

Mat2 Group::adjugate(const Mat2& m) const {
  return Mat2{m.d, field_.neg(m.b), field_.neg(m.c), m.a};
}

Mat2 Group::scale(FElem s, const Mat2& m) const {
  return Mat2{field_.mul(s, m.a), field_.mul(s, m.b), field_.mul(s, m.c), field_.mul(s, m.d)};
}

Mat2 Group::canonical(const Mat2& m) const {
  const FElem lead = !m.a.is_zero() ? m.a : !m.b.is_zero() ? m.b : !m.c.is_zero() ? m.c : m.d;
  return scale(field_.inv(lead), m);
}

GElem Group::make(const Mat2& a) const {
  for (FElem e : {a.a, a.b, a.c, a.d}) {
    if (e.level() != Level::Quad) throw std::invalid_argument("matrix entries must lie in GF(q^2)");
  }
  const FElem d = det(a);
  if (d.is_zero()) throw std::invalid_argument("singular matrix");
  return GElem{canonical(a), !field_.is_square(d)};
}

GElem Group::identity() const { return GElem{dia(field_.one(), field_.one()), false}; }

GElem Group::mul(const GElem& g, const GElem& h) const {
  const Mat2 rhs = g.twisted() ? sigma(h.mat()) : h.mat();
  GElem out{canonical(matmul(g.mat(), rhs)), g.twisted() != h.twisted()};
  assert(out.twisted() == !field_.is_square(det(out.mat())));
  return out;
}

GElem Group::inv(const GElem& g) const {
  // (A, r)^-1 = ((A^-1)^(sigma^r), r); the adjugate is A^-1 up to a scalar.
  const Mat2 adj = adjugate(g.mat());
  return GElem{canonical(g.twisted() ? sigma(adj) : adj), g.twisted()};
}

GElem Group::pow(const GElem& g, std::int64_t n) const {
  GElem base = n < 0 ? inv(g) : g;
  std::int64_t e = n < 0 ? -n : n;
  GElem acc = identity();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

GElem Group::conjugate(const GElem& g, const GElem& x) const { return mul(mul(x, g), inv(x)); }

bool Group::is_identity(const GElem& g) const { return g == identity(); }

std::int64_t Group::element_order(const GElem& g) const {
  GElem cur = g;
  for (std::int64_t n = 1; n <= order(); ++n) {
    if (is_identity(cur)) return n;
    cur = mul(cur, g);
  }
  throw std::logic_error("element order exceeds group order");
}

ProjPoint Group::act(const GElem& g, const ProjPoint& z) const {
  const Mat2& m = g.mat();
  if (z.at_infinity) {
    if (m.c.is_zero()) return ProjPoint::infinity();
    return ProjPoint::finite(field_.div(m.a, m.c));
  }
  const FElem w = g.twisted() ? field_.sigma(z.z) : z.z;
  const FElem num = field_.add(field_.mul(m.a, w), m.b);
  const FElem den = field_.add(field_.mul(m.c, w), m.d);
  if (den.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite(field_.div(num, den));
}

std::vector<ProjPoint> Group::points() const {
  std::vector<ProjPoint> out;
  for (FElem z : field_.elements(Level::Quad)) out.push_back(ProjPoint::finite(z));
  out.push_back(ProjPoint::infinity());
  return out;
}

int Group::fixed_point_count(const GElem& g) const {
  int n = 0;
  for (const ProjPoint& z : points()) {
    if (act(g, z) == z) ++n;
  }
  return n;
}

void Group::for_each_element(const std::function<void(const GElem&)>& fn, int cap) const {
  if (q() > cap) {
    throw std::invalid_argument("enumeration of M(q^2) refused for q = " + std::to_string(q()) +
                                " (cap " + std::to_string(cap) + ")");
  }
  const std::vector<FElem> all = field_.elements(Level::Quad);
  const FElem one = field_.one();
  // Canonical forms: a = 1 with d != bc, or a = 0, b = 1, c != 0.
  for (FElem b : all) {
    for (FElem c : all) {
      const FElem bc = field_.mul(b, c);
      for (FElem d : all) {
        if (d == bc) continue;
        const Mat2 m{one, b, c, d};
        fn(GElem{m, !field_.is_square(field_.sub(d, bc))});
      }
    }
  }
  for (FElem c : all) {
    if (c.is_zero()) continue;
    for (FElem d : all) {
      const Mat2 m{FElem{}, one, c, d};
      fn(GElem{m, !field_.is_square(field_.neg(c))});
    }
  }
}

std::vector<GElem> Group::enumerate(int cap) const {
  std::vector<GElem> out;
  if (q() <= cap) out.reserve(static_cast<std::size_t>(order()));
  for_each_element([&](const GElem& g) { out.push_back(g); }, cap);
  return out;
}

std::int64_t Group::key_space() const {
  const std::int64_t s = static_cast<std::int64_t>(q()) * q();
  return s * s * s + s * s;
}

std::int64_t Group::key(const GElem& g) const {
  const std::int64_t s = static_cast<std::int64_t>(q()) * q();
  auto enc = [](FElem x) { return x.is_zero() ? 0 : x.log() + 1; };
  const Mat2& m = g.mat();
  if (!m.a.is_zero()) return (enc(m.b) * s + enc(m.c)) * s + enc(m.d);
  return s * s * s + enc(m.c) * s + enc(m.d);
}

GElem Group::random(std::mt19937_64& rng) const {
  const std::int64_t size = field_.field_size(Level::Quad);
  std::uniform_int_distribution<std::int64_t> pick(0, size - 1);
  auto entry = [&] {
    const std::int64_t v = pick(rng);
    return v == 0 ? field_.zero() : field_.xi(v - 1);
  };
  for (;;) {
    const Mat2 m{entry(), entry(), entry(), entry()};
    if (!det(m).is_zero()) return make(m);
  }
}

std::vector<GElem> Group::generators() const {
  const auto& f = field_;
  return {make(dia(f.xi(), f.xi(-1))), make(Mat2{f.one(), f.minus_one(), f.one(), f.zero()}),
          make(dia(f.xi(), f.one()))};
}

GElem Group::parse(std::string_view text) const {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("element must look like 'a,b,c,d;t'");
  std::string_view entries = text.substr(0, semi);
  const std::int64_t twist = parse_int(trim(text.substr(semi + 1)), "twist bit");
  if (twist != 0 && twist != 1) throw std::invalid_argument("twist bit must be 0 or 1");

  FElem vals[4];
  for (int i = 0; i < 4; ++i) {
    const auto comma = entries.find(',');
    if ((comma == std::string_view::npos) != (i == 3)) {
      throw std::invalid_argument("element needs exactly four comma-separated entries");
    }
    const std::string_view tok = trim(entries.substr(0, comma));
    entries = comma == std::string_view::npos ? std::string_view{} : entries.substr(comma + 1);
    if (tok == "0") {
      vals[i] = field_.zero();
    } else if (tok == "1") {
      vals[i] = field_.one();
    } else if (tok == "x") {
      vals[i] = field_.xi();
    } else if (tok.starts_with("x^")) {
      vals[i] = field_.xi(parse_int(tok.substr(2), "exponent"));
    } else {
      throw std::invalid_argument("bad matrix entry '" + std::string(tok) + "' (expected 0 or x^k)");
    }
  }
  const GElem g = make(Mat2{vals[0], vals[1], vals[2], vals[3]});
  if (g.twist() != twist) {
    throw std::invalid_argument("twist bit " + std::to_string(twist) +
                                " disagrees with the determinant (expected " +
                                std::to_string(g.twist()) + ")");
  }
  return g;
}

std::string Group::format(const GElem& g) const {
  const Mat2& m = g.mat();
  return field_.format(m.a) + "," + field_.format(m.b) + "," + field_.format(m.c) + "," +
         field_.format(m.d) + ";" + std::to_string(g.twist());
}

}  // namespace mchar
