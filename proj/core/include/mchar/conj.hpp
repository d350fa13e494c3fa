#pragma once

// Conjugacy classes of M(q^2): labels, the closed-form inventory, and a
// classifier that maps any element to its class.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mchar/group.hpp"

namespace mchar {

enum class ClassKind : std::uint8_t { Id, U, W, Xi, Zeta, TwDiag, TwOff };

enum class Family : std::uint8_t {
  Identity,
  Unipotent,
  OrderTwoLike,
  XiGeneric,
  XiBoundary,
  ZetaGeneric,
  TwistedDiag,
  TwistedOff,
};

std::string to_string(Family f);

/// Class label. param is the canonical xi exponent (Xi), zeta exponent (Zeta)
/// or the odd exponent j of the twisted representative; zero otherwise.
struct ClassId {
  ClassKind kind = ClassKind::Id;
  std::int64_t param = 0;

  [[nodiscard]] bool twisted() const { return kind == ClassKind::TwDiag || kind == ClassKind::TwOff; }

  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

/// "I", "u", "w", "xi:j", "zeta:k", "dia:j", "off:j".
std::string label(const ClassId& c);
/// Inverse of label(); throws std::invalid_argument on malformed text.
ClassId parse_label(std::string_view text);

struct ClassInfo {
  ClassId id;
  GElem rep;
  std::int64_t size = 0;
  std::int64_t centralizer = 0;
  Family family = Family::Identity;
};

/// Orbit representatives of the generic xi and zeta exponents.
struct IndexSets {
  std::vector<std::int64_t> U;
  std::vector<std::int64_t> V;
};

/// Minimum of {+-j, +-jq} + {0, (q^2-1)/2} mod q^2-1.
std::int64_t canonical_xi(int q, std::int64_t j);
/// Minimum of {+-k, +-kq} + {0, (q^2+1)/2} mod q^2+1.
std::int64_t canonical_zeta(int q, std::int64_t k);
/// True when j is 0 mod (q+1)/2 or mod (q-1)/2.
bool is_boundary_xi(int q, std::int64_t j);
bool is_real_class(int q, const ClassId& c);

class Conjugacy {
 public:
  /// The group must outlive this object.
  explicit Conjugacy(const Group& group);

  [[nodiscard]] const Group& group() const { return *group_; }

  [[nodiscard]] const IndexSets& index_sets() const { return sets_; }
  /// Columns in the order Id, U, W, Xi generic, Xi boundary, Zeta, TwDiag, TwOff.
  [[nodiscard]] const std::vector<ClassInfo>& class_inventory() const { return inventory_; }
  [[nodiscard]] std::optional<std::size_t> column_of(const ClassId& c) const;
  [[nodiscard]] const ClassInfo& info(const ClassId& c) const;

  [[nodiscard]] ClassId classify(const GElem& g) const;
  /// Decides whether x g x^-1 = h for some x in G by solving the
  /// semilinear equation X A^(sigma^e) = delta B X^(sigma^r) over GF(q).
  [[nodiscard]] bool conjugacy_probe(const GElem& g, const GElem& h) const;
  [[nodiscard]] bool is_real_class(const ClassId& c) const { return mchar::is_real_class(group_->q(), c); }

 private:
  [[nodiscard]] ClassId classify_untwisted(const GElem& g) const;

  const Group* group_;
  IndexSets sets_;
  std::vector<ClassInfo> inventory_;
  // Class of rep^2 for each twisted class, in inventory order.
  std::vector<std::pair<ClassId, ClassId>> twisted_squares_;
};

}  // namespace mchar
