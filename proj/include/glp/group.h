// Group arithmetic for arc labels.
//
// Four concrete families are supported: cyclic groups Z_q, the integers,
// symmetric groups S_n and free groups on named generators.  All of them have
// a computable normal form, so every GroupElement is stored normalized and
// equality is structural.

#ifndef GLP_GROUP_H_
#define GLP_GROUP_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace glp {

enum class GroupKind { kCyclic, kInteger, kSymmetric, kFree };

class GroupSpec {
 public:
  static GroupSpec cyclic(std::int64_t modulus);
  static GroupSpec integers();
  static GroupSpec symmetric(int degree);
  static GroupSpec free(std::vector<std::string> generators);

  GroupKind kind() const { return kind_; }
  // Modulus of a cyclic group.
  std::int64_t modulus() const { return modulus_; }
  // Degree n of S_n.
  int degree() const { return degree_; }
  const std::vector<std::string>& generators() const { return generators_; }

  // "cyclic 3", "integer", "symmetric 4", "free a b".
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec() = default;

  GroupKind kind_ = GroupKind::kInteger;
  std::int64_t modulus_ = 0;
  int degree_ = 0;
  std::vector<std::string> generators_;
};

// Residue of Z_q or an integer.
struct Scalar {
  std::int64_t value = 0;
  auto operator<=>(const Scalar&) const = default;
};

// Permutation of {0, .., n-1} stored as its image array.
struct Permutation {
  std::vector<int> image;
  auto operator<=>(const Permutation&) const = default;
};

// Freely reduced word.  Letter +k is generator k-1, letter -k its inverse.
struct Word {
  std::vector<int> letters;
  auto operator<=>(const Word&) const = default;
};

class GroupElement {
 public:
  using Payload = std::variant<Scalar, Permutation, Word>;

  GroupElement() = default;
  explicit GroupElement(Payload payload) : payload_(std::move(payload)) {}

  const Payload& payload() const { return payload_; }

  auto operator<=>(const GroupElement&) const = default;

 private:
  Payload payload_;
};

class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

GroupElement identity(const GroupSpec& spec);

// Product a·b.  Permutations compose right to left: (a·b)(x) = a(b(x)).
GroupElement mul(const GroupSpec& spec, const GroupElement& a,
                 const GroupElement& b);
GroupElement inv(const GroupSpec& spec, const GroupElement& a);
bool is_identity(const GroupSpec& spec, const GroupElement& a);

// is_identity(a·b⁻¹).
bool equal(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);

// Throws GroupMismatch unless `a` is a normalized element of `spec`.
void check_member(const GroupSpec& spec, const GroupElement& a);
bool is_member(const GroupSpec& spec, const GroupElement& a);

// Builders that normalize their input.
GroupElement make_scalar(const GroupSpec& spec, std::int64_t value);
// One-based images: images[i] is the image of i+1.
GroupElement make_permutation(const GroupSpec& spec,
                              const std::vector<int>& images);
// One-based cycles, applied right to left like every product.
GroupElement make_cycles(const GroupSpec& spec,
                         const std::vector<std::vector<int>>& cycles);
GroupElement make_word(const GroupSpec& spec, const std::vector<int>& letters);

// Text syntax: decimal integer for cyclic and integer groups; cycle notation
// such as "(1,2)(3,4)" or "id" for symmetric groups; "."-separated
// generators with a trailing "'" for inverses, or "e", for free groups.
GroupElement parse_element(const GroupSpec& spec, std::string_view text);
std::string format_element(const GroupSpec& spec, const GroupElement& a);

// Parses the parameters that follow the "group" keyword, e.g. {"cyclic","3"}.
GroupSpec parse_group_spec(const std::vector<std::string>& tokens);

}  // namespace glp

#endif  // GLP_GROUP_H_
