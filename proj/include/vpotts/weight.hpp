#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vpotts/scalar.hpp"

namespace vpotts {

/// Free commutative semigroup on string generators: a sorted multiset.
struct FormalWeight {
  std::vector<std::string> generators;
};

/// A length-q field vector. Addition is componentwise.
struct FieldWeight {
  std::vector<ExactComplex> values;
};

/// Vertex weight drawn from a commutative semigroup.
///
/// Two realizations exist: formal multisets of generator labels, used to
/// keep the V-polynomial fully symbolic, and field vectors, used for the
/// Potts evaluation where contraction must add the M_i componentwise.
/// The canonical key identifies the x-variable the weight indexes.
class WeightElement {
 public:
  WeightElement() = default;

  static WeightElement formal(std::string generator);
  static WeightElement formal(std::vector<std::string> generators);
  static WeightElement field(std::vector<ExactComplex> values);
  static WeightElement field(const std::vector<Complex>& values);

  bool is_formal() const { return std::holds_alternative<FormalWeight>(value_); }
  bool is_field() const { return std::holds_alternative<FieldWeight>(value_); }

  const FormalWeight& as_formal() const { return std::get<FormalWeight>(value_); }
  const FieldWeight& as_field() const { return std::get<FieldWeight>(value_); }

  /// Number of field components; 0 for formal weights.
  std::size_t field_length() const;

  /// "a+a+b" for formal weights, "[1,0,-1/2+3i]" for field vectors.
  const std::string& key() const { return key_; }

  friend bool operator==(const WeightElement& a, const WeightElement& b) {
    return a.key_ == b.key_;
  }

 private:
  explicit WeightElement(std::variant<FormalWeight, FieldWeight> v);

  std::variant<FormalWeight, FieldWeight> value_{FormalWeight{}};
  std::string key_;
};

/// Semigroup sum. Throws WeightTypeError on mixed realizations or unequal q.
WeightElement weight_add(const WeightElement& a, const WeightElement& b);

}  // namespace vpotts
