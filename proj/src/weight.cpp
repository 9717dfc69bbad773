#include "vpotts/weight.hpp"

#include <algorithm>

#include "vpotts/error.hpp"

namespace vpotts {

namespace {

std::string make_key(const std::variant<FormalWeight, FieldWeight>& v) {
  std::string key;
  if (const auto* f = std::get_if<FormalWeight>(&v)) {
    for (std::size_t i = 0; i < f->generators.size(); ++i) {
      if (i) key += '+';
      key += f->generators[i];
    }
    return key;
  }
  const auto& values = std::get<FieldWeight>(v).values;
  key = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) key += ',';
    key += values[i].str();
  }
  key += ']';
  return key;
}

}  // namespace

WeightElement::WeightElement(std::variant<FormalWeight, FieldWeight> v)
    : value_(std::move(v)), key_(make_key(value_)) {}

WeightElement WeightElement::formal(std::string generator) {
  return WeightElement(FormalWeight{{std::move(generator)}});
}

WeightElement WeightElement::formal(std::vector<std::string> generators) {
  std::sort(generators.begin(), generators.end());
  return WeightElement(FormalWeight{std::move(generators)});
}

WeightElement WeightElement::field(std::vector<ExactComplex> values) {
  return WeightElement(FieldWeight{std::move(values)});
}

WeightElement WeightElement::field(const std::vector<Complex>& values) {
  std::vector<ExactComplex> exact;
  exact.reserve(values.size());
  for (const auto& z : values) exact.push_back(ExactComplex::from_double(z));
  return field(std::move(exact));
}

std::size_t WeightElement::field_length() const {
  return is_field() ? as_field().values.size() : 0;
}

WeightElement weight_add(const WeightElement& a, const WeightElement& b) {
  if (a.is_formal() != b.is_formal()) {
    throw WeightTypeError("cannot add formal weight '" + a.key() + "' and field weight '" +
                          b.key() + "'");
  }
  if (a.is_formal()) {
    const auto& ga = a.as_formal().generators;
    const auto& gb = b.as_formal().generators;
    std::vector<std::string> merged;
    merged.reserve(ga.size() + gb.size());
    std::merge(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(merged));
    return WeightElement::formal(std::move(merged));
  }
  const auto& va = a.as_field().values;
  const auto& vb = b.as_field().values;
  if (va.size() != vb.size()) {
    throw WeightTypeError("field vectors of length " + std::to_string(va.size()) + " and " +
                          std::to_string(vb.size()) + " cannot be added");
  }
  std::vector<ExactComplex> sum(va);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += vb[i];
  return WeightElement::field(std::move(sum));
}

}  // namespace vpotts
