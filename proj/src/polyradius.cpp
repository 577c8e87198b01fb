#include "nonarch/polyradius.hpp"

#include "nonarch/error.hpp"

namespace nonarch {

PolyradiusElement::PolyradiusElement(Field base, std::size_t aux_count)
    : base_(std::move(base)), aux_count_(aux_count) {
  if (aux_count_ == 0) throw Error(ErrorCode::kInvalidArgument, "polyradius needs n >= 1");
}

PolyradiusElement PolyradiusElement::constant(const Element& c, std::size_t aux_count) {
  PolyradiusElement out(c.field(), aux_count);
  out.add_term(MultiIndex(aux_count, 0), c);
  return out;
}

PolyradiusElement PolyradiusElement::monomial(const Element& c, MultiIndex index) {
  PolyradiusElement out(c.field(), index.size());
  out.add_term(index, c);
  return out;
}

void PolyradiusElement::add_term(const MultiIndex& index, const Element& c) {
  if (index.size() != aux_count_) {
    throw Error(ErrorCode::kDimensionMismatch, "multi-index has wrong length");
  }
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(index, c);
    return;
  }
  Element sum = it->second + c;
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

void PolyradiusElement::require_compatible(const PolyradiusElement& other) const {
  require_same_field(base_, other.base_);
  if (aux_count_ != other.aux_count_) {
    throw Error(ErrorCode::kDimensionMismatch, "polyradius elements with different aux counts");
  }
}

bool PolyradiusElement::is_aux_constant() const {
  for (const auto& [index, c] : terms_) {
    for (long e : index) {
      if (e != 0) return false;
    }
  }
  return true;
}

Element PolyradiusElement::constant_term() const {
  auto it = terms_.find(MultiIndex(aux_count_, 0));
  return it == terms_.end() ? Element::zero(base_) : it->second;
}

LexVal term_valuation(const Element& c, const MultiIndex& index) {
  if (c.is_zero()) return LexVal::infinity();
  std::vector<Rational> components;
  components.reserve(index.size() + 1);
  components.emplace_back(c.order());
  for (long e : index) components.emplace_back(e);
  return LexVal(std::move(components));
}

LexVal PolyradiusElement::valuation() const {
  LexVal best = LexVal::infinity();
  for (const auto& [index, c] : terms_) {
    LexVal v = term_valuation(c, index);
    if (v < best) best = std::move(v);
  }
  return best;
}

std::string PolyradiusElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")";
    for (std::size_t k = 0; k < index.size(); ++k) {
      if (index[k] == 0) continue;
      out += "*T" + std::to_string(k + 1);
      if (index[k] != 1) out += "^" + std::to_string(index[k]);
    }
  }
  return out;
}

PolyradiusElement operator+(const PolyradiusElement& a, const PolyradiusElement& b) {
  a.require_compatible(b);
  PolyradiusElement out = a;
  for (const auto& [index, c] : b.terms_) out.add_term(index, c);
  return out;
}

PolyradiusElement operator-(const PolyradiusElement& a) {
  PolyradiusElement out(a.base_, a.aux_count_);
  for (const auto& [index, c] : a.terms_) out.add_term(index, -c);
  return out;
}

PolyradiusElement operator*(const PolyradiusElement& a, const PolyradiusElement& b) {
  a.require_compatible(b);
  PolyradiusElement out(a.base_, a.aux_count_);
  MultiIndex sum(a.aux_count_);
  for (const auto& [ia, ca] : a.terms_) {
    for (const auto& [ib, cb] : b.terms_) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ia[k] + ib[k];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

bool operator==(const PolyradiusElement& a, const PolyradiusElement& b) {
  return a.base_ == b.base_ && a.aux_count_ == b.aux_count_ && a.terms_ == b.terms_;
}

}  // namespace nonarch
