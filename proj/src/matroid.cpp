#include "rankvc/matroid.hpp"

#include <string>

#include "rankvc/errors.hpp"

namespace rankvc {

LinearMatroid::LinearMatroid(ExactMatrix rep, std::vector<Element> labels)
    : rep_(std::move(rep)), labels_(std::move(labels)) {
  if (labels_.size() != rep_.cols()) {
    throw InputError("matroid has " + std::to_string(rep_.cols()) + " columns but " +
                     std::to_string(labels_.size()) + " labels");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InputError("duplicate matroid label " + std::to_string(labels_[i]));
    }
  }
}

LinearMatroid LinearMatroid::identity(const ScalarDomain& domain, std::vector<Element> labels) {
  auto rep = ExactMatrix::identity(domain, labels.size());
  return LinearMatroid(std::move(rep), std::move(labels));
}

std::size_t LinearMatroid::column_of(Element e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InputError("unknown matroid element " + std::to_string(e));
  return it->second;
}

std::vector<std::size_t> LinearMatroid::columns_of(std::span<const Element> elems) const {
  std::vector<std::size_t> cols;
  cols.reserve(elems.size());
  for (Element e : elems) cols.push_back(column_of(e));
  return cols;
}

std::size_t LinearMatroid::rank_of(std::span<const Element> elems) const {
  return rep_.rank(columns_of(elems));
}

bool LinearMatroid::is_loop(Element e) const { return rep_.is_zero_column(column_of(e)); }

bool LinearMatroid::is_coloop(Element e) const {
  const std::size_t c = column_of(e);
  std::vector<std::size_t> others;
  others.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != c) others.push_back(i);
  }
  return rep_.rank(others) + 1 == rep_.rank();
}

bool LinearMatroid::in_span(Element target, std::span<const Element> generators) const {
  return rep_.in_span(column_of(target), columns_of(generators));
}

bool LinearMatroid::in_span(const ScalarVector& target, std::span<const Element> generators) const {
  return rep_.in_span(target, columns_of(generators));
}

LinearMatroid LinearMatroid::delete_element(Element e) const {
  const std::size_t c = column_of(e);
  auto labels = labels_;
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(c));
  return LinearMatroid(rep_.without_column(c), std::move(labels));
}

LinearMatroid LinearMatroid::contract(Element e) const {
  const std::size_t c = column_of(e);
  if (rep_.is_zero_column(c)) throw ContractLoopError("cannot contract loop " + std::to_string(e));
  auto labels = labels_;
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(c));
  return LinearMatroid(rep_.contract_column(c).row_basis(), std::move(labels));
}

LinearMatroid LinearMatroid::move_column(Element e, const ScalarVector& v) const {
  return LinearMatroid(rep_.with_column(column_of(e), v), labels_);
}

LinearMatroid LinearMatroid::compacted() const { return LinearMatroid(rep_.row_basis(), labels_); }

}  // namespace rankvc
