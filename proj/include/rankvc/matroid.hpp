#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "rankvc/exact_matrix.hpp"

namespace rankvc {

using Element = std::uint32_t;

/// A linear matroid: the columns of `representation()`, labelled one-to-one
/// by `labels()`. Flats are never materialised; closure questions go through
/// in_span and rank_of.
class LinearMatroid {
 public:
  /// Throws InputError if the label count differs from the column count or
  /// labels repeat.
  LinearMatroid(ExactMatrix rep, std::vector<Element> labels);

  static LinearMatroid identity(const ScalarDomain& domain, std::vector<Element> labels);

  const ExactMatrix& representation() const { return rep_; }
  const std::vector<Element>& labels() const { return labels_; }
  const ScalarDomain& domain() const { return rep_.domain(); }
  std::size_t size() const { return labels_.size(); }
  bool contains(Element e) const { return index_.count(e) != 0; }
  /// Column index of e; throws InputError for an unknown label.
  std::size_t column_of(Element e) const;

  std::size_t rank() const { return rep_.rank(); }
  std::size_t rank_of(std::span<const Element> elems) const;
  bool is_independent(std::span<const Element> elems) const { return rank_of(elems) == elems.size(); }
  bool is_loop(Element e) const;
  bool is_coloop(Element e) const;
  bool in_span(Element target, std::span<const Element> generators) const;
  bool in_span(const ScalarVector& target, std::span<const Element> generators) const;

  ScalarVector column(Element e) const { return rep_.column(column_of(e)); }

  LinearMatroid delete_element(Element e) const;
  /// Contraction by a non-loop; the result is compacted to a row basis, so
  /// its row count equals its rank. Throws ContractLoopError on a loop.
  LinearMatroid contract(Element e) const;
  /// Replaces the column of e by v (mapped into the domain).
  LinearMatroid move_column(Element e, const ScalarVector& v) const;
  /// Same ground set, representation reduced to a row basis.
  LinearMatroid compacted() const;
  /// Same labels, different representation (e.g. after reduction mod q).
  LinearMatroid with_representation(ExactMatrix rep) const { return LinearMatroid(std::move(rep), labels_); }

 private:
  std::vector<std::size_t> columns_of(std::span<const Element> elems) const;

  ExactMatrix rep_;
  std::vector<Element> labels_;
  std::unordered_map<Element, std::size_t> index_;
};

}  // namespace rankvc
