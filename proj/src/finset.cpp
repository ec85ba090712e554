#include "infoplane/finset.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace infoplane {

FinSet FinSet::from_values(std::vector<Nat> values) {
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw std::invalid_argument("set literal contains a duplicate element");
  }
  if (!values.empty() && values.front() < 0) {
    throw std::invalid_argument("set elements must be non-negative");
  }
  FinSet s;
  s.elems_ = std::move(values);
  return s;
}

FinSet FinSet::from_sorted(std::vector<Nat> values) {
  assert(std::is_sorted(values.begin(), values.end()) &&
         std::adjacent_find(values.begin(), values.end()) == values.end());
  FinSet s;
  s.elems_ = std::move(values);
  return s;
}

FinSet FinSet::shifted_up() const {
  std::vector<Nat> out;
  out.reserve(elems_.size());
  for (const Nat& e : elems_) out.push_back(e + 1);
  return from_sorted(std::move(out));
}

FinSet FinSet::shifted_down() const {
  std::vector<Nat> out;
  out.reserve(elems_.size());
  for (const Nat& e : elems_) {
    if (e < 1) throw std::invalid_argument("shifted_down: element below 1");
    out.push_back(e - 1);
  }
  return from_sorted(std::move(out));
}

std::string FinSet::str() const {
  std::string out;
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += elems_[i].get_str(10);
  }
  return out;
}

}  // namespace infoplane
