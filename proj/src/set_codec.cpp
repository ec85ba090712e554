#include "infoplane/set_codec.hpp"

#include "infoplane/errors.hpp"

namespace infoplane {

Nat set_encode(const FinSet& s, CodecMode mode) {
  if (s.empty()) throw EmptySetError("set_encode: the empty set has no index");
  if (mode == CodecMode::Canonical) {
    return cantor_pair(Nat(s.size()) - 1, sigma_encode(s));
  }
  FinSet up = s.shifted_up();
  return cantor_pair(Nat(up.size()), sigma_encode(up));
}

FinSet set_decode(const Nat& n, CodecMode mode) {
  Cell c = cantor_unpair(n);
  if (mode == CodecMode::Canonical) {
    return sigma_decode(c.x + 1, c.y);
  }
  if (c.x == 0) {
    throw NotInImage("set_decode(appendix): column 0 holds no set");
  }
  FinSet up = sigma_decode(c.x, c.y);
  if (up.min() == 0) {
    throw NotInImage("set_decode(appendix): cell " + to_string(n) +
                     " is not the image of a shifted set");
  }
  return up.shifted_down();
}

std::optional<FinSet> CanonicalSetStream::next() {
  if (next_index_ >= limit_) return std::nullopt;
  FinSet s = set_decode(next_index_, CodecMode::Canonical);
  next_index_ += 1;
  return s;
}

}  // namespace infoplane
