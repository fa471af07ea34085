#include "qshuffle/braiding.hpp"

namespace qshuffle {

namespace {

std::map<Letter, std::size_t> identity_index(std::size_t rank) {
  std::map<Letter, std::size_t> out;
  for (std::size_t i = 0; i < rank; ++i) {
    out[static_cast<Letter>(i + 1)] = i;
  }
  return out;
}

}  // namespace

CartanBraiding::CartanBraiding(CartanData data)
    : data_(std::move(data)), index_(identity_index(data_.rank())) {}

std::size_t CartanBraiding::row_of(Letter x) const {
  auto it = index_.find(x);
  if (it == index_.end())
    throw BraidingError("letter " + std::to_string(x) + " has no Cartan row");
  return it->second;
}

}  // namespace qshuffle
