#pragma once

#include <cstdint>

#include "prodset/perm.hpp"

// Permutations of degree <= 16 packed four bits per point, images[0] in
// the low nibble. Numeric order differs from image-array order, so
// anything user-visible is unpacked and re-sorted.

namespace prodset::detail {

using Packed = std::uint64_t;

constexpr int kMaxPackedDegree = 16;

inline Packed pack(const Permutation& f) {
  Packed p = 0;
  for (int i = 0; i < f.degree(); ++i)
    p |= static_cast<Packed>(f.images()[i]) << (4 * i);
  return p;
}

inline Permutation unpack(Packed p, int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = static_cast<int>((p >> (4 * i)) & 0xF);
  return Permutation(std::move(im));
}

inline Packed packed_identity(int degree) {
  Packed p = 0;
  for (int i = 0; i < degree; ++i) p |= static_cast<Packed>(i) << (4 * i);
  return p;
}

// f then g, left to right.
inline Packed packed_then(Packed f, Packed g, int degree) {
  Packed r = 0;
  for (int i = 0; i < degree; ++i) {
    const Packed fi = (f >> (4 * i)) & 0xF;
    r |= ((g >> (4 * fi)) & 0xF) << (4 * i);
  }
  return r;
}

inline Packed packed_inverse(Packed f, int degree) {
  Packed inv = 0;
  for (int i = 0; i < degree; ++i) {
    const Packed fi = (f >> (4 * i)) & 0xF;
    inv |= static_cast<Packed>(i) << (4 * fi);
  }
  return inv;
}

// Minimal number of transpositions whose product is g.
inline int min_transposition_length(Packed g, int degree) {
  int cycles = 0;
  std::uint32_t seen = 0;
  for (int i = 0; i < degree; ++i) {
    if (seen & (1u << i)) continue;
    ++cycles;
    int j = i;
    while (!(seen & (1u << j))) {
      seen |= 1u << j;
      j = static_cast<int>((g >> (4 * j)) & 0xF);
    }
  }
  return degree - cycles;
}

}  // namespace prodset::detail
