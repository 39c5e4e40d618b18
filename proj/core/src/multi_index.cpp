#include "g2lab/multi_index.hpp"

#include <algorithm>

namespace g2lab {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

int permutationSign(std::span<const int> idx) {
  int n = static_cast<int>(idx.size());
  int sign = 1;
  std::array<int, 16> v{};
  for (int i = 0; i < n; ++i) v[i] = idx[i];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
    }
  }
  return sign;
}

const MultiIndexTable& MultiIndexTable::get() {
  static const MultiIndexTable table;
  return table;
}

MultiIndexTable::MultiIndexTable() {
  // Enumerate increasing tuples per degree in lexicographic order.
  for (int p = 0; p <= kDim; ++p) {
    counts_[p] = binom(kDim, p);
    maskToSlot_[p].fill(-1);
    std::array<int, kDim> idx{};
    std::vector<std::uint8_t>& out = tuples_[p];
    // Iterative enumeration of p-subsets of {0..6} in lexicographic order.
    for (int i = 0; i < p; ++i) idx[i] = i;
    int slot = 0;
    while (true) {
      unsigned mask = 0;
      for (int i = 0; i < p; ++i) {
        out.push_back(static_cast<std::uint8_t>(idx[i]));
        mask |= 1u << idx[i];
      }
      maskToSlot_[p][mask] = slot;
      slotToMask_[p].push_back(mask);
      ++slot;
      if (p == 0) break;
      int i = p - 1;
      while (i >= 0 && idx[i] == kDim - p + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  // Complement slots and the sign of (tuple, complement) as a permutation.
  for (int p = 0; p <= kDim; ++p) {
    int n = counts_[p];
    compSlot_[p].resize(n);
    compSign_[p].resize(n);
    for (int s = 0; s < n; ++s) {
      unsigned mask = slotToMask_[p][s];
      unsigned cmask = (~mask) & 0x7Fu;
      compSlot_[p][s] = maskToSlot_[kDim - p][cmask];
      std::array<int, kDim> perm{};
      int k = 0;
      for (auto i : tuple(p, s)) perm[k++] = i;
      for (auto i : tuple(kDim - p, compSlot_[p][s])) perm[k++] = i;
      compSign_[p][s] = permutationSign({perm.data(), kDim});
    }
  }

  // Wedge structure tables.
  for (int p = 0; p <= kDim; ++p) {
    for (int q = 0; p + q <= kDim; ++q) {
      auto& tab = wedge_[p][q];
      for (int a = 0; a < counts_[p]; ++a) {
        unsigned ma = slotToMask_[p][a];
        for (int b = 0; b < counts_[q]; ++b) {
          unsigned mb = slotToMask_[q][b];
          if (ma & mb) continue;
          std::array<int, kDim> perm{};
          int k = 0;
          for (auto i : tuple(p, a)) perm[k++] = i;
          for (auto i : tuple(q, b)) perm[k++] = i;
          int sign = permutationSign({perm.data(), static_cast<size_t>(p + q)});
          tab.push_back({static_cast<std::uint16_t>(a),
                         static_cast<std::uint16_t>(b),
                         static_cast<std::uint16_t>(maskToSlot_[p + q][ma | mb]),
                         static_cast<std::int8_t>(sign)});
        }
      }
    }
  }

  // Insertion (axis ∧ tuple) and removal (axis ⌟ tuple) tables.
  for (int p = 0; p <= kDim; ++p) {
    int n = counts_[p];
    insert_[p].resize(static_cast<size_t>(n) * kDim);
    remove_[p].resize(static_cast<size_t>(n) * kDim);
    for (int s = 0; s < n; ++s) {
      unsigned mask = slotToMask_[p][s];
      for (int axis = 0; axis < kDim; ++axis) {
        InsertEntry ie{-1, 0};
        RemoveEntry re{-1, -1, 0};
        if (!(mask & (1u << axis)) && p < kDim) {
          // sign of (axis, tuple...) brought to increasing order:
          // axis passes over every tuple entry smaller than it.
          int smaller = 0;
          for (auto i : tuple(p, s))
            if (i < axis) ++smaller;
          ie.out = maskToSlot_[p + 1][mask | (1u << axis)];
          ie.sign = static_cast<std::int8_t>((smaller % 2) ? -1 : 1);
        }
        if ((mask & (1u << axis)) && p >= 1) {
          int pos = 0;
          for (auto i : tuple(p, s)) {
            if (i == axis) break;
            ++pos;
          }
          re.pos = pos;
          re.out = maskToSlot_[p - 1][mask & ~(1u << axis)];
          re.sign = static_cast<std::int8_t>((pos % 2) ? -1 : 1);
        }
        insert_[p][static_cast<size_t>(s) * kDim + axis] = ie;
        remove_[p][static_cast<size_t>(s) * kDim + axis] = re;
      }
    }
  }
}

MultiIndexTable::Canon MultiIndexTable::canon(std::span<const int> idx) const {
  int sign = permutationSign(idx);
  if (sign == 0) return {-1, 0};
  unsigned mask = 0;
  for (int i : idx) mask |= 1u << i;
  return {maskToSlot_[idx.size()][mask], sign};
}

const std::vector<MultiIndexTable::WedgeEntry>& MultiIndexTable::wedgeTable(
    int p, int q) const {
  return wedge_[p][q];
}

}  // namespace g2lab
