#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace g2lab {

inline constexpr int kDim = 7;

/// C(n,k) for small arguments.
int binom(int n, int k);

/// Strictly increasing index tuples in dimension 7, one table per degree,
/// plus the sign bookkeeping every antisymmetric kernel needs: canonical
/// slot lookup for arbitrary tuples, wedge structure tables, complement
/// (Hodge) signs, and exterior-derivative insertion tables.
///
/// Indices are 0-based throughout the code; degree-p slots enumerate the
/// C(7,p) increasing tuples in lexicographic order.
class MultiIndexTable {
 public:
  static const MultiIndexTable& get();

  int count(int degree) const { return counts_[degree]; }

  /// Increasing tuple for a slot; only the first `degree` entries are valid.
  std::span<const std::uint8_t> tuple(int degree, int slot) const {
    return {tuples_[degree].data() + static_cast<size_t>(slot) * degree,
            static_cast<size_t>(degree)};
  }

  /// Slot of the increasing tuple with the given index set (7-bit mask).
  int slotOfMask(int degree, unsigned mask) const {
    return maskToSlot_[degree][mask];
  }
  unsigned maskOfSlot(int degree, int slot) const {
    return slotToMask_[degree][static_cast<size_t>(slot)];
  }

  struct Canon {
    int slot;  // -1 when the tuple has a repeated index
    int sign;  // 0, +1 or -1
  };
  /// Canonical (slot, sign) of an arbitrary index tuple.
  Canon canon(std::span<const int> idx) const;

  struct WedgeEntry {
    std::uint16_t a, b, out;
    std::int8_t sign;
  };
  /// Nonzero structure of the wedge product Λ^p × Λ^q → Λ^{p+q}.
  const std::vector<WedgeEntry>& wedgeTable(int p, int q) const;

  /// Slot of the complementary index set in degree 7-p.
  int complementSlot(int degree, int slot) const {
    return compSlot_[degree][static_cast<size_t>(slot)];
  }
  /// Sign of the permutation (tuple, complement) of (0..6).
  int complementSign(int degree, int slot) const {
    return compSign_[degree][static_cast<size_t>(slot)];
  }

  struct InsertEntry {
    std::int32_t out;  // slot in degree p+1, or -1 if axis already present
    std::int8_t sign;
  };
  /// For d / wedge-by-e^axis: slot and sign of axis∧tuple(degree,slot).
  InsertEntry insert(int degree, int slot, int axis) const {
    return insert_[degree][static_cast<size_t>(slot) * kDim + axis];
  }

  struct RemoveEntry {
    std::int32_t pos;  // position of axis inside the tuple, or -1
    std::int32_t out;  // slot in degree p-1
    std::int8_t sign;  // (-1)^pos
  };
  /// For interior product: coefficient index of axis⌟tuple.
  RemoveEntry remove(int degree, int slot, int axis) const {
    return remove_[degree][static_cast<size_t>(slot) * kDim + axis];
  }

 private:
  MultiIndexTable();

  std::array<int, kDim + 1> counts_{};
  std::array<std::vector<std::uint8_t>, kDim + 1> tuples_;
  std::array<std::array<int, 128>, kDim + 1> maskToSlot_{};
  std::array<std::vector<unsigned>, kDim + 1> slotToMask_;
  std::array<std::vector<int>, kDim + 1> compSlot_;
  std::array<std::vector<int>, kDim + 1> compSign_;
  std::array<std::array<std::vector<WedgeEntry>, kDim + 1>, kDim + 1> wedge_;
  std::array<std::vector<InsertEntry>, kDim + 1> insert_;
  std::array<std::vector<RemoveEntry>, kDim + 1> remove_;
};

/// Sign of the permutation sorting `idx`; 0 if any index repeats.
int permutationSign(std::span<const int> idx);

}  // namespace g2lab
