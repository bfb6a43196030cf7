#pragma once

// Internal backtracking search for simultaneous row/column permutations
// matching two equal-size square matrices entrywise:
//
//   T(i,j) = S(row[i], col[j])  for all i,j, within tol.
//
// Used by the BCCB parameter-permutation witness and, on dephased matrices,
// by the Hadamard equivalence search. Target rows are assigned source rows
// one at a time while per-column candidate masks are narrowed; a final
// distinct-representatives pass fixes the column permutation.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "hforge/core.hpp"

namespace hforge::detail {

struct PermMatch {
  std::vector<int> row, col;
};

class PermMatcher {
 public:
  PermMatcher(const Matrix& target, const Matrix& source, double tol)
      : t_(target), s_(source), n_(static_cast<int>(target.size())), tol_(tol) {
    row_profiles_t_ = profiles(t_);
    row_profiles_s_ = profiles(s_);
  }

  // fix_row0 / fix_col0 >= 0 pin the image of target row 0 / column 0.
  // budget is decremented per search node; exhausted() reports a cutoff.
  std::optional<PermMatch> run(long long& budget, int fix_row0 = -1, int fix_col0 = -1) {
    exhausted_ = false;
    if (t_.size() != s_.size() || n_ == 0) return std::nullopt;
    if (n_ > 31) throw std::invalid_argument("PermMatcher: order above 31 unsupported");
    std::vector<std::uint32_t> masks(n_, (1u << n_) - 1u);
    if (fix_col0 >= 0) masks[0] = 1u << fix_col0;
    row_assign_.assign(n_, -1);
    used_rows_ = 0;
    fix_row0_ = fix_row0;
    std::optional<PermMatch> found;
    assign_row(0, masks, budget, found);
    return found;
  }

  bool exhausted() const { return exhausted_; }

 private:
  using Mask = std::uint32_t;

  // row multisets quantized to a grid much coarser than numerical noise, so
  // equal-within-tolerance rows always produce identical profiles
  using Profile = std::vector<std::pair<long long, long long>>;

  std::vector<Profile> profiles(const Matrix& m) const {
    std::vector<Profile> out(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j)
        out[i].emplace_back(std::llround(m(i, j).real() * 1e6),
                            std::llround(m(i, j).imag() * 1e6));
      std::sort(out[i].begin(), out[i].end());
    }
    return out;
  }

  // pruning aid only; never prunes rows whose multisets agree within tol
  bool profile_compatible(int ti, int si) const {
    return row_profiles_t_[ti] == row_profiles_s_[si];
  }

  void assign_row(int i, const std::vector<Mask>& masks, long long& budget,
                  std::optional<PermMatch>& found) {
    if (found || exhausted_) return;
    if (i == n_) {
      match_columns(masks, budget, found);
      return;
    }
    for (int s = 0; s < n_; ++s) {
      if (used_rows_ & (1u << s)) continue;
      if (i == 0 && fix_row0_ >= 0 && s != fix_row0_) continue;
      if (--budget <= 0) {
        exhausted_ = true;
        return;
      }
      if (!profile_compatible(i, s)) continue;
      std::vector<Mask> next = masks;
      bool ok = true;
      for (int j = 0; j < n_ && ok; ++j) {
        Mask m = 0;
        for (Mask rest = next[j]; rest;) {
          Mask bit = rest & (~rest + 1u);
          rest ^= bit;
          int c = std::countr_zero(bit);
          if (std::abs(s_(s, c) - t_(i, j)) <= tol_) m |= bit;
        }
        next[j] = m;
        ok = (m != 0);
      }
      if (!ok) continue;
      row_assign_[i] = s;
      used_rows_ |= 1u << s;
      assign_row(i + 1, next, budget, found);
      used_rows_ &= ~(1u << s);
      row_assign_[i] = -1;
      if (found || exhausted_) return;
    }
  }

  void match_columns(const std::vector<Mask>& masks, long long& budget,
                     std::optional<PermMatch>& found) {
    // distinct representatives: pick for every target column a distinct source
    // column from its candidate mask, tightest columns first
    std::vector<int> order(n_);
    for (int j = 0; j < n_; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::popcount(masks[a]) < std::popcount(masks[b]);
    });
    std::vector<int> col(n_, -1);
    Mask used = 0;
    if (sdr(0, order, masks, used, col, budget)) {
      PermMatch pm;
      pm.row = row_assign_;
      pm.col = col;
      found = pm;
    }
  }

  bool sdr(int k, const std::vector<int>& order, const std::vector<Mask>& masks,
           Mask& used, std::vector<int>& col, long long& budget) {
    if (k == n_) return true;
    int j = order[k];
    for (Mask rest = masks[j] & ~used; rest;) {
      Mask bit = rest & (~rest + 1u);
      rest ^= bit;
      if (--budget <= 0) {
        exhausted_ = true;
        return false;
      }
      used |= bit;
      col[j] = std::countr_zero(bit);
      if (sdr(k + 1, order, masks, used, col, budget)) return true;
      used &= ~bit;
      col[j] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  const Matrix& t_;
  const Matrix& s_;
  int n_;
  double tol_;
  std::vector<Profile> row_profiles_t_, row_profiles_s_;
  std::vector<int> row_assign_;
  Mask used_rows_ = 0;
  int fix_row0_ = -1;
  bool exhausted_ = false;
};

}  // namespace hforge::detail
