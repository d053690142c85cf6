#include "nsg/partition.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace nsg {
namespace {

std::vector<int> low_members(const BitVec& gaps, int f) {
  std::vector<int> out;
  for (int i = 1; 2 * i < f; ++i) {
    if (!gaps.test(i)) {
      assert(f % i != 0);
      out.push_back(i);
    }
  }
  return out;
}

// Bitmask over [0, f] of everything generated by the key elements.
BitVec key_closure(const std::vector<int>& key, int f) {
  BitVec reach(f + 1);
  reach.set(0);
  for (int i = 1; i <= f; ++i) {
    for (int t : key) {
      if (t <= i && reach.test(i - t)) {
        reach.set(i);
        break;
      }
    }
  }
  return reach;
}

}  // namespace

ClassKey class_key(const NumericalSemigroup& s) {
  return ClassKey{s.frobenius(), low_members(s.gaps(), s.frobenius())};
}

ClassKey class_key(const KunzVector& x) {
  return ClassKey{x.frobenius(), low_members(x.bits(), x.frobenius())};
}

NumericalSemigroup class_max(const NumericalSemigroup& s) {
  const int f = s.frobenius();
  BitVec gaps = s.gaps();
  // Drop every gap x > F/2 (except F itself) whose complement F - x is also
  // a gap; the low half is never touched, so reading from `gaps` is safe.
  for (int x = f / 2 + 1; x < f; ++x) {
    if (gaps.test(x) && gaps.test(f - x)) gaps.reset(x);
  }
  return NumericalSemigroup::from_gaps(std::move(gaps), f);
}

NumericalSemigroup class_min(const NumericalSemigroup& s) {
  const int f = s.frobenius();
  const BitVec reach = key_closure(low_members(s.gaps(), f), f);
  BitVec gaps(f + 1);
  for (int i = 1; i <= f; ++i) {
    if (!reach.test(i)) gaps.set(i);
  }
  return NumericalSemigroup::from_gaps(std::move(gaps), f);
}

NumericalSemigroup homogeneous_partner(const NumericalSemigroup& s) {
  if (!is_irreducible(s)) {
    fail(errc::not_irreducible, "partner map runs from irreducible inputs");
  }
  return class_min(s);
}

NumericalSemigroup irreducible_partner(const NumericalSemigroup& s) {
  if (!is_homogeneous(s)) {
    fail(errc::not_homogeneous, "inverse partner map runs from homogeneous inputs");
  }
  return class_max(s);
}

KunzVector class_min_kunz(const KunzVector& x) {
  if (!is_irreducible(x)) {
    fail(errc::not_irreducible, "class minimum is computed from the irreducible");
  }
  const int f = x.frobenius();
  const BitVec reach = key_closure(low_members(x.bits(), f), f);
  BitVec bits(f + 1);
  for (int i = 1; i <= f; ++i) {
    if (!reach.test(i)) bits.set(i);
  }
  assert(bits.test(f));
  return detail::kunz_trusted(std::move(bits), f);
}

BinarySystem class_min_program(const KunzVector& x) {
  if (!is_irreducible(x)) {
    fail(errc::not_irreducible, "program is defined for irreducible vectors");
  }
  const int f = x.frobenius();
  BinarySystem sys;
  sys.dimension = f;
  for (int i = 1; i <= f; ++i) {
    for (int j = i; i + j <= f; ++j) {
      sys.superadditive.push_back({i, j, i + j});
    }
  }
  for (int i : class_key(x).members) sys.pins.emplace_back(i, 0);
  sys.pins.emplace_back(f, 1);
  sys.maximize_popcount = true;
  return sys;
}

namespace {

// Trail-based DFS over 0-1 variables with unit propagation on every
// constraint family. Small and deterministic; the feasible regions it sees
// are tiny and heavily pruned by the pinned zeros.
class BinarySolver {
 public:
  explicit BinarySolver(const BinarySystem& sys)
      : sys_(sys),
        n_(sys.dimension),
        value_(static_cast<std::size_t>(n_) + 1, -1),
        super_by_var_(static_cast<std::size_t>(n_) + 1),
        twice_by_var_(static_cast<std::size_t>(n_) + 1) {
    for (std::size_t c = 0; c < sys.superadditive.size(); ++c) {
      const auto& k = sys.superadditive[c];
      for (int v : {k.i, k.j, k.sum}) attach(super_by_var_, v, c);
    }
    for (std::size_t c = 0; c < sys.twice_bounded.size(); ++c) {
      const auto& k = sys.twice_bounded[c];
      for (int v : {k.a, k.b, k.i}) attach(twice_by_var_, v, c);
    }
  }

  // Runs the search; returns the best assignment when maximizing, or the
  // first feasible one otherwise. Empty optional when infeasible.
  std::optional<BitVec> optimize() {
    best_.reset();
    best_ones_ = -1;
    enumerate_mode_ = false;
    std::vector<int> trail;
    if (apply_pins(trail)) search();
    undo(trail, 0);
    return best_;
  }

  void enumerate(const std::function<bool(const BitVec&)>& fn) {
    enumerate_mode_ = true;
    stopped_ = false;
    sink_ = &fn;
    std::vector<int> trail;
    if (apply_pins(trail)) search();
    undo(trail, 0);
    sink_ = nullptr;
  }

 private:
  static void attach(std::vector<std::vector<std::size_t>>& table, int v,
                     std::size_t c) {
    auto& row = table[static_cast<std::size_t>(v)];
    if (row.empty() || row.back() != c) row.push_back(c);
  }

  bool apply_pins(std::vector<int>& trail) {
    std::vector<int> queue;
    for (auto [v, b] : sys_.pins) {
      if (!set_value(v, b, trail, queue)) return false;
    }
    return propagate(trail, queue);
  }

  bool set_value(int v, int b, std::vector<int>& trail,
                 std::vector<int>& queue) {
    auto& slot = value_[static_cast<std::size_t>(v)];
    if (slot >= 0) return slot == b;
    slot = static_cast<std::int8_t>(b);
    ++assigned_;
    ones_ += b;
    trail.push_back(v);
    queue.push_back(v);
    return true;
  }

  int val(int v) const { return value_[static_cast<std::size_t>(v)]; }

  bool propagate(std::vector<int>& trail, std::vector<int>& queue) {
    for (;;) {
      while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (std::size_t c : super_by_var_[static_cast<std::size_t>(v)]) {
          const auto& k = sys_.superadditive[c];
          if (val(k.sum) == 1) {
            if (val(k.i) == 0 && !set_value(k.j, 1, trail, queue)) return false;
            if (val(k.j) == 0 && !set_value(k.i, 1, trail, queue)) return false;
          }
          if (val(k.i) == 0 && val(k.j) == 0 &&
              !set_value(k.sum, 0, trail, queue)) {
            return false;
          }
        }
        for (std::size_t c : twice_by_var_[static_cast<std::size_t>(v)]) {
          const auto& k = sys_.twice_bounded[c];
          if (val(k.i) == 0) {
            if (!set_value(k.a, 0, trail, queue)) return false;
            if (!set_value(k.b, 0, trail, queue)) return false;
          }
          if (val(k.a) == 1 && val(k.b) == 1 &&
              !set_value(k.i, 1, trail, queue)) {
            return false;
          }
        }
      }
      if (!sys_.popcount_eq) return true;
      const int c = *sys_.popcount_eq;
      const int slack = n_ - assigned_;
      if (ones_ > c || ones_ + slack < c) return false;
      if (ones_ == c && slack > 0) {
        for (int v = 1; v <= n_; ++v) {
          if (val(v) < 0 && !set_value(v, 0, trail, queue)) return false;
        }
        continue;
      }
      if (ones_ + slack == c && slack > 0) {
        for (int v = 1; v <= n_; ++v) {
          if (val(v) < 0 && !set_value(v, 1, trail, queue)) return false;
        }
        continue;
      }
      return true;
    }
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      const int v = trail.back();
      trail.pop_back();
      ones_ -= value_[static_cast<std::size_t>(v)];
      value_[static_cast<std::size_t>(v)] = -1;
      --assigned_;
    }
  }

  void record_leaf() {
    BitVec out(n_ + 1);
    for (int v = 1; v <= n_; ++v) {
      if (val(v) == 1) out.set(v);
    }
    if (enumerate_mode_) {
      if (!(*sink_)(out)) stopped_ = true;
      return;
    }
    if (!sys_.maximize_popcount) {
      if (!best_) {
        best_ = std::move(out);
        best_ones_ = ones_;
      }
      return;
    }
    if (ones_ > best_ones_) {
      best_ = std::move(out);
      best_ones_ = ones_;
    }
  }

  void search() {
    if (enumerate_mode_ && stopped_) return;
    if (!enumerate_mode_ && sys_.maximize_popcount && best_ones_ >= 0 &&
        ones_ + (n_ - assigned_) <= best_ones_) {
      return;  // cannot beat the incumbent
    }
    if (!enumerate_mode_ && !sys_.maximize_popcount && best_) return;
    int branch = 0;
    for (int v = 1; v <= n_; ++v) {
      if (val(v) < 0) {
        branch = v;
        break;
      }
    }
    if (branch == 0) {
      record_leaf();
      return;
    }
    const int first = (!enumerate_mode_ && sys_.maximize_popcount) ? 1 : 0;
    for (int b : {first, 1 - first}) {
      std::vector<int> trail;
      std::vector<int> queue;
      if (set_value(branch, b, trail, queue) && propagate(trail, queue)) {
        search();
      }
      undo(trail, 0);
      if (enumerate_mode_ && stopped_) return;
    }
  }

  const BinarySystem& sys_;
  int n_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::size_t>> super_by_var_;
  std::vector<std::vector<std::size_t>> twice_by_var_;
  int assigned_ = 0;
  int ones_ = 0;
  std::optional<BitVec> best_;
  int best_ones_ = -1;
  bool enumerate_mode_ = false;
  bool stopped_ = false;
  const std::function<bool(const BitVec&)>* sink_ = nullptr;
};

}  // namespace

BitVec solve_binary_program(const BinarySystem& sys) {
  if (sys.dimension < 1) fail(errc::invalid_input, "empty system");
  BinarySolver solver(sys);
  auto best = solver.optimize();
  if (!best) fail(errc::infeasible, "no feasible 0-1 assignment");
  return *std::move(best);
}

void for_each_feasible(const BinarySystem& sys,
                       const std::function<bool(const BitVec&)>& fn) {
  if (sys.dimension < 1) fail(errc::invalid_input, "empty system");
  BinarySolver solver(sys);
  solver.enumerate(fn);
}

ClassDescriptor describe_class(const KunzVector& x) {
  KunzVector min = class_min_kunz(x);  // rejects non-irreducible input
  std::vector<int> free = free_member_set(x, min);
  return ClassDescriptor{x.frobenius(), class_key(x), x, std::move(min),
                         std::move(free)};
}

std::vector<int> free_member_set(const KunzVector& x, const KunzVector& min_kunz) {
  if (x.frobenius() != min_kunz.frobenius()) {
    fail(errc::frobenius_mismatch, "free set of vectors with different F");
  }
  std::vector<int> out;
  for (int i = 1; i <= x.frobenius(); ++i) {
    if (!x.gap(i) && min_kunz.gap(i)) {
      assert(2 * i > x.frobenius());
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> toggle_closure(int d, const ClassDescriptor& desc) {
  if (!std::binary_search(desc.free_members.begin(), desc.free_members.end(), d)) {
    fail(errc::not_in_free_set,
         std::to_string(d) + " is not in the free member set");
  }
  std::vector<int> out;
  for (int e : desc.free_members) {
    if (e < d) continue;
    const int delta = e - d;
    if (delta == 0 || !desc.min_kunz.gap(delta)) out.push_back(e);
  }
  return out;
}

std::vector<int> toggle_closure_union(std::span<const int> subset,
                                      const ClassDescriptor& desc) {
  std::vector<int> out;
  for (int b : subset) {
    for (int e : toggle_closure(b, desc)) {
      if (!std::binary_search(out.begin(), out.end(), e)) {
        out.insert(std::upper_bound(out.begin(), out.end(), e), e);
      }
    }
  }
  return out;
}

}  // namespace nsg
