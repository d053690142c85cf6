#include "nsg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <mutex>
#include <thread>

namespace nsg {
namespace {

// Work-stealing-free indexed runner: tasks pull indices from a counter and
// write into caller-owned slots, so results are position-stable no matter
// how many workers ran.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Backtracking state: positions are decided in complementary pairs, low
// index rising, trying the gap on the high side first so the emission order
// is ascending by bitstring.
struct SearchState {
  int frobenius = 0;
  std::vector<std::int8_t> value;  // 1-based, -1 while undecided
  int ones = 0;
};

bool triples_hold(const SearchState& st, int p) {
  const auto& v = st.value;
  const int f = st.frobenius;
  // p as a sum: x_j + x_{p-j} >= x_p
  for (int j = 1; 2 * j <= p; ++j) {
    if (v[j] >= 0 && v[p - j] >= 0 && v[j] + v[p - j] < v[p]) return false;
  }
  // p as a summand: x_p + x_q >= x_{p+q}
  for (int q = 1; p + q <= f; ++q) {
    const int s = p + q;
    if (v[q] >= 0 && v[s] >= 0 && v[p] + v[q] < v[s]) return false;
  }
  return true;
}

bool descend(SearchState& st, int low,
             const std::function<bool(const KunzVector&)>& yield) {
  const int f = st.frobenius;
  const int half = (f + 1) / 2;
  if (low >= half) {
    BitVec bits(f + 1);
    for (int i = 1; i <= f; ++i) {
      assert(st.value[i] >= 0);
      if (st.value[i] == 1) bits.set(i);
    }
    if (!is_valid_kunz(bits, f)) return true;  // pruned too late; skip
    assert(bits.count() == (f + 2) / 2);
    return yield(detail::kunz_trusted(std::move(bits), f));
  }
  const int high = f - low;
  for (int gap_on_low : {0, 1}) {
    st.value[low] = static_cast<std::int8_t>(gap_on_low);
    st.value[high] = static_cast<std::int8_t>(1 - gap_on_low);
    if (triples_hold(st, low) && triples_hold(st, high)) {
      if (!descend(st, low + 1, yield)) return false;
    }
  }
  st.value[low] = -1;
  st.value[high] = -1;
  return true;
}

}  // namespace

bool for_each_irreducible(int frobenius,
                          const std::function<bool(const KunzVector&)>& yield) {
  if (frobenius < 1) fail(errc::invalid_input, "Frobenius number must be >= 1");
  SearchState st;
  st.frobenius = frobenius;
  st.value.assign(static_cast<std::size_t>(frobenius) + 1, -1);
  st.value[frobenius] = 1;
  if (frobenius % 2 == 0 && frobenius >= 2) st.value[frobenius / 2] = 1;
  return descend(st, 1, yield);
}

std::vector<KunzVector> enumerate_irreducible(int frobenius) {
  std::vector<KunzVector> out;
  for_each_irreducible(frobenius, [&](const KunzVector& x) {
    out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end());  // the walk already emits ascending
  return out;
}

bool for_each_homogeneous(
    int frobenius,
    const std::function<bool(const KunzVector&, const KunzVector&)>& yield) {
  return for_each_irreducible(frobenius, [&](const KunzVector& x) {
    KunzVector image = class_min_kunz(x);
    if (!is_homogeneous(image)) {
      fail(errc::invalid_input,
           "class minimum failed the direct homogeneity check: " +
               image.to_string());
    }
    return yield(image, x);
  });
}

std::vector<KunzVector> enumerate_homogeneous(int frobenius) {
  std::vector<KunzVector> out;
  for_each_homogeneous(frobenius, [&](const KunzVector& y, const KunzVector&) {
    out.push_back(y);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool for_each_semigroup(
    int frobenius, const EnumerateOptions& options,
    const std::function<bool(const KunzVector&, const KunzVector&)>& yield) {
  std::uint64_t emitted = 0;
  const auto under_limit = [&] {
    return !options.limit || emitted < *options.limit;
  };

  if (!options.sorted && options.jobs <= 1) {
    // Streaming mode: nothing is materialized beyond one class walk.
    return for_each_irreducible(frobenius, [&](const KunzVector& x) {
      ClassMemberStream stream(x);
      while (auto member = stream.next()) {
        if (!under_limit()) return false;
        ++emitted;
        if (!yield(*member, x)) return false;
      }
      return true;
    });
  }

  const std::vector<KunzVector> reps = enumerate_irreducible(frobenius);
  std::vector<std::vector<KunzVector>> classes(reps.size());
  parallel_for(reps.size(), options.jobs, [&](std::size_t i) {
    ClassMemberStream stream(reps[i]);
    while (auto member = stream.next()) classes[i].push_back(*std::move(member));
  });

  if (!options.sorted) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (const KunzVector& member : classes[i]) {
        if (!under_limit()) return false;
        ++emitted;
        if (!yield(member, reps[i])) return false;
      }
    }
    return true;
  }

  std::vector<std::pair<KunzVector, std::size_t>> all;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (KunzVector& member : classes[i]) {
      all.emplace_back(std::move(member), i);
    }
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [member, i] : all) {
    if (!under_limit()) return false;
    ++emitted;
    if (!yield(member, reps[i])) return false;
  }
  return true;
}

std::vector<KunzVector> enumerate_all(int frobenius,
                                      const EnumerateOptions& options) {
  std::vector<KunzVector> out;
  for_each_semigroup(frobenius, options,
                     [&](const KunzVector& member, const KunzVector&) {
                       out.push_back(member);
                       return true;
                     });
  return out;
}

CountReport count_all(int frobenius, int jobs) {
  const std::vector<KunzVector> reps = enumerate_irreducible(frobenius);
  std::vector<std::uint64_t> sizes(reps.size(), 0);
  parallel_for(reps.size(), jobs,
               [&](std::size_t i) { sizes[i] = class_size(reps[i]); });
  CountReport report;
  report.irreducible_count = reps.size();
  for (std::uint64_t size : sizes) {
    report.total += size;
    ++report.class_size_histogram[size];
  }
  return report;
}

}  // namespace nsg
