#include "nsg/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "nsg/class_enum.hpp"
#include "nsg/kernels.hpp"

namespace nsg {
namespace {

// Reverses the low `width` bits of v.
std::uint32_t bit_reverse(std::uint32_t v, int width) {
  static constexpr auto table = [] {
    std::array<std::uint8_t, 256> t{};
    for (int b = 0; b < 256; ++b) {
      std::uint8_t r = 0;
      for (int k = 0; k < 8; ++k) {
        if (b >> k & 1) r |= static_cast<std::uint8_t>(1 << (7 - k));
      }
      t[static_cast<std::size_t>(b)] = r;
    }
    return t;
  }();
  const std::uint32_t full = std::uint32_t{table[v & 0xff]} << 24 |
                             std::uint32_t{table[v >> 8 & 0xff]} << 16 |
                             std::uint32_t{table[v >> 16 & 0xff]} << 8 |
                             std::uint32_t{table[v >> 24 & 0xff]};
  return width == 0 ? 0 : full >> (32 - width);
}

// Candidate counter c holds x_1..x_{F-1} with x_1 as the most significant
// bit, so ascending counters are ascending bitstrings. The packed gap mask
// wants bit i = x_i instead, hence the reversal.
std::uint32_t gap_mask_of_counter(std::uint32_t c, int f) {
  return bit_reverse(c, f - 1) << 1 | std::uint32_t{1} << f;
}

KunzVector vector_of_mask(std::uint32_t mask, int f) {
  BitVec bits(f + 1);
  bits.data()[0] = mask;
  return detail::kunz_trusted(std::move(bits), f);
}

// All-gaps pattern: trivially closed, used to pad partial blocks.
std::uint32_t pad_mask(int f) {
  return f >= 31 ? ~1u : (std::uint32_t{1} << (f + 1)) - 2;
}

std::vector<std::uint32_t> scan_range(std::uint64_t begin, std::uint64_t end,
                                      int f, const kernels::Ops& ops) {
  std::vector<std::uint32_t> survivors;
  std::uint32_t block[8];
  const std::uint32_t padding = pad_mask(f);
  for (std::uint64_t base = begin; base < end; base += 8) {
    const int lanes = static_cast<int>(std::min<std::uint64_t>(8, end - base));
    for (int k = 0; k < lanes; ++k) {
      block[k] = gap_mask_of_counter(static_cast<std::uint32_t>(base + k), f);
    }
    for (int k = lanes; k < 8; ++k) block[k] = padding;
    const std::uint32_t valid = ops.kunz_valid8(block, f);
    for (int k = 0; k < lanes; ++k) {
      if (valid >> k & 1) survivors.push_back(block[k]);
    }
  }
  return survivors;
}

}  // namespace

OracleResult oracle_enumerate(int frobenius, int ceiling, int jobs) {
  if (frobenius < 1) fail(errc::invalid_input, "Frobenius number must be >= 1");
  const int cap = std::min(ceiling, oracle_hard_limit);
  if (frobenius > cap) {
    fail(errc::too_large, "F = " + std::to_string(frobenius) +
                              " exceeds the oracle ceiling " + std::to_string(cap));
  }
  const std::uint64_t candidates = std::uint64_t{1} << (frobenius - 1);
  const kernels::Ops& ops = kernels::active();

  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(candidates / 64 + 1)));
  std::vector<std::vector<std::uint32_t>> chunks(
      static_cast<std::size_t>(workers));
  if (workers == 1) {
    chunks[0] = scan_range(0, candidates, frobenius, ops);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t step = (candidates + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = step * static_cast<std::uint64_t>(w);
      const std::uint64_t end = std::min(candidates, begin + step);
      pool.emplace_back([&, w, begin, end] {
        if (begin < end) {
          chunks[static_cast<std::size_t>(w)] =
              scan_range(begin, end, frobenius, ops);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  OracleResult result;
  result.frobenius = frobenius;
  // Chunks cover ascending counter ranges, so concatenation keeps the
  // members strictly ascending by bitstring.
  for (const auto& chunk : chunks) {
    for (std::uint32_t mask : chunk) {
      result.members.push_back(vector_of_mask(mask, frobenius));
    }
  }
  result.total = result.members.size();
  return result;
}

namespace {

std::uint64_t key_mask(const KunzVector& x) {
  std::uint64_t mask = 0;
  for (int i : class_key(x).members) mask |= std::uint64_t{1} << i;
  return mask;
}

void record(VerifyReport& report, const std::string& name, bool pass,
            const std::string& detail) {
  for (auto& check : report.checks) {
    if (check.name == name) {
      if (!pass && check.pass) {
        check.pass = false;
        check.detail = detail;
      }
      report.pass = report.pass && check.pass;
      return;
    }
  }
  report.checks.push_back({name, pass, pass ? std::string() : detail});
  report.pass = report.pass && pass;
}

}  // namespace

std::string VerifyReport::to_string() const {
  std::ostringstream out;
  out << "verify F=" << frobenius << ": " << total << " semigroups in "
      << class_count << " classes\n";
  for (const auto& check : checks) {
    out << (check.pass ? "  ok   " : "  FAIL ") << check.name;
    if (!check.detail.empty()) out << "  [" << check.detail << "]";
    out << "\n";
  }
  out << (pass ? "result: pass" : "result: FAIL") << "\n";
  return out.str();
}

VerifyReport verify_partition(int frobenius, int ceiling, int jobs) {
  const OracleResult oracle = oracle_enumerate(frobenius, ceiling, jobs);

  std::map<std::uint64_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < oracle.members.size(); ++i) {
    groups[key_mask(oracle.members[i])].push_back(i);
  }

  VerifyReport report;
  report.frobenius = frobenius;
  report.total = oracle.total;
  report.class_count = groups.size();

  const int f = frobenius;
  for (const auto& [key, indices] : groups) {
    const auto& members = oracle.members;
    std::uint32_t fold_and = ~0u;
    std::uint32_t fold_or = 0;
    std::unordered_set<std::uint32_t> in_group;
    for (std::size_t i : indices) {
      const std::uint32_t word = static_cast<std::uint32_t>(members[i].bits().data()[0]);
      fold_and &= word;
      fold_or |= word;
      in_group.insert(word);
    }

    std::size_t irreducible_count = 0;
    std::size_t homogeneous_count = 0;
    std::optional<std::uint32_t> the_irreducible;
    for (std::size_t i : indices) {
      const std::uint32_t word = static_cast<std::uint32_t>(members[i].bits().data()[0]);
      if (is_irreducible(members[i])) {
        ++irreducible_count;
        the_irreducible = word;
        record(report, "irreducible member is the componentwise minimum",
               word == fold_and, members[i].to_string());
      }
      if (is_homogeneous(members[i])) {
        ++homogeneous_count;
        record(report, "homogeneous member is the componentwise maximum",
               word == fold_or, members[i].to_string());
      }
    }
    record(report, "each class has exactly one irreducible member",
           irreducible_count == 1,
           "key group with " + std::to_string(irreducible_count));
    record(report, "each class has exactly one homogeneous member",
           homogeneous_count == 1,
           "key group with " + std::to_string(homogeneous_count));

    bool closed = true;
    std::string closure_detail;
    for (std::size_t a : indices) {
      for (std::size_t b : indices) {
        const std::uint32_t wa = static_cast<std::uint32_t>(members[a].bits().data()[0]);
        const std::uint32_t wb = static_cast<std::uint32_t>(members[b].bits().data()[0]);
        if (in_group.count(wa | wb) == 0 || in_group.count(wa & wb) == 0) {
          closed = false;
          closure_detail = members[a].to_string() + " with " + members[b].to_string();
          break;
        }
      }
      if (!closed) break;
    }
    record(report, "each class is closed under meet and join", closed,
           closure_detail);

    bool reproduced = the_irreducible.has_value();
    std::string reproduce_detail = "no irreducible to seed from";
    if (the_irreducible) {
      const std::vector<KunzVector> walked =
          enumerate_class(vector_of_mask(*the_irreducible, f));
      std::unordered_set<std::uint32_t> walked_set;
      for (const KunzVector& w : walked) {
        walked_set.insert(static_cast<std::uint32_t>(w.bits().data()[0]));
      }
      reproduced = walked_set == in_group;
      reproduce_detail = "class of " + vector_of_mask(*the_irreducible, f).to_string();
    }
    record(report, "class enumerator reproduces each key group exactly",
           reproduced, reproduce_detail);
  }
  return report;
}

}  // namespace nsg
