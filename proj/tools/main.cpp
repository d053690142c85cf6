// Command-line frontend. Data goes to stdout, one entity per line;
// diagnostics and verify reports go to stderr. Exit codes: 0 success,
// 1 usage or parse error, 2 domain error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/oracle.hpp"

namespace {

enum class Format { jsonl, bits, gens };

Format parse_format(const std::string& name) {
  if (name == "bits") return Format::bits;
  if (name == "gens") return Format::gens;
  return Format::jsonl;
}

struct UsageError {
  std::string message;
};

std::string generator_rendering(const nsg::NumericalSemigroup& s) {
  std::string out = "<";
  bool first = true;
  for (int g : s.minimal_generators()) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  out += '>';
  return out;
}

void append_int_array(std::string& out, const std::vector<int>& values) {
  out += '[';
  bool first = true;
  for (int v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += ']';
}

std::string json_record(const nsg::KunzVector& member,
                        const std::string& class_of) {
  const nsg::NumericalSemigroup s = nsg::to_semigroup(member);
  std::string out = "{\"frobenius\":";
  out += std::to_string(member.frobenius());
  out += ",\"kunz\":\"";
  out += member.to_string();
  out += "\",\"gaps\":";
  append_int_array(out, s.gap_list());
  out += ",\"min_generators\":";
  append_int_array(out, s.minimal_generators());
  out += ",\"genus\":";
  out += std::to_string(member.genus());
  out += ",\"irreducible\":";
  out += nsg::is_irreducible(member) ? "true" : "false";
  out += ",\"homogeneous\":";
  out += nsg::is_homogeneous(member) ? "true" : "false";
  out += ",\"class_of\":\"";
  out += class_of;
  out += "\"}";
  return out;
}

void emit(std::ostream& out, const nsg::KunzVector& member,
          const std::string& class_of, Format format) {
  switch (format) {
    case Format::bits:
      out << member.to_string() << '\n';
      break;
    case Format::gens:
      out << generator_rendering(nsg::to_semigroup(member)) << '\n';
      break;
    case Format::jsonl:
      out << json_record(member, class_of) << '\n';
      break;
  }
}

int oracle_ceiling_from_env() {
  const char* env = std::getenv("NSG_ORACLE_CEILING");
  if (env == nullptr) return nsg::default_oracle_ceiling;
  int value = 0;
  const char* end = env + std::string_view(env).size();
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value < 1) {
    throw UsageError{"NSG_ORACLE_CEILING must be a positive integer, got \"" +
                     std::string(env) + "\""};
  }
  return value;
}

// Input for the single-class commands: generators or a bitstring.
nsg::KunzVector resolve_input(const std::vector<int>& gens,
                              const std::string& kunz) {
  if (!gens.empty() && !kunz.empty()) {
    throw UsageError{"--gens and --kunz are mutually exclusive"};
  }
  if (!gens.empty()) {
    return nsg::from_semigroup(nsg::closure_from_generators(gens));
  }
  if (!kunz.empty()) return nsg::KunzVector::parse(kunz);
  throw UsageError{"one of --gens or --kunz is required"};
}

struct ListOptions {
  int frobenius = 0;
  std::string format = "jsonl";
  int jobs = 1;
  bool sorted = false;
  std::optional<std::uint64_t> limit;
};

void add_list_options(CLI::App* cmd, ListOptions& opts, bool with_jobs,
                      bool with_limit) {
  cmd->add_option("-F,--frobenius", opts.frobenius, "Frobenius number")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"jsonl", "bits", "gens"}));
  cmd->add_flag("--sorted", opts.sorted, "sort output by bitstring");
  if (with_jobs) {
    cmd->add_option("--jobs", opts.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
  }
  if (with_limit) {
    cmd->add_option("--limit", opts.limit, "stop after this many records");
  }
}

int run_enumerate(const ListOptions& opts) {
  const Format format = parse_format(opts.format);
  nsg::EnumerateOptions lib_opts{opts.jobs, opts.sorted, opts.limit};
  nsg::for_each_semigroup(
      opts.frobenius, lib_opts,
      [&](const nsg::KunzVector& member, const nsg::KunzVector& rep) {
        emit(std::cout, member, rep.to_string(), format);
        return true;
      });
  return 0;
}

int run_irreducible(const ListOptions& opts) {
  const Format format = parse_format(opts.format);
  std::uint64_t emitted = 0;
  // The stream is already ascending, so --sorted needs no extra pass.
  nsg::for_each_irreducible(opts.frobenius, [&](const nsg::KunzVector& x) {
    if (opts.limit && emitted >= *opts.limit) return false;
    ++emitted;
    emit(std::cout, x, x.to_string(), format);
    return true;
  });
  return 0;
}

int run_homogeneous(const ListOptions& opts) {
  const Format format = parse_format(opts.format);
  if (opts.sorted) {
    std::uint64_t emitted = 0;
    for (const nsg::KunzVector& y : nsg::enumerate_homogeneous(opts.frobenius)) {
      if (opts.limit && emitted >= *opts.limit) break;
      ++emitted;
      const nsg::KunzVector rep =
          nsg::from_semigroup(nsg::class_max(nsg::to_semigroup(y)));
      emit(std::cout, y, rep.to_string(), format);
    }
    return 0;
  }
  std::uint64_t emitted = 0;
  nsg::for_each_homogeneous(
      opts.frobenius, [&](const nsg::KunzVector& y, const nsg::KunzVector& x) {
        if (opts.limit && emitted >= *opts.limit) return false;
        ++emitted;
        emit(std::cout, y, x.to_string(), format);
        return true;
      });
  return 0;
}

int run_class(const nsg::KunzVector& x, bool setform, const std::string& fmt,
              bool sorted, std::optional<std::uint64_t> limit) {
  const Format format = parse_format(fmt);
  if (!nsg::is_irreducible(x)) {
    const nsg::NumericalSemigroup maximum = nsg::class_max(nsg::to_semigroup(x));
    const nsg::KunzVector max_kunz = nsg::from_semigroup(maximum);
    std::cerr << "error: input is not irreducible; its class maximum is "
              << max_kunz.to_string() << " = " << generator_rendering(maximum)
              << "\n";
    return 2;
  }
  const std::string class_of = x.to_string();
  std::vector<nsg::KunzVector> members;
  if (setform) {
    for (const nsg::NumericalSemigroup& s :
         nsg::enumerate_class_setform(nsg::to_semigroup(x))) {
      members.push_back(nsg::from_semigroup(s));
    }
  } else if (sorted) {
    members = nsg::enumerate_class(x);
  } else {
    std::uint64_t emitted = 0;
    nsg::for_each_class_member(x, [&](const nsg::KunzVector& member) {
      if (limit && emitted >= *limit) return false;
      ++emitted;
      emit(std::cout, member, class_of, format);
      return true;
    });
    return 0;
  }
  if (sorted) std::sort(members.begin(), members.end());
  std::uint64_t emitted = 0;
  for (const nsg::KunzVector& member : members) {
    if (limit && emitted >= *limit) break;
    ++emitted;
    emit(std::cout, member, class_of, format);
  }
  return 0;
}

int run_count(int frobenius, int jobs) {
  const nsg::CountReport report = nsg::count_all(frobenius, jobs);
  std::cout << "frobenius " << frobenius << '\n';
  std::cout << "total " << report.total << '\n';
  std::cout << "irreducible " << report.irreducible_count << '\n';
  std::cout << "class_sizes";
  for (const auto& [size, count] : report.class_size_histogram) {
    std::cout << ' ' << size << ':' << count;
  }
  std::cout << '\n';
  return 0;
}

int run_verify(int frobenius, int jobs) {
  const int ceiling = oracle_ceiling_from_env();
  const nsg::VerifyReport report =
      nsg::verify_partition(frobenius, ceiling, jobs);
  std::cerr << report.to_string();
  return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"enumerate numerical semigroups with a fixed Frobenius number"};
  app.require_subcommand(1);

  ListOptions enum_opts;
  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "all semigroups with Frobenius number F");
  add_list_options(cmd_enumerate, enum_opts, true, true);

  ListOptions irr_opts;
  CLI::App* cmd_irreducible =
      app.add_subcommand("irreducible", "irreducible class representatives");
  add_list_options(cmd_irreducible, irr_opts, false, true);

  ListOptions hom_opts;
  CLI::App* cmd_homogeneous =
      app.add_subcommand("homogeneous", "homogeneous class minima");
  add_list_options(cmd_homogeneous, hom_opts, false, true);

  int count_f = 0;
  int count_jobs = 1;
  CLI::App* cmd_count =
      app.add_subcommand("count", "totals and class-size histogram");
  cmd_count->add_option("-F,--frobenius", count_f, "Frobenius number")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_count->add_option("--jobs", count_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  std::vector<int> class_gens;
  std::string class_kunz;
  std::string class_format = "jsonl";
  bool class_sorted = false;
  bool class_setform = false;
  std::optional<std::uint64_t> class_limit;
  CLI::App* cmd_class =
      app.add_subcommand("class", "members of the class of an irreducible");
  cmd_class->add_option("--gens", class_gens, "generators, comma separated")
      ->delimiter(',');
  cmd_class->add_option("--kunz", class_kunz, "coordinate bitstring");
  cmd_class->add_option("--format", class_format, "output format")
      ->check(CLI::IsMember({"jsonl", "bits", "gens"}));
  cmd_class->add_flag("--sorted", class_sorted, "sort output by bitstring");
  cmd_class->add_flag("--setform", class_setform,
                      "use the integer-set reference path");
  cmd_class->add_option("--limit", class_limit, "stop after this many records");

  std::vector<int> delta_gens;
  std::string delta_kunz;
  std::string delta_format = "jsonl";
  CLI::App* cmd_delta =
      app.add_subcommand("delta", "homogeneous partner of an irreducible");
  cmd_delta->add_option("--gens", delta_gens, "generators, comma separated")
      ->delimiter(',');
  cmd_delta->add_option("--kunz", delta_kunz, "coordinate bitstring");
  cmd_delta->add_option("--format", delta_format, "output format")
      ->check(CLI::IsMember({"jsonl", "bits", "gens"}));

  std::vector<int> inv_gens;
  std::string inv_kunz;
  std::string inv_format = "jsonl";
  CLI::App* cmd_inverse = app.add_subcommand(
      "delta-inverse", "irreducible partner of a homogeneous semigroup");
  cmd_inverse->add_option("--gens", inv_gens, "generators, comma separated")
      ->delimiter(',');
  cmd_inverse->add_option("--kunz", inv_kunz, "coordinate bitstring");
  cmd_inverse->add_option("--format", inv_format, "output format")
      ->check(CLI::IsMember({"jsonl", "bits", "gens"}));

  int verify_f = 0;
  int verify_jobs = 1;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "exhaustive cross-check of the partition");
  cmd_verify->add_option("-F,--frobenius", verify_f, "Frobenius number")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--jobs", verify_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(cmd_enumerate)) return run_enumerate(enum_opts);
    if (app.got_subcommand(cmd_irreducible)) return run_irreducible(irr_opts);
    if (app.got_subcommand(cmd_homogeneous)) return run_homogeneous(hom_opts);
    if (app.got_subcommand(cmd_count)) return run_count(count_f, count_jobs);
    if (app.got_subcommand(cmd_class)) {
      return run_class(resolve_input(class_gens, class_kunz), class_setform,
                       class_format, class_sorted, class_limit);
    }
    if (app.got_subcommand(cmd_delta)) {
      const nsg::KunzVector x = resolve_input(delta_gens, delta_kunz);
      if (!nsg::is_irreducible(x)) {
        std::cerr << "error: delta requires an irreducible input\n";
        return 2;
      }
      emit(std::cout, nsg::class_min_kunz(x), x.to_string(),
           parse_format(delta_format));
      return 0;
    }
    if (app.got_subcommand(cmd_inverse)) {
      const nsg::KunzVector y = resolve_input(inv_gens, inv_kunz);
      if (!nsg::is_homogeneous(y)) {
        std::cerr << "error: delta-inverse requires a homogeneous input\n";
        return 2;
      }
      const nsg::KunzVector partner =
          nsg::from_semigroup(nsg::irreducible_partner(nsg::to_semigroup(y)));
      emit(std::cout, partner, partner.to_string(), parse_format(inv_format));
      return 0;
    }
    if (app.got_subcommand(cmd_verify)) return run_verify(verify_f, verify_jobs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const nsg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
