#ifndef GUARD_MAPBIJ_VERIFY_HPP
#define GUARD_MAPBIJ_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "census.hpp"
#include "corpus.hpp"

namespace mapbij
{

enum class CheckStatus
{
  Pass,
  Fail,
  Skip
};

std::string_view to_string(CheckStatus status);

struct CheckResult
{
  std::string map;
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

struct MapReport
{
  std::string name;
  int half_edges = 0;
  int vertices = 0;
  int edges = 0;
  int euler = 0;
  std::string tutte;
  std::optional<Table3<std::uint64_t>> census;
  std::vector<CheckResult> checks;
  double seconds = 0;
};

struct VerificationReport
{
  std::optional<std::uint64_t> seed;
  std::vector<MapReport> maps;
  std::vector<CheckResult> global_checks;
  std::set<std::string> coverage;

  int count(CheckStatus status) const;
  bool passed() const { return count(CheckStatus::Fail) == 0; }
};

struct VerifyOptions
{
  int max_half_edges = 12;
  // Recurrence is cross-checked against permutation search up to this many vertices.
  int brute_force_vertices = 5;
  unsigned threads = 0;
};

// Every operation the suite is expected to exercise.
std::vector<std::string> const &operation_names();

MapReport verify_map(NamedMap const &map, VerifyOptions const &options,
                     std::set<std::string> &coverage);

// Runs maps in parallel, merges in input order, and checks coverage when
// more than one map is given.
VerificationReport verify_all(std::vector<NamedMap> const &maps, VerifyOptions const &options);

VerificationReport verify_all(NamedMap const &map, VerifyOptions const &options = {});

} // namespace mapbij

#endif // GUARD_MAPBIJ_VERIFY_HPP
