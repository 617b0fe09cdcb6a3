#ifndef GUARD_MAPBIJ_REPORT_HPP
#define GUARD_MAPBIJ_REPORT_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "census.hpp"
#include "verify.hpp"

namespace mapbij
{

enum class OutputFormat
{
  Human,
  Tsv,
  JsonLines
};

OutputFormat parse_output_format(std::string_view text);

using Record = std::vector<std::pair<std::string, std::string>>;

// Human output of a single-field record is the bare value.
void write_records(std::ostream &out, std::vector<Record> const &records, OutputFormat format);

void write_census(std::ostream &out, std::string const &map_name, Census const &census,
                  OutputFormat format);

void write_report(std::ostream &out, VerificationReport const &report, OutputFormat format,
                  bool timing = false);

} // namespace mapbij

#endif // GUARD_MAPBIJ_REPORT_HPP
