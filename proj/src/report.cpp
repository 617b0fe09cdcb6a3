#include "mapbij/report.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "mapbij/error.hpp"

namespace mapbij
{

OutputFormat parse_output_format(std::string_view text)
{
  if (text == "human")
    return OutputFormat::Human;
  if (text == "tsv")
    return OutputFormat::Tsv;
  if (text == "json-lines")
    return OutputFormat::JsonLines;
  fail(ErrorKind::InvalidArgument, "unknown output format: " + std::string(text));
}

namespace
{

std::string tsv_field(std::string s)
{
  for (char &c : s) {
    if (c == '\t' || c == '\n')
      c = ' ';
  }
  return s;
}

void write_check_tsv(std::ostream &out, CheckResult const &c)
{
  out << tsv_field(c.map) << '\t' << tsv_field(c.check) << '\t' << to_string(c.status) << '\t'
      << tsv_field(c.witness) << '\n';
}

void write_check_json(std::ostream &out, CheckResult const &c)
{
  nlohmann::ordered_json j;
  j["map"] = c.map;
  j["check"] = c.check;
  j["status"] = std::string(to_string(c.status));
  j["witness"] = c.witness;
  out << j.dump() << '\n';
}

constexpr std::array<char const *, 3> row_names{"any", "forest", "internal"};
constexpr std::array<char const *, 3> orientation_row_names{"any", "minimal", "acyclic"};
constexpr std::array<char const *, 3> col_names{"any", "connected", "external"};
constexpr std::array<char const *, 3> orientation_col_names{"any", "root-conn", "strong"};

} // namespace

void write_records(std::ostream &out, std::vector<Record> const &records, OutputFormat format)
{
  switch (format) {
  case OutputFormat::Human:
    for (auto const &r : records) {
      if (r.size() == 1) {
        out << r[0].second << '\n';
        continue;
      }
      for (auto const &[k, v] : r)
        out << k << ": " << v << '\n';
    }
    break;
  case OutputFormat::Tsv:
    if (records.empty())
      break;
    for (std::size_t i = 0; i < records[0].size(); ++i)
      out << (i ? "\t" : "") << records[0][i].first;
    out << '\n';
    for (auto const &r : records) {
      for (std::size_t i = 0; i < r.size(); ++i)
        out << (i ? "\t" : "") << tsv_field(r[i].second);
      out << '\n';
    }
    break;
  case OutputFormat::JsonLines:
    for (auto const &r : records) {
      nlohmann::ordered_json j = nlohmann::ordered_json::object();
      for (auto const &[k, v] : r)
        j[k] = v;
      out << j.dump() << '\n';
    }
    break;
  }
}

void write_census(std::ostream &out, std::string const &map_name, Census const &census,
                  OutputFormat format)
{
  struct Table
  {
    char const *name;
    std::array<char const *, 3> const &rows;
    std::array<char const *, 3> const &cols;
    std::array<std::array<std::string, 3>, 3> cells;
  };
  auto cells = [](auto const &t) {
    std::array<std::array<std::string, 3>, 3> res;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        std::ostringstream s;
        s << t[r][c];
        res[r][c] = s.str();
      }
    }
    return res;
  };
  std::array<Table, 3> tables{Table{"subgraphs", row_names, col_names, cells(census.subgraphs)},
                              Table{"orientations", orientation_row_names,
                                    orientation_col_names, cells(census.orientations)},
                              Table{"tutte", row_names, col_names, cells(census.tutte)}};

  switch (format) {
  case OutputFormat::Human:
    for (auto const &t : tables) {
      out << t.name << '\n';
      out << std::setw(10) << "";
      for (auto c : t.cols)
        out << std::setw(11) << c;
      out << '\n';
      for (int r = 0; r < 3; ++r) {
        out << std::setw(10) << std::left << t.rows[r] << std::right;
        for (int c = 0; c < 3; ++c)
          out << std::setw(11) << t.cells[r][c];
        out << '\n';
      }
    }
    out << (census.consistent() ? "consistent" : "INCONSISTENT") << '\n';
    for (auto const &v : census.violations)
      out << "  " << v << '\n';
    break;
  case OutputFormat::Tsv:
    out << "map\ttable\trow\tany\tconnected\texternal\n";
    for (auto const &t : tables) {
      for (int r = 0; r < 3; ++r) {
        out << tsv_field(map_name) << '\t' << t.name << '\t' << t.rows[r];
        for (int c = 0; c < 3; ++c)
          out << '\t' << t.cells[r][c];
        out << '\n';
      }
    }
    break;
  case OutputFormat::JsonLines:
    for (auto const &t : tables) {
      for (int r = 0; r < 3; ++r) {
        nlohmann::ordered_json j;
        j["map"] = map_name;
        j["table"] = t.name;
        j["row"] = t.rows[r];
        for (int c = 0; c < 3; ++c)
          j[col_names[c]] = t.cells[r][c];
        out << j.dump() << '\n';
      }
    }
    break;
  }
}

void write_report(std::ostream &out, VerificationReport const &report, OutputFormat format,
                  bool timing)
{
  switch (format) {
  case OutputFormat::Human: {
    if (report.seed)
      out << "seed " << *report.seed << '\n';
    for (auto const &m : report.maps) {
      out << m.name << ": |H|=" << m.half_edges << " |V|=" << m.vertices << " |E|=" << m.edges
          << " euler=" << m.euler;
      if (!m.tutte.empty())
        out << " T=" << m.tutte;
      if (timing)
        out << " time=" << std::fixed << std::setprecision(3) << m.seconds << "s";
      out << '\n';
      for (auto const &c : m.checks) {
        out << "  " << std::left << std::setw(26) << c.check << std::right << to_string(c.status);
        if (!c.witness.empty())
          out << "  " << c.witness;
        out << '\n';
      }
    }
    for (auto const &c : report.global_checks) {
      out << c.check << ": " << to_string(c.status);
      if (!c.witness.empty())
        out << "  " << c.witness;
      out << '\n';
    }
    out << "pass " << report.count(CheckStatus::Pass) << ", fail "
        << report.count(CheckStatus::Fail) << ", skip " << report.count(CheckStatus::Skip)
        << '\n';
    break;
  }
  case OutputFormat::Tsv:
    out << "map\tcheck\tstatus\twitness\n";
    for (auto const &m : report.maps) {
      for (auto const &c : m.checks)
        write_check_tsv(out, c);
      if (timing)
        write_check_tsv(out, {m.name, "seconds", CheckStatus::Pass, std::to_string(m.seconds)});
    }
    for (auto const &c : report.global_checks)
      write_check_tsv(out, c);
    break;
  case OutputFormat::JsonLines:
    for (auto const &m : report.maps) {
      for (auto const &c : m.checks)
        write_check_json(out, c);
      if (timing)
        write_check_json(out, {m.name, "seconds", CheckStatus::Pass, std::to_string(m.seconds)});
    }
    for (auto const &c : report.global_checks)
      write_check_json(out, c);
    break;
  }
}

} // namespace mapbij
