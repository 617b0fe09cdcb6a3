#include "mapbij/map_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mapbij/error.hpp"

namespace mapbij
{

namespace
{

bool token_char(char c)
{
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '\'';
}

bool blank(char c)
{ return c == ' ' || c == '\t' || c == '\r' || c == ','; }

class LineScanner
{
public:
  LineScanner(std::string_view line, int line_no)
    : _line(line), _line_no(line_no)
  {}

  void skip_blank()
  {
    while (_pos < _line.size() && blank(_line[_pos]))
      ++_pos;
  }

  bool at_end()
  {
    skip_blank();
    return _pos >= _line.size();
  }

  char peek() { return _line[_pos]; }
  void advance() { ++_pos; }
  int column() const { return static_cast<int>(_pos) + 1; }

  std::string word()
  {
    skip_blank();
    std::size_t start = _pos;
    while (_pos < _line.size() && token_char(_line[_pos]))
      ++_pos;
    if (start == _pos)
      error("expected a token");
    return std::string(_line.substr(start, _pos - start));
  }

  std::vector<std::vector<std::string>> cycles()
  {
    std::vector<std::vector<std::string>> res;
    while (!at_end()) {
      if (peek() != '(')
        error("expected '('");
      advance();
      std::vector<std::string> cycle;
      for (;;) {
        skip_blank();
        if (_pos >= _line.size())
          error("unterminated cycle");
        if (peek() == ')') {
          advance();
          break;
        }
        cycle.push_back(word());
      }
      if (cycle.empty())
        error("empty cycle");
      res.push_back(std::move(cycle));
    }
    return res;
  }

  [[noreturn]] void error(std::string const &msg) const
  { throw ParseError(_line_no, column(), msg); }

private:
  std::string_view _line;
  int _line_no;
  std::size_t _pos = 0;
};

} // namespace

CombinatorialMap parse_map(std::string_view text)
{
  std::optional<std::string> root;
  std::optional<std::vector<std::vector<std::string>>> sigma, alpha;
  int last_line = 0;

  std::size_t start = 0;
  for (int line_no = 1; start <= text.size(); ++line_no) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    start = end + 1;
    last_line = line_no;

    LineScanner scan(line, line_no);
    if (scan.at_end())
      continue;

    int directive_col = scan.column();
    std::string directive = scan.word();
    if (directive == "root") {
      if (root)
        throw ParseError(line_no, directive_col, "duplicate root directive");
      root = scan.word();
      if (!scan.at_end())
        scan.error("unexpected text after root token");
    } else if (directive == "sigma") {
      if (sigma)
        throw ParseError(line_no, directive_col, "duplicate sigma directive");
      sigma = scan.cycles();
    } else if (directive == "alpha") {
      if (alpha)
        throw ParseError(line_no, directive_col, "duplicate alpha directive");
      alpha = scan.cycles();
    } else {
      throw ParseError(line_no, directive_col, "unknown directive '" + directive + "'");
    }
  }

  if (!root)
    throw ParseError(last_line, 1, "missing root directive");
  if (!sigma)
    throw ParseError(last_line, 1, "missing sigma directive");
  if (!alpha)
    throw ParseError(last_line, 1, "missing alpha directive");

  std::vector<std::string> tokens;
  std::set<std::string> seen;
  for (auto const *cycles : {&*sigma, &*alpha}) {
    for (auto const &cycle : *cycles) {
      for (auto const &t : cycle) {
        if (seen.insert(t).second)
          tokens.push_back(t);
      }
    }
  }

  return build_map(tokens, *sigma, *alpha, *root);
}

CombinatorialMap load_map(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorKind::InvalidArgument, "cannot open map file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map(buf.str());
}

std::string serialize_map(CombinatorialMap const &map)
{
  std::ostringstream out;
  out << "root " << map.token(map.root()) << '\n';

  out << "sigma ";
  for (int v = 0; v < map.num_vertices(); ++v) {
    out << '(';
    auto const &cycle = map.vertex_cycle(v);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << map.token(cycle[i]);
    out << ')';
  }
  out << '\n';

  out << "alpha ";
  for (int e = 0; e < map.num_edges(); ++e) {
    auto const &hs = map.edge_half_edges(e);
    out << '(' << map.token(hs[0]) << ' ' << map.token(hs[1]) << ')';
  }
  out << '\n';
  return out.str();
}

} // namespace mapbij
