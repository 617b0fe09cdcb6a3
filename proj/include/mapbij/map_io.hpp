#ifndef GUARD_MAPBIJ_MAP_IO_HPP
#define GUARD_MAPBIJ_MAP_IO_HPP

#include <string>
#include <string_view>

#include "map.hpp"

namespace mapbij
{

// Map files hold three directives, one per line, with '#' comments:
//   root a
//   sigma (a c')(a' b)(b' c)
//   alpha (a a')(b b')(c c')
CombinatorialMap parse_map(std::string_view text);

CombinatorialMap load_map(std::string const &path);

std::string serialize_map(CombinatorialMap const &map);

} // namespace mapbij

#endif // GUARD_MAPBIJ_MAP_IO_HPP
