#ifndef GUARD_MAPBIJ_CLI_HPP
#define GUARD_MAPBIJ_CLI_HPP

#include <ostream>

namespace mapbij
{

// Exit status: 0 success, 1 verification or internal failure, 2 usage or input error.
int cli_main(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace mapbij

#endif // GUARD_MAPBIJ_CLI_HPP
