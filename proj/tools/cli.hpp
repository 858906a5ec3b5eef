#ifndef FROBDIAM_CLI_HPP
#define FROBDIAM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace frobdiam::cli
{

// Runs one command; `args` excludes the program name. Returns the exit code.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace frobdiam::cli

#endif // FROBDIAM_CLI_HPP
