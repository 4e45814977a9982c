#include <iostream>
#include <string>
#include <vector>

#include "faddeev/cli.hpp"

int main(int argc, char **argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	return faddeev::cli::run(args, std::cout, std::cerr);
}
