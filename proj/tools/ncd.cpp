#include <iostream>

#include "ncd/cli.hpp"

int main(int argc, char** argv)
{
	return ncd::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
