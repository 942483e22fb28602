#include "mfil/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
	return mfil::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
