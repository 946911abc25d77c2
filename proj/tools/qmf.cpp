#include <qmf/cli.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    return qmf::cli::main(argc, argv, std::cout, std::cerr);
}
