#include "badic/cli.hpp"

int main(int argc, char** argv) {
    return badic::cli::run(argc, argv, std::cout, std::cerr);
}
