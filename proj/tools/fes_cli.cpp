#include "fes/cli.hpp"

int main(int argc, char** argv) {
    return fes::cli::main_entry(argc, argv);
}
