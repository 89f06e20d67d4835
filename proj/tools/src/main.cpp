#include "metdim/cli.hpp"

int main(int argc, char** argv) { return metdim::cli_main(argc, argv); }
