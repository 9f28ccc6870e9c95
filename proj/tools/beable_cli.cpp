#include "beable/cli.hpp"

int main(int argc, char** argv) { return beable::cli_main(argc, argv); }
