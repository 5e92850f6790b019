#include "gssel/cli.hpp"

int main(int argc, char** argv) { return gssel::cli_main(argc, argv); }
