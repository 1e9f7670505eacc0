#include "cli.hpp"

int main(int argc, char** argv) { return homtop::cli_main(argc, argv); }
