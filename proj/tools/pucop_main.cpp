#include "puc/cli_commands.hpp"

int main(int argc, char** argv) { return puc::run_cli(argc, argv); }
