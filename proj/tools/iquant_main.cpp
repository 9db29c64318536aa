#include "iquant/cli.hpp"

int main(int argc, char** argv) { return iquant::run_cli(argc, argv); }
