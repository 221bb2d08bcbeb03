#include "c3m/cli.hpp"

int main(int argc, char** argv) { return c3m::run_cli(argc, argv); }
