#include "delta_riemann/cli_io.hpp"

int main(int argc, char** argv) { return delta_riemann::run_cli(argc, argv); }
