#include "trip_cli/cli.hpp"

int main(int argc, char** argv) { return trip::cli::run(argc, argv); }
