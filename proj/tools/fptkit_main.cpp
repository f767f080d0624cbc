#include "fptkit/cli.hpp"

int main(int argc, char** argv) { return fptkit::run_cli(argc, argv); }
