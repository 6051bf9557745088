#include "eulab/cli.hpp"

int main(int argc, char** argv) { return eulab::run_cli(argc, argv); }
