#include "banditlab/cli.hpp"

int main(int argc, char** argv) { return banditlab::run_cli(argc, argv); }
