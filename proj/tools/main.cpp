#include "halg/cli.hpp"

int main(int argc, char** argv) { return halg::run_cli(argc, argv); }
