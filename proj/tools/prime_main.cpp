#include "prime/cli.hpp"

int main(int argc, char** argv) { return prime::run_cli(argc, argv); }
