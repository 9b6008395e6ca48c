#include "ba/cli.hpp"

int main(int argc, char** argv) { return ba::run_cli(argc, argv); }
