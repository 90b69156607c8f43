#include "hill/cli.hpp"

int main(int argc, char** argv) { return hill::cli::run(argc, argv); }
