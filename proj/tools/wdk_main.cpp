#include "wdk/cli.hpp"

int main(int argc, char** argv) { return wdk::cli::run(argc, argv); }
