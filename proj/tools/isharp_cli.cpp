#include "isharp/cli.hpp"

int main(int argc, char** argv) { return isharp::cli::run(argc, argv); }
