#include "cosetlab/cli/dispatch.hpp"

int main(int argc, char** argv) { return cosetlab::cli::dispatch(argc, argv); }
