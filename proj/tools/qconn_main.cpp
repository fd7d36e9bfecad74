#include <vector>

#include "qconn/cli.hpp"

int main(int argc, char** argv) {
    return qconn::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
