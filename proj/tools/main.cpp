/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return syrec::cli::run(argc, argv, std::cout, std::cerr);
}
