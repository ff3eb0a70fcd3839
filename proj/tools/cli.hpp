#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace urnmax::cli {

/// Integers from "2..5,7" style lists.
std::vector<int> parse_int_list(const std::string& text);

/// Comma-separated reals; each entry may be a decimal or "a/b".
std::vector<double> parse_real_list(const std::string& text);

/// Entry point without argv[0]. Exit codes: 0 ok, 1 usage or parameter error, 2 failed check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urnmax::cli
