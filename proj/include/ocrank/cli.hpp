#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ocrank/partitions.hpp"
#include "ocrank/qseries.hpp"

namespace ocrank {

// Exit codes: 0 success, 1 verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string counts_to_json(const CountTable& table);
std::string counts_to_tsv(const CountTable& table);
std::string series_to_text(const QSeries& s);
std::string series_to_json(const std::string& name, const QSeries& s);
// TSV reproduction of the worked tables for overpartitions of 3 and 4.
std::string render_table(int which);

}  // namespace ocrank
