// SPDX-License-Identifier: Apache-2.0
//
// bandspec: Monte Carlo laboratory for random Hermitian finite-band matrices
// Copyright (C) 2026 The bandspec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bandspec/harness.hpp"

namespace bandspec::detail {

// Shortest text that round-trips the double; empty for NaN.
std::string format_number(double x);
std::string format_number(std::size_t x);

/// CSV file with '#'-prefixed metadata lines and one header row.
class CsvWriter
{
  public:
    CsvWriter(std::filesystem::path path, ExperimentConfig const& cfg, std::vector<std::string> columns,
              std::vector<std::string> extra_meta = {});

    void row(std::vector<std::string> const& cells);
    std::filesystem::path const& path() const { return path_; }
    std::vector<std::string> const& columns() const { return columns_; }

  private:
    std::filesystem::path path_;
    std::vector<std::string> columns_;
    std::ofstream out_;
};

// Writes <csv>.gp plotting column `y` against column `x` (1-based).
std::filesystem::path write_gnuplot(std::filesystem::path const& csv, std::string const& xlabel,
                                    std::string const& ylabel, int x, int y, bool with_errorbars);

} // namespace bandspec::detail
