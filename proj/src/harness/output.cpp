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

#include "output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace bandspec::detail {

std::string format_number(double x)
{
    if (std::isnan(x))
        return {};
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc())
        throw std::runtime_error("format_number: conversion failed");
    return std::string(buf, ptr);
}

std::string format_number(std::size_t x)
{
    return std::to_string(x);
}

CsvWriter::CsvWriter(std::filesystem::path path, ExperimentConfig const& cfg, std::vector<std::string> columns,
                     std::vector<std::string> extra_meta)
    : path_(std::move(path)), columns_(std::move(columns))
{
    out_.open(path_, std::ios::binary | std::ios::trunc);
    if (!out_)
        throw std::runtime_error("cannot write " + path_.string());
    out_ << "# bandspec " << to_string(cfg.kind) << '\n';
    out_ << "# seed=" << cfg.seed << " config_hash=" << config_hash(cfg) << '\n';
    for (auto const& m : extra_meta)
        out_ << "# " << m << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out_ << (i ? "," : "") << columns_[i];
    out_ << '\n';
}

void CsvWriter::row(std::vector<std::string> const& cells)
{
    if (cells.size() != columns_.size())
        throw std::logic_error("CsvWriter: row width mismatch in " + path_.string());
    for (std::size_t i = 0; i < cells.size(); ++i)
        out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
}

std::filesystem::path write_gnuplot(std::filesystem::path const& csv, std::string const& xlabel,
                                    std::string const& ylabel, int x, int y, bool with_errorbars)
{
    std::filesystem::path script = csv;
    script += ".gp";
    std::ofstream out(script, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + script.string());
    std::filesystem::path png = csv;
    png.replace_extension(".png");
    out << "set datafile separator ','\n"
        << "set datafile commentschars '#'\n"
        << "set key autotitle columnhead\n"
        << "set terminal pngcairo size 900,600\n"
        << "set output '" << png.filename().string() << "'\n"
        << "set xlabel '" << xlabel << "'\n"
        << "set ylabel '" << ylabel << "'\n"
        << "set grid\n";
    out << "plot '" << csv.filename().string() << "' using " << x << ':' << y;
    if (with_errorbars)
        out << ':' << (y + 1) << " with yerrorlines";
    else
        out << " with linespoints";
    out << '\n';
    return script;
}

} // namespace bandspec::detail
