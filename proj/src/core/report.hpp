#pragma once

#include <string>
#include <vector>

#include "grid.hpp"

namespace striphardy {

// RFC 4180 CSV: CRLF line endings, header row always present, numbers with
// 17 significant digits.
struct CsvTable {
    std::string name;                       // file stem, e.g. "basis"
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells);
    std::string render() const;
};

struct ReportBundle {
    std::string text;
    std::vector<CsvTable> tables;
    int exit_code = 0;
};

std::string fmt17(double v);
std::string fmt_int(long v);

// boundary dump: theta, re_f0, im_f0, re_fpi, im_fpi
CsvTable boundary_table(const std::string& name, const BoundaryVector& on_0,
                        const BoundaryVector& on_minus_pi);
// vector dump: theta, re_v, im_v, abs_v
CsvTable vector_table(const std::string& name, const BoundaryVector& v);

// Writes report.txt and every table as <name>.csv under out_dir (created if
// missing). Nothing is written when the bundle is marked as a parse failure.
void write_bundle(const ReportBundle& bundle, const std::string& out_dir);

}  // namespace striphardy
