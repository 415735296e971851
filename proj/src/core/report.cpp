#include "report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "error.hpp"

namespace striphardy {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_int(long v) { return std::to_string(v); }

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        fail(ErrorCode::invalid_parameter, "CSV row width does not match the header");
    rows.push_back(std::move(cells));
}

std::string CsvTable::render() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c];
    }
    out += "\r\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c];
        }
        out += "\r\n";
    }
    return out;
}

CsvTable boundary_table(const std::string& name, const BoundaryVector& on_0,
                        const BoundaryVector& on_minus_pi) {
    CsvTable t{name, {"theta", "re_f0", "im_f0", "re_fpi", "im_fpi"}, {}};
    for (std::size_t j = 0; j < on_0.grid.size(); ++j) {
        t.add_row({fmt17(on_0.grid.node(j)), fmt17(on_0.samples[j].real()),
                   fmt17(on_0.samples[j].imag()), fmt17(on_minus_pi.samples[j].real()),
                   fmt17(on_minus_pi.samples[j].imag())});
    }
    return t;
}

CsvTable vector_table(const std::string& name, const BoundaryVector& v) {
    CsvTable t{name, {"theta", "re_v", "im_v", "abs_v"}, {}};
    for (std::size_t j = 0; j < v.grid.size(); ++j) {
        t.add_row({fmt17(v.grid.node(j)), fmt17(v.samples[j].real()), fmt17(v.samples[j].imag()),
                   fmt17(std::abs(v.samples[j]))});
    }
    return t;
}

void write_bundle(const ReportBundle& bundle, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) fail(ErrorCode::io_error, "cannot create output directory: " + out_dir);

    const fs::path base(out_dir);
    {
        std::ofstream txt(base / "report.txt", std::ios::binary);
        if (!txt) fail(ErrorCode::io_error, "cannot write report.txt");
        txt << bundle.text;
    }
    for (const CsvTable& t : bundle.tables) {
        std::ofstream csv(base / (t.name + ".csv"), std::ios::binary);
        if (!csv) fail(ErrorCode::io_error, "cannot write " + t.name + ".csv");
        csv << t.render();
    }
}

}  // namespace striphardy
