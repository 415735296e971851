#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/commands.hpp"
#include "core/specfile.hpp"
#include "doctest.h"

using namespace striphardy;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".json";
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path temp_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("striphardy_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("spec file loading") {
    LoadedSpec two_zeros = load_spec_file(fixture("z2_midline_pair"));
    CHECK(two_zeros.spec.blaschke.total_count() == 2);
    CHECK_FALSE(two_zeros.square_root);

    LoadedSpec root = load_spec_file(fixture("h_midline"));
    CHECK(root.square_root);

    CHECK_THROWS_AS((void)load_spec_file(fixture("bad_unpaired")), Error);
    CHECK_THROWS_AS((void)load_spec_json("{ not json"), Error);
    try {
        (void)load_spec_json("{ \"outer\": [1,2] ");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse_error);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("cmd_analyze reports and exit codes") {
    CommandOptions opt;
    opt.grid_size = 512;

    ReportBundle two = cmd_analyze(fixture("z2_midline_pair"), opt);
    CHECK(two.exit_code == 0);
    CHECK(two.text.find("indices: (1,1)") != std::string::npos);

    ReportBundle outer = cmd_analyze(fixture("z0_outer_const"), opt);
    CHECK(outer.text.find("indices: (0,0); essentially self-adjoint") != std::string::npos);
    CHECK(outer.text.find("perturbation criterion: passes") != std::string::npos);

    ReportBundle atomic = cmd_analyze(fixture("z0_atomic"), opt);
    CHECK(atomic.text.find("indices: (inf,inf)") != std::string::npos);

    ReportBundle undecided = cmd_analyze(fixture("z0_outer_undeclared"), opt);
    CHECK(undecided.text.find("indices: not determined") != std::string::npos);

    std::string err;
    fs::path dir = temp_dir("analyze_parse");
    CommandOptions opt_out = opt;
    opt_out.out_dir = dir.string();
    const int code = run_command("analyze", fixture("does_not_exist"), opt_out, &err);
    CHECK(code == 3);
    CHECK_FALSE(err.empty());
    CHECK_FALSE(fs::exists(dir / "report.txt"));  // nothing written on parse failure
}

TEST_CASE("cmd_deficiency basis table") {
    CommandOptions opt;
    opt.grid_size = 512;

    ReportBundle one = cmd_deficiency(fixture("z1_midline"), opt);
    CHECK(one.exit_code == 0);
    REQUIRE_FALSE(one.tables.empty());
    const CsvTable& basis = one.tables.front();
    CHECK(basis.name == "basis");
    REQUIRE(basis.rows.size() == 1);
    CHECK(basis.rows[0][1] == "+i");
    CHECK(std::stod(basis.rows[0][2]) <= 1e-6);
    CHECK(basis.rows[0][3] == "1");

    ReportBundle none = cmd_deficiency(fixture("z0_outer_const"), opt);
    CHECK(none.exit_code == 0);
    CHECK(none.text.find("deficiency basis: empty") != std::string::npos);

    CommandOptions atom_opt = opt;
    atom_opt.n_list = {0, 1};
    ReportBundle atoms = cmd_deficiency(fixture("z0_atomic"), atom_opt);
    const CsvTable& t = atoms.tables.front();
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][1] == "+i");
    CHECK(t.rows[1][1] == "-i");
    CHECK(atoms.text.find("direct identity residual") != std::string::npos);

    ReportBundle trunc = cmd_deficiency(fixture("zinf_midline"), opt);
    CHECK(trunc.text.find("truncated") != std::string::npos);
}

TEST_CASE("cmd_split audits") {
    CommandOptions opt;
    opt.grid_size = 256;

    ReportBundle c2 = cmd_split(fixture("f_const_two_not_root"), opt);
    CHECK(c2.exit_code == 0);
    REQUIRE(c2.tables.size() == 2);
    CHECK(c2.tables[0].name == "f_minus");
    CHECK(c2.tables[1].name == "f_plus");

    ReportBundle gs = cmd_split(fixture("z0_outer_gauss"), opt);
    CHECK(gs.exit_code == 0);
}

TEST_CASE("cmd_extend") {
    CommandOptions opt;
    opt.grid_size = 512;

    ReportBundle not_root = cmd_extend(fixture("f_const_two_not_root"), opt);
    CHECK(not_root.exit_code == 2);
    CHECK(not_root.text.find("canonical extension requires f = h^2") != std::string::npos);

    ReportBundle one = cmd_extend(fixture("h_one"), opt);
    CHECK(one.exit_code == 0);
    CHECK(one.text.find("in_domain: true") != std::string::npos);

    CommandOptions sq = opt;
    sq.function_spec = "square";
    ReportBundle mid = cmd_extend(fixture("h_midline"), sq);
    CHECK(mid.exit_code == 0);
    CHECK(mid.text.find("square vs identity-twice max deviation") != std::string::npos);
}

TEST_CASE("cmd_profile monotone singular profile") {
    CommandOptions opt;
    ReportBundle prof = cmd_profile(fixture("z0_atomic"), opt);
    CHECK(prof.exit_code == 0);
    REQUIRE(prof.tables.size() == 1);
    const CsvTable& t = prof.tables.front();
    REQUIRE(t.rows.size() == 48);
    double prev = 2.0;
    for (const auto& row : t.rows) {
        const double v = std::stod(row[1]);
        CHECK(v <= prev * 1.0001);
        prev = v;
    }
    CHECK(std::stod(t.rows.back()[1]) <= 1e-30);
}

TEST_CASE("determinism: identical runs produce byte-identical outputs") {
    CommandOptions opt;
    opt.grid_size = 512;
    fs::path d1 = temp_dir("det1"), d2 = temp_dir("det2");
    std::string err;
    CommandOptions o1 = opt, o2 = opt;
    o1.out_dir = d1.string();
    o2.out_dir = d2.string();
    REQUIRE(run_command("analyze", fixture("z2_midline_pair"), o1, &err) == 0);
    REQUIRE(run_command("analyze", fixture("z2_midline_pair"), o2, &err) == 0);
    CHECK(slurp(d1 / "report.txt") == slurp(d2 / "report.txt"));
    CHECK(slurp(d1 / "boundary.csv") == slurp(d2 / "boundary.csv"));
    // RFC 4180: CRLF rows and a header line
    const std::string csv = slurp(d1 / "boundary.csv");
    CHECK(csv.rfind("theta,re_f0,im_f0,re_fpi,im_fpi\r\n", 0) == 0);
}
