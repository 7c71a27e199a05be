// Command-line driver for the knot-mosaic counting library.
//
// Exit codes: 0 success; 1 a cross-check or verification failed; 2 usage,
// parse, or size-limit error; 3/4 classification results of `validate`
// (suitably connected but open at the boundary / not suitably connected).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mosaic/bounds.hpp"
#include "mosaic/count.hpp"
#include "mosaic/grid.hpp"
#include "mosaic/oracle.hpp"
#include "mosaic/transfer.hpp"
#include "mosaic/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mosaic::BigInt closed_form_count(int m, int n) {
    if (m > 2) throw std::domain_error("closed form needs a side of at most 2");
    return m == 1 ? mosaic::BigInt(1) : mosaic::BigInt(mosaic::BigInt(1) << (n - 1));
}

int run_count(int m, int n, const std::string& method) {
    if (m < 1 || n < 1) throw std::domain_error("grid dimensions must be at least 1x1");
    if (n < m) std::swap(m, n);  // counts are transpose-symmetric
    mosaic::BigInt value;
    if (method == "auto")
        value = mosaic::count_auto(m, n).value;
    else if (method == "closed")
        value = closed_form_count(m, n);
    else if (method == "frontier")
        value = mosaic::count_frontier(m, n);
    else if (method == "transfer")
        value = mosaic::count_transfer(m, n);
    else if (method == "backtrack")
        value = mosaic::count_backtrack(m, n);
    else
        throw std::invalid_argument("unknown method '" + method + "'");
    std::cout << value.get_str() << "\n";
    return 0;
}

int run_table(int max_n, const std::string& format) {
    auto rows = mosaic::growth_table(max_n);
    if (format == "csv") {
        std::cout << "n,D_n,d_n\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << r.count.get_str() << ","
                      << mosaic::format_fixed(r.root, 6) << "\n";
        return 0;
    }
    std::size_t count_width = 3;
    for (const auto& r : rows) count_width = std::max(count_width, r.count.get_str().size());
    std::printf("%2s  %*s  %s\n", "n", int(count_width), "D_n", "d_n");
    for (const auto& r : rows)
        std::printf("%2d  %*s  %s\n", r.n, int(count_width), r.count.get_str().c_str(),
                    mosaic::format_fixed(r.root, 6).c_str());
    return 0;
}

int run_bounds(int max_n, const std::string& format) {
    if (max_n < 3) throw std::domain_error("bounds start at n = 3");
    struct Row {
        int n;
        std::string lower, hlo, count, hhi, upper;
    };
    std::vector<Row> rows;
    for (int n = 3; n <= max_n; ++n) {
        mosaic::RationalBounds h = mosaic::hllo_bounds(n);
        rows.push_back({n, mosaic::lower_bound_count(n).get_str(), h.lo.get_str(),
                        mosaic::count_auto(n, n).value.get_str(), h.hi.get_str(),
                        mosaic::upper_bound_count(n).get_str()});
    }
    if (format == "csv") {
        std::cout << "n,lower,hllo_lower,count,hllo_upper,upper\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << r.lower << "," << r.hlo << "," << r.count << "," << r.hhi
                      << "," << r.upper << "\n";
        return 0;
    }
    const char* names[5] = {"lower", "hllo_lower", "count", "hllo_upper", "upper"};
    std::size_t w[5] = {};
    for (int i = 0; i < 5; ++i) w[i] = std::string(names[i]).size();
    for (const auto& r : rows) {
        const std::string* f[5] = {&r.lower, &r.hlo, &r.count, &r.hhi, &r.upper};
        for (int i = 0; i < 5; ++i) w[i] = std::max(w[i], f[i]->size());
    }
    std::printf("%2s", "n");
    for (int i = 0; i < 5; ++i) std::printf("  %*s", int(w[i]), names[i]);
    std::printf("\n");
    for (const auto& r : rows) {
        const std::string* f[5] = {&r.lower, &r.hlo, &r.count, &r.hhi, &r.upper};
        std::printf("%2d", r.n);
        for (int i = 0; i < 5; ++i) std::printf("  %*s", int(w[i]), f[i]->c_str());
        std::printf("\n");
    }
    return 0;
}

int run_delta(int precision) {
    mosaic::DeltaBounds b = mosaic::delta_bounds(precision);
    std::cout << b.lower << " <= delta <= " << b.upper << "\n";
    return 0;
}

int run_verify(int max_m, int max_n, long area) {
    mosaic::VerifyLimits limits;
    limits.max_m = max_m;
    limits.max_n = max_n;
    limits.exhaustive_area = area;
    auto results = mosaic::run_verification(limits);
    for (const auto& r : results) {
        if (r.pass)
            std::cout << "PASS " << r.name << "\n";
        else
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
    }
    return mosaic::all_passed(results) ? 0 : 1;
}

int run_validate(const std::string& path) {
    mosaic::Mosaic m = mosaic::parse_mosaic(read_file(path));
    if (mosaic::is_knot_mosaic(m)) {
        std::cout << "knot-mosaic\n";
        return 0;
    }
    if (mosaic::is_suitably_connected(m)) {
        std::cout << "suitably-connected\n";
        return 3;
    }
    std::cout << "invalid\n";
    return 4;
}

int run_render(const std::string& path, bool pretty) {
    mosaic::Mosaic m = mosaic::parse_mosaic(read_file(path));
    std::cout << mosaic::render_mosaic(m, pretty);
    return 0;
}

int run_enumerate(int m, int n, std::uint64_t limit, bool has_limit) {
    auto all = mosaic::enumerate_knot_mosaics(
        m, n, has_limit ? std::optional<std::uint64_t>(limit) : std::nullopt);
    bool first = true;
    for (const auto& mo : all) {
        if (!first) std::cout << "\n";
        first = false;
        std::cout << mosaic::render_mosaic(mo);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting, bounds and enumeration for knot mosaics"};
    app.require_subcommand(1);
    int exit_code = 0;

    int m = 0, n = 0;
    std::string method = "auto";
    auto* count = app.add_subcommand("count", "count knot mosaics on an m x n grid");
    count->add_option("-m,--rows", m, "grid rows")->required();
    count->add_option("-n,--cols", n, "grid columns")->required();
    count->add_option("--method", method, "auto|closed|frontier|transfer|backtrack")
        ->check(CLI::IsMember({"auto", "closed", "frontier", "transfer", "backtrack"}));
    count->callback([&] { exit_code = run_count(m, n, method); });

    int table_max_n = 9;
    std::string table_format = "plain";
    auto* table = app.add_subcommand("table", "square-grid counts and growth roots");
    table->add_option("--max-n", table_max_n, "largest grid size (default 9)");
    table->add_option("--format", table_format, "plain|csv")
        ->check(CLI::IsMember({"plain", "csv"}));
    table->callback([&] { exit_code = run_table(table_max_n, table_format); });

    int bounds_max_n = 9;
    std::string bounds_format = "plain";
    auto* bounds = app.add_subcommand("bounds", "bounding families around the square counts");
    bounds->add_option("--max-n", bounds_max_n, "largest grid size (default 9)");
    bounds->add_option("--format", bounds_format, "plain|csv")
        ->check(CLI::IsMember({"plain", "csv"}));
    bounds->callback([&] { exit_code = run_bounds(bounds_max_n, bounds_format); });

    int precision = 6;
    auto* delta = app.add_subcommand("delta", "bounds on the growth constant");
    delta->add_option("--precision", precision, "decimal digits (1..50, default 6)");
    delta->callback([&] { exit_code = run_delta(precision); });

    int vmax_m = 6, vmax_n = 8;
    long varea = 12;
    auto* verify = app.add_subcommand("verify", "cross-check the counting engines");
    verify->add_option("--max-m", vmax_m, "strip height limit (default 6)");
    verify->add_option("--max-n", vmax_n, "strip width limit (default 8)");
    verify->add_option("--area", varea, "exhaustive-search area limit (default 12)");
    verify->callback([&] { exit_code = run_verify(vmax_m, vmax_n, varea); });

    std::string path;
    auto* validate = app.add_subcommand("validate", "classify a tile grid file");
    validate->add_option("file", path, "grid file")->required();
    validate->callback([&] { exit_code = run_validate(path); });

    bool pretty = false;
    std::string render_path;
    auto* render = app.add_subcommand("render", "echo a grid file (optionally as glyphs)");
    render->add_option("file", render_path, "grid file")->required();
    render->add_flag("--pretty", pretty, "one box-drawing glyph per tile");
    render->callback([&] { exit_code = run_render(render_path, pretty); });

    int em = 0, en = 0;
    std::uint64_t limit = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list knot mosaics in lexicographic order");
    enumerate->add_option("-m,--rows", em, "grid rows")->required();
    enumerate->add_option("-n,--cols", en, "grid columns")->required();
    auto* limit_opt = enumerate->add_option("--limit", limit, "stop after this many");
    enumerate->callback([&] { exit_code = run_enumerate(em, en, limit, !limit_opt->empty()); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mosaic::CrossCheckError& e) {
        std::cerr << "cross-check failed: " << e.what() << "\n";
        return 1;
    } catch (const mosaic::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mosaic::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
