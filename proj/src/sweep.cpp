#include "optlink/sweep.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "optlink/units.hpp"

namespace optlink::sweep {

namespace {

double grid_point(const SweepSpec& spec, int i) {
    if (i == spec.steps - 1) {
        return spec.stop;
    }
    return spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
}

std::optional<double> eval_cell(const SweepSpec& spec, double x, std::size_t family) {
    try {
        return spec.eval(x, family);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

SweepTable make_table_shell(const SweepSpec& spec) {
    validate(spec);
    SweepTable t;
    t.preset_id = spec.preset_id;
    t.x_name = spec.x_name;
    t.start = spec.start;
    t.stop = spec.stop;
    t.config_digest = spec.config_digest;
    t.family_labels = spec.family_labels;
    t.xs.resize(spec.steps);
    for (int i = 0; i < spec.steps; ++i) {
        t.xs[i] = grid_point(spec, i);
    }
    t.cells.assign(spec.steps,
                   std::vector<std::optional<double>>(spec.family_labels.size()));
    return t;
}

}  // namespace

void validate(const SweepSpec& spec) {
    if (!(spec.start < spec.stop)) {
        detail::fail_domain("sweep range requires start < stop");
    }
    if (spec.steps < 2) {
        detail::fail_domain("sweep requires at least 2 steps");
    }
    if (spec.family_labels.empty()) {
        detail::fail_domain("sweep requires a non-empty family");
    }
    if (!spec.eval) {
        detail::fail_domain("sweep target operation is not set");
    }
}

SweepTable run_sweep_serial(const SweepSpec& spec) {
    SweepTable t = make_table_shell(spec);
    const std::size_t families = spec.family_labels.size();
    for (int row = 0; row < spec.steps; ++row) {
        for (std::size_t f = 0; f < families; ++f) {
            t.cells[row][f] = eval_cell(spec, t.xs[row], f);
        }
    }
    return t;
}

SweepTable run_sweep(const SweepSpec& spec) {
    SweepTable t = make_table_shell(spec);
    const std::size_t families = spec.family_labels.size();
    const long long total = static_cast<long long>(spec.steps) * families;
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        const long long row = idx / static_cast<long long>(families);
        const std::size_t f = static_cast<std::size_t>(idx % families);
        t.cells[row][f] = eval_cell(spec, t.xs[row], f);
    }
    return t;
}

std::vector<std::string> SweepTable::headers() const {
    std::vector<std::string> h;
    h.reserve(1 + family_labels.size());
    h.push_back(x_name);
    h.insert(h.end(), family_labels.begin(), family_labels.end());
    return h;
}

std::string format_double(double v) {
    if (v == 0.0) {
        v = 0.0;  // normalize -0
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string digest_hex(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* hexd = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hexd[h & 0xf];
        h >>= 4;
    }
    return std::string(buf, 16);
}

std::string to_csv(const SweepTable& table) {
    std::string out;
    out += "# preset=" + table.preset_id + "\n";
    out += "# x=" + table.x_name + " start=" + format_double(table.start) +
           " stop=" + format_double(table.stop) + " steps=" + std::to_string(table.steps()) +
           "\n";
    out += "# config=" + table.config_digest + "\n";
    const auto headers = table.headers();
    for (std::size_t i = 0; i < headers.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += headers[i];
    }
    out += '\n';
    for (int row = 0; row < table.steps(); ++row) {
        out += format_double(table.xs[row]);
        for (const auto& cell : table.cells[row]) {
            out += ',';
            out += cell ? format_double(*cell) : "NA";
        }
        out += '\n';
    }
    return out;
}

namespace {

std::size_t column_index(const SweepTable& table, const std::string& name) {
    const auto headers = table.headers();
    for (std::size_t i = 0; i < headers.size(); ++i) {
        if (headers[i] == name) {
            return i;
        }
    }
    detail::fail_domain("trend check references unknown column '" + name + "'");
}

// column 0 is x; table cells are offset by one
std::optional<double> value_at(const SweepTable& table, int row, std::size_t col) {
    if (col == 0) {
        return table.xs[row];
    }
    return table.cells[row][col - 1];
}

TrendCheck run_check(const SweepTable& table, const TrendExpectation& e) {
    TrendCheck c;
    c.expectation = e;
    c.pass = true;

    const auto fail = [&](int row, std::string msg) {
        c.pass = false;
        c.first_violation_row = row;
        c.message = std::move(msg);
    };

    if (e.kind == TrendExpectation::Kind::kMonotonicInX) {
        const std::size_t col = column_index(table, e.column);
        for (int row = 1; row < table.steps() && c.pass; ++row) {
            const auto prev = value_at(table, row - 1, col);
            const auto cur = value_at(table, row, col);
            if (!prev || !cur) {
                fail(row, "non-numeric cell in column " + e.column);
                break;
            }
            const double delta =
                e.direction == TrendExpectation::Direction::kIncreasing ? *cur - *prev
                                                                        : *prev - *cur;
            const bool ok = e.strict ? delta > e.tie_tolerance : delta >= -e.tie_tolerance;
            if (!ok) {
                std::ostringstream os;
                os << e.column << " not "
                   << (e.direction == TrendExpectation::Direction::kIncreasing ? "increasing"
                                                                               : "decreasing")
                   << " at row " << row;
                fail(row, os.str());
            }
        }
    } else {
        const std::size_t hi = column_index(table, e.column);
        const std::size_t lo = column_index(table, e.lower_column);
        for (int row = 0; row < table.steps() && c.pass; ++row) {
            const auto upper = value_at(table, row, hi);
            const auto lower = value_at(table, row, lo);
            if (!upper || !lower) {
                fail(row, "non-numeric cell in ordered columns");
                break;
            }
            const double delta = *upper - *lower;
            const bool ok = e.strict ? delta > e.tie_tolerance : delta >= -e.tie_tolerance;
            if (!ok) {
                std::ostringstream os;
                os << e.column << " not above " << e.lower_column << " at row " << row;
                fail(row, os.str());
            }
        }
    }
    return c;
}

}  // namespace

TrendReport check_trends(const SweepTable& table,
                         const std::vector<TrendExpectation>& expectations) {
    TrendReport report;
    report.checks.reserve(expectations.size());
    for (const auto& e : expectations) {
        report.checks.push_back(run_check(table, e));
        report.all_pass = report.all_pass && report.checks.back().pass;
    }
    return report;
}

std::string format_trend_report(const SweepTable& table, const TrendReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << "trend " << table.preset_id << " fact" << c.expectation.fact_id << ": "
           << c.expectation.label << " ... " << (c.pass ? "PASS" : "FAIL");
        if (!c.pass) {
            os << " (" << c.message << ")";
        }
        os << "\n";
    }
    os << "trend " << table.preset_id << " overall: " << (report.all_pass ? "PASS" : "FAIL")
       << "\n";
    return os.str();
}

}  // namespace optlink::sweep
