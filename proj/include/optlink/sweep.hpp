#ifndef OPTLINK_SWEEP_HPP
#define OPTLINK_SWEEP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

// 1-D parameter sweep engine. A sweep evaluates a target quantity over a
// uniform grid for each member of a small "family" (the second parameter
// that distinguishes curves), producing a table that serializes to CSV.
//
// Grid cells are independent, so the default runner evaluates them with an
// OpenMP parallel loop; run_sweep_serial is the reference implementation the
// tests compare against. Rows are assembled by grid index either way, so the
// output is identical regardless of scheduling.

namespace optlink::sweep {

// A monotonic-trend or curve-ordering claim about a sweep table, checked
// after the sweep runs. fact_id ties the expectation to the numbered
// observed-trend claims the figure presets reproduce.
struct TrendExpectation {
    enum class Kind { kMonotonicInX, kRowwiseOrder };
    enum class Direction { kIncreasing, kDecreasing };

    Kind kind = Kind::kMonotonicInX;
    std::string column;        // y column under test (kMonotonicInX), or the
                               // column required to be larger (kRowwiseOrder)
    std::string lower_column;  // kRowwiseOrder only: column required smaller
    Direction direction = Direction::kIncreasing;
    bool strict = true;
    double tie_tolerance = 0.0;
    int fact_id = 0;
    std::string label;
};

struct SweepSpec {
    std::string preset_id = "custom";
    std::string x_name;
    double start = 0.0;
    double stop = 1.0;
    int steps = 2;
    std::vector<std::string> family_labels;
    // eval(x, family_index); a std::domain_error marks the cell NA.
    std::function<double(double, std::size_t)> eval;
    std::string config_digest;
    std::vector<TrendExpectation> expectations;
};

void validate(const SweepSpec& spec);

struct SweepTable {
    std::string preset_id;
    std::string x_name;
    double start = 0.0;
    double stop = 1.0;
    std::string config_digest;
    std::vector<std::string> family_labels;
    std::vector<double> xs;
    // cells[row][family]; empty optional = domain error at that grid point
    std::vector<std::vector<std::optional<double>>> cells;

    std::vector<std::string> headers() const;
    int steps() const { return static_cast<int>(xs.size()); }
};

SweepTable run_sweep(const SweepSpec& spec);
SweepTable run_sweep_serial(const SweepSpec& spec);

/// CSV serialization: '#'-prefixed metadata lines, a header row, one row per
/// grid point, ',' delimiter, '.' decimal point, NA for error cells, '\n'
/// line ends, no trailing delimiter. Shortest-round-trip float formatting
/// keeps the output byte-deterministic.
std::string to_csv(const SweepTable& table);

/// Shortest decimal representation that round-trips the double.
std::string format_double(double v);

/// FNV-1a 64-bit hex digest, used to fingerprint sweep configurations.
std::string digest_hex(std::string_view data);

struct TrendCheck {
    TrendExpectation expectation;
    bool pass = false;
    int first_violation_row = -1;
    std::string message;
};

struct TrendReport {
    std::vector<TrendCheck> checks;
    bool all_pass = true;
};

TrendReport check_trends(const SweepTable& table,
                         const std::vector<TrendExpectation>& expectations);

std::string format_trend_report(const SweepTable& table, const TrendReport& report);

}  // namespace optlink::sweep

#endif  // OPTLINK_SWEEP_HPP
