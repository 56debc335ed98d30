#pragma once

// Wire formats shared by the CLI and the Python module.
//
//   tuple    "1,3,4"
//   TreeVec  {"": 1.0, "0": 0.5, "01": -2}   (bit-string -> number)
//   FinSeq   {"coeffs": [1, 0, 1], "tail": 0} ("tail" optional)
//
// Floats are emitted with 12 significant digits; non-finite values become the
// strings "inf", "-inf" and "nan".

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "jamesgeo/error.hpp"
#include "jamesgeo/interlaced.hpp"
#include "jamesgeo/james_tree.hpp"
#include "jamesgeo/sequence.hpp"

namespace jamesgeo::io {

using nlohmann::json;

/// Number rounded to 12 significant digits, as a JSON value.
json number(double value);
/// "%.12g" text for CSV cells ("inf" for infinity).
std::string format_number(double value);

std::vector<int> parse_int_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);
InterlacedTuple parse_tuple(std::string_view text);

json to_json(const InterlacedTuple& t);  // [1, 3, 4]
json to_json(const TreeVec& x);
json to_json(const FinSeq& x);
json to_json(const Segment& s);  // ["lo", "hi"]

TreeVec tree_vec_from_json(const json& j, std::size_t depth_cap = kDefaultDepthCap);
FinSeq fin_seq_from_json(const json& j);

json read_json_file(const std::string& path);

/// {"error": {"kind": ..., "message": ...}}
json error_object(std::string_view kind, std::string_view message);

/// Minimal CSV writer: a "# config: {...}" comment line, a header, rows.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells);
    std::size_t rows() const noexcept { return rows_.size(); }
    void write(std::ostream& out, const json& config) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace jamesgeo::io
