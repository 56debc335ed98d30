#include "jamesgeo/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace jamesgeo {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Resource: return "resource";
        case ErrorKind::UnsupportedInstance: return "unsupported-instance";
    }
    return "invalid-input";
}

namespace io {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(trim(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

json number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::stod(buffer);
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (const auto& item : split(text)) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size()) {
            throw InvalidInput("not an integer: '" + item + "'");
        }
        out.push_back(value);
    }
    return out;
}

std::vector<double> parse_double_list(std::string_view text) {
    std::vector<double> out;
    for (const auto& item : split(text)) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidInput("not a number: '" + item + "'");
        out.push_back(value);
    }
    return out;
}

InterlacedTuple parse_tuple(std::string_view text) { return InterlacedTuple(parse_int_list(text)); }

json to_json(const InterlacedTuple& t) {
    return json(std::vector<int>(t.entries().begin(), t.entries().end()));
}

json to_json(const TreeVec& x) {
    json out = json::object();
    for (const auto& [s, v] : x.entries()) {
        if (v != 0.0) out[s.bits()] = number(v);
    }
    return out;
}

json to_json(const FinSeq& x) {
    json coeffs = json::array();
    for (double c : x.coeffs()) coeffs.push_back(number(c));
    return {{"coeffs", coeffs}, {"tail", number(x.tail())}};
}

json to_json(const Segment& s) { return json::array({s.lo().bits(), s.hi().bits()}); }

TreeVec tree_vec_from_json(const json& j, std::size_t depth_cap) {
    if (!j.is_object()) throw InvalidInput("TreeVec JSON must be an object of bit-string keys");
    TreeVec out(depth_cap);
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw InvalidInput("TreeVec value for '" + key + "' is not a number");
        out.add(Node(key), value.get<double>());
    }
    return out;
}

FinSeq fin_seq_from_json(const json& j) {
    if (j.is_array()) return FinSeq(j.get<std::vector<double>>());
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw InvalidInput("FinSeq JSON must be {\"coeffs\": [...], \"tail\": t}");
    }
    double tail = 0.0;
    if (j.contains("tail")) {
        if (!j["tail"].is_number()) throw InvalidInput("FinSeq tail must be a number");
        tail = j["tail"].get<double>();
    }
    for (const auto& c : j["coeffs"]) {
        if (!c.is_number()) throw InvalidInput("FinSeq coefficients must be numbers");
    }
    return FinSeq(j["coeffs"].get<std::vector<double>>(), tail);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
    }
}

json error_object(std::string_view kind, std::string_view message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

void CsvTable::add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

void CsvTable::write(std::ostream& out, const json& config) const {
    out << "# config: " << config.dump() << '\n';
    for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << csv_escape(header_[i]);
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
        out << '\n';
    }
}

}  // namespace io
}  // namespace jamesgeo
