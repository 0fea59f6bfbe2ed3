#include "riesz/pointset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "riesz/error.hpp"

namespace riesz::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view field, std::size_t line) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
        throw ParseError("cannot parse '" + std::string(field) + "' as a number", line);
    if (!std::isfinite(v)) throw ParseError("non-finite coordinate '" + std::string(field) + "'", line);
    return v;
}

// Brings one row onto the sphere, or rejects it.
void settle_row(std::span<double> row, bool renormalize, const std::string& where) {
    double r2 = 0.0;
    for (double c : row) r2 += c * c;
    const double r = std::sqrt(r2);
    const double off = std::abs(r - 1.0);
    if (off <= PointSet::kNormTolerance) return;
    if (off > kReadNormTolerance && !renormalize)
        throw ValidationError(where + ": norm " + format_double(r) + " is not 1 (use renormalization to accept)");
    if (!(r > 0.0)) throw ValidationError(where + ": zero vector cannot be normalized");
    for (double& c : row) c /= r;
}

// "# d=2 n=17" → fills d and n if present.
void parse_header(std::string_view line, std::optional<int>& d, std::optional<std::int64_t>& n, std::size_t lineno) {
    std::istringstream ss{std::string(line.substr(1))};
    std::string tok;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        long long parsed = 0;
        const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), parsed);
        const bool ok = ec == std::errc() && ptr == val.data() + val.size();
        if (key == "d") {
            if (!ok || parsed < 1) throw ParseError("bad header field '" + tok + "'", lineno);
            d = static_cast<int>(parsed);
        } else if (key == "n") {
            if (!ok || parsed < 0) throw ParseError("bad header field '" + tok + "'", lineno);
            n = parsed;
        }
    }
}

PointSet read_csv(std::istream& in, const ReadOptions& opts) {
    std::optional<int> d = opts.d;
    std::optional<std::int64_t> declared_n;
    std::vector<double> coords;
    std::string line;
    std::size_t lineno = 0;
    std::size_t rows = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '#') {
            std::optional<int> header_d;
            parse_header(body, header_d, declared_n, lineno);
            if (header_d) {
                if (opts.d && *opts.d != *header_d)
                    throw ValidationError("header declares d=" + std::to_string(*header_d) +
                                          " but d=" + std::to_string(*opts.d) + " was requested");
                if (rows > 0 && d && *d != *header_d)
                    throw ParseError("header d conflicts with preceding rows", lineno);
                d = header_d;
            }
            continue;
        }

        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            row.push_back(parse_double(body.substr(start, comma - start), lineno));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!d) {
            if (row.size() < 2) throw ParseError("a point needs at least 2 coordinates", lineno);
            d = static_cast<int>(row.size()) - 1;
        }
        if (row.size() != static_cast<std::size_t>(*d) + 1)
            throw ParseError("row has " + std::to_string(row.size()) + " columns, expected " +
                                 std::to_string(*d + 1) + " for d=" + std::to_string(*d),
                             lineno);
        settle_row(row, opts.renormalize, "line " + std::to_string(lineno));
        coords.insert(coords.end(), row.begin(), row.end());
        ++rows;
    }

    if (rows == 0) throw ParseError("no points found", lineno);
    if (declared_n && static_cast<std::size_t>(*declared_n) != rows)
        throw ValidationError("header declares n=" + std::to_string(*declared_n) + " but " +
                              std::to_string(rows) + " rows were read");
    return PointSet(*d, std::move(coords));
}

PointSet read_json(std::istream& in, const ReadOptions& opts) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("points"))
        throw ParseError("JSON point set needs keys \"d\" and \"points\"", 0);
    if (!doc["d"].is_number_integer()) throw ParseError("\"d\" must be an integer", 0);
    const int d = doc["d"].get<int>();
    if (d < 1) throw ValidationError("\"d\" must be >= 1");
    if (opts.d && *opts.d != d)
        throw ValidationError("file declares d=" + std::to_string(d) + " but d=" + std::to_string(*opts.d) +
                              " was requested");
    const auto& pts = doc["points"];
    if (!pts.is_array() || pts.empty()) throw ParseError("\"points\" must be a nonempty array", 0);

    std::vector<double> coords;
    coords.reserve(pts.size() * (static_cast<std::size_t>(d) + 1));
    for (std::size_t j = 0; j < pts.size(); ++j) {
        const auto& p = pts[j];
        if (!p.is_array() || p.size() != static_cast<std::size_t>(d) + 1)
            throw ParseError("point " + std::to_string(j) + " must have " + std::to_string(d + 1) + " coordinates", j + 1);
        std::vector<double> row;
        for (const auto& c : p) {
            if (!c.is_number()) throw ParseError("point " + std::to_string(j) + " has a non-numeric coordinate", j + 1);
            row.push_back(c.get<double>());
        }
        settle_row(row, opts.renormalize, "point " + std::to_string(j));
        coords.insert(coords.end(), row.begin(), row.end());
    }
    return PointSet(d, std::move(coords));
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "auto") return Format::Auto;
    throw ValidationError("unknown format '" + std::string(name) + "' (expected csv, json or auto)");
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

PointSet read_pointset(std::istream& in, const ReadOptions& opts) {
    Format fmt = opts.format;
    if (fmt == Format::Auto) {
        in >> std::ws;
        fmt = in.peek() == '{' ? Format::Json : Format::Csv;
    }
    return fmt == Format::Json ? read_json(in, opts) : read_csv(in, opts);
}

PointSet read_pointset(const std::filesystem::path& path, const ReadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    ReadOptions o = opts;
    if (o.format == Format::Auto && path.extension() == ".json") o.format = Format::Json;
    return read_pointset(in, o);
}

void write_pointset(const PointSet& ps, std::ostream& out, Format format) {
    if (format == Format::Json) {
        nlohmann::json doc;
        doc["d"] = ps.dim();
        auto& pts = doc["points"] = nlohmann::json::array();
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const auto x = ps[j];
            pts.push_back(std::vector<double>(x.begin(), x.end()));
        }
        out << doc.dump() << '\n';
        return;
    }
    out << "# d=" << ps.dim() << " n=" << ps.size() << '\n';
    for (std::size_t j = 0; j < ps.size(); ++j) {
        const auto x = ps[j];
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out << ',';
            out << format_double(x[i]);
        }
        out << '\n';
    }
}

void write_pointset(const PointSet& ps, const std::filesystem::path& path, Format format) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path.string() + "'");
    if (format == Format::Auto) format = path.extension() == ".json" ? Format::Json : Format::Csv;
    write_pointset(ps, out, format);
}

}  // namespace riesz::io
