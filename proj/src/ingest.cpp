#include "gdptrend/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "gdptrend/error.hpp"

namespace gdptrend::ingest {

PanelDataset::PanelDataset(std::string source, std::string variable, std::string unit, std::string provenance)
    : source_(std::move(source)),
      variable_(std::move(variable)),
      unit_(std::move(unit)),
      provenance_(std::move(provenance)) {}

void PanelDataset::add(AnnualSeries series) {
    if (series.variable() != variable_ || series.unit() != unit_) {
        throw Error(ErrorKind::UnitMismatch, series.country() + ": '" + series.variable() + "' [" +
                                                 series.unit() + "] in a panel of '" + variable_ + "' [" +
                                                 unit_ + "]");
    }
    if (find(series.country()) != nullptr) {
        throw Error(ErrorKind::InvalidArgument, "duplicate country " + series.country());
    }
    series_.push_back(std::move(series));
}

const AnnualSeries* PanelDataset::find(std::string_view country) const noexcept {
    for (const auto& s : series_) {
        if (s.country() == country) return &s;
    }
    return nullptr;
}

std::vector<std::string> PanelDataset::countries() const {
    std::vector<std::string> out;
    for (const auto& s : series_) out.push_back(s.country());
    return out;
}

namespace {

struct Line {
    std::size_t row;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    const auto ws = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<Line> split_lines(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    std::vector<Line> lines;
    std::size_t row = 1;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({row++, line});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    while (!lines.empty() && trim(lines.back().text).empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    while (true) {
        const auto comma = line.find(',');
        cells.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return cells;
}

[[noreturn]] void malformed(std::size_t row, const std::string& what) {
    throw Error(ErrorKind::MalformedCsv, what, row);
}

int parse_int(std::string_view cell, std::size_t row, const char* what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        malformed(row, std::string("bad ") + what + " '" + std::string(cell) + "'");
    }
    return v;
}

double parse_real(std::string_view cell, std::size_t row) {
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(cell.data(), cell.data() + cell.size(), v, std::chars_format::general);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        malformed(row, "bad value '" + std::string(cell) + "'");
    }
    return v;
}

std::vector<Line> body_lines(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) malformed(1, "missing header");
    return lines;
}

void check_blank(const Line& line) {
    if (trim(line.text).empty()) malformed(line.row, "blank line");
}

struct Collected {
    std::vector<AnnualObservation> obs;
    std::map<Year, std::size_t> rows;  // year -> source row, for duplicate detection
};

PanelDataset assemble(std::vector<std::string> order, std::map<std::string, Collected>& data,
                      const PanelOptions& options) {
    PanelDataset panel(options.source, options.variable, options.unit, options.provenance);
    for (const auto& country : order) {
        auto& obs = data[country].obs;
        std::sort(obs.begin(), obs.end(), [](const auto& a, const auto& b) { return a.year < b.year; });
        panel.add(AnnualSeries({country, options.variable, options.unit}, std::move(obs)));
    }
    return panel;
}

void record(Collected& c, const std::string& country, Year year, double value, std::size_t row) {
    if (auto [it, inserted] = c.rows.emplace(year, row); !inserted) {
        malformed(row, "duplicate " + country + " " + std::to_string(year) + " (first at row " +
                           std::to_string(it->second) + ")");
    }
    c.obs.push_back({year, value});
}

PanelDataset parse_long(const std::vector<Line>& lines, const PanelOptions& options) {
    const auto header = split_cells(lines[0].text);
    if (header != std::vector<std::string_view>{"country", "year", "value"}) {
        malformed(lines[0].row, "long header must be country,year,value");
    }
    std::vector<std::string> order;
    std::map<std::string, Collected> data;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        check_blank(lines[i]);
        const auto cells = split_cells(lines[i].text);
        if (cells.size() != 3) malformed(lines[i].row, "expected 3 fields");
        if (cells[0].empty()) malformed(lines[i].row, "empty country");
        std::string country(cells[0]);
        const Year year = parse_int(cells[1], lines[i].row, "year");
        const double value = parse_real(cells[2], lines[i].row);
        if (!data.contains(country)) order.push_back(country);
        record(data[country], country, year, value, lines[i].row);
    }
    return assemble(std::move(order), data, options);
}

PanelDataset parse_wide(const std::vector<Line>& lines, const PanelOptions& options) {
    const auto header = split_cells(lines[0].text);
    if (header.size() < 2 || header[0] != "year") {
        malformed(lines[0].row, "wide header must be year,<country>...");
    }
    std::vector<std::string> order;
    std::map<std::string, Collected> data;
    for (std::size_t c = 1; c < header.size(); ++c) {
        std::string country(header[c]);
        if (country.empty()) malformed(lines[0].row, "empty country column");
        if (data.contains(country)) malformed(lines[0].row, "duplicate column " + country);
        data[country];
        order.push_back(country);
    }
    std::map<Year, std::size_t> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        check_blank(lines[i]);
        const auto cells = split_cells(lines[i].text);
        if (cells.size() != header.size()) {
            malformed(lines[i].row, "expected " + std::to_string(header.size()) + " fields");
        }
        const Year year = parse_int(cells[0], lines[i].row, "year");
        if (auto [it, inserted] = seen.emplace(year, lines[i].row); !inserted) {
            malformed(lines[i].row, "duplicate year " + std::to_string(year));
        }
        for (std::size_t c = 1; c < cells.size(); ++c) {
            if (cells[c].empty()) continue;
            record(data[order[c - 1]], order[c - 1], year, parse_real(cells[c], lines[i].row), lines[i].row);
        }
    }
    return assemble(std::move(order), data, options);
}

std::string shortest(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

PanelDataset parse_annual_csv(std::string_view text, Layout layout, const PanelOptions& options) {
    const auto lines = body_lines(text);
    return layout == Layout::Long ? parse_long(lines, options) : parse_wide(lines, options);
}

Layout detect_layout(std::string_view text) {
    const auto lines = split_lines(text);
    if (!lines.empty() &&
        split_cells(lines[0].text) == std::vector<std::string_view>{"country", "year", "value"}) {
        return Layout::Long;
    }
    return Layout::Wide;
}

MonthlySeries parse_monthly_csv(std::string_view text, std::string variable) {
    const auto lines = body_lines(text);
    if (split_cells(lines[0].text) != std::vector<std::string_view>{"year", "month", "value"}) {
        malformed(lines[0].row, "monthly header must be year,month,value");
    }
    std::vector<MonthlyObservation> obs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        check_blank(lines[i]);
        const auto cells = split_cells(lines[i].text);
        if (cells.size() != 3) malformed(lines[i].row, "expected 3 fields");
        MonthlyObservation o{parse_int(cells[0], lines[i].row, "year"), parse_int(cells[1], lines[i].row, "month"),
                             parse_real(cells[2], lines[i].row)};
        if (o.month < 1 || o.month > 12) {
            throw Error(ErrorKind::MonthOutOfRange, "month " + std::to_string(o.month), lines[i].row);
        }
        if (!obs.empty() && o.index() <= obs.back().index()) {
            throw Error(ErrorKind::OutOfOrderTimestamps,
                        std::to_string(o.year) + "-" + std::to_string(o.month) + " does not follow " +
                            std::to_string(obs.back().year) + "-" + std::to_string(obs.back().month),
                        lines[i].row);
        }
        obs.push_back(o);
    }
    return MonthlySeries(std::move(variable), std::move(obs));
}

PanelDataset splice(const PanelDataset& early, const PanelDataset& late, Year switch_year) {
    // An empty panel carries no data to conflict with.
    if (!early.empty() && !late.empty() &&
        (early.variable() != late.variable() || early.unit() != late.unit())) {
        throw Error(ErrorKind::UnitMismatch, "cannot splice '" + early.variable() + "' [" + early.unit() +
                                                 "] with '" + late.variable() + "' [" + late.unit() + "]");
    }
    const PanelDataset& labels = late.empty() ? early : late;
    PanelDataset out(early.source() + "+" + late.source(), labels.variable(), labels.unit(),
                     "early: " + early.provenance() + "; late: " + late.provenance() + "; switch year " +
                         std::to_string(switch_year));

    std::vector<std::string> order = early.countries();
    for (const auto& c : late.countries()) {
        if (early.find(c) == nullptr) order.push_back(c);
    }
    for (const auto& country : order) {
        std::vector<AnnualObservation> obs;
        if (const auto* e = early.find(country)) {
            for (const auto& o : e->observations()) {
                if (o.year < switch_year) obs.push_back(o);
            }
        }
        if (const auto* l = late.find(country)) {
            for (const auto& o : l->observations()) {
                if (o.year >= switch_year) obs.push_back(o);
            }
        }
        if (obs.empty()) continue;
        out.add(AnnualSeries({country, out.variable(), out.unit()}, std::move(obs)));
    }
    return out;
}

std::vector<CoverageWarning> validate_panel(const PanelDataset& panel, YearWindow required_window,
                                            double min_coverage) {
    std::vector<CoverageWarning> warnings;
    for (const auto& s : panel.series()) {
        const auto present = slice(s, required_window).size();
        const double coverage = static_cast<double>(present) / required_window.length();
        if (coverage < min_coverage) {
            std::ostringstream msg;
            msg << s.country() << ": " << present << " of " << required_window.length() << " years present in "
                << required_window.start << "-" << required_window.end;
            warnings.push_back({s.country(), coverage, msg.str()});
        }
    }
    return warnings;
}

std::string to_long_csv(const PanelDataset& panel) {
    std::string out = "country,year,value\n";
    for (const auto& s : panel.series()) {
        for (const auto& o : s.observations()) {
            out += s.country() + "," + std::to_string(o.year) + "," + shortest(o.value) + "\n";
        }
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path.string());
    return buf.str();
}

PanelDataset load_annual_csv(const std::filesystem::path& path, PanelOptions options) {
    const auto text = read_file(path);
    if (options.provenance.empty()) options.provenance = path.string();
    try {
        return parse_annual_csv(text, detect_layout(text), options);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::MalformedCsv) throw;
        throw Error(e.kind(), path.string() + ": " + e.detail(), e.row());
    }
}

MonthlySeries load_monthly_csv(const std::filesystem::path& path, std::string variable) {
    const auto text = read_file(path);
    try {
        return parse_monthly_csv(text, std::move(variable));
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.detail(), e.row());
    }
}

}  // namespace gdptrend::ingest
