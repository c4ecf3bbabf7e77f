#include "emit.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/textio.hpp"

namespace hecke::cli {

std::string json_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

Cell cell_int(std::string key, long long value) {
    const std::string digits = std::to_string(value);
    return {std::move(key), digits, digits};
}

Cell cell_big(std::string key, const Int& value) {
    const std::string digits = value.str();
    return {std::move(key), digits, digits};
}

Cell cell_bool(std::string key, bool value) {
    const std::string text = value ? "true" : "false";
    return {std::move(key), text, text};
}

Cell cell_text(std::string key, const std::string& value) {
    return {std::move(key), json_quote(value), value};
}

Cell cell_partition(std::string key, const Partition& value) {
    std::string json = "[";
    for (int i = 0; i < value.length(); ++i) {
        if (i > 0)
            json += ',';
        json += std::to_string(value.parts()[i]);
    }
    json += ']';
    return {std::move(key), std::move(json), format_partition(value)};
}

Cell cell_partition_absent(std::string key) {
    Cell cell{std::move(key), "null", ""};
    cell.json_omitted = true;
    return cell;
}

Cell cell_int_list(std::string key, const std::vector<int>& values) {
    std::string json = "[";
    std::string text;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            json += ',';
            text += ';';
        }
        json += std::to_string(values[i]);
        text += std::to_string(values[i]);
    }
    json += ']';
    return {std::move(key), std::move(json), std::move(text)};
}

Cell cell_poly(std::string key, const IntPolynomial& value) {
    std::string json = "[";
    for (int e = 0; e <= value.degree(); ++e) {
        if (e > 0)
            json += ',';
        json += value.coefficient(e).str();
    }
    json += ']';
    return {std::move(key), std::move(json), value.to_string()};
}

Cell cell_coefficients(std::string key, const IntPolynomial& value, int degree_bound) {
    std::string json = "[";
    std::string text;
    for (int e = 0; e <= degree_bound; ++e) {
        if (e > 0) {
            json += ',';
            text += ';';
        }
        const std::string digits = value.coefficient(e).str();
        json += digits;
        text += digits;
    }
    json += ']';
    return {std::move(key), std::move(json), std::move(text)};
}

Cell cell_exponent_map(std::string key, const std::map<int, int>& exponents) {
    std::string json = "{";
    std::string text;
    bool first = true;
    for (const auto& [base, exponent] : exponents) {
        if (!first) {
            json += ',';
            text += ' ';
        }
        first = false;
        json += json_quote(std::to_string(base)) + ":" + std::to_string(exponent);
        text += std::to_string(base) + "^" + std::to_string(exponent);
    }
    json += '}';
    if (text.empty())
        text = "1"; // empty product
    return {std::move(key), std::move(json), std::move(text)};
}

Cell cell_support(std::string key, const SupportDatum& support) {
    std::ostringstream json;
    json << "{\"d\":" << support.d << ",\"l\":" << support.l << ",\"a\":" << support.a
         << ",\"s\":" << support.s << ",\"dim\":" << support.dim << "}";
    std::ostringstream text;
    text << "d=" << support.d << " l=" << support.l << " a=" << support.a
         << " s=" << support.s << " dim=" << support.dim;
    return {std::move(key), json.str(), text.str()};
}

Cell cell_null(std::string key) {
    return {std::move(key), "null", "inf"};
}

std::string row_to_json(const Row& row) {
    std::string out = "{";
    bool first = true;
    for (const Cell& cell : row.cells) {
        if (cell.json_omitted)
            continue;
        if (!first)
            out += ',';
        first = false;
        out += json_quote(cell.key) + ":" + cell.json;
    }
    return out + "}";
}

namespace {

std::string csv_escape(const std::string& text) {
    const bool needs_quotes =
        text.find_first_of(",\"\n") != std::string::npos ||
        (!text.empty() && (text.front() == ' ' || text.back() == ' '));
    if (!needs_quotes)
        return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

void emit_rows(std::ostream& out, Format format, const std::vector<Row>& rows) {
    if (format == Format::json) {
        for (const Row& row : rows)
            out << row_to_json(row) << "\n";
        return;
    }
    if (rows.empty())
        return;
    const Row& head = rows.front();
    if (format == Format::csv) {
        for (size_t i = 0; i < head.cells.size(); ++i)
            out << (i ? "," : "") << csv_escape(head.cells[i].key);
        out << "\n";
        for (const Row& row : rows) {
            for (size_t i = 0; i < row.cells.size(); ++i)
                out << (i ? "," : "") << csv_escape(row.cells[i].text);
            out << "\n";
        }
        return;
    }
    // table: header plus aligned columns, two-space gutters
    std::vector<size_t> widths(head.cells.size());
    for (size_t i = 0; i < head.cells.size(); ++i)
        widths[i] = head.cells[i].key.size();
    for (const Row& row : rows)
        for (size_t i = 0; i < row.cells.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row.cells[i].text.size());
    auto print_line = [&](auto&& get) {
        std::string line;
        for (size_t i = 0; i < widths.size(); ++i) {
            std::string value = get(i);
            if (i + 1 < widths.size())
                value.resize(widths[i], ' ');
            line += value;
            if (i + 1 < widths.size())
                line += "  ";
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << "\n";
    };
    print_line([&](size_t i) { return head.cells[i].key; });
    for (const Row& row : rows)
        print_line([&](size_t i) { return i < row.cells.size() ? row.cells[i].text : std::string(); });
}

} // namespace hecke::cli
