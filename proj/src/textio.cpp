#include "hecke/textio.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace hecke {

namespace {

// Guard against accidental huge inputs; every algorithm here is meant
// for desk-scale partitions.
constexpr long long max_total_size = 1000000;

int parse_int(std::string_view token, const std::string& context) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw usage_error(context + ": bad integer '" + std::string(token) + "'");
    return value;
}

std::vector<int> parse_parts(const std::string& text, const std::string& context) {
    std::vector<int> parts;
    if (text.empty())
        return parts;
    long long total = 0;
    size_t begin = 0;
    while (begin <= text.size()) {
        size_t end = text.find(',', begin);
        if (end == std::string::npos)
            end = text.size();
        std::string_view token(text.data() + begin, end - begin);
        if (token.empty())
            throw usage_error(context + ": empty part in '" + text + "'");
        int value = 0;
        int repeat = 1;
        const size_t caret = token.find('^');
        if (caret == std::string_view::npos) {
            value = parse_int(token, context);
        } else {
            value = parse_int(token.substr(0, caret), context);
            repeat = parse_int(token.substr(caret + 1), context);
            if (repeat < 0)
                throw usage_error(context + ": negative repeat in '" + std::string(token) + "'");
        }
        if (value < 0)
            throw usage_error(context + ": negative part in '" + text + "'");
        total += static_cast<long long>(value) * repeat;
        if (total > max_total_size)
            throw usage_error(context + ": total size exceeds " +
                              std::to_string(max_total_size));
        parts.insert(parts.end(), repeat, value);
        begin = end + 1;
        if (end == text.size())
            break;
    }
    return parts;
}

} // namespace

Partition parse_partition(const std::string& text) {
    try {
        return Partition(parse_parts(text, "partition"));
    } catch (const precondition_error& error) {
        throw usage_error("partition '" + text + "': " + error.what());
    }
}

Composition parse_composition(const std::string& text) {
    try {
        return Composition(parse_parts(text, "composition"));
    } catch (const precondition_error& error) {
        throw usage_error("composition '" + text + "': " + error.what());
    }
}

Bipartition parse_bipartition(const std::string& text) {
    const size_t bar = text.find('|');
    if (bar == std::string::npos)
        throw usage_error("bipartition '" + text + "': missing '|' separator");
    if (text.find('|', bar + 1) != std::string::npos)
        throw usage_error("bipartition '" + text + "': more than one '|'");
    Bipartition bipartition;
    bipartition.left = parse_partition(text.substr(0, bar));
    bipartition.right = parse_partition(text.substr(bar + 1));
    return bipartition;
}

QSpec parse_qspec(const std::string& text) {
    QSpec Q;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        Q.sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    const std::string body = text.substr(pos);
    if (body == "1") {
        Q.power = 0;
    } else if (body == "q") {
        Q.power = 1;
    } else if (body.size() >= 3 && body[0] == 'q' && body[1] == '^') {
        Q.power = parse_int(std::string_view(body).substr(2), "Q parameter");
    } else {
        throw usage_error("Q parameter '" + text + "': expected forms like +q^2, -q^0, q, 1");
    }
    return Q;
}

std::string format_partition(const Partition& lambda) {
    std::ostringstream out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i > 0)
            out << ',';
        out << lambda.parts()[i];
    }
    return out.str();
}

std::string format_composition(const Composition& lambda) {
    std::ostringstream out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i > 0)
            out << ',';
        out << lambda.parts()[i];
    }
    return out.str();
}

std::string format_bipartition(const Bipartition& bipartition) {
    return format_partition(bipartition.left) + "|" + format_partition(bipartition.right);
}

std::string format_qspec(QSpec Q) {
    return std::string(Q.sign < 0 ? "-" : "+") + "q^" + std::to_string(Q.power);
}

} // namespace hecke
