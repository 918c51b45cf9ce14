#include "qhowe/partitions.hpp"

#include <sstream>

namespace qhowe {

std::string StrictPartition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

StrictPartition StrictPartition::parse(const std::string& text) {
    if (text.empty() || text == "0") return StrictPartition{};
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("partition: empty component in '" + text + "'");
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("partition: bad component '" + tok + "'");
        parts.push_back(v);
    }
    return StrictPartition(std::move(parts));
}

namespace {

void enumerate(int remaining, int max_part, int slots_left, std::vector<int>& cur,
               std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots_left == 0) return;
    // largest first gives decreasing lexicographic output order
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate(remaining - p, p - 1, slots_left - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<StrictPartition> strict_partitions(int size, int max_length) {
    if (size < 0) throw std::invalid_argument("strict_partitions: negative size");
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    enumerate(size, size, max_length < 0 ? size : max_length, cur, out);
    if (size == 0) {
        out.clear();
        out.emplace_back();
    }
    return out;
}

} // namespace qhowe
