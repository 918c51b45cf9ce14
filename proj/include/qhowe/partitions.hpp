#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhowe {

/// A strictly decreasing list of positive integers.  The empty partition is
/// a valid value (length 0, size 0); trailing zeros are never stored.
class StrictPartition {
public:
    StrictPartition() = default;

    explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("StrictPartition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
                throw std::invalid_argument("StrictPartition: parts must be strictly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
    bool operator!=(const StrictPartition& o) const { return parts_ != o.parts_; }
    bool operator<(const StrictPartition& o) const { return parts_ < o.parts_; }

    /// CLI syntax: comma-separated decreasing integers, e.g. "3,1".
    /// The empty partition is "" or the literal "0".
    std::string to_string() const;
    static StrictPartition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

/// All strict partitions of `size` with length <= max_length, in decreasing
/// lexicographic order.
std::vector<StrictPartition> strict_partitions(int size, int max_length = -1);

/// Parity indicator of a partition length: 0 for even, 1 for odd.
inline int delta(int l) { return l & 1; }

} // namespace qhowe
