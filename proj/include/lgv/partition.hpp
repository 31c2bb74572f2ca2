#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lgv {

// Weakly decreasing sequence of nonnegative integers.  Trailing zeros are
// significant: the number of parts is the order p of every object built on
// top of the partition, so (3,0) and (3) are different inputs.
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("partition needs at least one part");
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            if (parts_[r] < 0)
                throw std::invalid_argument("partition parts must be nonnegative");
            if (r + 1 < parts_.size() && parts_[r] < parts_[r + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int p() const { return static_cast<int>(parts_.size()); }

    // 1-based, matching the indexing used everywhere else.
    int part(int r) const { return parts_.at(static_cast<std::size_t>(r) - 1); }

    const std::vector<int>& parts() const { return parts_; }

    // componentwise mu_r <= lambda_r; lengths must agree
    bool contains(const Partition& mu) const {
        if (mu.p() != p()) return false;
        for (int r = 1; r <= p(); ++r)
            if (mu.part(r) > part(r)) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            if (r) s += ',';
            s += std::to_string(parts_[r]);
        }
        return s + ")";
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
};

} // namespace lgv
