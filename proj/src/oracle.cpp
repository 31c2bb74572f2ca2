#include "lgv/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lgv {

int perm_sign(const Perm& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

Perm identity_perm(int p) {
    Perm w(static_cast<std::size_t>(p));
    std::iota(w.begin(), w.end(), 0);
    return w;
}

std::vector<Perm> all_permutations(int p) {
    std::vector<Perm> out;
    Perm w = identity_perm(p);
    do
        out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace {

// Depth-first search over the paths in order, each path extended E before S
// so that completed tuples come out in lexicographic order of the
// concatenated step strings.  Occupancy lives on a dense grid spanning the
// bounding box of the configuration (paths never leave the box spanned by
// their own endpoints).
class TupleSearch {
public:
    TupleSearch(const PointConfiguration& config, const Perm& w) : cfg_(config) {
        const int p = cfg_.p();
        if (static_cast<int>(w.size()) != p)
            throw std::invalid_argument("permutation size must match configuration");
        starts_.reserve(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) starts_.push_back(cfg_.starts[static_cast<std::size_t>(w[i])]);

        min_ = max_ = starts_[0];
        for (const auto& q : starts_) grow(q);
        for (const auto& q : cfg_.ends) grow(q);
        width_ = max_.x - min_.x + 1;
        occupied_.assign(static_cast<std::size_t>(width_) * (max_.y - min_.y + 1), 0);

        feasible_ = true;
        for (int i = 0; i < p; ++i) {
            const auto& t = cfg_.ends[static_cast<std::size_t>(i)];
            if (t.x < starts_[static_cast<std::size_t>(i)].x ||
                t.y > starts_[static_cast<std::size_t>(i)].y)
                feasible_ = false;
        }
    }

    // on_tuple is called with the per-path step strings of each completed tuple
    void run(const std::function<void(const std::vector<std::string>&)>& on_tuple) {
        if (!feasible_) return;
        on_tuple_ = &on_tuple;
        steps_.assign(starts_.size(), std::string());
        begin_path(0);
        on_tuple_ = nullptr;
    }

private:
    void grow(const LatticePoint& q) {
        min_.x = std::min(min_.x, q.x);
        min_.y = std::min(min_.y, q.y);
        max_.x = std::max(max_.x, q.x);
        max_.y = std::max(max_.y, q.y);
    }

    std::size_t cell(const LatticePoint& q) const {
        return static_cast<std::size_t>(q.y - min_.y) * width_ +
               static_cast<std::size_t>(q.x - min_.x);
    }

    void begin_path(std::size_t i) {
        if (i == starts_.size()) {
            (*on_tuple_)(steps_);
            return;
        }
        const LatticePoint s = starts_[i];
        if (occupied_[cell(s)]) return;
        occupied_[cell(s)] = 1;
        extend(i, s);
        occupied_[cell(s)] = 0;
    }

    void extend(std::size_t i, LatticePoint q) {
        const LatticePoint t = cfg_.ends[i];
        if (q == t) {
            begin_path(i + 1);
            return;
        }
        if (q.x < t.x) {
            const LatticePoint n{q.x + 1, q.y};
            if (!occupied_[cell(n)]) {
                occupied_[cell(n)] = 1;
                steps_[i].push_back('E');
                extend(i, n);
                steps_[i].pop_back();
                occupied_[cell(n)] = 0;
            }
        }
        if (q.y > t.y) {
            const LatticePoint n{q.x, q.y - 1};
            if (!occupied_[cell(n)]) {
                occupied_[cell(n)] = 1;
                steps_[i].push_back('S');
                extend(i, n);
                steps_[i].pop_back();
                occupied_[cell(n)] = 0;
            }
        }
    }

    const PointConfiguration& cfg_;
    std::vector<LatticePoint> starts_;
    LatticePoint min_, max_;
    int width_ = 1;
    std::vector<char> occupied_;
    std::vector<std::string> steps_;
    const std::function<void(const std::vector<std::string>&)>* on_tuple_ = nullptr;
    bool feasible_ = false;
};

} // namespace

std::vector<SignedTuple> enumerate_tuples(const PointConfiguration& config, const Perm& w) {
    std::vector<SignedTuple> out;
    const int sign = perm_sign(w);
    TupleSearch search(config, w);
    search.run([&](const std::vector<std::string>& steps) {
        SignedTuple t;
        t.w = w;
        t.sign = sign;
        t.paths.reserve(steps.size());
        for (std::size_t i = 0; i < steps.size(); ++i)
            t.paths.push_back(
                LatticePath{config.starts[static_cast<std::size_t>(w[i])], steps[i]});
        out.push_back(std::move(t));
    });
    return out;
}

Int count_tuples(const PointConfiguration& config, const Perm& w) {
    Int n = 0;
    TupleSearch search(config, w);
    search.run([&](const std::vector<std::string>&) { ++n; });
    return n;
}

Int signed_count(const PointConfiguration& config) {
    Int total = 0;
    for (const Perm& w : all_permutations(config.p()))
        total += perm_sign(w) * count_tuples(config, w);
    return total;
}

std::vector<SignedTuple> negative_tuples(const PointConfiguration& config) {
    if (config.p() != 3)
        throw std::invalid_argument("negative_tuples is defined for p = 3");
    std::vector<SignedTuple> out;
    for (const Perm& w : all_permutations(3)) {
        if (perm_sign(w) != -1) continue;
        auto tuples = enumerate_tuples(config, w);
        out.insert(out.end(), std::make_move_iterator(tuples.begin()),
                   std::make_move_iterator(tuples.end()));
    }
    return out;
}

} // namespace lgv
