#include "horadam/cobweb/cobweb.hpp"

#include <algorithm>
#include <functional>

#include "horadam/binomials/binomials.hpp"

namespace horadam {

namespace {

std::optional<Integer> positive_integer_term(const Sequence& F, std::size_t s) {
    const Scalar v = F.term(s);
    if (v.is_zero()) throw ZeroTerm(s);
    auto z = v.integer_value();
    if (!z || *z < 1) return std::nullopt;
    return z;
}

std::size_t small_size(const Integer& z, const char* what) {
    if (z > 100000) throw InvalidArgument(std::string(what) + " too large for enumeration");
    return z.get_ui();
}

Integer integer_binomial(const Sequence& F, std::size_t n, std::size_t k) {
    const auto v = f_binomial(F, n, k).integer_value();
    if (!v) throw NotAdmissible("F-binomial (" + std::to_string(n) + ", " + std::to_string(k) + ") is not an integer");
    return *v;
}

void require_admissible(const Sequence& F, std::size_t n) {
    if (!is_admissible(F, n))
        throw NotAdmissible(F.label() + " is not admissible up to " + std::to_string(n));
}

}  // namespace

bool is_admissible(const Sequence& F, std::size_t N) {
    for (std::size_t s = 1; s <= N; ++s)
        if (!positive_integer_term(F, s)) return false;
    const auto f = f_factorials(F, N);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const auto v = (f[n] / (f[k] * f[n - k])).integer_value();
            if (!v || *v < 0) return false;
        }
    return true;
}

CobwebLayer make_layer(const Sequence& F, std::size_t k, std::size_t n) {
    if (k > n) throw InvalidArgument("layer needs k <= n");
    CobwebLayer layer{F, k, n, {}};
    for (std::size_t s = k; s <= n; ++s) {
        auto z = s == 0 ? std::optional<Integer>{} : positive_integer_term(F, s);
        if (!z) throw InvalidArgument("level " + std::to_string(s) + " size must be a positive integer");
        layer.sizes.push_back(*z);
    }
    return layer;
}

Integer layer_chain_count(const CobwebLayer& layer) {
    Integer product(1);
    for (const auto& z : layer.sizes) product *= z;
    return product;
}

std::optional<std::vector<std::vector<std::size_t>>> enumerate_layer_chains(const CobwebLayer& layer, std::size_t limit) {
    if (layer_chain_count(layer) > limit) return std::nullopt;
    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> current;
    std::function<void(std::size_t)> walk = [&](std::size_t level) {
        if (level == layer.sizes.size()) {
            chains.push_back(current);
            return;
        }
        const std::size_t width = layer.sizes[level].get_ui();
        for (std::size_t e = 0; e < width; ++e) {
            current.push_back(e);
            walk(level + 1);
            current.pop_back();
        }
    };
    walk(0);
    return chains;
}

CountingReport verify_counting_identity(const Sequence& F, std::size_t k, std::size_t n) {
    if (k > n) throw InvalidArgument("counting identity needs k <= n");
    require_admissible(F, n);
    CountingReport report;
    report.k = k;
    report.n = n;
    report.chains = k == n ? Integer(1) : layer_chain_count(make_layer(F, k + 1, n));
    report.binomial = integer_binomial(F, n, k);
    report.kappa = n - k == 0 ? Integer(1) : layer_chain_count(make_layer(F, 1, n - k));
    report.holds = report.chains == report.binomial * report.kappa;
    return report;
}

const char* tiling_status_name(TilingStatus status) noexcept {
    switch (status) {
        case TilingStatus::Found: return "found";
        case TilingStatus::NotFound: return "not_found";
        case TilingStatus::Exhausted: return "exhausted";
    }
    return "unknown";
}

namespace {

class TilingSearch {
public:
    TilingSearch(std::vector<std::size_t> edges, std::vector<std::size_t> shape, std::size_t budget, bool intervals_only)
        : edges_(std::move(edges)), budget_(budget), intervals_only_(intervals_only) {
        std::sort(shape.begin(), shape.end());
        do {
            bool fits = true;
            for (std::size_t j = 0; j < shape.size(); ++j) fits = fits && shape[j] <= edges_[j];
            if (fits) shapes_.push_back(shape);
        } while (std::next_permutation(shape.begin(), shape.end()));
        total_ = 1;
        for (std::size_t d : edges_) total_ *= d;
        covered_.assign(total_, 0);
        strides_.assign(edges_.size(), 1);
        for (std::size_t j = edges_.size(); j-- > 1;) strides_[j - 1] = strides_[j] * edges_[j];
    }

    TilingResult run() {
        TilingResult result;
        const bool found = place(0);
        result.nodes = nodes_;
        if (found) {
            result.status = TilingStatus::Found;
            result.partition = BoxPartition{edges_, Integer(0), blocks_};
        } else {
            result.status = exhausted_ ? TilingStatus::Exhausted : TilingStatus::NotFound;
        }
        return result;
    }

private:
    bool place(std::size_t from) {
        while (from < total_ && covered_[from]) ++from;
        if (from == total_) return true;
        std::vector<std::size_t> u(edges_.size());
        for (std::size_t j = 0; j < edges_.size(); ++j) u[j] = (from / strides_[j]) % edges_[j];
        for (const auto& shape : shapes_) {
            BoxBlock block;
            block.axes.resize(edges_.size());
            if (choose_axis(0, u, shape, block, from)) return true;
            if (exhausted_) return false;
        }
        return false;
    }

    bool choose_axis(std::size_t axis, const std::vector<std::size_t>& u, const std::vector<std::size_t>& shape,
                     BoxBlock& block, std::size_t from) {
        if (axis == edges_.size()) return try_block(block, from);
        const std::size_t size = shape[axis];
        const std::size_t d = edges_[axis];
        const std::size_t low = axis == 0 ? u[0] : 0;
        if (intervals_only_) {
            for (std::size_t start = u[axis] + 1 >= size ? u[axis] + 1 - size : 0; start <= u[axis]; ++start) {
                if (start < low || start + size > d) continue;
                block.axes[axis].clear();
                for (std::size_t e = start; e < start + size; ++e) block.axes[axis].push_back(e);
                if (choose_axis(axis + 1, u, shape, block, from)) return true;
                if (exhausted_) return false;
            }
            return false;
        }
        // Subsets of [low, d) of the given size that contain u[axis], in lexicographic order.
        std::vector<std::size_t> pool;
        for (std::size_t e = low; e < d; ++e)
            if (e != u[axis]) pool.push_back(e);
        if (pool.size() < size - 1) return false;
        std::vector<std::size_t> pick(size - 1);
        for (std::size_t i = 0; i + 1 < size; ++i) pick[i] = i;
        while (true) {
            auto& subset = block.axes[axis];
            subset.clear();
            for (std::size_t i : pick) subset.push_back(pool[i]);
            subset.insert(std::upper_bound(subset.begin(), subset.end(), u[axis]), u[axis]);
            if (choose_axis(axis + 1, u, shape, block, from)) return true;
            if (exhausted_) return false;
            // Next combination of size-1 indices out of pool.size().
            std::size_t i = pick.size();
            while (i > 0 && pick[i - 1] == pool.size() - pick.size() + i - 1) --i;
            if (i == 0) return false;
            ++pick[i - 1];
            for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    void points_of(const BoxBlock& block, std::vector<std::size_t>& out) const {
        out.assign(1, 0);
        for (std::size_t j = 0; j < block.axes.size(); ++j) {
            std::vector<std::size_t> next;
            next.reserve(out.size() * block.axes[j].size());
            for (std::size_t base : out)
                for (std::size_t e : block.axes[j]) next.push_back(base + e * strides_[j]);
            out.swap(next);
        }
    }

    bool try_block(const BoxBlock& block, std::size_t from) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        std::vector<std::size_t> pts;
        points_of(block, pts);
        for (std::size_t p : pts)
            if (covered_[p]) return false;
        for (std::size_t p : pts) covered_[p] = 1;
        blocks_.push_back(block);
        if (place(from + 1)) return true;
        blocks_.pop_back();
        for (std::size_t p : pts) covered_[p] = 0;
        return false;
    }

    std::vector<std::size_t> edges_;
    std::vector<std::vector<std::size_t>> shapes_;
    std::size_t budget_;
    bool intervals_only_;
    std::size_t total_ = 1;
    std::vector<char> covered_;
    std::vector<std::size_t> strides_;
    std::vector<BoxBlock> blocks_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
};

std::vector<std::size_t> size_list(const Sequence& F, std::size_t first, std::size_t last) {
    std::vector<std::size_t> out;
    for (std::size_t s = first; s <= last; ++s) out.push_back(small_size(*positive_integer_term(F, s), "axis size"));
    return out;
}

}  // namespace

TilingResult box_tiling_search(const Sequence& F, std::size_t m, std::size_t n, std::size_t budget, bool intervals_only) {
    if (m > n) throw InvalidArgument("tiling needs m <= n");
    require_admissible(F, n);
    const std::size_t k = n - m;
    const std::vector<std::size_t> edges = m == 0 ? std::vector<std::size_t>{} : size_list(F, k + 1, n);
    const std::vector<std::size_t> shape = m == 0 ? std::vector<std::size_t>{} : size_list(F, 1, m);
    Integer volume(1);
    for (std::size_t d : edges) volume *= static_cast<unsigned long>(d);
    if (volume > 2000000) throw InvalidArgument("box too large for tiling search");
    TilingResult result = TilingSearch(edges, shape, budget, intervals_only).run();
    if (result.partition) {
        Integer kappa(1);
        for (std::size_t a : shape) kappa *= static_cast<unsigned long>(a);
        result.partition->kappa = kappa;
    }
    return result;
}

bool validate_partition(const Sequence& F, std::size_t m, std::size_t n, const BoxPartition& partition) {
    if (m > n) return false;
    const std::size_t k = n - m;
    const std::vector<std::size_t> edges = m == 0 ? std::vector<std::size_t>{} : size_list(F, k + 1, n);
    std::vector<std::size_t> shape = m == 0 ? std::vector<std::size_t>{} : size_list(F, 1, m);
    std::sort(shape.begin(), shape.end());
    if (partition.edges != edges) return false;
    std::size_t total = 1;
    for (std::size_t d : edges) total *= d;
    std::vector<std::size_t> strides(edges.size(), 1);
    for (std::size_t j = edges.size(); j-- > 1;) strides[j - 1] = strides[j] * edges[j];
    std::vector<char> covered(total, 0);
    Integer kappa(1);
    for (std::size_t a : shape) kappa *= static_cast<unsigned long>(a);
    if (partition.kappa != kappa) return false;
    for (const auto& block : partition.blocks) {
        if (block.axes.size() != edges.size()) return false;
        std::vector<std::size_t> sizes;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            auto axis = block.axes[j];
            std::sort(axis.begin(), axis.end());
            if (std::adjacent_find(axis.begin(), axis.end()) != axis.end()) return false;
            if (!axis.empty() && axis.back() >= edges[j]) return false;
            sizes.push_back(axis.size());
        }
        std::sort(sizes.begin(), sizes.end());
        if (sizes != shape) return false;
        std::vector<std::size_t> pts{0};
        for (std::size_t j = 0; j < edges.size(); ++j) {
            std::vector<std::size_t> next;
            for (std::size_t base : pts)
                for (std::size_t e : block.axes[j]) next.push_back(base + e * strides[j]);
            pts.swap(next);
        }
        for (std::size_t p : pts) {
            if (covered[p]) return false;
            covered[p] = 1;
        }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return false;
    return Integer(static_cast<unsigned long>(partition.blocks.size())) == integer_binomial(F, n, k);
}

}  // namespace horadam
