#include "regdec/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "regdec/errors.hpp"

namespace regdec {

namespace {

using Mask = std::uint64_t;
constexpr Mask kUnrestricted = ~Mask{0};
constexpr int kMaxSearchRoots = 64;

struct Triple {
    RootIndex x, y, z;  // x + y = z
};

struct Problem {
    int num_roots = 0;
    std::vector<RootIndex> order;
    std::vector<Triple> triples;
    std::vector<std::vector<int>> incidence;  // root -> triple ids
    int min_blocks = 1;
    int max_blocks = kMaxSearchRoots;
    std::uint64_t budget = 0;
};

class NodeCounter {
public:
    explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}

    void add(std::uint64_t n) {
        const auto total = total_.fetch_add(n, std::memory_order_relaxed) + n;
        if (total > budget_) {
            exceeded_.store(true, std::memory_order_relaxed);
            throw BudgetExceeded(budget_, total);
        }
    }
    bool exceeded() const { return exceeded_.load(std::memory_order_relaxed); }
    std::uint64_t total() const { return total_.load(std::memory_order_relaxed); }

private:
    std::uint64_t budget_;
    std::atomic<std::uint64_t> total_{0};
    std::atomic<bool> exceeded_{false};
};

/// Branch state of the backtracking search; copyable so that prefixes can be
/// handed to workers.
class Search {
public:
    using Sink = std::vector<std::vector<int>>;

    Search(const Problem& problem, NodeCounter& counter) : problem_(&problem), counter_(&counter) {
        const auto n = static_cast<std::size_t>(problem.num_roots);
        block_.assign(n, -1);
        mask_.assign(n, kUnrestricted);
        free_ = problem.num_roots;
    }

    /// Full search from position `depth`; complete assignments go to `out`.
    void run(int depth, Sink& out) {
        sink_ = &out;
        stop_depth_ = problem_->num_roots;
        prefixes_ = nullptr;
        descend(depth);
        flush();
    }

    /// Stops at `split` and records the branch states reached there.
    void split(int split, std::vector<std::pair<Search, int>>& prefixes, Sink& out) {
        sink_ = &out;
        stop_depth_ = split;
        prefixes_ = &prefixes;
        descend(0);
        flush();
    }

private:
    void flush() {
        counter_->add(pending_);
        pending_ = 0;
    }

    void count_node() {
        if (++pending_ >= 4096) flush();
    }

    // Unassigned roots that may still open a fresh block.
    bool can_reach_min_blocks() const { return blocks_ + free_ >= problem_->min_blocks; }

    void restrict(RootIndex u, Mask allowed, bool& ok) {
        auto& m = mask_[static_cast<std::size_t>(u)];
        const Mask next = m & allowed;
        if (next == m) return;
        trail_.push_back({u, m});
        if (m == kUnrestricted) --free_;
        m = next;
        if (next == 0) ok = false;
    }

    bool propagate(RootIndex r) {
        bool ok = true;
        for (int t : problem_->incidence[static_cast<std::size_t>(r)]) {
            const auto& tr = problem_->triples[static_cast<std::size_t>(t)];
            const int bx = block_[static_cast<std::size_t>(tr.x)];
            const int by = block_[static_cast<std::size_t>(tr.y)];
            const int bz = block_[static_cast<std::size_t>(tr.z)];
            const int unassigned = (bx < 0) + (by < 0) + (bz < 0);
            if (unassigned == 0) {
                if (bz != bx && bz != by) return false;
            } else if (unassigned == 1) {
                if (bz < 0) {
                    restrict(tr.z, (Mask{1} << bx) | (Mask{1} << by), ok);
                } else if (bx < 0) {
                    if (bz != by) restrict(tr.x, Mask{1} << bz, ok);
                } else {
                    if (bz != bx) restrict(tr.y, Mask{1} << bz, ok);
                }
                if (!ok) return false;
            }
        }
        return true;
    }

    void descend(int depth) {
        if (depth == stop_depth_) {
            if (depth == problem_->num_roots) {
                if (blocks_ >= problem_->min_blocks) sink_->push_back(block_);
            } else if (prefixes_) {
                Search branch(*this);
                branch.pending_ = 0;
                prefixes_->emplace_back(std::move(branch), depth);
            }
            return;
        }
        const RootIndex r = problem_->order[static_cast<std::size_t>(depth)];
        const Mask m = mask_[static_cast<std::size_t>(r)];
        const bool was_free = m == kUnrestricted;
        const int limit = std::min(blocks_ + 1, problem_->max_blocks);
        for (int b = 0; b < limit; ++b) {
            if (!((m >> b) & 1u)) continue;
            if (counter_->exceeded()) return;
            count_node();
            const std::size_t mark = trail_.size();
            const int saved_blocks = blocks_;
            block_[static_cast<std::size_t>(r)] = b;
            if (b == blocks_) ++blocks_;
            if (was_free) --free_;
            if (propagate(r) && can_reach_min_blocks()) descend(depth + 1);
            while (trail_.size() > mark) {
                auto [u, old] = trail_.back();
                trail_.pop_back();
                if (old == kUnrestricted) ++free_;
                mask_[static_cast<std::size_t>(u)] = old;
            }
            if (was_free) ++free_;
            blocks_ = saved_blocks;
            block_[static_cast<std::size_t>(r)] = -1;
        }
    }

    const Problem* problem_;
    NodeCounter* counter_;
    std::vector<int> block_;
    std::vector<Mask> mask_;
    std::vector<std::pair<RootIndex, Mask>> trail_;
    int blocks_ = 0;
    int free_ = 0;
    std::uint64_t pending_ = 0;
    int stop_depth_ = 0;
    Sink* sink_ = nullptr;
    std::vector<std::pair<Search, int>>* prefixes_ = nullptr;
};

Problem make_problem(const RootSystem& rs, const EnumerationOptions& o) {
    Problem p;
    p.num_roots = rs.size();
    p.order = search_order(rs);
    p.incidence.resize(static_cast<std::size_t>(rs.size()));
    for (RootIndex x = 0; x < rs.size(); ++x)
        for (RootIndex y = x + 1; y < rs.size(); ++y)
            if (auto z = rs.sum(x, y)) {
                const int id = static_cast<int>(p.triples.size());
                p.triples.push_back({x, y, *z});
                for (RootIndex v : {x, y, *z}) p.incidence[static_cast<std::size_t>(v)].push_back(id);
            }
    p.min_blocks = o.min_blocks;
    p.max_blocks = o.max_blocks > 0 ? std::min(o.max_blocks, kMaxSearchRoots) : kMaxSearchRoots;
    p.budget = o.node_budget;
    return p;
}

BlockPartition to_partition(const std::vector<int>& owner) {
    BlockPartition p;
    const int m = *std::max_element(owner.begin(), owner.end()) + 1;
    p.blocks.resize(static_cast<std::size_t>(m));
    for (std::size_t r = 0; r < owner.size(); ++r) p.blocks[static_cast<std::size_t>(owner[r])].insert(static_cast<RootIndex>(r));
    return p;
}

}  // namespace

std::vector<RootIndex> search_order(const RootSystem& rs) {
    std::vector<RootIndex> order;
    std::vector<bool> placed(static_cast<std::size_t>(rs.size()), false);
    auto place = [&](RootIndex r) {
        if (placed[static_cast<std::size_t>(r)]) return;
        placed[static_cast<std::size_t>(r)] = true;
        order.push_back(r);
    };
    for (RootIndex b : beta_chain_basis(rs)) {
        place(b);
        place(rs.neg(b));
    }
    while (static_cast<int>(order.size()) < rs.size()) {
        RootIndex best = -1;
        int best_score = -1;
        for (RootIndex r = 0; r < rs.size(); ++r) {
            if (placed[static_cast<std::size_t>(r)]) continue;
            int score = 0;
            for (RootIndex a : order) {
                // r = a + b, or r + a = b, with b placed
                for (RootIndex b : order) {
                    if (b < a) continue;
                    if (rs.sum(a, b) == r) ++score;
                }
                if (auto s = rs.sum(r, a); s && placed[static_cast<std::size_t>(*s)]) ++score;
            }
            if (score > best_score) {
                best_score = score;
                best = r;
            }
        }
        place(best);
    }
    return order;
}

EnumerationResult enumerate_regular_partitions(const RootSystem& rs, const EnumerationOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (rs.size() > kMaxSearchRoots)
        throw InvalidArgument("exhaustive enumeration supports at most " + std::to_string(kMaxSearchRoots) +
                              " roots; " + to_string(rs.type()) + " has " + std::to_string(rs.size()));
    if (options.modulo.weyl && rs.type().family != Family::A)
        throw InvalidArgument("Weyl reduction of enumerated partitions is offered for type A only");
    if (options.min_blocks < 1) throw InvalidArgument("min_blocks must be at least 1");
    if (options.max_blocks < 0) throw InvalidArgument("max_blocks must be non-negative");
    if (options.jobs < 1) throw InvalidArgument("jobs must be at least 1");

    const Problem problem = make_problem(rs, options);
    NodeCounter counter(options.node_budget);
    std::vector<std::vector<int>> found;

    if (options.jobs == 1) {
        Search(problem, counter).run(0, found);
    } else {
        std::vector<std::pair<Search, int>> prefixes;
        const int split = std::clamp(options.split_depth, 0, problem.num_roots);
        Search(problem, counter).split(split, prefixes, found);

        std::atomic<std::size_t> next{0};
        std::mutex mu;
        std::exception_ptr failure;
        auto worker = [&] {
            std::vector<std::vector<int>> local;
            try {
                for (std::size_t i = next++; i < prefixes.size(); i = next++) {
                    auto branch = prefixes[i].first;
                    branch.run(prefixes[i].second, local);
                    if (counter.exceeded()) break;
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
            }
            std::lock_guard lock(mu);
            found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < options.jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    EnumerationResult result;
    result.node_count = counter.total();
    result.raw_count = found.size();

    std::set<PartitionKey> classes;
    for (const auto& owner : found) {
        BlockPartition p = to_partition(owner);
        if (options.modulo.renumber) {
            classes.insert(canonical_key(rs, p, options.modulo));
            continue;
        }
        if (p.num_blocks() > 8)
            throw CapacityError("listing all block orders of a " + std::to_string(p.num_blocks()) +
                                "-block partition is not supported; add 'renumber' to the quotient");
        std::vector<int> perm(static_cast<std::size_t>(p.num_blocks()));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            BlockPartition q;
            for (int b : perm) q.blocks.push_back(p.blocks[static_cast<std::size_t>(b)]);
            classes.insert(canonical_key(rs, q, options.modulo));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (const auto& k : classes) result.classes.push_back(from_key(k));
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace regdec
