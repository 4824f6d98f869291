#include "lincycle/search.hpp"

#include <algorithm>
#include <set>

namespace lincycle {

// ---------------------------------------------------------------------------
// Independence number

namespace {

class AlphaSearch
{
public:
    AlphaSearch(const Hypergraph& h, const SearchBudget& budget)
        : masks_(h.edge_masks()), incident_(h.num_vertices()), meter_(budget, "alpha")
    {
        for (std::size_t i = 0; i < masks_.size(); ++i)
            for (VertexId v : to_vector(masks_[i]))
                incident_[v].push_back(masks_[i]);
    }

    AlphaResult run(VertexMask all)
    {
        branch(0, all);
        return {static_cast<std::size_t>(count(best_)), {best_}, meter_.nodes()};
    }

private:
    // chosen: vertices in the set; open: undecided vertices. Invariant: no
    // edge lies inside chosen, and no open vertex would complete one.
    void branch(VertexMask chosen, VertexMask open)
    {
        meter_.tick();
        if (count(chosen) + count(open) <= count(best_) && best_set_)
            return;

        const VertexMask alive = chosen | open;
        VertexId pick = 0;
        int pick_degree = 0;
        VertexMask free = 0;
        for (VertexMask m = open; m; m &= m - 1) {
            auto v = static_cast<VertexId>(std::countr_zero(m));
            int degree = 0;
            for (VertexMask e : incident_[v])
                if ((e & ~alive) == 0)
                    ++degree;
            if (degree == 0)
                free |= bit(v);
            else if (degree > pick_degree) {
                pick = v;
                pick_degree = degree;
            }
        }
        chosen |= free;
        open &= ~free;

        if (open == 0) {
            if (!best_set_ || count(chosen) > count(best_)) {
                best_ = chosen;
                best_set_ = true;
            }
            return;
        }
        if (count(chosen) + count(open) <= count(best_) && best_set_)
            return;

        const VertexMask with = chosen | bit(pick);
        VertexMask rest = open & ~bit(pick);
        for (VertexMask e : incident_[pick]) {
            VertexMask missing = e & ~with;
            if (count(missing) == 1)
                rest &= ~missing;
        }
        branch(with, rest);
        branch(chosen, open & ~bit(pick));
    }

    const std::vector<VertexMask>& masks_;
    std::vector<std::vector<VertexMask>> incident_;
    BudgetMeter meter_;
    VertexMask best_ = 0;
    bool best_set_ = false;
};

} // namespace

AlphaResult alpha(const Hypergraph& h, const SearchBudget& budget)
{
    return AlphaSearch(h, budget).run(h.vertex_mask());
}

// ---------------------------------------------------------------------------
// Longest linear path

namespace {

/// Edges sharing exactly one vertex with each edge, in index order.
std::vector<std::vector<std::size_t>> single_vertex_neighbors(const Hypergraph& h)
{
    const auto& m = h.edge_masks();
    std::vector<std::vector<std::size_t>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k)
            if (k != i && count(m[i] & m[k]) == 1)
                out[i].push_back(k);
    return out;
}

class PathSearch
{
public:
    PathSearch(const Hypergraph& h, const SearchBudget& budget)
        : h_(h), masks_(h.edge_masks()), next_(single_vertex_neighbors(h)),
          in_use_(masks_.size(), false), meter_(budget, "longest_linear_path")
    {
        upper_ = std::min(masks_.size(), h.num_vertices() - 1);
    }

    std::vector<std::size_t> run()
    {
        for (std::size_t i = 0; i < masks_.size() && !done_; ++i) {
            seq_.push_back(i);
            in_use_[i] = true;
            extend(masks_[i], masks_[i]);
            in_use_[i] = false;
            seq_.pop_back();
        }
        return best_;
    }

    std::uint64_t nodes() const { return meter_.nodes(); }

private:
    void extend(VertexMask used, VertexMask tail_free)
    {
        meter_.tick();
        if (seq_.size() > best_.size()) {
            best_ = seq_;
            if (best_.size() >= upper_) {
                done_ = true;
                return;
            }
        }
        // Each further edge brings at least one unused vertex.
        const std::size_t room = static_cast<std::size_t>(count(h_.vertex_mask() & ~used));
        if (seq_.size() + std::min(room, masks_.size() - seq_.size()) <= best_.size())
            return;

        for (std::size_t k : next_[seq_.back()]) {
            if (in_use_[k])
                continue;
            const VertexMask shared = masks_[k] & used;
            if (count(shared) != 1 || !(shared & tail_free))
                continue;
            seq_.push_back(k);
            in_use_[k] = true;
            extend(used | masks_[k], masks_[k] & ~shared);
            in_use_[k] = false;
            seq_.pop_back();
            if (done_)
                return;
        }
    }

    const Hypergraph& h_;
    const std::vector<VertexMask>& masks_;
    std::vector<std::vector<std::size_t>> next_;
    std::vector<bool> in_use_;
    BudgetMeter meter_;
    std::vector<std::size_t> seq_;
    std::vector<std::size_t> best_;
    std::size_t upper_ = 0;
    bool done_ = false;
};

} // namespace

LongestPathResult longest_linear_path(const Hypergraph& h, const SearchBudget& budget)
{
    LongestPathResult out;
    if (h.num_edges() == 0)
        return out;
    PathSearch search(h, budget);
    auto seq = search.run();
    std::vector<Edge> edges;
    for (std::size_t i : seq)
        edges.push_back(h.edge(i));
    out.path = std::get<LinearPath>(validate_path(edges));
    out.nodes = search.nodes();
    return out;
}

// ---------------------------------------------------------------------------
// Cycle through the longest initial segment

namespace {

class CycleClosure
{
public:
    CycleClosure(const Hypergraph& h, const SearchBudget& budget)
        : masks_(h.edge_masks()), in_use_(masks_.size(), false),
          meter_(budget, "best_cycle_for_initial_segment")
    {
    }

    /// Tries to close the block (a linear path given by edge indices) into
    /// a proper cycle. On success seq() holds the block followed by the
    /// closing edges.
    bool close(const std::vector<std::size_t>& block)
    {
        seq_ = block;
        std::fill(in_use_.begin(), in_use_.end(), false);
        VertexMask used = 0;
        for (std::size_t i : block) {
            in_use_[i] = true;
            used |= masks_[i];
        }
        single_ = block.size() == 1;
        VertexMask head = masks_[block.front()];
        VertexMask tail = masks_[block.back()];
        if (!single_) {
            head &= ~masks_[block[1]];
            tail &= ~masks_[block[block.size() - 2]];
        }
        return extend(used, tail, head, 0);
    }

    const std::vector<std::size_t>& seq() const { return seq_; }
    std::uint64_t nodes() const { return meter_.nodes(); }

private:
    // An edge is usable if it avoids every used vertex except the current
    // tail and the head attachment points.
    bool reachable(VertexMask used, VertexMask tail, VertexMask head) const
    {
        const VertexMask open = tail | head;
        VertexMask reach = tail;
        for (bool grew = true; grew;) {
            grew = false;
            for (std::size_t k = 0; k < masks_.size(); ++k) {
                if (in_use_[k] || (masks_[k] & used & ~open) || !(masks_[k] & reach))
                    continue;
                if (masks_[k] & head)
                    return true;
                VertexMask add = masks_[k] & ~used & ~reach;
                if (add) {
                    reach |= add;
                    grew = true;
                }
            }
        }
        return false;
    }

    bool extend(VertexMask used, VertexMask tail, VertexMask head, std::size_t added)
    {
        meter_.tick();
        if (!reachable(used, tail, head))
            return false;
        // A single-edge block must gain two edges before it can close, and
        // its second attachment must differ from the first.
        const bool may_close = !(single_ && added == 0);
        for (std::size_t k = 0; k < masks_.size(); ++k) {
            if (in_use_[k])
                continue;
            const VertexMask shared = masks_[k] & used;
            const VertexMask at_tail = shared & tail;
            if (count(at_tail) != 1)
                continue;
            const VertexMask rest = shared & ~at_tail;
            if (rest == 0) {
                seq_.push_back(k);
                in_use_[k] = true;
                VertexMask next_head = (single_ && added == 0) ? head & ~at_tail : head;
                if (extend(used | masks_[k], masks_[k] & ~at_tail, next_head, added + 1))
                    return true;
                in_use_[k] = false;
                seq_.pop_back();
            } else if (may_close && count(rest) == 1 && (rest & head)) {
                seq_.push_back(k);
                return true;
            }
        }
        return false;
    }

    const std::vector<VertexMask>& masks_;
    std::vector<bool> in_use_;
    BudgetMeter meter_;
    std::vector<std::size_t> seq_;
    bool single_ = false;
};

} // namespace

SegmentCycle best_cycle_for_initial_segment(const Hypergraph& h, const OrientedPath& p,
                                            const SearchBudget& budget)
{
    std::vector<std::size_t> path_idx;
    for (const Edge& e : p.path().edges()) {
        auto idx = h.find(e);
        if (!idx)
            throw std::invalid_argument("path edge " + e.to_string() + " is not an edge of h");
        path_idx.push_back(*idx);
    }

    CycleClosure closure(h, budget);
    for (std::size_t j = p.last() + 1; j-- > 0;) {
        std::vector<std::size_t> block(path_idx.begin(), path_idx.begin() + j + 1);
        if (!closure.close(block))
            continue;
        std::vector<Edge> edges;
        for (std::size_t i : closure.seq())
            edges.push_back(h.edge(i));
        auto cycle = validate_cycle(EdgeSequence{edges});
        if (!is_valid(cycle))
            throw std::logic_error("cycle closure produced an invalid cycle: "
                                   + std::get<Violation>(cycle).describe());
        return {std::get<LinearCycle>(cycle), j, false, closure.nodes()};
    }
    return {LinearCycle::single_edge(p.path().edge(0)), 0, true, closure.nodes()};
}

// ---------------------------------------------------------------------------
// Minimum cycle cover by enumeration

namespace {

struct CoverItem
{
    LinearCycle cycle;
    VertexMask vertices;
    std::vector<std::size_t> edges;
};

class CoverOracle
{
public:
    CoverOracle(const Hypergraph& h, const SearchBudget& budget)
        : h_(h), used_edge_(h.num_edges(), false), meter_(budget, "min_cycle_cover_oracle")
    {
    }

    CoverOracleResult run()
    {
        collect_items();
        const VertexMask all = h_.vertex_mask();
        for (const auto& item : items_)
            widest_ = std::max<std::size_t>(widest_, count(item.vertices));
        const std::size_t lower = (h_.num_vertices() + widest_ - 1) / widest_;
        for (std::size_t k = lower; k <= h_.num_vertices(); ++k) {
            limit_ = k;
            if (cover(all))
                break;
        }
        CoverOracleResult out;
        out.value = chosen_.size();
        for (std::size_t i : chosen_)
            out.witness.push_back(items_[i].cycle);
        out.nodes = meter_.nodes();
        return out;
    }

private:
    void collect_items()
    {
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t s = 0; s < h_.num_edges(); ++s) {
            std::vector<std::size_t> seq{s};
            enumerate_from(seq, seen);
        }
        for (std::size_t i = 0; i < h_.num_edges(); ++i)
            items_.push_back({LinearCycle::single_edge(h_.edge(i)), h_.edge_mask(i), {i}});
        for (VertexId v = 0; v < h_.num_vertices(); ++v)
            items_.push_back({LinearCycle::single_vertex(v), bit(v), {}});
    }

    std::vector<Edge> edges_of(const std::vector<std::size_t>& seq) const
    {
        std::vector<Edge> out;
        for (std::size_t i : seq)
            out.push_back(h_.edge(i));
        return out;
    }

    // Cycles are rooted at their smallest edge index and grown as linear
    // paths; each is recorded once, keyed by its edge set.
    void enumerate_from(std::vector<std::size_t>& seq, std::set<std::vector<std::size_t>>& seen)
    {
        meter_.tick();
        for (std::size_t k = seq.front() + 1; k < h_.num_edges(); ++k) {
            if (std::find(seq.begin(), seq.end(), k) != seq.end())
                continue;
            seq.push_back(k);
            auto edges = edges_of(seq);
            if (seq.size() >= 3) {
                auto cycle = validate_cycle(EdgeSequence{edges});
                if (is_valid(cycle)) {
                    auto key = seq;
                    std::sort(key.begin(), key.end());
                    if (seen.insert(key).second) {
                        const auto& c = std::get<LinearCycle>(cycle);
                        items_.push_back({c, c.vertices(), key});
                    }
                }
            }
            if (is_valid(validate_path(edges)))
                enumerate_from(seq, seen);
            seq.pop_back();
        }
    }

    bool cover(VertexMask uncovered)
    {
        meter_.tick();
        if (uncovered == 0)
            return true;
        const std::size_t needed = (count(uncovered) + widest_ - 1) / widest_;
        if (chosen_.size() + needed > limit_)
            return false;
        const VertexId v = static_cast<VertexId>(std::countr_zero(uncovered));
        for (std::size_t i = 0; i < items_.size(); ++i) {
            const auto& item = items_[i];
            if (!(item.vertices & bit(v)))
                continue;
            bool clash = false;
            for (std::size_t e : item.edges)
                clash = clash || used_edge_[e];
            if (clash)
                continue;
            for (std::size_t e : item.edges)
                used_edge_[e] = true;
            chosen_.push_back(i);
            if (cover(uncovered & ~item.vertices))
                return true;
            chosen_.pop_back();
            for (std::size_t e : item.edges)
                used_edge_[e] = false;
        }
        return false;
    }

    const Hypergraph& h_;
    std::vector<CoverItem> items_;
    std::vector<bool> used_edge_;
    std::vector<std::size_t> chosen_;
    std::size_t limit_ = 0;
    std::size_t widest_ = 1;
    BudgetMeter meter_;
};

} // namespace

CoverOracleResult min_cycle_cover_oracle(const Hypergraph& h, const SearchBudget& budget)
{
    if (h.num_vertices() > 10)
        throw std::invalid_argument("min_cycle_cover_oracle is limited to 10 vertices");
    return CoverOracle(h, budget).run();
}

} // namespace lincycle
