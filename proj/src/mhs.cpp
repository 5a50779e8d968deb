#include "wmi/mhs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace wmi {

namespace {

struct Layout {
    // Strata pointers per level (1-based levels), in file order, and the
    // column/row offset of each stratum's h^{0,q} block.
    std::vector<std::vector<const StratumComponent*>> by_level; // index 0 = level 1
    std::vector<std::map<std::string, long long>> offsets;
    std::vector<long long> term_dims;

    Layout(const SncConfiguration& cfg, int q) {
        const int levels = std::max(cfg.maxLevel(), 1);
        by_level.resize(levels);
        offsets.resize(levels);
        term_dims.assign(levels, 0);
        for (int lv = 1; lv <= levels; ++lv) {
            for (const StratumComponent* s : cfg.strataAtLevel(lv)) {
                by_level[lv - 1].push_back(s);
                offsets[lv - 1][s->id] = term_dims[lv - 1];
                term_dims[lv - 1] += s->h(q);
            }
        }
    }
};

bool has_pullbacks_for(const SncConfiguration& cfg, int q) {
    for (const PullbackBlock& b : cfg.pullbacks)
        if (b.q == q) return true;
    return false;
}

const PullbackBlock* find_block(const SncConfiguration& cfg, int q, const std::string& child,
                                const std::string& dropped) {
    for (const PullbackBlock& b : cfg.pullbacks)
        if (b.q == q && b.child == child && b.dropped == dropped) return &b;
    return nullptr;
}

// Assembles the (0,q) chain on an already structurally-valid configuration.
// Throws InsufficientHodgeData when the data does not determine it.
DeltaChain assemble(const SncConfiguration& cfg, int q) {
    Layout layout(cfg, q);
    const int levels = static_cast<int>(layout.term_dims.size());

    DeltaChain chain;
    chain.q = q;
    chain.term_dims = layout.term_dims;
    chain.deltas.reserve(levels > 0 ? levels - 1 : 0);

    const bool supplied = q >= 1 && has_pullbacks_for(cfg, q);
    bool forced = true; // no two consecutive positions both nonzero
    for (int l = 0; l + 1 < levels; ++l)
        if (layout.term_dims[l] > 0 && layout.term_dims[l + 1] > 0) forced = false;

    if (q >= 1 && !supplied && !forced)
        throw InsufficientHodgeData(
            "no pullback matrices for q=" + std::to_string(q) +
            " and the (0," + std::to_string(q) + ") pieces are not forced");

    for (int l = 0; l + 1 < levels; ++l) {
        RatMatrix delta(static_cast<std::size_t>(layout.term_dims[l + 1]),
                        static_cast<std::size_t>(layout.term_dims[l]));
        for (const StratumComponent* child : layout.by_level[l + 1]) {
            const long long row0 = layout.offsets[l + 1].at(child->id);
            const long long rows = child->h(q);
            if (rows == 0) continue;
            for (std::size_t pos = 0; pos < child->subset.size(); ++pos) {
                const int dropped = child->subset[pos];
                const StratumComponent* parent = cfg.incidenceParent(child->id, dropped);
                if (parent == nullptr)
                    throw std::logic_error("incidence parent missing on validated config");
                const long long cols = parent->h(q);
                if (cols == 0) continue;
                const long long col0 = layout.offsets[l].at(parent->id);
                const int sign = (pos % 2 == 0) ? 1 : -1; // (-1)^{i+1}, i = pos+1
                if (q == 0) {
                    delta(row0, col0) += sign;
                } else {
                    const PullbackBlock* block =
                        find_block(cfg, q, child->id, cfg.components[dropped]);
                    if (block == nullptr)
                        throw InsufficientHodgeData(
                            "missing pullback block for q=" + std::to_string(q) + ", child \"" +
                            child->id + "\", dropped \"" + cfg.components[dropped] + "\"");
                    for (long long i = 0; i < rows; ++i)
                        for (long long k = 0; k < cols; ++k)
                            delta(row0 + i, col0 + k) += sign * block->matrix(i, k);
                }
            }
        }
        chain.deltas.push_back(std::move(delta));
    }

    for (std::size_t l = 0; l + 1 < chain.deltas.size(); ++l)
        if (!(chain.deltas[l + 1] * chain.deltas[l]).isZero())
            throw InvalidInput("complex condition violated: delta_" + std::to_string(l + 2) +
                               " o delta_" + std::to_string(l + 1) + " != 0 for q=" +
                               std::to_string(q));

    return chain;
}

} // namespace

ValidationReport validate_config(const SncConfiguration& cfg) {
    ValidationReport rep = cfg.validate();
    if (!rep.ok()) return rep;

    std::vector<int> qs;
    for (const PullbackBlock& b : cfg.pullbacks)
        if (std::find(qs.begin(), qs.end(), b.q) == qs.end()) qs.push_back(b.q);
    std::sort(qs.begin(), qs.end());
    for (int q : qs) {
        try {
            assemble(cfg, q);
        } catch (const InsufficientHodgeData& e) {
            rep.issues.push_back({"", e.what()});
        } catch (const InvalidInput& e) {
            rep.issues.push_back({"", e.what()});
        }
    }
    return rep;
}

void require_valid_config(const SncConfiguration& cfg) {
    const ValidationReport rep = validate_config(cfg);
    if (!rep.ok()) throw InvalidInput("invalid configuration: " + rep.summary());
}

DeltaChain delta_complex_q(const SncConfiguration& cfg, int q) {
    if (q < 0) throw InvalidInput("q must be nonnegative");
    require_valid_config(cfg);
    return assemble(cfg, q);
}

long long graded_piece_dim(const SncConfiguration& cfg, const GradedPieceQuery& query) {
    if (query.weight < 0) throw InvalidInput("weight must be nonnegative");
    if (query.total_degree < query.weight)
        throw InvalidInput("total degree must be at least the weight");
    const DeltaChain chain = delta_complex_q(cfg, query.weight);
    const int position = query.total_degree - query.weight;
    if (position >= static_cast<int>(chain.term_dims.size())) return 0;

    const long long dim_here = chain.dim(position);
    long long rank_out = 0, rank_in = 0;
    if (position < static_cast<int>(chain.deltas.size()))
        rank_out = static_cast<long long>(rank(chain.deltas[position]));
    if (position >= 1)
        rank_in = static_cast<long long>(rank(chain.deltas[position - 1]));
    return dim_here - rank_out - rank_in;
}

long long graded_piece_dim(const SncConfiguration& cfg, int weight, int total_degree) {
    return graded_piece_dim(cfg, GradedPieceQuery{weight, total_degree});
}

std::vector<HodgeProfileEntry> hodge_0q_profile(const SncConfiguration& cfg, int total_degree) {
    if (total_degree < 0) throw InvalidInput("total degree must be nonnegative");
    require_valid_config(cfg);
    std::vector<HodgeProfileEntry> profile;
    for (int q = 0; q <= total_degree; ++q) {
        HodgeProfileEntry entry{q, std::nullopt};
        try {
            entry.dim = graded_piece_dim(cfg, q, total_degree);
        } catch (const InsufficientHodgeData&) {
            // left unavailable
        }
        profile.push_back(entry);
    }
    return profile;
}

} // namespace wmi
