#include "wmi/dual_complex.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "wmi/mhs.hpp"

namespace wmi {

DualComplex DualComplex::build(const SncConfiguration& cfg) {
    require_valid_config(cfg);

    DualComplex dc;
    dc.cells_.resize(cfg.dim_g + 1);
    std::vector<std::map<std::string, std::size_t>> index(cfg.dim_g + 1);
    for (int k = 0; k <= cfg.dim_g; ++k)
        for (const StratumComponent* s : cfg.strataAtLevel(k + 1)) {
            index[k][s->id] = dc.cells_[k].size();
            dc.cells_[k].push_back(s->id);
        }

    for (int k = 1; k <= cfg.dim_g; ++k) {
        RatMatrix bd(dc.cells_[k - 1].size(), dc.cells_[k].size());
        for (std::size_t c = 0; c < dc.cells_[k].size(); ++c) {
            const StratumComponent* cell = cfg.findStratum(dc.cells_[k][c]);
            for (std::size_t pos = 0; pos < cell->subset.size(); ++pos) {
                const StratumComponent* face = cfg.incidenceParent(cell->id, cell->subset[pos]);
                const int sign = (pos % 2 == 0) ? 1 : -1;
                bd(index[k - 1].at(face->id), c) += sign;
            }
        }
        dc.boundaries_.push_back(std::move(bd));
    }

    for (std::size_t l = 0; l + 1 < dc.boundaries_.size(); ++l)
        if (!(dc.boundaries_[l] * dc.boundaries_[l + 1]).isZero())
            throw std::logic_error("boundary of boundary is nonzero");

    if (cfg.dim_g >= 1)
        for (const std::string& id : dc.cells_[1]) {
            const StratumComponent* e = cfg.findStratum(id);
            const StratumComponent* a = cfg.incidenceParent(id, e->subset[1]); // keeps subset[0]
            const StratumComponent* b = cfg.incidenceParent(id, e->subset[0]);
            dc.edge_endpoints_.emplace_back(a->id, b->id);
        }

    return dc;
}

const std::vector<std::string>& DualComplex::cells(int k) const {
    static const std::vector<std::string> empty;
    if (k < 0 || k >= static_cast<int>(cells_.size())) return empty;
    return cells_[k];
}

const RatMatrix& DualComplex::boundary(int k) const {
    if (k < 1 || k > static_cast<int>(boundaries_.size()))
        throw std::out_of_range("no boundary map at dimension " + std::to_string(k));
    return boundaries_[k - 1];
}

std::vector<long long> DualComplex::bettiNumbers() const {
    std::vector<long long> betti;
    for (int k = 0; k < static_cast<int>(cells_.size()); ++k) {
        long long b = static_cast<long long>(cells_[k].size());
        if (k >= 1) b -= static_cast<long long>(rank(boundaries_[k - 1]));
        if (k < static_cast<int>(boundaries_.size()))
            b -= static_cast<long long>(rank(boundaries_[k]));
        betti.push_back(b);
    }
    return betti;
}

long long DualComplex::eulerCharacteristic() const {
    long long chi = 0;
    int sign = 1;
    for (const auto& level : cells_) {
        chi += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return chi;
}

std::string DualComplex::toDot() const {
    std::ostringstream os;
    os << "graph dual_complex {\n";
    for (const std::string& v : cells(0)) os << "  \"" << v << "\";\n";
    for (std::size_t i = 0; i < edge_endpoints_.size(); ++i)
        os << "  \"" << edge_endpoints_[i].first << "\" -- \"" << edge_endpoints_[i].second
           << "\" [label=\"" << cells(1)[i] << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace wmi
