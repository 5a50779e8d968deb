#ifndef WMI_SNC_CONFIG_HPP
#define WMI_SNC_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wmi/errors.hpp"
#include "wmi/exact_linalg.hpp"

namespace wmi {

/*
 * Combinatorial + Hodge description of a simple normal crossings variety
 * G = union of G_i of pure dimension m.
 *
 * For each subset J of components with nonempty intersection there is one
 * StratumComponent record per connected component of the intersection; a
 * record at level |J| = r+1 has dimension m - r. Incidence names, for each
 * record at level r+1 >= 2 and each dropped component, the unique level-r
 * record containing it. Pullback matrices on the (0,q) Hodge pieces may be
 * supplied for q >= 1; without them only the forced cases are computable.
 */
struct StratumComponent {
    std::string id;
    std::vector<int> subset;        // component indices, strictly ascending
    std::vector<long long> h0q;     // h^{0,q} for q = 0..(stratum dimension)

    int level() const { return static_cast<int>(subset.size()); }

    /// h^{0,q}, zero outside the stored range.
    long long h(int q) const {
        return (q >= 0 && q < static_cast<int>(h0q.size())) ? h0q[q] : 0;
    }
};

struct IncidenceRecord {
    std::string child;   // stratum id at level r+1
    std::string dropped; // component label removed from the child's subset
    std::string parent;  // stratum id at level r
};

/// One pullback block: the map on (0,q) Hodge pieces from the parent
/// stratum (child's subset minus `dropped`) to the child.
struct PullbackBlock {
    int q = 0;
    std::string child;
    std::string dropped;
    RatMatrix matrix; // child.h(q) x parent.h(q)
};

struct ValidationIssue {
    std::string stratum_id; // offending stratum (may be empty for global issues)
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

class SncConfiguration {
public:
    int dim_g = 0;
    std::vector<std::string> components;
    std::vector<StratumComponent> strata; // file order preserved
    std::vector<IncidenceRecord> incidence;
    std::vector<PullbackBlock> pullbacks;
    /// User assertion that the configuration is the reduced exceptional
    /// fiber of a resolution that is an isomorphism outside one point;
    /// not checkable from combinatorics, recorded and passed through.
    bool isolated_resolution_assertion = false;

    static SncConfiguration fromJson(const nlohmann::json& j);
    static SncConfiguration loadFile(const std::string& path);
    nlohmann::json toJson() const;

    /// Checks the structural invariants; returns all violations instead of
    /// stopping at the first. The complex condition on supplied pullback
    /// matrices needs chain assembly and is checked by validate_config().
    ValidationReport validate() const;

    int componentIndex(const std::string& label) const; // -1 when absent
    const StratumComponent* findStratum(const std::string& id) const;
    std::vector<const StratumComponent*> strataAtLevel(int level) const;
    int maxLevel() const;

    /// Parent stratum of (child id, dropped component index), resolved from
    /// the incidence records. Only meaningful on a valid configuration.
    const StratumComponent* incidenceParent(const std::string& child_id, int dropped) const;
};

} // namespace wmi

#endif
