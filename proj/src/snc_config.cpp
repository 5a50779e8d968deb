#include "wmi/snc_config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wmi {

namespace {

Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return Rational(v.get<std::string>());
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse rational \"" + v.get<std::string>() + "\"");
        }
    }
    throw InvalidInput("matrix entries must be integers or \"p/q\" strings");
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << issues.size() << " validation issue(s)";
    for (const ValidationIssue& i : issues) {
        os << "; ";
        if (!i.stratum_id.empty()) os << "[" << i.stratum_id << "] ";
        os << i.message;
    }
    return os.str();
}

SncConfiguration SncConfiguration::fromJson(const nlohmann::json& j) {
    if (!j.is_object())
        throw InvalidInput("configuration must be a JSON object");
    SncConfiguration cfg;

    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InvalidInput("configuration needs an integer \"dim\"");
    cfg.dim_g = j["dim"].get<int>();

    if (!j.contains("components") || !j["components"].is_array())
        throw InvalidInput("configuration needs a \"components\" array");
    for (const auto& c : j["components"]) {
        if (!c.is_string()) throw InvalidInput("component labels must be strings");
        cfg.components.push_back(c.get<std::string>());
    }

    if (!j.contains("strata") || !j["strata"].is_array())
        throw InvalidInput("configuration needs a \"strata\" array");
    for (const auto& s : j["strata"]) {
        if (!s.is_object() || !s.contains("id") || !s.contains("subset") || !s.contains("h0q"))
            throw InvalidInput("each stratum needs \"id\", \"subset\", \"h0q\"");
        StratumComponent sc;
        sc.id = s["id"].get<std::string>();
        if (!s["subset"].is_array())
            throw InvalidInput("stratum subset must be an array of component labels");
        for (const auto& lbl : s["subset"]) {
            const int idx = cfg.componentIndex(lbl.get<std::string>());
            if (idx < 0)
                throw InvalidInput("stratum \"" + sc.id + "\" references unknown component \"" +
                                   lbl.get<std::string>() + "\"");
            sc.subset.push_back(idx);
        }
        std::sort(sc.subset.begin(), sc.subset.end());
        if (!s["h0q"].is_array())
            throw InvalidInput("stratum h0q must be an array of integers");
        for (const auto& h : s["h0q"]) {
            if (!h.is_number_integer())
                throw InvalidInput("h0q entries must be integers");
            sc.h0q.push_back(h.get<long long>());
        }
        cfg.strata.push_back(std::move(sc));
    }

    if (j.contains("incidence")) {
        if (!j["incidence"].is_array())
            throw InvalidInput("\"incidence\" must be an array");
        for (const auto& r : j["incidence"]) {
            if (!r.is_object() || !r.contains("child") || !r.contains("dropped") ||
                !r.contains("parent"))
                throw InvalidInput("each incidence record needs \"child\", \"dropped\", \"parent\"");
            cfg.incidence.push_back({r["child"].get<std::string>(),
                                     r["dropped"].get<std::string>(),
                                     r["parent"].get<std::string>()});
        }
    }

    if (j.contains("pullbacks")) {
        if (!j["pullbacks"].is_array())
            throw InvalidInput("\"pullbacks\" must be an array");
        for (const auto& p : j["pullbacks"]) {
            if (!p.is_object() || !p.contains("q") || !p.contains("child") ||
                !p.contains("dropped") || !p.contains("matrix"))
                throw InvalidInput("each pullback needs \"q\", \"child\", \"dropped\", \"matrix\"");
            PullbackBlock b;
            b.q = p["q"].get<int>();
            b.child = p["child"].get<std::string>();
            b.dropped = p["dropped"].get<std::string>();
            const auto& rows = p["matrix"];
            if (!rows.is_array())
                throw InvalidInput("pullback matrix must be an array of rows");
            const std::size_t nr = rows.size();
            std::size_t nc = 0;
            if (nr > 0) {
                if (!rows[0].is_array())
                    throw InvalidInput("pullback matrix rows must be arrays");
                nc = rows[0].size();
            }
            b.matrix = RatMatrix(nr, nc);
            for (std::size_t i = 0; i < nr; ++i) {
                if (!rows[i].is_array() || rows[i].size() != nc)
                    throw InvalidInput("pullback matrix rows must have equal length");
                for (std::size_t k = 0; k < nc; ++k)
                    b.matrix(i, k) = rational_from_json(rows[i][k]);
            }
            cfg.pullbacks.push_back(std::move(b));
        }
    }

    if (j.contains("assumes") && j["assumes"].is_object()) {
        const auto& a = j["assumes"];
        if (a.contains("resolution_isomorphic_outside_point"))
            cfg.isolated_resolution_assertion =
                a["resolution_isomorphic_outside_point"].get<bool>();
    }

    return cfg;
}

SncConfiguration SncConfiguration::loadFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open configuration file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return fromJson(j);
}

nlohmann::json SncConfiguration::toJson() const {
    nlohmann::json j;
    j["dim"] = dim_g;
    j["components"] = components;
    j["strata"] = nlohmann::json::array();
    for (const StratumComponent& s : strata) {
        nlohmann::json js;
        js["id"] = s.id;
        js["subset"] = nlohmann::json::array();
        for (int idx : s.subset) js["subset"].push_back(components[idx]);
        js["h0q"] = s.h0q;
        j["strata"].push_back(std::move(js));
    }
    j["incidence"] = nlohmann::json::array();
    for (const IncidenceRecord& r : incidence)
        j["incidence"].push_back({{"child", r.child}, {"dropped", r.dropped}, {"parent", r.parent}});
    if (!pullbacks.empty()) {
        j["pullbacks"] = nlohmann::json::array();
        for (const PullbackBlock& b : pullbacks) {
            nlohmann::json jb;
            jb["q"] = b.q;
            jb["child"] = b.child;
            jb["dropped"] = b.dropped;
            jb["matrix"] = nlohmann::json::array();
            for (std::size_t i = 0; i < b.matrix.rows(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t k = 0; k < b.matrix.cols(); ++k)
                    row.push_back(rational_to_string(b.matrix(i, k)));
                jb["matrix"].push_back(std::move(row));
            }
            j["pullbacks"].push_back(std::move(jb));
        }
    }
    if (isolated_resolution_assertion)
        j["assumes"] = {{"resolution_isomorphic_outside_point", true}};
    return j;
}

int SncConfiguration::componentIndex(const std::string& label) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i] == label) return static_cast<int>(i);
    return -1;
}

const StratumComponent* SncConfiguration::findStratum(const std::string& id) const {
    for (const StratumComponent& s : strata)
        if (s.id == id) return &s;
    return nullptr;
}

std::vector<const StratumComponent*> SncConfiguration::strataAtLevel(int level) const {
    std::vector<const StratumComponent*> out;
    for (const StratumComponent& s : strata)
        if (s.level() == level) out.push_back(&s);
    return out;
}

int SncConfiguration::maxLevel() const {
    int m = 0;
    for (const StratumComponent& s : strata) m = std::max(m, s.level());
    return m;
}

const StratumComponent* SncConfiguration::incidenceParent(const std::string& child_id,
                                                          int dropped) const {
    if (dropped < 0 || dropped >= static_cast<int>(components.size())) return nullptr;
    const std::string& label = components[dropped];
    for (const IncidenceRecord& r : incidence)
        if (r.child == child_id && r.dropped == label) return findStratum(r.parent);
    return nullptr;
}

ValidationReport SncConfiguration::validate() const {
    ValidationReport rep;
    auto issue = [&rep](const std::string& id, const std::string& msg) {
        rep.issues.push_back({id, msg});
    };

    if (dim_g < 0) issue("", "dim must be nonnegative");
    if (components.empty()) issue("", "no components");
    {
        std::set<std::string> seen;
        for (const std::string& c : components)
            if (!seen.insert(c).second) issue("", "duplicate component label \"" + c + "\"");
    }

    std::set<std::string> ids;
    for (const StratumComponent& s : strata) {
        if (!ids.insert(s.id).second) issue(s.id, "duplicate stratum id");
        if (s.subset.empty()) {
            issue(s.id, "empty subset");
            continue;
        }
        bool subset_ok = true;
        for (std::size_t i = 0; i < s.subset.size(); ++i) {
            if (s.subset[i] < 0 || s.subset[i] >= static_cast<int>(components.size())) {
                issue(s.id, "subset index out of range");
                subset_ok = false;
            }
            if (i > 0 && s.subset[i] <= s.subset[i - 1]) {
                issue(s.id, "subset has repeated components");
                subset_ok = false;
            }
        }
        if (!subset_ok) continue;
        const int level = s.level();
        const int stratum_dim = dim_g - level + 1;
        if (stratum_dim < 0) {
            issue(s.id, "level exceeds dim + 1 (stratum would have negative dimension)");
            continue;
        }
        if (static_cast<int>(s.h0q.size()) != stratum_dim + 1)
            issue(s.id, "h0q must list q = 0.." + std::to_string(stratum_dim));
        if (!s.h0q.empty() && s.h0q[0] != 1)
            issue(s.id, "h^{0,0} must be 1 (one record per connected component)");
        for (long long h : s.h0q)
            if (h < 0) issue(s.id, "negative Hodge number");
    }

    // Exactly one level-1 stratum per component.
    for (std::size_t i = 0; i < components.size(); ++i) {
        int count = 0;
        for (const StratumComponent& s : strata)
            if (s.subset == std::vector<int>{static_cast<int>(i)}) ++count;
        if (count != 1)
            issue(components[i], "component must have exactly one level-1 stratum (found " +
                                     std::to_string(count) + ")");
    }

    // Incidence: each level-(r+1) stratum lists exactly one parent per
    // dropped component, and the parent's subset matches.
    for (const StratumComponent& s : strata) {
        if (s.level() < 2) continue;
        for (int idx : s.subset) {
            if (idx < 0 || idx >= static_cast<int>(components.size())) continue;
            const std::string& label = components[idx];
            int matches = 0;
            for (const IncidenceRecord& r : incidence) {
                if (r.child != s.id || r.dropped != label) continue;
                ++matches;
                const StratumComponent* parent = findStratum(r.parent);
                if (parent == nullptr) {
                    issue(s.id, "missing incidence target \"" + r.parent + "\"");
                    continue;
                }
                std::vector<int> expected;
                for (int k : s.subset)
                    if (k != idx) expected.push_back(k);
                if (parent->subset != expected)
                    issue(s.id, "incidence parent \"" + r.parent + "\" has the wrong subset");
            }
            if (matches == 0)
                issue(s.id, "no incidence parent for dropped component \"" + label + "\"");
            else if (matches > 1)
                issue(s.id, "multiple incidence parents for dropped component \"" + label + "\"");
        }
    }
    for (const IncidenceRecord& r : incidence) {
        const StratumComponent* child = findStratum(r.child);
        if (child == nullptr) {
            issue(r.child, "incidence child does not exist");
            continue;
        }
        if (child->level() < 2) issue(r.child, "incidence child must be at level >= 2");
        const int didx = componentIndex(r.dropped);
        if (didx < 0 ||
            std::find(child->subset.begin(), child->subset.end(), didx) == child->subset.end())
            issue(r.child, "dropped component \"" + r.dropped + "\" not in child's subset");
    }

    // Pullback blocks: shape checks here; completeness and the complex
    // condition (delta o delta = 0) are checked by the chain assembly.
    for (const PullbackBlock& b : pullbacks) {
        if (b.q < 1) {
            issue(b.child, "pullback q must be >= 1");
            continue;
        }
        const StratumComponent* child = findStratum(b.child);
        if (child == nullptr) {
            issue(b.child, "pullback child does not exist");
            continue;
        }
        const int didx = componentIndex(b.dropped);
        if (didx < 0) {
            issue(b.child, "pullback dropped component \"" + b.dropped + "\" unknown");
            continue;
        }
        const StratumComponent* parent = incidenceParent(b.child, didx);
        if (parent == nullptr) {
            issue(b.child, "pullback block has no matching incidence record");
            continue;
        }
        if (static_cast<long long>(b.matrix.rows()) != child->h(b.q) ||
            static_cast<long long>(b.matrix.cols()) != parent->h(b.q))
            issue(b.child, "pullback matrix for q=" + std::to_string(b.q) +
                               " has the wrong shape (want " + std::to_string(child->h(b.q)) +
                               "x" + std::to_string(parent->h(b.q)) + ")");
    }

    return rep;
}

} // namespace wmi
