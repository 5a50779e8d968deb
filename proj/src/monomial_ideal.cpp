#include "wmi/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wmi {

bool divides(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("exponent vectors of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MonomialIdeal MonomialIdeal::minimalize(int ambient_dim, std::vector<ExponentVector> gens) {
    if (ambient_dim < 1)
        throw InvalidInput("ambient dimension must be positive");
    for (const ExponentVector& g : gens) {
        if (static_cast<int>(g.size()) != ambient_dim)
            throw DimensionMismatch("generator length does not match ambient dimension");
        for (int e : g)
            if (e < 0) throw InvalidInput("negative exponent in generator");
    }

    // Lex order with x1 > x2 > ... and the leading generator first.
    std::sort(gens.begin(), gens.end(), std::greater<>());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<ExponentVector> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
            if (j != i && divides(gens[j], gens[i])) dominated = true;
        if (!dominated) minimal.push_back(gens[i]);
    }
    return MonomialIdeal(ambient_dim, std::move(minimal));
}

MonomialIdeal MonomialIdeal::unit(int ambient_dim) {
    return minimalize(ambient_dim, {ExponentVector(ambient_dim, 0)});
}

MonomialIdeal MonomialIdeal::zero(int ambient_dim) {
    return minimalize(ambient_dim, {});
}

bool MonomialIdeal::isUnit() const {
    return gens_.size() == 1 &&
           std::all_of(gens_[0].begin(), gens_[0].end(), [](int e) { return e == 0; });
}

bool MonomialIdeal::contains(const ExponentVector& e) const {
    if (static_cast<int>(e.size()) != ambient_dim_)
        throw DimensionMismatch("exponent length does not match ambient dimension");
    for (const ExponentVector& g : gens_)
        if (divides(g, e)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    if (other.ambient_dim_ != ambient_dim_)
        throw DimensionMismatch("ideals in different ambient dimensions");
    for (const ExponentVector& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
    if (other.ambient_dim_ != ambient_dim_)
        throw DimensionMismatch("ideals in different ambient dimensions");
    std::vector<ExponentVector> lcms;
    lcms.reserve(gens_.size() * other.gens_.size());
    for (const ExponentVector& a : gens_)
        for (const ExponentVector& b : other.gens_) {
            ExponentVector m(ambient_dim_);
            for (int i = 0; i < ambient_dim_; ++i) m[i] = std::max(a[i], b[i]);
            lcms.push_back(std::move(m));
        }
    return minimalize(ambient_dim_, std::move(lcms));
}

std::optional<long long> MonomialIdeal::colength() const {
    if (isUnit()) return 0;
    if (isZero()) return std::nullopt;

    // Finite iff every variable has a pure power among the generators.
    // In that case the standard monomials all lie in the box
    // prod_i [0, max_g g_i), which we enumerate directly.
    std::vector<int> box(ambient_dim_, 0);
    long long volume = 1;
    for (int i = 0; i < ambient_dim_; ++i) {
        bool pure = false;
        for (const ExponentVector& g : gens_) {
            box[i] = std::max(box[i], g[i]);
            bool only_i = g[i] > 0;
            for (int k = 0; k < ambient_dim_ && only_i; ++k)
                if (k != i && g[k] > 0) only_i = false;
            if (only_i) pure = true;
        }
        if (!pure) return std::nullopt;
        volume *= std::max(box[i], 1);
        if (volume > 100'000'000)
            throw InvalidInput("colength enumeration would visit more than 10^8 monomials");
    }

    long long count = 0;
    ExponentVector e(ambient_dim_, 0);
    while (true) {
        if (!contains(e)) ++count;
        int i = 0;
        while (i < ambient_dim_ && ++e[i] >= box[i]) e[i++] = 0;
        if (i == ambient_dim_) break;
    }
    return count;
}

std::string MonomialIdeal::render() const {
    if (isZero()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k > 0) os << ", ";
        const ExponentVector& g = gens_[k];
        bool constant = true;
        bool first = true;
        for (int i = 0; i < ambient_dim_; ++i) {
            if (g[i] == 0) continue;
            constant = false;
            if (!first) os << " ";
            first = false;
            os << "x" << (i + 1);
            if (g[i] > 1) os << "^" << g[i];
        }
        if (constant) os << "1";
    }
    os << ")";
    return os.str();
}

nlohmann::json MonomialIdeal::toJson() const {
    nlohmann::json j;
    j["vars"] = ambient_dim_;
    j["gens"] = nlohmann::json::array();
    for (const ExponentVector& g : gens_) j["gens"].push_back(g);
    return j;
}

MonomialIdeal MonomialIdeal::fromJson(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
        throw InvalidInput("monomial ideal JSON must be {\"vars\": n, \"gens\": [...]}");
    if (!j["vars"].is_number_integer())
        throw InvalidInput("\"vars\" must be an integer");
    int n = j["vars"].get<int>();
    if (!j["gens"].is_array())
        throw InvalidInput("\"gens\" must be an array of exponent vectors");
    std::vector<ExponentVector> gens;
    for (const auto& row : j["gens"]) {
        if (!row.is_array())
            throw InvalidInput("each generator must be an array of integers");
        ExponentVector g;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw InvalidInput("exponents must be integers");
            g.push_back(v.get<int>());
        }
        gens.push_back(std::move(g));
    }
    return minimalize(n, std::move(gens));
}

} // namespace wmi
