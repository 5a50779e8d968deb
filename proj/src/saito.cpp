#include "wmi/saito.hpp"

#include <sstream>
#include <stdexcept>

namespace wmi {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty())
        throw InvalidInput("weight vector must have at least one entry");
    for (const Rational& w : weights_)
        if (w <= 0) throw InvalidInput("all weights must be positive");
}

WeightVector WeightVector::parse(const std::string& text) {
    std::vector<Rational> ws;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty())
            throw InvalidInput("empty weight entry in \"" + text + "\"");
        try {
            ws.emplace_back(Rational(part));
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse weight \"" + part + "\" (expected p/q)");
        }
    }
    return WeightVector(std::move(ws));
}

Rational WeightVector::dot(const ExponentVector& e) const {
    if (e.size() != weights_.size())
        throw DimensionMismatch("exponent length does not match weight count");
    Rational acc = 0;
    for (std::size_t i = 0; i < e.size(); ++i) acc += weights_[i] * e[i];
    return acc;
}

Rational WeightVector::sum() const {
    Rational acc = 0;
    for (const Rational& w : weights_) acc += w;
    return acc;
}

MonomialIdeal weighted_ideal(const WeightVector& w, bool strict) {
    const int n = static_cast<int>(w.size());
    // <w, e+1> >= 1 rewrites as <w, e> >= t with t = 1 - <w, 1>.
    const Rational t = 1 - w.sum();
    if ((!strict && t <= 0) || (strict && t < 0))
        return MonomialIdeal::unit(n);

    // Every minimal generator e has e_i <= ceil(t / w_i) in each coordinate
    // (dropping one from a larger entry still satisfies the inequality), so
    // enumerating the box with one unit of headroom is complete.
    std::vector<int> box(n);
    long long volume = 1;
    for (int i = 0; i < n; ++i) {
        box[i] = static_cast<int>(ceil_rational(t / w.weights()[i])) + 1;
        volume *= box[i] + 1;
        if (volume > 100'000'000)
            throw InvalidInput("weight enumeration would visit more than 10^8 exponents");
    }

    std::vector<ExponentVector> members;
    ExponentVector e(n, 0);
    while (true) {
        const Rational v = w.dot(e);
        if (strict ? v > t : v >= t) members.push_back(e);
        int i = 0;
        while (i < n && ++e[i] > box[i]) e[i++] = 0;
        if (i == n) break;
    }
    return MonomialIdeal::minimalize(n, std::move(members));
}

bool is_log_canonical(const WeightVector& w) {
    return w.sum() >= 1;
}

WeightedChain wh_chain(const WeightVector& w) {
    WeightedChain chain{weighted_ideal(w, true), weighted_ideal(w, false)};
    if (!chain.i0.contains(chain.adj))
        throw std::logic_error("weighted ideal chain violated");
    return chain;
}

long long adjoint_colength(const WeightVector& w) {
    const auto c = weighted_ideal(w, true).colength();
    if (!c)
        throw std::logic_error("adjoint ideal colength must be finite for positive weights");
    return *c;
}

} // namespace wmi
