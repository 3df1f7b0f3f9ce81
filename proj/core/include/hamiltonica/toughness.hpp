#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "hamiltonica/graph.hpp"
#include "hamiltonica/ham.hpp"

namespace hamiltonica {

struct Rational {
    long long num = 0, den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return !(a < b);
    }
    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

struct NotOneToughWitness {
    VertexSet s;          // separating set with omega(G-s) > |s|
    int components_after;
};

// Exhaustive 1-toughness decision, |V| <= 24.  The returned witness has
// minimum cardinality and is lexicographically least within it.
std::optional<NotOneToughWitness> is_one_tough(const Graph& g);

// Exact toughness min |S| / omega(G-S) over separating sets S; g must be
// connected, not complete, |V| <= 18.
Rational toughness(const Graph& g);

struct ToughnessReport {
    HamVerdict::Outcome ham;
    bool one_tough;
    bool implication_holds;  // Found => one_tough
};

// Runs both deciders and asserts hamiltonian => 1-tough on g.
ToughnessReport hamiltonian_implies_tough_check(const Graph& g,
                                                const SolverOptions& opts = {});

}  // namespace hamiltonica
