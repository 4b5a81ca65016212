#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "flatk/root_datum.hpp"

namespace flatk {

// Virtual character of the maximal torus: finite weight support with integer
// multiplicities, no explicit zeros.
class Character {
public:
    using Map = std::map<Weight, long>;

    Character() = default;

    void add(const Weight& w, long mult) {
        if (mult == 0)
            return;
        auto it = support_.find(w);
        if (it == support_.end()) {
            support_.emplace(w, mult);
            return;
        }
        it->second += mult;
        if (it->second == 0)
            support_.erase(it);
    }

    const Map& support() const { return support_; }
    bool empty() const { return support_.empty(); }

    long degree() const {
        long acc = 0;
        for (const auto& [w, m] : support_)
            acc += m;
        return acc;
    }

    friend bool operator==(const Character& a, const Character& b) {
        return a.support_ == b.support_;
    }

private:
    Map support_;
};

Character trivial_character(int rank);

// Full weight support of the irreducible with the given dominant highest
// weight, via the Freudenthal recursion. Throws NonDominant otherwise.
Character weight_multiplicities(const RootDatum& d, const Weight& highest);

// Memoized weight_multiplicities. When FLATK_CACHE_DIR is set the table is
// also mirrored to disk, keyed by type/rank/highest weight.
const Character& cached_character(const RootDatum& d, const Weight& highest);

// Weyl dimension formula; always an exact integer.
long weyl_dimension(const RootDatum& d, const Weight& highest);

// Adams operation psi^j: scales every weight by j.
Character adams(const Character& c, long j);

// Character of the dual representation.
Character dual_character(const RootDatum& d, const Character& c);

// Exact evaluation at a torus point.
Cyclo char_eval(const RootDatum& d, const Character& c, const TorusPoint& g);

} // namespace flatk
