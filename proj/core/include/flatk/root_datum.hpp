#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatk/cyclo.hpp"
#include "flatk/rational.hpp"

namespace flatk {

// Lattice vector in fundamental-weight coordinates: entry j is the canonical
// pairing with the j-th simple coroot.
using Weight = std::vector<long>;

// General (possibly non-lattice) vector in the same coordinates.
struct WeightVec {
    std::vector<Rational> x;

    WeightVec() = default;
    explicit WeightVec(std::vector<Rational> v) : x(std::move(v)) {}
    explicit WeightVec(const Weight& w) {
        x.reserve(w.size());
        for (long v : w)
            x.emplace_back(v);
    }

    bool is_lattice() const {
        for (const auto& v : x)
            if (!v.is_integer())
                return false;
        return true;
    }

    Weight to_lattice() const; // throws when a coordinate is not an integer

    friend bool operator==(const WeightVec& a, const WeightVec& b) { return a.x == b.x; }
};

struct WeylElement {
    std::vector<long> mat; // rank*rank row-major matrix acting on coordinates
    int sign = 1;          // determinant, i.e. (-1)^length
};

// Point exp(lambda/ell) of the maximal torus, lambda a weight-lattice vector.
struct TorusPoint {
    Weight lambda;
    long ell = 1;
};

// Root datum of a simple, simply connected compact group, everything expressed
// in fundamental-weight coordinates under the basic inner product (short
// coroots of squared length 2).
class RootDatum {
public:
    char type = 'A';
    int rank = 0;

    std::vector<std::vector<long>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<Rational> d;                // half squared lengths of the simple roots
    std::vector<Weight> simple_roots;       // rows of the Cartan matrix
    std::vector<Weight> coroot_basis;       // images of the simple coroots in weight coordinates
    std::vector<Weight> positive_roots;     // closed list, height-sorted
    Weight rho;                             // all-ones
    Weight highest_root;
    long dual_coxeter = 0;
    long weight_coroot_index = 0;           // index of the coroot lattice inside the weight lattice
    std::vector<std::vector<Rational>> gram; // Gram matrix of the fundamental weights
    long gram_denominator = 1;               // lcm of the Gram entry denominators
    std::vector<WeylElement> weyl;           // full Weyl group, element 0 the identity
    int longest_index = 0;

    std::string label() const { return std::string(1, type) + std::to_string(rank); }

    Rational pairing(const Weight& a, const Weight& b) const;
    Rational pairing(const WeightVec& a, const WeightVec& b) const;

    Weight apply(const WeylElement& w, const Weight& v) const;

    bool is_dominant(const Weight& v) const {
        for (long c : v)
            if (c < 0)
                return false;
        return true;
    }

    // Index of the Weyl element sending v into the dominant chamber; also
    // returns the dominant representative.
    Weight dominant_representative(const Weight& v) const;

    const WeylElement& longest_element() const { return weyl[longest_index]; }

    // Dual (contragredient) highest weight -w0(lambda).
    Weight dual_highest_weight(const Weight& lambda) const;

    // e^mu(exp(lambda/ell)) as an exact root of unity.
    Cyclo torus_character(const TorusPoint& g, const Weight& mu) const;

    bool is_regular(const TorusPoint& g) const;
};

// Supported types: A_r (r <= 4), C_2, G_2. Anything else throws UnsupportedType.
const RootDatum& root_datum(char type, int rank);

// All of T_ell = (1/ell)Lambda / Pi in a canonical deterministic order, with
// regularity flags; plus one representative per Weyl orbit of regular points,
// chosen inside the open fundamental alcove.
struct TorusPointSet {
    std::vector<TorusPoint> points;
    std::vector<bool> regular;
    std::vector<TorusPoint> orbit_representatives;
};

TorusPointSet torus_points(const RootDatum& d, long ell);

// Antisymmetrized Weyl numerator sum_w sign(w) e^{w rho} at a torus point.
Cyclo weyl_denominator(const RootDatum& d, const TorusPoint& g);

} // namespace flatk
