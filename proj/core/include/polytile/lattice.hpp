#pragma once

#include "polytile/geometry.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace polytile {

// Full-rank sublattice of Z^2 in Hermite normal form. The matrix [[a,b],[0,d]]
// holds the basis as columns (a,0) and (b,d) with a,d >= 1 and 0 <= b < a, so
// every sublattice has exactly one representation.
struct Lattice {
    long long a = 1;
    long long b = 0;
    long long d = 1;

    long long index() const { return a * d; }
    bool contains(IVec v) const;
    // Canonical coset representative with 0 <= x < a, 0 <= y < d.
    IVec reduce(IVec v) const;
    // Basis vectors as columns of [[a,b],[0,d]].
    IVec u() const { return {a, 0}; }
    IVec w() const { return {b, d}; }
    // Smallest positive y with (0,y) in the lattice.
    long long vertical_period() const;
    // Smallest positive x with (x,0) in the lattice (that is just a).
    long long horizontal_period() const { return a; }

    friend auto operator<=>(const Lattice&, const Lattice&) = default;
};

// All HNF lattices with index <= max_index, ordered by (index, a, b);
// there are sigma(n) of them at each exact index n.
std::vector<Lattice> enumerate_lattices(long long max_index);

// Stream over the same order, resumable by item count.
class LatticeStream {
public:
    LatticeStream() { advance_index(); }

    Lattice next();
    // Index of the lattice next() would return.
    long long peek_index() const { return index_; }
    long long position() const { return position_; }
    // Skips forward so that position() == target.
    void fast_forward(long long target);

private:
    void advance_index();

    long long index_ = 0;
    std::vector<long long> divisors_;
    size_t divisor_pos_ = 0;
    long long b_ = 0;
    long long position_ = 0;
};

// Subgroup of Z^2 of rank 0, 1 or 2 in canonical form.
struct Subgroup {
    int rank = 0;
    IVec gen1{0, 0};          // rank >= 1; canonical sign, minimal generator
    std::optional<Lattice> full; // rank == 2

    bool contains(IVec v) const;
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Subgroup subgroup_from_generators(const std::vector<IVec>& gens);

// Requires the generators to span a rank-2 group.
Lattice lattice_from_generators(const std::vector<IVec>& gens);

Lattice intersect(const Lattice& l1, const Lattice& l2);

// Representatives of Z^2 / L in reduce() order (y-major).
std::vector<IVec> coset_representatives(const Lattice& l);

// Representatives of L / S for a finite-index subgroup S of lattice L.
std::vector<IVec> coset_representatives(const Lattice& l, const Lattice& s);

// Rational full-rank lattice (1/den) * L with L an integer HNF lattice;
// canonical: den minimal.
struct RatLattice {
    Lattice num;
    long long den = 1;

    bool contains(const RatPoint& v) const;
    Rational covolume() const;
    friend bool operator==(const RatLattice&, const RatLattice&) = default;
};

RatLattice make_rat_lattice(Lattice num, long long den);
RatLattice rat_lattice_from_generators(const std::vector<RatPoint>& gens);

} // namespace polytile
