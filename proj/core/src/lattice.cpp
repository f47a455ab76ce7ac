#include "polytile/lattice.hpp"

#include "polytile/errors.hpp"

#include <algorithm>
#include <numeric>

namespace polytile {

namespace {

long long floordiv(long long x, long long y) {
    long long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

long long mod(long long x, long long y) { return x - floordiv(x, y) * y; }

// g = s*x + t*y with g = gcd(x,y) >= 0
long long xgcd(long long x, long long y, long long& s, long long& t) {
    if (y == 0) {
        s = (x < 0) ? -1 : 1;
        t = 0;
        return std::abs(x);
    }
    long long s1, t1;
    const long long g = xgcd(y, mod(x, y), s1, t1);
    s = t1;
    t = s1 - floordiv(x, y) * t1;
    return g;
}

} // namespace

bool Lattice::contains(IVec v) const {
    if (mod(v.y, d) != 0) return false;
    const long long k = v.y / d;
    return mod(v.x - k * b, a) == 0;
}

IVec Lattice::reduce(IVec v) const {
    const long long ry = mod(v.y, d);
    const long long k = (v.y - ry) / d;
    const long long rx = mod(v.x - k * b, a);
    return {rx, ry};
}

long long Lattice::vertical_period() const {
    return d * (a / std::gcd(a, b == 0 ? a : b));
}

std::vector<Lattice> enumerate_lattices(long long max_index) {
    std::vector<Lattice> out;
    for (long long n = 1; n <= max_index; ++n) {
        for (long long a = 1; a <= n; ++a) {
            if (n % a != 0) continue;
            const long long d = n / a;
            for (long long b = 0; b < a; ++b) {
                out.push_back({a, b, d});
            }
        }
    }
    return out;
}

void LatticeStream::advance_index() {
    ++index_;
    divisors_.clear();
    for (long long a = 1; a <= index_; ++a) {
        if (index_ % a == 0) divisors_.push_back(a);
    }
    divisor_pos_ = 0;
    b_ = 0;
}

Lattice LatticeStream::next() {
    const long long a = divisors_[divisor_pos_];
    const Lattice out{a, b_, index_ / a};
    ++position_;
    ++b_;
    if (b_ == a) {
        b_ = 0;
        ++divisor_pos_;
        if (divisor_pos_ == divisors_.size()) advance_index();
    }
    return out;
}

void LatticeStream::fast_forward(long long target) {
    while (position_ < target) next();
}

bool Subgroup::contains(IVec v) const {
    switch (rank) {
    case 0:
        return v.x == 0 && v.y == 0;
    case 1: {
        if (gen1.x == 0 && gen1.y == 0) return v.x == 0 && v.y == 0;
        // v = k * gen1 for integer k
        if (gen1.x != 0) {
            if (mod(v.x, gen1.x) != 0) return false;
            const long long k = v.x / gen1.x;
            return v.y == k * gen1.y;
        }
        if (v.x != 0) return false;
        return mod(v.y, gen1.y) == 0;
    }
    default:
        return full->contains(v);
    }
}

Subgroup subgroup_from_generators(const std::vector<IVec>& gens) {
    std::vector<IVec> vs;
    for (const auto& g : gens) {
        if (g.x != 0 || g.y != 0) vs.push_back(g);
    }
    Subgroup out;
    if (vs.empty()) return out;

    // Fold the y components to their gcd, tracking the combination.
    IVec w{0, 0};
    for (const auto& v : vs) {
        if (v.y == 0) continue;
        if (w.y == 0) {
            w = v.y > 0 ? v : -v;
            continue;
        }
        long long s, t;
        const long long g = xgcd(w.y, v.y, s, t);
        w = {s * w.x + t * v.x, g};
    }

    // Remaining x-axis content.
    long long ax = 0;
    for (const auto& v : vs) {
        IVec r = v;
        if (w.y != 0) {
            const long long k = v.y / w.y; // exact: w.y divides every y
            r = v - k * w;
        }
        ax = std::gcd(ax, std::abs(r.x));
    }

    if (w.y == 0) {
        // all generators horizontal
        out.rank = 1;
        out.gen1 = {ax, 0};
        return out;
    }
    if (ax == 0) {
        out.rank = 1;
        out.gen1 = w; // w.y > 0 by construction
        return out;
    }
    out.rank = 2;
    out.gen1 = {ax, 0};
    out.full = Lattice{ax, mod(w.x, ax), w.y};
    return out;
}

Lattice lattice_from_generators(const std::vector<IVec>& gens) {
    const Subgroup s = subgroup_from_generators(gens);
    if (s.rank != 2) {
        throw InvariantViolationError("generators do not span a full-rank lattice");
    }
    return *s.full;
}

Lattice intersect(const Lattice& l1, const Lattice& l2) {
    // x in l1 cap l2  <=>  x = M2 w  with  adj(M1) M2 w == 0 (mod det M1)
    const long long det1 = l1.index();
    // adj(M1) = [[d1, -b1], [0, a1]]
    const long long m00 = l1.d * l2.a;
    const long long m01 = l1.d * l2.b - l1.b * l2.d;
    const long long m10 = 0;
    const long long m11 = l1.a * l2.d;

    std::vector<IVec> kernel = {{det1, 0}, {0, det1}};
    for (long long wx = 0; wx < det1; ++wx) {
        for (long long wy = 0; wy < det1; ++wy) {
            if (mod(m00 * wx + m01 * wy, det1) == 0 &&
                mod(m10 * wx + m11 * wy, det1) == 0) {
                if (wx != 0 || wy != 0) kernel.push_back({wx, wy});
            }
        }
    }
    std::vector<IVec> gens;
    gens.reserve(kernel.size());
    for (const auto& w : kernel) {
        gens.push_back({l2.a * w.x + l2.b * w.y, l2.d * w.y});
    }
    return lattice_from_generators(gens);
}

std::vector<IVec> coset_representatives(const Lattice& l) {
    std::vector<IVec> out;
    out.reserve(static_cast<size_t>(l.index()));
    for (long long y = 0; y < l.d; ++y) {
        for (long long x = 0; x < l.a; ++x) {
            out.push_back({x, y});
        }
    }
    return out;
}

std::vector<IVec> coset_representatives(const Lattice& l, const Lattice& s) {
    std::vector<IVec> out;
    std::vector<IVec> seen;
    for (long long y = 0; y < s.d; ++y) {
        for (long long x = 0; x < s.a; ++x) {
            const IVec v{x, y};
            if (!l.contains(v)) continue;
            bool fresh = true;
            for (const auto& r : out) {
                if (s.contains(v - r)) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) out.push_back(v);
        }
    }
    return out;
}

bool RatLattice::contains(const RatPoint& v) const {
    const Rational sx = rat_of(den) * v.x;
    const Rational sy = rat_of(den) * v.y;
    if (!is_integer(sx) || !is_integer(sy)) return false;
    return num.contains({rational_to_int64(sx), rational_to_int64(sy)});
}

Rational RatLattice::covolume() const {
    return rat_of(num.index()) / (rat_of(den) * rat_of(den));
}

RatLattice make_rat_lattice(Lattice num, long long den) {
    if (den <= 0) throw InvariantViolationError("rational lattice needs a positive denominator");
    long long g = std::gcd(std::gcd(num.a, num.b), std::gcd(num.d, den));
    if (g > 1) {
        num.a /= g;
        num.b /= g;
        num.d /= g;
        den /= g;
        num.b = mod(num.b, num.a);
    }
    return RatLattice{num, den};
}

RatLattice rat_lattice_from_generators(const std::vector<RatPoint>& gens) {
    Integer den(1);
    for (const auto& g : gens) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g.x.get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g.y.get_den().get_mpz_t());
    }
    const long long q = to_int64(den);
    std::vector<IVec> igens;
    for (const auto& g : gens) {
        igens.push_back({rational_to_int64(rat_of(q) * g.x),
                         rational_to_int64(rat_of(q) * g.y)});
    }
    return make_rat_lattice(lattice_from_generators(igens), q);
}

} // namespace polytile
