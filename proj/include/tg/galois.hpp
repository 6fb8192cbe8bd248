#pragma once

// The mod-3 Galois image machinery: a table of the GL_2(F_3) subgroup classes that
// occur as images, a Frobenius probe certifying -id in the image, the classifier
// that combines the factorization type of psi~_3 with exact field arithmetic, and
// a multi-prime irreducibility certifier.

#include <optional>
#include <vector>

#include "tg/curve.hpp"
#include "tg/divpoly.hpp"

namespace tg {

// 2x2 matrices over F_3, row major.
struct Mat2F3 {
    std::array<std::uint8_t, 4> m;  // [a b; c d]

    static Mat2F3 of(int a, int b, int c, int d);
    static Mat2F3 identity() { return of(1, 0, 0, 1); }
    static Mat2F3 minus_identity() { return of(-1, 0, 0, -1); }

    Mat2F3 operator*(const Mat2F3& o) const;
    bool operator==(const Mat2F3& o) const { return m == o.m; }
    bool operator<(const Mat2F3& o) const { return m < o.m; }
    int det() const;  // in {1, 2}
};

// Closure of a generating set under multiplication.
std::vector<Mat2F3> generate_closure(const std::vector<Mat2F3>& generators);

enum class Mod3Label {
    GL2F3,     // all of GL_2(F_3), order 48
    SL2F3,     // order 24
    SD16,      // semidihedral Sylow-2, order 16
    D12,       // full Borel, order 12
    C8,        // cyclic, order 8
    D8,        // dihedral, order 8
    Q8,        // quaternion, order 8
    C6,        // cyclic, order 6
    S3_Borel,  // order 6, no -id
    C4,        // cyclic, order 4
    V4,        // Klein four with -id
    C3,        // order 3
    TwoC2,     // order 2 generated by diag(1, -1)
    OneC2,     // order 2 generated by -id
    C1,        // trivial
};

struct SubgroupInfo {
    Mod3Label label;
    const char* name;
    int order;
    bool contains_minus_id;
    bool inside_sl2;
    std::vector<Mat2F3> generators;
};

// One row per label, in the order of the enum.  generate_closure of the listed
// generators reproduces order/contains_minus_id/inside_sl2 (asserted by tests).
const std::vector<SubgroupInfo>& mod3_subgroup_table();
const SubgroupInfo& subgroup_info(Mod3Label label);
std::string to_string(Mod3Label label);

// Search for a good prime p <= bound with p = 1 and a_p = -2 (mod ell): the
// Frobenius at such p has characteristic polynomial (X + 1)^2 mod ell, and an odd
// power of it equals -id, so a hit proves -id lies in the mod-ell image.  A miss
// proves nothing (evidence only).
struct MinusIdProbe {
    bool found;
    long prime;  // witness when found
    long bound;  // search bound when not found
    long ell;
};

MinusIdProbe minus_id_probe(const CurveQ& E, long ell, long bound);

struct Mod3Classification {
    Mod3Label label;
    bool exact;  // false only for the probable S3-Borel branch (probe miss)
    QuarticShape shape;
    std::optional<QuarticGroup> quartic_group;  // set when psi~_3 is irreducible
    std::optional<MinusIdProbe> probe;          // set when the probe was consulted
    Rational quadratic_disc;                    // D with Q(x(E[3])) = Q(sqrt(D)), when used
};

// Image of the mod-3 representation, as a conjugacy class of subgroups of
// GL_2(F_3), decided from the factorization type of psi~_3 plus exact splitting
// tests; the only probabilistic branch is D12 vs S3_Borel, which consults the
// -id probe up to probe_bound.
Mod3Classification classify_mod3(const CurveQ& E, long probe_bound = 100000);

enum class IrreducibleVerdict { Certified, Undecided };

// Intersects the achievable factor-degree sums of f mod p over the given primes
// (skipping primes where reduction degenerates).  {0, deg f} left over certifies
// irreducibility over Q; anything else is Undecided (never "reducible").
IrreducibleVerdict probable_irreducible(const PolyQ& f, const std::vector<long>& primes);

std::string to_string(IrreducibleVerdict v);

}  // namespace tg
