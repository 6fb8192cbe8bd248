#include "tg/galois.hpp"

#include <algorithm>
#include <set>

#include "tg/fppoly.hpp"
#include "tg/quadext.hpp"

namespace tg {

Mat2F3 Mat2F3::of(int a, int b, int c, int d) {
    auto norm = [](int v) { return static_cast<std::uint8_t>(((v % 3) + 3) % 3); };
    return Mat2F3{{norm(a), norm(b), norm(c), norm(d)}};
}

Mat2F3 Mat2F3::operator*(const Mat2F3& o) const {
    return of(m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
              m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]);
}

int Mat2F3::det() const { return ((m[0] * m[3] - m[1] * m[2]) % 3 + 3) % 3; }

std::vector<Mat2F3> generate_closure(const std::vector<Mat2F3>& generators) {
    std::set<Mat2F3> seen{Mat2F3::identity()};
    std::vector<Mat2F3> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Mat2F3> next;
        for (const Mat2F3& g : frontier)
            for (const Mat2F3& h : generators) {
                Mat2F3 prod = g * h;
                if (seen.insert(prod).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

const std::vector<SubgroupInfo>& mod3_subgroup_table() {
    static const std::vector<SubgroupInfo> table = [] {
        std::vector<SubgroupInfo> t;
        auto M = Mat2F3::of;
        t.push_back({Mod3Label::GL2F3, "GL2(F3)", 48, true, false,
                     {M(1, 1, 0, 1), M(0, -1, 1, 0), M(1, 0, 0, -1)}});
        t.push_back({Mod3Label::SL2F3, "SL2(F3)", 24, true, true, {M(1, 1, 0, 1), M(0, -1, 1, 0)}});
        t.push_back({Mod3Label::SD16, "SD16", 16, true, false, {M(1, -1, 1, 1), M(1, 0, 0, -1)}});
        t.push_back({Mod3Label::D12, "D12", 12, true, false,
                     {M(1, 1, 0, 1), M(-1, 0, 0, 1), M(1, 0, 0, -1)}});
        t.push_back({Mod3Label::C8, "C8", 8, true, false, {M(1, -1, 1, 1)}});
        t.push_back({Mod3Label::D8, "D8", 8, true, false, {M(-1, 0, 0, 1), M(0, 1, 1, 0)}});
        t.push_back({Mod3Label::Q8, "Q8", 8, true, true, {M(0, 1, -1, 0), M(1, 1, 1, -1)}});
        t.push_back({Mod3Label::C6, "C6", 6, true, true, {M(-1, -1, 0, -1)}});
        t.push_back({Mod3Label::S3_Borel, "S3(Borel)", 6, false, false,
                     {M(1, 1, 0, 1), M(1, 0, 0, -1)}});
        t.push_back({Mod3Label::C4, "C4", 4, true, true, {M(0, 1, -1, 0)}});
        t.push_back({Mod3Label::V4, "V4", 4, true, false, {M(-1, 0, 0, 1), M(1, 0, 0, -1)}});
        t.push_back({Mod3Label::C3, "C3", 3, false, true, {M(1, 1, 0, 1)}});
        t.push_back({Mod3Label::TwoC2, "C2(split)", 2, false, false, {M(1, 0, 0, -1)}});
        t.push_back({Mod3Label::OneC2, "C2(-id)", 2, true, true, {M(-1, 0, 0, -1)}});
        t.push_back({Mod3Label::C1, "C1", 1, false, true, {}});
        return t;
    }();
    return table;
}

const SubgroupInfo& subgroup_info(Mod3Label label) {
    for (const SubgroupInfo& info : mod3_subgroup_table())
        if (info.label == label) return info;
    throw Error("subgroup_info: unknown label");
}

std::string to_string(Mod3Label label) { return subgroup_info(label).name; }

MinusIdProbe minus_id_probe(const CurveQ& E, long ell, long bound) {
    if (ell < 3 || !is_prime(Integer(ell)))
        throw ArgumentError("minus_id_probe: ell must be an odd prime");
    if (bound < 2) throw ArgumentError("minus_id_probe: bound must be >= 2");
    for (long p : primes_up_to(bound)) {
        if (p % ell != 1) continue;  // also rules out p = ell
        auto reduced = reduce_mod_p(E, p);
        if (!reduced || reduced->discriminant() == 0) continue;
        long a_p = ap(*reduced);
        if (((a_p + 2) % ell + ell) % ell == 0) return {true, p, bound, ell};
    }
    return {false, 0, bound, ell};
}

namespace {

// Discriminant in Y of w_E(x0, Y) = Y^2 + (a1 x0 + a3) Y - rhs(x0): the y-fiber
// over x0 is rational over a field K iff this is a square in K.
Rational y_fiber_disc(const CurveQ& E, const Rational& x0) {
    Rational q = E.a1() * x0 + E.a3();
    Rational s = E.rhs_x().evaluate(x0);
    return q * q + 4 * s;
}

QuadExt y_fiber_disc(const CurveQ& E, const QuadExt& x0) {
    const Rational& D = x0.D();
    auto lift = [&D](const Rational& r) { return quadext_rational(r, D); };
    QuadExt q = lift(E.a1()) * x0 + lift(E.a3());
    QuadExt s = evaluate_with<QuadExt>(E.rhs_x(), x0, lift);
    return q * q + lift(Rational(4)) * s;
}

bool rational_square_in(const Rational& v, const Rational& D) {
    if (is_square(v)) return true;
    return v != 0 && is_square(v / D).has_value();
}

}  // namespace

Mod3Classification classify_mod3(const CurveQ& E, long probe_bound) {
    DivisionPolynomials<Rational> dp(E);
    const PolyQ& psi3 = dp.psi_tilde(3);
    QuarticFactorization fac = factor_quartic(psi3);

    Mod3Classification out;
    out.shape = fac.shape;
    out.exact = true;
    out.quadratic_disc = Rational(0);

    switch (fac.shape) {
        case QuarticShape::Irreducible: {
            QuarticGroup g = quartic_galois(fac.factors[0]);
            out.quartic_group = g;
            switch (g) {
                case QuarticGroup::S4: out.label = Mod3Label::GL2F3; break;
                case QuarticGroup::D4: out.label = Mod3Label::SD16; break;
                case QuarticGroup::C4: out.label = Mod3Label::C8; break;
                default:
                    throw Error("classify_mod3: quartic group " + to_string(g) +
                                " cannot occur for a 3-division polynomial over Q");
            }
            return out;
        }
        case QuarticShape::TwoQuadratics:
            out.label = Mod3Label::D8;
            return out;
        case QuarticShape::LinearCubic: {
            // Index-4 point stabilizer line: image is the full Borel D12 iff -id
            // is in the image.  A probe hit proves D12; a miss leaves S3.
            MinusIdProbe probe = minus_id_probe(E, 3, probe_bound);
            out.probe = probe;
            out.label = probe.found ? Mod3Label::D12 : Mod3Label::S3_Borel;
            out.exact = probe.found;
            return out;
        }
        case QuarticShape::TwoLinearsQuadratic: {
            // x-field is Q(sqrt(D)) for D the discriminant of the quadratic
            // factor.  The image has order 2 iff every y-fiber over the four
            // x-roots is already rational over Q(sqrt(D)).
            const PolyQ& quad = fac.factors[2];
            Rational D = quad.coeff(1) * quad.coeff(1) - 4 * quad.coeff(0);
            out.quadratic_disc = D;
            bool all_split = true;
            for (const PolyQ& lin : {fac.factors[0], fac.factors[1]}) {
                Rational x0 = -lin.coeff(0);
                all_split = all_split && rational_square_in(y_fiber_disc(E, x0), D);
            }
            if (all_split) {
                // Conjugate quadratic roots x = (-u +- sqrt(D)) / 2.
                QuadExt x0(-quad.coeff(1) / 2, make_rational(1, 2), D);
                all_split = y_fiber_disc(E, x0).sqrt().has_value();
            }
            out.label = all_split ? Mod3Label::TwoC2 : Mod3Label::V4;
            return out;
        }
        case QuarticShape::Linears:
            // All of x(E[3]) rational forces the image inside {+-id}, whose
            // determinant misses -1: impossible over Q.
            throw Error("classify_mod3: psi~_3 fully split over Q is inconsistent with the Weil pairing");
    }
    throw Error("classify_mod3: unreachable");
}

IrreducibleVerdict probable_irreducible(const PolyQ& f, const std::vector<long>& primes) {
    const int deg = f.degree();
    if (deg < 1) throw ArgumentError("probable_irreducible: degree must be >= 1");
    if (deg > 63) throw ArgumentError("probable_irreducible: degree cap is 63");
    const std::uint64_t want = (1ULL << 0) | (1ULL << deg);
    std::uint64_t achievable = ~0ULL;  // intersection over usable primes
    bool any_prime_used = false;
    for (long p : primes) {
        auto pattern = mod_p_degree_pattern(f, p);
        if (!pattern) continue;
        std::uint64_t sums = 1;  // bit k set <=> some sub-multiset of degrees sums to k
        for (int d : *pattern) sums |= sums << d;
        achievable &= sums;
        any_prime_used = true;
        if (achievable == want) return IrreducibleVerdict::Certified;
    }
    (void)any_prime_used;
    return IrreducibleVerdict::Undecided;
}

std::string to_string(IrreducibleVerdict v) {
    return v == IrreducibleVerdict::Certified ? "irreducible (certified)" : "undecided";
}

}  // namespace tg
