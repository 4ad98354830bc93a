#include "formclass/modules.hpp"

#include <array>

#include "formclass/errors.hpp"
#include "formclass/forms.hpp"

namespace formclass {

void validate_frame(const GoodFrameModule& I) {
    validate_ring(I.ring);
    check_input(I.ring.t == I.a && I.ring.n == -I.b * I.c,
                "not a good frame: need t = a and n = -b*c");
}

Mat2 element_action(const GoodFrameModule& I, const RingElement& u) {
    return mat_add(mat_scale(u.x, mat_identity()),
                   mat_scale(u.y, I.action_matrix()));
}

GoodFrameModule regular_module(const QuadraticRing& r) {
    validate_ring(r);
    return GoodFrameModule{r, r.t, r.n, -1, 0};
}

bool is_pseudoregular(const QuadraticRing& r, const Mat2& M) {
    // The trace criterion needs the generator to act with nonzero norm on a
    // nondegenerate ring; n = 0 makes the action kill a rank-1 direction.
    check_input(r.disc() != 0 && r.n != 0,
                "degenerate ring: discriminant or generator norm is zero");
    Mat2 lhs = mat_mul(M, M);
    Mat2 rhs = mat_add(mat_scale(r.t, M), mat_scale(-r.n, mat_identity()));
    check_input(lhs == rhs, "not a module: matrix violates M^2 = t*M - n");
    return mat_trace(M) == r.t;
}

GoodFrameModule good_frame(const QuadraticRing& r, const Mat2& M) {
    check_input(is_pseudoregular(r, M),
                "not pseudoregular: trace of the action matrix must equal t");
    Int d = M.m22;
    QuadraticRing shifted{r.t - 2 * d, d * d - r.t * d + r.n};
    GoodFrameModule out{shifted, M.m11 - d, M.m12, M.m21, d};
    check_internal(out.ring.t == out.a && out.ring.n == -out.b * out.c,
                   "good-frame normalization broke the frame invariants");
    return out;
}

namespace {

BinaryForm frame_norm_form(const GoodFrameModule& I) {
    return BinaryForm{-I.c, I.a, I.b};
}

}  // namespace

bool is_invertible(const GoodFrameModule& I) {
    validate_frame(I);
    return is_primitive(frame_norm_form(I));
}

GoodFrameModule dual(const GoodFrameModule& I) {
    validate_frame(I);
    return GoodFrameModule{I.ring, I.a, I.c, I.b, I.shift};
}

QuadraticRing canonical_ring(const Int& D) {
    validate_discriminant(D);
    Int t0 = mod_floor(D, 2);
    return QuadraticRing{t0, (t0 * t0 - D) / 4};
}

namespace {

// Coordinates (x, y) of x + y*g0 in the canonical presentation.
struct Vec2 {
    Int x, y;
};

Vec2 canonical_mul(const QuadraticRing& r0, const Vec2& u, const Vec2& v) {
    Int yy = u.y * v.y;
    return Vec2{u.x * v.x - r0.n * yy, u.x * v.y + u.y * v.x + r0.t * yy};
}

Int exact_div(const Int& num, const Int& den, const char* what) {
    check_internal(den != 0 && num % den == 0, what);
    return num / den;
}

}  // namespace

GoodFrameModule module_mul(const GoodFrameModule& I, const GoodFrameModule& J) {
    validate_frame(I);
    validate_frame(J);
    check_input(is_invertible(I) && is_invertible(J),
                "non-invertible operand: norm form must be primitive");
    Int D = I.ring.disc();
    check_input(D == J.ring.disc(),
                "ring mismatch: modules live over different discriminants");

    QuadraticRing r0 = canonical_ring(D);
    // Frame (a, b, c) over (t, n) is the sublattice Z*b + Z*g of Z + Z*g with
    // ordered basis (g, b); rewrite g = g0 + d in the canonical presentation.
    auto lattice_basis = [&](const GoodFrameModule& F) -> std::array<Vec2, 2> {
        Int d = exact_div(F.ring.t - r0.t, 2, "presentation shift must be integral");
        return {Vec2{d, 1}, Vec2{F.b, 0}};
    };
    std::array<Vec2, 2> bi = lattice_basis(I);
    std::array<Vec2, 2> bj = lattice_basis(J);

    // The four pairwise generator products span the product lattice.
    std::array<Vec2, 4> gens;
    int k = 0;
    for (const Vec2& u : bi)
        for (const Vec2& v : bj) gens[k++] = canonical_mul(r0, u, v);

    // Hermite reduction to the basis (p + q*g0, r) with q > 0, r > 0,
    // 0 <= p < r.  First clear the g0-components by Euclid, then gcd the
    // remaining integers.
    Int p = 0, q = 0;
    for (Vec2& gen : gens) {
        while (gen.y != 0) {
            if (q == 0) {
                std::swap(p, gen.x);
                std::swap(q, gen.y);
                continue;
            }
            Int t = floor_div(gen.y, q);
            gen.x -= t * p;
            gen.y -= t * q;
            if (gen.y != 0) {
                std::swap(p, gen.x);
                std::swap(q, gen.y);
            }
        }
    }
    check_internal(q != 0, "product lattice lost full rank");
    if (q < 0) { q = -q; p = -p; }
    Int r = 0;
    for (const Vec2& gen : gens) r = gcd_of(r, gen.x);
    check_internal(r != 0, "product lattice lost full rank");
    p = mod_floor(p, r);

    // Action matrix of g0 on the basis (w1, w2) = (p + q*g0, r):
    //   g0*w1 = -q*n0 + (p + q*t0)*g0,   g0*w2 = r*g0.
    Int a1 = exact_div(p + q * r0.t, q, "ideal basis: q must divide p + q*t0");
    Int b1 = exact_div(-q * r0.n - a1 * p, r,
                       "ideal basis: r must divide the reduced constant term");
    Int a2 = exact_div(r, q, "ideal basis: q must divide r");
    Int b2 = exact_div(-a2 * p, r, "ideal basis: r must divide a2*p");
    Mat2 M{a1, a2, b1, b2};

    // Orientation: the operand frames carry orientation sign(b); the product
    // basis above is positively oriented, so conjugate by diag(1, -1) when
    // the product of the operand signs is negative.
    if (sign_of(I.b) * sign_of(J.b) < 0) {
        M.m12 = -M.m12;
        M.m21 = -M.m21;
    }

    check_internal(mat_trace(M) == r0.t && mat_det(M) == r0.n,
                   "product action matrix must have the canonical trace and norm");
    return good_frame(r0, M);
}

}  // namespace formclass
