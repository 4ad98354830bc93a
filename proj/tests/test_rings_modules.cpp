#include <doctest.h>

#include <random>

#include "formclass/clifford.hpp"
#include "formclass/errors.hpp"
#include "formclass/forms.hpp"
#include "formclass/modules.hpp"
#include "formclass/rings.hpp"

using namespace formclass;

namespace {

std::mt19937_64 rng(96485321);

Int rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(rng));
}

// Random frame with nonzero discriminant; optionally require an invertible
// (primitive norm form) module.
GoodFrameModule random_frame(long bound, bool invertible) {
    for (;;) {
        Int a = rand_int(-bound, bound);
        Int b = rand_int(-bound, bound);
        Int c = rand_int(-bound, bound);
        if (b == 0 || c == 0) continue;
        QuadraticRing r{a, -b * c};
        if (r.disc() == 0) continue;
        GoodFrameModule I{r, a, b, c, 0};
        if (invertible && !is_invertible(I)) continue;
        return I;
    }
}

}  // namespace

TEST_CASE("ring multiplication goldens") {
    QuadraticRing gaussian{0, 1};
    CHECK(ring_mul(gaussian, {0, 1}, {0, 1}) == RingElement{-1, 0});
    CHECK(ring_mul(gaussian, {1, 0}, {3, 4}) == RingElement{3, 4});
    QuadraticRing r16{1, 6};
    CHECK(ring_mul(r16, {0, 1}, {0, 1}) == RingElement{-6, 1});
    CHECK(ring_add(RingElement{2, 3}, RingElement{-1, 5}) == RingElement{1, 8});
    CHECK(ring_sub(RingElement{2, 3}, RingElement{-1, 5}) == RingElement{3, -2});
}

TEST_CASE("trace and norm goldens") {
    QuadraticRing gaussian{0, 1};
    CHECK(trace_norm(gaussian, {3, 4}) == std::pair<Int, Int>{6, 25});
    QuadraticRing r16{1, 6};
    CHECK(trace_norm(r16, {1, 0}) == std::pair<Int, Int>{2, 1});
    CHECK(trace_norm(gaussian, {1, 0}) == std::pair<Int, Int>{2, 1});
    CHECK(trace_norm(r16, {0, 1}) == std::pair<Int, Int>{1, 6});
}

TEST_CASE("involution goldens and defining identities") {
    QuadraticRing gaussian{0, 1};
    CHECK(involution(gaussian, {7, 0}) == RingElement{7, 0});
    CHECK(involution(gaussian, {3, 4}) == RingElement{3, -4});
    QuadraticRing r16{1, 6};
    CHECK(involution(r16, {0, 1}) == RingElement{1, -1});
    for (int trial = 0; trial < 300; ++trial) {
        QuadraticRing r{rand_int(-9, 9), rand_int(-9, 9)};
        if (r.disc() == 0) continue;
        RingElement u{rand_int(-20, 20), rand_int(-20, 20)};
        RingElement v{rand_int(-20, 20), rand_int(-20, 20)};
        RingElement s = involution(r, u);
        auto [tr, nm] = trace_norm(r, u);
        CHECK(ring_add(u, s) == RingElement{tr, 0});
        CHECK(ring_mul(r, u, s) == RingElement{nm, 0});
        CHECK(involution(r, s) == u);
        // the involution is a ring homomorphism
        CHECK(involution(r, ring_mul(r, u, v)) ==
              ring_mul(r, involution(r, u), involution(r, v)));
        // norm is multiplicative
        CHECK(trace_norm(r, ring_mul(r, u, v)).second ==
              trace_norm(r, u).second * trace_norm(r, v).second);
    }
}

TEST_CASE("ring validation") {
    CHECK(is_valid_ring(QuadraticRing{0, 1}));
    CHECK(is_valid_ring(QuadraticRing{0, -1}));        // split; disc 4
    CHECK(!is_valid_ring(QuadraticRing{2, 1}));        // disc 0
    CHECK_THROWS_AS(validate_ring(QuadraticRing{4, 4}), validation_error);
}

TEST_CASE("pseudoregularity trace criterion") {
    CHECK(is_pseudoregular(QuadraticRing{0, 1}, Mat2{0, -1, 1, 0}));
    CHECK(is_pseudoregular(QuadraticRing{0, -1}, Mat2{1, 0, 0, -1}));
    CHECK_THROWS_AS(is_pseudoregular(QuadraticRing{0, -1}, Mat2{1, 1, 0, 1}),
                    validation_error);  // violates M^2 = tM - n
    CHECK_THROWS_AS(is_pseudoregular(QuadraticRing{3, 0}, Mat2{3, 0, 0, 0}),
                    validation_error);  // degenerate ring (n = 0)
    CHECK_THROWS_AS(is_pseudoregular(QuadraticRing{2, 1}, Mat2{1, 0, 0, 1}),
                    validation_error);  // degenerate ring (disc 0)
    // A matrix satisfying the ring relation with the wrong trace: over the
    // split ring (0, -1), -Id squares to Id but has trace -2 != 0... trace is
    // -2 only off by the relation check; use [[0,1],[1,0]] trace 0 vs a
    // shifted ring (2, 0) excluded; instead test the criterion negatively by
    // scaling: over ring (2, -3) (disc 16, nonzero), M = [[1,2],[2,1]] has
    // M^2 = [[5,4],[4,5]] = 2M - (-3) ✓ and trace 2 = t → true.
    CHECK(is_pseudoregular(QuadraticRing{2, -3}, Mat2{1, 2, 2, 1}));
}

TEST_CASE("good_frame goldens") {
    GoodFrameModule g = good_frame(QuadraticRing{0, 1}, Mat2{0, -1, 1, 0});
    CHECK(g == GoodFrameModule{QuadraticRing{0, 1}, 0, -1, 1, 0});

    // Regular module in the basis (1, g) for ring (t, n) = (1, 6): the
    // action matrix is [[0, -n], [1, t]]; the shift d = t produces the frame
    // (-t, -n, 1) over the generator g' = g - t.
    GoodFrameModule reg16 = good_frame(QuadraticRing{1, 6}, Mat2{0, -6, 1, 1});
    CHECK(reg16.a == -1);
    CHECK(reg16.b == -6);
    CHECK(reg16.c == 1);
    CHECK(reg16.shift == 1);
    CHECK(reg16.ring == QuadraticRing{-1, 6});
    CHECK(reg16.original_ring() == QuadraticRing{1, 6});

    GoodFrameModule reg53 = good_frame(QuadraticRing{5, 3}, Mat2{0, -3, 1, 5});
    CHECK(reg53.a == -5);
    CHECK(reg53.b == -3);
    CHECK(reg53.c == 1);
    CHECK(reg53.shift == 5);
    CHECK(reg53.original_ring() == QuadraticRing{5, 3});

    // Idempotence: a matrix already in good shape comes back unchanged.
    GoodFrameModule I{QuadraticRing{1, 6}, 1, 3, -2, 0};
    CHECK(good_frame(I.ring, I.action_matrix()) == I);

    CHECK_THROWS_AS(good_frame(QuadraticRing{0, 1}, Mat2{1, 0, 0, 1}),
                    validation_error);  // not a module over (0,1)
}

TEST_CASE("good_frame invariants on random pseudoregular matrices") {
    for (int trial = 0; trial < 500; ++trial) {
        // Conjugate a random frame by a random unimodular matrix to get a
        // pseudoregular matrix in general position.
        GoodFrameModule I = random_frame(12, false);
        Int p = rand_int(-5, 5), q = rand_int(-5, 5);
        Int r = rand_int(-5, 5), s = rand_int(-5, 5);
        if (p * s - q * r != 1) continue;
        Mat2 U{p, q, r, s};
        Mat2 Uinv{s, -q, -r, p};
        Mat2 M = mat_mul(mat_mul(U, I.action_matrix()), Uinv);
        if (I.ring.n == 0) continue;
        GoodFrameModule G = good_frame(I.ring, M);
        CHECK(G.ring.t == G.a);
        CHECK(G.ring.n == -G.b * G.c);
        CHECK(G.ring.disc() == I.ring.disc());
        CHECK(G.original_ring() == I.ring);
    }
}

TEST_CASE("regular module and element actions") {
    QuadraticRing r{1, 6};
    GoodFrameModule reg = regular_module(r);
    CHECK(reg == GoodFrameModule{r, 1, 6, -1, 0});
    CHECK(norm_form(reg) == BinaryForm{1, 1, 6});
    // element_action is a ring homomorphism into 2x2 matrices
    for (int trial = 0; trial < 200; ++trial) {
        GoodFrameModule I = random_frame(15, false);
        RingElement u{rand_int(-9, 9), rand_int(-9, 9)};
        RingElement v{rand_int(-9, 9), rand_int(-9, 9)};
        CHECK(element_action(I, ring_mul(I.ring, u, v)) ==
              mat_mul(element_action(I, u), element_action(I, v)));
        CHECK(element_action(I, ring_add(u, v)) ==
              mat_add(element_action(I, u), element_action(I, v)));
    }
}

TEST_CASE("characteristic polynomial matches ring trace and norm") {
    for (int trial = 0; trial < 1000; ++trial) {
        GoodFrameModule I = random_frame(20, false);
        RingElement u{rand_int(-30, 30), rand_int(-30, 30)};
        Mat2 A = element_action(I, u);
        auto [tr, nm] = trace_norm(I.ring, u);
        CHECK(mat_trace(A) == tr);
        CHECK(mat_det(A) == nm);
        // dual frames satisfy the same identity
        Mat2 Ad = element_action(dual(I), u);
        CHECK(mat_trace(Ad) == tr);
        CHECK(mat_det(Ad) == nm);
    }
}

TEST_CASE("invertibility goldens") {
    CHECK(is_invertible(regular_module(QuadraticRing{1, 6})));
    CHECK(is_invertible(clifford(BinaryForm{2, 1, 3}).module));
    // Frame whose norm form is (2, 4, 6): a = 4, b = 6, c = -2 over (4, 12).
    GoodFrameModule imprim{QuadraticRing{4, 12}, 4, 6, -2, 0};
    CHECK(norm_form(imprim) == BinaryForm{2, 4, 6});
    CHECK(!is_invertible(imprim));
}

TEST_CASE("dual goldens and properties") {
    GoodFrameModule I{QuadraticRing{0, 1}, 0, -1, 1, 0};
    CHECK(dual(I) == GoodFrameModule{QuadraticRing{0, 1}, 0, 1, -1, 0});
    GoodFrameModule J{QuadraticRing{1, 6}, 1, -2, 3, 0};
    CHECK(dual(dual(J)) == J);
    for (int trial = 0; trial < 300; ++trial) {
        GoodFrameModule K = random_frame(25, false);
        GoodFrameModule Kd = dual(K);
        CHECK(mat_trace(Kd.action_matrix()) == mat_trace(K.action_matrix()));
        CHECK(Kd.ring == K.ring);
        if (K.ring.n != 0)
            CHECK(is_pseudoregular(Kd.ring, Kd.action_matrix()));
        CHECK(dual(Kd) == K);
    }
}

TEST_CASE("module_mul: identity, squares, inverses at discriminant -23") {
    QuadraticRing r{1, 6};
    GoodFrameModule reg = regular_module(r);
    GoodFrameModule I = clifford(BinaryForm{2, 1, 3}).module;

    // I * regular ≅ I (identity of the class monoid).
    GoodFrameModule prod = module_mul(I, reg);
    CHECK(oriented_similar(norm_form(prod), norm_form(I)));
    CHECK(proper_equivalent(norm_form(prod), BinaryForm{2, 1, 3}));

    // I^2 lands in the class of (2, -1, 3).
    GoodFrameModule sq = module_mul(I, I);
    CHECK(proper_equivalent(norm_form(sq), BinaryForm{2, -1, 3}));
    CHECK(!proper_equivalent(norm_form(sq), BinaryForm{2, 1, 3}));

    // I * dual(I) is principal as an oriented module; its displayed norm
    // form may be the (-1)-scaled presentation, which oriented similarity
    // absorbs.
    GoodFrameModule inv = module_mul(I, dual(I));
    CHECK(oriented_similar(norm_form(inv), norm_form(reg)));

    // regular * regular stays principal.
    CHECK(proper_equivalent(norm_form(module_mul(reg, reg)), BinaryForm{1, 1, 6}));
}

TEST_CASE("module_mul is commutative at discriminant -23") {
    std::vector<BinaryForm> reps = enumerate_classes(Int(-23));
    for (const BinaryForm& f : reps) {
        for (const BinaryForm& g : reps) {
            GoodFrameModule fg = module_mul(clifford(f).module, clifford(g).module);
            GoodFrameModule gf = module_mul(clifford(g).module, clifford(f).module);
            CHECK(proper_equivalent(norm_form(fg), norm_form(gf)));
        }
    }
}

TEST_CASE("module_mul validation errors") {
    GoodFrameModule I = clifford(BinaryForm{2, 1, 3}).module;
    GoodFrameModule J = clifford(BinaryForm{1, 0, 1}).module;
    CHECK_THROWS_AS(module_mul(I, J), validation_error);  // disc -23 vs -4
    GoodFrameModule imprim{QuadraticRing{4, 12}, 4, 6, -2, 0};
    CHECK_THROWS_AS(module_mul(imprim, imprim), validation_error);
}

TEST_CASE("canonical ring presentations") {
    CHECK(canonical_ring(Int(-23)) == QuadraticRing{1, 6});
    CHECK(canonical_ring(Int(-4)) == QuadraticRing{0, 1});
    CHECK(canonical_ring(Int(12)) == QuadraticRing{0, -3});
    CHECK(canonical_ring(Int(229)) == QuadraticRing{1, -57});
    CHECK_THROWS_AS(canonical_ring(Int(9)), validation_error);
}
