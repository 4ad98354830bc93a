#include "formclass/classgroup.hpp"

#include <algorithm>

#include "formclass/clifford.hpp"
#include "formclass/errors.hpp"
#include "formclass/kernels.hpp"
#include "formclass/modules.hpp"

namespace formclass {

namespace {

void validate_compose_operands(const BinaryForm& f, const BinaryForm& g,
                               const Int& D) {
    check_input(D == discriminant(g),
                "discriminant mismatch: forms must have equal discriminants");
    validate_discriminant(D);
    check_input(is_primitive(f) && is_primitive(g),
                "degenerate or imprimitive input: content must be 1");
    if (D < 0)
        check_input(is_positive_definite(f) && is_positive_definite(g),
                    "negative definite form: compose positive definite "
                    "representatives instead");
}

// Distinct prime factors of |m| by trial division (operands are desk scale).
std::vector<Int> distinct_primes(Int m) {
    m = abs_of(m);
    std::vector<Int> out;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

// A determinant +1 change of variables making f's leading coefficient
// coprime to m.  Chooses, for every prime p | m, a vector from
// {(1,0), (0,1), (1,1)} where f is nonzero mod p (one exists since f is
// primitive), glues the choices by the Chinese remainder theorem, and
// completes the primitive part of the glued vector to a unimodular map.
UnimodularMap coprime_leading_map(const BinaryForm& f, const Int& m) {
    Int x = 1, y = 0, modulus = 1;
    for (const Int& p : distinct_primes(m)) {
        Int xp, yp;
        if (evaluate(f, 1, 0) % p != 0) {
            xp = 1; yp = 0;
        } else if (evaluate(f, 0, 1) % p != 0) {
            xp = 0; yp = 1;
        } else {
            check_internal(evaluate(f, 1, 1) % p != 0,
                           "primitive form vanishing mod p at all of "
                           "(1,0), (0,1), (1,1)");
            xp = 1; yp = 1;
        }
        if (modulus == 1) {
            x = xp; y = yp; modulus = p;
            continue;
        }
        // glue (x, y) mod modulus with (xp, yp) mod p, coprime moduli
        Int inv_mod, inv_p;
        Int g = ext_gcd(modulus, p, inv_mod, inv_p);
        check_internal(g == 1, "repeated prime in distinct factor list");
        // solution t with t = 1 mod p, t = 0 mod modulus: t = modulus*inv_mod
        Int t = modulus * inv_mod;  // inv_mod = modulus^{-1} mod p scaled
        x = x + (xp - x) * t;
        y = y + (yp - y) * t;
        modulus *= p;
        x = mod_floor(x, modulus);
        y = mod_floor(y, modulus);
    }
    if (x == 0 && y == 0) x = 1;  // m was a unit: keep the identity choice
    Int g = gcd_of(x, y);
    if (g != 0 && g != 1) { x /= g; y /= g; }
    Int u, v;
    Int one = ext_gcd(x, y, u, v);
    check_internal(one == 1, "primitive vector expected after dividing by gcd");
    // map (p q; r s) with p = x, r = y and det p*s - q*r = x*u + y*v = 1
    return UnimodularMap{x, -v, y, u};
}

// Smallest nonnegative B with B = r1 (mod m1) and B = r2 (mod m2).
Int crt_smallest(const Int& r1, const Int& m1_in, const Int& r2,
                 const Int& m2_in) {
    Int m1 = abs_of(m1_in), m2 = abs_of(m2_in);
    Int s, t;
    Int g = ext_gcd(m1, m2, s, t);
    check_internal((r2 - r1) % g == 0, "incompatible congruences for B");
    Int lcm = m1 / g * m2;
    // B = r1 + m1 * ((r2 - r1)/g * s mod (m2/g))
    Int k = mod_floor((r2 - r1) / g * s, m2 / g);
    return mod_floor(r1 + m1 * k, lcm);
}

}  // namespace

BinaryForm principal_form(const Int& D) {
    validate_discriminant(D);
    Int t0 = mod_floor(D, 2);
    return BinaryForm{1, t0, (t0 * t0 - D) / 4};
}

BinaryForm compose(const BinaryForm& f, const BinaryForm& g) {
    Int D = discriminant(f);
    validate_compose_operands(f, g, D);
    GoodFrameModule product =
        module_mul(clifford(f).module, clifford(g).module);
    return reduce(norm_form(product)).form;
}

BinaryForm dirichlet_compose(const BinaryForm& f, const BinaryForm& g) {
    Int D = discriminant(f);
    validate_compose_operands(f, g, D);

    // United shape: transform f so gcd(a1, a2) = 1.
    BinaryForm f1 = transform(f, coprime_leading_map(f, g.a));
    check_internal(gcd_of(f1.a, g.a) == 1,
                   "leading coefficients must be coprime after the transform");

    // Common middle coefficient: B = b1 (mod 2a1), B = b2 (mod 2a2); the
    // third classical congruence B^2 = D (mod 4a1a2) follows from these two
    // when gcd(a1, a2) = 1.
    Int B = crt_smallest(f1.b, 2 * f1.a, g.b, 2 * g.a);
    Int a3 = f1.a * g.a;
    Int num = B * B - D;
    check_internal(num % (4 * a3) == 0, "B^2 - D must be divisible by 4*a1*a2");
    BinaryForm raw{a3, B, num / (4 * a3)};
    check_internal(discriminant(raw) == D, "composed form changed discriminant");
    check_internal(is_primitive(raw), "composite of primitive forms must be primitive");
    return reduce(raw).form;
}

namespace {

bool classes_match(const BinaryForm& f, const BinaryForm& rep, const Int& D,
                   Variant variant) {
    if (variant == Variant::narrow && D > 0) return proper_equivalent(f, rep);
    return oriented_similar(f, rep);
}

// Order of element i in the table group.
std::size_t element_order(const std::vector<std::vector<std::size_t>>& table,
                          std::size_t identity, std::size_t i) {
    std::size_t cur = i, k = 1;
    while (cur != identity) {
        cur = table[cur][i];
        ++k;
        check_internal(k <= table.size(), "element order exceeds group order");
    }
    return k;
}

// Greedy cyclic decomposition: repeatedly adjoin an element whose coset
// order modulo the subgroup generated so far is maximal, choosing the coset
// representative whose honest order equals its coset order (which makes the
// extension a direct product).  The decomposition is certified afterwards
// by enumerating the product map and checking it is a bijection.
std::vector<CyclicFactor> abelian_structure(
    const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
    const std::size_t h = table.size();
    std::vector<CyclicFactor> factors;
    std::vector<char> in_sub(h, 0);
    in_sub[identity] = 1;
    std::size_t sub_size = 1;

    while (sub_size < h) {
        // coset order of each element with respect to the current subgroup
        std::size_t best = 0, best_elt = h;
        for (std::size_t x = 0; x < h; ++x) {
            std::size_t cur = x, k = 1;
            while (!in_sub[cur]) {
                cur = table[cur][x];
                ++k;
                check_internal(k <= h,
                               "composition table is not a group: power chain "
                               "never reaches the current subgroup");
            }
            if (k > best) {
                best = k;
                best_elt = x;
            }
        }
        check_internal(best >= 2 && best_elt < h,
                       "proper subgroup admits no element outside it");

        // pick z in the coset of best_elt whose order equals its coset order
        std::size_t chosen = h;
        for (std::size_t s = 0; s < h && chosen == h; ++s) {
            if (!in_sub[s]) continue;
            std::size_t z = table[best_elt][s];
            if (element_order(table, identity, z) == best) chosen = z;
        }
        check_internal(chosen != h,
                       "no coset representative of exact coset order");
        factors.push_back(CyclicFactor{best, chosen});

        // extend: subgroup = subgroup * <chosen>
        std::vector<char> next = in_sub;
        for (std::size_t s = 0; s < h; ++s) {
            if (!in_sub[s]) continue;
            std::size_t cur = s;
            for (std::size_t k = 1; k < best; ++k) {
                cur = table[cur][chosen];
                next[cur] = 1;
            }
        }
        in_sub = std::move(next);
        sub_size = static_cast<std::size_t>(
            std::count(in_sub.begin(), in_sub.end(), char(1)));
        check_internal(sub_size % best == 0,
                       "subgroup extension is not a direct product");
    }

    // certificate: exponent tuples hit every element exactly once
    std::vector<char> seen(h, 0);
    std::vector<std::size_t> exps(factors.size(), 0);
    std::size_t produced = 0;
    for (;;) {
        std::size_t value = identity;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t e = 0; e < exps[i]; ++e)
                value = table[value][factors[i].generator];
        check_internal(!seen[value],
                       "cyclic decomposition is not a direct product");
        seen[value] = 1;
        ++produced;
        std::size_t i = 0;
        while (i < factors.size() && ++exps[i] == factors[i].order) {
            exps[i] = 0;
            ++i;
        }
        if (i == factors.size()) break;
    }
    check_internal(produced == h, "cyclic decomposition misses elements");
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        check_internal(factors[i].order % factors[i + 1].order == 0,
                       "cyclic factor orders must descend by divisibility");
    return factors;
}

}  // namespace

ClassGroup class_group(const Int& D, Variant variant) {
    validate_discriminant(D);
    std::vector<BinaryForm> reps = enumerate_classes(D);

    if (variant == Variant::wide && D > 0) {
        // glue classes that are similar up to the orientation-compensated
        // (-1)-scaling (the same relation class_of uses), keeping the
        // earliest representative in canonical scan order
        std::vector<BinaryForm> merged;
        std::vector<char> absorbed(reps.size(), 0);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (absorbed[i]) continue;
            merged.push_back(reps[i]);
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                if (!absorbed[j] && oriented_similar(reps[j], reps[i]))
                    absorbed[j] = 1;
        }
        reps = std::move(merged);
    }

    ClassGroup G;
    G.disc = D;
    G.variant = variant;
    G.reps = std::move(reps);

    G.table = composition_table_parallel(variant, G.reps);
    G.identity = class_of(principal_form(D), G);
    G.structure = abelian_structure(G.table, G.identity);
    return G;
}

bool same_class(Variant variant, const BinaryForm& f, const BinaryForm& g) {
    Int D = discriminant(f);
    validate_discriminant(D);
    check_input(discriminant(g) == D,
                "discriminant mismatch: forms lie over different rings");
    return classes_match(f, g, D, variant);
}

std::size_t class_of(const BinaryForm& f, const ClassGroup& G) {
    check_input(discriminant(f) == G.disc,
                "discriminant mismatch: form does not belong to this group");
    check_input(is_primitive(f), "degenerate or imprimitive input: content must be 1");
    for (std::size_t i = 0; i < G.reps.size(); ++i)
        if (classes_match(f, G.reps[i], G.disc, G.variant)) return i;
    throw internal_error("primitive form matches no class representative");
}

std::size_t inverse_index(const ClassGroup& G, std::size_t i) {
    check_input(i < G.reps.size(), "class index out of range");
    for (std::size_t j = 0; j < G.reps.size(); ++j)
        if (G.table[i][j] == G.identity) return j;
    throw internal_error("group table row without an inverse");
}

PellSolution fundamental_unit(const Int& D) {
    validate_discriminant(D);
    check_input(D > 0, "fundamental unit needs a positive discriminant");
    for (Int u = 1; u <= 100000000; ++u) {
        Int q = D * u * u;
        if (is_perfect_square(q - 4))
            return PellSolution{isqrt(q - 4), u, -1};
        if (is_perfect_square(q + 4))
            return PellSolution{isqrt(q + 4), u, +1};
    }
    throw internal_error("fundamental unit search exceeded its bound");
}

int fundamental_unit_norm(const Int& D) { return fundamental_unit(D).norm; }

}  // namespace formclass
