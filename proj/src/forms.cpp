#include "formclass/forms.hpp"

#include <algorithm>

#include "formclass/errors.hpp"

namespace formclass {

Int discriminant(const BinaryForm& f) { return f.b * f.b - 4 * f.a * f.c; }

Int evaluate(const BinaryForm& f, const Int& x, const Int& y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}

Int content(const BinaryForm& f) { return gcd3(f.a, f.b, f.c); }

bool is_primitive(const BinaryForm& f) { return content(f) == 1; }

bool is_positive_definite(const BinaryForm& f) {
    return discriminant(f) < 0 && f.a > 0;
}

bool is_negative_definite(const BinaryForm& f) {
    return discriminant(f) < 0 && f.a < 0;
}

Int det(const UnimodularMap& m) { return m.p * m.s - m.q * m.r; }

UnimodularMap identity_map() { return UnimodularMap{1, 0, 0, 1}; }

UnimodularMap compose_maps(const UnimodularMap& first, const UnimodularMap& second) {
    // Matrix product first * second, so that acting by the result equals
    // acting by `first` and then by `second`.
    return UnimodularMap{
        first.p * second.p + first.q * second.r,
        first.p * second.q + first.q * second.s,
        first.r * second.p + first.s * second.r,
        first.r * second.q + first.s * second.s,
    };
}

BinaryForm transform(const BinaryForm& f, const UnimodularMap& m) {
    Int a2 = evaluate(f, m.p, m.r);
    Int c2 = evaluate(f, m.q, m.s);
    Int b2 = 2 * f.a * m.p * m.q + f.b * (m.p * m.s + m.q * m.r) +
             2 * f.c * m.r * m.s;
    return BinaryForm{a2, b2, c2};
}

BinaryForm flip_orientation(const BinaryForm& f) {
    return BinaryForm{f.a, -f.b, f.c};
}

bool is_valid_discriminant(const Int& D) {
    if (D == 0) return false;
    Int r = mod_floor(D, 4);
    if (r != 0 && r != 1) return false;
    if (D > 0 && is_perfect_square(D)) return false;
    return true;
}

void validate_discriminant(const Int& D) {
    check_input(is_valid_discriminant(D),
                "invalid discriminant: must be a nonzero non-square integer "
                "congruent to 0 or 1 mod 4");
}

namespace {

BinaryForm negate(const BinaryForm& f) { return BinaryForm{-f.a, -f.b, -f.c}; }

bool is_reduced_definite(const BinaryForm& f) {
    Int ab = abs_of(f.b);
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

// Exact test of 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced_indefinite(const BinaryForm& f, const Int& D) {
    if (f.b <= 0) return false;
    if (f.b * f.b >= D) return false;
    Int two_abs_a = 2 * abs_of(f.a);
    Int hi = two_abs_a + f.b;
    if (hi * hi <= D) return false;  // need sqrt(D) < 2|a| + b
    Int lo = two_abs_a - f.b;
    if (lo > 0 && lo * lo >= D) return false;  // need 2|a| - b < sqrt(D)
    return true;
}

void validate_reducible(const BinaryForm& f, const Int& D) {
    check_input(content(f) == 1, "degenerate or imprimitive input: form must be primitive");
    check_input(is_valid_discriminant(D),
                "degenerate or imprimitive input: discriminant is zero or a perfect square");
    if (D < 0) {
        check_input(f.a > 0, "negative definite form: negate before reducing");
    }
}

// One reduction step for positive definite forms, with map tracking:
// first translate b into (-a, a], then swap if a > c or to fix the b < 0 ties.
ReduceResult reduce_definite(BinaryForm f) {
    UnimodularMap m = identity_map();
    for (;;) {
        if (f.b > f.a || f.b <= -f.a) {
            // b <- b + 2ka in (-a, a] via (x, y) -> (x + k y, y).
            Int k = floor_div(f.a - f.b, 2 * f.a);
            UnimodularMap t{1, k, 0, 1};
            f = transform(f, t);
            m = compose_maps(m, t);
        } else if (f.a > f.c) {
            // (a, b, c) -> (c, -b, a) via (x, y) -> (-y, x).
            UnimodularMap s{0, -1, 1, 0};
            f = transform(f, s);
            m = compose_maps(m, s);
        } else if (f.b < 0 && (f.b == -f.a || f.a == f.c)) {
            if (f.b == -f.a) {
                UnimodularMap t{1, 1, 0, 1};
                f = transform(f, t);
                m = compose_maps(m, t);
            } else {
                UnimodularMap s{0, -1, 1, 0};
                f = transform(f, s);
                m = compose_maps(m, s);
            }
        } else {
            return ReduceResult{f, m};
        }
    }
}

// The indefinite reduction step (a, b, c) -> (c, b', (b'^2 - D)/(4c)) realized
// by (x, y) -> (-y, x + k y), where b' = -b + 2ck is placed in the standard
// window: |c| < sqrt(D): sqrt(D) - 2|c| < b' < sqrt(D); otherwise -|c| < b' <= |c|.
ReduceResult rho_step(const BinaryForm& f, const Int& sqrtD) {
    Int target_lo, target_hi;  // window target_lo <= b' <= target_hi
    Int abs_c = abs_of(f.c);
    if (abs_c <= sqrtD) {
        target_hi = sqrtD;
        target_lo = sqrtD - 2 * abs_c + 1;
    } else {
        target_hi = abs_c;
        target_lo = -abs_c + 1;
    }
    // Solve b' = -b + 2ck with target_lo <= b' <= target_hi (window width 2|c|).
    Int k = f.c > 0 ? floor_div(target_hi + f.b, 2 * f.c)
                    : floor_div(-(target_lo + f.b), -2 * f.c);
    UnimodularMap step{0, -1, 1, k};
    check_internal(det(step) == 1, "reduction step must have determinant +1");
    BinaryForm g = transform(f, step);
    check_internal(g.b >= target_lo && g.b <= target_hi,
                   "indefinite reduction step left the target window");
    return ReduceResult{g, step};
}

ReduceResult reduce_indefinite(BinaryForm f, const Int& D) {
    Int sqrtD = isqrt(D);
    UnimodularMap m = identity_map();
    int guard = 0;
    while (!is_reduced_indefinite(f, D)) {
        ReduceResult st = rho_step(f, sqrtD);
        f = st.form;
        m = compose_maps(m, st.map);
        check_internal(++guard < 100000, "indefinite reduction failed to terminate");
    }
    return ReduceResult{f, m};
}

}  // namespace

bool is_reduced(const BinaryForm& f) {
    Int D = discriminant(f);
    if (!is_valid_discriminant(D)) return false;
    return D < 0 ? (f.a > 0 && is_reduced_definite(f))
                 : is_reduced_indefinite(f, D);
}

ReduceResult reduce(const BinaryForm& f) {
    Int D = discriminant(f);
    validate_reducible(f, D);
    ReduceResult res = D < 0 ? reduce_definite(f) : reduce_indefinite(f, D);
    check_internal(det(res.map) == 1, "reduction witness must have determinant +1");
    check_internal(transform(f, res.map) == res.form,
                   "reduction witness must carry the input to the output");
    return res;
}

std::vector<BinaryForm> reduction_cycle(const BinaryForm& reduced) {
    Int D = discriminant(reduced);
    check_input(D > 0, "reduction cycles exist only for positive discriminant");
    check_input(is_reduced(reduced), "reduction cycle requires a reduced form");
    Int sqrtD = isqrt(D);
    std::vector<BinaryForm> cycle{reduced};
    BinaryForm g = rho_step(reduced, sqrtD).form;
    while (!(g == reduced)) {
        check_internal(is_reduced(g), "reduction cycle left the reduced domain");
        cycle.push_back(g);
        g = rho_step(g, sqrtD).form;
        check_internal(cycle.size() < 100000, "reduction cycle failed to close");
    }
    return cycle;
}

bool proper_equivalent(const BinaryForm& f, const BinaryForm& g) {
    Int D = discriminant(f);
    check_input(D == discriminant(g), "discriminant mismatch");
    check_input(is_primitive(f) && is_primitive(g), "forms must be primitive");
    if (D < 0) {
        bool fneg = f.a < 0, gneg = g.a < 0;
        if (fneg != gneg) return false;
        BinaryForm ff = fneg ? negate(f) : f;
        BinaryForm gg = gneg ? negate(g) : g;
        return reduce(ff).form == reduce(gg).form;
    }
    BinaryForm fr = reduce(f).form;
    BinaryForm gr = reduce(g).form;
    std::vector<BinaryForm> cyc = reduction_cycle(fr);
    return std::find(cyc.begin(), cyc.end(), gr) != cyc.end();
}

bool oriented_similar(const BinaryForm& f, const BinaryForm& g) {
    Int D = discriminant(f);
    check_input(D == discriminant(g), "discriminant mismatch");
    check_input(is_primitive(f) && is_primitive(g), "forms must be primitive");
    // Beyond proper equivalence, similarity allows the scaling factor -1.
    // Scaling a form by -1 conjugates its even Clifford ring by the standard
    // involution, so the scaled form only represents the same *oriented*
    // class after compensating with the b -> -b flip: the second candidate is
    // -flip(g) = (-a, b, -c), not -g.  (Negating g alone lands in the inverse
    // class times the scaled-principal class, which is a different class in
    // general — e.g. for discriminant 229.)
    const BinaryForm candidates[2] = {g, BinaryForm{-g.a, g.b, -g.c}};
    for (const BinaryForm& cand : candidates) {
        if (D < 0 && (f.a < 0) != (cand.a < 0)) continue;
        if (proper_equivalent(f, cand)) return true;
    }
    return false;
}

namespace {

std::vector<BinaryForm> enumerate_definite(const Int& D) {
    std::vector<BinaryForm> out;
    Int bound = isqrt(-D / 3);
    for (Int a = 1; a <= bound; ++a) {
        for (Int b = a; b > -a; --b) {
            Int num = b * b - D;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;  // tie-break b >= 0
            if (gcd3(a, b, c) != 1) continue;
            out.push_back(BinaryForm{a, b, c});
        }
    }
    return out;
}

// All reduced forms of positive discriminant D, grouped into cycles.
std::vector<std::vector<BinaryForm>> all_cycles(const Int& D) {
    Int sqrtD = isqrt(D);
    std::vector<BinaryForm> reduced_forms;
    for (Int b = 1; b <= sqrtD; ++b) {
        if (mod_floor(b * b - D, 4) != 0) continue;
        for (Int abs_a = 1; 2 * abs_a < sqrtD + b + 1; ++abs_a) {
            Int hi = 2 * abs_a + b;
            if (hi * hi <= D) continue;
            Int lo = 2 * abs_a - b;
            if (lo > 0 && lo * lo >= D) continue;
            Int num = b * b - D;
            if (num % (4 * abs_a) != 0) continue;
            for (int s : {+1, -1}) {
                Int a = s * abs_a;
                Int c = num / (4 * a);
                if (gcd3(a, b, c) != 1) continue;
                reduced_forms.push_back(BinaryForm{a, b, c});
            }
        }
    }
    std::vector<std::vector<BinaryForm>> cycles;
    std::vector<bool> used(reduced_forms.size(), false);
    for (std::size_t i = 0; i < reduced_forms.size(); ++i) {
        if (used[i]) continue;
        std::vector<BinaryForm> cyc = reduction_cycle(reduced_forms[i]);
        for (const BinaryForm& member : cyc) {
            auto it = std::find(reduced_forms.begin(), reduced_forms.end(), member);
            check_internal(it != reduced_forms.end(),
                           "cycle member missing from the reduced enumeration");
            used[static_cast<std::size_t>(it - reduced_forms.begin())] = true;
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<BinaryForm> enumerate_indefinite(const Int& D) {
    std::vector<std::vector<BinaryForm>> cycles = all_cycles(D);
    std::size_t remaining = cycles.size();
    std::vector<bool> have(cycles.size(), false);
    Int sqrtD = isqrt(D);
    // Scan candidates in canonical order; first hit per cycle becomes its
    // representative.  Every cycle contains forms with |a| <= sqrt(D), so the
    // scan terminates.
    std::vector<BinaryForm> ordered_reps;
    for (Int abs_a = 1; abs_a <= sqrtD && remaining > 0; ++abs_a) {
        for (int sa : {+1, -1}) {
            Int a = sa * abs_a;
            // b in the translation-normalized window (-|a|, |a|] ordered by
            // |b| ascending, positive before negative.
            std::vector<Int> bs;
            bs.push_back(0);
            for (Int t = 1; t < abs_a; ++t) {
                bs.push_back(t);
                bs.push_back(-t);
            }
            bs.push_back(abs_a);
            for (const Int& b : bs) {
                Int num = b * b - D;
                if (num % (4 * a) != 0) continue;
                Int c = num / (4 * a);
                BinaryForm cand{a, b, c};
                if (!is_primitive(cand)) continue;
                BinaryForm cred = reduce(cand).form;
                for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
                    if (have[ci]) continue;
                    if (std::find(cycles[ci].begin(), cycles[ci].end(), cred) !=
                        cycles[ci].end()) {
                        have[ci] = true;
                        --remaining;
                        ordered_reps.push_back(cand);
                        break;
                    }
                }
                if (remaining == 0) break;
            }
            if (remaining == 0) break;
        }
    }
    check_internal(remaining == 0,
                   "canonical representative scan missed a cycle");
    return ordered_reps;
}

}  // namespace

std::vector<BinaryForm> enumerate_classes(const Int& D) {
    validate_discriminant(D);
    return D < 0 ? enumerate_definite(D) : enumerate_indefinite(D);
}

}  // namespace formclass
