#include "formclass/hecke.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>

#include "formclass/errors.hpp"

namespace formclass {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Identity permutation walk: the k-fold table product of x starting at e.
std::size_t table_power(const std::vector<std::vector<std::size_t>>& table,
                        std::size_t identity, std::size_t x, std::size_t k) {
    std::size_t cur = identity;
    for (std::size_t i = 0; i < k; ++i) cur = table[cur][x];
    return cur;
}

// --- exact cyclotomic arithmetic (rational dense polynomials) -------------

using Rat = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rat>;  // coefficient of x^i at index i

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const RatPoly& p) { return p.empty(); }

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Division with remainder in Q[x]; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    check_internal(!b.empty(), "polynomial division by zero");
    RatPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    while (a.size() >= b.size()) {
        Rat coef = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= coef * b[i];
        trim(a);
        if (a.empty()) break;
        if (a.size() < b.size()) break;
    }
    trim(q);
    return {q, a};
}

RatPoly poly_mod(const RatPoly& a, const RatPoly& b) {
    return divmod(a, b).second;
}

// The m-th cyclotomic polynomial: (x^m - 1) divided by all lower-level
// cyclotomic factors of the divisors of m.
RatPoly cyclotomic(std::size_t m, std::map<std::size_t, RatPoly>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    RatPoly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (std::size_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = divmod(num, cyclotomic(d, memo));
        check_internal(is_zero(r), "cyclotomic factor must divide exactly");
        num = std::move(q);
    }
    memo[m] = num;
    return num;
}

// Inverse of a nonzero residue in Q[x]/phi via the extended Euclidean
// algorithm; phi is irreducible so every nonzero residue is a unit.
RatPoly field_inverse(const RatPoly& a, const RatPoly& phi) {
    RatPoly r0 = phi, r1 = poly_mod(a, phi);
    check_internal(!is_zero(r1), "inverting zero in a cyclotomic field");
    RatPoly u0 = {}, u1 = {Rat(1)};  // coefficients of `a` along the way
    while (!is_zero(r1)) {
        auto [q, r2] = divmod(r0, r1);
        RatPoly u2 = sub(u0, mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    check_internal(r0.size() == 1, "cyclotomic polynomial must be irreducible");
    RatPoly inv = u0;
    for (Rat& c : inv) c /= r0[0];
    return poly_mod(inv, phi);
}

}  // namespace

OMFSpace omf_space(const Int& D) {
    check_input(D < 0,
                "nonnegative discriminant: the operator space requires "
                "definite forms");
    return OMFSpace{class_group(D, Variant::wide)};
}

PrimeSplitting split_prime_class(const OMFSpace& space, const Int& p) {
    check_input(is_prime(p), "not a prime");
    const Int& D = space.group.disc;
    check_input(D % p != 0, "bad prime (divides level)");

    bool split;
    if (p == 2) {
        // D is odd here, hence 1 or 5 mod 8; 2 splits exactly for 1 mod 8.
        split = mod_floor(D, Int(8)) == 1;
    } else {
        Int sym = boost::multiprecision::powm(mod_floor(D, p), (p - 1) / 2, p);
        check_internal(sym == 1 || sym == p - 1,
                       "Euler criterion must decide coprime residues");
        split = (sym == 1);
    }
    if (!split) return PrimeSplitting{};

    PrimeSplitting out;
    out.is_split = true;
    const Int four_p = 4 * p;
    Int b = -1;
    for (Int cand = 0; cand < 2 * p; ++cand) {
        if (mod_floor(cand * cand - D, four_p) == 0) {
            b = cand;
            break;
        }
    }
    check_internal(b >= 0, "split prime must admit a square root of D mod 4p");
    Int c = (b * b - D) / four_p;
    out.prime_form = BinaryForm{p, b, c};
    check_internal(discriminant(out.prime_form) == D &&
                       is_primitive(out.prime_form),
                   "prime form must be a primitive form of the discriminant");
    out.ideal_class = class_of(out.prime_form, space.group);
    return out;
}

HeckeOperator hecke_operator(const OMFSpace& space, const Int& p,
                             HeckeBranch branch) {
    PrimeSplitting s = split_prime_class(space, p);
    check_input(s.is_split, "inert prime: no operator at this prime");
    std::size_t cls = s.ideal_class;
    if (branch == HeckeBranch::conjugate)
        cls = inverse_index(space.group, cls);

    HeckeOperator T;
    T.prime = p;
    T.ideal_class = cls;
    const std::size_t h = space.group.reps.size();
    T.perm.resize(h);
    for (std::size_t i = 0; i < h; ++i) T.perm[i] = space.group.table[i][cls];
    return T;
}

std::vector<Character> eigenforms(const OMFSpace& space) {
    const ClassGroup& G = space.group;
    const std::size_t h = G.reps.size();
    const auto& factors = G.structure;
    const std::size_t r = factors.size();
    const std::size_t m = r == 0 ? 1 : factors[0].order;

    // Mixed-radix discrete logarithm of every class with respect to the
    // certified cyclic decomposition.
    std::size_t product = 1;
    for (const CyclicFactor& f : factors) product *= f.order;
    check_internal(product == h, "cyclic decomposition must cover the group");

    std::vector<std::vector<std::size_t>> dlog(h, std::vector<std::size_t>(r));
    std::vector<char> seen(h, 0);
    std::vector<std::size_t> tuple(r, 0);
    for (std::size_t count = 0;; ++count) {
        std::size_t elt = G.identity;
        for (std::size_t j = 0; j < r; ++j)
            elt = G.table[elt][table_power(G.table, G.identity,
                                           factors[j].generator, tuple[j])];
        check_internal(!seen[elt],
                       "cyclic decomposition must enumerate classes uniquely");
        seen[elt] = 1;
        dlog[elt] = tuple;
        // odometer step
        std::size_t j = 0;
        while (j < r && ++tuple[j] == factors[j].order) tuple[j++] = 0;
        if (j == r) {
            check_internal(count + 1 == h,
                           "cyclic decomposition must enumerate all classes");
            break;
        }
    }

    std::vector<Character> chis;
    chis.reserve(h);
    std::vector<std::size_t> exps(r, 0);
    for (;;) {
        Character chi;
        chi.modulus = m;
        chi.values.resize(h);
        for (std::size_t i = 0; i < h; ++i) {
            std::size_t v = 0;
            for (std::size_t j = 0; j < r; ++j)
                v = (v + exps[j] * dlog[i][j] * (m / factors[j].order)) % m;
            chi.values[i] = v;
        }
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j)
                check_internal(chi.values[G.table[i][j]] ==
                                   (chi.values[i] + chi.values[j]) % m,
                               "character must be multiplicative on the table");
        chis.push_back(std::move(chi));
        std::size_t j = 0;
        while (j < r && ++exps[j] == factors[j].order) exps[j++] = 0;
        if (j == r) break;
    }
    check_internal(chis.size() == h, "character count must equal class number");
    return chis;
}

std::size_t eigenvalue(const Character& chi, const HeckeOperator& T) {
    check_input(chi.values.size() == T.perm.size(),
                "dimension mismatch: character and operator belong to "
                "different spaces");
    return chi.values[T.ideal_class];
}

bool characters_span(const OMFSpace& space,
                     const std::vector<Character>& chis) {
    const std::size_t h = dimension(space);
    check_input(chis.size() == h, "need exactly one character per class");
    std::size_t m = chis.empty() ? 1 : chis[0].modulus;
    for (const Character& chi : chis)
        check_input(chi.modulus == m && chi.values.size() == h,
                    "characters must share the space and its group exponent");

    std::map<std::size_t, RatPoly> memo;
    const RatPoly phi = cyclotomic(m, memo);

    // Matrix of root-of-unity values x^k reduced mod phi.
    std::vector<std::vector<RatPoly>> M(h, std::vector<RatPoly>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            RatPoly mono(chis[i].values[j] + 1, Rat(0));
            mono[chis[i].values[j]] = 1;
            M[i][j] = poly_mod(mono, phi);
        }

    // Gaussian elimination over the field Q[x]/phi; the determinant is
    // nonzero exactly when every column yields a nonzero pivot.
    for (std::size_t col = 0; col < h; ++col) {
        std::size_t pivot = col;
        while (pivot < h && is_zero(M[pivot][col])) ++pivot;
        if (pivot == h) return false;
        std::swap(M[pivot], M[col]);
        RatPoly inv = field_inverse(M[col][col], phi);
        for (std::size_t row = col + 1; row < h; ++row) {
            if (is_zero(M[row][col])) continue;
            RatPoly factor = poly_mod(mul(M[row][col], inv), phi);
            for (std::size_t j = col; j < h; ++j)
                M[row][j] =
                    sub(M[row][j], poly_mod(mul(factor, M[col][j]), phi));
        }
    }
    return true;
}

}  // namespace formclass
