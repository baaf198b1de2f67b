//! The parking-function algebra and its graded dual.
//!
//! `F` is the shifted-shuffle basis, `G` its dual convolution basis. On top
//! of the Hopf structure this module carries the dendriform/tridendriform
//! splittings of the `G` product, the half coproducts on both sides, the
//! degree-preserving internal product by biword parkization, the free
//! generators and multiplicative bases, and the maps towards permutations
//! (`phi`) and quasi-symmetric functions (`eta`).

use std::collections::BTreeMap;

use crate::basis_key;
use crate::coeffs::{Bialgebra, LinComb, Rational, Tensor};
use crate::words::{
    compositions, convolution, descent_composition, invert_permutation, parking_functions,
    parkize, shifted_shuffle, standardize, Composition, Letter, ParkingFunction, Word,
};

basis_key!(
    /// `F` basis key of the parking-function algebra.
    FKey,
    ParkingFunction,
    "F",
    |a| a.len(),
    |a| (a.letters().to_vec(), Vec::new())
);

basis_key!(
    /// `G` basis key of the dual algebra.
    GKey,
    ParkingFunction,
    "G",
    |a| a.len(),
    |a| (a.letters().to_vec(), Vec::new())
);

basis_key!(
    /// Fundamental basis of quasi-symmetric functions, indexed by
    /// compositions; target of the descent map `eta`.
    FqKey,
    Composition,
    "Fq",
    |c| c.weight() as usize,
    |c| (c.parts().to_vec(), Vec::new())
);

// ---------------------------------------------------------------------------
// products and coproducts
// ---------------------------------------------------------------------------

/// `F_a F_b = Σ F_c` over the shifted shuffle.
pub fn f_product(a: &ParkingFunction, b: &ParkingFunction) -> LinComb<FKey> {
    LinComb::from_keys(
        shifted_shuffle(a.word(), b.word())
            .into_iter()
            .map(|w| FKey(ParkingFunction::new(w).expect("shuffle of parking is parking"))),
    )
}

/// `ΔF_a = Σ F_park(u) ⊗ F_park(v)` over all deconcatenations `u·v = a`.
pub fn f_coproduct(a: &ParkingFunction) -> Tensor<FKey> {
    let mut out = Tensor::zero();
    let letters = a.letters();
    for cut in 0..=a.len() {
        let u = Word::new(letters[..cut].to_vec());
        let v = Word::new(letters[cut..].to_vec());
        out.add_term(FKey(parkize(&u)), FKey(parkize(&v)), Rational::from_integer(1.into()));
    }
    out
}

/// `G_a G_b = Σ G_c` over the convolution.
pub fn g_product(a: &ParkingFunction, b: &ParkingFunction) -> LinComb<GKey> {
    LinComb::from_keys(convolution(a, b).into_iter().map(GKey))
}

/// Restrictions of `a` to the letter intervals `[1..b]` and `[b+1..n]`,
/// positions kept, each half parkized.
fn breakpoint_halves(a: &ParkingFunction, b: usize) -> (ParkingFunction, ParkingFunction) {
    let low: Vec<Letter> = a
        .letters()
        .iter()
        .copied()
        .filter(|&x| x <= b as Letter)
        .collect();
    let high: Vec<Letter> = a
        .letters()
        .iter()
        .copied()
        .filter(|&x| x > b as Letter)
        .collect();
    (parkize(&Word::new(low)), parkize(&Word::new(high)))
}

/// `ΔG_a = Σ G_{a'(b)} ⊗ G_{a''(b)}` over the breakpoints of `a`.
pub fn g_coproduct(a: &ParkingFunction) -> Tensor<GKey> {
    let mut out = Tensor::zero();
    for b in a.breakpoints() {
        let (low, high) = breakpoint_halves(a, b);
        out.add_term(GKey(low), GKey(high), Rational::from_integer(1.into()));
    }
    out
}

/// The three tridendriform parts of the `G` product: each convolution term
/// `c = u·v` (split at `|a|`) is routed by comparing `max(v)` with `max(u)`.
pub fn g_trid_parts(
    a: &ParkingFunction,
    b: &ParkingFunction,
) -> (LinComb<GKey>, LinComb<GKey>, LinComb<GKey>) {
    assert!(!a.is_empty() && !b.is_empty(), "dendriform operands are nonempty");
    let cut = a.len();
    let mut left = LinComb::zero();
    let mut mid = LinComb::zero();
    let mut right = LinComb::zero();
    for c in convolution(a, b) {
        let max_u = c.letters()[..cut].iter().max().copied().unwrap();
        let max_v = c.letters()[cut..].iter().max().copied().unwrap();
        let slot = match max_v.cmp(&max_u) {
            std::cmp::Ordering::Less => &mut left,
            std::cmp::Ordering::Equal => &mut mid,
            std::cmp::Ordering::Greater => &mut right,
        };
        slot.add_term(GKey(c), Rational::from_integer(1.into()));
    }
    (left, mid, right)
}

/// Dendriform pair on `G`: `x < y` keeps `max(v) < max(u)`, `x > y` the rest.
pub fn g_dend_parts(a: &ParkingFunction, b: &ParkingFunction) -> (LinComb<GKey>, LinComb<GKey>) {
    let (l, m, r) = g_trid_parts(a, b);
    (l, m.add(&r))
}

/// Dendriform pair on `F`: shifted-shuffle terms split by whether the last
/// letter of the result comes from the left factor.
pub fn f_dend_parts(a: &ParkingFunction, b: &ParkingFunction) -> (LinComb<FKey>, LinComb<FKey>) {
    assert!(!a.is_empty() && !b.is_empty(), "dendriform operands are nonempty");
    let bound = a.len() as Letter;
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for w in shifted_shuffle(a.word(), b.word()) {
        let c = ParkingFunction::new(w).expect("parking");
        let slot = if c.last_letter().unwrap() <= bound {
            &mut left
        } else {
            &mut right
        };
        slot.add_term(FKey(c), Rational::from_integer(1.into()));
    }
    (left, right)
}

/// Half reduced coproducts of `G_a`: the nontrivial breakpoint terms split
/// by whether the last letter of `a` lands in the left half.
pub fn g_half_coproducts(a: &ParkingFunction) -> (Tensor<GKey>, Tensor<GKey>) {
    let mut cleft = Tensor::zero();
    let mut cright = Tensor::zero();
    let n = a.len();
    let last = a.last_letter().unwrap_or(0);
    for b in a.breakpoints() {
        if b == 0 || b == n {
            continue;
        }
        let (low, high) = breakpoint_halves(a, b);
        let slot = if last <= b as Letter {
            &mut cleft
        } else {
            &mut cright
        };
        slot.add_term(GKey(low), GKey(high), Rational::from_integer(1.into()));
    }
    (cleft, cright)
}

/// Half reduced coproducts of `F_a`: nontrivial deconcatenations split by
/// comparing the maxima of the two raw halves.
pub fn f_half_coproducts(a: &ParkingFunction) -> (Tensor<FKey>, Tensor<FKey>) {
    let mut cleft = Tensor::zero();
    let mut cright = Tensor::zero();
    let letters = a.letters();
    for cut in 1..a.len() {
        let u = Word::new(letters[..cut].to_vec());
        let v = Word::new(letters[cut..].to_vec());
        let slot = if v.max_letter() < u.max_letter() {
            &mut cleft
        } else {
            &mut cright
        };
        slot.add_term(FKey(parkize(&u)), FKey(parkize(&v)), Rational::from_integer(1.into()));
    }
    (cleft, cright)
}

/// Antipode of `F_a` by the alternating deconcatenation-chain formula
/// `ν(F_a) = Σ (-1)^r F_park(u_1) ... F_park(u_r)`.
pub fn f_antipode(a: &ParkingFunction) -> LinComb<FKey> {
    if a.is_empty() {
        return LinComb::unit(FKey(ParkingFunction::empty()));
    }
    let letters = a.letters();
    let mut out = LinComb::zero();
    for comp in compositions(a.len()) {
        let mut factors = Vec::new();
        let mut at = 0usize;
        for &p in comp.parts() {
            let piece = Word::new(letters[at..at + p as usize].to_vec());
            factors.push(parkize(&piece));
            at += p as usize;
        }
        let mut elem = LinComb::unit(FKey(factors[0].clone()));
        for f in &factors[1..] {
            elem = LinComb::bilinear(&elem, &LinComb::unit(FKey(f.clone())), |x, y| {
                f_product(&x.0, &y.0)
            });
        }
        let sign = if comp.length() % 2 == 0 { 1 } else { -1 };
        out = out.add(&elem.scale(&Rational::from_integer(sign.into())));
    }
    out
}

// ---------------------------------------------------------------------------
// internal product
// ---------------------------------------------------------------------------

/// Parkization of the biword `(u, v)` read columnwise, each pair `(x, y)`
/// encoded as `(x-1)*stride + y`. Any stride wide enough to keep the pair
/// order lexicographic gives the same answer; `2n` is the pinned default
/// and the `n` / `2n` agreement is enforced by tests.
pub fn biword_parkize(u: &Word, v: &Word, stride: Letter) -> ParkingFunction {
    assert_eq!(u.len(), v.len(), "biword parts must have equal length");
    assert!(v.max_letter() <= stride, "stride too small for right letters");
    let encoded: Vec<Letter> = u
        .letters()
        .iter()
        .zip(v.letters())
        .map(|(&x, &y)| (x - 1) * stride + y)
        .collect();
    parkize(&Word::new(encoded))
}

/// Internal product `F_a * F_b = F_park(a ⊗ b)`, defined in each degree.
pub fn internal_f(a: &ParkingFunction, b: &ParkingFunction) -> ParkingFunction {
    assert_eq!(a.len(), b.len(), "internal product needs equal degrees");
    biword_parkize(a.word(), b.word(), 2 * a.len() as Letter)
}

/// Dual internal coproduct `δG_a = Σ G_a' ⊗ G_a''` over all pairs whose
/// biword parkization is `a`, by enumeration of `PF_n × PF_n`.
pub fn delta_internal_g(a: &ParkingFunction) -> Tensor<GKey> {
    let n = a.len();
    let all = parking_functions(n);
    let mut out = Tensor::zero();
    for p in &all {
        for q in &all {
            if internal_f(p, q) == *a {
                out.add_term(GKey(p.clone()), GKey(q.clone()), Rational::from_integer(1.into()));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// free generators and multiplicative bases
// ---------------------------------------------------------------------------

/// Anti-connected: the mirror image is connected.
pub fn is_anti_connected(a: &ParkingFunction) -> bool {
    !a.is_empty() && ParkingFunction::new(a.mirror()).is_ok_and(|m| m.is_connected())
}

pub fn anti_connected_parking_functions(n: usize) -> Vec<ParkingFunction> {
    parking_functions(n)
        .into_iter()
        .filter(is_anti_connected)
        .collect()
}

/// Multiplicative basis element `F^a`, the product of the `F` over the
/// connected factorization of `a`.
pub fn f_multiplicative(a: &ParkingFunction) -> LinComb<FKey> {
    let mut elem = LinComb::unit(FKey(ParkingFunction::empty()));
    for factor in a.connected_factorization() {
        elem = LinComb::bilinear(&elem, &LinComb::unit(FKey(factor)), |x, y| {
            f_product(&x.0, &y.0)
        });
    }
    elem
}

// ---------------------------------------------------------------------------
// maps: phi, eta, V
// ---------------------------------------------------------------------------

/// Hopf embedding of the permutation algebra:
/// `phi(F_sigma) = Σ_{std(a) = sigma^{ -1}} G_a`.
pub fn phi_embed(sigma: &Word) -> LinComb<GKey> {
    let inv = invert_permutation(sigma);
    LinComb::from_keys(
        parking_functions(sigma.len())
            .into_iter()
            .filter(|a| standardize(a.word()) == inv)
            .map(GKey),
    )
}

/// Descent epimorphism to quasi-symmetric functions: `F_a ↦ F_{C(a)}`.
pub fn eta(x: &LinComb<FKey>) -> LinComb<FqKey> {
    x.map_keys(|k| {
        if k.0.is_empty() {
            FqKey(Composition::empty())
        } else {
            FqKey(descent_composition(k.0.word()))
        }
    })
}

/// A canonical word with prescribed descent composition: each run takes the
/// highest unused values, ascending.
pub fn ribbon_word(c: &Composition) -> Word {
    let n = c.weight();
    let mut letters = Vec::with_capacity(n as usize);
    let mut used_high = 0;
    for &p in c.parts() {
        let hi = n - used_high;
        let lo = hi - p + 1;
        letters.extend(lo..=hi);
        used_high += p;
    }
    Word::new(letters)
}

/// Product of fundamental quasi-symmetric functions via shifted shuffles of
/// representative ribbon words.
pub fn qsym_f_product(a: &Composition, b: &Composition) -> LinComb<FqKey> {
    if a.is_empty() {
        return LinComb::unit(FqKey(b.clone()));
    }
    if b.is_empty() {
        return LinComb::unit(FqKey(a.clone()));
    }
    let u = ribbon_word(a);
    let v = ribbon_word(b);
    LinComb::from_keys(
        shifted_shuffle(&u, &v)
            .into_iter()
            .map(|w| FqKey(descent_composition(&w))),
    )
}

/// Parking functions whose type is the given composition.
pub fn parking_functions_of_type(c: &Composition) -> Vec<ParkingFunction> {
    parking_functions(c.weight() as usize)
        .into_iter()
        .filter(|a| a.type_composition() == *c)
        .collect()
}

/// `V^I = Σ F_a` over the parking functions of type `I`; multiplicative:
/// `V^I = V_{i_1} ... V_{i_r}`.
pub fn v_basis(c: &Composition) -> LinComb<FKey> {
    LinComb::from_keys(parking_functions_of_type(c).into_iter().map(FKey))
}

// ---------------------------------------------------------------------------
// registry entries
// ---------------------------------------------------------------------------

/// The parking-function algebra on the `F` basis.
pub struct PqsymF;

impl Bialgebra for PqsymF {
    type Key = FKey;

    fn name(&self) -> &'static str {
        "PQSym(F)"
    }

    fn unit_key(&self) -> FKey {
        FKey(ParkingFunction::empty())
    }

    fn basis(&self, degree: usize) -> Vec<FKey> {
        parking_functions(degree).into_iter().map(FKey).collect()
    }

    fn product_keys(&self, a: &FKey, b: &FKey) -> LinComb<FKey> {
        f_product(&a.0, &b.0)
    }

    fn coproduct_key(&self, k: &FKey) -> Tensor<FKey> {
        f_coproduct(&k.0)
    }
}

/// The dual algebra on the `G` basis.
pub struct PqsymG;

impl Bialgebra for PqsymG {
    type Key = GKey;

    fn name(&self) -> &'static str {
        "PQSym*(G)"
    }

    fn unit_key(&self) -> GKey {
        GKey(ParkingFunction::empty())
    }

    fn basis(&self, degree: usize) -> Vec<GKey> {
        parking_functions(degree).into_iter().map(GKey).collect()
    }

    fn product_keys(&self, a: &GKey, b: &GKey) -> LinComb<GKey> {
        g_product(&a.0, &b.0)
    }

    fn coproduct_key(&self, k: &GKey) -> Tensor<GKey> {
        g_coproduct(&k.0)
    }
}

// ---------------------------------------------------------------------------
// bidendriform and tridendriform relation checks on the G side
// ---------------------------------------------------------------------------

type Triple = BTreeMap<(GKey, GKey, GKey), Rational>;

fn half_product(x: &LinComb<GKey>, y: &LinComb<GKey>, left: bool) -> LinComb<GKey> {
    LinComb::bilinear(x, y, |a, b| {
        let (l, r) = g_dend_parts(&a.0, &b.0);
        if left {
            l
        } else {
            r
        }
    })
}

fn full_product(x: &LinComb<GKey>, y: &LinComb<GKey>) -> LinComb<GKey> {
    LinComb::bilinear(x, y, |a, b| g_product(&a.0, &b.0))
}

fn half_coproducts_elem(x: &LinComb<GKey>) -> (Tensor<GKey>, Tensor<GKey>) {
    let mut left = Tensor::zero();
    let mut right = Tensor::zero();
    for (k, c) in x.iter() {
        let (l, r) = g_half_coproducts(&k.0);
        left = left.add(&l.scale(c));
        right = right.add(&r.scale(c));
    }
    (left, right)
}

/// The three dendriform dialgebra relations on basis triples of total
/// degree `<= max_degree` (all factors of degree >= 1).
pub fn check_dendriform_g(max_degree: usize) -> Result<(), String> {
    for (d1, d2, d3) in crate::coeffs::degree_triples(max_degree) {
        if d1 == 0 || d2 == 0 || d3 == 0 {
            continue;
        }
        for a in parking_functions(d1) {
            for b in parking_functions(d2) {
                for c in parking_functions(d3) {
                    let (xa, xb, xc) = (
                        LinComb::unit(GKey(a.clone())),
                        LinComb::unit(GKey(b.clone())),
                        LinComb::unit(GKey(c.clone())),
                    );
                    let lhs1 = half_product(&half_product(&xa, &xb, true), &xc, true);
                    let rhs1 = half_product(&xa, &full_product(&xb, &xc), true);
                    if lhs1 != rhs1 {
                        return Err(format!("dend1 fails on ({a}, {b}, {c})"));
                    }
                    let lhs2 = half_product(&half_product(&xa, &xb, false), &xc, true);
                    let rhs2 = half_product(&xa, &half_product(&xb, &xc, true), false);
                    if lhs2 != rhs2 {
                        return Err(format!("dend2 fails on ({a}, {b}, {c})"));
                    }
                    let lhs3 = half_product(&full_product(&xa, &xb), &xc, false);
                    let rhs3 = half_product(&xa, &half_product(&xb, &xc, false), false);
                    if lhs3 != rhs3 {
                        return Err(format!("dend3 fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn apply_left<'a>(
    t: &Tensor<GKey>,
    f: impl Fn(&GKey) -> Tensor<GKey> + 'a,
) -> Triple {
    let mut out = Triple::new();
    for ((l, r), c) in t.iter() {
        for ((l2, r2), c2) in f(l).iter() {
            *out.entry((l2.clone(), r2.clone(), r.clone()))
                .or_insert_with(num::Zero::zero) += c * c2;
        }
    }
    out.retain(|_, c| !num::Zero::is_zero(c));
    out
}

fn apply_right<'a>(
    t: &Tensor<GKey>,
    f: impl Fn(&GKey) -> Tensor<GKey> + 'a,
) -> Triple {
    let mut out = Triple::new();
    for ((l, r), c) in t.iter() {
        for ((l2, r2), c2) in f(r).iter() {
            *out.entry((l.clone(), l2.clone(), r2.clone()))
                .or_insert_with(num::Zero::zero) += c * c2;
        }
    }
    out.retain(|_, c| !num::Zero::is_zero(c));
    out
}

/// The three codendriform relations on basis keys through `max_degree`.
pub fn check_codendriform_g(max_degree: usize) -> Result<(), String> {
    let cleft = |k: &GKey| g_half_coproducts(&k.0).0;
    let cright = |k: &GKey| g_half_coproducts(&k.0).1;
    let cbar = |k: &GKey| {
        let (l, r) = g_half_coproducts(&k.0);
        l.add(&r)
    };
    for n in 1..=max_degree {
        for a in parking_functions(n) {
            let key = GKey(a.clone());
            let dl = cleft(&key);
            let dr = cright(&key);
            if apply_left(&dl, cleft) != apply_right(&dl, cbar) {
                return Err(format!("codend1 fails on {a}"));
            }
            if apply_left(&dl, cright) != apply_right(&dr, cleft) {
                return Err(format!("codend2 fails on {a}"));
            }
            if apply_left(&dr, cbar) != apply_right(&dr, cright) {
                return Err(format!("codend3 fails on {a}"));
            }
        }
    }
    Ok(())
}

fn tensor_eq(a: &Tensor<GKey>, b: &Tensor<GKey>) -> bool {
    a == b
}

/// The four bidendriform compatibility relations on basis pairs of total
/// degree `<= max_degree` (both factors of degree >= 1).
pub fn check_bidendriform_g(max_degree: usize) -> Result<(), String> {
    let unit = GKey(ParkingFunction::empty());
    for (d1, d2) in crate::coeffs::degree_pairs(max_degree) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for a in parking_functions(d1) {
            for b in parking_functions(d2) {
                let xa = LinComb::unit(GKey(a.clone()));
                let xb = LinComb::unit(GKey(b.clone()));
                let (da_l, da_r) = half_coproducts_elem(&xa);
                let (db_l, db_r) = half_coproducts_elem(&xb);
                let da = da_l.add(&da_r);

                // helpers building Sweedler sums Σ f(x', y') ⊗ g(x'', y'')
                let combine = |dx: &Tensor<GKey>,
                               dy: &Tensor<GKey>,
                               f: &dyn Fn(&LinComb<GKey>, &LinComb<GKey>) -> LinComb<GKey>,
                               g: &dyn Fn(&LinComb<GKey>, &LinComb<GKey>) -> LinComb<GKey>|
                 -> Tensor<GKey> {
                    let mut out = Tensor::zero();
                    for ((x1, x2), c1) in dx.iter() {
                        for ((y1, y2), c2) in dy.iter() {
                            let l = f(&LinComb::unit(x1.clone()), &LinComb::unit(y1.clone()));
                            let r = g(&LinComb::unit(x2.clone()), &LinComb::unit(y2.clone()));
                            let t = Tensor::of(&l, &r).scale(&(c1 * c2));
                            out = out.add(&t);
                        }
                    }
                    out
                };
                let single = |x: &LinComb<GKey>| {
                    Tensor::of(x, &LinComb::unit(unit.clone()))
                };
                let _ = single;
                let prod: &dyn Fn(&LinComb<GKey>, &LinComb<GKey>) -> LinComb<GKey> =
                    &|x, y| full_product(x, y);
                let prl: &dyn Fn(&LinComb<GKey>, &LinComb<GKey>) -> LinComb<GKey> =
                    &|x, y| half_product(x, y, true);
                let prr: &dyn Fn(&LinComb<GKey>, &LinComb<GKey>) -> LinComb<GKey> =
                    &|x, y| half_product(x, y, false);

                // bidend1: Δ_>(a > b)
                let lhs = half_coproducts_elem(&half_product(&xa, &xb, false)).1;
                let mut rhs = combine(&da, &db_r, prod, prr);
                for ((a1, a2), c) in da.iter() {
                    rhs = rhs.add(&Tensor::of(
                        &LinComb::unit(a1.clone()),
                        &half_product(&LinComb::unit(a2.clone()), &xb, false),
                    )
                    .scale(c));
                }
                for ((b1, b2), c) in db_r.iter() {
                    rhs = rhs.add(
                        &Tensor::of(
                            &LinComb::unit(b1.clone()),
                            &half_product(&xa, &LinComb::unit(b2.clone()), false),
                        )
                        .scale(c),
                    );
                    rhs = rhs.add(
                        &Tensor::of(
                            &full_product(&xa, &LinComb::unit(b1.clone())),
                            &LinComb::unit(b2.clone()),
                        )
                        .scale(c),
                    );
                }
                rhs = rhs.add(&Tensor::of(&xa, &xb));
                if !tensor_eq(&lhs, &rhs) {
                    return Err(format!("bidend1 fails on ({a}, {b})"));
                }

                // bidend2: Δ_>(a < b)
                let lhs = half_coproducts_elem(&half_product(&xa, &xb, true)).1;
                let mut rhs = combine(&da, &db_r, prod, prl);
                for ((a1, a2), c) in da.iter() {
                    rhs = rhs.add(&Tensor::of(
                        &LinComb::unit(a1.clone()),
                        &half_product(&LinComb::unit(a2.clone()), &xb, true),
                    )
                    .scale(c));
                }
                for ((b1, b2), c) in db_r.iter() {
                    rhs = rhs.add(
                        &Tensor::of(
                            &LinComb::unit(b1.clone()),
                            &half_product(&xa, &LinComb::unit(b2.clone()), true),
                        )
                        .scale(c),
                    );
                }
                if !tensor_eq(&lhs, &rhs) {
                    return Err(format!("bidend2 fails on ({a}, {b})"));
                }

                // bidend3: Δ_<(a > b)
                let lhs = half_coproducts_elem(&half_product(&xa, &xb, false)).0;
                let mut rhs = combine(&da, &db_l, prod, prr);
                for ((b1, b2), c) in db_l.iter() {
                    rhs = rhs.add(
                        &Tensor::of(
                            &full_product(&xa, &LinComb::unit(b1.clone())),
                            &LinComb::unit(b2.clone()),
                        )
                        .scale(c),
                    );
                    rhs = rhs.add(
                        &Tensor::of(
                            &LinComb::unit(b1.clone()),
                            &half_product(&xa, &LinComb::unit(b2.clone()), false),
                        )
                        .scale(c),
                    );
                }
                if !tensor_eq(&lhs, &rhs) {
                    return Err(format!("bidend3 fails on ({a}, {b})"));
                }

                // bidend4: Δ_<(a < b)
                let lhs = half_coproducts_elem(&half_product(&xa, &xb, true)).0;
                let mut rhs = combine(&da, &db_l, prod, prl);
                for ((a1, a2), c) in da.iter() {
                    rhs = rhs.add(
                        &Tensor::of(
                            &full_product(&LinComb::unit(a1.clone()), &xb),
                            &LinComb::unit(a2.clone()),
                        )
                        .scale(c),
                    );
                }
                for ((b1, b2), c) in db_l.iter() {
                    rhs = rhs.add(
                        &Tensor::of(
                            &LinComb::unit(b1.clone()),
                            &half_product(&xa, &LinComb::unit(b2.clone()), true),
                        )
                        .scale(c),
                    );
                }
                rhs = rhs.add(&Tensor::of(&xb, &xa));
                if !tensor_eq(&lhs, &rhs) {
                    return Err(format!("bidend4 fails on ({a}, {b})"));
                }
            }
        }
    }
    Ok(())
}

/// The seven tridendriform relations for the `G` splitting on basis triples
/// of total degree `<= max_degree`.
pub fn check_tridendriform_g(max_degree: usize) -> Result<(), String> {
    let tl = |x: &LinComb<GKey>, y: &LinComb<GKey>| {
        LinComb::bilinear(x, y, |a, b| g_trid_parts(&a.0, &b.0).0)
    };
    let tm = |x: &LinComb<GKey>, y: &LinComb<GKey>| {
        LinComb::bilinear(x, y, |a, b| g_trid_parts(&a.0, &b.0).1)
    };
    let tr = |x: &LinComb<GKey>, y: &LinComb<GKey>| {
        LinComb::bilinear(x, y, |a, b| g_trid_parts(&a.0, &b.0).2)
    };
    for (d1, d2, d3) in crate::coeffs::degree_triples(max_degree) {
        if d1 == 0 || d2 == 0 || d3 == 0 {
            continue;
        }
        for a in parking_functions(d1) {
            for b in parking_functions(d2) {
                for c in parking_functions(d3) {
                    let (xa, xb, xc) = (
                        LinComb::unit(GKey(a.clone())),
                        LinComb::unit(GKey(b.clone())),
                        LinComb::unit(GKey(c.clone())),
                    );
                    let checks: [(LinComb<GKey>, LinComb<GKey>, &str); 7] = [
                        (
                            tl(&tl(&xa, &xb), &xc),
                            tl(&xa, &full_product(&xb, &xc)),
                            "trid1",
                        ),
                        (tl(&tr(&xa, &xb), &xc), tr(&xa, &tl(&xb, &xc)), "trid2"),
                        (
                            tr(&full_product(&xa, &xb), &xc),
                            tr(&xa, &tr(&xb, &xc)),
                            "trid3",
                        ),
                        (tm(&tr(&xa, &xb), &xc), tr(&xa, &tm(&xb, &xc)), "trid4"),
                        (tm(&tl(&xa, &xb), &xc), tm(&xa, &tr(&xb, &xc)), "trid5"),
                        (tl(&tm(&xa, &xb), &xc), tm(&xa, &tl(&xb, &xc)), "trid6"),
                        (tm(&tm(&xa, &xb), &xc), tm(&xa, &tm(&xb, &xc)), "trid7"),
                    ];
                    for (lhs, rhs, name) in checks {
                        if lhs != rhs {
                            return Err(format!("{name} fails on ({a}, {b}, {c})"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `x < y + x ∘ y + x > y = x y` on all pairs of total degree <= max.
pub fn check_trid_partition(max_degree: usize) -> Result<(), String> {
    for (d1, d2) in crate::coeffs::degree_pairs(max_degree) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for a in parking_functions(d1) {
            for b in parking_functions(d2) {
                let (l, m, r) = g_trid_parts(&a, &b);
                if l.add(&m).add(&r) != g_product(&a, &b) {
                    return Err(format!("partition of the product fails on ({a}, {b})"));
                }
            }
        }
    }
    Ok(())
}
