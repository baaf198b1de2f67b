//! Sparse exact linear algebra over typed basis keys.
//!
//! [`LinComb`] and [`Tensor`] are zero-pruned maps from keys (or key pairs)
//! to arbitrary-precision rationals. The [`Bialgebra`] trait is the algebra
//! registry: each algebra registers its basis enumeration, product and
//! coproduct on keys, and the generic harness here supplies convolution
//! calculus (antipode, Eulerian idempotent), duality pairings, axiom checks
//! and primitive-space dimensions for all of them at once.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::words::Letter;

pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A key indexing one basis of one graded algebra.
pub trait GradedKey: Clone + Ord + fmt::Display {
    fn degree(&self) -> usize;
}

/// Sparse rational linear combination over one basis. No zero coefficient is
/// ever stored; keys of mixed bases are prevented by the type system.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(key: K, coeff: Rational) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn unit(key: K) -> Self {
        Self::single(key, Rational::one())
    }

    /// Sum of basis keys with multiplicity.
    pub fn from_keys<I: IntoIterator<Item = K>>(keys: I) -> Self {
        let mut c = Self::zero();
        for k in keys {
            c.add_term(k, Rational::one());
        }
        c
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * by))
                .collect(),
        }
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Linear extension of a key-level rule.
    pub fn map_linear<K2: Ord + Clone>(
        &self,
        mut rule: impl FnMut(&K) -> LinComb<K2>,
    ) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in rule(k).terms {
                out.add_term(k2, c * &c2);
            }
        }
        out
    }

    /// Bilinear extension of a key-pair rule.
    pub fn bilinear<K2: Ord + Clone>(
        x: &Self,
        y: &Self,
        mut rule: impl FnMut(&K, &K) -> LinComb<K2>,
    ) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let prod = ca * cb;
                for (k, c) in rule(a, b).terms {
                    out.add_term(k, &prod * &c);
                }
            }
        }
        out
    }

    /// Colinear extension of a key-level coproduct rule.
    pub fn map_colinear(&self, mut rule: impl FnMut(&K) -> Tensor<K>) -> Tensor<K> {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            for ((l, r), c2) in rule(k).terms {
                out.add_term(l, r, c * &c2);
            }
        }
        out
    }
}

impl<K: GradedKey> LinComb<K> {
    /// Degree when all terms share one; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|k| k.degree() == d).then_some(d)
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            write_signed_term(f, i == 0, c, &k.to_string())?;
        }
        Ok(())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    key: &str,
) -> fmt::Result {
    let mag = c.abs();
    let sign = if c.is_negative() {
        if first {
            "-"
        } else {
            " - "
        }
    } else if first {
        ""
    } else {
        " + "
    };
    if mag.is_one() {
        write!(f, "{sign}{key}")
    } else {
        write!(f, "{sign}{mag}*{key}")
    }
}

/// Sparse rational combination over ordered pairs of keys.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<K: Ord> {
    terms: BTreeMap<(K, K), Rational>,
}

impl<K: Ord + Clone> Default for Tensor<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> Tensor<K> {
    pub fn zero() -> Self {
        Tensor {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(left: K, right: K, coeff: Rational) -> Self {
        let mut t = Self::zero();
        t.add_term(left, right, coeff);
        t
    }

    pub fn add_term(&mut self, left: K, right: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Tensor {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * by))
                .collect(),
        }
    }

    pub fn coeff(&self, left: &K, right: &K) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(K, K), &Rational)> {
        self.terms.iter()
    }

    pub fn swap_sides(&self) -> Self {
        let mut out = Self::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Tensor product of two elements.
    pub fn of(x: &LinComb<K>, y: &LinComb<K>) -> Self {
        let mut out = Self::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        out
    }

    pub fn map_terms<K2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K, &K) -> (K2, K2),
    ) -> Tensor<K2> {
        let mut out = Tensor::zero();
        for ((l, r), c) in &self.terms {
            let (l2, r2) = f(l, r);
            out.add_term(l2, r2, c.clone());
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            write_signed_term(f, i == 0, c, &format!("{l}(x){r}"))?;
        }
        Ok(())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// the algebra registry
// ---------------------------------------------------------------------------

/// One graded connected bialgebra with a distinguished basis. The coproduct
/// is the full one, including the `1 (x) k` and `k (x) 1` parts.
pub trait Bialgebra {
    type Key: GradedKey;

    fn name(&self) -> &'static str;

    /// The degree-0 basis key.
    fn unit_key(&self) -> Self::Key;

    fn basis(&self, degree: usize) -> Vec<Self::Key>;

    fn product_keys(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;

    fn coproduct_key(&self, k: &Self::Key) -> Tensor<Self::Key>;

    fn product(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        LinComb::bilinear(x, y, |a, b| self.product_keys(a, b))
    }

    fn coproduct(&self, x: &LinComb<Self::Key>) -> Tensor<Self::Key> {
        x.map_colinear(|k| self.coproduct_key(k))
    }

    /// Coefficient of the unit key.
    fn counit(&self, x: &LinComb<Self::Key>) -> Rational {
        x.coeff(&self.unit_key())
    }

    /// `Δ k` with the two trivial parts removed.
    fn reduced_coproduct(&self, k: &Self::Key) -> Tensor<Self::Key> {
        let mut t = self.coproduct_key(k);
        let unit = self.unit_key();
        t.add_term(unit.clone(), k.clone(), -Rational::one());
        t.add_term(k.clone(), unit, -Rational::one());
        t
    }

    fn tensor_product(
        &self,
        s: &Tensor<Self::Key>,
        t: &Tensor<Self::Key>,
    ) -> Tensor<Self::Key> {
        let mut out = Tensor::zero();
        for ((a, b), c1) in s.iter() {
            for ((c, d), c2) in t.iter() {
                let coeff = c1 * c2;
                let left = self.product_keys(a, c);
                let right = self.product_keys(b, d);
                for (l, cl) in left.iter() {
                    for (r, cr) in right.iter() {
                        out.add_term(l.clone(), r.clone(), &coeff * &(cl * cr));
                    }
                }
            }
        }
        out
    }
}

/// Antipode of a basis key, computed degree-by-degree as the convolution
/// inverse of the identity: `S(k) = -k - Σ S(k') k''` over proper splits.
pub fn antipode_key<A: Bialgebra>(
    alg: &A,
    k: &A::Key,
    cache: &mut BTreeMap<A::Key, LinComb<A::Key>>,
) -> LinComb<A::Key> {
    if k.degree() == 0 {
        return LinComb::unit(k.clone());
    }
    if let Some(hit) = cache.get(k) {
        return hit.clone();
    }
    let mut acc = LinComb::single(k.clone(), -Rational::one());
    for ((l, r), c) in alg.coproduct_key(k).iter() {
        if l.degree() == 0 || r.degree() == 0 {
            continue;
        }
        let s_l = antipode_key(alg, l, cache);
        let prod = alg.product(&s_l, &LinComb::unit(r.clone()));
        acc = acc.sub(&prod.scale(c));
    }
    cache.insert(k.clone(), acc.clone());
    acc
}

pub fn antipode<A: Bialgebra>(alg: &A, x: &LinComb<A::Key>) -> LinComb<A::Key> {
    let mut cache = BTreeMap::new();
    x.map_linear(|k| antipode_key(alg, k, &mut cache))
}

/// Convolution power `(Id - unit∘counit)^{*m}` applied to `x`.
fn augmentation_conv_power<A: Bialgebra>(
    alg: &A,
    m: usize,
    x: &LinComb<A::Key>,
) -> LinComb<A::Key> {
    let project = |x: &LinComb<A::Key>| -> LinComb<A::Key> {
        let mut out = LinComb::zero();
        for (k, c) in x.iter() {
            if k.degree() >= 1 {
                out.add_term(k.clone(), c.clone());
            }
        }
        out
    };
    match m {
        0 => {
            // unit ∘ counit
            LinComb::single(alg.unit_key(), alg.counit(x))
        }
        1 => project(x),
        _ => {
            let mut out = LinComb::zero();
            for (k, c) in x.iter() {
                for ((l, r), c2) in alg.coproduct_key(k).iter() {
                    if r.degree() == 0 {
                        continue;
                    }
                    let left = augmentation_conv_power(alg, m - 1, &LinComb::unit(l.clone()));
                    let prod = alg.product(&left, &LinComb::unit(r.clone()));
                    out = out.add(&prod.scale(&(c * c2)));
                }
            }
            out
        }
    }
}

/// The Eulerian idempotent `π₁ = log*(Id)` applied to a homogeneous `x` of
/// degree `n >= 1`: `Σ_{m=1..n} (-1)^{m+1}/m (Id - unit∘counit)^{*m}(x)`.
pub fn eulerian_idempotent<A: Bialgebra>(alg: &A, x: &LinComb<A::Key>) -> LinComb<A::Key> {
    let n = x
        .homogeneous_degree()
        .expect("eulerian idempotent needs a homogeneous argument");
    assert!(n >= 1, "degree must be at least 1");
    let mut out = LinComb::zero();
    for m in 1..=n {
        let sign = if m % 2 == 1 { 1 } else { -1 };
        let coeff = Rational::new(sign.into(), (m as i64).into());
        out = out.add(&augmentation_conv_power(alg, m, x).scale(&coeff));
    }
    out
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------

/// Keys with an underlying index shared with the dual basis.
pub trait IndexedKey: GradedKey {
    type Index: Ord + Clone;

    fn index(&self) -> &Self::Index;

    fn from_index(index: Self::Index) -> Self;
}

/// Kronecker pairing `<x, y> = Σ x_k y_k` matching keys by index; the two
/// sides may live in dual bases with distinct key types.
pub fn pairing<K1, K2>(x: &LinComb<K1>, y: &LinComb<K2>) -> Rational
where
    K1: IndexedKey,
    K2: IndexedKey<Index = K1::Index>,
{
    let mut acc = Rational::zero();
    for (k, c) in x.iter() {
        let other = K2::from_index(k.index().clone());
        acc += c * &y.coeff(&other);
    }
    acc
}

/// Pairing of tensors against tensors, componentwise Kronecker.
pub fn tensor_pairing<K1, K2>(x: &Tensor<K1>, y: &Tensor<K2>) -> Rational
where
    K1: IndexedKey,
    K2: IndexedKey<Index = K1::Index>,
{
    let mut acc = Rational::zero();
    for ((a, b), c) in x.iter() {
        let a2 = K2::from_index(a.index().clone());
        let b2 = K2::from_index(b.index().clone());
        acc += c * &y.coeff(&a2, &b2);
    }
    acc
}

// ---------------------------------------------------------------------------
// exact rank and primitive dimensions
// ---------------------------------------------------------------------------

/// Row rank by fraction-exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].clone();
        for r in pivot_row + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &inv;
            for c in col..cols {
                let delta = &factor * &rows[pivot_row][c];
                rows[r][c] -= delta;
            }
        }
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of the kernel of one or more linear maps out of the span of
/// `basis`, each given by its value on keys as a `Tensor`.
fn kernel_dim_of_tensor_maps<K: GradedKey>(
    basis: &[K],
    maps: &[&dyn Fn(&K) -> Tensor<K>],
) -> usize {
    let mut col_index: BTreeMap<(usize, K, K), usize> = BTreeMap::new();
    let mut images: Vec<Vec<((usize, K, K), Rational)>> = Vec::with_capacity(basis.len());
    for k in basis {
        let mut row = Vec::new();
        for (mi, map) in maps.iter().enumerate() {
            for ((l, r), c) in map(k).iter() {
                let key = (mi, l.clone(), r.clone());
                let next = col_index.len();
                col_index.entry(key.clone()).or_insert(next);
                row.push((key, c.clone()));
            }
        }
        images.push(row);
    }
    let cols = col_index.len();
    let rows: Vec<Vec<Rational>> = images
        .into_iter()
        .map(|entries| {
            let mut row = vec![Rational::zero(); cols];
            for (key, c) in entries {
                row[col_index[&key]] += c;
            }
            row
        })
        .collect();
    basis.len() - rank(rows)
}

/// Dimension of `ker Δ̄` on the degree-`n` component.
pub fn primitive_dim<A: Bialgebra>(alg: &A, n: usize) -> usize {
    let basis = alg.basis(n);
    let map = |k: &A::Key| alg.reduced_coproduct(k);
    kernel_dim_of_tensor_maps(&basis, &[&map])
}

/// Dimension of `ker Δ_< ∩ ker Δ_>` on the degree-`n` component, with the
/// two half reduced coproducts supplied by the caller.
pub fn totally_primitive_dim<K: GradedKey>(
    basis: &[K],
    left: impl Fn(&K) -> Tensor<K>,
    right: impl Fn(&K) -> Tensor<K>,
) -> usize {
    let l = |k: &K| left(k);
    let r = |k: &K| right(k);
    kernel_dim_of_tensor_maps(basis, &[&l, &r])
}

/// True when `x` lies in the kernel of the reduced coproduct.
pub fn is_primitive<A: Bialgebra>(alg: &A, x: &LinComb<A::Key>) -> bool {
    let mut t = alg.coproduct(x);
    let unit = alg.unit_key();
    for (k, c) in x.iter() {
        t.add_term(unit.clone(), k.clone(), -c.clone());
        t.add_term(k.clone(), unit.clone(), -c.clone());
    }
    // the unit (x) unit coefficient vanishes for counit-less x already
    t.is_zero()
}

// ---------------------------------------------------------------------------
// axiom checks
// ---------------------------------------------------------------------------

/// Verify product associativity on all basis triples of total degree
/// `<= max_degree`. Returns the first counterexample rendered.
pub fn check_associativity<A: Bialgebra>(alg: &A, max_degree: usize) -> Result<(), String> {
    for (d1, d2, d3) in degree_triples(max_degree) {
        for a in alg.basis(d1) {
            for b in alg.basis(d2) {
                for c in alg.basis(d3) {
                    let ab = alg.product_keys(&a, &b);
                    let bc = alg.product_keys(&b, &c);
                    let lhs = alg.product(&ab, &LinComb::unit(c.clone()));
                    let rhs = alg.product(&LinComb::unit(a.clone()), &bc);
                    if lhs != rhs {
                        return Err(format!(
                            "{}: ({a} {b}) {c} = {lhs} but {a} ({b} {c}) = {rhs}",
                            alg.name()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn check_coassociativity<A: Bialgebra>(alg: &A, max_degree: usize) -> Result<(), String> {
    for n in 0..=max_degree {
        for k in alg.basis(n) {
            let delta = alg.coproduct_key(&k);
            let mut lhs: BTreeMap<(A::Key, A::Key, A::Key), Rational> = BTreeMap::new();
            let mut rhs = lhs.clone();
            for ((l, r), c) in delta.iter() {
                for ((l2, r2), c2) in alg.coproduct_key(l).iter() {
                    *lhs.entry((l2.clone(), r2.clone(), r.clone()))
                        .or_insert_with(Rational::zero) += c * c2;
                }
                for ((l2, r2), c2) in alg.coproduct_key(r).iter() {
                    *rhs.entry((l.clone(), l2.clone(), r2.clone()))
                        .or_insert_with(Rational::zero) += c * c2;
                }
            }
            lhs.retain(|_, c| !c.is_zero());
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                return Err(format!("{}: coassociativity fails on {k}", alg.name()));
            }
        }
    }
    Ok(())
}

/// `Δ(xy) = Δ(x) Δ(y)` on basis pairs of total degree `<= max_degree`.
pub fn check_bialgebra_compat<A: Bialgebra>(alg: &A, max_degree: usize) -> Result<(), String> {
    for (d1, d2) in degree_pairs(max_degree) {
        for a in alg.basis(d1) {
            for b in alg.basis(d2) {
                let prod = alg.product_keys(&a, &b);
                let lhs = alg.coproduct(&prod);
                let rhs = alg.tensor_product(&alg.coproduct_key(&a), &alg.coproduct_key(&b));
                if lhs != rhs {
                    return Err(format!(
                        "{}: Δ({a}·{b}) mismatch:\n  Δ(xy) = {lhs}\n  ΔxΔy = {rhs}",
                        alg.name()
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Counit axioms `(ε⊗id)Δ = id = (id⊗ε)Δ` on basis keys.
pub fn check_counit<A: Bialgebra>(alg: &A, max_degree: usize) -> Result<(), String> {
    let unit = alg.unit_key();
    for n in 0..=max_degree {
        for k in alg.basis(n) {
            let delta = alg.coproduct_key(&k);
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for ((l, r), c) in delta.iter() {
                if *l == unit {
                    left.add_term(r.clone(), c.clone());
                }
                if *r == unit {
                    right.add_term(l.clone(), c.clone());
                }
            }
            let id = LinComb::unit(k.clone());
            if left != id || right != id {
                return Err(format!("{}: counit axiom fails on {k}", alg.name()));
            }
        }
    }
    Ok(())
}

/// Antipode axiom `m ∘ (S⊗id) ∘ Δ = unit ∘ counit` on basis keys.
pub fn check_antipode<A: Bialgebra>(alg: &A, max_degree: usize) -> Result<(), String> {
    let mut cache = BTreeMap::new();
    for n in 0..=max_degree {
        for k in alg.basis(n) {
            let mut acc = LinComb::zero();
            for ((l, r), c) in alg.coproduct_key(&k).iter() {
                let s_l = antipode_key(alg, l, &mut cache);
                let prod = alg.product(&s_l, &LinComb::unit(r.clone()));
                acc = acc.add(&prod.scale(c));
            }
            let expect = if n == 0 {
                LinComb::unit(alg.unit_key())
            } else {
                LinComb::zero()
            };
            if acc != expect {
                return Err(format!("{}: antipode axiom fails on {k}", alg.name()));
            }
        }
    }
    Ok(())
}

/// Run the full axiom suite for one algebra.
pub fn check_all_axioms<A: Bialgebra>(alg: &A, max_degree: usize) -> Result<(), String> {
    check_associativity(alg, max_degree)?;
    check_coassociativity(alg, max_degree)?;
    check_bialgebra_compat(alg, max_degree)?;
    check_counit(alg, max_degree)?;
    check_antipode(alg, max_degree)?;
    Ok(())
}

/// Duality adjunction `<xy, z> = <x⊗y, Δz>` for a dual pair sharing an
/// index type, checked on all basis triples with `|x|+|y| = |z| <= max_degree`.
pub fn check_duality_adjunction<A, B>(a: &A, b: &B, max_degree: usize) -> Result<(), String>
where
    A: Bialgebra,
    B: Bialgebra,
    A::Key: IndexedKey,
    B::Key: IndexedKey<Index = <A::Key as IndexedKey>::Index>,
{
    for (d1, d2) in degree_pairs(max_degree) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for x in a.basis(d1) {
            for y in a.basis(d2) {
                let xy = a.product_keys(&x, &y);
                let xt = Tensor::of(&LinComb::unit(x.clone()), &LinComb::unit(y.clone()));
                for z in b.basis(d1 + d2) {
                    let lhs = pairing(&xy, &LinComb::unit(z.clone()));
                    let rhs = tensor_pairing(&xt, &b.coproduct_key(&z));
                    if lhs != rhs {
                        return Err(format!(
                            "<{x}·{y}, {z}> = {lhs} but <{x}⊗{y}, Δ{z}> = {rhs} ({} vs {})",
                            a.name(),
                            b.name()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn degree_pairs(max_total: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for d1 in 0..=total {
            out.push((d1, total - d1));
        }
    }
    out
}

pub fn degree_triples(max_total: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for d1 in 0..=total {
            for d2 in 0..=total - d1 {
                out.push((d1, d2, total - d1 - d2));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// key plumbing shared by the basis newtypes
// ---------------------------------------------------------------------------

/// Renders `NAME[i1,i2|i3]` given letters and bar positions.
pub fn render_indexed(name: &str, letters: &[Letter], bars: &[usize]) -> String {
    let mut s = String::from(name);
    s.push('[');
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            s.push(if bars.contains(&i) { '|' } else { ',' });
        }
        s.push_str(&x.to_string());
    }
    s.push(']');
    s
}

/// Declares a basis-key newtype over an index type, wiring up
/// `GradedKey`/`IndexedKey` and a `NAME[..]` display.
#[macro_export]
macro_rules! basis_key {
    ($(#[$meta:meta])* $key:ident, $index:ty, $name:literal, $degree:expr, $render:expr) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
        pub struct $key(pub $index);

        impl $crate::coeffs::GradedKey for $key {
            fn degree(&self) -> usize {
                let f: fn(&$index) -> usize = $degree;
                f(&self.0)
            }
        }

        impl $crate::coeffs::IndexedKey for $key {
            type Index = $index;

            fn index(&self) -> &$index {
                &self.0
            }

            fn from_index(index: $index) -> Self {
                $key(index)
            }
        }

        impl std::fmt::Display for $key {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                let r: fn(&$index) -> (Vec<$crate::words::Letter>, Vec<usize>) = $render;
                let (letters, bars) = r(&self.0);
                write!(f, "{}", $crate::coeffs::render_indexed($name, &letters, &bars))
            }
        }

        impl std::fmt::Debug for $key {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                std::fmt::Display::fmt(self, f)
            }
        }

        impl $key {
            pub const BASIS_NAME: &'static str = $name;

            /// Letters and bar positions of the index, as rendered.
            pub fn index_parts(&self) -> (Vec<$crate::words::Letter>, Vec<usize>) {
                let r: fn(&$index) -> (Vec<$crate::words::Letter>, Vec<usize>) = $render;
                r(&self.0)
            }
        }
    };
}
