//! The Schröder algebra of hypoplactic classes of parking functions.
//!
//! Classes are encoded as segmented nondecreasing parking functions
//! ("parking quasi-ribbons"): the sorted word plus bars at some strict
//! ascents, recording the recoil composition. `PS` sums a class inside the
//! big algebra, `QS` is the dual class basis of the quotient, and `RS` is
//! the ribbon basis for the successor order on segmented evaluations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::basis_key;
use crate::coeffs::{rat, Bialgebra, LinComb, Tensor};
use crate::words::{
    convolution, descent_composition, invert_permutation, multiset_permutations,
    nondecreasing_parking_functions, parkize, standardize, Letter,
    ParkingFunction, Word, WordsError,
};

/// A nondecreasing parking function with bars at some strict ascents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SegmentedWord {
    word: ParkingFunction,
    bars: BTreeSet<usize>,
}

impl SegmentedWord {
    /// `bars` holds gap positions: a bar at `i` sits between positions `i`
    /// and `i+1` (1-based) and requires a strict ascent there.
    pub fn new(word: ParkingFunction, bars: BTreeSet<usize>) -> Result<Self, WordsError> {
        if !word.is_nondecreasing() {
            return Err(WordsError::NotSorted(word.word().clone()));
        }
        for &b in &bars {
            if b == 0 || b >= word.len() || word.letters()[b - 1] >= word.letters()[b] {
                return Err(WordsError::NotSorted(word.word().clone()));
            }
        }
        Ok(SegmentedWord { word, bars })
    }

    pub fn empty() -> Self {
        SegmentedWord {
            word: ParkingFunction::empty(),
            bars: BTreeSet::new(),
        }
    }

    pub fn word(&self) -> &ParkingFunction {
        &self.word
    }

    pub fn bars(&self) -> &BTreeSet<usize> {
        &self.bars
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Letters and bar positions for rendering.
    pub fn render_parts(&self) -> (Vec<Letter>, Vec<usize>) {
        (
            self.word.letters().to_vec(),
            self.bars.iter().copied().collect(),
        )
    }

    /// Shift all letters by `k`, keeping the bars.
    pub fn shift(&self, k: Letter) -> (Word, BTreeSet<usize>) {
        (self.word.shift(k), self.bars.clone())
    }

    /// Bands of value groups `(letter, multiplicity)` delimited by the bars.
    pub fn bands(&self) -> Vec<Vec<(Letter, usize)>> {
        let mut bands: Vec<Vec<(Letter, usize)>> = vec![Vec::new()];
        for (i, &x) in self.word.letters().iter().enumerate() {
            if i > 0 && self.bars.contains(&i) {
                bands.push(Vec::new());
            }
            let band = bands.last_mut().unwrap();
            match band.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => band.push((x, 1)),
            }
        }
        if self.word.is_empty() {
            bands.clear();
        }
        bands
    }

    /// Rebuild from bands; bars return at the band boundaries.
    pub fn from_bands(bands: &[Vec<(Letter, usize)>]) -> SegmentedWord {
        let mut letters = Vec::new();
        let mut bars = BTreeSet::new();
        for (i, band) in bands.iter().enumerate() {
            if i > 0 {
                bars.insert(letters.len());
            }
            for &(v, m) in band {
                letters.extend(std::iter::repeat_n(v, m));
            }
        }
        SegmentedWord::new(
            ParkingFunction::new(Word::new(letters)).expect("bands form a parking word"),
            bars,
        )
        .expect("band boundaries are ascents")
    }
}

impl fmt::Display for SegmentedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        for (i, &x) in self.word.letters().iter().enumerate() {
            if i > 0 && self.bars.contains(&i) {
                write!(f, "|")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SegmentedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SegmentedWord {
    type Err = WordsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "e" || s.is_empty() {
            return Ok(SegmentedWord::empty());
        }
        let mut letters = Vec::new();
        let mut bars = BTreeSet::new();
        for ch in s.chars() {
            match ch {
                '|' => {
                    bars.insert(letters.len());
                }
                d => {
                    let x = d
                        .to_digit(10)
                        .filter(|&x| x >= 1)
                        .ok_or_else(|| WordsError::Parse(s.to_string()))?;
                    letters.push(x);
                }
            }
        }
        SegmentedWord::new(ParkingFunction::new(Word::new(letters))?, bars)
    }
}

basis_key!(
    /// Class sums inside the parking-function algebra.
    PsKey,
    SegmentedWord,
    "PS",
    |q| q.len(),
    |q| q.render_parts()
);

basis_key!(
    /// Dual class basis of the quotient.
    QsKey,
    SegmentedWord,
    "QS",
    |q| q.len(),
    |q| q.render_parts()
);

basis_key!(
    /// Schröder ribbons.
    RsKey,
    SegmentedWord,
    "RS",
    |q| q.len(),
    |q| q.render_parts()
);

// ---------------------------------------------------------------------------
// hypoplactic classes
// ---------------------------------------------------------------------------

/// Hypoplactic class of a parking function: the sorted word segmented by
/// the recoil composition of its standardization.
pub fn psymbol(a: &ParkingFunction) -> SegmentedWord {
    if a.is_empty() {
        return SegmentedWord::empty();
    }
    let recoils = descent_composition(&invert_permutation(&standardize(a.word())));
    let bars: BTreeSet<usize> = recoils.descent_set().iter().map(|&d| d as usize).collect();
    SegmentedWord::new(
        ParkingFunction::new(a.sorted()).expect("sorting preserves parking"),
        bars,
    )
    .expect("recoil boundaries are strict ascents of the sorted word")
}

/// All parking functions in the class of `q`, lexicographic order.
pub fn class_members(q: &SegmentedWord) -> Vec<ParkingFunction> {
    multiset_permutations(q.word().word())
        .into_iter()
        .map(|w| ParkingFunction::new(w).expect("rearrangement of parking is parking"))
        .filter(|a| psymbol(a) == *q)
        .collect()
}

/// A canonical representative of the class.
pub fn class_representative(q: &SegmentedWord) -> ParkingFunction {
    class_members(q)
        .into_iter()
        .next()
        .expect("every segmented word has a representative")
}

/// All parking quasi-ribbons of length `n`: nondecreasing parking functions
/// with any subset of strict ascents barred.
pub fn segmented_words(n: usize) -> Vec<SegmentedWord> {
    let mut out = Vec::new();
    for a in nondecreasing_parking_functions(n) {
        let ascents: Vec<usize> = (1..n)
            .filter(|&i| a.letters()[i - 1] < a.letters()[i])
            .collect();
        for mask in 0u32..(1 << ascents.len()) {
            let bars: BTreeSet<usize> = ascents
                .iter()
                .enumerate()
                .filter(|(j, _)| mask & (1 << j) != 0)
                .map(|(_, &g)| g)
                .collect();
            out.push(SegmentedWord::new(a.clone(), bars).expect("ascent subset"));
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// products and coproducts
// ---------------------------------------------------------------------------

/// `PS_q' PS_q'' = PS_(q'|q̄'') + PS_(q' q̄'')`.
pub fn ps_product(q1: &SegmentedWord, q2: &SegmentedWord) -> LinComb<PsKey> {
    if q1.is_empty() {
        return LinComb::unit(PsKey(q2.clone()));
    }
    if q2.is_empty() {
        return LinComb::unit(PsKey(q1.clone()));
    }
    let (shifted, sbars) = q2.shift(q1.len() as Letter);
    let cut = q1.len();
    let word = ParkingFunction::new(q1.word().concat(&shifted)).expect("shifted concat parks");
    let mut base: BTreeSet<usize> = q1.bars().clone();
    base.extend(sbars.iter().map(|b| b + cut));
    let unbarred = SegmentedWord::new(word.clone(), base.clone()).expect("concat is segmented");
    let mut barred_bars = base;
    barred_bars.insert(cut);
    let barred = SegmentedWord::new(word, barred_bars).expect("junction is an ascent");
    let mut out = LinComb::unit(PsKey(barred));
    out.add_term(PsKey(unbarred), rat(1));
    out
}

/// `QS_q' QS_q'' = Σ QS_(class of c)` over the convolution of class
/// representatives; well-defined on classes.
pub fn qs_product(q1: &SegmentedWord, q2: &SegmentedWord) -> LinComb<QsKey> {
    if q1.is_empty() {
        return LinComb::unit(QsKey(q2.clone()));
    }
    if q2.is_empty() {
        return LinComb::unit(QsKey(q1.clone()));
    }
    qs_product_from(&class_representative(q1), &class_representative(q2))
}

/// The class-projected convolution product computed from explicit
/// representatives.
pub fn qs_product_from(a: &ParkingFunction, b: &ParkingFunction) -> LinComb<QsKey> {
    let mut out = LinComb::zero();
    for c in convolution(a, b) {
        out.add_term(QsKey(psymbol(&c)), rat(1));
    }
    out
}

/// `ΔQS_q`: deconcatenations at the breakpoints of the sorted word, the bar
/// or comma at the cut disappearing and the right part unshifted.
pub fn qs_coproduct(q: &SegmentedWord) -> Tensor<QsKey> {
    let mut out = Tensor::zero();
    for b in q.word().breakpoints() {
        let left_word = Word::new(q.word().letters()[..b].to_vec());
        let right_word = Word::new(
            q.word().letters()[b..]
                .iter()
                .map(|&x| x - b as Letter)
                .collect(),
        );
        let left_bars: BTreeSet<usize> = q.bars().iter().copied().filter(|&g| g < b).collect();
        let right_bars: BTreeSet<usize> = q
            .bars()
            .iter()
            .copied()
            .filter(|&g| g > b)
            .map(|g| g - b)
            .collect();
        let left = SegmentedWord::new(
            ParkingFunction::new(left_word).expect("prefix parks"),
            left_bars,
        )
        .expect("prefix bars stay ascents");
        let right = SegmentedWord::new(
            ParkingFunction::new(right_word).expect("suffix unshifts to parking"),
            right_bars,
        )
        .expect("suffix bars stay ascents");
        out.add_term(QsKey(left), QsKey(right), rat(1));
    }
    out
}

/// `ΔPS_q`: the deconcatenation coproduct of the class sum, regrouped by
/// classes. The coefficient of a class pair is read off its representative
/// pair; class pairs can occur with multiplicity.
pub fn ps_coproduct(q: &SegmentedWord) -> Tensor<PsKey> {
    let mut out = Tensor::zero();
    if q.is_empty() {
        out.add_term(PsKey(q.clone()), PsKey(q.clone()), rat(1));
        return out;
    }
    let mut by_pair: std::collections::BTreeMap<
        (ParkingFunction, ParkingFunction),
        crate::coeffs::Rational,
    > = Default::default();
    for a in class_members(q) {
        for cut in 0..=a.len() {
            let u = parkize(&Word::new(a.letters()[..cut].to_vec())).into_word();
            let v = parkize(&Word::new(a.letters()[cut..].to_vec())).into_word();
            *by_pair
                .entry((
                    ParkingFunction::new(u).unwrap(),
                    ParkingFunction::new(v).unwrap(),
                ))
                .or_insert_with(num::Zero::zero) += rat(1);
        }
    }
    for ((u, v), c) in by_pair {
        let (ql, qr) = (psymbol(&u), psymbol(&v));
        if u == class_representative(&ql) && v == class_representative(&qr) {
            out.add_term(PsKey(ql), PsKey(qr), c);
        }
    }
    out
}

/// Cross-check of `ΔPS_q` by duality: the coefficient of `PS_q' ⊗ PS_q''`
/// is the coefficient of `QS_q` in `QS_q' QS_q''`.
pub fn ps_coproduct_via_duality(q: &SegmentedWord) -> Tensor<PsKey> {
    let n = q.len();
    let mut out = Tensor::zero();
    if n == 0 {
        out.add_term(PsKey(q.clone()), PsKey(q.clone()), rat(1));
        return out;
    }
    let target = QsKey(q.clone());
    for left_deg in 0..=n {
        for l in segmented_words(left_deg) {
            for r in segmented_words(n - left_deg) {
                let c = qs_product(&l, &r).coeff(&target);
                out.add_term(PsKey(l.clone()), PsKey(r), c);
            }
        }
    }
    out
}

pub struct SqsymPs;

impl Bialgebra for SqsymPs {
    type Key = PsKey;

    fn name(&self) -> &'static str {
        "SQSym(PS)"
    }

    fn unit_key(&self) -> PsKey {
        PsKey(SegmentedWord::empty())
    }

    fn basis(&self, degree: usize) -> Vec<PsKey> {
        segmented_words(degree).into_iter().map(PsKey).collect()
    }

    fn product_keys(&self, a: &PsKey, b: &PsKey) -> LinComb<PsKey> {
        ps_product(&a.0, &b.0)
    }

    fn coproduct_key(&self, k: &PsKey) -> Tensor<PsKey> {
        ps_coproduct(&k.0)
    }
}

pub struct SqsymQs;

impl Bialgebra for SqsymQs {
    type Key = QsKey;

    fn name(&self) -> &'static str {
        "SQSym*(QS)"
    }

    fn unit_key(&self) -> QsKey {
        QsKey(SegmentedWord::empty())
    }

    fn basis(&self, degree: usize) -> Vec<QsKey> {
        segmented_words(degree).into_iter().map(QsKey).collect()
    }

    fn product_keys(&self, a: &QsKey, b: &QsKey) -> LinComb<QsKey> {
        qs_product(&a.0, &b.0)
    }

    fn coproduct_key(&self, k: &QsKey) -> Tensor<QsKey> {
        qs_coproduct(&k.0)
    }
}

// ---------------------------------------------------------------------------
// Schröder ribbons
// ---------------------------------------------------------------------------

/// Successor closure within each band: value groups coalesce leftwards,
/// never across a bar.
fn successor_closure(q: &SegmentedWord) -> Vec<(SegmentedWord, usize)> {
    let bands = q.bands();
    let mut results: Vec<(Vec<Vec<(Letter, usize)>>, usize)> = vec![(Vec::new(), 0)];
    for band in &bands {
        let gaps = band.len() - 1;
        let mut merged_options = Vec::new();
        for mask in 0u32..(1 << gaps) {
            let mut merged: Vec<(Letter, usize)> = vec![band[0]];
            for (i, g) in band[1..].iter().enumerate() {
                if mask & (1 << i) != 0 {
                    merged.last_mut().unwrap().1 += g.1;
                } else {
                    merged.push(*g);
                }
            }
            merged_options.push((merged, mask.count_ones() as usize));
        }
        results = results
            .into_iter()
            .flat_map(|(prefix, merges)| {
                merged_options.iter().map(move |(band, m)| {
                    let mut next = prefix.clone();
                    next.push(band.clone());
                    (next, merges + m)
                })
            })
            .collect();
    }
    results
        .into_iter()
        .map(|(bands, merges)| (SegmentedWord::from_bands(&bands), merges))
        .collect()
}

/// `PS_q = Σ RS_(q')` over the successor closure.
pub fn ps_in_rs(q: &SegmentedWord) -> LinComb<RsKey> {
    LinComb::from_keys(successor_closure(q).into_iter().map(|(x, _)| RsKey(x)))
}

/// `RS_q = Σ (-1)^merges PS_(q')` by Möbius inversion.
pub fn rs_expand(q: &SegmentedWord) -> LinComb<PsKey> {
    let mut out = LinComb::zero();
    for (x, merges) in successor_closure(q) {
        let sign = if merges % 2 == 0 { 1 } else { -1 };
        out.add_term(PsKey(x), rat(sign));
    }
    out
}

/// `RS_q' RS_q'' = RS_(q'|q̄'') + RS_(q' q̄'') + RS_(q' ▷ q̄'')`.
pub fn rs_product(q1: &SegmentedWord, q2: &SegmentedWord) -> LinComb<RsKey> {
    if q1.is_empty() {
        return LinComb::unit(RsKey(q2.clone()));
    }
    if q2.is_empty() {
        return LinComb::unit(RsKey(q1.clone()));
    }
    let shift = q1.len() as Letter;
    let s_bands: Vec<Vec<(Letter, usize)>> = q2
        .bands()
        .iter()
        .map(|band| band.iter().map(|&(v, m)| (v + shift, m)).collect())
        .collect();
    let mut bands_barred = q1.bands();
    bands_barred.extend(s_bands.iter().cloned());
    let barred = SegmentedWord::from_bands(&bands_barred);
    // unbarred: last band of q1 fuses with first band of the shift
    let q1_bands = q1.bands();
    let mut bands_plain = q1_bands.clone();
    let mut fused = bands_plain.pop().unwrap();
    fused.extend(s_bands[0].iter().copied());
    bands_plain.push(fused);
    bands_plain.extend(s_bands[1..].iter().cloned());
    let plain = SegmentedWord::from_bands(&bands_plain);
    // lowered: additionally merge the two groups at the junction
    let mut bands_low = q1_bands;
    let mut fused = bands_low.pop().unwrap();
    let absorbed = s_bands[0][0].1;
    fused.last_mut().unwrap().1 += absorbed;
    fused.extend(s_bands[0][1..].iter().copied());
    bands_low.push(fused);
    bands_low.extend(s_bands[1..].iter().cloned());
    let lowered = SegmentedWord::from_bands(&bands_low);
    let mut out = LinComb::unit(RsKey(barred));
    out.add_term(RsKey(plain), rat(1));
    out.add_term(RsKey(lowered), rat(1));
    out
}

// ---------------------------------------------------------------------------
// generators and the large Schröder bijection
// ---------------------------------------------------------------------------

/// Internal breakpoint gaps of the underlying word.
fn internal_breakpoints(q: &SegmentedWord) -> Vec<usize> {
    q.word()
        .breakpoints()
        .into_iter()
        .filter(|&b| b > 0 && b < q.len())
        .collect()
}

/// Indecomposable parking quasi-ribbons: every internal breakpoint barred.
pub fn is_pqs(q: &SegmentedWord) -> bool {
    !q.is_empty() && internal_breakpoints(q).iter().all(|b| q.bars().contains(b))
}

pub fn pqs_generators(n: usize) -> Vec<SegmentedWord> {
    segmented_words(n).into_iter().filter(is_pqs).collect()
}

/// Unique factorization of a parking quasi-ribbon into indecomposables:
/// cut at every unbarred internal breakpoint.
pub fn pqs_factorization(q: &SegmentedWord) -> Vec<SegmentedWord> {
    let mut cuts = vec![0usize];
    cuts.extend(
        internal_breakpoints(q)
            .into_iter()
            .filter(|b| !q.bars().contains(b)),
    );
    cuts.push(q.len());
    cuts.windows(2)
        .map(|c| {
            let letters: Vec<Letter> = q.word().letters()[c[0]..c[1]]
                .iter()
                .map(|&x| x - c[0] as Letter)
                .collect();
            let bars: BTreeSet<usize> = q
                .bars()
                .iter()
                .copied()
                .filter(|&g| g > c[0] && g < c[1])
                .map(|g| g - c[0])
                .collect();
            SegmentedWord::new(
                ParkingFunction::new(Word::new(letters)).expect("factor parks"),
                bars,
            )
            .expect("factor bars stay ascents")
        })
        .collect()
}

/// The two branches of the bijection `PQR_(n-1) -> PQS_n`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SchroderBranch {
    /// Prepend a 1: lands on the prime-word indecomposables.
    Prime,
    /// Insert a barred letter after the first unbarred breakpoint (or
    /// append `|n`): lands on the decomposable-word indecomposables.
    Breakpoint,
}

pub fn schroder_forward(q: &SegmentedWord, branch: SchroderBranch) -> SegmentedWord {
    match branch {
        SchroderBranch::Prime => {
            let mut letters = vec![1 as Letter];
            letters.extend_from_slice(q.word().letters());
            let bars: BTreeSet<usize> = q.bars().iter().map(|b| b + 1).collect();
            SegmentedWord::new(
                ParkingFunction::new(Word::new(letters)).expect("prepending 1 parks"),
                bars,
            )
            .expect("shifted bars stay ascents")
        }
        SchroderBranch::Breakpoint => {
            let b = internal_breakpoints(q)
                .into_iter()
                .find(|b| !q.bars().contains(b))
                .unwrap_or(q.len());
            let mut letters = q.word().letters().to_vec();
            letters.insert(b, b as Letter + 1);
            let mut bars: BTreeSet<usize> = q
                .bars()
                .iter()
                .map(|&g| if g > b { g + 1 } else { g })
                .collect();
            bars.insert(b);
            SegmentedWord::new(
                ParkingFunction::new(Word::new(letters)).expect("breakpoint insert parks"),
                bars,
            )
            .expect("inserted bar is an ascent")
        }
    }
}

/// Inverse of the bijection, recovering the branch.
pub fn schroder_backward(q: &SegmentedWord) -> (SegmentedWord, SchroderBranch) {
    assert!(is_pqs(q), "the bijection inverts indecomposables only");
    if q.word().is_prime() {
        let letters: Vec<Letter> = q.word().letters()[1..].to_vec();
        let bars: BTreeSet<usize> = q.bars().iter().map(|b| b - 1).collect();
        let back = SegmentedWord::new(
            ParkingFunction::new(Word::new(letters)).expect("stripping 1 from prime parks"),
            bars,
        )
        .expect("unshifted bars stay ascents");
        (back, SchroderBranch::Prime)
    } else {
        let r = *internal_breakpoints(q).last().expect("non-prime word");
        assert!(q.bars().contains(&r), "indecomposable has the bar");
        let mut letters = q.word().letters().to_vec();
        assert_eq!(letters[r], r as Letter + 1, "breakpoint letter");
        letters.remove(r);
        let bars: BTreeSet<usize> = q
            .bars()
            .iter()
            .copied()
            .filter(|&g| g != r)
            .map(|g| if g > r { g - 1 } else { g })
            .collect();
        let back = SegmentedWord::new(
            ParkingFunction::new(Word::new(letters)).expect("removal parks"),
            bars,
        )
        .expect("remaining bars stay ascents");
        (back, SchroderBranch::Breakpoint)
    }
}
