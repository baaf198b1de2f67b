//! The algebra of segmented compositions, of dimension `3^(n-1)` in weight
//! `n`: compositions whose internal gaps are marked comma or bar.
//!
//! `PSC` embeds into the Schröder algebra through the maximally unpacked
//! quasi-ribbon, `QSC` spans the dual with the segmented augmented shuffle
//! as product, `FSC` is the quasi-ribbon basis computed through shuffles of
//! segmented permutations, and the dual ribbon basis `RSC` realizes the
//! free cubical trialgebra on one generator.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::basis_key;
use crate::coeffs::{rat, Bialgebra, LinComb, Tensor};
use crate::sqsym::SegmentedWord;
use crate::words::{
    descent_composition, shifted_shuffle, Composition, Letter, ParkingFunction, Word, WordsError,
};

/// A composition with each internal gap marked comma (absent) or bar
/// (present). Ordered by weight, then parts, then bar mask.
#[derive(Clone, PartialEq, Eq)]
pub struct SegmentedComposition {
    parts: Vec<u32>,
    bars: BTreeSet<usize>,
}

impl Ord for SegmentedComposition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
            .then_with(|| self.bars.cmp(&other.bars))
    }
}

impl PartialOrd for SegmentedComposition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl SegmentedComposition {
    /// `bars` holds gap positions in `[1 .. parts.len() - 1]`.
    pub fn new(parts: Vec<u32>, bars: BTreeSet<usize>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        assert!(
            bars.iter().all(|&b| b >= 1 && b < parts.len()),
            "bar out of range"
        );
        SegmentedComposition { parts, bars }
    }

    pub fn empty() -> Self {
        SegmentedComposition {
            parts: Vec::new(),
            bars: BTreeSet::new(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn bars(&self) -> &BTreeSet<usize> {
        &self.bars
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn underlying(&self) -> Composition {
        Composition::new(self.parts.clone())
    }

    /// Bar-delimited blocks, each a composition.
    pub fn blocks(&self) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            if i > 0 && self.bars.contains(&i) {
                out.push(Composition::new(std::mem::take(&mut cur)));
            }
            cur.push(p);
        }
        if !cur.is_empty() {
            out.push(Composition::new(cur));
        }
        out
    }

    /// Rebuild from blocks, bars at the block boundaries.
    pub fn from_blocks(blocks: &[Composition]) -> Self {
        let mut parts = Vec::new();
        let mut bars = BTreeSet::new();
        for (i, b) in blocks.iter().enumerate() {
            if i > 0 {
                bars.insert(parts.len());
            }
            parts.extend_from_slice(b.parts());
        }
        SegmentedComposition::new(parts, bars)
    }

    /// Concatenation with a comma (`false`) or a bar (`true`) at the seam.
    pub fn join(&self, other: &SegmentedComposition, bar: bool) -> SegmentedComposition {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let cut = self.parts.len();
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        let mut bars = self.bars.clone();
        bars.extend(other.bars.iter().map(|b| b + cut));
        if bar {
            bars.insert(cut);
        }
        SegmentedComposition::new(parts, bars)
    }

    pub fn render_parts(&self) -> (Vec<Letter>, Vec<usize>) {
        (
            self.parts.clone(),
            self.bars.iter().copied().collect(),
        )
    }
}

impl fmt::Display for SegmentedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        for (i, &p) in self.parts.iter().enumerate() {
            if i > 0 && self.bars.contains(&i) {
                write!(f, "|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SegmentedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SegmentedComposition {
    type Err = WordsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "e" || s.is_empty() {
            return Ok(SegmentedComposition::empty());
        }
        let mut parts = Vec::new();
        let mut bars = BTreeSet::new();
        for ch in s.chars() {
            match ch {
                '|' => {
                    bars.insert(parts.len());
                }
                d => {
                    let x = d
                        .to_digit(10)
                        .filter(|&x| x >= 1)
                        .ok_or_else(|| WordsError::Parse(s.to_string()))?;
                    parts.push(x);
                }
            }
        }
        if bars.iter().any(|&b| b == 0 || b >= parts.len()) {
            return Err(WordsError::Parse(s.to_string()));
        }
        Ok(SegmentedComposition::new(parts, bars))
    }
}

basis_key!(
    /// Image of the maximally unpacked quasi-ribbons inside the Schröder
    /// algebra.
    PscKey,
    SegmentedComposition,
    "PSC",
    |c| c.weight() as usize,
    |c| c.render_parts()
);

basis_key!(
    /// Dual monomial-like basis.
    QscKey,
    SegmentedComposition,
    "QSC",
    |c| c.weight() as usize,
    |c| c.render_parts()
);

basis_key!(
    /// Segmented quasi-ribbon basis.
    FscKey,
    SegmentedComposition,
    "FSC",
    |c| c.weight() as usize,
    |c| c.render_parts()
);

basis_key!(
    /// Cubical ribbon basis, dual to `FSC`.
    RscKey,
    SegmentedComposition,
    "RSC",
    |c| c.weight() as usize,
    |c| c.render_parts()
);

/// All segmented compositions of weight `n`, canonical order.
pub fn segmented_compositions(n: usize) -> Vec<SegmentedComposition> {
    let mut out = Vec::new();
    for c in crate::words::compositions(n) {
        let gaps = c.length().saturating_sub(1);
        for mask in 0u32..(1 << gaps) {
            let bars: BTreeSet<usize> = (1..=gaps).filter(|g| mask & (1 << (g - 1)) != 0).collect();
            out.push(SegmentedComposition::new(c.parts().to_vec(), bars));
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// the bijection with packed quasi-ribbons
// ---------------------------------------------------------------------------

/// Segmented composition of a quasi-ribbon: the packed evaluation parts,
/// with a bar between consecutive value groups when the word gap between
/// them is barred. On packed words this is the bijection with segmented
/// compositions; unpacked words contribute through their packing.
pub fn psev(q: &SegmentedWord) -> SegmentedComposition {
    let groups: Vec<(Letter, usize)> = {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &x in q.word().letters() {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    };
    let mut parts = Vec::new();
    let mut bars = BTreeSet::new();
    let mut at = 0usize;
    for (i, &(_, m)) in groups.iter().enumerate() {
        at += m;
        parts.push(m as u32);
        if i + 1 < groups.len() && q.bars().contains(&at) {
            bars.insert(i + 1);
        }
    }
    SegmentedComposition::new(parts, bars)
}

/// The maximally unpacked parking quasi-ribbon with the given segmented
/// evaluation: the k-th distinct letter is `1 +` the earlier multiplicity
/// sum, bars where prescribed.
pub fn detassmax(c: &SegmentedComposition) -> SegmentedWord {
    let mut letters = Vec::new();
    let mut bars = BTreeSet::new();
    let mut cum = 0u32;
    for (i, &p) in c.parts().iter().enumerate() {
        let value = cum + 1;
        if i > 0 && c.bars().contains(&i) {
            bars.insert(cum as usize);
        }
        letters.extend(std::iter::repeat_n(value as Letter, p as usize));
        cum += p;
    }
    SegmentedWord::new(
        ParkingFunction::new(Word::new(letters)).expect("staircase word parks"),
        bars,
    )
    .expect("distinct values make every gap an ascent")
}

// ---------------------------------------------------------------------------
// segmented augmented shuffle and the PSC/QSC pair
// ---------------------------------------------------------------------------

#[derive(Copy, Clone)]
struct ShuffleBlock {
    value: u32,
    left: Option<usize>,
    right: Option<usize>,
}

/// Augmented shuffle of two segmented compositions, as a multiset: the
/// quasi-shuffle of the underlying compositions, bars re-inserted when both
/// neighbours inherit a barred gap from the same side, or when a right
/// element precedes a left one.
pub fn segmented_augshuffle(
    a: &SegmentedComposition,
    b: &SegmentedComposition,
) -> Vec<SegmentedComposition> {
    fn rec(a: &[u32], ai: usize, b: &[u32], bi: usize) -> Vec<Vec<ShuffleBlock>> {
        if a.is_empty() && b.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        if !a.is_empty() {
            for mut tail in rec(&a[1..], ai + 1, b, bi) {
                tail.insert(
                    0,
                    ShuffleBlock {
                        value: a[0],
                        left: Some(ai),
                        right: None,
                    },
                );
                out.push(tail);
            }
        }
        if !b.is_empty() {
            for mut tail in rec(a, ai, &b[1..], bi + 1) {
                tail.insert(
                    0,
                    ShuffleBlock {
                        value: b[0],
                        left: None,
                        right: Some(bi),
                    },
                );
                out.push(tail);
            }
        }
        if !a.is_empty() && !b.is_empty() {
            for mut tail in rec(&a[1..], ai + 1, &b[1..], bi + 1) {
                tail.insert(
                    0,
                    ShuffleBlock {
                        value: a[0] + b[0],
                        left: Some(ai),
                        right: Some(bi),
                    },
                );
                out.push(tail);
            }
        }
        out
    }
    let mut results = Vec::new();
    for blocks in rec(a.parts(), 0, b.parts(), 0) {
        let parts: Vec<u32> = blocks.iter().map(|bl| bl.value).collect();
        let mut bars = BTreeSet::new();
        for (i, pair) in blocks.windows(2).enumerate() {
            let (x, y) = (pair[0], pair[1]);
            let mut barred = false;
            if let (Some(i1), Some(i2)) = (x.left, y.left) {
                debug_assert_eq!(i2, i1 + 1);
                barred |= a.bars().contains(&i2);
            }
            if let (Some(j1), Some(j2)) = (x.right, y.right) {
                debug_assert_eq!(j2, j1 + 1);
                barred |= b.bars().contains(&j2);
            }
            if x.right.is_some() && y.left.is_some() {
                barred = true;
            }
            if barred {
                bars.insert(i + 1);
            }
        }
        results.push(SegmentedComposition::new(parts, bars));
    }
    results.sort();
    results
}

/// `PSC_I' PSC_I'' = PSC_(I'|I'') + PSC_(I' I'')`.
pub fn psc_product(a: &SegmentedComposition, b: &SegmentedComposition) -> LinComb<PscKey> {
    if a.is_empty() || b.is_empty() {
        return LinComb::unit(PscKey(a.join(b, false)));
    }
    let mut out = LinComb::unit(PscKey(a.join(b, true)));
    out.add_term(PscKey(a.join(b, false)), rat(1));
    out
}

/// `ΔPSC_I`: the coefficient of `PSC_I' ⊗ PSC_I''` is the multiplicity of
/// `I` in the segmented augmented shuffle `I' # I''`.
pub fn psc_coproduct(c: &SegmentedComposition) -> Tensor<PscKey> {
    let n = c.weight() as usize;
    let mut out = Tensor::zero();
    if c.is_empty() {
        out.add_term(PscKey(c.clone()), PscKey(c.clone()), rat(1));
        return out;
    }
    for left_weight in 0..=n {
        for l in segmented_compositions(left_weight) {
            for r in segmented_compositions(n - left_weight) {
                let mult = segmented_augshuffle(&l, &r)
                    .into_iter()
                    .filter(|x| x == c)
                    .count();
                out.add_term(PscKey(l.clone()), PscKey(r), rat(mult as i64));
            }
        }
    }
    out
}

/// `QSC_I' QSC_I'' = Σ QSC_I` over the segmented augmented shuffle.
pub fn qsc_product(a: &SegmentedComposition, b: &SegmentedComposition) -> LinComb<QscKey> {
    LinComb::from_keys(segmented_augshuffle(a, b).into_iter().map(QscKey))
}

/// `ΔQSC_I`: deconcatenations at every gap, comma or bar.
pub fn qsc_coproduct(c: &SegmentedComposition) -> Tensor<QscKey> {
    let mut out = Tensor::zero();
    for cut in 0..=c.len() {
        let left = SegmentedComposition::new(
            c.parts()[..cut].to_vec(),
            c.bars().iter().copied().filter(|&g| g < cut).collect(),
        );
        let right = SegmentedComposition::new(
            c.parts()[cut..].to_vec(),
            c.bars()
                .iter()
                .copied()
                .filter(|&g| g > cut)
                .map(|g| g - cut)
                .collect(),
        );
        out.add_term(QscKey(left), QscKey(right), rat(1));
    }
    out
}

pub struct ScqsymPsc;

impl Bialgebra for ScqsymPsc {
    type Key = PscKey;

    fn name(&self) -> &'static str {
        "SCQSym(PSC)"
    }

    fn unit_key(&self) -> PscKey {
        PscKey(SegmentedComposition::empty())
    }

    fn basis(&self, degree: usize) -> Vec<PscKey> {
        segmented_compositions(degree).into_iter().map(PscKey).collect()
    }

    fn product_keys(&self, a: &PscKey, b: &PscKey) -> LinComb<PscKey> {
        psc_product(&a.0, &b.0)
    }

    fn coproduct_key(&self, k: &PscKey) -> Tensor<PscKey> {
        psc_coproduct(&k.0)
    }
}

pub struct ScqsymQsc;

impl Bialgebra for ScqsymQsc {
    type Key = QscKey;

    fn name(&self) -> &'static str {
        "SCQSym*(QSC)"
    }

    fn unit_key(&self) -> QscKey {
        QscKey(SegmentedComposition::empty())
    }

    fn basis(&self, degree: usize) -> Vec<QscKey> {
        segmented_compositions(degree).into_iter().map(QscKey).collect()
    }

    fn product_keys(&self, a: &QscKey, b: &QscKey) -> LinComb<QscKey> {
        qsc_product(&a.0, &b.0)
    }

    fn coproduct_key(&self, k: &QscKey) -> Tensor<QscKey> {
        qsc_coproduct(&k.0)
    }
}

// ---------------------------------------------------------------------------
// segmented permutations and the FSC basis
// ---------------------------------------------------------------------------

/// A word with distinct letters and bars at some gaps; only the relative
/// order matters for its descent composition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SegmentedPermutation {
    word: Word,
    bars: BTreeSet<usize>,
}

impl SegmentedPermutation {
    pub fn new(word: Word, bars: BTreeSet<usize>) -> Self {
        let mut sorted: Vec<Letter> = word.letters().to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert!(sorted.len() == word.len(), "letters must be distinct");
        assert!(
            bars.iter().all(|&b| b >= 1 && b < word.len()),
            "bar out of range"
        );
        SegmentedPermutation { word, bars }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn bars(&self) -> &BTreeSet<usize> {
        &self.bars
    }

    /// Descent composition: the per-block descent compositions joined with
    /// bars.
    pub fn descent_composition(&self) -> SegmentedComposition {
        let mut blocks = Vec::new();
        let mut start = 0usize;
        let n = self.word.len();
        for gap in 1..=n {
            if gap == n || self.bars.contains(&gap) {
                let block = Word::new(self.word.letters()[start..gap].to_vec());
                blocks.push(descent_composition(&block));
                start = gap;
            }
        }
        SegmentedComposition::from_blocks(&blocks)
    }
}

impl fmt::Display for SegmentedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &x) in self.word.letters().iter().enumerate() {
            if i > 0 && self.bars.contains(&i) {
                write!(f, "|")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SegmentedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SegmentedPermutation {
    type Err = WordsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
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
        Ok(SegmentedPermutation::new(Word::new(letters), bars))
    }
}

/// Canonical representative: the ribbon word of the underlying composition
/// (descents at every part gap), barred at the prescribed gaps.
pub fn repr_segperm(c: &SegmentedComposition) -> SegmentedPermutation {
    let word = crate::pqsym::ribbon_word(&c.underlying());
    let mut bars = BTreeSet::new();
    let mut cum = 0u32;
    for (i, &p) in c.parts().iter().enumerate() {
        if i > 0 && c.bars().contains(&i) {
            bars.insert(cum as usize);
        }
        cum += p;
    }
    SegmentedPermutation::new(word, bars)
}

/// Shifted shuffle of segmented permutations: interleavings of the words,
/// with bars after the descents that were barred at the source and after
/// every descent created by mixing the sources.
pub fn segperm_shuffle(
    alpha: &SegmentedPermutation,
    beta: &SegmentedPermutation,
) -> Vec<SegmentedPermutation> {
    let n1 = alpha.word().len();
    assert!(
        alpha.word().max_letter() as usize == n1
            && beta.word().max_letter() as usize == beta.word().len(),
        "the shifted shuffle needs genuine permutations"
    );
    let shift = n1 as Letter;
    let mut out = Vec::new();
    for w in shifted_shuffle(alpha.word(), beta.word()) {
        let mut bars = BTreeSet::new();
        for gap in 1..w.len() {
            let (x, y) = (w.letters()[gap - 1], w.letters()[gap]);
            if x <= y {
                continue;
            }
            let from_alpha = |v: Letter| v <= shift;
            let barred = if from_alpha(x) != from_alpha(y) {
                true
            } else if from_alpha(x) {
                // adjacent in alpha: find the position of x there
                let pos = alpha
                    .word()
                    .letters()
                    .iter()
                    .position(|&v| v == x)
                    .unwrap();
                alpha.bars().contains(&(pos + 1))
            } else {
                let pos = beta
                    .word()
                    .letters()
                    .iter()
                    .position(|&v| v == x - shift)
                    .unwrap();
                beta.bars().contains(&(pos + 1))
            };
            if barred {
                bars.insert(gap);
            }
        }
        out.push(SegmentedPermutation::new(w, bars));
    }
    out.sort();
    out
}

/// `FSC_I = Σ QSC_I'` over per-block refinements.
pub fn fsc_in_qsc(c: &SegmentedComposition) -> LinComb<QscKey> {
    let mut out = vec![Vec::new()];
    for block in c.blocks() {
        let refined = block.refinements();
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Composition>| {
                refined.iter().map(move |r| {
                    let mut next = prefix.clone();
                    next.push(r.clone());
                    next
                })
            })
            .collect();
    }
    LinComb::from_keys(
        out.into_iter()
            .map(|blocks| FscToQsc(SegmentedComposition::from_blocks(&blocks)).0)
            .map(QscKey),
    )
}

struct FscToQsc(SegmentedComposition);

/// `FSC_I' FSC_I'' = Σ FSC_(C(γ))` over the shifted shuffle of any two
/// representatives.
pub fn fsc_product(a: &SegmentedComposition, b: &SegmentedComposition) -> LinComb<FscKey> {
    if a.is_empty() {
        return LinComb::unit(FscKey(b.clone()));
    }
    if b.is_empty() {
        return LinComb::unit(FscKey(a.clone()));
    }
    fsc_product_from(&repr_segperm(a), &repr_segperm(b))
}

pub fn fsc_product_from(
    alpha: &SegmentedPermutation,
    beta: &SegmentedPermutation,
) -> LinComb<FscKey> {
    LinComb::from_keys(
        segperm_shuffle(alpha, beta)
            .into_iter()
            .map(|g| FscKey(g.descent_composition())),
    )
}

/// `ΔFSC_I`: cuts at commas, at bars, and inside single parts.
pub fn fsc_coproduct(c: &SegmentedComposition) -> Tensor<FscKey> {
    let mut out = Tensor::zero();
    // gap cuts (including the trivial ones)
    for cut in 0..=c.len() {
        let left = SegmentedComposition::new(
            c.parts()[..cut].to_vec(),
            c.bars().iter().copied().filter(|&g| g < cut).collect(),
        );
        let right = SegmentedComposition::new(
            c.parts()[cut..].to_vec(),
            c.bars()
                .iter()
                .copied()
                .filter(|&g| g > cut)
                .map(|g| g - cut)
                .collect(),
        );
        out.add_term(FscKey(left), FscKey(right), rat(1));
    }
    // cuts inside a part: part p splits as x + y with x, y >= 1
    for (k, &p) in c.parts().iter().enumerate() {
        for x in 1..p {
            let mut left_parts = c.parts()[..k].to_vec();
            left_parts.push(x);
            let left = SegmentedComposition::new(
                left_parts,
                c.bars().iter().copied().filter(|&g| g <= k).collect(),
            );
            let mut right_parts = vec![p - x];
            right_parts.extend_from_slice(&c.parts()[k + 1..]);
            let right = SegmentedComposition::new(
                right_parts,
                c.bars()
                    .iter()
                    .copied()
                    .filter(|&g| g > k)
                    .map(|g| g - k)
                    .collect(),
            );
            out.add_term(FscKey(left), FscKey(right), rat(1));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// the cubical ribbon basis
// ---------------------------------------------------------------------------

/// Per-block coarsenings of `I` with merge counts.
fn blockwise_coarsenings(c: &SegmentedComposition) -> Vec<(SegmentedComposition, usize)> {
    let mut results: Vec<(Vec<Composition>, usize)> = vec![(Vec::new(), 0)];
    for block in c.blocks() {
        let options = block.coarsenings();
        results = results
            .into_iter()
            .flat_map(|(prefix, merges)| {
                options.iter().map(move |(comp, m)| {
                    let mut next = prefix.clone();
                    next.push(comp.clone());
                    (next, merges + m)
                })
            })
            .collect();
    }
    results
        .into_iter()
        .map(|(blocks, merges)| (SegmentedComposition::from_blocks(&blocks), merges))
        .collect()
}

/// `PSC_I = Σ RSC_I'` over the per-block coarsenings of `I`.
pub fn psc_in_rsc(c: &SegmentedComposition) -> LinComb<RscKey> {
    LinComb::from_keys(blockwise_coarsenings(c).into_iter().map(|(x, _)| RscKey(x)))
}

/// `RSC_I = Σ (-1)^merges PSC_I'` by Möbius inversion.
pub fn rsc_expand(c: &SegmentedComposition) -> LinComb<PscKey> {
    let mut out = LinComb::zero();
    for (x, merges) in blockwise_coarsenings(c) {
        let sign = if merges % 2 == 0 { 1 } else { -1 };
        out.add_term(PscKey(x), rat(sign));
    }
    out
}

/// `RSC_I' RSC_I'' = RSC_(I',I'') + RSC_(I'|I'') + RSC_(I'▷I'')`: the three
/// operations of the free cubical trialgebra on one generator.
pub fn rsc_product(a: &SegmentedComposition, b: &SegmentedComposition) -> LinComb<RscKey> {
    if a.is_empty() {
        return LinComb::unit(RscKey(b.clone()));
    }
    if b.is_empty() {
        return LinComb::unit(RscKey(a.clone()));
    }
    let comma = a.join(b, false);
    let bar = a.join(b, true);
    // fuse the boundary parts
    let mut parts = a.parts().to_vec();
    let fused = parts.pop().unwrap() + b.parts()[0];
    parts.push(fused);
    parts.extend_from_slice(&b.parts()[1..]);
    let cut = a.len();
    let mut bars = a.bars().clone();
    bars.extend(b.bars().iter().map(|g| g + cut - 1));
    let lowered = SegmentedComposition::new(parts, bars);
    let mut out = LinComb::unit(RscKey(comma));
    out.add_term(RscKey(bar), rat(1));
    out.add_term(RscKey(lowered), rat(1));
    out
}

/// Number of generators in weight `n`: the all-barred segmented
/// compositions, in bijection with plain compositions.
pub fn scqsym_generators(n: usize) -> Vec<SegmentedComposition> {
    crate::words::compositions(n)
        .into_iter()
        .map(|c| {
            let bars: BTreeSet<usize> = (1..c.length()).collect();
            SegmentedComposition::new(c.parts().to_vec(), bars)
        })
        .collect()
}
