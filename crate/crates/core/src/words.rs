//! Words over the positive integers and parking-function combinatorics.
//!
//! Everything downstream indexes its bases by objects built here: parking
//! functions, compositions, noncrossing partitions, and the enumerations
//! connecting them. All values are immutable and all operations are pure.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Letters are positive integers. `u32` leaves ample room for the shifted
/// alphabets and biword encodings used by the internal products.
pub type Letter = u32;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordsError {
    #[error("word {0} is not a parking function")]
    NotParking(Word),
    #[error("word {0} is not nondecreasing")]
    NotSorted(Word),
    #[error("blocks do not form a noncrossing partition of [1..{0}]")]
    BadPartition(usize),
    #[error("size {n} exceeds enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("cannot parse word from {0:?}")]
    Parse(String),
}

/// A finite word over `{1, 2, ...}`. The empty word is the degree-0 index.
///
/// Words are ordered by length first, then lexicographically; every
/// enumeration and rendered output in the crate follows this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        assert!(letters.iter().all(|&x| x >= 1), "letters must be positive");
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Greatest letter, 0 for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn last_letter(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Nondecreasing rearrangement.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }

    /// Mirror image (letters read right to left).
    pub fn mirror(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// `w[k]`: add `k` to every letter.
    pub fn shift(&self, k: Letter) -> Word {
        Word(self.0.iter().map(|&x| x + k).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Occurrence counts of `1..=max_letter`.
    pub fn evaluation(&self) -> Vec<usize> {
        let m = self.max_letter() as usize;
        let mut ev = vec![0usize; m];
        for &x in &self.0 {
            ev[x as usize - 1] += 1;
        }
        ev
    }

    /// Evaluation with the zero entries removed.
    pub fn pack_evaluation(&self) -> Composition {
        Composition::new(
            self.evaluation()
                .into_iter()
                .filter(|&c| c > 0)
                .map(|c| c as u32)
                .collect(),
        )
    }

    /// Gap positions `i` (1-based, between positions i and i+1) with a descent.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// Number of letters `<= b`.
    pub fn count_le(&self, b: Letter) -> usize {
        self.0.iter().filter(|&&x| x <= b).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        if self.0.iter().all(|&x| x <= 9) {
            for &x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse accepts both the compact digit form `"164821657"` and the comma
/// form `"16,4,8"`.
impl FromStr for Word {
    type Err = WordsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || WordsError::Parse(s.to_string());
        if s == "e" || s.is_empty() {
            return Ok(Word::empty());
        }
        let letters: Vec<Letter> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<Letter>().map_err(|_| err()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).filter(|&d| d >= 1).ok_or_else(err))
                .collect::<Result<_, _>>()?
        };
        if letters.contains(&0) {
            return Err(err());
        }
        Ok(Word(letters))
    }
}

/// A word whose nondecreasing rearrangement `a'` satisfies `a'_i <= i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction(Word);

impl ParkingFunction {
    pub fn new(word: Word) -> Result<Self, WordsError> {
        if is_parking(&word) {
            Ok(ParkingFunction(word))
        } else {
            Err(WordsError::NotParking(word))
        }
    }

    pub fn empty() -> Self {
        ParkingFunction(Word::empty())
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// All `b` in `[0..n]` with exactly `b` letters `<= b`; always contains
    /// `0` and `n`.
    pub fn breakpoints(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&b| self.0.count_le(b as Letter) == b)
            .collect()
    }

    /// Prime: only the trivial breakpoints `0` and `n`.
    pub fn is_prime(&self) -> bool {
        !self.is_empty() && self.breakpoints().len() == 2
    }

    /// No nontrivial splitting as a shifted concatenation.
    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.cut_positions().is_empty()
    }

    /// Internal positions `k` where the first `k` letters are exactly the
    /// letters `<= k`, i.e. where the word splits as a shifted concatenation.
    fn cut_positions(&self) -> Vec<usize> {
        let n = self.len();
        let mut cuts = Vec::new();
        let mut prefix_max = 0;
        for k in 1..n {
            prefix_max = prefix_max.max(self.0 .0[k - 1]);
            if prefix_max <= k as Letter && self.0.count_le(k as Letter) == k {
                cuts.push(k);
            }
        }
        cuts
    }

    /// The unique maximal factorization into connected parking functions.
    pub fn connected_factorization(&self) -> Vec<ParkingFunction> {
        let mut cuts = vec![0];
        cuts.extend(self.cut_positions());
        cuts.push(self.len());
        cuts.windows(2)
            .filter(|c| c[1] > c[0])
            .map(|c| {
                let piece: Vec<Letter> =
                    self.0 .0[c[0]..c[1]].iter().map(|&x| x - c[0] as Letter).collect();
                ParkingFunction::new(Word::new(piece)).expect("factor is parking")
            })
            .collect()
    }

    /// Lengths of the maximal factorization of the sorted word into
    /// nondecreasing prime parking functions.
    pub fn type_composition(&self) -> Composition {
        let bps = self.breakpoints();
        Composition::new(
            bps.windows(2)
                .map(|p| (p[1] - p[0]) as u32)
                .filter(|&d| d > 0)
                .collect(),
        )
    }
}

impl std::ops::Deref for ParkingFunction {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for ParkingFunction {
    type Err = WordsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ParkingFunction::new(s.parse()?)
    }
}

pub fn is_parking(w: &Word) -> bool {
    let sorted = w.sorted();
    sorted
        .letters()
        .iter()
        .enumerate()
        .all(|(i, &x)| x <= i as Letter + 1)
}

/// The permutation labelling occurrences of the smallest letter 1,2,...
/// left to right, then the next letter, and so on.
pub fn standardize(w: &Word) -> Word {
    let n = w.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (w.letters()[i], i));
    let mut out = vec![0 as Letter; n];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as Letter + 1;
    }
    Word(out)
}

/// Inverse of a permutation given as a word.
pub fn invert_permutation(p: &Word) -> Word {
    let n = p.len();
    let mut out = vec![0 as Letter; n];
    for (i, &x) in p.letters().iter().enumerate() {
        out[x as usize - 1] = i as Letter + 1;
    }
    Word(out)
}

/// `d(w) = min { i | #{ j : w_j <= i } < i }`, or `n + 1` when `w` parks.
pub fn defect(w: &Word) -> usize {
    for i in 1..=w.len() {
        if w.count_le(i as Letter) < i {
            return i;
        }
    }
    w.len() + 1
}

/// Parkization: repeatedly decrement every letter above the defect until a
/// parking function results. Coincides with `standardize` on duplicate-free
/// words. Computed in closed form over the value classes; the iterative
/// algorithm is kept as a test oracle.
pub fn parkize(w: &Word) -> ParkingFunction {
    if w.is_empty() {
        return ParkingFunction::empty();
    }
    let mut vals: Vec<Letter> = w.letters().to_vec();
    vals.sort_unstable();
    vals.dedup();
    // target of the k-th distinct value: keep the gap to the previous value
    // unless the parking condition forces it down to count_below + 1
    let mut map = Vec::with_capacity(vals.len());
    let (mut prev_val, mut prev_t, mut count_below) = (0 as Letter, 0 as Letter, 0usize);
    for &v in &vals {
        let t = (prev_t + (v - prev_val)).min(count_below as Letter + 1);
        map.push((v, t));
        count_below += w.letters().iter().filter(|&&x| x == v).count();
        prev_val = v;
        prev_t = t;
    }
    let out: Vec<Letter> = w
        .letters()
        .iter()
        .map(|x| map[vals.binary_search(x).unwrap()].1)
        .collect();
    ParkingFunction::new(Word(out)).expect("parkization parks")
}

/// All words over `[1..k]` of length `|a|` whose parkization is `a`,
/// in lexicographic order.
pub fn parkize_preimages(a: &ParkingFunction, k: Letter) -> Vec<Word> {
    let alphabet: Vec<Letter> = (1..=k).collect();
    parkize_preimages_over(a, &alphabet)
}

/// Parkization preimages with letters drawn from an arbitrary sorted
/// alphabet. Parkization preserves the order-and-equality pattern, so every
/// preimage is a strictly increasing value-relabelling of `a`.
pub fn parkize_preimages_over(a: &ParkingFunction, alphabet: &[Letter]) -> Vec<Word> {
    let mut vals: Vec<Letter> = a.letters().to_vec();
    vals.sort_unstable();
    vals.dedup();
    let m = vals.len();
    let mut out = Vec::new();
    let mut choice: Vec<usize> = Vec::with_capacity(m);
    fn rec(
        a: &ParkingFunction,
        vals: &[Letter],
        alphabet: &[Letter],
        choice: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        let m = vals.len();
        if choice.len() == m {
            let w = Word(
                a.letters()
                    .iter()
                    .map(|x| alphabet[choice[vals.binary_search(x).unwrap()]])
                    .collect(),
            );
            if parkize(&w) == *a {
                out.push(w);
            }
            return;
        }
        let lo = choice.last().map_or(0, |&i| i + 1);
        let slack = m - choice.len() - 1;
        let hi = alphabet.len().saturating_sub(slack);
        for i in lo..hi {
            choice.push(i);
            rec(a, vals, alphabet, choice, out);
            choice.pop();
        }
    }
    if m <= alphabet.len() {
        rec(a, &vals, alphabet, &mut choice, &mut out);
    }
    out.sort();
    out
}

/// Shifted concatenation `u . v[|u|]`.
pub fn shifted_concat(u: &Word, v: &Word) -> Word {
    u.concat(&v.shift(u.len() as Letter))
}

/// Plain shuffle as a multiset, length-lex sorted.
pub fn shuffle(u: &Word, v: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    let mut positions: Vec<usize> = Vec::with_capacity(u.len());
    fn rec(
        u: &[Letter],
        v: &[Letter],
        next: usize,
        positions: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        let (n, m) = (u.len(), v.len());
        if positions.len() == n {
            let mut w = Vec::with_capacity(n + m);
            let (mut iu, mut iv) = (0, 0);
            for i in 0..n + m {
                if iu < n && positions[iu] == i {
                    w.push(u[iu]);
                    iu += 1;
                } else {
                    w.push(v[iv]);
                    iv += 1;
                }
            }
            out.push(Word(w));
            return;
        }
        let remaining = n - positions.len();
        for p in next..=(n + m - remaining) {
            positions.push(p);
            rec(u, v, p + 1, positions, out);
            positions.pop();
        }
    }
    rec(u.letters(), v.letters(), 0, &mut positions, &mut out);
    out.sort();
    out
}

/// Shifted shuffle `u` with `v[|u|]`; parking functions are closed under it.
pub fn shifted_shuffle(u: &Word, v: &Word) -> Vec<Word> {
    shuffle(u, &v.shift(u.len() as Letter))
}

/// Shared enumeration of `PF_n` for hot callers; small sizes are memoized
/// behind a lock, larger ones are recomputed on demand.
pub fn parking_functions_shared(n: usize) -> std::sync::Arc<Vec<ParkingFunction>> {
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<Vec<Option<Arc<Vec<ParkingFunction>>>>>> = OnceLock::new();
    if n > 7 {
        return Arc::new(parking_functions(n));
    }
    let cache = CACHE.get_or_init(|| Mutex::new(vec![None; 8]));
    let mut guard = cache.lock().expect("parking cache poisoned");
    guard[n]
        .get_or_insert_with(|| Arc::new(parking_functions(n)))
        .clone()
}

/// Convolution of two parking functions: all parking `a = u . v` with
/// `|u| = |a'|`, `parkize(u) = a'` and `parkize(v) = a''`. Length-lex order.
pub fn convolution(a1: &ParkingFunction, a2: &ParkingFunction) -> Vec<ParkingFunction> {
    if a1.is_empty() {
        return vec![a2.clone()];
    }
    if a2.is_empty() {
        return vec![a1.clone()];
    }
    let (n1, n) = (a1.len(), a1.len() + a2.len());
    parking_functions_shared(n)
        .iter()
        .filter(|a| {
            let u = Word(a.letters()[..n1].to_vec());
            let v = Word(a.letters()[n1..].to_vec());
            parkize(&u) == *a1 && parkize(&v) == *a2
        })
        .cloned()
        .collect()
}

/// Composition of `w` cut at the descents of `w`.
pub fn descent_composition(w: &Word) -> Composition {
    assert!(!w.is_empty(), "descent composition of the empty word");
    Composition::from_descent_set(w.len() as u32, &w.descents())
}

// ---------------------------------------------------------------------------
// compositions
// ---------------------------------------------------------------------------

/// A composition: a finite sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Proper partial sums, i.e. the descent set inside `[1..weight-1]`.
    pub fn descent_set(&self) -> Vec<u32> {
        let mut acc = 0;
        self.0[..self.0.len().saturating_sub(1)]
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    pub fn from_descent_set(weight: u32, descents: &[usize]) -> Self {
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0u32;
        for &d in descents {
            parts.push(d as u32 - prev);
            prev = d as u32;
        }
        if weight > prev {
            parts.push(weight - prev);
        }
        Composition(parts)
    }

    /// `self` finer than `other`: descent set of `other` contained in ours.
    pub fn is_finer_than(&self, other: &Composition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let mine: std::collections::BTreeSet<u32> = self.descent_set().into_iter().collect();
        other.descent_set().iter().all(|d| mine.contains(d))
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// All compositions finer than `self` (including it).
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Composition::empty()];
        for &p in &self.0 {
            let fine = compositions(p as usize);
            out = out
                .into_iter()
                .flat_map(|head| fine.iter().map(move |f| head.concat(f)))
                .collect();
        }
        out
    }

    /// All compositions coarser than `self` (including it), with the number
    /// of merged gaps recorded.
    pub fn coarsenings(&self) -> Vec<(Composition, usize)> {
        let gaps = self.0.len().saturating_sub(1);
        let mut out = Vec::new();
        for mask in 0u32..(1 << gaps) {
            let mut parts = vec![self.0[0]];
            for (i, &p) in self.0[1..].iter().enumerate() {
                if mask & (1 << i) != 0 {
                    *parts.last_mut().unwrap() += p;
                } else {
                    parts.push(p);
                }
            }
            out.push((Composition(parts), mask.count_ones() as usize));
        }
        out
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Quasi-shuffle (augmented shuffle) of two compositions, as a multiset:
/// `(I1,I') # (J1,J') = I1.(I'#(J1,J')) + J1.((I1,I')#J') + (I1+J1).(I'#J')`.
pub fn quasi_shuffle(a: &Composition, b: &Composition) -> Vec<Composition> {
    fn rec(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
        if a.is_empty() {
            return vec![b.to_vec()];
        }
        if b.is_empty() {
            return vec![a.to_vec()];
        }
        let mut out = Vec::new();
        for mut tail in rec(&a[1..], b) {
            tail.insert(0, a[0]);
            out.push(tail);
        }
        for mut tail in rec(a, &b[1..]) {
            tail.insert(0, b[0]);
            out.push(tail);
        }
        for mut tail in rec(&a[1..], &b[1..]) {
            tail.insert(0, a[0] + b[0]);
            out.push(tail);
        }
        out
    }
    let mut out: Vec<Composition> = rec(a.parts(), b.parts())
        .into_iter()
        .map(Composition::new)
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// noncrossing partitions
// ---------------------------------------------------------------------------

/// A noncrossing set partition of `[1..n]`, blocks sorted by minimum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NoncrossingPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, WordsError> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b.first().copied().unwrap_or(0));
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(WordsError::BadPartition(n));
            }
            for &x in b {
                if x < 1 || x > n || seen[x] {
                    return Err(WordsError::BadPartition(n));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(WordsError::BadPartition(n));
        }
        // crossing test: the merged label sequence of any block pair must not
        // alternate A..B..A..B
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let mut events: Vec<(usize, bool)> = blocks[i]
                    .iter()
                    .map(|&x| (x, true))
                    .chain(blocks[j].iter().map(|&x| (x, false)))
                    .collect();
                events.sort_unstable();
                let mut switches = 0;
                for w in events.windows(2) {
                    if w[0].1 != w[1].1 {
                        switches += 1;
                    }
                }
                if switches >= 3 {
                    return Err(WordsError::BadPartition(n));
                }
            }
        }
        Ok(NoncrossingPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Block-minimum bijection: replace the letters of each block by its minimum
/// and sort.
pub fn noncrossing_to_ndpf(p: &NoncrossingPartition) -> ParkingFunction {
    let mut letters = Vec::with_capacity(p.n);
    for b in &p.blocks {
        let m = b[0] as Letter;
        letters.extend(std::iter::repeat_n(m, b.len()));
    }
    letters.sort_unstable();
    ParkingFunction::new(Word(letters)).expect("block minima park")
}

/// Inverse of [`noncrossing_to_ndpf`]: the distinct letters of the sorted
/// parking function are the block minima; elements attach to the innermost
/// open block.
pub fn ndpf_to_noncrossing(pi: &ParkingFunction) -> Result<NoncrossingPartition, WordsError> {
    if !pi.is_nondecreasing() {
        return Err(WordsError::NotSorted(pi.word().clone()));
    }
    let n = pi.len();
    let ev = pi.evaluation();
    let mut stack: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for i in 1..=n {
        let is_min = i <= ev.len() && ev[i - 1] > 0;
        if is_min {
            stack.push((vec![i], ev[i - 1] - 1));
        } else {
            let top = stack.last_mut().ok_or(WordsError::BadPartition(n))?;
            top.0.push(i);
            top.1 -= 1;
        }
        while stack.last().is_some_and(|t| t.1 == 0) {
            blocks.push(stack.pop().unwrap().0);
        }
    }
    if !stack.is_empty() {
        return Err(WordsError::BadPartition(n));
    }
    NoncrossingPartition::new(n, blocks)
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// Default guard against accidental `(n+1)^(n-1)` blowups.
pub const DEFAULT_ENUM_CAP: usize = 8;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Family {
    ParkingFunctions,
    PrimeParkingFunctions,
    NondecreasingParkingFunctions,
    NondecreasingPrimeParkingFunctions,
    Permutations,
}

/// Cap-checked enumeration front door (the CLI goes through here).
pub fn enumerate(family: Family, n: usize, cap: usize) -> Result<Vec<Word>, WordsError> {
    if n > cap {
        return Err(WordsError::CapExceeded { n, cap });
    }
    let words = match family {
        Family::ParkingFunctions => pf_words(n, false),
        Family::NondecreasingParkingFunctions => pf_words(n, true),
        Family::PrimeParkingFunctions => parking_functions(n)
            .into_iter()
            .filter(|a| a.is_prime())
            .map(ParkingFunction::into_word)
            .collect(),
        Family::NondecreasingPrimeParkingFunctions => nondecreasing_parking_functions(n)
            .into_iter()
            .filter(|a| a.is_prime())
            .map(ParkingFunction::into_word)
            .collect(),
        Family::Permutations => permutations(n),
    };
    Ok(words)
}

fn pf_words(n: usize, nondecreasing: bool) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur: Vec<Letter> = Vec::with_capacity(n);
    let mut counts = vec![0usize; n + 1]; // counts[b] = letters <= b so far
    fn viable(counts: &[usize], placed: usize, n: usize) -> bool {
        (1..=n).all(|b| counts[b] + (n - placed) >= b)
    }
    fn rec(
        n: usize,
        nondecr: bool,
        cur: &mut Vec<Letter>,
        counts: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        if cur.len() == n {
            out.push(Word(cur.clone()));
            return;
        }
        let lo = if nondecr {
            cur.last().copied().unwrap_or(1)
        } else {
            1
        };
        for x in lo..=n as Letter {
            for b in x as usize..=n {
                counts[b] += 1;
            }
            cur.push(x);
            if viable(counts, cur.len(), n) {
                rec(n, nondecr, cur, counts, out);
            }
            cur.pop();
            for b in x as usize..=n {
                counts[b] -= 1;
            }
        }
    }
    if n == 0 {
        return vec![Word::empty()];
    }
    rec(n, nondecreasing, &mut cur, &mut counts, &mut out);
    out
}

/// All parking functions of length `n`, lexicographic order.
pub fn parking_functions(n: usize) -> Vec<ParkingFunction> {
    pf_words(n, false)
        .into_iter()
        .map(ParkingFunction)
        .collect()
}

pub fn nondecreasing_parking_functions(n: usize) -> Vec<ParkingFunction> {
    pf_words(n, true)
        .into_iter()
        .map(ParkingFunction)
        .collect()
}

pub fn prime_parking_functions(n: usize) -> Vec<ParkingFunction> {
    parking_functions(n)
        .into_iter()
        .filter(ParkingFunction::is_prime)
        .collect()
}

pub fn connected_parking_functions(n: usize) -> Vec<ParkingFunction> {
    parking_functions(n)
        .into_iter()
        .filter(ParkingFunction::is_connected)
        .collect()
}

/// All permutations of `[1..n]` as words, lexicographic order.
pub fn permutations(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, cur: &mut Vec<Letter>, used: &mut Vec<bool>, out: &mut Vec<Word>) {
        if cur.len() == n {
            out.push(Word(cur.clone()));
            return;
        }
        for x in 1..=n {
            if !used[x] {
                used[x] = true;
                cur.push(x as Letter);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    if n == 0 {
        return vec![Word::empty()];
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// All compositions of `n`, parts-lex order.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    rec(n as u32, &mut cur, &mut out);
    out
}

/// All partitions of `n` as nonincreasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n as u32, n as u32, &mut cur, &mut out);
    out
}

/// Distinct rearrangements of the letters of `w`, lexicographic order.
pub fn multiset_permutations(w: &Word) -> Vec<Word> {
    let mut vals: Vec<Letter> = w.letters().to_vec();
    vals.sort_unstable();
    vals.dedup();
    let mut mult: Vec<usize> = vals
        .iter()
        .map(|&v| w.letters().iter().filter(|&&x| x == v).count())
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(w.len());
    fn rec(
        n: usize,
        vals: &[Letter],
        mult: &mut Vec<usize>,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if cur.len() == n {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..vals.len() {
            if mult[i] > 0 {
                mult[i] -= 1;
                cur.push(vals[i]);
                rec(n, vals, mult, cur, out);
                cur.pop();
                mult[i] += 1;
            }
        }
    }
    rec(w.len(), &vals, &mut mult, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------------
// counting helpers
// ---------------------------------------------------------------------------

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn catalan(n: u64) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// `(n+1)^(n-1)`, the number of parking functions of length `n >= 1`.
pub fn parking_count(n: u64) -> u128 {
    if n == 0 {
        return 1;
    }
    (n as u128 + 1).pow(n as u32 - 1)
}
