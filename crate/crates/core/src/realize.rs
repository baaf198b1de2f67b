//! Polynomial and matrix realizations.
//!
//! The dual basis `G_a` is realized as the sum of all words over a truncated
//! alphabet parkizing to `a`; the free dendriform trialgebra lives on words
//! routed by their maxima, with plane trees labelling its monomial basis;
//! and the `F` basis is modelled by vertically packed 0/1 matrices whose
//! row quasi-shuffle reproduces the shifted-shuffle product.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::coeffs::{LinComb, Rational, Tensor};
use crate::pqsym::{f_coproduct, f_product, g_coproduct, GKey};
use crate::words::{parkize, parkize_preimages, Letter, ParkingFunction, Word};

/// A noncommutative polynomial supported on words over `[1..k]`.
pub type WordPoly = LinComb<Word>;

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// `G_a(A_k)`: all words over `[1..k]` of length `|a|` parkizing to `a`.
pub fn g_polynomial(a: &ParkingFunction, k: Letter) -> WordPoly {
    LinComb::from_keys(parkize_preimages(a, k))
}

/// Concatenation product of word polynomials.
pub fn wp_product(x: &WordPoly, y: &WordPoly) -> WordPoly {
    LinComb::bilinear(x, y, |u, v| LinComb::unit(u.concat(v)))
}

/// Tridendriform routing of a single concatenation: the product `uv` lands
/// in exactly one of the three slots by comparing `max(u)` with `max(v)`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TridSlot {
    Left,
    Middle,
    Right,
}

pub fn word_trid_slot(u: &Word, v: &Word) -> TridSlot {
    assert!(!u.is_empty() && !v.is_empty(), "trialgebra operands are nonempty");
    match v.max_letter().cmp(&u.max_letter()) {
        Ordering::Less => TridSlot::Left,
        Ordering::Equal => TridSlot::Middle,
        Ordering::Greater => TridSlot::Right,
    }
}

/// One tridendriform half-product of word polynomials.
pub fn wp_trid(x: &WordPoly, y: &WordPoly, slot: TridSlot) -> WordPoly {
    LinComb::bilinear(x, y, |u, v| {
        if word_trid_slot(u, v) == slot {
            LinComb::unit(u.concat(v))
        } else {
            LinComb::zero()
        }
    })
}

/// The seven dendriform-trialgebra relations for the word operations, on
/// all triples of nonempty words of total length `<= max_len` over
/// `[1..alphabet]`.
pub fn check_word_tridendriform(max_len: usize, alphabet: Letter) -> Result<(), String> {
    let mut words_by_len: Vec<Vec<Word>> = vec![vec![Word::empty()]];
    for len in 1..=max_len {
        let mut level = Vec::new();
        for w in &words_by_len[len - 1] {
            for x in 1..=alphabet {
                let mut v = w.letters().to_vec();
                v.push(x);
                level.push(Word::new(v));
            }
        }
        words_by_len.push(level);
    }
    let tl = |x: &WordPoly, y: &WordPoly| wp_trid(x, y, TridSlot::Left);
    let tm = |x: &WordPoly, y: &WordPoly| wp_trid(x, y, TridSlot::Middle);
    let tr = |x: &WordPoly, y: &WordPoly| wp_trid(x, y, TridSlot::Right);
    for l1 in 1..max_len {
        for l2 in 1..max_len {
            for l3 in 1..max_len {
                if l1 + l2 + l3 > max_len {
                    continue;
                }
                for u in &words_by_len[l1] {
                    for v in &words_by_len[l2] {
                        for t in &words_by_len[l3] {
                            let (xu, xv, xt) = (
                                LinComb::unit(u.clone()),
                                LinComb::unit(v.clone()),
                                LinComb::unit(t.clone()),
                            );
                            let checks: [(WordPoly, WordPoly, &str); 7] = [
                                (
                                    tl(&tl(&xu, &xv), &xt),
                                    tl(&xu, &wp_product(&xv, &xt)),
                                    "trid1",
                                ),
                                (tl(&tr(&xu, &xv), &xt), tr(&xu, &tl(&xv, &xt)), "trid2"),
                                (
                                    tr(&wp_product(&xu, &xv), &xt),
                                    tr(&xu, &tr(&xv, &xt)),
                                    "trid3",
                                ),
                                (tm(&tr(&xu, &xv), &xt), tr(&xu, &tm(&xv, &xt)), "trid4"),
                                (tm(&tl(&xu, &xv), &xt), tm(&xu, &tr(&xv, &xt)), "trid5"),
                                (tl(&tm(&xu, &xv), &xt), tm(&xu, &tl(&xv, &xt)), "trid6"),
                                (tm(&tm(&xu, &xv), &xt), tm(&xu, &tm(&xv, &xt)), "trid7"),
                            ];
                            for (lhs, rhs, name) in checks {
                                if lhs != rhs {
                                    return Err(format!("{name} fails on ({u}, {v}, {t})"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Word-level check that the realized product matches the abstract
/// convolution: `G_a(A_k) G_b(A_k) = Σ_{c in a*b} G_c(A_k)`.
pub fn check_g_realization_product(
    a: &ParkingFunction,
    b: &ParkingFunction,
    k: Letter,
) -> Result<(), String> {
    let lhs = wp_product(&g_polynomial(a, k), &g_polynomial(b, k));
    let mut rhs = WordPoly::zero();
    for c in crate::words::convolution(a, b) {
        rhs = rhs.add(&g_polynomial(&c, k));
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("realized product differs on ({a}, {b}) at k = {k}"))
    }
}

/// Expand `G_a` over the ordered sum of alphabets of sizes `k1`, `k2`,
/// splitting each word into its low and high parts. Returns the set of
/// split word pairs and the tensor of parkized pairs.
///
/// The two alphabets come from mutually infinite ordered sets, so the gap
/// between them is effectively infinite; any offset exceeding `k1 + |a|`
/// realizes that, since parkization never preserves a gap longer than the
/// word.
pub fn ordered_sum_split(
    a: &ParkingFunction,
    k1: Letter,
    k2: Letter,
) -> (BTreeSet<(Word, Word)>, Tensor<GKey>) {
    let offset = k1 + a.len() as Letter + 1;
    let alphabet: Vec<Letter> = (1..=k1).chain(offset + 1..=offset + k2).collect();
    let mut pairs = BTreeSet::new();
    let mut tensor = Tensor::zero();
    let mut seen = BTreeSet::new();
    for w in crate::words::parkize_preimages_over(a, &alphabet) {
        let low: Vec<Letter> = w.letters().iter().copied().filter(|&x| x <= k1).collect();
        let high: Vec<Letter> = w
            .letters()
            .iter()
            .copied()
            .filter(|&x| x > k1)
            .map(|x| x - offset)
            .collect();
        let (low, high) = (Word::new(low), Word::new(high));
        let parked = (parkize(&low), parkize(&high));
        if seen.insert(parked.clone()) {
            tensor.add_term(GKey(parked.0), GKey(parked.1), one());
        }
        pairs.insert((low, high));
    }
    (pairs, tensor)
}

/// Full consistency of the ordered-sum expansion with the abstract
/// coproduct: the split pairs factor exactly as `Σ G_a'(A') G_a''(A'')`
/// over the coproduct terms, and the parkized pairs reproduce `ΔG_a`.
pub fn check_ordered_sum(a: &ParkingFunction, k1: Letter, k2: Letter) -> Result<(), String> {
    let (pairs, tensor) = ordered_sum_split(a, k1, k2);
    let delta = g_coproduct(a);
    if tensor != delta {
        return Err(format!("ordered-sum tensor differs from ΔG on {a}"));
    }
    let mut expect = BTreeSet::new();
    for ((l, r), _) in delta.iter() {
        for u in parkize_preimages(&l.0, k1) {
            for v in parkize_preimages(&r.0, k2) {
                expect.insert((u.clone(), v));
            }
        }
    }
    if pairs != expect {
        return Err(format!("ordered-sum word pairs differ on {a}"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// plane trees
// ---------------------------------------------------------------------------

/// A plane tree; internal nodes carry at least two children.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PlaneTree {
    Leaf,
    Node(Vec<PlaneTree>),
}

impl PlaneTree {
    pub fn leaves(&self) -> usize {
        match self {
            PlaneTree::Leaf => 1,
            PlaneTree::Node(children) => children.iter().map(PlaneTree::leaves).sum(),
        }
    }

    /// Word length of the fiber: leaves minus one.
    pub fn weight(&self) -> usize {
        self.leaves() - 1
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneTree::Leaf => write!(f, "*"),
            PlaneTree::Node(children) => {
                write!(f, "(")?;
                for c in children {
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Recursive max-block decomposition: `w = v_0 m v_1 m ... m v_j` grafts
/// the subtrees of the `v_i` on a common root.
pub fn tree_of_word(w: &Word) -> PlaneTree {
    if w.is_empty() {
        return PlaneTree::Leaf;
    }
    let m = w.max_letter();
    let mut children = Vec::new();
    let mut current: Vec<Letter> = Vec::new();
    for &x in w.letters() {
        if x == m {
            children.push(tree_of_word(&Word::new(std::mem::take(&mut current))));
        } else {
            current.push(x);
        }
    }
    children.push(tree_of_word(&Word::new(current)));
    PlaneTree::Node(children)
}

fn words_over(len: usize, alphabet: Letter) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=alphabet).map(move |x| {
                    let mut v = w.letters().to_vec();
                    v.push(x);
                    Word::new(v)
                })
            })
            .collect();
    }
    out
}

/// `M_T(A_k) = Σ_{tree(w) = T} w` over words of length `weight(T)`.
pub fn mm_tree(t: &PlaneTree, k: Letter) -> WordPoly {
    LinComb::from_keys(
        words_over(t.weight(), k)
            .into_iter()
            .filter(|w| tree_of_word(w) == *t),
    )
}

/// `M_1 = Σ a_i`, the generator.
pub fn m_one(k: Letter) -> WordPoly {
    LinComb::from_keys((1..=k).map(|x| Word::new(vec![x])))
}

/// Evaluate the grafting expression
/// `(M_T1 > M_1) ∘ (M_T2 > M_1) ∘ ... ∘ (M_T(c-1) > M_1) < M_Tc`,
/// with leaf factors collapsing to `M_1` and a trailing leaf dropping the
/// final left half-product.
pub fn grafting_eval(t: &PlaneTree, k: Letter) -> WordPoly {
    match t {
        PlaneTree::Leaf => LinComb::unit(Word::empty()),
        PlaneTree::Node(children) => {
            let c = children.len();
            let factor = |child: &PlaneTree| -> WordPoly {
                match child {
                    PlaneTree::Leaf => m_one(k),
                    _ => wp_trid(&grafting_eval(child, k), &m_one(k), TridSlot::Right),
                }
            };
            let mut acc = factor(&children[0]);
            for child in &children[1..c - 1] {
                acc = wp_trid(&acc, &factor(child), TridSlot::Middle);
            }
            match &children[c - 1] {
                PlaneTree::Leaf => acc,
                last => wp_trid(&acc, &grafting_eval(last, k), TridSlot::Left),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// the 0/1-matrix model of the F basis
// ---------------------------------------------------------------------------

/// A vertically packed 0/1 matrix: no all-zero row. Columns may be empty;
/// parking-type matrices carry exactly one 1 per reading letter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PackedMatrix {
    cols: usize,
    rows: Vec<Vec<u8>>,
}

impl PackedMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<u8>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        assert!(rows.iter().all(|r| r.contains(&1)), "null row");
        assert!(
            rows.iter().flatten().all(|&e| e <= 1),
            "entries must be 0 or 1"
        );
        PackedMatrix { cols, rows }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == 1).count()
    }

    /// Column indices of the ones, read by rows left to right.
    pub fn reading(&self) -> Word {
        let mut letters = Vec::new();
        for row in &self.rows {
            for (j, &e) in row.iter().enumerate() {
                if e == 1 {
                    letters.push(j as Letter + 1);
                }
            }
        }
        Word::new(letters)
    }

    pub fn is_parking_type(&self) -> bool {
        crate::words::is_parking(&self.reading()) && self.cols == self.ones()
    }
}

impl fmt::Display for PackedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for &e in row {
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PackedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Remove null rows from an arbitrary 0/1 row list.
pub fn vertical_pack(cols: usize, rows: Vec<Vec<u8>>) -> Option<PackedMatrix> {
    let packed: Vec<Vec<u8>> = rows
        .into_iter()
        .filter(|r| r.contains(&1))
        .collect();
    if packed.is_empty() {
        None
    } else {
        Some(PackedMatrix::new(cols, packed))
    }
}

/// Matrix parkization by reading-word relabelling: the i-th one moves to
/// the column prescribed by the parkized reading, rows are preserved, and
/// the width shrinks to the number of ones. The defect column is always
/// empty, so ones never collide.
pub fn matrix_parkize(m: &PackedMatrix) -> PackedMatrix {
    let reading = m.reading();
    let parked = parkize(&reading);
    let n = reading.len();
    let mut rows = Vec::with_capacity(m.rows.len());
    let mut at = 0usize;
    for row in &m.rows {
        let count = row.iter().filter(|&&e| e == 1).count();
        let mut new_row = vec![0u8; n];
        for &col in &parked.letters()[at..at + count] {
            assert_eq!(new_row[col as usize - 1], 0, "parkization collision");
            new_row[col as usize - 1] = 1;
        }
        at += count;
        rows.push(new_row);
    }
    PackedMatrix::new(n, rows)
}

/// All vertically packed matrices with the given reading word: consecutive
/// runs of the word with strictly increasing letters become rows.
pub fn matrices_of_reading(a: &Word) -> Vec<PackedMatrix> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let letters = a.letters();
    let mut out = Vec::new();
    // choose row boundaries; within a row the letters must strictly increase
    let gaps = n - 1;
    'mask: for mask in 0u32..(1 << gaps) {
        let mut rows = Vec::new();
        let mut row = vec![0u8; n];
        row[letters[0] as usize - 1] = 1;
        let mut last = letters[0];
        for i in 1..n {
            let boundary = mask & (1 << (i - 1)) != 0;
            if boundary {
                rows.push(std::mem::replace(&mut row, vec![0u8; n]));
                row[letters[i] as usize - 1] = 1;
            } else {
                if letters[i] <= last {
                    continue 'mask;
                }
                row[letters[i] as usize - 1] = 1;
            }
            last = letters[i];
        }
        rows.push(row);
        out.push(PackedMatrix::new(n, rows));
    }
    out.sort();
    out
}

/// Fiber of `F_a` in the matrix model.
pub fn f_matrices(a: &ParkingFunction) -> Vec<PackedMatrix> {
    matrices_of_reading(a.word())
}

/// Augmented shuffle of two packed matrices: interleave and merge their
/// rows in all order-preserving ways, columns concatenated.
pub fn augmented_shuffle(p: &PackedMatrix, q: &PackedMatrix) -> Vec<PackedMatrix> {
    #[derive(Copy, Clone)]
    enum Step {
        L,
        R,
        Both,
    }
    let cols = p.cols + q.cols;
    let mut out = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    fn rec(
        p: &PackedMatrix,
        q: &PackedMatrix,
        i: usize,
        j: usize,
        steps: &mut Vec<Step>,
        out: &mut Vec<PackedMatrix>,
        cols: usize,
    ) {
        let (np, nq) = (p.row_count(), q.row_count());
        if i == np && j == nq {
            let mut rows = Vec::with_capacity(steps.len());
            let (mut a, mut b) = (0usize, 0usize);
            for s in steps.iter() {
                let mut row = vec![0u8; cols];
                match s {
                    Step::L => {
                        row[..p.cols].copy_from_slice(&p.rows[a]);
                        a += 1;
                    }
                    Step::R => {
                        row[p.cols..].copy_from_slice(&q.rows[b]);
                        b += 1;
                    }
                    Step::Both => {
                        row[..p.cols].copy_from_slice(&p.rows[a]);
                        row[p.cols..].copy_from_slice(&q.rows[b]);
                        a += 1;
                        b += 1;
                    }
                }
                rows.push(row);
            }
            out.push(PackedMatrix::new(cols, rows));
            return;
        }
        if i < np {
            steps.push(Step::L);
            rec(p, q, i + 1, j, steps, out, cols);
            steps.pop();
        }
        if j < nq {
            steps.push(Step::R);
            rec(p, q, i, j + 1, steps, out, cols);
            steps.pop();
        }
        if i < np && j < nq {
            steps.push(Step::Both);
            rec(p, q, i + 1, j + 1, steps, out, cols);
            steps.pop();
        }
    }
    rec(p, q, 0, 0, &mut steps, &mut out, cols);
    out.sort();
    out
}

/// Row-split coproduct of a packed matrix: top rows tensor bottom rows,
/// each side parkized. `None` encodes the empty degree-0 matrix.
pub fn matrix_delta(p: &PackedMatrix) -> Vec<(Option<PackedMatrix>, Option<PackedMatrix>)> {
    let n = p.row_count();
    (0..=n)
        .map(|cut| {
            let top = if cut == 0 {
                None
            } else {
                Some(matrix_parkize(&PackedMatrix::new(
                    p.cols,
                    p.rows[..cut].to_vec(),
                )))
            };
            let bottom = if cut == n {
                None
            } else {
                Some(matrix_parkize(&PackedMatrix::new(
                    p.cols,
                    p.rows[cut..].to_vec(),
                )))
            };
            (top, bottom)
        })
        .collect()
}

/// Optional matrix key (`None` is the empty degree-0 matrix).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PackedMatrixKey(pub Option<PackedMatrix>);

impl fmt::Display for PackedMatrixKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            None => write!(f, "[]"),
            Some(m) => write!(f, "{m}"),
        }
    }
}

impl fmt::Debug for PackedMatrixKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The matrix model reproduces the abstract product and coproduct of the
/// `F` basis through `max_degree`.
pub fn check_matrix_model(max_degree: usize) -> Result<(), String> {
    for (d1, d2) in crate::coeffs::degree_pairs(max_degree) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for a in crate::words::parking_functions(d1) {
            for b in crate::words::parking_functions(d2) {
                let mut lhs: LinComb<PackedMatrix> = LinComb::zero();
                for p in f_matrices(&a) {
                    for q in f_matrices(&b) {
                        for r in augmented_shuffle(&p, &q) {
                            lhs.add_term(r, one());
                        }
                    }
                }
                let mut rhs: LinComb<PackedMatrix> = LinComb::zero();
                for (c, coeff) in f_product(&a, &b).iter() {
                    for m in f_matrices(&c.0) {
                        rhs.add_term(m, coeff.clone());
                    }
                }
                if lhs != rhs {
                    return Err(format!("matrix product differs on ({a}, {b})"));
                }
            }
        }
    }
    // row-split coproduct with matrix parkization matches the
    // deconcatenation coproduct fiberwise
    for n in 1..=max_degree {
        for a in crate::words::parking_functions(n) {
            let mut lhs: Tensor<PackedMatrixKey> = Tensor::zero();
            for p in f_matrices(&a) {
                for (top, bottom) in matrix_delta(&p) {
                    lhs.add_term(PackedMatrixKey(top), PackedMatrixKey(bottom), one());
                }
            }
            let mut rhs: Tensor<PackedMatrixKey> = Tensor::zero();
            for ((l, r), c) in f_coproduct(&a).iter() {
                let lefts: Vec<Option<PackedMatrix>> = if l.0.is_empty() {
                    vec![None]
                } else {
                    f_matrices(&l.0).into_iter().map(Some).collect()
                };
                let rights: Vec<Option<PackedMatrix>> = if r.0.is_empty() {
                    vec![None]
                } else {
                    f_matrices(&r.0).into_iter().map(Some).collect()
                };
                for lm in &lefts {
                    for rm in &rights {
                        rhs.add_term(
                            PackedMatrixKey(lm.clone()),
                            PackedMatrixKey(rm.clone()),
                            c.clone(),
                        );
                    }
                }
            }
            if lhs != rhs {
                return Err(format!("matrix coproduct differs on {a}"));
            }
        }
    }
    Ok(())
}
