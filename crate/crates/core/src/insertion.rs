//! Bounded row insertion on notched tableau pairs, the insertion map over a
//! lexicographically arranged biword, and its inverse.
//!
//! A notched pair `(P, Q)` keeps one `Q` bound per `P` box, row by row. The
//! bound `b` of an incoming pair `(a, b)` freezes every entry `>= b` at
//! every row of the bump chain: frozen entries never move and never bump.

use crate::error::{Error, Result};
use crate::grid::{s_action_parts, Cell, Monomial};
use crate::order::{IndexSet, StandardMonomial};

/// Pairs `(a, b)` with `b` non-increasing, ties on `b` sorted by `a`
/// non-increasing, and `b > a` throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiWord {
    pairs: Vec<(u32, u32)>,
}

impl BiWord {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        for &(a, b) in &pairs {
            if b <= a {
                return Err(Error::InvalidInput(format!("pair ({a},{b}) needs b > a")));
            }
        }
        let sorted = pairs
            .windows(2)
            .all(|t| t[0].1 > t[1].1 || (t[0].1 == t[1].1 && t[0].0 >= t[1].0));
        if !sorted {
            return Err(Error::InvalidInput("biword not in lexicographic order".into()));
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }
}

/// Swap each cell `(row, col)` to `(col, row)` and arrange the pairs in
/// lexicographic order.
pub fn lex_arrange(m: &Monomial) -> Result<BiWord> {
    if !m.is_over_n_tilde() {
        return Err(Error::InvalidInput(
            "insertion needs a monomial over the strictly lower grid".into(),
        ));
    }
    let mut pairs: Vec<(u32, u32)> = m.expanded().iter().map(|c| (c.col, c.row)).collect();
    pairs.sort_unstable_by(|x, y| y.1.cmp(&x.1).then(y.0.cmp(&x.0)));
    BiWord::new(pairs)
}

/// A pair of row lists of equal per-row lengths: `P` rows strictly
/// increasing, `Q` rows non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NotchedTableauPair {
    p: Vec<Vec<u32>>,
    q: Vec<Vec<u32>>,
}

impl NotchedTableauPair {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(p: Vec<Vec<u32>>, q: Vec<Vec<u32>>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::InvalidTableau(format!(
                "{} P rows vs {} Q rows",
                p.len(),
                q.len()
            )));
        }
        for (i, (pr, qr)) in p.iter().zip(&q).enumerate() {
            if pr.len() != qr.len() {
                return Err(Error::InvalidTableau(format!(
                    "row {}: P has {} boxes, Q has {}",
                    i + 1,
                    pr.len(),
                    qr.len()
                )));
            }
            if pr.is_empty() {
                return Err(Error::InvalidTableau(format!("row {} is empty", i + 1)));
            }
            if pr.windows(2).any(|t| t[0] >= t[1]) {
                return Err(Error::InvalidTableau(format!(
                    "P row {} not strictly increasing",
                    i + 1
                )));
            }
            if qr.windows(2).any(|t| t[0] < t[1]) {
                return Err(Error::InvalidTableau(format!(
                    "Q row {} not non-increasing",
                    i + 1
                )));
            }
        }
        Ok(Self { p, q })
    }

    pub fn p_rows(&self) -> &[Vec<u32>] {
        &self.p
    }

    pub fn q_rows(&self) -> &[Vec<u32>] {
        &self.q
    }

    pub fn rows(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// Total number of boxes on either side.
    pub fn size(&self) -> usize {
        self.p.iter().map(Vec::len).sum()
    }

    /// Bounded insertion of `(a, b)`. Entries `>= b` are frozen at every
    /// row: the incoming value bumps the smallest unfrozen entry at least
    /// as large as itself, and settles into a new box once nothing is left
    /// to bump, recording `b` in the same row of `Q`.
    pub fn insert(&mut self, a: u32, b: u32) {
        debug_assert!(a < b, "cells satisfy row > col");
        let mut x = a;
        let mut row = 0;
        loop {
            if row == self.p.len() {
                self.p.push(vec![x]);
                self.q.push(vec![b]);
                return;
            }
            let r = &mut self.p[row];
            let pos = r.partition_point(|&e| e < x);
            if pos < r.len() && r[pos] < b {
                x = std::mem::replace(&mut r[pos], x);
                row += 1;
            } else {
                // nothing unfrozen to bump; x lands in a new box
                r.insert(pos, x);
                self.q[row].push(b);
                return;
            }
        }
    }
}

/// Insert a whole monomial in lexicographic order.
pub fn brsk(m: &Monomial) -> Result<NotchedTableauPair> {
    let word = lex_arrange(m)?;
    let mut t = NotchedTableauPair::empty();
    for &(a, b) in word.pairs() {
        t.insert(a, b);
    }
    Ok(t)
}

/// Invert the insertion map. Pops, at each step, the most recently created
/// box: among the rightmost `Q` boxes pick the minimal bound, ties going to
/// the bottom-most row; the popped `P` entry is the largest one below the
/// bound, and reverse bumping swaps the largest entry at most the traveling
/// value back down the rows.
pub fn brsk_inverse(t: &NotchedTableauPair, v: &IndexSet) -> Result<Monomial> {
    let mut p = t.p.clone();
    let mut q = t.q.clone();
    let mut popped: Vec<(u32, u32)> = Vec::new(); // (a, b) in pop order
    loop {
        let target = q
            .iter()
            .enumerate()
            .filter_map(|(j, qr)| qr.last().map(|&b| (j, b)))
            .min_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)));
        let Some((j, b)) = target else { break };
        q[j].pop();
        let pos = p[j].partition_point(|&e| e < b);
        if pos == 0 {
            return Err(Error::NotInvertible(format!(
                "row {} has no entry below its last bound {b}",
                j + 1
            )));
        }
        let mut x = p[j].remove(pos - 1);
        for i in (0..j).rev() {
            // x < b throughout, so "at most x" already means unfrozen
            let pos = p[i].partition_point(|&e| e <= x);
            if pos == 0 {
                return Err(Error::NotInvertible(format!(
                    "reverse bump from row {} found nothing at most {x}",
                    i + 2
                )));
            }
            x = std::mem::replace(&mut p[i][pos - 1], x);
        }
        popped.push((x, b));
        while q.last().is_some_and(Vec::is_empty) {
            p.pop();
            q.pop();
        }
        if q.iter().any(Vec::is_empty) {
            return Err(Error::NotInvertible("an interior row emptied".into()));
        }
    }
    // pops must replay the insertions backwards: reversed, the pairs have to
    // come out in lexicographic order
    let ordered = popped
        .windows(2)
        .all(|t| t[1].1 > t[0].1 || (t[1].1 == t[0].1 && t[1].0 >= t[0].0));
    if !ordered {
        return Err(Error::NotInvertible(
            "popped pairs do not reverse a lexicographic insertion".into(),
        ));
    }
    for &(a, b) in &popped {
        if b <= a {
            return Err(Error::NotInvertible(format!(
                "popped pair ({a},{b}) leaves the strictly lower grid"
            )));
        }
    }
    Monomial::new(v.clone(), popped.iter().map(|&(a, b)| Cell::new(b, a)))
}

/// Read each row `i` as the word obtained by replacing the `P`-row columns
/// of `v` with the `Q`-row rows, top down.
pub fn standard_monomial_from_pair(
    t: &NotchedTableauPair,
    v: &IndexSet,
) -> Result<StandardMonomial> {
    let mut words = Vec::with_capacity(t.rows());
    for (pr, qr) in t.p_rows().iter().zip(t.q_rows()) {
        let word = s_action_parts(v, pr, qr)
            .map_err(|e| Error::InvalidTableau(format!("row not replaceable: {e}")))?;
        words.push(word);
    }
    StandardMonomial::new(words)
        .map_err(|e| Error::InvalidTableau(format!("rows do not descend: {e}")))
}

/// Inverse of [`standard_monomial_from_pair`]: each word `theta` becomes a
/// row with `P = v \ theta` ascending and `Q = theta \ v` descending. Words
/// equal to `v` index empty rows and are skipped; they carry no cells.
pub fn pair_from_standard_monomial(
    sm: &StandardMonomial,
    v: &IndexSet,
) -> Result<NotchedTableauPair> {
    let mut p = Vec::new();
    let mut q = Vec::new();
    for word in sm.words() {
        if word.len() != v.len() || word.ambient() != v.ambient() {
            return Err(Error::InvalidInput(format!(
                "word {word} does not match the shape of v = {v}"
            )));
        }
        if word == v {
            continue;
        }
        let cols = v.minus(word);
        let mut rows = word.minus(v);
        rows.reverse();
        if cols.len() != rows.len() {
            return Err(Error::InvalidInput(format!(
                "word {word} is not comparable to v = {v}"
            )));
        }
        p.push(cols);
        q.push(rows);
    }
    NotchedTableauPair::new(p, q)
}
