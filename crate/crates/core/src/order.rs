//! Index sets, the componentwise partial order, degrees, admissible pairs,
//! and standard tableaux / standard monomials.
//!
//! Everything here is a pure value type. The ambient convention: an index
//! set lives in `[n] = {1, .., n}` with `n` stored alongside the entries;
//! the symplectic cases use `n = 2d` and the pairing `j <-> j* = 2d+1-j`.

use std::fmt;

use crate::error::{Error, Result};

/// The conjugate index `j* = 2d+1-j` of `j` in `[2d]`.
pub fn star(j: u32, d: u32) -> u32 {
    2 * d + 1 - j
}

/// A strictly increasing tuple of positive integers inside `[ambient]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    entries: Vec<u32>,
    ambient: u32,
}

impl IndexSet {
    /// Build an index set; entries may arrive in any order but must be
    /// distinct and within `1..=ambient`.
    pub fn new(mut entries: Vec<u32>, ambient: u32) -> Result<Self> {
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "duplicate entry in index set {entries:?}"
            )));
        }
        if entries.iter().any(|&e| e == 0 || e > ambient) {
            return Err(Error::InvalidInput(format!(
                "entry out of range 1..={ambient} in {entries:?}"
            )));
        }
        Ok(Self { entries, ambient })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn contains(&self, x: u32) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    /// Componentwise comparison of sorted tuples. Panics on shape mismatch;
    /// callers comparing externally supplied sets must validate shapes first.
    pub fn leq(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len(), "index sets of different cardinality");
        assert_eq!(self.ambient, other.ambient, "index sets of different ambient");
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a <= b)
    }

    /// Shape-checked variant of [`leq`](Self::leq) for boundary code.
    pub fn checked_leq(&self, other: &Self) -> Result<bool> {
        if self.len() != other.len() || self.ambient != other.ambient {
            return Err(Error::InvalidInput(format!(
                "cannot compare {self} with {other}: shapes differ"
            )));
        }
        Ok(self.leq(other))
    }

    /// Does this set pick exactly one of `{j, j*}` for every `j <= d`?
    /// Requires `ambient = 2 * len`; such sets index the torus-fixed points
    /// of the symplectic grassmannian.
    pub fn is_symplectic(&self) -> bool {
        let d = self.len() as u32;
        if self.ambient != 2 * d {
            return false;
        }
        (1..=d).all(|j| self.contains(j) ^ self.contains(star(j, d)))
    }

    /// Cardinality of `x \ [d]` where `d = ambient / 2`.
    pub fn eps_degree(&self) -> usize {
        assert!(self.ambient % 2 == 0, "eps degree needs an even ambient");
        let d = self.ambient / 2;
        self.entries.iter().filter(|&&e| e > d).count()
    }

    /// Cardinality of `self \ other` as plain sets.
    pub fn minus_count(&self, other: &IndexSet) -> usize {
        self.entries.iter().filter(|&&e| !other.contains(e)).count()
    }

    /// Entries of `self \ other`, ascending.
    pub fn minus(&self, other: &IndexSet) -> Vec<u32> {
        self.entries
            .iter()
            .copied()
            .filter(|&e| !other.contains(e))
            .collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IndexSet {
    // index sets read better as {1,3} in test output
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ε = (1, .., d)`, the minimum of the symplectic index sets.
pub fn epsilon(d: u32) -> IndexSet {
    IndexSet::new((1..=d).collect(), 2 * d).expect("epsilon is always valid")
}

/// All d-element subsets of `[2d]` picking exactly one of each pair `{j, j*}`.
pub fn symplectic_index_sets(d: u32) -> Vec<IndexSet> {
    let mut out = Vec::with_capacity(1 << d);
    for mask in 0u32..(1 << d) {
        let entries: Vec<u32> = (1..=d)
            .map(|j| if mask & (1 << (j - 1)) != 0 { star(j, d) } else { j })
            .collect();
        out.push(IndexSet::new(entries, 2 * d).expect("one pick per pair"));
    }
    out.sort();
    out
}

/// Membership test for the symplectic index sets, with input validation:
/// `x` must have `d` entries inside `[2d]`.
pub fn is_symplectic_member(x: &IndexSet, d: u32) -> Result<bool> {
    if x.len() as u32 != d {
        return Err(Error::InvalidInput(format!(
            "expected {d} entries, got {}",
            x.len()
        )));
    }
    if x.ambient() != 2 * d {
        return Err(Error::InvalidInput(format!(
            "expected ambient {}, got {}",
            2 * d,
            x.ambient()
        )));
    }
    Ok(x.is_symplectic())
}

/// A non-negative half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    doubled: u64,
}

impl HalfInt {
    pub fn from_doubled(doubled: u64) -> Self {
        Self { doubled }
    }

    pub fn from_int(n: u64) -> Self {
        Self { doubled: 2 * n }
    }

    pub fn doubled(self) -> u64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if integral.
    pub fn as_integer(self) -> Option<u64> {
        self.is_integer().then_some(self.doubled / 2)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl std::ops::AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.doubled += rhs.doubled;
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::default(), |a, b| a + b)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// An ordered pair of symplectic index sets with `top >= bot` and equal
/// eps-degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePair {
    top: IndexSet,
    bot: IndexSet,
}

impl AdmissiblePair {
    pub fn new(top: IndexSet, bot: IndexSet) -> Result<Self> {
        if top.len() != bot.len() || top.ambient() != bot.ambient() {
            return Err(Error::InvalidInput(format!(
                "pair shapes differ: {top} vs {bot}"
            )));
        }
        if !top.is_symplectic() || !bot.is_symplectic() {
            return Err(Error::InvalidInput(format!(
                "pair entries must pick one of each conjugate pair: ({top},{bot})"
            )));
        }
        if !bot.leq(&top) {
            return Err(Error::InvalidInput(format!("pair not ordered: {top} < {bot}")));
        }
        if top.eps_degree() != bot.eps_degree() {
            return Err(Error::InvalidInput(format!(
                "eps degrees differ: {top} has {}, {bot} has {}",
                top.eps_degree(),
                bot.eps_degree()
            )));
        }
        Ok(Self { top, bot })
    }

    pub fn top(&self) -> &IndexSet {
        &self.top
    }

    pub fn bot(&self) -> &IndexSet {
        &self.bot
    }

    /// Half the number of entries of top and bot outside `v`.
    pub fn v_degree(&self, v: &IndexSet) -> HalfInt {
        HalfInt::from_doubled((self.top.minus_count(v) + self.bot.minus_count(v)) as u64)
    }

    /// Pair order: `self >= other` iff `bot(self) >= top(other)`.
    pub fn ge(&self, other: &AdmissiblePair) -> bool {
        other.top.leq(&self.bot)
    }
}

/// Validity flags for a sequence of admissible pairs relative to `v` and `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableauFlags {
    pub standard: bool,
    pub v_compatible: bool,
    pub w_dominated: bool,
    pub anti_dominated: bool,
}

/// Is every pair comparable to `v` on the right side and different from
/// `(v, v)`?
pub fn is_v_compatible(pairs: &[AdmissiblePair], v: &IndexSet) -> bool {
    pairs.iter().all(|p| {
        let comparable = p.top().leq(v) || v.leq(p.bot());
        comparable && !(p.top() == v && p.bot() == v)
    })
}

/// Is the last bottom at least `v`? Empty sequences qualify.
pub fn is_anti_dominated(pairs: &[AdmissiblePair], v: &IndexSet) -> bool {
    pairs.last().map_or(true, |p| v.leq(p.bot()))
}

/// Classify a raw pair sequence. Unlike [`StandardTableau`], the input need
/// not be standard; the `standard` flag reports that check.
pub fn classify(pairs: &[AdmissiblePair], v: &IndexSet, w: &IndexSet) -> TableauFlags {
    TableauFlags {
        standard: pairs.windows(2).all(|t| t[0].ge(&t[1])),
        v_compatible: is_v_compatible(pairs, v),
        w_dominated: pairs.first().map_or(true, |p| p.top().leq(w)),
        anti_dominated: is_anti_dominated(pairs, v),
    }
}

/// A non-increasing sequence of admissible pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    pairs: Vec<AdmissiblePair>,
}

impl StandardTableau {
    pub fn new(pairs: Vec<AdmissiblePair>) -> Result<Self> {
        for t in pairs.windows(2) {
            if !t[0].ge(&t[1]) {
                return Err(Error::InvalidInput(format!(
                    "pairs out of order: bot {} < top {}",
                    t[0].bot(),
                    t[1].top()
                )));
            }
        }
        Ok(Self { pairs })
    }

    pub fn empty() -> Self {
        Self { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[AdmissiblePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Sum of the pair degrees.
    pub fn v_degree(&self, v: &IndexSet) -> HalfInt {
        self.pairs.iter().map(|p| p.v_degree(v)).sum()
    }
}

/// A non-increasing sequence of index sets of equal shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardMonomial {
    words: Vec<IndexSet>,
}

impl StandardMonomial {
    pub fn new(words: Vec<IndexSet>) -> Result<Self> {
        for t in words.windows(2) {
            if t[0].len() != t[1].len() || t[0].ambient() != t[1].ambient() {
                return Err(Error::InvalidInput(format!(
                    "word shapes differ: {} vs {}",
                    t[0], t[1]
                )));
            }
            if !t[1].leq(&t[0]) {
                return Err(Error::InvalidInput(format!(
                    "words out of order: {} < {}",
                    t[0], t[1]
                )));
            }
        }
        Ok(Self { words })
    }

    pub fn empty() -> Self {
        Self { words: Vec::new() }
    }

    pub fn words(&self) -> &[IndexSet] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Total number of entries outside `v`, summed over the words.
    pub fn degree_vs(&self, v: &IndexSet) -> usize {
        self.words.iter().map(|x| x.minus_count(v)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iset(entries: &[u32], ambient: u32) -> IndexSet {
        IndexSet::new(entries.to_vec(), ambient).unwrap()
    }

    #[test]
    fn symplectic_membership() {
        assert!(is_symplectic_member(&iset(&[1, 3], 4), 2).unwrap());
        assert!(!is_symplectic_member(&iset(&[1, 4], 4), 2).unwrap());
        assert!(is_symplectic_member(&iset(&[1, 2, 3], 6), 3).unwrap());
        // wrong cardinality or ambient is an input error, not `false`
        assert!(is_symplectic_member(&iset(&[1], 4), 2).is_err());
        assert!(is_symplectic_member(&iset(&[1, 3], 6), 2).is_err());
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(vec![2, 2], 4).is_err());
        assert!(IndexSet::new(vec![0, 1], 4).is_err());
        assert!(IndexSet::new(vec![5], 4).is_err());
        // unsorted input is normalized
        assert_eq!(iset(&[3, 1], 4).entries(), &[1, 3]);
    }

    #[test]
    fn leq_examples() {
        assert!(iset(&[1, 3], 4).leq(&iset(&[2, 4], 4)));
        assert!(!iset(&[1, 4], 4).leq(&iset(&[2, 3], 4)));
        let v = iset(&[1, 3], 4);
        assert!(v.leq(&v));
        assert!(iset(&[1, 3], 4).checked_leq(&iset(&[1, 2, 3], 6)).is_err());
    }

    #[test]
    fn leq_is_a_partial_order() {
        // exhaustive over I(2,4) and I(3,6)
        for (r, n) in [(2u32, 4u32), (3, 6)] {
            let all: Vec<IndexSet> = itertools::Itertools::combinations(1..=n, r as usize)
                .map(|c| IndexSet::new(c, n).unwrap())
                .collect();
            for a in &all {
                assert!(a.leq(a));
                for b in &all {
                    if a.leq(b) && b.leq(a) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.leq(b) && b.leq(c) {
                            assert!(a.leq(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn eps_degree_examples() {
        assert_eq!(iset(&[1, 2], 4).eps_degree(), 0);
        assert_eq!(iset(&[1, 3], 4).eps_degree(), 1);
        assert_eq!(iset(&[3, 4], 4).eps_degree(), 2);
    }

    #[test]
    fn eps_degree_equivalent_form() {
        // |x \ [d]| = |[d] \ x| on symplectic sets, and epsilon is the minimum
        for d in 1..=4u32 {
            let eps = epsilon(d);
            assert_eq!(eps.eps_degree(), 0);
            for x in symplectic_index_sets(d) {
                assert_eq!(x.eps_degree(), eps.minus_count(&x));
                assert!(eps.leq(&x));
            }
        }
    }

    #[test]
    fn pair_degree_examples() {
        let v = iset(&[1, 3], 4);
        let p = |t: &[u32], b: &[u32]| AdmissiblePair::new(iset(t, 4), iset(b, 4)).unwrap();
        assert_eq!(p(&[2, 4], &[2, 4]).v_degree(&v).doubled(), 4);
        assert_eq!(p(&[3, 4], &[3, 4]).v_degree(&v).doubled(), 2);
        assert_eq!(p(&[2, 4], &[1, 3]).v_degree(&v).doubled(), 2);
    }

    #[test]
    fn pair_validation() {
        // unordered
        assert!(AdmissiblePair::new(iset(&[1, 3], 4), iset(&[2, 4], 4)).is_err());
        // eps degrees differ
        assert!(AdmissiblePair::new(iset(&[3, 4], 4), iset(&[2, 4], 4)).is_err());
        // not symplectic
        assert!(AdmissiblePair::new(iset(&[1, 4], 4), iset(&[1, 4], 4)).is_err());
    }

    #[test]
    fn tableau_degree_examples() {
        let v = iset(&[1, 3], 4);
        let p = |t: &[u32], b: &[u32]| AdmissiblePair::new(iset(t, 4), iset(b, 4)).unwrap();
        assert_eq!(StandardTableau::empty().v_degree(&v).doubled(), 0);
        let single = StandardTableau::new(vec![p(&[2, 4], &[2, 4])]).unwrap();
        assert_eq!(single.v_degree(&v), HalfInt::from_int(2));
        let two = StandardTableau::new(vec![p(&[3, 4], &[3, 4]), p(&[2, 4], &[2, 4])]).unwrap();
        assert_eq!(two.v_degree(&v), HalfInt::from_int(3));
    }

    #[test]
    fn classify_examples() {
        let v = iset(&[1, 3], 4);
        let w = iset(&[3, 4], 4);
        let p = |t: &[u32], b: &[u32]| AdmissiblePair::new(iset(t, 4), iset(b, 4)).unwrap();

        let f = classify(&[p(&[2, 4], &[2, 4])], &v, &w);
        assert!(f.standard && f.v_compatible && f.w_dominated && f.anti_dominated);

        let f = classify(&[p(&[1, 3], &[1, 3])], &v, &w);
        assert!(!f.v_compatible);

        let f = classify(&[p(&[2, 4], &[2, 4]), p(&[3, 4], &[3, 4])], &v, &w);
        assert!(!f.standard);
    }

    #[test]
    fn classify_monotone_in_w() {
        // shrinking w preserves non-domination
        let v = iset(&[1, 3], 4);
        let p = AdmissiblePair::new(iset(&[2, 4], 4), iset(&[2, 4], 4)).unwrap();
        let seq = [p];
        for w in symplectic_index_sets(2) {
            for w2 in symplectic_index_sets(2) {
                if w2.leq(&w) && !classify(&seq, &v, &w).w_dominated {
                    assert!(!classify(&seq, &v, &w2).w_dominated);
                }
            }
        }
    }

    #[test]
    fn standard_monomial_ordering() {
        let a = iset(&[3, 4], 4);
        let b = iset(&[2, 4], 4);
        assert!(StandardMonomial::new(vec![a.clone(), b.clone()]).is_ok());
        assert!(StandardMonomial::new(vec![b, a]).is_err());
    }

    #[test]
    fn half_int_displays() {
        assert_eq!(HalfInt::from_doubled(4).to_string(), "2");
        assert_eq!(HalfInt::from_doubled(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_doubled(3).as_integer(), None);
        assert_eq!(HalfInt::from_int(2).as_integer(), Some(2));
    }
}
