//! The peeling map: one step extracts a distinguished cell from every block
//! of a monomial and shifts the rest; iterating to exhaustion produces a
//! standard monomial together with the distinguished subsets.

use crate::error::{Error, Result};
use crate::grid::{block_decomposition, dominates_monomial, s_action, Cell, Monomial};
use crate::order::{IndexSet, StandardMonomial};

/// One peeling step. For every block `[(r_1,c_1), .., (r_p,c_p)]` the
/// distinguished cell is `(r_p, c_1)` and the shifted remainder contributes
/// `(r_1,c_2), .., (r_{p-1},c_p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelStep {
    pub word: IndexSet,
    pub distinguished: Vec<Cell>,
    pub remainder: Monomial,
}

pub fn peel_step(m: &Monomial) -> Result<PeelStep> {
    if m.is_empty() {
        return Err(Error::EmptyMonomial);
    }
    if !m.is_over_n_tilde() {
        return Err(Error::InvalidInput(
            "peeling needs a monomial over the strictly lower grid".into(),
        ));
    }
    let mut distinguished = Vec::new();
    let mut rest: Vec<Cell> = Vec::new();
    for block in block_decomposition(m).all_blocks() {
        let first = block.first().expect("blocks are nonempty");
        let last = block.last().expect("blocks are nonempty");
        distinguished.push(Cell::new(last.row, first.col));
        for t in block.windows(2) {
            rest.push(Cell::new(t[0].row, t[1].col));
        }
    }
    distinguished.sort_unstable();
    // distinct rows and columns across blocks is a consequence of the block
    // rule; a violation falsifies the reconstruction, so fail loudly
    let word = s_action(m.v(), &distinguished)
        .map_err(|e| Error::Inconsistency(format!("distinguished cells of {m:?}: {e}")))?;
    let remainder = Monomial::new(m.v().clone(), rest)?;
    if !remainder.is_over_n_tilde() {
        return Err(Error::Inconsistency(format!(
            "shifted remainder of {m:?} left the grid"
        )));
    }
    debug_assert_eq!(m.size(), distinguished.len() + remainder.size());
    Ok(PeelStep {
        word,
        distinguished,
        remainder,
    })
}

/// The full peeling trace of a monomial: step `r` yields word `w_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelTrace {
    v: IndexSet,
    steps: Vec<PeelStep>,
    words: StandardMonomial,
}

impl PeelTrace {
    pub fn v(&self) -> &IndexSet {
        &self.v
    }

    pub fn steps(&self) -> &[PeelStep] {
        &self.steps
    }

    pub fn words(&self) -> &StandardMonomial {
        &self.words
    }

    pub fn distinguished(&self) -> Vec<&[Cell]> {
        self.steps.iter().map(|s| s.distinguished.as_slice()).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The leading word `w_0`, absent for the empty trace.
    pub fn leading_word(&self) -> Option<&IndexSet> {
        self.words.words().first()
    }
}

/// Iterate [`peel_step`] until the monomial is exhausted. Empty input gives
/// an empty trace. The words come out non-increasing; anything else would
/// falsify the block rule and is reported as an inconsistency.
pub fn peel(m: &Monomial) -> Result<PeelTrace> {
    let mut steps = Vec::new();
    let mut cur = m.clone();
    while !cur.is_empty() {
        let step = peel_step(&cur)?;
        cur = step.remainder.clone();
        steps.push(step);
    }
    let words = StandardMonomial::new(steps.iter().map(|s| s.word.clone()).collect())
        .map_err(|e| Error::Inconsistency(format!("peel words of {m:?} not standard: {e}")))?;
    Ok(PeelTrace {
        v: m.v().clone(),
        steps,
        words,
    })
}

/// Experimental cross-check: does chain domination agree with comparing `w`
/// against the leading peel word? Reported as a statistic by the harnesses,
/// never used as the definition of domination.
pub fn domination_matches_leading_word(w: &IndexSet, m: &Monomial) -> Result<bool> {
    let trace = peel(m)?;
    let via_peel = match trace.leading_word() {
        Some(w0) => w0.leq(w),
        None => true,
    };
    Ok(dominates_monomial(w, m) == via_peel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{monomials_up_to, n_tilde_cells};
    use crate::order::symplectic_index_sets;

    fn iset(entries: &[u32], ambient: u32) -> IndexSet {
        IndexSet::new(entries.to_vec(), ambient).unwrap()
    }

    fn mono(v: &IndexSet, cells: &[(u32, u32)]) -> Monomial {
        Monomial::new(v.clone(), cells.iter().map(|&(r, c)| Cell::new(r, c))).unwrap()
    }

    #[test]
    fn step_examples() {
        let v = iset(&[1, 3], 4);

        let s = peel_step(&mono(&v, &[(2, 1), (4, 1), (4, 3)])).unwrap();
        assert_eq!(s.word, iset(&[3, 4], 4));
        assert_eq!(s.distinguished, vec![Cell::new(4, 1)]);
        assert_eq!(s.remainder, mono(&v, &[(2, 1), (4, 3)]));

        let s = peel_step(&mono(&v, &[(2, 1)])).unwrap();
        assert_eq!(s.word, iset(&[2, 3], 4));
        assert!(s.remainder.is_empty());
        assert_eq!(s.distinguished, vec![Cell::new(2, 1)]);

        let s = peel_step(&mono(&v, &[(2, 1), (4, 3)])).unwrap();
        assert_eq!(s.word, iset(&[2, 4], 4));
        assert!(s.remainder.is_empty());
        assert_eq!(s.distinguished, vec![Cell::new(2, 1), Cell::new(4, 3)]);

        assert_eq!(peel_step(&Monomial::empty(v)), Err(Error::EmptyMonomial));
    }

    #[test]
    fn trace_examples() {
        let v = iset(&[1, 3], 4);

        let t = peel(&mono(&v, &[(2, 1), (4, 1), (4, 3)])).unwrap();
        assert_eq!(
            t.words().words(),
            &[iset(&[3, 4], 4), iset(&[2, 4], 4)]
        );
        assert_eq!(
            t.distinguished(),
            vec![
                &[Cell::new(4, 1)][..],
                &[Cell::new(2, 1), Cell::new(4, 3)][..]
            ]
        );

        assert!(peel(&Monomial::empty(v.clone())).unwrap().is_empty());

        let t = peel(&mono(&v, &[(2, 1), (2, 1), (4, 3), (4, 3)])).unwrap();
        assert_eq!(
            t.words().words(),
            &[iset(&[2, 4], 4), iset(&[2, 4], 4)]
        );
    }

    #[test]
    fn peeling_preserves_degree_and_is_anti_dominated() {
        for d in 2..=3u32 {
            for v in symplectic_index_sets(d) {
                let cells = n_tilde_cells(&v);
                for m in monomials_up_to(&v, &cells, 4) {
                    let t = peel(&m).unwrap();
                    let peeled: usize = t.steps().iter().map(|s| s.distinguished.len()).sum();
                    assert_eq!(peeled, m.size());
                    for s in t.steps() {
                        // step degree equals the v-degree of its word
                        assert_eq!(s.distinguished.len(), s.word.minus_count(&v));
                        assert!(v.leq(&s.word));
                        assert_ne!(s.word, v);
                    }
                }
            }
        }
    }

    #[test]
    fn peeling_shrinks_by_block_count() {
        let v = iset(&[1, 2], 4);
        let cells = n_tilde_cells(&v);
        for m in monomials_up_to(&v, &cells, 5) {
            if m.is_empty() {
                continue;
            }
            let blocks = crate::grid::block_decomposition(&m)
                .all_blocks()
                .count();
            let s = peel_step(&m).unwrap();
            assert_eq!(m.size() - s.remainder.size(), blocks);
        }
    }

    #[test]
    fn domination_agreement_examples() {
        let v = iset(&[1, 3], 4);
        let m = mono(&v, &[(2, 1), (4, 1), (4, 3)]);
        assert!(domination_matches_leading_word(&iset(&[3, 4], 4), &m).unwrap());
        assert!(domination_matches_leading_word(&iset(&[2, 4], 4), &mono(&v, &[(4, 1)])).unwrap());
        assert!(
            domination_matches_leading_word(&iset(&[2, 4], 4), &Monomial::empty(v.clone()))
                .unwrap()
        );
    }
}
