//! The reduction chain from anti-dominated standard tableaux to folded-grid
//! monomials: flatten a tableau into a standard monomial, invert the
//! insertion map, then fold across the antidiagonal and take the square
//! root of the multiplicities.

use crate::error::{Error, Result};
use crate::grid::{Cell, Monomial};
use crate::insertion::{brsk_inverse, pair_from_standard_monomial};
use crate::order::{is_anti_dominated, is_v_compatible, IndexSet, StandardMonomial, StandardTableau};

/// Whether a monomial is mirror-symmetric with even multiplicity on the
/// antidiagonal. Exactly these admit the folding square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialityReport {
    pub symmetric: bool,
    pub diagonal_parities_even: bool,
    pub special: bool,
}

pub fn speciality(m: &Monomial) -> SpecialityReport {
    let d = m.d();
    let symmetric = m
        .distinct()
        .all(|(c, mult)| m.multiplicity(c.mirror(d)) == mult);
    let diagonal_parities_even = m
        .distinct()
        .filter(|(c, _)| c.is_antidiagonal(d))
        .all(|(_, mult)| mult % 2 == 0);
    SpecialityReport {
        symmetric,
        diagonal_parities_even,
        special: symmetric && diagonal_parities_even,
    }
}

/// Interleave tops and bottoms: `top_1 >= bot_1 >= top_2 >= bot_2 >= ..`.
/// The tableau must be v-compatible and anti-dominated by `v`; the output
/// has twice as many words as the tableau has pairs.
pub fn flatten_tableau(t: &StandardTableau, v: &IndexSet) -> Result<StandardMonomial> {
    if !is_v_compatible(t.pairs(), v) || !is_anti_dominated(t.pairs(), v) {
        return Err(Error::InvalidInput(format!(
            "tableau is not v-compatible and anti-dominated for v = {v}"
        )));
    }
    let words: Vec<IndexSet> = t
        .pairs()
        .iter()
        .flat_map(|p| [p.top().clone(), p.bot().clone()])
        .collect();
    StandardMonomial::new(words)
}

/// Fold: reflect every cell with `row > col*` across the antidiagonal, then
/// halve all multiplicities. Defined exactly on special monomials.
pub fn fold(m: &Monomial) -> Result<Monomial> {
    let report = speciality(m);
    if !report.special {
        return Err(Error::InvalidInput(format!(
            "cannot fold a non-special monomial (symmetric: {}, even diagonal: {})",
            report.symmetric, report.diagonal_parities_even
        )));
    }
    let d = m.d();
    let mut folded: std::collections::BTreeMap<Cell, u32> = std::collections::BTreeMap::new();
    for (c, mult) in m.distinct() {
        let target = if c.row > crate::order::star(c.col, d) {
            c.mirror(d)
        } else {
            c
        };
        *folded.entry(target).or_insert(0) += mult;
    }
    let halved = folded.into_iter().map(|(c, mult)| {
        debug_assert!(mult % 2 == 0);
        (c, mult / 2)
    });
    Monomial::with_multiplicities(m.v().clone(), halved)
}

/// Inverse of [`fold`]: double every multiplicity, splitting the doubled
/// count evenly between each off-diagonal cell and its mirror.
pub fn unfold(m: &Monomial) -> Result<Monomial> {
    if !m.is_over_folded() {
        return Err(Error::InvalidInput(
            "unfolding needs a monomial over the folded grid".into(),
        ));
    }
    let d = m.d();
    let mut cells: Vec<(Cell, u32)> = Vec::new();
    for (c, mult) in m.distinct() {
        if c.is_antidiagonal(d) {
            cells.push((c, 2 * mult));
        } else {
            cells.push((c, mult));
            cells.push((c.mirror(d), mult));
        }
    }
    Monomial::with_multiplicities(m.v().clone(), cells)
}

/// The composed bijection from anti-dominated tableaux to folded-grid
/// monomials: flatten, invert the insertion map, fold. The intermediate
/// monomial failing to be special falsifies the reduction and surfaces as
/// an inconsistency, not an input error.
pub fn eta(t: &StandardTableau, v: &IndexSet) -> Result<Monomial> {
    let words = flatten_tableau(t, v)?;
    let pair = pair_from_standard_monomial(&words, v)?;
    let unfolded = brsk_inverse(&pair, v)
        .map_err(|e| Error::Inconsistency(format!("flattened tableau not invertible: {e}")))?;
    if !speciality(&unfolded).special {
        return Err(Error::Inconsistency(format!(
            "image of a flattened tableau is not special: {unfolded:?}"
        )));
    }
    fold(&unfolded)
}
