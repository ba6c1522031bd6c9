//! Enumeration of dominated monomials and standard tableaux, and the
//! Hilbert-function table whose degree-`m` value is the number of
//! `w`-dominated monomials of degree `m` over the bounded grid.

use crate::error::{Error, Result};
use crate::grid::{
    build_grids, dominates_monomial_with, monomials_of_size, DominationMode, Monomial,
};
use crate::order::{symplectic_index_sets, AdmissiblePair, IndexSet, StandardTableau};

fn require_symplectic_pair(v: &IndexSet, w: &IndexSet) -> Result<()> {
    if !v.is_symplectic() || !w.is_symplectic() {
        return Err(Error::InvalidInput(format!(
            "v = {v} and w = {w} must pick one of each conjugate pair"
        )));
    }
    if v.len() != w.len() || v.ambient() != w.ambient() {
        return Err(Error::InvalidInput(format!(
            "v = {v} and w = {w} have different shapes"
        )));
    }
    if !v.leq(w) {
        return Err(Error::InvalidInput(format!("need v <= w, got v = {v}, w = {w}")));
    }
    Ok(())
}

/// All `w`-dominated monomials of degree `m` over the bounded grid of `v`,
/// in lexicographic order.
pub fn enumerate_dominated_monomials(
    v: &IndexSet,
    w: &IndexSet,
    m: usize,
    mode: DominationMode,
) -> Result<Vec<Monomial>> {
    require_symplectic_pair(v, w)?;
    let grids = build_grids(v)?;
    Ok(monomials_of_size(v, &grids.r, m)
        .into_iter()
        .filter(|mono| dominates_monomial_with(w, mono, mode))
        .collect())
}

/// Candidate pairs for tableau enumeration: admissible, comparable to `v`
/// on the compatible side, not equal to `(v, v)`, in canonical order.
fn compatible_pairs(v: &IndexSet) -> Vec<AdmissiblePair> {
    let d = v.len() as u32;
    let all = symplectic_index_sets(d);
    let mut out = Vec::new();
    for top in &all {
        for bot in &all {
            let Ok(pair) = AdmissiblePair::new(top.clone(), bot.clone()) else {
                continue;
            };
            if pair.top() == v && pair.bot() == v {
                continue;
            }
            if pair.top().leq(v) || v.leq(pair.bot()) {
                out.push(pair);
            }
        }
    }
    out.sort();
    out
}

/// Depth-first extension of non-increasing pair sequences. Every compatible
/// pair has positive degree, so the target bounds the length.
fn extend_tableaux(
    pairs: &[AdmissiblePair],
    v: &IndexSet,
    prefix: &mut Vec<AdmissiblePair>,
    doubled_so_far: u64,
    doubled_max: u64,
    emit: &mut impl FnMut(&[AdmissiblePair], u64),
) {
    emit(prefix, doubled_so_far);
    for p in pairs {
        if let Some(last) = prefix.last() {
            if !last.ge(p) {
                continue;
            }
        }
        let doubled = doubled_so_far + p.v_degree(v).doubled();
        if doubled > doubled_max {
            continue;
        }
        prefix.push(p.clone());
        extend_tableaux(pairs, v, prefix, doubled, doubled_max, emit);
        prefix.pop();
    }
}

/// All `w`-dominated v-compatible standard tableaux of integer degree `m`.
pub fn enumerate_dominated_tableaux(
    v: &IndexSet,
    w: &IndexSet,
    m: u32,
) -> Result<Vec<StandardTableau>> {
    require_symplectic_pair(v, w)?;
    let pairs = compatible_pairs(v);
    let doubled_max = 2 * m as u64;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    // domination only constrains the first pair, checked at emission
    extend_tableaux(&pairs, v, &mut prefix, 0, doubled_max, &mut |seq, doubled| {
        if doubled == doubled_max && seq.first().map_or(m == 0, |p| p.top().leq(w)) {
            out.push(StandardTableau::new(seq.to_vec()).expect("extension keeps order"));
        }
    });
    out.sort();
    Ok(out)
}

/// All v-compatible standard tableaux anti-dominated by `v` with degree at
/// most `max_degree`. Anti-domination restricts the pair pool to bottoms
/// at least `v`, and then holds for any non-increasing sequence.
pub fn enumerate_anti_dominated_tableaux(
    v: &IndexSet,
    max_degree: u32,
) -> Result<Vec<StandardTableau>> {
    if !v.is_symplectic() {
        return Err(Error::InvalidInput(format!(
            "v = {v} must pick one of each conjugate pair"
        )));
    }
    let pairs: Vec<AdmissiblePair> = compatible_pairs(v)
        .into_iter()
        .filter(|p| v.leq(p.bot()))
        .collect();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend_tableaux(&pairs, v, &mut prefix, 0, 2 * max_degree as u64, &mut |seq, _| {
        out.push(StandardTableau::new(seq.to_vec()).expect("extension keeps order"));
    });
    out.sort();
    Ok(out)
}

/// Degree-indexed counts of dominated monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub v: IndexSet,
    pub w: IndexSet,
    pub counts: Vec<u64>,
}

/// `counts[m]` = number of `w`-dominated monomials of degree `m` over the
/// bounded grid, for `m = 0..=max_m`.
pub fn hilbert_function(
    v: &IndexSet,
    w: &IndexSet,
    max_m: usize,
    mode: DominationMode,
) -> Result<HilbertTable> {
    require_symplectic_pair(v, w)?;
    let grids = build_grids(v)?;
    let counts = (0..=max_m)
        .map(|m| {
            monomials_of_size(v, &grids.r, m)
                .into_iter()
                .filter(|mono| dominates_monomial_with(w, mono, mode))
                .count() as u64
        })
        .collect();
    Ok(HilbertTable {
        v: v.clone(),
        w: w.clone(),
        counts,
    })
}
