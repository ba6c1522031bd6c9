//! Cell grids, monomials (multisets of cells), v-chains, the replacement
//! action on index sets, domination, and the depth / block decomposition
//! that drives the peeling map.
//!
//! Cells are pairs `(row, col)` with `row` outside `v` and `col` inside `v`.
//! The grids carved out of that rectangle:
//!
//!   * `R`        — rows bounded by the conjugate column, `row <= col*`
//!   * `N`        — strictly lower cells, `row > col` (needs symplectic `v`)
//!   * `N_tilde`  — same cell rule for arbitrary `v` in `I(d, 2d)`
//!   * `N_folded` — the intersection, `col < row <= col*`

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::order::{star, IndexSet};

/// A grid cell. Ordered by `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }

    /// Reflection across the antidiagonal: `(row, col) -> (col*, row*)`.
    pub fn mirror(self, d: u32) -> Cell {
        Cell::new(star(self.col, d), star(self.row, d))
    }

    /// Fixed points of the mirror, `row = col*`.
    pub fn is_antidiagonal(self, d: u32) -> bool {
        self.row == star(self.col, d)
    }
}

/// Strict chain order on cells: `a > b` iff `a.row > b.row` and `a.col < b.col`.
pub fn chain_gt(a: Cell, b: Cell) -> bool {
    a.row > b.row && a.col < b.col
}

/// The four cell sets attached to a symplectic `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grids {
    pub r: Vec<Cell>,
    pub n: Vec<Cell>,
    pub n_tilde: Vec<Cell>,
    pub n_folded: Vec<Cell>,
}

fn rectangle_cells(v: &IndexSet) -> impl Iterator<Item = Cell> + '_ {
    let n = v.ambient();
    (1..=n)
        .filter(move |r| !v.contains(*r))
        .flat_map(move |r| v.entries().iter().map(move |&c| Cell::new(r, c)))
}

/// Strictly lower cells `row > col` for any `v` in `I(d, 2d)`, sorted.
pub fn n_tilde_cells(v: &IndexSet) -> Vec<Cell> {
    let mut cells: Vec<Cell> = rectangle_cells(v).filter(|c| c.row > c.col).collect();
    cells.sort_unstable();
    cells
}

/// Build all four grids; errors unless `v` is symplectic, since `R` and the
/// folded grid need the conjugation `col -> col*`.
pub fn build_grids(v: &IndexSet) -> Result<Grids> {
    if !v.is_symplectic() {
        return Err(Error::InvalidInput(format!(
            "{v} must pick one of each conjugate pair to build the bounded grids"
        )));
    }
    let d = v.len() as u32;
    let mut r: Vec<Cell> = rectangle_cells(v)
        .filter(|c| c.row <= star(c.col, d))
        .collect();
    r.sort_unstable();
    let n_tilde = n_tilde_cells(v);
    let n = n_tilde.clone();
    let n_folded: Vec<Cell> = n_tilde
        .iter()
        .copied()
        .filter(|c| c.row <= star(c.col, d))
        .collect();
    Ok(Grids {
        r,
        n,
        n_tilde,
        n_folded,
    })
}

/// A finite multiset of cells over the rectangle of a fixed `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    v: IndexSet,
    cells: BTreeMap<Cell, u32>,
}

impl Monomial {
    /// Build from cells with repetition; every cell must have its row
    /// outside `v`, its column inside `v`, and both within `[2d]`.
    pub fn new(v: IndexSet, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for c in cells {
            validate_cell(&v, c)?;
            *map.entry(c).or_insert(0) += 1;
        }
        Ok(Self { v, cells: map })
    }

    pub fn with_multiplicities(
        v: IndexSet,
        cells: impl IntoIterator<Item = (Cell, u32)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (c, m) in cells {
            if m == 0 {
                continue;
            }
            validate_cell(&v, c)?;
            *map.entry(c).or_insert(0) += m;
        }
        Ok(Self { v, cells: map })
    }

    pub fn empty(v: IndexSet) -> Self {
        Self {
            v,
            cells: BTreeMap::new(),
        }
    }

    pub fn v(&self) -> &IndexSet {
        &self.v
    }

    pub fn d(&self) -> u32 {
        self.v.len() as u32
    }

    /// Total multiplicity (the degree of the monomial).
    pub fn size(&self) -> usize {
        self.cells.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn multiplicity(&self, c: Cell) -> u32 {
        self.cells.get(&c).copied().unwrap_or(0)
    }

    /// Distinct cells with multiplicities, in cell order.
    pub fn distinct(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.cells.iter().map(|(&c, &m)| (c, m))
    }

    /// Support of the multiset, in cell order.
    pub fn support(&self) -> Vec<Cell> {
        self.cells.keys().copied().collect()
    }

    /// Cells repeated by multiplicity, in cell order.
    pub fn expanded(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (&c, &m) in &self.cells {
            out.extend(std::iter::repeat_n(c, m as usize));
        }
        out
    }

    pub fn is_over_n_tilde(&self) -> bool {
        self.cells.keys().all(|c| c.row > c.col)
    }

    pub fn is_over_r(&self) -> bool {
        let d = self.d();
        self.v.is_symplectic() && self.cells.keys().all(|c| c.row <= star(c.col, d))
    }

    pub fn is_over_folded(&self) -> bool {
        self.is_over_n_tilde() && self.is_over_r()
    }
}

fn validate_cell(v: &IndexSet, c: Cell) -> Result<()> {
    let n = v.ambient();
    if c.row == 0 || c.row > n || c.col == 0 || c.col > n {
        return Err(Error::InvalidInput(format!(
            "cell ({},{}) outside [1,{n}]",
            c.row, c.col
        )));
    }
    if v.contains(c.row) {
        return Err(Error::InvalidInput(format!(
            "cell row {} lies in v = {v}",
            c.row
        )));
    }
    if !v.contains(c.col) {
        return Err(Error::InvalidInput(format!(
            "cell column {} not in v = {v}",
            c.col
        )));
    }
    Ok(())
}

/// Replace columns of `v` by rows: `(v \ cols) ∪ rows`, sorted. Columns must
/// be distinct entries of `v`; rows distinct and outside `v`.
pub fn s_action(v: &IndexSet, cells: &[Cell]) -> Result<IndexSet> {
    let cols: Vec<u32> = cells.iter().map(|c| c.col).collect();
    let rows: Vec<u32> = cells.iter().map(|c| c.row).collect();
    s_action_parts(v, &cols, &rows)
}

/// `s_action` on raw column / row lists; the pairing between them is
/// irrelevant to the result.
pub fn s_action_parts(v: &IndexSet, cols: &[u32], rows: &[u32]) -> Result<IndexSet> {
    let mut seen_cols = std::collections::BTreeSet::new();
    for &c in cols {
        if !v.contains(c) {
            return Err(Error::InvalidInput(format!("column {c} not in v = {v}")));
        }
        if !seen_cols.insert(c) {
            return Err(Error::InvalidInput(format!("duplicate column {c}")));
        }
    }
    let mut seen_rows = std::collections::BTreeSet::new();
    for &r in rows {
        if v.contains(r) {
            return Err(Error::InvalidInput(format!("row {r} lies in v = {v}")));
        }
        if !seen_rows.insert(r) {
            return Err(Error::InvalidInput(format!("duplicate row {r}")));
        }
    }
    if cols.len() != rows.len() {
        return Err(Error::InvalidInput(format!(
            "{} columns vs {} rows",
            cols.len(),
            rows.len()
        )));
    }
    let mut entries: Vec<u32> = v
        .entries()
        .iter()
        .copied()
        .filter(|e| !seen_cols.contains(e))
        .chain(seen_rows.iter().copied())
        .collect();
    entries.sort_unstable();
    IndexSet::new(entries, v.ambient())
}

/// A strictly decreasing sequence under [`chain_gt`]: rows strictly
/// decreasing, columns strictly increasing along the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VChain {
    cells: Vec<Cell>,
}

impl VChain {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        for t in cells.windows(2) {
            if !chain_gt(t[0], t[1]) {
                return Err(Error::InvalidInput(format!(
                    "({},{}) does not dominate ({},{}) in the chain order",
                    t[0].row, t[0].col, t[1].row, t[1].col
                )));
            }
        }
        Ok(Self { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Does `w` dominate the chain, i.e. is the replaced set at most `w`?
pub fn dominates_chain(w: &IndexSet, chain: &VChain, v: &IndexSet) -> bool {
    let s = s_action(v, chain.cells()).expect("chain cells have distinct rows and columns");
    s.leq(w)
}

/// Whether monomial domination walks every chain or only the maximal ones.
/// The two agree because domination passes to subchains; `AllChains` is the
/// brute-force oracle kept for cross-checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DominationMode {
    #[default]
    MaximalChains,
    AllChains,
}

/// Strictly lower support cells, the ground set for chains in a monomial.
fn chain_support(m: &Monomial) -> Vec<Cell> {
    m.support().into_iter().filter(|c| c.row > c.col).collect()
}

/// Predecessor lists under `chain_gt` restricted to `cells`:
/// `succ[i]` holds indices `j` with `cells[i] > cells[j]`.
fn chain_edges(cells: &[Cell]) -> Vec<Vec<usize>> {
    cells
        .iter()
        .map(|&a| {
            cells
                .iter()
                .enumerate()
                .filter(|&(_, &b)| chain_gt(a, b))
                .map(|(j, _)| j)
                .collect()
        })
        .collect()
}

/// All maximal chains of the support, as index sequences in descending
/// chain order. The chain relation is transitive, so maximal chains are
/// exactly the maximal paths of the cover graph.
fn maximal_chains(cells: &[Cell]) -> Vec<Vec<usize>> {
    let succ = chain_edges(cells);
    // covers: j is covered by i when nothing sits strictly between
    let covers: Vec<Vec<usize>> = (0..cells.len())
        .map(|i| {
            succ[i]
                .iter()
                .copied()
                .filter(|&j| !succ[i].iter().any(|&k| succ[k].contains(&j)))
                .collect()
        })
        .collect();
    let is_source: Vec<bool> = (0..cells.len())
        .map(|j| !succ.iter().any(|s| s.contains(&j)))
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for (i, &src) in is_source.iter().enumerate() {
        if src {
            descend(i, &covers, &mut stack, &mut out);
        }
    }
    out
}

fn descend(i: usize, covers: &[Vec<usize>], stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    stack.push(i);
    if covers[i].is_empty() {
        out.push(stack.clone());
    } else {
        for &j in &covers[i] {
            descend(j, covers, stack, out);
        }
    }
    stack.pop();
}

/// Every nonempty chain of the support, as index sequences.
fn all_chains(cells: &[Cell]) -> Vec<Vec<usize>> {
    let succ = chain_edges(cells);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for i in 0..cells.len() {
        extend_all(i, &succ, &mut stack, &mut out);
    }
    out
}

fn extend_all(i: usize, succ: &[Vec<usize>], stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    stack.push(i);
    out.push(stack.clone());
    for &j in &succ[i] {
        extend_all(j, succ, stack, out);
    }
    stack.pop();
}

/// Does `w` dominate every v-chain in the monomial? Maximal-chain scan.
pub fn dominates_monomial(w: &IndexSet, m: &Monomial) -> bool {
    dominates_monomial_with(w, m, DominationMode::MaximalChains)
}

pub fn dominates_monomial_with(w: &IndexSet, m: &Monomial, mode: DominationMode) -> bool {
    let cells = chain_support(m);
    let chains = match mode {
        DominationMode::MaximalChains => maximal_chains(&cells),
        DominationMode::AllChains => all_chains(&cells),
    };
    chains.iter().all(|idxs| {
        let chain: Vec<Cell> = idxs.iter().map(|&i| cells[i]).collect();
        let s = s_action(m.v(), &chain).expect("chain has distinct rows and columns");
        s.leq(w)
    })
}

/// Depth of each support cell: the longest chain in the monomial having the
/// cell as its tail (the chain-order minimum). Longest-path dynamic program
/// over `chain_gt`, processing rows from the top down.
pub fn depth_map(m: &Monomial) -> BTreeMap<Cell, u32> {
    let cells = chain_support(m);
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by(|&a, &b| cells[b].row.cmp(&cells[a].row));
    let mut depth = vec![0u32; cells.len()];
    for &i in &order {
        let above = cells
            .iter()
            .enumerate()
            .filter(|&(_, &g)| chain_gt(g, cells[i]))
            .map(|(j, _)| depth[j])
            .max()
            .unwrap_or(0);
        depth[i] = above + 1;
    }
    cells.into_iter().zip(depth).collect()
}

/// Blocks of one depth level, topmost block first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthLevel {
    pub depth: u32,
    pub blocks: Vec<Vec<Cell>>,
}

/// Equal-depth cells, with multiplicity, sorted by `(row, col)` and split
/// into interlocking runs: consecutive cells stay in one block exactly when
/// the earlier row exceeds the later column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub levels: Vec<DepthLevel>,
}

impl BlockDecomposition {
    pub fn all_blocks(&self) -> impl Iterator<Item = &Vec<Cell>> {
        self.levels.iter().flat_map(|l| l.blocks.iter())
    }
}

pub fn block_decomposition(m: &Monomial) -> BlockDecomposition {
    let depths = depth_map(m);
    let mut by_depth: BTreeMap<u32, Vec<Cell>> = BTreeMap::new();
    for (cell, mult) in m.distinct() {
        if cell.row <= cell.col {
            continue;
        }
        let k = depths[&cell];
        by_depth
            .entry(k)
            .or_default()
            .extend(std::iter::repeat_n(cell, mult as usize));
    }
    let mut levels = Vec::new();
    for (depth, cells) in by_depth {
        // cells arrive sorted; equal depth forces both coordinates
        // non-decreasing (an antichain under chain_gt)
        debug_assert!(cells
            .windows(2)
            .all(|t| !chain_gt(t[0], t[1]) && !chain_gt(t[1], t[0])));
        debug_assert!(cells.windows(2).all(|t| t[0] <= t[1]));
        let mut blocks: Vec<Vec<Cell>> = Vec::new();
        for c in cells {
            match blocks.last_mut() {
                Some(block) if block.last().unwrap().row > c.col => block.push(c),
                _ => blocks.push(vec![c]),
            }
        }
        levels.push(DepthLevel { depth, blocks });
    }
    BlockDecomposition { levels }
}

/// All monomials of a given size over a fixed cell list, in lexicographic
/// order of their expanded cell sequences.
pub fn monomials_of_size(v: &IndexSet, cells: &[Cell], size: usize) -> Vec<Monomial> {
    use itertools::Itertools;
    cells
        .iter()
        .copied()
        .combinations_with_replacement(size)
        .map(|chosen| Monomial::new(v.clone(), chosen).expect("cells already validated"))
        .collect()
}

/// Sizes `0..=max_size`, smaller sizes first, each size in lexicographic
/// order. This is the canonical corpus order used by the harnesses.
pub fn monomials_up_to(v: &IndexSet, cells: &[Cell], max_size: usize) -> Vec<Monomial> {
    (0..=max_size)
        .flat_map(|k| monomials_of_size(v, cells, k))
        .collect()
}

/// Multiset coefficient `((n multichoose k))`, the number of size-`k`
/// multisets over `n` elements.
pub fn multiset_coefficient(n: usize, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n as u64 + i as u64) / (i as u64 + 1);
    }
    acc
}
