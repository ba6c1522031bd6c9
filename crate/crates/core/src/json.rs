//! Wire formats. Index sets serialize as plain sorted arrays, cells as
//! `[row, col]` pairs, monomials as `{"v": .., "d": .., "cells": ..}` with
//! repetition encoding multiplicity. Deserialization goes through raw
//! mirrors so the ambient context (known from `v`) can be reattached.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Cell, Grids, Monomial};
use crate::insertion::NotchedTableauPair;
use crate::order::{AdmissiblePair, IndexSet, StandardMonomial, StandardTableau};
use crate::peel::PeelTrace;

pub fn index_set_to_json(x: &IndexSet) -> serde_json::Value {
    serde_json::json!(x.entries())
}

pub fn cell_to_json(c: Cell) -> serde_json::Value {
    serde_json::json!([c.row, c.col])
}

pub fn cells_to_json(cells: &[Cell]) -> serde_json::Value {
    serde_json::Value::Array(cells.iter().map(|&c| cell_to_json(c)).collect())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonomialDto {
    pub v: Vec<u32>,
    pub d: u32,
    pub cells: Vec<(u32, u32)>,
}

pub fn monomial_to_dto(m: &Monomial) -> MonomialDto {
    MonomialDto {
        v: m.v().entries().to_vec(),
        d: m.d(),
        cells: m.expanded().iter().map(|c| (c.row, c.col)).collect(),
    }
}

pub fn monomial_from_dto(dto: &MonomialDto) -> Result<Monomial> {
    let v = IndexSet::new(dto.v.clone(), 2 * dto.d)?;
    if v.len() as u32 != dto.d {
        return Err(Error::InvalidInput(format!(
            "v has {} entries but d = {}",
            v.len(),
            dto.d
        )));
    }
    Monomial::new(v, dto.cells.iter().map(|&(r, c)| Cell::new(r, c)))
}

/// Cells with an externally supplied `v`: the `--monomial '[[2,1],..]'`
/// input form.
pub fn monomial_from_cells(v: &IndexSet, cells: &[(u32, u32)]) -> Result<Monomial> {
    Monomial::new(v.clone(), cells.iter().map(|&(r, c)| Cell::new(r, c)))
}

pub fn monomial_to_json(m: &Monomial) -> serde_json::Value {
    serde_json::to_value(monomial_to_dto(m)).expect("monomial dto serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairDto {
    pub top: Vec<u32>,
    pub bot: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauDto {
    pub pairs: Vec<PairDto>,
}

pub fn tableau_to_dto(t: &StandardTableau) -> TableauDto {
    TableauDto {
        pairs: t
            .pairs()
            .iter()
            .map(|p| PairDto {
                top: p.top().entries().to_vec(),
                bot: p.bot().entries().to_vec(),
            })
            .collect(),
    }
}

pub fn tableau_from_dto(dto: &TableauDto, ambient: u32) -> Result<StandardTableau> {
    let pairs = dto
        .pairs
        .iter()
        .map(|p| {
            AdmissiblePair::new(
                IndexSet::new(p.top.clone(), ambient)?,
                IndexSet::new(p.bot.clone(), ambient)?,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    StandardTableau::new(pairs)
}

pub fn tableau_to_json(t: &StandardTableau) -> serde_json::Value {
    serde_json::to_value(tableau_to_dto(t)).expect("tableau dto serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StandardMonomialDto {
    pub words: Vec<Vec<u32>>,
}

pub fn standard_monomial_to_json(sm: &StandardMonomial) -> serde_json::Value {
    serde_json::json!({
        "words": sm.words().iter().map(|w| w.entries().to_vec()).collect::<Vec<_>>()
    })
}

pub fn standard_monomial_from_dto(
    dto: &StandardMonomialDto,
    ambient: u32,
) -> Result<StandardMonomial> {
    let words = dto
        .words
        .iter()
        .map(|w| IndexSet::new(w.clone(), ambient))
        .collect::<Result<Vec<_>>>()?;
    StandardMonomial::new(words)
}

/// `{"P": [[..], ..], "Q": [[..], ..]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauPairDto {
    #[serde(rename = "P")]
    pub p: Vec<Vec<u32>>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<u32>>,
}

pub fn tableau_pair_to_json(t: &NotchedTableauPair) -> serde_json::Value {
    serde_json::to_value(TableauPairDto {
        p: t.p_rows().to_vec(),
        q: t.q_rows().to_vec(),
    })
    .expect("tableau pair dto serializes")
}

pub fn tableau_pair_from_dto(dto: &TableauPairDto) -> Result<NotchedTableauPair> {
    NotchedTableauPair::new(dto.p.clone(), dto.q.clone())
}

/// `{"words": [[..], ..], "distinguished": [[[r,c], ..], ..]}` in peel order.
pub fn peel_trace_to_json(t: &PeelTrace) -> serde_json::Value {
    serde_json::json!({
        "words": t.words().words().iter().map(|w| w.entries().to_vec()).collect::<Vec<_>>(),
        "distinguished": t
            .steps()
            .iter()
            .map(|s| s.distinguished.iter().map(|&c| cell_to_json(c)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn grids_to_json(v: &IndexSet, g: &Grids) -> serde_json::Value {
    serde_json::json!({
        "v": v.entries(),
        "d": v.len() as u32,
        "R": cells_to_json(&g.r),
        "N": cells_to_json(&g.n),
        "N_tilde": cells_to_json(&g.n_tilde),
        "N_folded": cells_to_json(&g.n_folded),
    })
}
