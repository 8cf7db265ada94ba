//! Crystal graph of the Fock space: normal and good nodes, Uglov
//! multipartitions, the FLOTW test and Kleshchev charges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    addable_nodes, all_addable, cmp_above_first, multipartitions, removable_nodes, residue,
    Charge, MultiPartition, Node,
};
use crate::error::{Error, Result};

/// Which addable nodes can cancel a removable node.
///
/// Nodes of one residue are listed most-above first. A removable `γ` is
/// normal iff for every addable `η` on the chosen side of `γ`, the removable
/// nodes strictly between them outnumber the addable ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NormalRule {
    /// `η` ranges over addable nodes below `γ`.
    #[default]
    Below,
    /// `η` ranges over addable nodes above `γ`.
    Above,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Sig {
    Add,
    Rem,
}

fn signature(lambda: &MultiPartition, i: u32, charge: &Charge, e: u32) -> Vec<(Node, Sig)> {
    let mut word: Vec<(Node, Sig)> = addable_nodes(lambda, i, charge, e)
        .into_iter()
        .map(|n| (n, Sig::Add))
        .chain(removable_nodes(lambda, i, charge, e).into_iter().map(|n| (n, Sig::Rem)))
        .collect();
    word.sort_by(|a, b| cmp_above_first(&a.0, &b.0, charge));
    word
}

fn survives(word: &[(Node, Sig)], p: usize, rule: NormalRule) -> bool {
    let mut rem = 0i64;
    let mut add = 0i64;
    let mut check = |s: Sig| match s {
        Sig::Add => {
            if rem <= add {
                return false;
            }
            add += 1;
            true
        }
        Sig::Rem => {
            rem += 1;
            true
        }
    };
    match rule {
        NormalRule::Below => word[p + 1..].iter().all(|&(_, s)| check(s)),
        NormalRule::Above => word[..p].iter().rev().all(|&(_, s)| check(s)),
    }
}

pub fn is_normal_with(
    gamma: Node,
    lambda: &MultiPartition,
    i: u32,
    charge: &Charge,
    e: u32,
    rule: NormalRule,
) -> Result<bool> {
    let word = signature(lambda, i, charge, e);
    let p = word
        .iter()
        .position(|&(n, s)| n == gamma && s == Sig::Rem)
        .ok_or_else(|| Error::InvalidInput(format!("{gamma} is not a removable {i}-node of {lambda}")))?;
    Ok(survives(&word, p, rule))
}

pub fn is_normal(gamma: Node, lambda: &MultiPartition, i: u32, charge: &Charge, e: u32) -> Result<bool> {
    is_normal_with(gamma, lambda, i, charge, e, NormalRule::default())
}

pub fn good_node_with(
    lambda: &MultiPartition,
    i: u32,
    charge: &Charge,
    e: u32,
    rule: NormalRule,
) -> Option<Node> {
    let word = signature(lambda, i, charge, e);
    (0..word.len())
        .find(|&p| word[p].1 == Sig::Rem && survives(&word, p, rule))
        .map(|p| word[p].0)
}

/// The most-above normal `i`-node, if any.
pub fn good_node(lambda: &MultiPartition, i: u32, charge: &Charge, e: u32) -> Option<Node> {
    good_node_with(lambda, i, charge, e, NormalRule::default())
}

/// Children of `lambda` along crystal edges: `(i, μ)` with `μ/λ` a good `i`-node of `μ`.
pub fn crystal_children_with(
    lambda: &MultiPartition,
    charge: &Charge,
    e: u32,
    rule: NormalRule,
) -> Vec<(u32, MultiPartition)> {
    let mut out = Vec::new();
    for node in all_addable(lambda) {
        let i = residue(node, charge, e);
        let mu = lambda.with_node_added(node).expect("addable");
        if good_node_with(&mu, i, charge, e, rule) == Some(node) {
            out.push((i, mu));
        }
    }
    out.sort();
    out
}

fn check_level(l: usize, charge: &Charge) -> Result<()> {
    if charge.level() != l {
        return Err(Error::InvalidInput(format!("charge {charge} does not have {l} entries")));
    }
    Ok(())
}

pub fn uglov_set_with(e: u32, l: usize, charge: &Charge, n: usize, rule: NormalRule) -> Result<BTreeSet<MultiPartition>> {
    check_level(l, charge)?;
    let mut layer: BTreeSet<MultiPartition> = [MultiPartition::empty(l)].into();
    for _ in 0..n {
        layer = layer
            .par_iter()
            .flat_map_iter(|lam| crystal_children_with(lam, charge, e, rule).into_iter().map(|(_, mu)| mu))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
    }
    Ok(layer)
}

/// Uglov l-partitions of rank `n`: the rank-`n` layer of the crystal
/// component of the empty multipartition.
pub fn uglov_set(e: u32, l: usize, charge: &Charge, n: usize) -> Result<BTreeSet<MultiPartition>> {
    uglov_set_with(e, l, charge, n, NormalRule::default())
}

/// FLOTW test, defined for `0 ≤ s_1 ≤ … ≤ s_l < e`.
pub fn flotw_predicate(lambda: &MultiPartition, e: u32, charge: &Charge) -> Result<bool> {
    let l = lambda.level();
    check_level(l, charge)?;
    let s = charge.entries();
    let ascending = s.windows(2).all(|w| w[0] <= w[1]);
    if !ascending || s[0] < 0 || s[l - 1] >= e as i64 {
        return Err(Error::InvalidInput(format!(
            "FLOTW test needs 0 <= s_1 <= ... <= s_l < e, got {charge} with e={e}"
        )));
    }
    let part = |c: usize, i: i64| -> usize {
        if i < 1 {
            usize::MAX
        } else {
            lambda.component(c).part(i as usize)
        }
    };
    let rows = lambda.height() as i64 + e as i64 + 1;
    for i in 1..=rows {
        for j in 1..l {
            if part(j, i) < part(j + 1, i + s[j] - s[j - 1]) {
                return Ok(false);
            }
        }
        if part(l, i) < part(1, i + e as i64 + s[0] - s[l - 1]) {
            return Ok(false);
        }
    }
    let mut ends: BTreeMap<usize, BTreeSet<u32>> = BTreeMap::new();
    for (c, p) in lambda.components().iter().enumerate() {
        for (r, &k) in p.parts().iter().enumerate() {
            ends.entry(k).or_default().insert(residue(Node::new(r + 1, k, c + 1), charge, e));
        }
    }
    Ok(ends.values().all(|res| res.len() < e as usize))
}

/// A charge congruent to `v` with gaps large enough that Uglov and
/// Kleshchev multipartitions agree up to rank `n`.
///
/// `s_j = v_j + (l − j)·2·max(n,1)·e`.
pub fn kleshchev_charge(v: &[u32], e: u32, n: usize) -> Result<Charge> {
    if let Some(x) = v.iter().find(|&&x| x >= e) {
        return Err(Error::InvalidInput(format!("residue {x} is not in [0, {e})")));
    }
    let l = v.len();
    let gap = 2 * n.max(1) as i64 * e as i64;
    Charge::new(
        v.iter()
            .enumerate()
            .map(|(j, &x)| x as i64 + (l - 1 - j) as i64 * gap)
            .collect(),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct CrystalVertex {
    pub label: MultiPartition,
    pub uglov: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrystalEdge {
    pub from: MultiPartition,
    pub color: u32,
    pub to: MultiPartition,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    pub e: u32,
    pub l: usize,
    pub charge: Charge,
    pub layers: Vec<Vec<CrystalVertex>>,
    pub edges: Vec<CrystalEdge>,
}

/// Crystal of the Fock space on ranks `0..=n`, with the component of the
/// empty multipartition marked.
pub fn crystal_graph(e: u32, l: usize, charge: &Charge, n: usize) -> Result<CrystalGraph> {
    check_level(l, charge)?;
    let layers_raw: Vec<Vec<MultiPartition>> = (0..=n).map(|m| multipartitions(l, m)).collect();
    let mut edges = Vec::new();
    for layer in layers_raw.iter().take(n) {
        let found: Vec<Vec<CrystalEdge>> = layer
            .par_iter()
            .map(|lam| {
                crystal_children_with(lam, charge, e, NormalRule::default())
                    .into_iter()
                    .map(|(color, to)| CrystalEdge { from: lam.clone(), color, to })
                    .collect()
            })
            .collect();
        edges.extend(found.into_iter().flatten());
    }
    let mut marked: BTreeSet<MultiPartition> = [MultiPartition::empty(l)].into();
    for edge in &edges {
        if marked.contains(&edge.from) {
            marked.insert(edge.to.clone());
        }
    }
    let layers = layers_raw
        .into_iter()
        .map(|layer| {
            layer
                .into_iter()
                .map(|label| CrystalVertex { uglov: marked.contains(&label), label })
                .collect()
        })
        .collect();
    Ok(CrystalGraph { e, l, charge: charge.clone(), layers, edges })
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for v in self.layers.iter().flatten() {
            let style = if v.uglov { ", style=bold" } else { "" };
            let _ = writeln!(s, "  \"{}\" [label=\"{}\"{}];", v.label, v.label, style);
        }
        for edge in &self.edges {
            let _ = writeln!(s, "  \"{}\" -> \"{}\" [label=\"{}\"];", edge.from, edge.to, edge.color);
        }
        s.push_str("}\n");
        s
    }
}
