//! Partitions, multipartitions, nodes and residues.
//!
//! Nodes are addressed 1-based as `(row, column, component)`. A node `γ` is
//! *above* `γ'` when its content `col − row + s_c` is smaller, ties broken in
//! favour of the larger component index.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `row` (1-based); zero past the end.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Number of partitions of each `k ≤ n`, by Euler's recurrence.
pub fn partition_counts(n: usize) -> Vec<u128> {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for k in 1..=n {
        let mut total: i128 = 0;
        let mut j: i64 = 1;
        loop {
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > k {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            total += sign * p[k - g1] as i128;
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= k {
                total += sign * p[k - g2] as i128;
            }
            j += 1;
        }
        p[k] = total as u128;
    }
    p
}

/// An l-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("a multipartition needs at least one component".into()));
        }
        Ok(Self(components))
    }

    pub fn from_parts(parts: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(parts.into_iter().map(Partition::new).collect::<Result<_>>()?)
    }

    pub fn empty(level: usize) -> Self {
        Self(vec![Partition::empty(); level.max(1)])
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// Component `c` (1-based).
    pub fn component(&self, c: usize) -> &Partition {
        &self.0[c - 1]
    }

    pub fn height(&self) -> usize {
        self.0.iter().map(Partition::height).max().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && node.row >= 1
            && node.col >= 1
            && node.col <= self.component(node.comp).part(node.row)
    }

    pub fn with_node_added(&self, node: Node) -> Result<Self> {
        let mut parts: Vec<Vec<usize>> = self.0.iter().map(|p| p.0.clone()).collect();
        let comp = parts
            .get_mut(node.comp.wrapping_sub(1))
            .ok_or_else(|| Error::InvalidInput(format!("no component {}", node.comp)))?;
        if node.row == comp.len() + 1 && node.col == 1 {
            comp.push(1);
        } else if node.row >= 1 && node.row <= comp.len() && comp[node.row - 1] + 1 == node.col {
            comp[node.row - 1] += 1;
        } else {
            return Err(Error::InvalidInput(format!("{node} is not addable")));
        }
        Self::from_parts(parts)
    }

    pub fn with_node_removed(&self, node: Node) -> Result<Self> {
        let mut parts: Vec<Vec<usize>> = self.0.iter().map(|p| p.0.clone()).collect();
        let comp = parts
            .get_mut(node.comp.wrapping_sub(1))
            .ok_or_else(|| Error::InvalidInput(format!("no component {}", node.comp)))?;
        if node.row == 0 || node.row > comp.len() || comp[node.row - 1] != node.col {
            return Err(Error::InvalidInput(format!("{node} is not removable")));
        }
        comp[node.row - 1] -= 1;
        if comp[node.row - 1] == 0 {
            comp.pop();
        }
        Self::from_parts(parts)
    }

    /// Every node of the diagram.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0.iter().enumerate().flat_map(|(c, p)| {
            p.0.iter().enumerate().flat_map(move |(r, &len)| {
                (1..=len).map(move |col| Node::new(r + 1, col, c + 1))
            })
        })
    }

    pub fn to_composition(&self) -> MultiComposition {
        MultiComposition(self.0.iter().map(|p| p.0.clone()).collect())
    }
}

impl fmt::Display for MultiPartition {
    /// `6,1|2,2|4,1`; an empty component prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            if p.is_empty() {
                f.write_str("-")?;
            } else {
                let parts: Vec<String> = p.0.iter().map(usize::to_string).collect();
                f.write_str(&parts.join(","))?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .trim()
            .split('|')
            .map(|c| {
                let c = c.trim();
                if c == "-" || c.is_empty() {
                    return Ok(Partition::empty());
                }
                let parts = c
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Partition::new(parts)
            })
            .collect::<Result<Vec<_>>>()?;
        MultiPartition::new(comps)
    }
}

impl From<MultiPartition> for String {
    fn from(m: MultiPartition) -> String {
        m.to_string()
    }
}

impl TryFrom<String> for MultiPartition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// An l-tuple of finite sequences of non-negative parts, with no monotonicity
/// requirement. Zero parts are allowed so that a row below the last nonzero
/// one can be addressed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiComposition(Vec<Vec<usize>>);

impl MultiComposition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("a multicomposition needs at least one component".into()));
        }
        Ok(Self(components))
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().flatten().sum()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.0
    }

    /// Row of the last nonzero part, over all components.
    pub fn height(&self) -> usize {
        self.0
            .iter()
            .map(|c| c.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0)
    }

    /// Part `row` (1-based) of component `comp` (1-based); zero past the end.
    pub fn part(&self, comp: usize, row: usize) -> usize {
        self.0
            .get(comp.wrapping_sub(1))
            .and_then(|c| c.get(row.wrapping_sub(1)))
            .copied()
            .unwrap_or(0)
    }

    /// Grows part `row` of component `comp` by `r`. Rows past the current
    /// length are created as zero parts first.
    pub fn add_nodes_to_part(&self, comp: usize, row: usize, r: usize) -> Result<Self> {
        if comp == 0 || comp > self.level() {
            return Err(Error::InvalidInput(format!(
                "component {comp} out of range 1..={}",
                self.level()
            )));
        }
        if row == 0 {
            return Err(Error::InvalidInput("rows are 1-based".into()));
        }
        let mut out = self.clone();
        let c = &mut out.0[comp - 1];
        if c.len() < row {
            c.resize(row, 0);
        }
        c[row - 1] += r;
        Ok(out)
    }

    /// The multipartition with the same parts, if every component is a
    /// partition (trailing zeros ignored).
    pub fn to_multipartition(&self) -> Option<MultiPartition> {
        let comps = self
            .0
            .iter()
            .map(|c| {
                let trimmed: Vec<usize> = match c.iter().rposition(|&x| x > 0) {
                    Some(p) => c[..=p].to_vec(),
                    None => Vec::new(),
                };
                Partition::new(trimmed).ok()
            })
            .collect::<Option<Vec<_>>>()?;
        MultiPartition::new(comps).ok()
    }
}

impl fmt::Display for MultiComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            if c.is_empty() {
                f.write_str("-")?;
            } else {
                let parts: Vec<String> = c.iter().map(usize::to_string).collect();
                f.write_str(&parts.join(","))?;
            }
        }
        Ok(())
    }
}

/// Free function form of [`MultiComposition::add_nodes_to_part`].
pub fn add_nodes_to_part(
    lambda: &MultiComposition,
    comp: usize,
    row: usize,
    r: usize,
) -> Result<MultiComposition> {
    lambda.add_nodes_to_part(comp, row, r)
}

/// Integer charges `(s_1, …, s_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<i64>", try_from = "Vec<i64>")]
pub struct Charge(Vec<i64>);

impl Charge {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("a charge needs at least one entry".into()));
        }
        Ok(Self(entries))
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `s_c` for a 1-based component index.
    pub fn get(&self, c: usize) -> i64 {
        self.0[c - 1]
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn shifted(&self, by: i64) -> Self {
        Self(self.0.iter().map(|s| s + by).collect())
    }
}

impl TryFrom<Vec<i64>> for Charge {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Charge::new(v)
    }
}

impl From<Charge> for Vec<i64> {
    fn from(c: Charge) -> Self {
        c.0
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Charge {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad charge entry {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Charge::new(v)
    }
}

/// A box `(row, col, comp)` of a multipartition diagram, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Self { row, col, comp }
    }

    /// `col − row + s_comp`.
    pub fn content(&self, charge: &Charge) -> i64 {
        self.col as i64 - self.row as i64 + charge.get(self.comp)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

pub fn residue(node: Node, charge: &Charge, e: u32) -> u32 {
    node.content(charge).rem_euclid(e as i64) as u32
}

/// Whether `g` is above `h`.
pub fn above(g: Node, h: Node, charge: &Charge) -> bool {
    let (cg, ch) = (g.content(charge), h.content(charge));
    cg < ch || (cg == ch && h.comp < g.comp)
}

/// Total order on nodes placing the most-above node first.
pub fn cmp_above_first(g: &Node, h: &Node, charge: &Charge) -> Ordering {
    g.content(charge)
        .cmp(&h.content(charge))
        .then(h.comp.cmp(&g.comp))
        .then(g.row.cmp(&h.row))
}

/// Addable nodes of every residue.
pub fn all_addable(lambda: &MultiPartition) -> Vec<Node> {
    let mut out = Vec::new();
    for (c, p) in lambda.components().iter().enumerate() {
        let parts = p.parts();
        for row in 1..=parts.len() + 1 {
            let len = p.part(row);
            if row == 1 || p.part(row - 1) > len {
                out.push(Node::new(row, len + 1, c + 1));
            }
        }
    }
    out
}

/// Removable nodes of every residue.
pub fn all_removable(lambda: &MultiPartition) -> Vec<Node> {
    let mut out = Vec::new();
    for (c, p) in lambda.components().iter().enumerate() {
        let parts = p.parts();
        for row in 1..=parts.len() {
            let len = parts[row - 1];
            if p.part(row + 1) < len {
                out.push(Node::new(row, len, c + 1));
            }
        }
    }
    out
}

fn filter_sorted(nodes: Vec<Node>, i: u32, charge: &Charge, e: u32) -> Vec<Node> {
    let mut v: Vec<Node> = nodes.into_iter().filter(|n| residue(*n, charge, e) == i).collect();
    v.sort_by(|a, b| cmp_above_first(a, b, charge));
    v
}

/// Addable `i`-nodes of `lambda`, most-above first.
pub fn addable_nodes(lambda: &MultiPartition, i: u32, charge: &Charge, e: u32) -> Vec<Node> {
    filter_sorted(all_addable(lambda), i, charge, e)
}

/// Removable `i`-nodes of `lambda`, most-above first.
pub fn removable_nodes(lambda: &MultiPartition, i: u32, charge: &Charge, e: u32) -> Vec<Node> {
    filter_sorted(all_removable(lambda), i, charge, e)
}

/// All l-partitions of rank `n`, sorted lexicographically on the component
/// sequence (each component compared as its list of parts).
pub fn multipartitions(l: usize, n: usize) -> Vec<MultiPartition> {
    let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let mut out = Vec::new();
    let mut cur: Vec<Partition> = Vec::with_capacity(l);
    fn rec(
        l: usize,
        rem: usize,
        by_size: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<MultiPartition>,
    ) {
        if cur.len() + 1 == l {
            for p in &by_size[rem] {
                cur.push(p.clone());
                out.push(MultiPartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for k in 0..=rem {
            for p in &by_size[k] {
                cur.push(p.clone());
                rec(l, rem - k, by_size, cur, out);
                cur.pop();
            }
        }
    }
    if l == 0 {
        return out;
    }
    rec(l, n, &by_size, &mut cur, &mut out);
    out.sort();
    out
}

/// Semisimplicity at `v = η_e`, `x_j = η_e^{s_j}`: requires `e > n` and
/// `d + s_i ≢ s_j (mod e)` for all `i ≠ j` and `|d| < n`.
pub fn is_split_semisimple(e: u32, charge: &Charge, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    if (e as usize) <= n {
        return false;
    }
    let e = e as i64;
    let s = charge.entries();
    let n = n as i64;
    for (i, si) in s.iter().enumerate() {
        for (j, sj) in s.iter().enumerate() {
            if i == j {
                continue;
            }
            for d in (1 - n)..n {
                if (d + si - sj).rem_euclid(e) == 0 {
                    return false;
                }
            }
        }
    }
    true
}
