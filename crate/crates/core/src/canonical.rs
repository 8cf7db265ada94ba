//! Canonical basis elements by the bar-invariant recursion, and
//! decomposition matrices at `q = 1`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::abacus::{from_pair, to_pair, WedgeMonomial};
use crate::avalue::a_rel;
use crate::combinatorics::{is_split_semisimple, multipartitions, Charge, MultiPartition};
use crate::crystal::uglov_set;
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::qint::LaurentPoly;
use crate::wedge::{BarEngine, WedgeVector};

/// Monomials reachable from a root through bar supports.
#[derive(Clone, Debug)]
pub struct BarDag {
    /// Topological order: every edge goes from an earlier to a later entry.
    pub order: Vec<WedgeMonomial>,
    pub edges: Vec<(usize, usize)>,
}

impl BarDag {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalElement {
    pub label: MultiPartition,
    pub charge: Charge,
    pub expansion: FockVector,
}

/// Computes and caches `G(u)` for one `(e, l)`.
pub struct CanonicalEngine {
    bar: BarEngine,
    cache: HashMap<WedgeMonomial, Arc<WedgeVector>>,
}

impl CanonicalEngine {
    pub fn new(e: u32, l: usize) -> Self {
        Self::from_bar_engine(BarEngine::new(e, l))
    }

    pub fn from_bar_engine(bar: BarEngine) -> Self {
        Self { bar, cache: HashMap::new() }
    }

    pub fn e(&self) -> u32 {
        self.bar.e()
    }

    pub fn l(&self) -> usize {
        self.bar.l()
    }

    pub fn bar_engine(&mut self) -> &mut BarEngine {
        &mut self.bar
    }

    /// Closure of `u0` under bar supports, topologically sorted from `u0`.
    pub fn bar_closure(&mut self, u0: &WedgeMonomial) -> Result<BarDag> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        let mut mark: HashMap<WedgeMonomial, Mark> = HashMap::new();
        let mut post: Vec<WedgeMonomial> = Vec::new();
        let mut succ: HashMap<WedgeMonomial, Vec<WedgeMonomial>> = HashMap::new();
        let mut stack: Vec<(WedgeMonomial, usize)> = vec![(u0.clone(), 0)];
        mark.insert(u0.clone(), Mark::Open);
        while let Some((u, next)) = stack.pop() {
            if !succ.contains_key(&u) {
                let b = self.bar.bar(&u)?;
                succ.insert(u.clone(), b.monomials().filter(|v| *v != &u).cloned().collect());
            }
            let kids = &succ[&u];
            if next < kids.len() {
                let v = kids[next].clone();
                match mark.get(&v) {
                    None => {
                        stack.push((u, next + 1));
                        mark.insert(v.clone(), Mark::Open);
                        stack.push((v, 0));
                    }
                    Some(Mark::Open) => {
                        return Err(Error::BarCycle(format!("{u} -> {v}")));
                    }
                    Some(Mark::Done) => stack.push((u, next + 1)),
                }
            } else {
                mark.insert(u.clone(), Mark::Done);
                post.push(u);
            }
        }
        post.reverse();
        let index: HashMap<&WedgeMonomial, usize> = post.iter().enumerate().map(|(i, u)| (u, i)).collect();
        let mut edges = Vec::new();
        for (i, u) in post.iter().enumerate() {
            for v in &succ[u] {
                edges.push((i, index[v]));
            }
        }
        Ok(BarDag { order: post.clone(), edges })
    }

    /// The bar-invariant `G(u) ∈ u + Σ qZ[q]·v`.
    pub fn canonical_wedge(&mut self, u0: &WedgeMonomial) -> Result<Arc<WedgeVector>> {
        if let Some(g) = self.cache.get(u0) {
            return Ok(g.clone());
        }
        let dag = self.bar_closure(u0)?;
        let pos: HashMap<WedgeMonomial, usize> =
            dag.order.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
        for v in dag.order.iter().rev() {
            if self.cache.contains_key(v) {
                continue;
            }
            let mut d = (*self.bar.bar(v)?).clone();
            d.add_term(v.clone(), &LaurentPoly::from(-1));
            let mut g = WedgeVector::basis(v.clone());
            // peel off the topologically earliest monomial each round
            let mut pending: BTreeMap<usize, WedgeMonomial> =
                d.monomials().map(|m| (pos[m], m.clone())).collect();
            while let Some((_, alpha)) = pending.pop_first() {
                let gamma = d.coeff(&alpha);
                if gamma.is_zero() {
                    continue;
                }
                if gamma.bar() != -&gamma {
                    return Err(Error::NotAntisymmetric(format!(
                        "coefficient {gamma} of {alpha} in bar({v}) - {v}"
                    )));
                }
                let beta = gamma.truncate_positive()?;
                let ga = self
                    .cache
                    .get(&alpha)
                    .cloned()
                    .ok_or_else(|| Error::Invariant(format!("{alpha} was not processed before {v}")))?;
                d.add_scaled(&-&gamma, &ga);
                g.add_scaled(&beta, &ga);
                for m in ga.monomials() {
                    if m != &alpha {
                        pending.insert(pos[m], m.clone());
                    }
                }
            }
            self.cache.insert(v.clone(), Arc::new(g));
        }
        Ok(self.cache[u0].clone())
    }

    pub fn canonical_element(&mut self, mu: &MultiPartition, charge: &Charge) -> Result<CanonicalElement> {
        let u = from_pair(mu, charge, self.e(), self.l())?;
        let g = self.canonical_wedge(&u)?;
        Ok(CanonicalElement {
            label: mu.clone(),
            charge: charge.clone(),
            expansion: FockVector::from_wedge(&g, self.e(), self.l()),
        })
    }
}

/// A coefficient of an Uglov column sitting on a different charge.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCharge {
    pub column: MultiPartition,
    pub label: MultiPartition,
    pub charge: Charge,
    pub coefficient: LaurentPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionMatrix {
    pub e: u32,
    pub l: usize,
    pub charge: Charge,
    pub rank: usize,
    /// Rows sorted by `(a_rel, text)`.
    pub rows: Vec<MultiPartition>,
    /// a-values shifted so that the first row has 0.
    pub row_a: Vec<i64>,
    /// Columns sorted the same way.
    pub columns: Vec<MultiPartition>,
    /// `entries[row][column]`.
    pub entries: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_entries: Option<Vec<Vec<LaurentPoly>>>,
    pub cross_charge: Vec<CrossCharge>,
    pub semisimple: bool,
}

fn sort_by_a(labels: impl IntoIterator<Item = MultiPartition>, e: u32, charge: &Charge, h: usize) -> Result<Vec<(i64, MultiPartition)>> {
    let mut v = labels
        .into_iter()
        .map(|x| Ok((a_rel(&x, e, charge, h)?, x)))
        .collect::<Result<Vec<_>>>()?;
    v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.to_string().cmp(&b.1.to_string())));
    Ok(v)
}

/// Columns are `G(μ)` at `q = 1` for Uglov `μ`, restricted to `charge`.
pub fn decomposition_matrix(
    engine: &mut CanonicalEngine,
    charge: &Charge,
    n: usize,
    keep_q: bool,
) -> Result<DecompositionMatrix> {
    let (e, l) = (engine.e(), engine.l());
    let all = multipartitions(l, n);
    let h = all.iter().map(|x| x.height()).max().unwrap_or(0).max(1);
    let rows = sort_by_a(all, e, charge, h)?;
    let columns = sort_by_a(uglov_set(e, l, charge, n)?, e, charge, h)?;
    let row_index: HashMap<&MultiPartition, usize> = rows.iter().enumerate().map(|(i, r)| (&r.1, i)).collect();
    let mut entries = vec![vec![0i64; columns.len()]; rows.len()];
    let mut q_entries = vec![vec![LaurentPoly::zero(); columns.len()]; rows.len()];
    let mut cross_charge = Vec::new();
    for (j, (_, mu)) in columns.iter().enumerate() {
        let g = engine.canonical_wedge(&from_pair(mu, charge, e, l)?)?;
        for (u, c) in g.iter() {
            let (lam, ch) = to_pair(u, e, l);
            if &ch != charge {
                cross_charge.push(CrossCharge {
                    column: mu.clone(),
                    label: lam,
                    charge: ch,
                    coefficient: c.clone(),
                });
                continue;
            }
            let i = *row_index
                .get(&lam)
                .ok_or_else(|| Error::Invariant(format!("G({mu}) has support on {lam} of another rank")))?;
            entries[i][j] = c
                .eval_one()
                .to_i64()
                .ok_or_else(|| Error::Invariant(format!("entry at ({lam}, {mu}) overflows")))?;
            q_entries[i][j] = c.clone();
        }
    }
    Ok(DecompositionMatrix {
        e,
        l,
        charge: charge.clone(),
        rank: n,
        row_a: rows.iter().map(|r| r.0 - rows.first().map_or(0, |f| f.0)).collect(),
        rows: rows.into_iter().map(|r| r.1).collect(),
        columns: columns.into_iter().map(|c| c.1).collect(),
        entries,
        q_entries: keep_q.then_some(q_entries),
        cross_charge,
        semisimple: is_split_semisimple(e, charge, n),
    })
}

impl DecompositionMatrix {
    /// Nonzero entries as `(row, column, entry)`.
    pub fn triples(&self) -> BTreeSet<(MultiPartition, MultiPartition, i64)> {
        let mut out = BTreeSet::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in self.columns.iter().enumerate() {
                if self.entries[i][j] != 0 {
                    out.insert((r.clone(), c.clone(), self.entries[i][j]));
                }
            }
        }
        out
    }

    /// Column vectors keyed by row label, without their column labels.
    pub fn column_vectors(&self) -> BTreeSet<BTreeMap<MultiPartition, i64>> {
        (0..self.columns.len())
            .map(|j| {
                self.rows
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| self.entries[*i][j] != 0)
                    .map(|(i, r)| (r.clone(), self.entries[i][j]))
                    .collect()
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let _ = w.write_record(["row", "column", "entry"]);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in self.columns.iter().enumerate() {
                let _ = w.write_record([r.to_string(), c.to_string(), self.entries[i][j].to_string()]);
            }
        }
        String::from_utf8(w.into_inner().unwrap_or_default()).unwrap_or_default()
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        let cols = "c".repeat(self.columns.len());
        let _ = writeln!(s, "\\begin{{array}}{{cc|{cols}}}");
        for (i, r) in self.rows.iter().enumerate() {
            let cells: Vec<String> = self.entries[i]
                .iter()
                .map(|&x| if x == 0 { ".".to_string() } else { x.to_string() })
                .collect();
            let _ = writeln!(s, "  {} & {} & {} \\\\", latex_label(r), self.row_a[i], cells.join(" & "));
        }
        s.push_str("\\end{array}\n");
        s
    }
}

fn latex_label(m: &MultiPartition) -> String {
    let comps: Vec<String> = m
        .components()
        .iter()
        .map(|p| {
            if p.is_empty() {
                "\\emptyset".to_string()
            } else {
                let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    format!("({})", comps.join(","))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub column: MultiPartition,
    pub row: Option<MultiPartition>,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangularityReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Each column must have a unique a-minimal support row, equal to its
/// label, carrying entry 1; distinct columns need distinct minimal rows.
pub fn verify_unitriangular(m: &DecompositionMatrix) -> TriangularityReport {
    let mut violations = Vec::new();
    let mut seen: HashMap<usize, usize> = HashMap::new();
    for (j, col) in m.columns.iter().enumerate() {
        let support: Vec<usize> = (0..m.rows.len()).filter(|&i| m.entries[i][j] != 0).collect();
        for &i in &support {
            if m.entries[i][j] < 0 {
                violations.push(Violation {
                    column: col.clone(),
                    row: Some(m.rows[i].clone()),
                    reason: format!("negative entry {}", m.entries[i][j]),
                });
            }
        }
        let Some(&low) = support.iter().min_by_key(|&&i| m.row_a[i]) else {
            violations.push(Violation { column: col.clone(), row: None, reason: "empty column".into() });
            continue;
        };
        let ties: Vec<usize> = support.iter().copied().filter(|&i| m.row_a[i] == m.row_a[low]).collect();
        if ties.len() > 1 {
            violations.push(Violation {
                column: col.clone(),
                row: Some(m.rows[ties[1]].clone()),
                reason: "several support rows share the least a-value".into(),
            });
        }
        if &m.rows[low] != col {
            violations.push(Violation {
                column: col.clone(),
                row: Some(m.rows[low].clone()),
                reason: "least-a support row is not the column label".into(),
            });
        }
        if m.entries[low][j] != 1 {
            violations.push(Violation {
                column: col.clone(),
                row: Some(m.rows[low].clone()),
                reason: format!("diagonal entry is {}", m.entries[low][j]),
            });
        }
        if let Some(&other) = seen.get(&low) {
            violations.push(Violation {
                column: col.clone(),
                row: Some(m.rows[low].clone()),
                reason: format!("same least-a row as column {}", m.columns[other]),
            });
        }
        seen.insert(low, j);
    }
    TriangularityReport { ok: violations.is_empty(), violations }
}
