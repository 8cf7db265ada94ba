//! Fock space vectors `|λ, s⟩` and the action of `e_i`, `f_i`, `k_i`.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::abacus::{from_pair, to_pair};
use crate::combinatorics::{above, addable_nodes, removable_nodes, residue, Charge, MultiPartition, Node};
use crate::error::{Error, Result};
use crate::qint::LaurentPoly;
use crate::wedge::WedgeVector;

/// Formal sum of `|λ, s⟩` with Laurent-polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<(MultiPartition, Charge), LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lambda: MultiPartition, charge: Charge) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, charge, &LaurentPoly::one());
        v
    }

    pub fn add_term(&mut self, lambda: MultiPartition, charge: Charge, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let key = (lambda, charge);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, factor: &LaurentPoly, other: &FockVector) {
        for ((lam, ch), c) in &other.terms {
            self.add_term(lam.clone(), ch.clone(), &(factor * c));
        }
    }

    pub fn coeff(&self, lambda: &MultiPartition, charge: &Charge) -> LaurentPoly {
        self.terms
            .get(&(lambda.clone(), charge.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiPartition, &Charge, &LaurentPoly)> {
        self.terms.iter().map(|((l, c), p)| (l, c, p))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_wedge(v: &WedgeVector, e: u32, l: usize) -> Self {
        let mut out = Self::zero();
        for (u, c) in v.iter() {
            let (lam, ch) = to_pair(u, e, l);
            out.add_term(lam, ch, c);
        }
        out
    }

    pub fn to_wedge(&self, e: u32, l: usize) -> Result<WedgeVector> {
        let mut out = WedgeVector::zero();
        for ((lam, ch), c) in &self.terms {
            out.add_term(from_pair(lam, ch, e, l)?, c);
        }
        Ok(out)
    }
}

impl std::ops::Sub for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(&LaurentPoly::from(-1), rhs);
        out
    }
}

#[derive(Serialize)]
struct Record<'a> {
    multipartition: &'a MultiPartition,
    charge: &'a Charge,
    coefficient: &'a LaurentPoly,
}

impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((lam, ch), c) in &self.terms {
            seq.serialize_element(&Record { multipartition: lam, charge: ch, coefficient: c })?;
        }
        seq.end()
    }
}

/// Signed counts attached to `λ` and residue `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NCounts {
    /// addable minus removable `i`-nodes of `λ`.
    pub n: i64,
    /// For an added node `γ` (`μ = λ ∪ γ`): addable `i`-nodes of `λ` above `γ`
    /// minus removable `i`-nodes of `μ` above `γ`.
    pub above: i64,
    /// The same count below `γ`.
    pub below: i64,
}

pub fn n_i(lambda: &MultiPartition, i: u32, charge: &Charge, e: u32) -> i64 {
    addable_nodes(lambda, i, charge, e).len() as i64 - removable_nodes(lambda, i, charge, e).len() as i64
}

/// `N_i(λ)` together with the above/below counts for adding `gamma`.
pub fn n_counts(lambda: &MultiPartition, gamma: Node, charge: &Charge, e: u32) -> Result<NCounts> {
    let i = residue(gamma, charge, e);
    let add = addable_nodes(lambda, i, charge, e);
    if !add.contains(&gamma) {
        return Err(Error::InvalidInput(format!("{gamma} is not addable to {lambda}")));
    }
    let mu = lambda.with_node_added(gamma)?;
    let rem = removable_nodes(&mu, i, charge, e);
    let count = |v: &[Node], side: &dyn Fn(Node) -> bool| v.iter().filter(|&&x| side(x)).count() as i64;
    let is_above = |x: Node| above(x, gamma, charge);
    let is_below = |x: Node| above(gamma, x, charge);
    Ok(NCounts {
        n: n_i(lambda, i, charge, e),
        above: count(&add, &is_above) - count(&rem, &is_above),
        below: count(&add, &is_below) - count(&rem, &is_below),
    })
}

fn check_color(i: u32, e: u32) -> Result<()> {
    if i >= e {
        return Err(Error::InvalidInput(format!("colour {i} is not in [0, {e})")));
    }
    Ok(())
}

pub fn apply_f(i: u32, v: &FockVector, e: u32) -> Result<FockVector> {
    check_color(i, e)?;
    let mut out = FockVector::zero();
    for (lam, ch, c) in v.iter() {
        for g in addable_nodes(lam, i, ch, e) {
            let nb = n_counts(lam, g, ch, e)?.below;
            out.add_term(lam.with_node_added(g)?, ch.clone(), &c.shift(nb));
        }
    }
    Ok(out)
}

pub fn apply_e(i: u32, v: &FockVector, e: u32) -> Result<FockVector> {
    check_color(i, e)?;
    let mut out = FockVector::zero();
    for (lam, ch, c) in v.iter() {
        for g in removable_nodes(lam, i, ch, e) {
            let mu = lam.with_node_removed(g)?;
            let na = n_counts(&mu, g, ch, e)?.above;
            out.add_term(mu, ch.clone(), &c.shift(-na));
        }
    }
    Ok(out)
}

pub fn apply_k(i: u32, v: &FockVector, e: u32) -> Result<FockVector> {
    check_color(i, e)?;
    let mut out = FockVector::zero();
    for (lam, ch, c) in v.iter() {
        out.add_term(lam.clone(), ch.clone(), &c.shift(n_i(lam, i, ch, e)));
    }
    Ok(out)
}
