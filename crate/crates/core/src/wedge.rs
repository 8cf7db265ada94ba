//! q-wedge straightening and the bar involution on semi-infinite wedges.
//!
//! Finite wedges are plain index tuples. [`Straightener`] rewrites an arbitrary
//! tuple into a combination of strictly decreasing tuples by inserting factors
//! one at a time into an already-ordered tail, memoising every insertion.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::abacus::{factorize, WedgeMonomial};
use crate::error::{Error, Result};
use crate::qint::LaurentPoly;

/// Default limit on pair rewrites per [`Straightener`].
pub const DEFAULT_FUEL: u64 = 2_000_000_000;

/// `(q^{2m+1} + q^{-2m-1}) / (q + q^{-1})`.
fn odd_ratio(m: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..=2 * m).map(|j| (2 * m - 2 * j, if j % 2 == 0 { 1 } else { -1 })))
}

/// `(q^{2m} − q^{-2m}) / (q + q^{-1})`.
fn even_ratio(m: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        (0..2 * m).map(|j| (2 * m - 1 - 2 * j, if j % 2 == 0 { 1 } else { -1 })),
    )
}

/// Expansion of `u_{k1} ∧ u_{k2}` in ordered pairs `(x, y)`, `x > y`.
///
/// Ordered input passes through unchanged; `k1 == k2` gives the empty sum.
pub fn straighten_pair(k1: i64, k2: i64, e: u32, l: usize) -> Vec<((i64, i64), LaurentPoly)> {
    if k1 > k2 {
        return vec![((k1, k2), LaurentPoly::one())];
    }
    if k1 == k2 {
        return Vec::new();
    }
    let el = e as i64 * l as i64;
    let t1 = factorize(k1, e, l);
    let t2 = factorize(k2, e, l);
    let alpha = (t2.a - t1.a).rem_euclid(el);
    let beta = (e as i64 * (t1.b - t2.b)).rem_euclid(el);

    let mut out: BTreeMap<(i64, i64), LaurentPoly> = BTreeMap::new();
    fn push(out: &mut BTreeMap<(i64, i64), LaurentPoly>, x: i64, y: i64, c: &LaurentPoly) {
        *out.entry((x, y)).or_default() += c;
    }
    // Σ_{m ≥ m0} coef(m) u_{k2 − shift − el·m} ∧ u_{k1 + shift + el·m}, while ordered
    let series = |out: &mut BTreeMap<(i64, i64), LaurentPoly>,
                  shift: i64,
                  m0: i64,
                  coef: &dyn Fn(i64) -> LaurentPoly| {
        let mut m = m0;
        loop {
            let x = k2 - shift - el * m;
            let y = k1 + shift + el * m;
            if x <= y {
                break;
            }
            push(out, x, y, &coef(m));
            m += 1;
        }
    };
    let q_minus_qinv = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let qm2_minus_1 = LaurentPoly::from_terms([(-2, 1), (0, -1)]);
    let q2_minus_1 = LaurentPoly::from_terms([(2, 1), (0, -1)]);

    match (alpha == 0, beta == 0) {
        (true, true) => {
            push(&mut out, k2, k1, &LaurentPoly::monomial(-1, 0));
        }
        (false, true) => {
            push(&mut out, k2, k1, &LaurentPoly::monomial(-1, -1));
            series(&mut out, alpha, 0, &|m| qm2_minus_1.shift(-2 * m));
            series(&mut out, 0, 1, &|m| -qm2_minus_1.shift(-2 * m + 1));
        }
        (true, false) => {
            push(&mut out, k2, k1, &LaurentPoly::q_pow(1));
            series(&mut out, beta, 0, &|m| q2_minus_1.shift(2 * m));
            series(&mut out, 0, 1, &|m| q2_minus_1.shift(2 * m - 1));
        }
        (false, false) => {
            push(&mut out, k2, k1, &LaurentPoly::one());
            series(&mut out, beta, 0, &|m| &q_minus_qinv * &odd_ratio(m));
            series(&mut out, alpha, 0, &|m| &q_minus_qinv * &odd_ratio(m));
            series(&mut out, alpha + beta, 0, &|m| &q_minus_qinv * &even_ratio(m + 1));
            series(&mut out, 0, 1, &|m| &q_minus_qinv * &even_ratio(m));
        }
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// A linear combination of ordered finite wedges.
pub type Combination = Vec<(Vec<i64>, LaurentPoly)>;

type InsertCache = HashMap<(i64, Vec<i64>), Arc<Combination>>;
type PairExpansion = Vec<((i64, i64), LaurentPoly)>;

fn accumulate(acc: &mut HashMap<Vec<i64>, LaurentPoly>, key: Vec<i64>, factor: &LaurentPoly, c: &LaurentPoly) {
    let slot = acc.entry(key).or_default();
    slot.add_scaled(factor, c);
}

fn finish(acc: HashMap<Vec<i64>, LaurentPoly>) -> Combination {
    let mut v: Combination = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| b.0.cmp(&a.0));
    v
}

/// Insertion-based straightening engine for one `(e, l)`.
///
/// Insertions are memoised modulo the shift `k ↦ k + e·l`, which commutes
/// with every rule.
pub struct Straightener {
    e: u32,
    l: usize,
    el: i64,
    cache: Option<InsertCache>,
    pair_cache: HashMap<(i64, i64), Arc<PairExpansion>>,
    fuel: u64,
    spent: u64,
}

impl Straightener {
    pub fn new(e: u32, l: usize) -> Self {
        Self {
            e,
            l,
            el: e as i64 * l as i64,
            cache: Some(HashMap::new()),
            pair_cache: HashMap::new(),
            fuel: DEFAULT_FUEL,
            spent: 0,
        }
    }

    /// Same engine with the insertion memo disabled.
    pub fn uncached(e: u32, l: usize) -> Self {
        Self {
            cache: None,
            ..Self::new(e, l)
        }
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn rewrites(&self) -> u64 {
        self.spent
    }

    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, HashMap::len)
    }

    fn pair(&mut self, k1: i64, k2: i64) -> Result<Arc<PairExpansion>> {
        self.spent += 1;
        if self.spent > self.fuel {
            return Err(Error::FuelExhausted(self.fuel));
        }
        let base = k1.div_euclid(self.el) * self.el;
        let key = (k1 - base, k2 - base);
        if let Some(hit) = self.pair_cache.get(&key) {
            if base == 0 {
                return Ok(hit.clone());
            }
            return Ok(Arc::new(
                hit.iter()
                    .map(|((x, y), c)| ((x + base, y + base), c.clone()))
                    .collect(),
            ));
        }
        let rel = Arc::new(straighten_pair(key.0, key.1, self.e, self.l));
        self.pair_cache.insert(key, rel.clone());
        if base == 0 {
            Ok(rel)
        } else {
            Ok(Arc::new(
                rel.iter()
                    .map(|((x, y), c)| ((x + base, y + base), c.clone()))
                    .collect(),
            ))
        }
    }

    /// Straightens `u_j ∧ w` for an ordered tuple `w`.
    pub fn insert(&mut self, j: i64, w: &[i64]) -> Result<Arc<Combination>> {
        if w.first().is_none_or(|&w0| j > w0) {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(j);
            v.extend_from_slice(w);
            return Ok(Arc::new(vec![(v, LaurentPoly::one())]));
        }
        if w[0] == j {
            return Ok(Arc::new(Vec::new()));
        }
        let base = j.div_euclid(self.el) * self.el;
        let key = (j - base, w.iter().map(|k| k - base).collect::<Vec<_>>());
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get(&key)) {
            return Ok(shift_comb(hit, base));
        }
        let rel = self.insert_uncached(key.0, &key.1)?;
        let rel = Arc::new(rel);
        if let Some(c) = self.cache.as_mut() {
            c.insert(key, rel.clone());
        }
        Ok(shift_comb(&rel, base))
    }

    fn insert_uncached(&mut self, j: i64, w: &[i64]) -> Result<Combination> {
        let pairs = self.pair(j, w[0])?;
        let mut acc: HashMap<Vec<i64>, LaurentPoly> = HashMap::new();
        for ((x, y), c) in pairs.iter() {
            let rest = self.insert(*y, &w[1..])?;
            for (v, d) in rest.iter() {
                let cd = c * d;
                let head = self.insert(*x, v)?;
                for (z, f) in head.iter() {
                    accumulate(&mut acc, z.clone(), &cd, f);
                }
            }
        }
        Ok(finish(acc))
    }

    /// Straightens an arbitrary finite wedge `u_{w_1} ∧ … ∧ u_{w_r}`.
    pub fn straighten(&mut self, w: &[i64]) -> Result<Combination> {
        let Some((&last, init)) = w.split_last() else {
            return Ok(vec![(Vec::new(), LaurentPoly::one())]);
        };
        let mut comb: Combination = vec![(vec![last], LaurentPoly::one())];
        for &j in init.iter().rev() {
            let mut acc: HashMap<Vec<i64>, LaurentPoly> = HashMap::new();
            for (v, c) in &comb {
                let ins = self.insert(j, v)?;
                for (z, f) in ins.iter() {
                    accumulate(&mut acc, z.clone(), c, f);
                }
            }
            comb = finish(acc);
        }
        Ok(comb)
    }
}

fn shift_comb(c: &Arc<Combination>, by: i64) -> Arc<Combination> {
    if by == 0 {
        return c.clone();
    }
    Arc::new(
        c.iter()
            .map(|(v, p)| (v.iter().map(|k| k + by).collect(), p.clone()))
            .collect(),
    )
}

/// Finite formal sum of ordered semi-infinite monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WedgeVector {
    terms: BTreeMap<WedgeMonomial, LaurentPoly>,
}

impl WedgeVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(u: WedgeMonomial) -> Self {
        let mut v = Self::zero();
        v.add_term(u, &LaurentPoly::one());
        v
    }

    pub fn add_term(&mut self, u: WedgeMonomial, c: &LaurentPoly) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(u) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, factor: &LaurentPoly, other: &WedgeVector) {
        for (u, c) in &other.terms {
            self.add_term(u.clone(), &(factor * c));
        }
    }

    pub fn scale(&self, factor: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(factor, self);
        out
    }

    pub fn coeff(&self, u: &WedgeMonomial) -> LaurentPoly {
        self.terms.get(u).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WedgeMonomial, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &WedgeMonomial> {
        self.terms.keys()
    }

    /// `Some((charge, degree))` when every term shares both.
    pub fn homogeneity(&self) -> Option<(i64, u64)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let key = (first.charge(), first.degree());
        it.all(|u| (u.charge(), u.degree()) == key).then_some(key)
    }
}

impl std::ops::Sub for &WedgeVector {
    type Output = WedgeVector;
    fn sub(self, rhs: &WedgeVector) -> WedgeVector {
        let mut out = self.clone();
        out.add_scaled(&LaurentPoly::monomial(-1, 0), rhs);
        out
    }
}

impl std::ops::Add for &WedgeVector {
    type Output = WedgeVector;
    fn add(self, rhs: &WedgeVector) -> WedgeVector {
        let mut out = self.clone();
        out.add_scaled(&LaurentPoly::one(), rhs);
        out
    }
}

impl Serialize for WedgeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            monomial: &'a WedgeMonomial,
            coefficient: &'a LaurentPoly,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (monomial, coefficient) in &self.terms {
            seq.serialize_element(&Record {
                monomial,
                coefficient,
            })?;
        }
        seq.end()
    }
}

/// `ω` and `ω'`: pairs `i < j` among `ks` with equal `a`, resp. equal `b`.
pub fn omega_counts(ks: &[i64], e: u32, l: usize) -> (u64, u64) {
    let triples: Vec<_> = ks.iter().map(|&k| factorize(k, e, l)).collect();
    let mut by_a: HashMap<i64, u64> = HashMap::new();
    let mut by_b: HashMap<i64, u64> = HashMap::new();
    for t in &triples {
        *by_a.entry(t.a).or_default() += 1;
        *by_b.entry(t.b).or_default() += 1;
    }
    let pairs = |n: &u64| n * n.saturating_sub(1) / 2;
    (by_a.values().map(pairs).sum(), by_b.values().map(pairs).sum())
}

/// Bar involution on semi-infinite monomials, with a per-engine memo.
pub struct BarEngine {
    straightener: Straightener,
    cache: Option<HashMap<WedgeMonomial, Arc<WedgeVector>>>,
}

impl BarEngine {
    pub fn new(e: u32, l: usize) -> Self {
        Self {
            straightener: Straightener::new(e, l),
            cache: Some(HashMap::new()),
        }
    }

    /// No memoisation at any level.
    pub fn uncached(e: u32, l: usize) -> Self {
        Self {
            straightener: Straightener::uncached(e, l),
            cache: None,
        }
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.straightener = self.straightener.with_fuel(fuel);
        self
    }

    pub fn e(&self) -> u32 {
        self.straightener.e
    }

    pub fn l(&self) -> usize {
        self.straightener.l
    }

    pub fn straightener(&mut self) -> &mut Straightener {
        &mut self.straightener
    }

    /// The smallest admissible number of reversed factors: `max(prefix, degree)`.
    pub fn default_r(u: &WedgeMonomial) -> usize {
        (u.degree() as usize).max(u.prefix().len())
    }

    pub fn bar(&mut self, u: &WedgeMonomial) -> Result<Arc<WedgeVector>> {
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get(u)) {
            return Ok(hit.clone());
        }
        let v = Arc::new(self.bar_with_r(u, Self::default_r(u))?);
        if let Some(c) = self.cache.as_mut() {
            c.insert(u.clone(), v.clone());
        }
        Ok(v)
    }

    /// `(−q)^{ω'} q^{−ω} · u_{k_r} ∧ … ∧ u_{k_1} ∧ u_{k_{r+1}} ∧ …`, straightened.
    pub fn bar_with_r(&mut self, u: &WedgeMonomial, r: usize) -> Result<WedgeVector> {
        if r < u.prefix().len() {
            return Err(Error::InvalidInput(format!(
                "r = {r} is shorter than the prefix of {u}"
            )));
        }
        let lead = u.leading(r);
        let (omega, omega_p) = omega_counts(&lead, self.e(), self.l());
        let sign = if omega_p % 2 == 0 { 1 } else { -1 };
        let prefactor = LaurentPoly::monomial(sign, omega_p as i64 - omega as i64);
        let reversed: Vec<i64> = lead.iter().rev().copied().collect();
        let comb = self.straightener.straighten(&reversed)?;
        let tail_top = u.charge() - r as i64;
        let mut out = WedgeVector::zero();
        for (ks, c) in comb {
            if ks.last().is_some_and(|&k| k <= tail_top) {
                // repeats a tail bead
                continue;
            }
            let m = WedgeMonomial::from_ordered_unchecked(u.charge(), ks);
            out.add_term(m, &(&prefactor * &c));
        }
        Ok(out)
    }

    /// Semilinear extension: `Σ bar(c_u) · bar(u)`.
    pub fn bar_vector(&mut self, v: &WedgeVector) -> Result<WedgeVector> {
        let mut out = WedgeVector::zero();
        for (u, c) in v.iter() {
            let bu = self.bar(u)?;
            out.add_scaled(&c.bar(), &bu);
        }
        Ok(out)
    }
}
