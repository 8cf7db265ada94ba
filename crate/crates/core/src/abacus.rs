//! Semi-infinite ordered wedge monomials and their l-abacus reading.
//!
//! An index `k` factors uniquely as `k = a + e(l − b) − e·l·m` with
//! `a ∈ 1..=e`, `b ∈ 1..=l`. The bead sits on runner `b` at runner value
//! `a − e·m`; each runner then encodes one component of a multipartition
//! together with its charge.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Charge, MultiPartition, Partition};
use crate::error::{Error, Result};

/// `u_{k_1} ∧ u_{k_2} ∧ …` with `k_1 > k_2 > …` and `k_i = s − i + 1` for
/// every `i` past the stored prefix. The prefix is kept minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WedgeMonomial {
    #[serde(rename = "s")]
    charge: i64,
    #[serde(rename = "k")]
    prefix: Vec<i64>,
}

impl WedgeMonomial {
    /// Builds the monomial with the given leading indices, trimming any
    /// trailing entries that already agree with the tail.
    pub fn new(charge: i64, mut prefix: Vec<i64>) -> Result<Self> {
        if prefix.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidInput(format!(
                "wedge prefix {prefix:?} is not strictly decreasing"
            )));
        }
        while let Some(&last) = prefix.last() {
            if last == charge - prefix.len() as i64 + 1 {
                prefix.pop();
            } else {
                break;
            }
        }
        if let Some(&last) = prefix.last() {
            let r = prefix.len() as i64;
            if last <= charge - r {
                return Err(Error::InvalidInput(format!(
                    "wedge prefix {prefix:?} collides with the tail of charge {charge}"
                )));
            }
        }
        Ok(Self { charge, prefix })
    }

    /// Builds from an already-ordered `r`-prefix that may contain trailing
    /// tail entries. Used on hot paths where the order is known.
    pub(crate) fn from_ordered_unchecked(charge: i64, mut prefix: Vec<i64>) -> Self {
        while let Some(&last) = prefix.last() {
            if last == charge - prefix.len() as i64 + 1 {
                prefix.pop();
            } else {
                break;
            }
        }
        debug_assert!(prefix.windows(2).all(|w| w[0] > w[1]));
        Self { charge, prefix }
    }

    pub fn vacuum(charge: i64) -> Self {
        Self {
            charge,
            prefix: Vec::new(),
        }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    /// `k_i` for 1-based `i`.
    pub fn index(&self, i: usize) -> i64 {
        if i <= self.prefix.len() {
            self.prefix[i - 1]
        } else {
            self.charge - i as i64 + 1
        }
    }

    /// The first `r` indices (`r` may exceed the stored prefix).
    pub fn leading(&self, r: usize) -> Vec<i64> {
        (1..=r).map(|i| self.index(i)).collect()
    }

    /// `Σ_i (k_i − (s − i + 1))`.
    pub fn degree(&self) -> u64 {
        self.prefix
            .iter()
            .enumerate()
            .map(|(i, k)| (k - (self.charge - i as i64)) as u64)
            .sum()
    }

    pub fn is_vacuum(&self) -> bool {
        self.prefix.is_empty()
    }
}

impl fmt::Display for WedgeMonomial {
    /// `s=<int>; k=<k1,k2,...>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.prefix.iter().map(i64::to_string).collect();
        write!(f, "s={}; k={}", self.charge, ks.join(","))
    }
}

impl FromStr for WedgeMonomial {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `s=<int>; k=<k1,...>`, got {text:?}"));
        let (s_part, k_part) = text.split_once(';').ok_or_else(bad)?;
        let s = s_part
            .trim()
            .strip_prefix("s=")
            .ok_or_else(bad)?
            .trim()
            .parse::<i64>()
            .map_err(|_| bad())?;
        let ks = k_part.trim().strip_prefix("k=").ok_or_else(bad)?.trim();
        let prefix = if ks.is_empty() {
            Vec::new()
        } else {
            ks.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        WedgeMonomial::new(s, prefix)
    }
}

/// The decomposition `k = a + e(l − b) − e·l·m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BeadTriple {
    pub a: i64,
    pub b: i64,
    pub m: i64,
}

impl BeadTriple {
    pub fn index(&self, e: u32, l: usize) -> i64 {
        let (e, l) = (e as i64, l as i64);
        self.a + e * (l - self.b) - e * l * self.m
    }

    /// Position `a − e·m` on runner `b`.
    pub fn runner_value(&self, e: u32) -> i64 {
        self.a - e as i64 * self.m
    }
}

pub fn factorize(k: i64, e: u32, l: usize) -> BeadTriple {
    let (e, l) = (e as i64, l as i64);
    let a = (k - 1).rem_euclid(e) + 1;
    let t = (k - a) / e;
    let lb = t.rem_euclid(l);
    let b = l - lb;
    let m = (lb - t) / l;
    BeadTriple { a, b, m }
}

/// Global index of the bead at runner value `v` on runner `b`.
pub fn runner_to_index(v: i64, b: usize, e: u32, l: usize) -> i64 {
    let ei = e as i64;
    let a = (v - 1).rem_euclid(ei) + 1;
    let m = (a - v) / ei;
    BeadTriple { a, b: b as i64, m }.index(e, l)
}

/// Reads the `(λ, s_l)` label of an ordered monomial.
pub fn to_pair(u: &WedgeMonomial, e: u32, l: usize) -> (MultiPartition, Charge) {
    let r = u.prefix.len();
    let tail_top = u.charge - r as i64; // every index <= tail_top is present
    let mut comps = Vec::with_capacity(l);
    let mut charges = Vec::with_capacity(l);
    for b in 1..=l {
        // highest tail bead on this runner
        let mut k = tail_top;
        while factorize(k, e, l).b != b as i64 {
            k -= 1;
        }
        let top_tail_value = factorize(k, e, l).runner_value(e);
        let free: Vec<i64> = u
            .prefix
            .iter()
            .map(|&k| factorize(k, e, l))
            .filter(|t| t.b == b as i64)
            .map(|t| t.runner_value(e))
            .collect();
        let s_b = top_tail_value + free.len() as i64;
        let mut parts: Vec<usize> = free
            .iter()
            .enumerate()
            .map(|(i, v)| (v - s_b + i as i64) as usize)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        comps.push(Partition::new(parts).expect("runner reading is a partition"));
        charges.push(s_b);
    }
    (
        MultiPartition::new(comps).expect("level >= 1"),
        Charge::new(charges).expect("level >= 1"),
    )
}

/// Inverse of [`to_pair`].
pub fn from_pair(lambda: &MultiPartition, charge: &Charge, e: u32, l: usize) -> Result<WedgeMonomial> {
    if lambda.level() != l || charge.level() != l {
        return Err(Error::InvalidInput(format!(
            "level mismatch: multipartition {lambda} / charge {charge} vs l = {l}"
        )));
    }
    // Below `floor` every index is occupied on every runner.
    let floor = (1..=l)
        .map(|b| {
            let h = lambda.component(b).height() as i64;
            runner_to_index(charge.get(b) - h, b, e, l)
        })
        .min()
        .expect("level >= 1");
    let mut explicit = Vec::new();
    for b in 1..=l {
        let p = lambda.component(b);
        let s_b = charge.get(b);
        let mut i = 1usize;
        loop {
            let v = p.part(i) as i64 + s_b - i as i64 + 1;
            let k = runner_to_index(v, b, e, l);
            if k <= floor {
                break;
            }
            explicit.push(k);
            i += 1;
        }
    }
    explicit.sort_unstable_by(|a, b| b.cmp(a));
    let total = floor + explicit.len() as i64;
    debug_assert_eq!(total, charge.total());
    Ok(WedgeMonomial::from_ordered_unchecked(total, explicit))
}

/// All ordered monomials of total charge `s` and degree `n`, one per
/// partition `γ ⊢ n` via `k_i = s − i + 1 + γ_i`.
pub fn enumerate_degree_component(s: i64, n: usize) -> Vec<WedgeMonomial> {
    Partition::all(n)
        .into_iter()
        .map(|g| {
            let prefix = g
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &gi)| s - i as i64 + gi as i64)
                .collect();
            WedgeMonomial {
                charge: s,
                prefix,
            }
        })
        .collect()
}

/// ASCII l-abacus: one line per runner, runner values descending left to
/// right from `top`, `o` for a bead and `.` for a gap.
pub fn render_abacus(u: &WedgeMonomial, e: u32, l: usize, width: usize) -> String {
    let (_, charge) = to_pair(u, e, l);
    let top = u
        .prefix
        .iter()
        .map(|&k| factorize(k, e, l).runner_value(e))
        .chain(charge.entries().iter().copied())
        .max()
        .unwrap_or(0);
    let present: std::collections::HashSet<(i64, i64)> = u
        .leading(u.prefix.len() + width * l * e as usize)
        .into_iter()
        .map(|k| {
            let t = factorize(k, e, l);
            (t.b, t.runner_value(e))
        })
        .collect();
    let mut out = String::new();
    for b in 1..=l {
        out.push_str(&format!("b={b} s={:>3} | ", charge.get(b)));
        for j in 0..width as i64 {
            let v = top - j;
            out.push(if present.contains(&(b as i64, v)) { 'o' } else { '.' });
        }
        out.push('\n');
    }
    out
}
