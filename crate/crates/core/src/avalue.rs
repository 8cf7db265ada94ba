//! m-vectors, translated symbols and relative a-values.
//!
//! `a_rel` is the a-value up to an additive constant that depends only on
//! `(e, charge, rank, height)`, so it can be compared between multipartitions
//! of equal rank at equal symbol height.

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{Charge, MultiComposition, MultiPartition};
use crate::error::{Error, Result};

/// `m^(j) = s_j − (j−1)e/l + αe` with the least `α ≥ 0` making all entries
/// nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVector {
    pub entries: Vec<Rational64>,
    pub alpha: i64,
}

impl MVector {
    /// Integer entries, or an error if some entry is fractional.
    pub fn integral(&self) -> Result<Vec<i64>> {
        self.entries
            .iter()
            .map(|m| {
                if m.is_integer() {
                    Ok(m.to_integer())
                } else {
                    Err(Error::UnsupportedRegime(format!("m-vector entry {m} is not an integer")))
                }
            })
            .collect()
    }
}

pub fn m_vector(e: u32, l: usize, charge: &Charge) -> Result<MVector> {
    m_vector_with_alpha(e, l, charge, None)
}

/// As [`m_vector`], but with `α` forced when given (it must still make
/// every entry nonnegative).
pub fn m_vector_with_alpha(e: u32, l: usize, charge: &Charge, alpha: Option<i64>) -> Result<MVector> {
    if charge.level() != l {
        return Err(Error::InvalidInput(format!("charge {charge} does not have {l} entries")));
    }
    let e = e as i64;
    let base: Vec<Rational64> = (0..l)
        .map(|j| Rational64::from(charge.entries()[j]) - Rational64::new(j as i64 * e, l as i64))
        .collect();
    let lowest = base.iter().min().copied().unwrap_or_else(Rational64::zero);
    // least α with lowest + αe ≥ 0
    let needed = if lowest >= Rational64::zero() {
        0
    } else {
        (-lowest / Rational64::from(e)).ceil().to_integer()
    };
    let alpha = match alpha {
        None => needed,
        Some(a) if a >= needed => a,
        Some(a) => {
            return Err(Error::InvalidInput(format!("alpha = {a} leaves a negative m-vector entry")));
        }
    };
    let entries = base.into_iter().map(|b| b + Rational64::from(alpha * e)).collect();
    Ok(MVector { entries, alpha })
}

/// Per-component shifted beta-numbers at a common height.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslatedSymbol {
    pub height: usize,
    pub rows: Vec<Vec<i64>>,
}

/// `B′^(i)_j = λ^(i)_j − j + h + m^(i)` for `j = 1..h`.
pub fn translated_symbol(lambda: &MultiComposition, m: &MVector, h: usize) -> Result<TranslatedSymbol> {
    let m = m.integral()?;
    if lambda.level() != m.len() {
        return Err(Error::InvalidInput("level mismatch between composition and m-vector".into()));
    }
    if h < lambda.height() {
        return Err(Error::InvalidInput(format!(
            "height {h} is below the composition height {}",
            lambda.height()
        )));
    }
    let rows = (0..lambda.level())
        .map(|c| {
            (1..=h)
                .map(|j| lambda.part(c + 1, j) as i64 - j as i64 + h as i64 + m[c])
                .collect()
        })
        .collect();
    Ok(TranslatedSymbol { height: h, rows })
}

/// `Σ_{k=1}^{a} min(k, m)`.
fn capped_triangle(a: i64, m: i64) -> i64 {
    if a <= 0 {
        0
    } else if a <= m {
        a * (a + 1) / 2
    } else {
        m * (m + 1) / 2 + (a - m) * m
    }
}

/// The two explicit sums of the a-value formula for a symbol.
pub fn symbol_sum(b: &TranslatedSymbol, m: &[i64]) -> i64 {
    let l = b.rows.len();
    let mut total = 0i64;
    for i in 0..l {
        // within a component: unordered pairs of positions, so repeated
        // entries of a composition symbol still pair with each other
        let row = &b.rows[i];
        for p in 0..row.len() {
            for q in p + 1..row.len() {
                total += row[p].min(row[q]);
            }
        }
        for j in i + 1..l {
            for &x in row {
                for &y in &b.rows[j] {
                    total += x.min(y);
                }
            }
        }
    }
    for row in &b.rows {
        for &x in row {
            for &mj in m {
                total -= capped_triangle(x, mj);
            }
        }
    }
    total
}

pub fn a_rel_composition(lambda: &MultiComposition, m: &MVector, h: usize) -> Result<i64> {
    let sym = translated_symbol(lambda, m, h)?;
    Ok(symbol_sum(&sym, &m.integral()?))
}

/// Relative a-value of `λ` at symbol height `h`.
pub fn a_rel(lambda: &MultiPartition, e: u32, charge: &Charge, h: usize) -> Result<i64> {
    let m = m_vector(e, lambda.level(), charge)?;
    a_rel_composition(&lambda.to_composition(), &m, h)
}

/// `μ ≺ ν`: the a-value sum of `μ` is strictly smaller at a common height.
pub fn precedes(mu: &MultiComposition, nu: &MultiComposition, e: u32, charge: &Charge) -> Result<bool> {
    if mu.rank() != nu.rank() {
        return Err(Error::InvalidInput(format!(
            "ranks differ: {} has rank {}, {} has rank {}",
            mu,
            mu.rank(),
            nu,
            nu.rank()
        )));
    }
    let m = m_vector(e, mu.level(), charge)?;
    let h = mu.height().max(nu.height());
    Ok(a_rel_composition(mu, &m, h)? < a_rel_composition(nu, &m, h)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct AValueRow {
    pub label: MultiPartition,
    pub value: i64,
}

/// a-values of all `rows`, shifted so that `reference` gets 0.
///
/// The common height is the largest row height (at least 1).
#[derive(Clone, Debug, Serialize)]
pub struct CalibratedTable {
    pub calibration: MultiPartition,
    pub height: usize,
    pub alpha: i64,
    pub rows: Vec<AValueRow>,
}

pub fn calibrated_table(
    rows: &[MultiPartition],
    reference: &MultiPartition,
    e: u32,
    charge: &Charge,
    alpha: Option<i64>,
) -> Result<CalibratedTable> {
    let m = m_vector_with_alpha(e, charge.level(), charge, alpha)?;
    let h = rows
        .iter()
        .chain(std::iter::once(reference))
        .map(|r| r.height())
        .max()
        .unwrap_or(0)
        .max(1);
    let base = a_rel_composition(&reference.to_composition(), &m, h)?;
    let rows = rows
        .iter()
        .map(|r| {
            Ok(AValueRow {
                label: r.clone(),
                value: a_rel_composition(&r.to_composition(), &m, h)? - base,
            })
        })
        .collect::<Result<_>>()?;
    Ok(CalibratedTable { calibration: reference.clone(), height: h, alpha: m.alpha, rows })
}

/// Row of least a-value, ties broken on the text form.
pub fn minimal_row(rows: &[MultiPartition], e: u32, charge: &Charge) -> Result<MultiPartition> {
    let h = rows.iter().map(|r| r.height()).max().unwrap_or(0).max(1);
    let mut best: Option<(i64, String, &MultiPartition)> = None;
    for r in rows {
        let key = (a_rel(r, e, charge, h)?, r.to_string());
        if best.as_ref().is_none_or(|b| (key.0, &key.1) < (b.0, &b.1)) {
            best = Some((key.0, key.1, r));
        }
    }
    best.map(|b| b.2.clone())
        .ok_or_else(|| Error::InvalidInput("no rows to calibrate".into()))
}
