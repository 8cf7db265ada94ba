//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the straightening engine: the pair rules are
//! coded again from their closed forms with a separate polynomial type.

#![allow(dead_code)]

use std::collections::BTreeMap;

use fockbasis::LaurentPoly;

/// Laurent polynomial as exponent -> coefficient.
pub type Poly = BTreeMap<i64, i64>;

fn clean(mut p: Poly) -> Poly {
    p.retain(|_, c| *c != 0);
    p
}

pub fn mono(c: i64, e: i64) -> Poly {
    clean(Poly::from([(e, c)]))
}

pub fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert(0) += c;
    }
    clean(out)
}

pub fn pmul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    clean(out)
}

/// Exact division by `q + q^{-1}`, by long division from the top degree.
pub fn div_q_plus_qinv(num: &Poly) -> Poly {
    let floor = num.keys().next().copied().unwrap_or(0);
    let mut rem = num.clone();
    let mut quot = Poly::new();
    while let Some((&top, &c)) = rem.iter().next_back() {
        assert!(top > floor, "q + 1/q does not divide the numerator");
        // c q^top = c q^{top-1} (q + q^{-1}) - c q^{top-2}
        quot.insert(top - 1, c);
        rem = padd(&rem, &Poly::from([(top, -c), (top - 2, -c)]));
    }
    clean(quot)
}

/// `(a, b)` with `k = a + e(l − b) − e l m`, `a ∈ [1, e]`, `b ∈ [1, l]`.
pub fn split(k: i64, e: i64, l: i64) -> (i64, i64) {
    let t = (k - 1).rem_euclid(e * l);
    (t % e + 1, l - t / e)
}

/// `u_{k1} ∧ u_{k2}` with `k1 ≤ k2` as ordered pairs.
pub fn pair_rule(k1: i64, k2: i64, e: i64, l: i64) -> Vec<((i64, i64), Poly)> {
    assert!(k1 <= k2);
    if k1 == k2 {
        return Vec::new();
    }
    let (a1, b1) = split(k1, e, l);
    let (a2, b2) = split(k2, e, l);
    let el = e * l;
    let alpha = (a2 - a1).rem_euclid(el);
    let beta = (e * (b1 - b2)).rem_euclid(el);
    let mut out: Vec<((i64, i64), Poly)> = Vec::new();
    // Σ_{m ≥ m0} coef(m) u_{k2−shift−elm} ∧ u_{k1+shift+elm} while ordered
    let mut sum = |shift: i64, m0: i64, coef: &dyn Fn(i64) -> Poly| {
        let mut m = m0;
        loop {
            let (x, y) = (k2 - shift - el * m, k1 + shift + el * m);
            if x <= y {
                break;
            }
            out.push(((x, y), coef(m)));
            m += 1;
        }
    };
    let q_minus_qinv = Poly::from([(1, 1), (-1, -1)]);
    let odd = |m: i64| div_q_plus_qinv(&Poly::from([(2 * m + 1, 1), (-2 * m - 1, 1)]));
    let even = |m: i64| div_q_plus_qinv(&clean(Poly::from([(2 * m, 1), (-2 * m, -1)])));
    let mut lead = Vec::new();
    match (alpha == 0, beta == 0) {
        (true, true) => lead.push(((k2, k1), mono(-1, 0))),
        (false, true) => {
            lead.push(((k2, k1), mono(-1, -1)));
            let c = Poly::from([(-2, 1), (0, -1)]);
            sum(alpha, 0, &|m| pmul(&c, &mono(1, -2 * m)));
            sum(0, 1, &|m| pmul(&c, &mono(-1, -2 * m + 1)));
        }
        (true, false) => {
            lead.push(((k2, k1), mono(1, 1)));
            let c = Poly::from([(2, 1), (0, -1)]);
            sum(beta, 0, &|m| pmul(&c, &mono(1, 2 * m)));
            sum(0, 1, &|m| pmul(&c, &mono(1, 2 * m - 1)));
        }
        (false, false) => {
            lead.push(((k2, k1), mono(1, 0)));
            sum(beta, 0, &|m| pmul(&q_minus_qinv, &odd(m)));
            sum(alpha, 0, &|m| pmul(&q_minus_qinv, &odd(m)));
            sum(alpha + beta, 0, &|m| pmul(&q_minus_qinv, &even(m + 1)));
            sum(0, 1, &|m| pmul(&q_minus_qinv, &even(m)));
        }
    }
    lead.extend(out);
    lead
}

/// Fixpoint rewriting: repeatedly replace the first non-ordered adjacent
/// pair of some non-ordered term until every term is strictly decreasing.
pub fn naive_straighten(w: &[i64], e: i64, l: i64) -> BTreeMap<Vec<i64>, Poly> {
    let mut done: BTreeMap<Vec<i64>, Poly> = BTreeMap::new();
    let mut todo: BTreeMap<Vec<i64>, Poly> = BTreeMap::from([(w.to_vec(), mono(1, 0))]);
    let mut steps = 0u64;
    while let Some((word, c)) = todo.pop_first() {
        steps += 1;
        assert!(steps < 5_000_000, "naive straightening did not terminate");
        if c.is_empty() {
            continue;
        }
        let Some(i) = (0..word.len().saturating_sub(1)).find(|&i| word[i] <= word[i + 1]) else {
            let slot = done.entry(word).or_default();
            *slot = padd(slot, &c);
            continue;
        };
        for ((x, y), f) in pair_rule(word[i], word[i + 1], e, l) {
            let mut next = word.clone();
            next[i] = x;
            next[i + 1] = y;
            let slot = todo.entry(next).or_default();
            *slot = padd(slot, &pmul(&c, &f));
        }
    }
    done.retain(|_, c| !c.is_empty());
    done
}

pub fn to_poly(p: &LaurentPoly) -> Poly {
    p.as_i64().expect("coefficient fits in i64")
}

/// Semisimplicity criterion evaluated numerically at `v = exp(2πi/e)`,
/// `x_j = v^{s_j}`.
pub fn semisimple_numeric(e: u32, charge: &[i64], n: usize) -> bool {
    let root = |k: i64| {
        let t = 2.0 * std::f64::consts::PI * (k as f64) / (e as f64);
        (t.cos(), t.sin())
    };
    let near = |a: (f64, f64), b: (f64, f64)| ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt() < 1e-9;
    for i in 1..=n as i64 {
        // 1 + v + … + v^{i−1}
        let s = (0..i).map(root).fold((0.0, 0.0), |acc, z| (acc.0 + z.0, acc.1 + z.1));
        if near(s, (0.0, 0.0)) {
            return false;
        }
    }
    let n = n as i64;
    for (i, si) in charge.iter().enumerate() {
        for (j, sj) in charge.iter().enumerate() {
            if i == j {
                continue;
            }
            for d in (1 - n)..n {
                if near(root(d + si), root(*sj)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Parses a multipartition in text form, panicking on bad input.
pub fn label(s: &str) -> fockbasis::MultiPartition {
    s.parse().unwrap_or_else(|e| panic!("bad label {s}: {e}"))
}
