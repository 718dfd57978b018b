//! Explicit automorphisms of three families of cyclic covers, packaged with
//! the orders and relations they are expected to satisfy.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::action::{action_residual, sample_curve, verify_map_order, words_agree, Factor, RationalMap, ACTION_TOL};
use crate::curve::{BranchPoint, CyclicCover};
use crate::numtheory::gcd;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct NamedMap {
    pub name: String,
    pub map: RationalMap,
    /// Expected order, if it is one of the generators.
    pub order: Option<u64>,
}

/// `lhs == rhs` as maps; words are indices into [`ExplicitAction::maps`],
/// applied left to right.
#[derive(Debug, Clone)]
pub struct Relation {
    pub text: String,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ExplicitAction {
    pub name: String,
    pub cover: CyclicCover,
    pub maps: Vec<NamedMap>,
    pub relations: Vec<Relation>,
}

fn named(name: &str, map: RationalMap, order: Option<u64>) -> NamedMap {
    NamedMap { name: name.into(), map, order }
}

fn relation(text: &str, lhs: Vec<usize>, rhs: Vec<usize>) -> Relation {
    Relation { text: text.into(), lhs, rhs }
}

fn c(z: Complex64) -> Factor {
    Factor::Const(z)
}

fn unit_root(num: f64, den: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * num / den)
}

/// `y^{2h} = x^2 - 1` with `u: (x, y) ↦ (x / y^h, ζ / y)`, `ζ^h = -1`.
pub fn accola_maclachlan(h: u64) -> Result<ExplicitAction> {
    if h < 2 {
        return Err(Error::domain(format!("half-degree h = {h} must be at least 2")));
    }
    let n = 2 * h;
    let cover = CyclicCover::new(n, vec![(BranchPoint::integer(1), 1), (BranchPoint::integer(-1), 1)])?;
    let zeta = unit_root(1.0, n as f64);
    let u = RationalMap::new(
        vec![Factor::PowX(1), Factor::PowY(-(h as i32))],
        vec![c(zeta), Factor::PowY(-1)],
    );
    let w = RationalMap::new(vec![c(Complex64::new(-1.0, 0.0)), Factor::PowX(1)], vec![Factor::PowY(1)]);
    Ok(ExplicitAction {
        name: format!("accola-maclachlan 2n={n}"),
        cover,
        maps: vec![
            named("u", u, Some(4)),
            named("v", RationalMap::deck(n, 1), Some(n)),
            named("w", w, Some(2)),
        ],
        relations: vec![
            relation("u^2 = (-x,y)", vec![0, 0], vec![2]),
            relation("(u*v)^2 = 1", vec![0, 1, 0, 1], vec![]),
            relation("u^2*v = v*u^2", vec![0, 0, 1], vec![1, 0, 0]),
        ],
    })
}

/// `y^n = (x-1)(x-j)^k(x-j^2)^r`, `j = e^{2πi/3}`, `r = k^2 mod n`, with the
/// period-three map `S(x, y) = (jx, j^α y^k (x-j)^{-q} (x-j^2)^{-β})` where
/// `k^2 = qn + r`, `α = (1+k+r)/n`, `β = (rk-1)/n`. For `k^2 < n` this is the
/// usual `α = (1+k+k^2)/n`, `β = (k^3-1)/n`.
pub fn period_three(n: u64, k: u64) -> Result<ExplicitAction> {
    if n < 4 || k <= 1 || k >= n || !(1 + k + k * k).is_multiple_of(n) {
        return Err(Error::domain(format!("need 1 < k < n with 1 + k + k^2 = 0 mod n, got n = {n}, k = {k}")));
    }
    let (q, r) = (k * k / n, k * k % n);
    let alpha = (1 + k + r) / n;
    let beta = (r * k - 1) / n;
    if !(1 + k + r).is_multiple_of(n) || !(r * k - 1).is_multiple_of(n) {
        return Err(Error::Invariant(format!("period-three exponents for n = {n}, k = {k}")));
    }
    let j = unit_root(1.0, 3.0);
    let j2 = unit_root(2.0, 3.0);
    let cover = CyclicCover::new(
        n,
        vec![
            (BranchPoint::integer(1), 1),
            (BranchPoint::root_of_unity(3, 1), k as i64),
            (BranchPoint::root_of_unity(3, 2), r as i64),
        ],
    )?;
    let s = RationalMap::new(
        vec![c(j), Factor::PowX(1)],
        vec![
            c(j.powu(alpha as u32 % 3)),
            Factor::PowY(k as i32),
            Factor::Linear { c: j, k: -(q as i32) },
            Factor::Linear { c: j2, k: -(beta as i32) },
        ],
    );
    let mut rhs = vec![0];
    rhs.extend(std::iter::repeat_n(1, k as usize));
    Ok(ExplicitAction {
        name: format!("periodthree n={n} k={k}"),
        cover,
        maps: vec![named("S", s, Some(3)), named("T", RationalMap::deck(n, 1), Some(n))],
        // S∘T = T^k∘S, i.e. apply T then S, versus S then k times T
        relations: vec![relation(&format!("S*T = T^{k}*S"), vec![1, 0], rhs)],
    })
}

/// Twist parameters `(β, l)` for `y^n = (x+1)^b (x-1)`: `b^2 = βn + 1`,
/// `nl ≡ b+1` and `l + bl ≡ β (mod 2)`, smallest `l >= 0`.
pub fn twist_parameters(n: u64, b: u64) -> Result<(u64, u64)> {
    if n.is_multiple_of(8) {
        return Err(Error::domain(format!("n = {n} is divisible by 8")));
    }
    if n < 3 || b <= 1 || b >= n || (b * b) % n != 1 {
        return Err(Error::domain(format!("need 1 < b < n with b^2 = 1 mod n, got n = {n}, b = {b}")));
    }
    let beta = (b * b - 1) / n;
    (0..2u64)
        .find(|&l| (n * l) % 2 == (b + 1) % 2 && (l + b * l) % 2 == beta % 2)
        .map(|l| (beta, l))
        .ok_or_else(|| Error::domain(format!("no twist parameter l for n = {n}, b = {b}")))
}

/// `y^n = (x+1)^b (x-1)` with the involution `u(x, y) = (-x, (-1)^l y^b (x+1)^{-β})`.
pub fn twisted_z2(n: u64, b: u64) -> Result<ExplicitAction> {
    let (beta, l) = twist_parameters(n, b)?;
    if gcd(n, b) != 1 {
        return Err(Error::Invariant("b^2 = 1 mod n forces gcd(n, b) = 1".into()));
    }
    let cover = CyclicCover::new(n, vec![(BranchPoint::integer(-1), b as i64), (BranchPoint::integer(1), 1)])?;
    let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
    let u = RationalMap::new(
        vec![c(Complex64::new(-1.0, 0.0)), Factor::PowX(1)],
        vec![
            c(Complex64::new(sign, 0.0)),
            Factor::PowY(b as i32),
            Factor::Linear { c: Complex64::new(-1.0, 0.0), k: -(beta as i32) },
        ],
    );
    Ok(ExplicitAction {
        name: format!("twistedz2 n={n} b={b}"),
        cover,
        maps: vec![named("u", u, Some(2)), named("v", RationalMap::deck(n, 1), Some(n))],
        relations: vec![relation(&format!("u*v*u = v^{b}"), vec![0, 1, 0], vec![1; b as usize])],
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ActionReport {
    pub action: String,
    pub seed: u64,
    pub samples: usize,
    pub max_residual: f64,
    pub orders: Vec<CheckLine>,
    pub relations: Vec<CheckLine>,
    pub pass: bool,
}

pub fn verify_action(action: &ExplicitAction, samples: usize, seed: u64) -> Result<ActionReport> {
    let pts = sample_curve(&action.cover, samples, seed)?;
    let mut max_residual: f64 = 0.0;
    let mut orders = Vec::new();
    for m in &action.maps {
        max_residual = max_residual.max(action_residual(&action.cover, &m.map, &pts)?);
        if let Some(k) = m.order {
            orders.push(CheckLine {
                name: format!("{}^{} = 1", m.name, k),
                pass: verify_map_order(&action.cover, &m.map, k, &pts),
            });
        }
    }
    let relations: Vec<CheckLine> = action
        .relations
        .iter()
        .map(|r| {
            let word = |w: &[usize]| w.iter().map(|&i| &action.maps[i].map).collect::<Vec<_>>();
            CheckLine { name: r.text.clone(), pass: words_agree(&word(&r.lhs), &word(&r.rhs), &pts) }
        })
        .collect();
    let pass = max_residual <= ACTION_TOL && orders.iter().chain(&relations).all(|c| c.pass);
    Ok(ActionReport { action: action.name.clone(), seed, samples, max_residual, orders, relations, pass })
}

/// The explicit actions checked by default.
pub fn standard_actions() -> Result<Vec<ExplicitAction>> {
    Ok(vec![
        accola_maclachlan(3)?,
        accola_maclachlan(4)?,
        period_three(7, 2)?,
        period_three(13, 3)?,
        twisted_z2(15, 4)?,
        twisted_z2(21, 8)?,
    ])
}
